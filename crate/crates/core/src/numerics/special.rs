use crate::{Error, Real, Result};

/// Pochhammer symbol (a)_k in sign/log-magnitude form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPochhammer<T> {
    pub log_abs: T,
    /// +1 or −1.
    pub sign: i8,
}

impl<T: Real> LogPochhammer<T> {
    pub fn value(&self) -> T {
        let m = self.log_abs.exp();
        if self.sign < 0 {
            -m
        } else {
            m
        }
    }
}

const EXACT_PRODUCT_LIMIT: usize = 64;

/// (a)_k = a(a+1)⋯(a+k−1) as log|(a)_k| with a sign.
///
/// Uses a direct product for k ≤ 64 and a sum of logarithms beyond.
pub fn log_gamma_ratio<T: Real>(a: T, k: usize) -> Result<LogPochhammer<T>> {
    let mut negatives = 0usize;
    for i in 0..k {
        let f = a + T::from_usize_lossy(i);
        if f == T::zero() {
            return Err(Error::ZeroFactor { index: i });
        }
        if f < T::zero() {
            negatives += 1;
        }
    }
    let sign = if negatives % 2 == 0 { 1 } else { -1 };
    if k <= EXACT_PRODUCT_LIMIT {
        let mut p = T::one();
        for i in 0..k {
            p *= (a + T::from_usize_lossy(i)).abs();
        }
        if p.is_finite() && p > T::zero() {
            return Ok(LogPochhammer { log_abs: p.ln(), sign });
        }
    }
    let log_abs = (0..k).fold(T::zero(), |acc, i| acc + (a + T::from_usize_lossy(i)).abs().ln());
    Ok(LogPochhammer { log_abs, sign })
}

/// ln(n!).
pub fn ln_factorial<T: Real>(n: usize) -> T {
    (2..=n).fold(T::zero(), |acc, i| acc + T::from_usize_lossy(i).ln())
}

/// Coefficients binom(α, k) for k = 0..=n, the Taylor coefficients of (1+z)^α.
pub fn binomial_series<T: Real>(alpha: T, n: usize) -> Vec<T> {
    let mut c = Vec::with_capacity(n + 1);
    let mut cur = T::one();
    c.push(cur);
    for k in 0..n {
        let kf = T::from_usize_lossy(k);
        cur = cur * (alpha - kf) / (kf + T::one());
        c.push(cur);
    }
    c
}
