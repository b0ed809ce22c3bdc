use std::f64::consts::PI;

use nalgebra::DMatrix;

use super::grid::GridFunction;
use crate::numerics::{gauss_legendre, ln_factorial, log_gamma_ratio, HermitianMatrix};
use crate::{CMatrix, Error, Result, C64};

/// Weighted kernel w_i w_j (1 − x_i x_j)^{s−1}/π² on the nodes of a rule.
pub fn j_kernel_matrix(s: f64, f: &GridFunction) -> Result<DMatrix<f64>> {
    super::check_s(s)?;
    let x = f.nodes();
    let w = f.rule().weights();
    let n = x.len();
    let mut k = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = w[i] * w[j] * (1.0 - x[i] * x[j]).powf(s - 1.0) / (PI * PI);
            k[(i, j)] = v;
            k[(j, i)] = v;
        }
    }
    Ok(k)
}

fn same_grid(f: &GridFunction, g: &GridFunction) -> bool {
    f.rule().interval() == g.rule().interval() && f.nodes().len() == g.nodes().len()
}

/// ⟨f, g⟩_J = π^{−2} ∫∫ f̄(x) g(y) (1 − xy)^{s−1} dx dy by tensor quadrature.
pub fn j_form(s: f64, f: &GridFunction, g: &GridFunction) -> Result<C64> {
    if f.nodes().iter().any(|x| x.abs() >= 1.0) {
        return Err(Error::InvalidInput("nodes must avoid ±1".into()));
    }
    if !same_grid(f, g) {
        return Err(Error::InvalidInput("j_form needs both functions on one grid".into()));
    }
    let k = j_kernel_matrix(s, f)?;
    let fv = f.values();
    let gv = g.values();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..fv.len() {
        let mut row = C64::new(0.0, 0.0);
        for j in 0..gv.len() {
            row += gv[j] * k[(i, j)];
        }
        acc += fv[i].conj() * row;
    }
    Ok(acc)
}

/// ‖δ^{(n)}‖²_J = n!(1−s)_n/π².
pub fn delta_norm_sq(s: f64, n: usize) -> Result<f64> {
    super::check_s(s)?;
    let p = log_gamma_ratio(1.0 - s, n)?;
    Ok((ln_factorial::<f64>(n) + p.log_abs).exp() / (PI * PI))
}

/// Gram matrix of δ, δ′, …, δ^{(n_max)} read off the series
/// (1 − xy)^{s−1} = Σ binom(s−1,k)(−xy)^k: entry (n, n) is (n!)² |binom(s−1,n)|/π².
pub fn delta_gram(s: f64, n_max: usize) -> Result<HermitianMatrix<f64>> {
    super::check_s(s)?;
    let b = super::binom_sm1(s, n_max);
    let mut m = CMatrix::<f64>::zeros(n_max + 1, n_max + 1);
    for (n, bn) in b.iter().enumerate() {
        let v = (2.0 * ln_factorial::<f64>(n) + bn.abs().ln()).exp() / (PI * PI);
        m[(n, n)] = C64::new(v, 0.0);
    }
    HermitianMatrix::new(m)
}

/// ∫∫_{[lo,hi]²} f̄(x) g(y) |x − y|^{s−1} dx dy.
///
/// With d = x − y the singular factor is removed by d = L w^{1/s}; both
/// remaining integrals use n-point Gauss–Legendre rules.
pub fn line_form<F, G>(s: f64, f: F, g: G, lo: f64, hi: f64, n: usize) -> Result<C64>
where
    F: Fn(f64) -> C64,
    G: Fn(f64) -> C64,
{
    super::check_s(s)?;
    if !(hi > lo) {
        return Err(Error::InvalidInput("empty interval".into()));
    }
    let len = hi - lo;
    let outer = gauss_legendre::<f64>(n, 0.0, 1.0)?;
    let mut acc = C64::new(0.0, 0.0);
    for (&w, &ww) in outer.nodes().iter().zip(outer.weights()) {
        let d = len * w.powf(1.0 / s);
        if d >= len {
            continue;
        }
        let inner = gauss_legendre(n, lo + d, hi)?;
        let mut part = C64::new(0.0, 0.0);
        for (&x, &wx) in inner.nodes().iter().zip(inner.weights()) {
            let y = x - d;
            part += (f(x).conj() * g(y) + f(y).conj() * g(x)) * wx;
        }
        acc += part * ww;
    }
    Ok(acc * (len.powf(s) / s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_gram_matches_closed_form() {
        for &s in &[0.1, 0.5, 0.9] {
            let g = delta_gram(s, 30).unwrap();
            for n in 0..=30 {
                let c = delta_norm_sq(s, n).unwrap();
                assert!((g.get(n, n).re - c).abs() <= 1e-12 * c);
            }
            assert_eq!(g.get(1, 2).norm(), 0.0);
        }
    }

    #[test]
    fn line_form_constant_on_unit_interval() {
        // ∫∫_{[0,1]²} |x−y|^{s−1} = 2/(s(s+1)).
        let s = 0.5;
        let one = |_x: f64| C64::new(1.0, 0.0);
        let v = line_form(s, one, one, 0.0, 1.0, 40).unwrap();
        assert!((v.re - 2.0 / (s * (s + 1.0))).abs() < 1e-12);
    }
}
