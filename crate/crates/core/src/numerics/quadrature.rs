use crate::{Error, Real, Result};

/// Gauss–Legendre rule on a finite interval.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
    lo: T,
    hi: T,
}

impl<T: Real> QuadratureRule<T> {
    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn interval(&self) -> (T, T) {
        (self.lo, self.hi)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Highest polynomial degree integrated exactly.
    pub fn exactness_degree(&self) -> usize {
        2 * self.nodes.len() - 1
    }

    pub fn integrate<F: FnMut(T) -> T>(&self, mut f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(x))
    }
}

/// Legendre polynomial P_n and its derivative at x.
fn legendre<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, T::zero());
    }
    for k in 2..=n {
        let kf = T::from_usize_lossy(k);
        let p2 = ((kf + kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_usize_lossy(n);
    let dp = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}

/// n-point Gauss–Legendre rule on [lo, hi], exact through degree 2n − 1.
pub fn gauss_legendre<T: Real>(n: usize, lo: T, hi: T) -> Result<QuadratureRule<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("quadrature needs at least one node".into()));
    }
    if !(lo < hi) {
        return Err(Error::InvalidInput("quadrature interval must satisfy lo < hi".into()));
    }
    let two = T::lit(2.0);
    let half = (hi - lo) / two;
    let mid = (hi + lo) / two;
    let mut x = vec![T::zero(); n];
    let mut w = vec![T::zero(); n];
    let nf = T::lit(n as f64);
    let tol = T::default_epsilon() * T::lit(4.0);
    for i in 0..(n + 1) / 2 {
        let guess = (T::pi() * (T::lit(i as f64 + 0.75)) / (nf + T::lit(0.5))).cos();
        let mut z = guess;
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() <= tol {
                break;
            }
        }
        let (_, d) = legendre(n, z);
        if d != T::zero() {
            dp = d;
        }
        let wi = two / ((T::one() - z * z) * dp * dp);
        // z descends from near 1; store ascending with exact mirror symmetry
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = T::zero();
    }
    let nodes = x.iter().map(|&t| mid + half * t).collect();
    let weights = w.iter().map(|&v| v * half).collect();
    Ok(QuadratureRule { nodes, weights, lo, hi })
}
