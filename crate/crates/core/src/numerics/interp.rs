use num_complex::Complex;

use super::QuadratureRule;
use crate::Real;

/// Barycentric Lagrange interpolation through the nodes of a Gauss–Legendre rule.
#[derive(Debug, Clone)]
pub struct Barycentric<T> {
    nodes: Vec<T>,
    lambda: Vec<T>,
    lo: T,
    hi: T,
}

impl<T: Real> Barycentric<T> {
    pub fn from_rule(rule: &QuadratureRule<T>) -> Self {
        let (lo, hi) = rule.interval();
        let half = (hi - lo) / T::lit(2.0);
        let mid = (hi + lo) / T::lit(2.0);
        let lambda = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .enumerate()
            .map(|(j, (&x, &w))| {
                let t = (x - mid) / half;
                let v = ((T::one() - t * t) * w / half).sqrt();
                if j % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        Self { nodes: rule.nodes().to_vec(), lambda, lo, hi }
    }

    pub fn interval(&self) -> (T, T) {
        (self.lo, self.hi)
    }

    /// Interpolant of `values` at `x`; zero outside the rule's interval.
    pub fn eval(&self, values: &[Complex<T>], x: T) -> Complex<T> {
        debug_assert_eq!(values.len(), self.nodes.len());
        if x < self.lo || x > self.hi {
            return Complex::new(T::zero(), T::zero());
        }
        let mut num = Complex::new(T::zero(), T::zero());
        let mut den = T::zero();
        for ((&xj, &lj), &fj) in self.nodes.iter().zip(&self.lambda).zip(values) {
            let d = x - xj;
            if d == T::zero() {
                return fj;
            }
            let c = lj / d;
            num += fj * c;
            den += c;
        }
        num / den
    }

    pub fn eval_real(&self, values: &[T], x: T) -> T {
        let cv: Vec<Complex<T>> = values.iter().map(|&v| Complex::new(v, T::zero())).collect();
        self.eval(&cv, x).re
    }
}
