#![allow(dead_code)]

use osdual::{CMat, C64};
use rand::Rng;

pub fn cgauss<R: Rng>(rng: &mut R) -> C64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let u3: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u4: f64 = rng.gen();
    let r2 = (-2.0 * u3.ln()).sqrt();
    C64::new(r * (std::f64::consts::TAU * u2).cos(), r2 * (std::f64::consts::TAU * u4).cos())
        * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| cgauss(rng))
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> CMat {
    let a = random_matrix(rng, n, n);
    (&a + a.adjoint()) * C64::new(0.5, 0.0)
}

/// Hand-written pivoted Cholesky PSD test: succeeds iff every pivot stays
/// above −tol·scale and the trailing block is negligible once pivots vanish.
pub fn pivoted_cholesky_is_psd(m: &CMat, tol: f64) -> bool {
    let n = m.nrows();
    let mut a = m.clone();
    let scale = (0..n).map(|i| a[(i, i)].re.abs()).fold(1.0f64, f64::max);
    let mut remaining: Vec<usize> = (0..n).collect();
    while !remaining.is_empty() {
        let (pos, &p) = remaining
            .iter()
            .enumerate()
            .max_by(|x, y| a[(*x.1, *x.1)].re.partial_cmp(&a[(*y.1, *y.1)].re).unwrap())
            .unwrap();
        let d = a[(p, p)].re;
        if d < -tol * scale {
            return false;
        }
        if d <= tol * scale {
            return remaining
                .iter()
                .all(|&i| remaining.iter().all(|&j| a[(i, j)].norm() <= tol.sqrt() * scale));
        }
        remaining.remove(pos);
        for &i in &remaining {
            for &j in &remaining {
                let upd = a[(i, p)] * a[(p, j)] / d;
                a[(i, j)] -= upd;
            }
        }
    }
    true
}
