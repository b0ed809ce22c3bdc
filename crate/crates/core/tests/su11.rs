mod common;

use std::f64::consts::PI;

use osdual::numerics::{certify_psd, gauss_legendre, HermitianMatrix};
use osdual::os_core::{build_quotient, induced_generator};
use osdual::su11::*;
use osdual::{CMat, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RHO: f64 = 0.8;

/// Random polynomial times (ρ² − x²)^8 on a grid over [−ρ, ρ].
fn random_probe<R: Rng>(rng: &mut R, nodes: usize) -> GridFunction {
    let coeffs: Vec<C64> = (0..6).map(|_| common::cgauss(rng)).collect();
    let rule = gauss_legendre(nodes, -RHO, RHO).unwrap();
    GridFunction::from_fn(rule, |x| {
        let p = coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * x + c);
        p * (RHO * RHO - x * x).powi(8)
    })
    .unwrap()
}

/// n!(1−s)_n/π² by a direct product in f64.
fn delta_norm_oracle(s: f64, n: usize) -> f64 {
    let mut p = 1.0 / (PI * PI);
    for k in 0..n {
        p *= (k as f64 + 1.0) * (1.0 - s + k as f64);
    }
    p
}

#[test]
fn delta_gram_diagonal_closed_form() {
    for &s in &[0.1, 0.5, 0.9] {
        let g = delta_gram(s, 30).unwrap();
        for m in 0..=30 {
            for n in 0..=30 {
                let v = g.get(m, n);
                if m == n {
                    let o = delta_norm_oracle(s, n);
                    assert!((v.re - o).abs() <= 1e-12 * o, "s={s} n={n}: {} vs {o}", v.re);
                    assert_eq!(v.im, 0.0);
                } else {
                    assert_eq!(v.norm(), 0.0);
                }
            }
        }
    }
}

#[test]
fn dilation_generator_spectrum() {
    for &s in &[0.1, 0.5, 0.9] {
        let sys = delta_system(s, 10, &[0.1, 0.25]).unwrap();
        let q = build_quotient(&sys).unwrap();
        assert_eq!(q.dim(), 11);
        let spec = induced_generator(&sys, &q, &[0.1, 0.25]).unwrap();
        for (n, ev) in spec.eigenvalues.iter().enumerate() {
            let expect = 2.0 * n as f64 + 1.0 - s;
            assert!((ev - expect).abs() <= 1e-8, "s={s} n={n}: {ev} vs {expect}");
        }
        assert!(spec.disagreement <= 1e-8);
    }
}

#[test]
fn intertwiner_is_isometric() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for &s in &[0.2, 0.5, 0.8] {
        for _ in 0..20 {
            let f = random_probe(&mut rng, 200);
            let g = random_probe(&mut rng, 200);
            let lhs = rkhs_inner(&intertwiner_u(s, &f, 200).unwrap(), &intertwiner_u(s, &g, 200).unwrap()).unwrap();
            let rhs = j_form(s, &f, &g).unwrap();
            assert!((lhs - rhs).norm() <= 1e-8, "s={s}: {lhs} vs {rhs}");
        }
    }
}

fn intertwining_residual(s: f64, t: f64, f: &GridFunction, degree: usize) -> f64 {
    let h = SL2::hyperbolic(t);
    let left = intertwiner_u(s, &pi_s_action(s, &h, f).unwrap(), degree).unwrap();
    let right = rho_s_action(s, &h, &intertwiner_u(s, f, degree).unwrap()).unwrap();
    let diff = HolomorphicVector::new(
        s,
        left.coefficients().iter().zip(right.coefficients()).map(|(a, b)| a - b).collect(),
    )
    .unwrap();
    (diff.norm_sq() / left.norm_sq()).sqrt()
}

#[test]
fn intertwiner_commutes_with_hyperbolic_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for &s in &[0.2, 0.5, 0.8] {
        for &t in &[0.1, 0.5] {
            let f = random_probe(&mut rng, 200);
            let r = intertwining_residual(s, t, &f, 400);
            assert!(r <= 1e-6, "s={s} t={t}: residual {r:e}");
        }
    }
}

#[test]
fn action_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let s = 0.35;
    let f = random_probe(&mut rng, 120);
    let g1 = SL2::hyperbolic(0.3);
    let g2 = SL2::dilation(0.2);
    let two_step = pi_s_action(s, &g1, &pi_s_action(s, &g2, &f).unwrap()).unwrap();
    let one_step = pi_s_action(s, &g1.mul(&g2), &f).unwrap();
    let (a, b) = (two_step.rule().interval(), one_step.rule().interval());
    assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    let scale = one_step.sup_norm();
    for (x, y) in two_step.values().iter().zip(one_step.values()) {
        assert!((x - y).norm() <= 1e-9 * scale);
    }
}

#[test]
fn j_form_is_invariant_under_hyperbolic_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let s = 0.6;
    let f = random_probe(&mut rng, 200);
    let g = random_probe(&mut rng, 200);
    let h = SL2::hyperbolic(0.25);
    let pf = pi_s_action(s, &h, &f).unwrap();
    let pg = pi_s_action(s, &h, &g).unwrap();
    let before = j_form(s, &f, &g).unwrap();
    let after = j_form(s, &pf, &pg).unwrap();
    assert!((before - after).norm() <= 1e-9 * before.norm().max(1e-3));
}

#[test]
fn dilation_shrinks_and_is_contractive() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let s = 0.5;
    let f = random_probe(&mut rng, 100);
    let uf = pi_s_action(s, &SL2::dilation(0.3), &f).unwrap();
    let (lo, hi) = uf.rule().interval();
    assert!((hi - RHO * (-0.6f64).exp()).abs() < 1e-14 && (lo + hi).abs() < 1e-14);
    assert!(j_form(s, &uf, &uf).unwrap().re <= j_form(s, &f, &f).unwrap().re);
}

#[test]
fn reproducing_kernel_inner_products() {
    for &s in &[0.25, 0.75] {
        let w1 = C64::new(0.3, 0.0);
        let w2 = C64::new(-0.2, 0.4);
        let u1 = kernel_vector(s, w1, 400).unwrap();
        let u2 = kernel_vector(s, w2, 400).unwrap();
        let expect = (C64::new(1.0, 0.0) - w1 * w2.conj()).powf(s - 1.0);
        assert!((rkhs_inner(&u1, &u2).unwrap() - expect).norm() < 1e-12);
        let self_expect = (1.0 - w2.norm_sqr()).powf(s - 1.0);
        assert!((u2.norm_sq() - self_expect).abs() < 1e-12);
    }
}

#[test]
fn odd_even_pairing_vanishes() {
    let s = 0.5;
    let rule = gauss_legendre(120, -RHO, RHO).unwrap();
    let odd = GridFunction::from_real_fn(rule.clone(), |x| x * (RHO * RHO - x * x).powi(8)).unwrap();
    let even = GridFunction::from_real_fn(rule, |x| (1.0 + x * x) * (RHO * RHO - x * x).powi(8)).unwrap();
    assert!(j_form(s, &odd, &even).unwrap().norm() < 1e-16);
}

/// Σ_k |binom(s−1,k)| a_k b_k/π² for moment sequences given in closed form.
fn moment_series<F: Fn(usize) -> f64>(s: f64, terms: usize, mk: F) -> f64 {
    let mut b = 1.0f64;
    let mut acc = 0.0;
    for k in 0..terms {
        if k > 0 {
            b *= (k as f64 - s) / k as f64;
        }
        acc += b * mk(k);
    }
    acc / (PI * PI)
}

#[test]
fn odd_pairs_match_series() {
    let s = 0.3;
    let rule = gauss_legendre(200, -RHO, RHO).unwrap();
    let f = GridFunction::from_real_fn(rule.clone(), |x| x).unwrap();
    let g = GridFunction::from_real_fn(rule, |x| x * x * x).unwrap();
    // ∫_{−ρ}^{ρ} x^{k+1} = 2ρ^{k+2}/(k+2) for odd k, and similarly for x^{k+3}.
    let series = moment_series(s, 4000, |k| {
        if k % 2 == 1 {
            let a = 2.0 * RHO.powi(k as i32 + 2) / (k as f64 + 2.0);
            let b = 2.0 * RHO.powi(k as i32 + 4) / (k as f64 + 4.0);
            a * b
        } else {
            0.0
        }
    });
    let quad = j_form(s, &f, &g).unwrap();
    assert!((quad.re - series).abs() <= 1e-12 * series, "{} vs {series}", quad.re);
    assert!(quad.im.abs() < 1e-16);
}

#[test]
fn constant_function_on_full_interval() {
    let s = 0.5;
    // Series with an integral estimate of the tail: |binom(s−1,k)| ≈ c k^{−s}.
    let terms = 2_000_000;
    let mut b = 1.0f64;
    let mut acc = 0.0;
    for k in 0..terms {
        if k > 0 {
            b *= (k as f64 - s) / k as f64;
        }
        if k % 2 == 0 {
            acc += b * 4.0 / ((k as f64 + 1.0) * (k as f64 + 1.0));
        }
    }
    let c = b * (terms as f64).powf(s);
    let tail = 0.5 * 4.0 * c * (terms as f64).powf(-s - 1.0) / (s + 1.0);
    let oracle = (acc + tail) / (PI * PI);
    let rule = gauss_legendre(200, -1.0, 1.0).unwrap();
    let one = GridFunction::from_real_fn(rule, |_| 1.0).unwrap();
    let quad = j_form(s, &one, &one).unwrap().re;
    assert!((quad - oracle).abs() <= 1e-6 * oracle);
}

#[test]
fn j_involution_preserves_line_norm() {
    let s = 0.45;
    let (a, b) = (0.5, 2.0);
    let p = -(s + 1.0) / 2.0;
    // f(t) = t^p (1 + t) on [a, b]; Jf(t) = t^{−s−1} (1/t)^p (1 + 1/t) on [1/b, 1/a].
    let f = move |t: f64| C64::new(t.powf(p) * (1.0 + t), 0.0);
    let jf = j_apply(s, f);
    let lhs = line_form(s, &f, &f, a, b, 60).unwrap();
    let rhs = line_form(s, &jf, &jf, 1.0 / b, 1.0 / a, 60).unwrap();
    assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "{lhs} vs {rhs}");
}

#[test]
fn measure_extension_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let s = 0.5;
    let rule = gauss_legendre(200, -1.0, 1.0).unwrap();
    let one = GridFunction::from_real_fn(rule.clone(), |_| 1.0).unwrap();
    let c = j_form(s, &one, &one).unwrap().re.sqrt();
    for _ in 0..20 {
        let f = random_probe(&mut rng, 200).resample(rule.clone()).unwrap();
        let phi = random_probe(&mut rng, 200).resample(rule.clone()).unwrap();
        let nf = j_form(s, &f, &f).unwrap().re.sqrt();
        let nphi = j_form(s, &phi, &phi).unwrap().re.sqrt();
        assert!(j_form(s, &f, &phi).unwrap().norm() <= nf * nphi * (1.0 + 1e-12));
        assert!(nphi <= c * phi.sup_norm() * (1.0 + 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weighted_kernel_is_psd(s in 0.05f64..0.95, n in 4usize..60, lo in -0.99f64..-0.1, hi in 0.1f64..0.99) {
        let rule = gauss_legendre(n, lo, hi).unwrap();
        let f = GridFunction::from_real_fn(rule, |_| 0.0).unwrap();
        let k = j_kernel_matrix(s, &f).unwrap();
        let km: CMat = k.map(|v| C64::new(v, 0.0));
        let scale = k.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let rep = certify_psd(&HermitianMatrix::new(km).unwrap(), 1e-12 * scale * n as f64).unwrap();
        prop_assert!(rep.is_psd, "min eigenvalue {}", rep.min_eigenvalue);
    }

    #[test]
    fn j_is_an_involution(s in 0.05f64..0.95, pts in proptest::collection::vec(0.05f64..20.0, 1..12)) {
        let f = LineFunction {
            points: pts.iter().enumerate().map(|(i, p)| if i % 2 == 0 { *p } else { -*p }).collect(),
            values: pts.iter().map(|p| C64::new(p.sin(), p.cos())).collect(),
        };
        let back = j_involution(s, &j_involution(s, &f).unwrap()).unwrap();
        let mut orig: Vec<(f64, C64)> = f.points.iter().copied().zip(f.values.iter().copied()).collect();
        orig.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for ((x, v), (y, w)) in orig.iter().zip(back.points.iter().zip(&back.values)) {
            prop_assert!((x - y).abs() <= 1e-14 * x.abs());
            prop_assert!((v - w).norm() <= 1e-13);
        }
    }

    #[test]
    fn semigroup_law_for_dilations(s in 0.05f64..0.95, t1 in 0.0f64..0.5, t2 in 0.0f64..0.5) {
        let mut rng = ChaCha8Rng::seed_from_u64((t1 * 1e6) as u64);
        let f = random_probe(&mut rng, 80);
        let two = pi_s_action(s, &SL2::dilation(t1), &pi_s_action(s, &SL2::dilation(t2), &f).unwrap()).unwrap();
        let one = pi_s_action(s, &SL2::dilation(t1 + t2), &f).unwrap();
        let scale = one.sup_norm().max(1e-300);
        for (a, b) in two.values().iter().zip(one.values()) {
            prop_assert!((a - b).norm() <= 1e-10 * scale);
        }
    }
}
