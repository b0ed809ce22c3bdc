//! Acceptance suite: one PASS/FAIL line per criterion, with timings.

mod common;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use osdual::bargmann::{bargmann_transform, heat_convolve, HermiteExpansion, LineGrid};
use osdual::counterexamples::{
    axb_positivity_falsifier, diagonal_contrast, heisenberg_uncorrelated, invariant_closure, sublaplacian_direct_form,
    sublaplacian_rp_form, HalfSpaceProbe, HardyPair, HeisenbergModel,
};
use osdual::numerics::{frobenius, gauss_legendre};
use osdual::os_core::random::{basic_lemma_case, rng_from_seed};
use osdual::os_core::{build_quotient, induce_operator, induced_generator, JRelation};
use osdual::path_measure::{covariance_gram, reflection_gram};
use osdual::structure_data::cayley_table;
use osdual::su11::*;
use osdual::{CMat, Rational, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// n!(1−s)_n/π².
fn delta_norm_oracle(s: f64, n: usize) -> f64 {
    (0..n).fold(1.0 / (PI * PI), |p, k| p * (k as f64 + 1.0) * (1.0 - s + k as f64))
}

fn criterion_1() -> Outcome {
    let mut worst = 0.0f64;
    for s in [0.25, 0.5, 0.75] {
        let sys = delta_system(s, 10, &[0.1, 0.25]).unwrap();
        let q = build_quotient(&sys).unwrap();
        if q.dim() != 11 {
            return ok(false, format!("s = {s}: quotient dimension {}", q.dim()));
        }
        let g = q.gram_of(&CMat::identity(11, 11));
        for m in 0..=10 {
            for n in 0..=10 {
                let err = if m == n {
                    let o = delta_norm_oracle(s, n);
                    (g[(n, n)] - o).norm() / o
                } else {
                    g[(m, n)].norm() / (delta_norm_oracle(s, m) * delta_norm_oracle(s, n)).sqrt()
                };
                worst = worst.max(err);
            }
        }
    }
    ok(worst <= 1e-10, format!("max relative error {worst:.2e}"))
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    let mut disagreement = 0.0f64;
    let mut ground_ok = true;
    for s in [0.25, 0.5, 0.75] {
        let sys = delta_system(s, 10, &[0.1, 0.25]).unwrap();
        let q = build_quotient(&sys).unwrap();
        let spec = induced_generator(&sys, &q, &[0.1, 0.25]).unwrap();
        for n in 0..=6 {
            worst = worst.max((spec.eigenvalues[n] - (2.0 * n as f64 + 1.0 - s)).abs());
        }
        disagreement = disagreement.max(spec.disagreement);
        let v = spec.lifted_eigenvectors.column(0);
        let lead = v[0].norm();
        ground_ok &= v.iter().skip(1).all(|z| z.norm() <= 1e-8 * lead);
    }
    ok(
        worst <= 1e-6 && disagreement <= 1e-6 && ground_ok,
        format!("eigenvalue error {worst:.2e}, disagreement {disagreement:.2e}, ground state on δ₀: {ground_ok}"),
    )
}

const RHO: f64 = 0.8;

fn random_probe<R: Rng>(rng: &mut R, nodes: usize) -> GridFunction {
    let coeffs: Vec<C64> = (0..6).map(|_| common::cgauss(rng)).collect();
    let rule = gauss_legendre(nodes, -RHO, RHO).unwrap();
    GridFunction::from_fn(rule, |x| {
        let p = coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * x + c);
        p * (RHO * RHO - x * x).powi(8)
    })
    .unwrap()
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = 0.5;
    let mut iso = 0.0f64;
    for _ in 0..50 {
        let f = random_probe(&mut rng, 200);
        let g = random_probe(&mut rng, 200);
        let lhs = rkhs_inner(&intertwiner_u(s, &f, 200).unwrap(), &intertwiner_u(s, &g, 200).unwrap()).unwrap();
        iso = iso.max((lhs - j_form(s, &f, &g).unwrap()).norm());
    }
    let mut resid = 0.0f64;
    for t in [0.1, 0.5] {
        let f = random_probe(&mut rng, 200);
        let h = SL2::hyperbolic(t);
        let left = intertwiner_u(s, &pi_s_action(s, &h, &f).unwrap(), 400).unwrap();
        let right = rho_s_action(s, &h, &intertwiner_u(s, &f, 400).unwrap()).unwrap();
        let diff = HolomorphicVector::new(
            s,
            left.coefficients().iter().zip(right.coefficients()).map(|(a, b)| a - b).collect(),
        )
        .unwrap();
        resid = resid.max((diff.norm_sq() / left.norm_sq()).sqrt());
    }
    ok(iso <= 1e-8 && resid <= 1e-6, format!("isometry defect {iso:.2e}, intertwining residual {resid:.2e}"))
}

fn criterion_4() -> Outcome {
    let mut rng = rng_from_seed(4);
    let mut excess = f64::NEG_INFINITY;
    let mut semigroup = 0.0f64;
    for _ in 0..100 {
        let case = basic_lemma_case::<f64, _>(&mut rng, 2).unwrap();
        let sys = &case.system;
        let q = build_quotient(sys).unwrap();
        let g1 = induce_operator(sys, &q, &case.gammas[0], JRelation::JTwisted).unwrap();
        let g2 = induce_operator(sys, &q, &case.gammas[1], JRelation::JTwisted).unwrap();
        excess = excess.max(g1.j_norm - g1.bound).max(g2.j_norm - g2.bound);
        let g12 = induce_operator(sys, &q, &(&case.gammas[0] * &case.gammas[1]), JRelation::JTwisted).unwrap();
        let composed = &g1.matrix * &g2.matrix;
        semigroup = semigroup.max(frobenius(&(&g12.matrix - &composed)) / frobenius(&composed).max(1.0));
    }
    ok(
        excess <= 1e-8 && semigroup <= 1e-10,
        format!("max(j_norm − bound) {excess:.2e}, semigroup residual {semigroup:.2e}"),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut all = true;
    for _ in 0..50 {
        let n = rng.gen_range(1..=40);
        let mut times: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..5.0)).collect();
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        times.dedup();
        let (_, cov) = covariance_gram(&times).unwrap();
        let refl = reflection_gram(&times).unwrap();
        all &= cov.is_psd && refl.psd.is_psd && refl.numerical_rank == 1;
    }
    ok(all, "50 time sets: covariance PSD, reflection PSD with rank 1".into())
}

fn criterion_6() -> Outcome {
    let rule = LineGrid::default_rule().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = HermiteExpansion::new((0..=12).map(|_| common::cgauss(&mut rng)).collect()).to_grid(&rule).unwrap();
    let two = heat_convolve(0.3, &heat_convolve(0.7, &f).unwrap()).unwrap();
    let one = heat_convolve(1.0, &f).unwrap();
    let heat = two.sub(&one).unwrap().norm() / f.norm();
    let mut constant: Option<C64> = None;
    let mut defect = 0.0f64;
    for n in 0..=12 {
        let b = bargmann_transform(&HermiteExpansion::basis(n).to_grid(&rule).unwrap(), 16).unwrap();
        for (m, c) in b.coefficients().iter().enumerate() {
            if m == n {
                let k = *constant.get_or_insert(*c);
                defect = defect.max((c - k).norm());
            } else {
                defect = defect.max(c.norm());
            }
        }
    }
    let k = constant.unwrap();
    let unit = (k.norm() - 1.0).abs();
    ok(
        heat <= 1e-8 && defect <= 1e-6 && unit <= 1e-6,
        format!("heat residual {heat:.2e}, Hermite-to-monomial defect {defect:.2e}, global constant {k:.6}"),
    )
}

fn criterion_7() -> Outcome {
    let tabulated = [3, 2, 2, 2, 3, 2, 2, 2, 3];
    let reference_r = [3, 0, 1, 1, 0, 2, 1, 0, 3];
    let rows = cayley_table(1).unwrap();
    let mut all = rows.len() == 9;
    for (i, e) in rows.iter().enumerate() {
        all &= e.constants.l_pos_plus_rho == Rational::from_integer(tabulated[i]);
        all &= e.r_value == reference_r[i];
        all &= Rational::from_integer(e.r_value) <= e.constants.l_pos_plus_rho;
        all &= e.matches_table && e.bound_holds;
    }
    for n in 2..=20 {
        all &= cayley_table(n).unwrap().iter().all(|e| e.matches_table && e.bound_holds);
    }
    ok(all, format!("{} rows, exact L_pos + ρ and R ≤ L_pos + ρ", rows.len()))
}

fn criterion_8() -> Outcome {
    let pair = HardyPair::standard(8, 64, 2.0).unwrap();
    let w = axb_positivity_falsifier(&pair).unwrap();
    let contrast = diagonal_contrast(&pair).unwrap();
    ok(
        w.value <= -0.1 * w.norm_plus * w.norm_minus && contrast.is_psd,
        format!("witness ratio {:.4} at 8+8 frequencies, diagonal contrast PSD: {}", w.ratio, contrast.is_psd),
    )
}

fn criterion_9() -> Outcome {
    let probes = [
        (0.0, 1.5, 0.3, 0.0),
        (0.5, 1.0, 0.25, 1.0),
        (-1.0, 2.0, 0.4, -0.5),
        (0.0, 0.8, 0.2, 2.0),
        (2.0, 1.2, 0.35, 0.3),
    ];
    let mut rel = 0.0f64;
    let mut nonneg = true;
    for (x0, y0, s, k) in probes {
        let p = HalfSpaceProbe::gaussian(x0, y0, s, k, 24).unwrap();
        let d = sublaplacian_direct_form(&p).unwrap();
        let r = sublaplacian_rp_form(&p).unwrap();
        nonneg &= d >= 0.0 && r >= 0.0;
        rel = rel.max((d - r).abs() / r);
    }
    let model = HeisenbergModel::new(8, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let k0 = invariant_closure(&model, &common::random_matrix(&mut rng, 16, 1)).unwrap();
    let split = heisenberg_uncorrelated(&model, &k0, 1, 1).unwrap();
    ok(
        rel <= 1e-4 && nonneg && split.angle <= 1e-6,
        format!("form mismatch {rel:.2e}, nonnegative: {nonneg}, split angle {:.2e}", split.angle),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("delta norms", criterion_1, Duration::from_secs(1)),
        ("induced spectrum", criterion_2, Duration::from_secs(1)),
        ("intertwiner unitarity", criterion_3, Duration::from_secs(10)),
        ("basic lemma bound", criterion_4, Duration::from_secs(5)),
        ("gaussian os positivity", criterion_5, Duration::from_secs(1)),
        ("bargmann", criterion_6, Duration::from_secs(30)),
        ("tube table", criterion_7, Duration::from_millis(100)),
        ("ax+b no-go", criterion_8, Duration::from_secs(1)),
        ("heisenberg", criterion_9, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed < *budget;
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {}: {} [{}] {} ({:.3} s, budget {:.1} s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            name,
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        );
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
