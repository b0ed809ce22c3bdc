use std::path::PathBuf;

use clap::Subcommand;
use osdual::bargmann::*;
use osdual::numerics::gauss_legendre;
use osdual::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{barycentric_interpolant, read_coefficients, read_samples};
use crate::report::Report;
use crate::{CliError, Global};

#[derive(clap::Args, Debug)]
pub struct Input {
    /// Grid function as CSV (node, re, im), resampled onto the line grid.
    #[arg(long, conflicts_with = "hermite")]
    f: Option<PathBuf>,
    /// Hermite coefficients as CSV (re, im), one per line.
    #[arg(long)]
    hermite: Option<PathBuf>,
    /// Degree of the random Hermite probe used when no input is given.
    #[arg(long, default_value_t = 8)]
    probe_degree: usize,
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Heat semigroup H_t: H_a H_{t−a} f = H_t f.
    Heat {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 0.3)]
        split: f64,
    },
    /// Restriction R: adjointness ⟨RF, h⟩ = ⟨F, R*h⟩.
    Restriction {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 60)]
        degree: usize,
    },
    /// R* of the Gaussian e^{−x²/2} against 2^{−1/2}e^{z²/4}.
    Rstar {
        #[arg(long, default_value_t = 30)]
        degree: usize,
    },
    /// RR* = H₁.
    Rrstar {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 400)]
        degree: usize,
    },
    /// √(RR*) = H_{1/2} and the polar factorization R* = B√(RR*).
    SqrtRrstar {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 30)]
        degree: usize,
    },
    /// B on Hermite functions: Bφₙ = zⁿ/√n!, and the composed route.
    Transform {
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
}

fn rule(g: &Global) -> Result<osdual::QuadratureRule, CliError> {
    Ok(match g.nodes {
        Some(n) => gauss_legendre(n, -DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH)?,
        None => LineGrid::default_rule()?,
    })
}

fn load(input: &Input, g: &Global, r: &mut Report) -> Result<LineGrid, CliError> {
    let rl = rule(g)?;
    r.param("grid_nodes", rl.len());
    if let Some(p) = &input.f {
        r.param("f", p.display().to_string());
        let (xs, vs) = read_samples(p)?;
        return Ok(LineGrid::from_fn(rl, barycentric_interpolant(xs, vs))?);
    }
    let coeffs = match &input.hermite {
        Some(p) => {
            r.param("hermite", p.display().to_string());
            read_coefficients(p)?
        }
        None => {
            r.param("seed", g.seed).param("probe_degree", input.probe_degree);
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            (0..=input.probe_degree).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
        }
    };
    Ok(HermiteExpansion::new(coeffs).to_grid(&rl)?)
}

pub fn run(action: &Action, g: &Global) -> Result<Report, CliError> {
    match action {
        Action::Heat { input, t, split } => {
            let mut r = Report::new("bargmann heat");
            let f = load(input, g, &mut r)?;
            r.param("t", t).param("split", split);
            if !(*split > 0.0 && split < t) {
                return Err(CliError::Usage("need 0 < split < t".into()));
            }
            let two = heat_convolve(*split, &heat_convolve(t - split, &f)?)?;
            let one = heat_convolve(*t, &f)?;
            r.residual("semigroup", two.sub(&one)?.norm() / f.norm(), g.tol(1e-8));
            r.nonnegative("contraction", f.norm() - one.norm(), 1e-12 * f.norm());
            Ok(r)
        }
        Action::Restriction { input, degree } => {
            let mut r = Report::new("bargmann restriction");
            let h = load(input, g, &mut r)?;
            r.param("degree", degree);
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed.wrapping_add(1));
            let big = FockVector::new(
                (0..=*degree)
                    .map(|k| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) / (1.5f64).powi(k as i32))
                    .collect(),
            );
            let lhs = restriction(&big, h.rule())?.inner(&h)?;
            let rhs = big.inner(&r_star(&h, *degree)?);
            r.residual("adjointness", (lhs - rhs).norm() / (lhs.norm().max(1e-300)), g.tol(1e-8));
            Ok(r)
        }
        Action::Rstar { degree } => {
            let mut r = Report::new("bargmann rstar");
            r.param("degree", degree);
            let h = LineGrid::from_fn(rule(g)?, |x| C64::new((-x * x / 2.0).exp(), 0.0))?;
            let f = r_star(&h, *degree)?;
            let mut worst = 0.0f64;
            for z in [C64::new(0.0, 0.0), C64::new(0.7, -0.4), C64::new(-1.2, 0.9)] {
                let want = (z * z / 4.0).exp() / 2f64.sqrt();
                worst = worst.max((f.eval(z) - want).norm() / want.norm());
            }
            r.residual("gaussian_closed_form", worst, g.tol(1e-10));
            Ok(r)
        }
        Action::Rrstar { input, degree } => {
            let mut r = Report::new("bargmann rrstar");
            let h = load(input, g, &mut r)?;
            r.param("degree", degree);
            let via_heat = rr_star(&h)?;
            let composed = restriction(&r_star(&h, *degree)?, h.rule())?;
            r.residual("heat_vs_composition", composed.sub(&via_heat)?.norm() / via_heat.norm(), g.tol(1e-8));
            Ok(r)
        }
        Action::SqrtRrstar { input, degree } => {
            let mut r = Report::new("bargmann sqrt-rrstar");
            let h = load(input, g, &mut r)?;
            r.param("degree", degree);
            let root = sqrt_rr_star(&h)?;
            let square = sqrt_rr_star(&root)?;
            r.residual("square_is_rrstar", square.sub(&rr_star(&h)?)?.norm() / h.norm(), g.tol(1e-8));
            let lhs = r_star(&h, *degree)?;
            let rhs = bargmann_transform(&root, *degree)?;
            r.residual("polar_factorization", lhs.sub(&rhs).norm() / lhs.norm(), g.tol(1e-8));
            Ok(r)
        }
        Action::Transform { n } => {
            let mut r = Report::new("bargmann transform");
            r.param("n", n);
            let rl = rule(g)?;
            let tol = g.tol(1e-6);
            let mut constant: Option<C64> = None;
            let mut mix = LineGrid::from_fn(rl.clone(), |_| C64::new(0.0, 0.0))?;
            for k in 0..=*n {
                let phi = HermiteExpansion::basis(k).to_grid(&rl)?;
                let b = bargmann_transform(&phi, n + 4)?;
                let c = b.coefficients()[k];
                let k0 = *constant.get_or_insert(c);
                let leak = b.coefficients().iter().enumerate().filter(|(m, _)| *m != k).map(|(_, z)| z.norm()).fold(0.0, f64::max);
                r.residual(format!("monomial n={k}"), (c - k0).norm().max(leak), tol);
                let w = C64::new(1.0, 0.0) / (k as f64 + 1.0);
                mix = LineGrid::new(rl.clone(), mix.values().iter().zip(phi.values()).map(|(a, p)| a + p * w).collect())?;
            }
            let comp = bargmann_composed(&mix, *n)?;
            let direct = bargmann_transform(&mix, *n)?;
            r.residual("composed_route", comp.sub(&direct).norm() / direct.norm(), tol);
            let k0 = constant.expect("n ≥ 0");
            r.datum("global_constant", [k0.re, k0.im]);
            r.close("unit_modulus", k0.norm(), 1.0, tol);
            Ok(r)
        }
    }
}
