use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use osdual::bargmann::LineGrid;
use osdual::counterexamples::*;
use osdual::numerics::gauss_legendre;
use osdual::{CMat, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::read_samples;
use crate::report::Report;
use crate::{CliError, Global};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// π_±(eˢ, b) on a log-scale grid: homomorphism and unitarity.
    AxbAction {
        #[arg(long, value_enum, default_value = "plus")]
        sign: Sign,
        #[arg(long, default_value_t = 0.4, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, default_value_t = 0.7, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, default_value_t = -0.3, allow_hyphen_values = true)]
        s2: f64,
        #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
        b2: f64,
    },
    /// Negative J-form vector in A₊H₊ ⊕ A₋H₋ and the diagonal contrast.
    Falsifier {
        /// Frequencies per Hardy space.
        #[arg(long, default_value_t = 8)]
        k: usize,
        /// Circle grid points.
        #[arg(long, default_value_t = 64)]
        m: usize,
        /// A₋ = e^{iλ cos x}.
        #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
        lambda: f64,
        /// Write the witness as CSV (x, h_plus_re, h_plus_im, h_minus_re, h_minus_im).
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Two-mode pair {1}, {e^{−iεx}}: cross term against its closed form.
    TwoMode {
        #[arg(long, default_value_t = 64)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
    },
    /// Lower bound ‖LX + XL‖ ≥ c‖L‖ for Fourier-diagonal L.
    Anticommutator {
        #[arg(long, default_value_t = 16)]
        m: usize,
    },
    /// Identities of the rank-one projection field Q(ξ).
    Projection {
        /// CSV (xi, re μ, im μ); default μ(ξ) = e^{ξ} + iξ on [−4, 4].
        #[arg(long)]
        mu: Option<PathBuf>,
    },
    /// Splitting of an invariant subspace of ℂ^M ⊕ ℂ^M into D₊ ⊕ D₋.
    Heisenberg {
        #[arg(long, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        hbar: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        b: i64,
        /// Number of random seed vectors generating K₀.
        #[arg(long, default_value_t = 1)]
        seeds: usize,
    },
    /// Reduced and direct sub-Laplacian quadratic forms on a Gaussian probe.
    Sublaplacian {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = 1.5)]
        y0: f64,
        #[arg(long, default_value_t = 0.3)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, default_value_t = 24)]
        grid: usize,
    },
}

fn bump(x: f64) -> C64 {
    C64::new((-(x + 2.0).powi(2)).exp(), 0.3 * (-(x + 1.5).powi(2) * 2.0).exp())
}

pub fn run(action: &Action, g: &Global) -> Result<Report, CliError> {
    match action {
        Action::AxbAction { sign, s, b, s2, b2 } => {
            let mut r = Report::new("counter axb-action");
            r.param("sign", format!("{sign:?}").to_lowercase()).param("s", s).param("b", b).param("s2", s2).param("b2", b2);
            let sg = match sign {
                Sign::Plus => AxbSign::Plus,
                Sign::Minus => AxbSign::Minus,
            };
            let f = LineGrid::from_fn(gauss_legendre(400, -8.0, 4.0)?, bump)?;
            let p = AxbRepPoint::new(sg, *s, *b);
            let q = AxbRepPoint::new(sg, *s2, *b2);
            let two = axb_action(&p, &axb_action(&q, &f)?)?;
            let one = axb_action(&p.compose(&q), &f)?;
            r.residual("homomorphism", two.sub(&one)?.sup_norm() / f.sup_norm(), g.tol(1e-8));
            r.close("unitarity", one.norm() / f.norm(), 1.0, 1e-8);
            Ok(r)
        }
        Action::Falsifier { k, m, lambda, witness } => {
            let mut r = Report::new("counter falsifier");
            r.param("k", k).param("m", m).param("lambda", lambda);
            let pair = HardyPair::standard(*k, *m, *lambda)?;
            let w = match axb_positivity_falsifier(&pair) {
                Ok(w) => w,
                Err(osdual::Error::Unresolved { min_eigenvalue }) => {
                    r.flag("resolved", min_eigenvalue, "< 0", false);
                    return Ok(r);
                }
                Err(e) => return Err(e.into()),
            };
            r.datum("value", w.value).datum("norm_plus", w.norm_plus).datum("norm_minus", w.norm_minus);
            let tol = g.tol(0.1);
            r.flag("negative_ratio", w.ratio, format!("<= -{tol}"), w.ratio <= -tol);
            let c = diagonal_contrast(&pair)?;
            r.nonnegative("diagonal_contrast", c.min_eigenvalue, c.tolerance * c.max_eigenvalue.max(1.0));
            if let Some(path) = witness {
                let mut out = csv::Writer::from_path(path).map_err(|e| CliError::Internal(e.to_string()))?;
                out.write_record(["x", "h_plus_re", "h_plus_im", "h_minus_re", "h_minus_im"]).map_err(|e| CliError::Internal(e.to_string()))?;
                for ((x, p), q) in pair.grid().points().iter().zip(&w.h_plus).zip(&w.h_minus) {
                    out.write_record([x, &p.re, &p.im, &q.re, &q.im].map(|v| v.to_string()))
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                }
                out.flush().map_err(|e| CliError::Internal(e.to_string()))?;
            }
            Ok(r)
        }
        Action::TwoMode { m, eps } => {
            let mut r = Report::new("counter two-mode");
            r.param("m", m).param("eps", eps);
            let (pair, c, closed) = two_mode_form(*m, *eps)?;
            r.datum("cross_term", [c.re, c.im]);
            r.residual("closed_form", (c - closed).norm(), g.tol(1e-12));
            match axb_positivity_falsifier(&pair) {
                Ok(w) => r.close("min_ratio", w.ratio, -2.0 * closed.norm(), 1e-10),
                Err(osdual::Error::Unresolved { min_eigenvalue }) => r.close("min_ratio", min_eigenvalue, -closed.norm(), 1e-10),
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
        Action::Anticommutator { m } => {
            let mut r = Report::new("counter anticommutator");
            r.param("m", m);
            let c = anticommutator_bound(*m)?;
            r.flag("positive_bound", c, "> 0", c > 0.0);
            Ok(r)
        }
        Action::Projection { mu } => {
            let mut r = Report::new("counter projection");
            let (xi, vals) = match mu {
                Some(p) => {
                    r.param("mu", p.display().to_string());
                    read_samples(p)?
                }
                None => {
                    let xi: Vec<f64> = (0..81).map(|i| -4.0 + 0.1 * i as f64).collect();
                    let v = xi.iter().map(|&x| C64::new(x.exp(), x)).collect();
                    (xi, v)
                }
            };
            let rep = projection_field_check(&ProjectionField::new(xi, vals)?, g.tol(1e-12));
            r.datum("min_trace_qjq", rep.min_trace_qjq);
            r.residual("max_residual", rep.max_residual, g.tol(1e-12));
            match &rep.first_failure {
                None => r.flag("first_failure", "none", "none", true),
                Some((x, name)) => r.flag("first_failure", format!("{name} at xi={x}"), "none", false),
            }
            Ok(r)
        }
        Action::Heisenberg { m, hbar, beta, b, seeds } => {
            let mut r = Report::new("counter heisenberg");
            r.param("m", m).param("hbar", hbar).param("beta", beta).param("b", b).param("seeds", seeds).param("seed", g.seed);
            let model = HeisenbergModel::new(*m, *hbar)?;
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let v = CMat::from_fn(model.dim(), *seeds, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let k0 = invariant_closure(&model, &v)?;
            let brute = brute_force_span(&model, &v)?;
            r.datum("k0_dim", k0.ncols());
            r.residual("closure_vs_brute_force", largest_principal_angle(&k0, &brute), 1e-8);
            let d = heisenberg_uncorrelated(&model, &k0, *beta, *b)?;
            r.datum("plus_dim", d.plus_basis.ncols()).datum("minus_dim", d.minus_basis.ncols());
            r.residual("split_angle", d.angle, g.tol(1e-6));
            r.residual("phase_average", d.phase, 1e-12);
            Ok(r)
        }
        Action::Sublaplacian { x0, y0, sigma, k, grid } => {
            let mut r = Report::new("counter sublaplacian");
            r.param("x0", x0).param("y0", y0).param("sigma", sigma).param("k", k).param("grid", grid);
            let p = HalfSpaceProbe::gaussian(*x0, *y0, *sigma, *k, *grid)?;
            let direct = sublaplacian_direct_form(&p)?;
            let reduced = sublaplacian_rp_form(&p)?;
            r.datum("direct", direct).datum("reduced", reduced);
            r.nonnegative("reduced_nonnegative", reduced, 0.0);
            r.nonnegative("direct_nonnegative", direct, 0.0);
            r.residual("relative_agreement", (direct - reduced).abs() / reduced.abs().max(1e-300), g.tol(1e-4));
            Ok(r)
        }
    }
}
