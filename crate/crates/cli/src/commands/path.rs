use std::path::PathBuf;

use clap::Subcommand;
use osdual::path_measure::{covariance_gram, ou_covariance, reflection_gram, schwinger_functional, TestFunction};
use rand::{Rng, SeedableRng};

use super::times_arg;
use crate::input::parse_list;
use crate::report::Report;
use crate::{CliError, Global};

#[derive(Subcommand, Debug)]
pub enum Action {
    /// C(t₁, t₂) = ½e^{−|t₁−t₂|}.
    Covariance {
        #[arg(long, allow_hyphen_values = true)]
        t1: f64,
        #[arg(long, allow_hyphen_values = true)]
        t2: f64,
    },
    /// Covariance Gram on a time list and its PSD certificate.
    Gram {
        #[arg(long, allow_hyphen_values = true)]
        times: Option<String>,
        #[arg(long)]
        times_file: Option<PathBuf>,
    },
    /// Reflection Gram C(−tᵢ, tⱼ) on positive times: PSD and rank one.
    Reflection {
        #[arg(long)]
        times: Option<String>,
        #[arg(long)]
        times_file: Option<PathBuf>,
    },
    /// Characteristic functional S(f) of f = Σ cᵢδ_{tᵢ}.
    Schwinger {
        #[arg(long, allow_hyphen_values = true)]
        times: String,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Both positivity conditions on random positive time sets.
    Suite {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 40)]
        max_size: usize,
    },
}

pub fn run(action: &Action, g: &Global) -> Result<Report, CliError> {
    let tol = g.tol(osdual::numerics::DEFAULT_PSD_TOL);
    match action {
        Action::Covariance { t1, t2 } => {
            let mut r = Report::new("path covariance");
            r.param("t1", t1).param("t2", t2);
            let c = ou_covariance(*t1, *t2);
            r.datum("covariance", c);
            r.close("symmetry", ou_covariance(*t2, *t1), c, 0.0);
            r.close("bounded_by_variance", c.min(0.5), c, 0.0);
            Ok(r)
        }
        Action::Gram { times, times_file } => {
            let mut r = Report::new("path gram");
            let ts = times_arg(times, times_file)?;
            r.param("times", &ts);
            let (_, p) = covariance_gram(&ts)?;
            r.datum("max_eigenvalue", p.max_eigenvalue);
            r.nonnegative("psd", p.min_eigenvalue, tol * p.max_eigenvalue.max(1.0));
            Ok(r)
        }
        Action::Reflection { times, times_file } => {
            let mut r = Report::new("path reflection");
            let ts = times_arg(times, times_file)?;
            r.param("times", &ts);
            let rg = reflection_gram(&ts)?;
            r.datum("max_eigenvalue", rg.psd.max_eigenvalue);
            r.nonnegative("psd", rg.psd.min_eigenvalue, tol * rg.psd.max_eigenvalue.max(1.0));
            r.flag("rank", rg.numerical_rank, 1, rg.numerical_rank == 1);
            Ok(r)
        }
        Action::Schwinger { times, coeffs } => {
            let mut r = Report::new("path schwinger");
            let (ts, cs) = (parse_list(times)?, parse_list(coeffs)?);
            r.param("times", &ts).param("coeffs", &cs);
            let f = TestFunction::real(ts, cs)?;
            let s = schwinger_functional(&f)?;
            r.datum("value", s);
            r.close("even", schwinger_functional(&f.neg())?, s, 0.0);
            r.flag("in_unit_interval", s, "(0, 1]", s > 0.0 && s <= 1.0);
            Ok(r)
        }
        Action::Suite { count, max_size } => {
            let mut r = Report::new("path suite");
            r.param("seed", g.seed).param("count", count).param("max_size", max_size);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(g.seed);
            let (mut cov_min, mut refl_min, mut max_rank) = (f64::INFINITY, f64::INFINITY, 0usize);
            for _ in 0..*count {
                let n = rng.gen_range(1..=(*max_size).max(1));
                let mut ts: Vec<f64> = (0..n).map(|_| rng.gen_range(0.01..5.0)).collect();
                ts.sort_by(|a, b| a.total_cmp(b));
                ts.dedup();
                let (_, p) = covariance_gram(&ts)?;
                let rg = reflection_gram(&ts)?;
                cov_min = cov_min.min(p.min_eigenvalue / p.max_eigenvalue.max(1.0));
                refl_min = refl_min.min(rg.psd.min_eigenvalue / rg.psd.max_eigenvalue.max(1.0));
                max_rank = max_rank.max(rg.numerical_rank);
            }
            r.nonnegative("covariance_psd", cov_min, tol);
            r.nonnegative("reflection_psd", refl_min, tol);
            r.flag("reflection_max_rank", max_rank, 1, max_rank == 1);
            Ok(r)
        }
    }
}
