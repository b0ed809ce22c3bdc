use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use osdual::numerics::{certify_psd, eigendecompose_hermitian, frobenius, gauss_legendre, log_gamma_ratio, HermitianMatrix};
use osdual::os_core::random::{basic_lemma_case, rng_from_seed};
use osdual::os_core::{
    build_quotient, check_axioms, doubled_system, induce_operator, induced_generator, phillips_max_subspace,
    swap_phase_system, system_from_json, translation_system, trivial_system, JRelation,
};
use osdual::OsSystem;

use crate::input::{parse_list, read_matrix, read_text};
use crate::report::Report;
use crate::{CliError, Global};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Example {
    Trivial,
    Swap,
    Translation,
    Doubled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Relation {
    Commuting,
    Twisted,
}

#[derive(clap::Args, Debug)]
pub struct SystemArg {
    /// OS system as JSON {ambient_gram, reflection, subspace, semigroup}.
    #[arg(long, conflicts_with = "example")]
    system: Option<PathBuf>,
    /// Built-in example system.
    #[arg(long, value_enum, default_value = "doubled")]
    example: Example,
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Reflection, invariance and positivity axioms at sample times.
    Axioms {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long, default_value = "0,0.5,1")]
        times: String,
    },
    /// Null space of the J-form and the quotient map.
    Quotient {
        #[command(flatten)]
        sys: SystemArg,
    },
    /// Operator induced on the quotient by a matrix γ.
    Induce {
        #[command(flatten)]
        sys: SystemArg,
        /// γ as a JSON matrix of [re, im] pairs; defaults to U(t) at --t.
        #[arg(long)]
        gamma: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, value_enum, default_value = "twisted")]
        relation: Relation,
    },
    /// Generator of the induced semigroup, cross-validated between sample times.
    Generator {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long, default_value = "0.5,1")]
        times: String,
    },
    /// Maximal positive subspace for an involution on a finite measure space.
    Phillips {
        /// θ as a list of images, θ(i) at position i.
        #[arg(long)]
        theta: String,
        #[arg(long)]
        masses: String,
    },
    /// Norm bound and semigroup law on random 8-dimensional systems.
    Lemma {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Gauss–Legendre rule and its polynomial exactness.
    Quadrature {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        hi: f64,
    },
    /// Hermitian eigendecomposition of a JSON matrix.
    Eig {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// PSD certificate of a JSON matrix.
    Psd {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Pochhammer symbol (a)_k in log form.
    Pochhammer {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long)]
        k: usize,
    },
}

fn load(sys: &SystemArg, r: &mut Report) -> Result<OsSystem, CliError> {
    match &sys.system {
        Some(p) => {
            r.param("system", p.display().to_string());
            Ok(system_from_json(&read_text(p)?)?)
        }
        None => {
            r.param("example", format!("{:?}", sys.example).to_lowercase());
            Ok(match sys.example {
                Example::Trivial => trivial_system(3)?,
                Example::Swap => swap_phase_system()?,
                Example::Translation => translation_system(8)?,
                Example::Doubled => doubled_system(&[1.0, 0.5, 0.25], &[1.0, 2.0, 3.0])?,
            })
        }
    }
}

fn hermitian(m: osdual::CMat) -> Result<HermitianMatrix<f64>, CliError> {
    Ok(HermitianMatrix::with_tolerance(m, 1e-10)?)
}

pub fn run(action: &Action, g: &Global) -> Result<Report, CliError> {
    match action {
        Action::Axioms { sys, times } => {
            let mut r = Report::new("os axioms");
            let s = load(sys, &mut r)?;
            let ts = parse_list(times)?;
            r.param("times", &ts);
            let a = check_axioms(&s, &ts)?;
            let tol = g.tol(a.tolerance);
            for t in &a.times {
                r.residual(format!("reflection t={}", t.t), t.reflection_residual, tol);
                r.residual(format!("invariance t={}", t.t), t.invariance_residual, tol);
            }
            r.nonnegative("j_form_min_eigenvalue", a.positivity.min_eigenvalue, a.positivity.tolerance * a.positivity.max_eigenvalue.max(1.0));
            Ok(r)
        }
        Action::Quotient { sys } => {
            let mut r = Report::new("os quotient");
            let s = load(sys, &mut r)?;
            match build_quotient(&s) {
                Ok(q) => {
                    r.datum("subspace_dim", q.subspace_dim());
                    r.datum("null_dim", q.null_dim);
                    r.datum("quotient_dim", q.dim());
                    let c = q.contraction.expect("set by build_quotient");
                    r.nonnegative("contraction", c.min_eigenvalue, g.tol(c.tolerance) * c.max_eigenvalue.max(1.0));
                    let lift = &q.quotient_basis * &q.lift;
                    let id = osdual::CMat::identity(q.dim(), q.dim());
                    r.residual("beta_lift_identity", frobenius(&(lift - id)), g.tol(1e-10));
                    r.flag("j_form_positive", true, true, true);
                }
                Err(osdual::Error::NotPositive { min_eigenvalue, .. }) => {
                    r.nonnegative("j_form_positive", min_eigenvalue, g.tol(1e-10));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
        Action::Induce { sys, gamma, t, relation } => {
            let mut r = Report::new("os induce");
            let s = load(sys, &mut r)?;
            let gm = match gamma {
                Some(p) => {
                    r.param("gamma", p.display().to_string());
                    read_matrix(p)?
                }
                None => {
                    r.param("t", t);
                    s.u(*t)?
                }
            };
            let rel = match relation {
                Relation::Commuting => JRelation::CommutesWithJ,
                Relation::Twisted => JRelation::JTwisted,
            };
            r.param("relation", format!("{relation:?}").to_lowercase());
            let q = build_quotient(&s)?;
            let ind = induce_operator(&s, &q, &gm, rel)?;
            r.datum("j_norm", ind.j_norm);
            r.datum("bound", ind.bound);
            r.residual("norm_minus_bound", ind.j_norm - ind.bound, g.tol(1e-8));
            r.residual("relation_residual", ind.relation_residual, 1e-10);
            r.residual("invariance_residual", ind.invariance_residual, 1e-10);
            Ok(r)
        }
        Action::Generator { sys, times } => {
            let mut r = Report::new("os generator");
            let s = load(sys, &mut r)?;
            let ts = parse_list(times)?;
            r.param("times", &ts);
            let q = build_quotient(&s)?;
            let spec = induced_generator(&s, &q, &ts)?;
            r.datum("eigenvalues", &spec.eigenvalues);
            r.datum("log_capped", spec.capped);
            r.residual("disagreement", spec.disagreement, g.tol(1e-6));
            r.residual("self_adjoint_residual", spec.self_adjoint_residual, 1e-10);
            r.residual("max_norm_minus_one", spec.max_norm - 1.0, 1e-8);
            Ok(r)
        }
        Action::Phillips { theta, masses } => {
            let mut r = Report::new("os phillips");
            let th: Vec<usize> = parse_list(theta)?
                .into_iter()
                .map(|v| if v >= 0.0 && v.fract() == 0.0 { Ok(v as usize) } else { Err(CliError::Usage(format!("bad index {v}"))) })
                .collect::<Result<_, _>>()?;
            let m = parse_list(masses)?;
            r.param("theta", &th).param("masses", &m);
            let sel = phillips_max_subspace(&th, &m)?;
            r.datum("points", &sel.points);
            r.datum("quotient_dim", sel.quotient_dim);
            r.nonnegative("positivity", sel.positivity.min_eigenvalue, g.tol(sel.positivity.tolerance));
            r.flag("maximal", sel.maximal, true, sel.maximal);
            Ok(r)
        }
        Action::Lemma { count } => {
            let mut r = Report::new("os lemma");
            r.param("seed", g.seed).param("count", count);
            let mut rng = rng_from_seed(g.seed);
            let (mut excess, mut semigroup) = (f64::NEG_INFINITY, 0.0f64);
            for _ in 0..*count {
                let case = basic_lemma_case::<f64, _>(&mut rng, 2)?;
                let q = build_quotient(&case.system)?;
                let a = induce_operator(&case.system, &q, &case.gammas[0], JRelation::JTwisted)?;
                let b = induce_operator(&case.system, &q, &case.gammas[1], JRelation::JTwisted)?;
                let ab = induce_operator(&case.system, &q, &(&case.gammas[0] * &case.gammas[1]), JRelation::JTwisted)?;
                excess = excess.max(a.j_norm - a.bound).max(b.j_norm - b.bound);
                let composed = &a.matrix * &b.matrix;
                semigroup = semigroup.max(frobenius(&(&ab.matrix - &composed)) / frobenius(&composed).max(1.0));
            }
            r.residual("max_norm_minus_bound", excess, g.tol(1e-8));
            r.residual("semigroup_residual", semigroup, 1e-10);
            Ok(r)
        }
        Action::Quadrature { n, lo, hi } => {
            let mut r = Report::new("os quadrature");
            r.param("n", n).param("lo", lo).param("hi", hi);
            let rule = gauss_legendre(*n, *lo, *hi)?;
            r.datum("nodes", rule.nodes());
            r.datum("weights", rule.weights());
            let mut worst = 0.0f64;
            let scale = lo.abs().max(hi.abs()).max(1.0);
            for k in 0..2 * n {
                let exact = (hi.powi(k as i32 + 1) - lo.powi(k as i32 + 1)) / (k as f64 + 1.0);
                let q = rule.integrate(|x| x.powi(k as i32));
                worst = worst.max((q - exact).abs() / scale.powi(k as i32 + 1));
            }
            r.residual("monomial_exactness", worst, g.tol(1e-12));
            Ok(r)
        }
        Action::Eig { matrix } => {
            let mut r = Report::new("os eig");
            r.param("matrix", matrix.display().to_string());
            let m = hermitian(read_matrix(matrix)?)?;
            let e = eigendecompose_hermitian(&m)?;
            r.datum("eigenvalues", &e.values);
            let res = frobenius(&(e.reconstruct() - m.matrix())) / frobenius(m.matrix()).max(1.0);
            r.residual("reconstruction", res, g.tol(1e-12));
            Ok(r)
        }
        Action::Psd { matrix } => {
            let mut r = Report::new("os psd");
            r.param("matrix", matrix.display().to_string());
            let m = hermitian(read_matrix(matrix)?)?;
            let tol = g.tol(osdual::numerics::DEFAULT_PSD_TOL);
            let p = certify_psd(&m, tol)?;
            r.datum("max_eigenvalue", p.max_eigenvalue);
            r.nonnegative("min_eigenvalue", p.min_eigenvalue, tol * p.max_eigenvalue.max(1.0));
            Ok(r)
        }
        Action::Pochhammer { a, k } => {
            let mut r = Report::new("os pochhammer");
            r.param("a", a).param("k", k);
            let p = log_gamma_ratio(*a, *k)?;
            r.datum("log_abs", p.log_abs);
            r.datum("sign", p.sign);
            let direct: f64 = (0..*k).map(|i| (a + i as f64).abs().ln()).sum();
            r.close("log_abs_vs_log_sum", p.log_abs, direct, g.tol(1e-12) * direct.abs().max(1.0));
            Ok(r)
        }
    }
}
