use std::path::PathBuf;

use clap::Subcommand;
use osdual::numerics::gauss_legendre;
use osdual::os_core::{build_quotient, induced_generator};
use osdual::su11::*;
use osdual::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{barycentric_interpolant, parse_list, read_samples};
use crate::report::Report;
use crate::{CliError, Global};

const PROBE_RADIUS: f64 = 0.8;

#[derive(clap::Args, Debug)]
pub struct SArg {
    /// Complementary-series parameter.
    #[arg(long)]
    s: f64,
    /// Allow s outside [0.02, 0.98].
    #[arg(long)]
    allow_endpoints: bool,
}

impl SArg {
    fn get(&self, r: &mut Report) -> Result<f64, CliError> {
        if !self.allow_endpoints && !(0.02..=0.98).contains(&self.s) {
            return Err(CliError::Usage(format!("s = {} outside [0.02, 0.98]; pass --allow-endpoints", self.s)));
        }
        r.param("s", self.s);
        Ok(self.s)
    }
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Induced generator of the dilations on the δ-basis: 2n+1−s.
    Spectrum {
        #[command(flatten)]
        s: SArg,
        /// Number of levels: δ, δ′, …, δ^{(n−1)}.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value = "0.1,0.25")]
        times: String,
    },
    /// J-form Gram of δ, δ′, …: diagonal n!(1−s)_n/π².
    DeltaGram {
        #[command(flatten)]
        s: SArg,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// J-form ⟨f, g⟩ of two functions on (−1, 1), random probes by default.
    Jform {
        #[command(flatten)]
        s: SArg,
        /// CSV (node, re, im); resampled onto a Gauss–Legendre rule.
        #[arg(long)]
        f: Option<PathBuf>,
        #[arg(long)]
        g: Option<PathBuf>,
    },
    /// π_s(g)f and invariance of the J-form.
    Action {
        #[command(flatten)]
        s: SArg,
        /// Group element a,b,c,d with ad − bc = 1; defaults to the hyperbolic element h_t.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        f: Option<PathBuf>,
    },
    /// Jf(t) = |t|^{−s−1}f(1/t) on sample points; checks J² = 1.
    Involution {
        #[command(flatten)]
        s: SArg,
        #[arg(long, default_value = "0.25,0.5,1,2,4", allow_hyphen_values = true)]
        points: String,
    },
    /// Intertwiner U: isometry on random pairs and U∘π_s(h_t) = ρ_s(h_t)∘U.
    Intertwine {
        #[command(flatten)]
        s: SArg,
        #[arg(long, default_value_t = 400)]
        degree: usize,
        #[arg(long, default_value = "0.1,0.5")]
        t: String,
        #[arg(long, default_value_t = 10)]
        pairs: usize,
    },
    /// Reproducing kernel: ⟨u_w, u_v⟩ = (1 − wv̄)^{s−1}.
    Rkhs {
        #[command(flatten)]
        s: SArg,
        #[arg(long, default_value = "0.3,0.2", allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value = "-0.1,0.5", allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 400)]
        degree: usize,
    },
}

fn random_probe(rng: &mut ChaCha8Rng, nodes: usize) -> Result<GridFunction, CliError> {
    let coeffs: Vec<C64> = (0..6).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let rule = gauss_legendre(nodes, -PROBE_RADIUS, PROBE_RADIUS)?;
    let rr = PROBE_RADIUS * PROBE_RADIUS;
    Ok(GridFunction::from_fn(rule, |x| {
        coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * x + c) * (rr - x * x).powi(8)
    })?)
}

fn load_or_probe(path: &Option<PathBuf>, rng: &mut ChaCha8Rng, nodes: usize) -> Result<GridFunction, CliError> {
    match path {
        None => random_probe(rng, nodes),
        Some(p) => {
            let (xs, vs) = read_samples(p)?;
            let (lo, hi) = (xs[0].max(-1.0), xs[xs.len() - 1].min(1.0));
            if !(lo < hi) {
                return Err(CliError::Usage(format!("{}: samples must overlap (−1, 1)", p.display())));
            }
            let f = barycentric_interpolant(xs, vs);
            Ok(GridFunction::from_fn(gauss_legendre(nodes, lo, hi)?, f)?)
        }
    }
}

fn complex_arg(text: &str) -> Result<C64, CliError> {
    match parse_list(text)?.as_slice() {
        [re, im] => Ok(C64::new(*re, *im)),
        [re] => Ok(C64::new(*re, 0.0)),
        _ => Err(CliError::Usage(format!("expected re,im: {text}"))),
    }
}

pub fn run(action: &Action, g: &Global) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    match action {
        Action::Spectrum { s, n, times } => {
            let mut r = Report::new("su11 spectrum");
            let s = s.get(&mut r)?;
            let ts = parse_list(times)?;
            r.param("n", n).param("times", &ts);
            if *n == 0 {
                return Err(CliError::Usage("need at least one level".into()));
            }
            let expected = dilation_spectrum(s, n - 1)?;
            let sys = delta_system(s, n - 1, &ts)?;
            let q = build_quotient(&sys)?;
            let spec = induced_generator(&sys, &q, &ts)?;
            let tol = g.tol(1e-6);
            r.datum("eigenvalues", &spec.eigenvalues);
            for (k, e) in expected.iter().enumerate() {
                let got = spec.eigenvalues.get(k).copied().unwrap_or(f64::NAN);
                r.close(format!("eigenvalue n={k}"), got, *e, tol);
            }
            r.residual("disagreement", spec.disagreement, tol);
            let v = spec.lifted_eigenvectors.column(0);
            let off = v.iter().skip(1).map(|z| z.norm()).fold(0.0, f64::max) / v[0].norm();
            r.residual("ground_state_off_delta", off, 1e-8);
            Ok(r)
        }
        Action::DeltaGram { s, n } => {
            let mut r = Report::new("su11 delta-gram");
            let s = s.get(&mut r)?;
            r.param("n", n);
            let gram = delta_gram(s, *n)?;
            let tol = g.tol(1e-10);
            let mut off = 0.0f64;
            for k in 0..=*n {
                let oracle =
                    (0..k).fold(1.0 / (std::f64::consts::PI * std::f64::consts::PI), |p, j| p * (j as f64 + 1.0) * (j as f64 + 1.0 - s));
                r.close(format!("norm n={k}"), gram.get(k, k).re / oracle, 1.0, tol);
                for m in 0..k {
                    off = off.max(gram.get(m, k).norm());
                }
            }
            r.residual("off_diagonal", off, 0.0);
            let q = build_quotient(&delta_system(s, *n, &[0.1, 0.25])?)?;
            r.flag("null_dim", q.null_dim, 0, q.null_dim == 0);
            Ok(r)
        }
        Action::Jform { s, f, g: gpath } => {
            let mut r = Report::new("su11 jform");
            let s = s.get(&mut r)?;
            r.param("seed", g.seed).param("nodes", g.nodes());
            let f = load_or_probe(f, &mut rng, g.nodes())?;
            let h = load_or_probe(gpath, &mut rng, g.nodes())?;
            let fg = j_form(s, &f, &h)?;
            let ff = j_form(s, &f, &f)?.re;
            let hh = j_form(s, &h, &h)?.re;
            r.datum("value", [fg.re, fg.im]);
            r.nonnegative("norm_f", ff, 0.0);
            r.nonnegative("norm_g", hh, 0.0);
            r.nonnegative("cauchy_schwarz", (ff * hh).sqrt() - fg.norm(), g.tol(1e-12) * (ff * hh).sqrt());
            Ok(r)
        }
        Action::Action { s, element, t, f } => {
            let mut r = Report::new("su11 action");
            let s = s.get(&mut r)?;
            let hyperbolic = element.is_none();
            let el = match element {
                Some(text) => {
                    let e = parse_list(text)?;
                    if e.len() != 4 {
                        return Err(CliError::Usage("element needs a,b,c,d".into()));
                    }
                    r.param("element", &e);
                    SL2::new(e[0], e[1], e[2], e[3])?
                }
                None => {
                    r.param("t", t);
                    SL2::hyperbolic(*t)
                }
            };
            r.param("seed", g.seed).param("nodes", g.nodes());
            let f = load_or_probe(f, &mut rng, g.nodes())?;
            let pf = pi_s_action(s, &el, &f)?;
            let (a, b) = (j_form(s, &f, &f)?.re, j_form(s, &pf, &pf)?.re);
            r.datum("image_interval", pf.rule().interval());
            if hyperbolic {
                r.close("j_norm_invariance", b / a, 1.0, g.tol(1e-8));
            } else {
                r.residual("j_norm_contraction", b / a - 1.0, g.tol(1e-8));
            }
            Ok(r)
        }
        Action::Involution { s, points } => {
            let mut r = Report::new("su11 involution");
            let s = s.get(&mut r)?;
            let pts = parse_list(points)?;
            r.param("points", &pts);
            let f = LineFunction { values: pts.iter().map(|&x| C64::new((-x * x).exp(), x.sin())).collect(), points: pts };
            let jf = j_involution(s, &f)?;
            let jjf = j_involution(s, &jf)?;
            let mut sorted: Vec<(f64, C64)> = f.points.iter().copied().zip(f.values.iter().copied()).collect();
            sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
            let res = sorted.iter().zip(&jjf.values).map(|((_, a), b)| (a - b).norm()).fold(0.0, f64::max);
            r.datum("jf_points", &jf.points);
            r.datum("jf_values", jf.values.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>());
            r.residual("involution", res, g.tol(1e-12));
            Ok(r)
        }
        Action::Intertwine { s, degree, t, pairs } => {
            let mut r = Report::new("su11 intertwine");
            let s = s.get(&mut r)?;
            let ts = parse_list(t)?;
            r.param("degree", degree).param("t", &ts).param("pairs", pairs).param("seed", g.seed).param("nodes", g.nodes());
            let mut iso = 0.0f64;
            for _ in 0..*pairs {
                let f = random_probe(&mut rng, g.nodes())?;
                let h = random_probe(&mut rng, g.nodes())?;
                let lhs = rkhs_inner(&intertwiner_u(s, &f, *degree)?, &intertwiner_u(s, &h, *degree)?)?;
                iso = iso.max((lhs - j_form(s, &f, &h)?).norm());
            }
            r.residual("isometry", iso, g.tol(1e-8));
            for &tt in &ts {
                let f = random_probe(&mut rng, g.nodes())?;
                let h = SL2::hyperbolic(tt);
                let left = intertwiner_u(s, &pi_s_action(s, &h, &f)?, *degree)?;
                let right = rho_s_action(s, &h, &intertwiner_u(s, &f, *degree)?)?;
                let diff = HolomorphicVector::new(
                    s,
                    left.coefficients().iter().zip(right.coefficients()).map(|(a, b)| a - b).collect(),
                )?;
                r.residual(format!("intertwining t={tt}"), (diff.norm_sq() / left.norm_sq()).sqrt(), 1e-6);
            }
            Ok(r)
        }
        Action::Rkhs { s, w, v, degree } => {
            let mut r = Report::new("su11 rkhs");
            let s = s.get(&mut r)?;
            let (w, v) = (complex_arg(w)?, complex_arg(v)?);
            r.param("w", [w.re, w.im]).param("v", [v.re, v.im]).param("degree", degree);
            let got = rkhs_inner(&kernel_vector(s, w, *degree)?, &kernel_vector(s, v, *degree)?)?;
            let want = (C64::new(1.0, 0.0) - w * v.conj()).powf(s - 1.0);
            r.datum("value", [got.re, got.im]);
            r.close("re", got.re, want.re, g.tol(1e-8));
            r.close("im", got.im, want.im, g.tol(1e-8));
            Ok(r)
        }
    }
}
