use crate::numerics::{gauss_legendre, Barycentric, QuadratureRule};
use crate::{Error, Result, C64};

/// Real 2×2 matrix [[a, b], [c, d]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl SL2 {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let g = Self { a, b, c, d };
        if (g.det() - 1.0).abs() > 1e-12 * (a.abs() * d.abs() + b.abs() * c.abs()).max(1.0) {
            return Err(Error::InvalidInput(format!("det g = {} ≠ 1", g.det())));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        Self { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// diag(e^t, e^{−t}).
    pub fn dilation(t: f64) -> Self {
        Self { a: t.exp(), b: 0.0, c: 0.0, d: (-t).exp() }
    }

    /// h_t = [[cosh t, sinh t], [sinh t, cosh t]].
    pub fn hyperbolic(t: f64) -> Self {
        Self { a: t.cosh(), b: t.sinh(), c: t.sinh(), d: t.cosh() }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Argument map t ↦ (−c + at)/(d − bt) of the action.
    pub fn pullback(&self, t: f64) -> f64 {
        (-self.c + self.a * t) / (self.d - self.b * t)
    }

    /// Inverse of `pullback`: x ↦ (dx + c)/(bx + a).
    pub fn pushforward(&self, x: f64) -> f64 {
        (self.d * x + self.c) / (self.b * x + self.a)
    }
}

/// Function on a Gauss–Legendre grid inside [−1, 1], vanishing off the grid interval.
#[derive(Debug, Clone)]
pub struct GridFunction {
    rule: QuadratureRule<f64>,
    values: Vec<C64>,
}

impl GridFunction {
    pub fn new(rule: QuadratureRule<f64>, values: Vec<C64>) -> Result<Self> {
        let (lo, hi) = rule.interval();
        if lo < -1.0 || hi > 1.0 {
            return Err(Error::InvalidInput("grid interval must lie in [−1, 1]".into()));
        }
        if values.len() != rule.len() {
            return Err(Error::InvalidInput("one value per node".into()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidInput("grid values must be finite".into()));
        }
        Ok(Self { rule, values })
    }

    pub fn from_fn<F: Fn(f64) -> C64>(rule: QuadratureRule<f64>, f: F) -> Result<Self> {
        let values = rule.nodes().iter().map(|&x| f(x)).collect();
        Self::new(rule, values)
    }

    pub fn from_real_fn<F: Fn(f64) -> f64>(rule: QuadratureRule<f64>, f: F) -> Result<Self> {
        Self::from_fn(rule, |x| C64::new(f(x), 0.0))
    }

    pub fn rule(&self) -> &QuadratureRule<f64> {
        &self.rule
    }

    pub fn nodes(&self) -> &[f64] {
        self.rule.nodes()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn interpolator(&self) -> Barycentric<f64> {
        Barycentric::from_rule(&self.rule)
    }

    /// Value at an arbitrary point by barycentric interpolation.
    pub fn eval(&self, x: f64) -> C64 {
        self.interpolator().eval(&self.values, x)
    }

    /// Interpolates onto another rule.
    pub fn resample(&self, rule: QuadratureRule<f64>) -> Result<Self> {
        let b = self.interpolator();
        let values = rule.nodes().iter().map(|&x| b.eval(&self.values, x)).collect();
        Self::new(rule, values)
    }

    /// ∫ f(u) uⁿ du for n = 0..=n_max.
    pub fn moments(&self, n_max: usize) -> Vec<C64> {
        let mut m = vec![C64::new(0.0, 0.0); n_max + 1];
        for ((&x, &w), &f) in self.rule.nodes().iter().zip(self.rule.weights()).zip(&self.values) {
            let mut p = w;
            for mk in m.iter_mut() {
                *mk += f * p;
                p *= x;
            }
        }
        m
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.norm()))
    }
}

/// π_s(g)f(t) = |d − bt|^{−s−1} f((−c+at)/(d−bt)).
///
/// The result lives on an equally sized rule over the image of the grid
/// interval under t ↦ (dt + c)/(bt + a), with f evaluated by barycentric
/// interpolation.
pub fn pi_s_action(s: f64, g: &SL2, f: &GridFunction) -> Result<GridFunction> {
    super::check_s(s)?;
    let (lo, hi) = f.rule.interval();
    if (g.b * lo + g.a) * (g.b * hi + g.a) <= 0.0 {
        let node = if g.b != 0.0 { -g.a / g.b } else { f64::INFINITY };
        return Err(Error::SingularDenominator { node });
    }
    let (p, q) = (g.pushforward(lo), g.pushforward(hi));
    let (nlo, nhi) = if p < q { (p, q) } else { (q, p) };
    if nlo < -1.0 - 1e-12 || nhi > 1.0 + 1e-12 {
        return Err(Error::InvalidInput(format!(
            "g moves the support to [{nlo}, {nhi}], outside (−1, 1)"
        )));
    }
    let rule = gauss_legendre(f.rule.len(), nlo.max(-1.0), nhi.min(1.0))?;
    let interp = f.interpolator();
    let mut values = Vec::with_capacity(rule.len());
    for &t in rule.nodes() {
        let den = g.d - g.b * t;
        if den == 0.0 {
            return Err(Error::SingularDenominator { node: t });
        }
        let x = g.pullback(t).clamp(lo, hi);
        values.push(interp.eval(&f.values, x) * den.abs().powf(-s - 1.0));
    }
    GridFunction::new(rule, values)
}

/// Samples of a function on arbitrary nonzero real points.
#[derive(Debug, Clone, PartialEq)]
pub struct LineFunction {
    pub points: Vec<f64>,
    pub values: Vec<C64>,
}

/// Jf(t) = |t|^{−s−1} f(1/t), reported at the points 1/x in ascending order.
pub fn j_involution(s: f64, f: &LineFunction) -> Result<LineFunction> {
    super::check_s(s)?;
    if f.points.len() != f.values.len() {
        return Err(Error::InvalidInput("one value per point".into()));
    }
    if f.points.iter().any(|&x| x == 0.0 || !x.is_finite()) {
        return Err(Error::InvalidInput("J is undefined at t = 0".into()));
    }
    let mut pairs: Vec<(f64, C64)> = f
        .points
        .iter()
        .zip(&f.values)
        .map(|(&x, &v)| {
            let t = 1.0 / x;
            (t, v * t.abs().powf(-s - 1.0))
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
    Ok(LineFunction { points: pairs.iter().map(|p| p.0).collect(), values: pairs.iter().map(|p| p.1).collect() })
}

/// J applied to a function given in closed form.
pub fn j_apply<F: Fn(f64) -> C64>(s: f64, f: F) -> impl Fn(f64) -> C64 {
    move |t: f64| f(1.0 / t) * t.abs().powf(-s - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe() -> GridFunction {
        let rule = gauss_legendre(40, -0.6, 0.6).unwrap();
        GridFunction::from_real_fn(rule, |x| (0.36 - x * x).powi(4) * (1.0 + x)).unwrap()
    }

    #[test]
    fn identity_leaves_function_unchanged() {
        let f = probe();
        let g = pi_s_action(0.5, &SL2::identity(), &f).unwrap();
        for (a, b) in f.values().iter().zip(g.values()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn dilation_formula() {
        let s = 0.3;
        let t = 0.2;
        let f = probe();
        let g = pi_s_action(s, &SL2::dilation(t), &f).unwrap();
        for (&x, &v) in g.nodes().iter().zip(g.values()) {
            let expect = ((s + 1.0) * t).exp() * f.eval((2.0 * t).exp() * x);
            assert!((v - expect).norm() < 1e-13);
        }
    }

    #[test]
    fn singular_denominator_detected() {
        let f = GridFunction::from_real_fn(gauss_legendre(8, -1.0, 1.0).unwrap(), |_| 1.0).unwrap();
        let g = SL2::new(0.0, 1.0, -1.0, 0.0).unwrap();
        assert!(matches!(pi_s_action(0.5, &g, &f), Err(Error::SingularDenominator { .. })));
    }

    #[test]
    fn j_involution_support_and_square() {
        let f = LineFunction {
            points: vec![-0.5, 0.25, 0.75],
            values: vec![C64::new(1.0, 0.0), C64::new(2.0, -1.0), C64::new(0.5, 0.5)],
        };
        let jf = j_involution(0.4, &f).unwrap();
        assert!(jf.points.iter().all(|t| t.abs() > 1.0));
        let jjf = j_involution(0.4, &jf).unwrap();
        for (a, b) in jjf.points.iter().zip(&f.points) {
            assert!((a - b).abs() < 1e-15);
        }
        for (a, b) in jjf.values.iter().zip(&f.values) {
            assert!((a - b).norm() < 1e-14);
        }
        let zero = LineFunction { points: vec![0.0], values: vec![C64::new(1.0, 0.0)] };
        assert!(j_involution(0.4, &zero).is_err());
    }

    #[test]
    fn determinant_checked() {
        assert!(SL2::new(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(SL2::new(2.0, 0.0, 0.0, 0.5).is_ok());
    }
}
