use std::f64::consts::PI;

use crate::bargmann::LineGrid;
use crate::numerics::{certify_psd, eigendecompose_hermitian, HermitianMatrix, PsdReport, DEFAULT_PSD_TOL};
use crate::{CMat, Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxbSign {
    Plus,
    Minus,
}

impl AxbSign {
    fn value(&self) -> f64 {
        match self {
            AxbSign::Plus => 1.0,
            AxbSign::Minus => -1.0,
        }
    }
}

/// The group element (eˢ, b) acting through π_±.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxbRepPoint {
    pub sign: AxbSign,
    pub s: f64,
    pub b: f64,
}

impl AxbRepPoint {
    pub fn new(sign: AxbSign, s: f64, b: f64) -> Self {
        Self { sign, s, b }
    }

    /// (e^{s₁}, b₁)(e^{s₂}, b₂) = (e^{s₁+s₂}, b₁ + e^{s₁}b₂).
    pub fn compose(&self, other: &Self) -> Self {
        Self { sign: self.sign, s: self.s + other.s, b: self.b + self.s.exp() * other.b }
    }
}

/// (π_±(eˢ, b)f)(x) = e^{±i eˣ b} f(x + s), with f interpolated from its grid.
pub fn axb_action(p: &AxbRepPoint, f: &LineGrid) -> Result<LineGrid> {
    let interp = crate::numerics::Barycentric::from_rule(f.rule());
    let sg = p.sign.value();
    let out = LineGrid::from_fn(f.rule().clone(), |x| {
        let ph = sg * x.exp() * p.b;
        interp.eval(f.values(), x + p.s) * C64::new(ph.cos(), ph.sin())
    })?;
    let (n0, n1) = (f.norm(), out.norm());
    if n0 > 0.0 && (n0 - n1).abs() > 1e-8 * n0 {
        return Err(Error::TruncationWarning { boundary: (n0 - n1).abs() / n0 });
    }
    Ok(out)
}

/// M equispaced points x_j = 2πj/M on the circle, with ⟨f, g⟩ = M⁻¹ Σ f̄ g.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicGrid {
    pub m: usize,
}

impl PeriodicGrid {
    pub fn points(&self) -> Vec<f64> {
        (0..self.m).map(|j| 2.0 * PI * j as f64 / self.m as f64).collect()
    }

    pub fn inner(&self, a: &[C64], b: &[C64]) -> C64 {
        a.iter().zip(b).fold(C64::new(0.0, 0.0), |acc, (x, y)| acc + x.conj() * y) / self.m as f64
    }
}

/// Truncated Hardy pair A₊H₊ ⊕ A₋H₋ on the circle: columns A₊e^{iξx}, ξ ≥ 0,
/// and A₋e^{iξx}, ξ < 0, with unimodular multipliers A±.
#[derive(Debug, Clone)]
pub struct HardyPair {
    grid: PeriodicGrid,
    plus_freqs: Vec<f64>,
    minus_freqs: Vec<f64>,
    a_plus: Vec<C64>,
    a_minus: Vec<C64>,
}

impl HardyPair {
    pub fn new(
        grid: PeriodicGrid,
        plus_freqs: Vec<f64>,
        minus_freqs: Vec<f64>,
        a_plus: Vec<C64>,
        a_minus: Vec<C64>,
    ) -> Result<Self> {
        if plus_freqs.is_empty() || minus_freqs.is_empty() {
            return Err(Error::InvalidInput("both Hardy bases must be nonempty".into()));
        }
        if plus_freqs.iter().any(|&k| k < 0.0) || minus_freqs.iter().any(|&k| k >= 0.0) {
            return Err(Error::InvalidInput("H₊ needs frequencies ≥ 0 and H₋ frequencies < 0".into()));
        }
        if a_plus.len() != grid.m || a_minus.len() != grid.m {
            return Err(Error::InvalidInput("one multiplier value per grid point".into()));
        }
        if a_plus.iter().chain(&a_minus).any(|a| (a.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::InvalidInput("multipliers must be unimodular".into()));
        }
        Ok(Self { grid, plus_freqs, minus_freqs, a_plus, a_minus })
    }

    /// Frequencies 0..k and −1..−k with A₊ = 1 and A₋ = e^{iλ cos x}.
    pub fn standard(k: usize, m: usize, lambda: f64) -> Result<Self> {
        if 2 * k + 1 > m {
            return Err(Error::InvalidInput("grid too small for the truncation".into()));
        }
        let grid = PeriodicGrid { m };
        let xs = grid.points();
        Self::new(
            grid,
            (0..k).map(|j| j as f64).collect(),
            (1..=k).map(|j| -(j as f64)).collect(),
            vec![C64::new(1.0, 0.0); m],
            xs.iter().map(|x| C64::new(0.0, lambda * x.cos()).exp()).collect(),
        )
    }

    pub fn grid(&self) -> PeriodicGrid {
        self.grid
    }

    fn columns(&self, freqs: &[f64], mult: &[C64]) -> CMat {
        let xs = self.grid.points();
        CMat::from_fn(self.grid.m, freqs.len(), |j, k| mult[j] * C64::new(0.0, freqs[k] * xs[j]).exp())
    }

    pub fn plus_basis(&self) -> CMat {
        self.columns(&self.plus_freqs, &self.a_plus)
    }

    pub fn minus_basis(&self) -> CMat {
        self.columns(&self.minus_freqs, &self.a_minus)
    }

    /// Gram of ⟨v, Jv'⟩ on K₀ = A₊H₊ ⊕ A₋H₋ with J(f₀, f₁) = (f₁, f₀): [[0, C], [Cᴴ, 0]].
    pub fn j_gram(&self) -> CMat {
        let (p, q) = (self.plus_basis(), self.minus_basis());
        let c = p.adjoint() * &q / C64::new(self.grid.m as f64, 0.0);
        let (kp, km) = (p.ncols(), q.ncols());
        let mut g = CMat::zeros(kp + km, kp + km);
        g.view_mut((0, kp), (kp, km)).copy_from(&c);
        g.view_mut((kp, 0), (km, kp)).copy_from(&c.adjoint());
        g
    }

    /// Ordinary Gram on K₀: block diagonal since the summands are orthogonal in K.
    pub fn l2_gram(&self) -> CMat {
        let (p, q) = (self.plus_basis(), self.minus_basis());
        let mf = C64::new(self.grid.m as f64, 0.0);
        let (kp, km) = (p.ncols(), q.ncols());
        let mut g = CMat::zeros(kp + km, kp + km);
        g.view_mut((0, 0), (kp, kp)).copy_from(&(p.adjoint() * &p / mf));
        g.view_mut((kp, kp), (km, km)).copy_from(&(q.adjoint() * &q / mf));
        g
    }
}

/// A vector (h₊, h₋) ∈ K₀ with 2Re⟨h₊, h₋⟩ < 0.
#[derive(Debug, Clone)]
pub struct FalsifierWitness {
    pub h_plus: Vec<C64>,
    pub h_minus: Vec<C64>,
    /// Coefficients in the plus basis followed by the minus basis.
    pub coefficients: Vec<C64>,
    /// 2Re⟨h₊, h₋⟩.
    pub value: f64,
    pub norm_plus: f64,
    pub norm_minus: f64,
    /// value/(‖h₊‖‖h₋‖).
    pub ratio: f64,
}

/// Minimizes the Rayleigh quotient of the J-form over the truncated pair.
pub fn axb_positivity_falsifier(pair: &HardyPair) -> Result<FalsifierWitness> {
    let b = HermitianMatrix::with_tolerance(pair.l2_gram(), 1e-10)?;
    let be = eigendecompose_hermitian(&b)?;
    if be.min() <= 1e-12 * be.max() {
        return Err(Error::IllConditioned { min_eigenvalue: be.min() });
    }
    let inv_sqrt = {
        let d = CMat::from_diagonal(&nalgebra::DVector::from_iterator(
            be.values.len(),
            be.values.iter().map(|&v| C64::new(1.0 / v.sqrt(), 0.0)),
        ));
        &be.vectors * d * be.vectors.adjoint()
    };
    let w = &inv_sqrt * pair.j_gram() * &inv_sqrt;
    let e = eigendecompose_hermitian(&HermitianMatrix::with_tolerance(w, 1e-10)?)?;
    let lam = e.min();
    if lam >= -1e-12 {
        return Err(Error::Unresolved { min_eigenvalue: lam });
    }
    let coeffs = &inv_sqrt * e.vectors.column(0);
    let kp = pair.plus_freqs.len();
    let hp = pair.plus_basis() * coeffs.rows(0, kp);
    let hm = pair.minus_basis() * coeffs.rows(kp, coeffs.nrows() - kp);
    let g = pair.grid;
    let hp: Vec<C64> = hp.iter().copied().collect();
    let hm: Vec<C64> = hm.iter().copied().collect();
    let value = 2.0 * g.inner(&hp, &hm).re;
    let norm_plus = g.inner(&hp, &hp).re.sqrt();
    let norm_minus = g.inner(&hm, &hm).re.sqrt();
    Ok(FalsifierWitness {
        ratio: value / (norm_plus * norm_minus),
        h_plus: hp,
        h_minus: hm,
        coefficients: coeffs.iter().copied().collect(),
        value,
        norm_plus,
        norm_minus,
    })
}

/// J-form on the diagonal {(f, f)} for f in the span of both bases; 2‖f‖² ⪰ 0.
pub fn diagonal_contrast(pair: &HardyPair) -> Result<PsdReport<f64>> {
    let (p, q) = (pair.plus_basis(), pair.minus_basis());
    let mut all = CMat::zeros(p.nrows(), p.ncols() + q.ncols());
    all.view_mut((0, 0), (p.nrows(), p.ncols())).copy_from(&p);
    all.view_mut((0, p.ncols()), (q.nrows(), q.ncols())).copy_from(&q);
    let g = all.adjoint() * &all * C64::new(2.0 / pair.grid.m as f64, 0.0);
    certify_psd(&HermitianMatrix::with_tolerance(g, 1e-10)?, DEFAULT_PSD_TOL)
}

/// The pair {1} ⊂ H₊, {e^{−iεx}} ⊂ H₋ on an M-point circle: returns the
/// quadrature value of C = ⟨1, e^{−iεx}⟩ and its geometric-sum closed form
/// M⁻¹(1 − e^{−2πiε})/(1 − e^{−2πiε/M}).
pub fn two_mode_form(m: usize, eps: f64) -> Result<(HardyPair, C64, C64)> {
    let grid = PeriodicGrid { m };
    let one = vec![C64::new(1.0, 0.0); m];
    let pair = HardyPair::new(grid, vec![0.0], vec![-eps], one.clone(), one)?;
    let c = pair.j_gram()[(0, 1)];
    let z = C64::new(0.0, -2.0 * PI * eps).exp();
    let zm = C64::new(0.0, -2.0 * PI * eps / m as f64).exp();
    let closed = (C64::new(1.0, 0.0) - z) / (C64::new(1.0, 0.0) - zm) / m as f64;
    Ok((pair, c, closed))
}

/// Largest c with ‖LX + XL‖_F ≥ c‖L‖_F for every L diagonal in the Fourier
/// basis, X multiplication by x ∈ [−π, π) on an M-point circle.
///
/// With W = |X̂|² entrywise, ‖{L, X}‖²_F = Σ |ℓ_k + ℓ_l|² W_kl = ℓ*(2D_W + 2W)ℓ,
/// D_W the row sums, so c² is the smallest eigenvalue of 2(D_W + W).
pub fn anticommutator_bound(m: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidInput("need at least two points".into()));
    }
    let x = fourier_position(m);
    let w = x.map(|v| C64::new(v.norm_sqr(), 0.0));
    let mut q = &w * C64::new(2.0, 0.0);
    for k in 0..m {
        let rs: f64 = (0..m).map(|l| w[(k, l)].re).sum();
        q[(k, k)] += C64::new(2.0 * rs, 0.0);
    }
    let e = eigendecompose_hermitian(&HermitianMatrix::new(q)?)?;
    Ok(e.min().max(0.0).sqrt())
}

/// Multiplication by x_j = 2πj/M − π in the unitary Fourier basis.
pub(crate) fn fourier_position(m: usize) -> CMat {
    let xs: Vec<f64> = (0..m).map(|j| 2.0 * PI * j as f64 / m as f64 - PI).collect();
    let f = CMat::from_fn(m, m, |k, j| C64::new(0.0, -2.0 * PI * (k * j) as f64 / m as f64).exp() / (m as f64).sqrt());
    let d = CMat::from_diagonal(&nalgebra::DVector::from_iterator(m, xs.iter().map(|&x| C64::new(x, 0.0))));
    &f * d * f.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_hardy_pair_is_unresolved() {
        let grid = PeriodicGrid { m: 32 };
        let one = vec![C64::new(1.0, 0.0); 32];
        let pair = HardyPair::new(grid, vec![0.0, 1.0, 2.0], vec![-1.0, -2.0], one.clone(), one).unwrap();
        assert!(matches!(axb_positivity_falsifier(&pair), Err(Error::Unresolved { .. })));
    }

    #[test]
    fn compose_matches_group_law() {
        let g1 = AxbRepPoint::new(AxbSign::Plus, 0.3, 1.0);
        let g2 = AxbRepPoint::new(AxbSign::Plus, -0.1, 2.0);
        let g = g1.compose(&g2);
        assert!((g.s - 0.2).abs() < 1e-15);
        assert!((g.b - (1.0 + 0.3f64.exp() * 2.0)).abs() < 1e-15);
    }
}
