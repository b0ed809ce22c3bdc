use crate::{Error, Result, C64};

/// Samples of μ on a ξ-grid; each Q(ξ) = (1+|μ|²)⁻¹ [[1, μ], [μ̄, |μ|²]].
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionField {
    pub xi_grid: Vec<f64>,
    pub mu: Vec<C64>,
}

impl ProjectionField {
    pub fn new(xi_grid: Vec<f64>, mu: Vec<C64>) -> Result<Self> {
        if xi_grid.len() != mu.len() {
            return Err(Error::InvalidInput("one μ value per ξ".into()));
        }
        Ok(Self { xi_grid, mu })
    }

    pub fn q(&self, i: usize) -> [[C64; 2]; 2] {
        q_matrix(self.mu[i])
    }
}

pub(crate) fn q_matrix(mu: C64) -> [[C64; 2]; 2] {
    let s = 1.0 / (1.0 + mu.norm_sqr());
    [[C64::new(s, 0.0), mu * s], [mu.conj() * s, C64::new(mu.norm_sqr() * s, 0.0)]]
}

fn mul(a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]) -> [[C64; 2]; 2] {
    let mut c = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn dist(a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]) -> f64 {
    let mut m = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionReport {
    pub passed: bool,
    /// First ξ where an identity failed, with the identity's name.
    pub first_failure: Option<(f64, String)>,
    pub max_residual: f64,
    /// min over ξ of Tr(QJQ) = Q₁₂ + Q₂₁.
    pub min_trace_qjq: f64,
}

/// Checks Q² = Q = Q*, Tr Q = 1, |Q₁₂|² = Q₁₁Q₂₂, Tr(QJQ) ≥ 0 and
/// Q(1, μ̄)ᵀ = (1, μ̄)ᵀ at every sample.
pub fn projection_field_check(field: &ProjectionField, tol: f64) -> ProjectionReport {
    let j = [[C64::new(0.0, 0.0), C64::new(1.0, 0.0)], [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]];
    let mut first = None;
    let mut max_res = 0.0f64;
    let mut min_tr = f64::INFINITY;
    for (i, &xi) in field.xi_grid.iter().enumerate() {
        let mu = field.mu[i];
        let q = field.q(i);
        let qh = [[q[0][0].conj(), q[1][0].conj()], [q[0][1].conj(), q[1][1].conj()]];
        let lam = mu.conj();
        let v = [q[0][0] + q[0][1] * lam, q[1][0] + q[1][1] * lam];
        let qjq = mul(&mul(&q, &j), &q);
        let tr = (qjq[0][0] + qjq[1][1]).re;
        min_tr = min_tr.min(tr);
        let checks = [
            ("admissible", if mu.re < -tol { -mu.re } else { 0.0 }),
            ("idempotent", dist(&mul(&q, &q), &q)),
            ("selfadjoint", dist(&q, &qh)),
            ("trace", ((q[0][0] + q[1][1]).re - 1.0).abs()),
            ("rank_one", (q[0][1].norm_sqr() - (q[0][0] * q[1][1]).re).abs()),
            ("trace_qjq", if tr < -tol { -tr } else { 0.0 }),
            ("range", (v[0] - 1.0).norm().max((v[1] - lam).norm())),
        ];
        for (name, r) in checks {
            max_res = max_res.max(r);
            if r > tol && first.is_none() {
                first = Some((xi, name.to_string()));
            }
        }
    }
    ProjectionReport { passed: first.is_none(), first_failure: first, max_residual: max_res, min_trace_qjq: min_tr }
}
