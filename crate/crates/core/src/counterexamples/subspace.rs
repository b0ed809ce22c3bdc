use crate::{CMat, Result};

/// Orthonormal basis of the column span, dropping singular values below
/// `rel_tol`·σ_max.
pub fn orthonormal_basis(m: &CMat, rel_tol: f64) -> Result<CMat> {
    if m.ncols() == 0 || m.nrows() == 0 {
        return Ok(CMat::zeros(m.nrows(), 0));
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &s| a.max(s));
    let keep: Vec<usize> =
        (0..svd.singular_values.len()).filter(|&i| smax > 0.0 && svd.singular_values[i] > rel_tol * smax).collect();
    let mut q = CMat::zeros(m.nrows(), keep.len());
    for (c, &i) in keep.iter().enumerate() {
        q.set_column(c, &u.column(i));
    }
    Ok(q)
}

/// Largest principal angle between the spans of two orthonormal bases;
/// π/2 when the dimensions differ.
pub fn largest_principal_angle(a: &CMat, b: &CMat) -> f64 {
    if a.ncols() != b.ncols() {
        return std::f64::consts::FRAC_PI_2;
    }
    if a.ncols() == 0 {
        return 0.0;
    }
    let resid = |p: &CMat, q: &CMat| {
        let r = p - q * (q.adjoint() * p);
        r.clone().svd(false, false).singular_values.iter().fold(0.0f64, |m, &s| m.max(s))
    };
    resid(a, b).max(resid(b, a)).min(1.0).asin()
}
