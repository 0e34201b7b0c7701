//! A homotopy of `Δ^p` that pushes a collar of the boundary onto the boundary
//! while keeping a neighborhood of the barycenter still.

use crate::error::{Error, Result};

use super::bary::min_of;
use super::deformation::{punctured, MAX_HORN_DIM};
use super::homotopy::{EvaluableHomotopy, Subspace};
use super::smooth_step::step;

/// `T(x, s) = D_p(x, ρ(x) s)` where `D_p` deforms `Δ^p - {b_p}` onto `Δ̇^p`
/// and `ρ` is `1` on `∂_ε Δ^p` and `0` near `b_p`.
///
/// `T(x, 1)` lies on `Δ̇^p` for every `x` with some coordinate `≤ ε`.
pub fn build_boundary_homotopy_t(p: usize, eps: f64) -> Result<EvaluableHomotopy> {
    if p > MAX_HORN_DIM {
        return Err(Error::UnsupportedDimension { dim: p, max: MAX_HORN_DIM });
    }
    let top = 1.0 / (p + 1) as f64;
    if !(eps > 0.0 && eps < top) {
        return Err(Error::InvalidParameters(format!("ε must lie in (0, {top}), got {eps}")));
    }
    let (lo, hi) = (eps + (top - eps) / 3.0, eps + 2.0 * (top - eps) / 3.0);
    let mut names = vec!["push".to_string()];
    names.extend((0..p).rev().map(|q| format!("R_{q},{}", p - q)));
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(EvaluableHomotopy::new(p, Subspace::Whole, Subspace::Barycenter, Subspace::Boundary, &names, move |x, s| {
        if p == 0 {
            return x.to_vec();
        }
        let rho = 1.0 - step(lo, hi, min_of(x));
        punctured(p, x, rho * s)
    }))
}
