//! Extending maps from a realized horn to the whole simplex.

use std::sync::Arc;

use crate::error::Result;
use crate::geometry::deformation::build_full_horn_deformation;

type VecFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// `g ∘ r` where `r = H(·, 1)` retracts `Δ^p` onto `Λ^p_k`. Only the values
/// of `g` on the horn are ever used.
pub fn fill_horn_numeric(
    g: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    p: usize,
    k: usize,
) -> Result<impl Fn(&[f64]) -> Vec<f64> + Send + Sync + Clone> {
    let h = build_full_horn_deformation(p, k)?;
    let g: VecFn = Arc::new(g);
    Ok(move |x: &[f64]| g(&h.eval_raw(x, 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::bary::grid_f64;
    use crate::geometry::Subspace;

    #[test]
    fn inclusion_is_reproduced_on_the_horn() {
        let filled = fill_horn_numeric(|x: &[f64]| x.to_vec(), 2, 0).unwrap();
        for x in grid_f64(2, 20) {
            if Subspace::Horn(0).contains(x.coords(), 0.0) {
                let y = filled(x.coords());
                assert!(x.max_abs_diff(&crate::geometry::Bary::renormalized(y)) <= 1e-9);
            }
        }
    }

    #[test]
    fn constants_stay_constant() {
        let filled = fill_horn_numeric(|_: &[f64]| vec![2.5, -1.0], 3, 2).unwrap();
        assert_eq!(filled(&[0.25; 4]), vec![2.5, -1.0]);
    }
}
