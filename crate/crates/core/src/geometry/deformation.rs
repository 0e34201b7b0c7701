//! Deformation retractions of simplices onto horns and boundaries.
//!
//! Everything here acts on raw coordinate slices in double precision. The
//! building blocks are
//!
//! * `half_open(n, v, s)`: deformation of `Δ^n_0̂` onto `Λ^n_0̂`,
//! * `punctured(p, y, s)`: deformation of `Δ^p - {b_p}` onto `Δ̇^p`,
//! * `full_horn(n, x, s)`: deformation of `Δ^n` onto `Λ^n_0`,
//!
//! and the other horns are reached by relabelling vertices.

use crate::error::{Error, Result};

use super::bary::min_of;
use super::good_nbhd::FaceIndex;
use super::homotopy::{run_staged, EvaluableHomotopy, Subspace};
use super::smooth_step::step;

/// Largest horn dimension supported by the explicit constructions.
pub const MAX_HORN_DIM: usize = 3;

/// Radius `ε_q` of the good neighborhoods of the open `q`-faces.
pub const NBHD_RADIUS: [f64; 3] = [1.0 / 2.0, 3.0 / 20.0, 1.0 / 25.0];

/// Breakpoints of the cutoff `φ_q`, applied to the smallest coordinate.
pub const CUTOFF_BREAKS: [(f64, f64); 3] = [(0.0, 0.0), (1.0 / 4.0, 1.0 / 3.0), (1.0 / 20.0, 1.0 / 10.0)];

/// After the radial push every point has smallest coordinate at most this.
pub const COLLAR: f64 = 1.0 / 50.0;

/// Breakpoints of `μ`, which switches the second stage off near the face
/// opposite the horn vertex.
pub const MU_BREAKS: (f64, f64) = (1.0 / 40.0, 1.0 / 20.0);

/// `φ_q(u)` on `Δ^q`: `1` near the barycenter, `0` near the boundary.
pub fn cutoff(q: usize, u: &[f64]) -> f64 {
    match q {
        0 => 1.0,
        1 | 2 => {
            let (a, b) = CUTOFF_BREAKS[q];
            step(a, b, min_of(u))
        }
        _ => panic!("no cutoff for dimension {q}"),
    }
}

/// Whether `x` lies in the closed disk `B^q = {min x ≥ 3/(4(q+1))}` where
/// `φ_q ≡ 1`.
pub fn in_core_disk(x: &[f64]) -> bool {
    min_of(x) >= 3.0 / (4.0 * x.len() as f64)
}

fn cone_split(c: &[f64]) -> Option<(f64, Vec<f64>)> {
    let t = 1.0 - c[0];
    if t <= 0.0 {
        return None;
    }
    Some((t, c[1..].iter().map(|v| v / t).collect()))
}

fn cone_join(t: f64, y: &[f64]) -> Vec<f64> {
    std::iter::once(1.0 - t).chain(y.iter().map(|v| t * v)).collect()
}

/// Deformation of `Δ^n_0̂ = {v_0 > 0}` onto `Λ^n_0̂`.
pub(crate) fn half_open(n: usize, v: &[f64], s: f64) -> Vec<f64> {
    if n == 1 {
        let t = (1.0 - s) * v[1];
        return vec![1.0 - t, t];
    }
    let p = n - 1;
    run_staged(2, v, s, |stage, c, sigma| match stage {
        0 => match cone_split(c) {
            Some((t, y)) => {
                let t = (1.0 - cutoff(p, &y) * sigma) * t;
                let mut out = cone_join(t, &y);
                out[0] = 1.0 - t;
                out
            }
            None => c.to_vec(),
        },
        _ => match cone_split(c) {
            Some((t, y)) => cone_join(t, &punctured(p, &y, sigma)),
            None => c.to_vec(),
        },
    })
}

fn push(y: &[f64], sigma: f64) -> Vec<f64> {
    let k = y.len() as f64;
    let m = min_of(y);
    let den = 1.0 - k * m;
    if den <= 1e-15 {
        return y.to_vec();
    }
    let lambda = 1.0 - sigma * (1.0 - COLLAR * k);
    let c = (1.0 - k * lambda * m) / den;
    let b = 1.0 / k;
    y.iter().map(|v| b + c * (v - b)).collect()
}

/// One application of `R_{q,r}` on the good neighborhoods of the open
/// `q`-faces listed in `faces`; the first neighborhood whose support
/// contains `x` is used.
fn face_class(q: usize, faces: &[FaceIndex], x: &[f64], sigma: f64) -> Vec<f64> {
    let eps = NBHD_RADIUS[q];
    for face in faces {
        let inside = face.inside();
        if inside.iter().any(|&i| x[i] <= 0.0) {
            continue;
        }
        let total: f64 = inside.iter().map(|&i| x[i]).sum();
        if total <= 1.0 - eps {
            continue;
        }
        let u: Vec<f64> = inside.iter().map(|&i| x[i] / total).collect();
        let w = cutoff(q, &u);
        if w <= 0.0 {
            continue;
        }
        let v: Vec<f64> = std::iter::once(total).chain(face.outside().iter().map(|&j| x[j])).collect();
        let v = half_open(v.len() - 1, &v, w * sigma);
        let mut out = vec![0.0; x.len()];
        for (a, &i) in inside.iter().enumerate() {
            out[i] = v[0] * u[a];
        }
        for (b, &j) in face.outside().iter().enumerate() {
            out[j] = v[b + 1];
        }
        return out;
    }
    x.to_vec()
}

/// Deformation of `Δ^p - {b_p}` onto `Δ̇^p` (`p ≥ 1`): a radial push into a
/// thin collar, then the good neighborhoods of faces of decreasing dimension.
pub(crate) fn punctured(p: usize, y: &[f64], s: f64) -> Vec<f64> {
    run_staged(p + 1, y, s, |stage, c, sigma| {
        if stage == 0 {
            push(c, sigma)
        } else {
            let q = p - stage;
            face_class(q, &FaceIndex::all_of_dim(p, q), c, sigma)
        }
    })
}

/// Deformation of `Δ^n` onto `Λ^n_0`.
pub(crate) fn full_horn(n: usize, x: &[f64], s: f64) -> Vec<f64> {
    if n == 1 {
        let t = (1.0 - s) * x[1];
        return vec![1.0 - t, t];
    }
    let p = n - 1;
    let stages = p + 3;
    run_staged(stages, x, s, |stage, c, sigma| {
        if stage == 0 {
            return match cone_split(c) {
                Some((t, y)) => {
                    let t = (1.0 - cutoff(p, &y) * sigma) * t;
                    let mut out = cone_join(t, &y);
                    out[0] = 1.0 - t;
                    out
                }
                None => c.to_vec(),
            };
        }
        if stage == 1 {
            let w = step(MU_BREAKS.0, MU_BREAKS.1, c[0]) * sigma;
            return match cone_split(c) {
                Some((t, y)) if w > 0.0 => cone_join(t, &punctured(p, &y, w)),
                _ => c.to_vec(),
            };
        }
        if stage < stages - 1 {
            let q = p - (stage - 1);
            let faces: Vec<FaceIndex> =
                FaceIndex::all_of_dim(n, q).into_iter().filter(|f| !f.inside().contains(&0)).collect();
            return face_class(q, &faces, c, sigma);
        }
        if c[0] <= 1e-12 {
            let y = super::bary::renormalize(c[1..].to_vec());
            if min_of(&y) > 0.0 {
                return std::iter::once(0.0).chain(punctured(p, &y, sigma)).collect();
            }
        }
        c.to_vec()
    })
}

fn stage_names(n: usize, full: bool) -> Vec<String> {
    if n == 1 {
        return vec!["R1".into()];
    }
    let p = n - 1;
    let mut names = vec!["P".to_string()];
    if full {
        names.push("Q-cal".into());
        for q in (0..p).rev() {
            names.push(format!("R_{q},{}", n - q));
        }
        names.push("R_A".into());
    } else {
        names.push("Q".into());
    }
    names
}

fn swap_perm(n: usize, k: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..=n).collect();
    perm.swap(0, k);
    perm
}

fn check_horn(n: usize, k: usize) -> Result<()> {
    if n == 0 || n > MAX_HORN_DIM {
        return Err(Error::UnsupportedDimension { dim: n, max: MAX_HORN_DIM });
    }
    if k > n {
        return Err(Error::InvalidParameters(format!("horn vertex {k} out of range for Δ^{n}")));
    }
    Ok(())
}

/// Deformation of `Δ^n_k̂` onto `Λ^n_k̂` for `1 ≤ n ≤ 3`.
pub fn build_halfopen_deformation(n: usize, k: usize) -> Result<EvaluableHomotopy> {
    check_horn(n, k)?;
    let names = stage_names(n, false);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let h = EvaluableHomotopy::new(
        n,
        Subspace::HalfOpen(0),
        Subspace::HalfOpenHorn(0),
        Subspace::HalfOpenHorn(0),
        &names,
        move |x, s| half_open(n, x, s),
    );
    Ok(h.conjugate(swap_perm(n, k), Subspace::HalfOpen(k), Subspace::HalfOpenHorn(k), Subspace::HalfOpenHorn(k)))
}

/// Deformation of `Δ^n` onto `Λ^n_k` for `1 ≤ n ≤ 3`.
pub fn build_full_horn_deformation(n: usize, k: usize) -> Result<EvaluableHomotopy> {
    check_horn(n, k)?;
    let names = stage_names(n, true);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let h = EvaluableHomotopy::new(n, Subspace::Whole, Subspace::Horn(0), Subspace::Horn(0), &names, move |x, s| {
        full_horn(n, x, s)
    });
    Ok(h.conjugate(swap_perm(n, k), Subspace::Whole, Subspace::Horn(k), Subspace::Horn(k)))
}

/// Deformation of `Δ^p - {b_p}` onto `Δ̇^p` for `1 ≤ p ≤ 3`. The barycenter
/// is outside the domain and evaluation there returns it unchanged.
pub fn build_punctured_deformation(p: usize) -> Result<EvaluableHomotopy> {
    if p == 0 || p > MAX_HORN_DIM {
        return Err(Error::UnsupportedDimension { dim: p, max: MAX_HORN_DIM });
    }
    let mut names = vec!["push".to_string()];
    names.extend((0..p).rev().map(|q| format!("R_{q},{}", p - q)));
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(EvaluableHomotopy::new(p, Subspace::Whole, Subspace::Boundary, Subspace::Boundary, &names, move |x, s| {
        punctured(p, x, s)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::bary::grid_f64;

    #[test]
    fn interval_retracts_to_its_vertex() {
        let h = build_halfopen_deformation(1, 0).unwrap();
        for t in [0.0, 0.3, 0.99] {
            assert_eq!(h.eval_raw(&[1.0 - t, t], 1.0), vec![1.0, 0.0]);
        }
        let h = build_full_horn_deformation(1, 1).unwrap();
        assert_eq!(h.eval_raw(&[0.4, 0.6], 1.0), vec![0.0, 1.0]);
    }

    #[test]
    fn punctured_simplices_land_on_the_boundary() {
        for p in 1..=3 {
            let h = build_punctured_deformation(p).unwrap();
            let b = 1.0 / (p + 1) as f64;
            for x in grid_f64(p, 20) {
                if x.coords().iter().all(|v| (v - b).abs() < 1e-12) {
                    continue;
                }
                let y = h.eval_raw(x.coords(), 1.0);
                assert!(min_of(&y) <= 1e-9, "p={p} x={:?} -> {y:?}", x.coords());
            }
        }
    }

    #[test]
    fn full_horns_land_in_the_horn() {
        for n in 1..=3 {
            for k in 0..=n {
                let h = build_full_horn_deformation(n, k).unwrap();
                for x in grid_f64(n, 12) {
                    let y = h.eval_raw(x.coords(), 1.0);
                    assert!(Subspace::Horn(k).contains(&y, 1e-9), "n={n} k={k} x={:?} -> {y:?}", x.coords());
                }
            }
        }
    }

    #[test]
    fn unsupported_dimensions() {
        assert!(matches!(build_full_horn_deformation(4, 0), Err(Error::UnsupportedDimension { .. })));
        assert!(build_halfopen_deformation(2, 3).is_err());
    }
}
