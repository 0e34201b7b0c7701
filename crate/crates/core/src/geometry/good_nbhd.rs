//! Good neighborhoods `U_I` of open faces and their product charts `Φ_I`.

use crate::error::{Error, Result};

use super::bary::{Bary, Scalar};

/// A proper nonempty vertex subset `I ⊊ {0..p}`, kept sorted, with its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceIndex {
    p: usize,
    inside: Vec<usize>,
    outside: Vec<usize>,
}

impl FaceIndex {
    pub fn new(p: usize, mut inside: Vec<usize>) -> Result<Self> {
        inside.sort_unstable();
        inside.dedup();
        if inside.is_empty() || inside.len() > p || inside.iter().any(|&i| i > p) {
            return Err(Error::InvalidParameters(format!("{inside:?} is not a proper face of Δ^{p}")));
        }
        let outside = (0..=p).filter(|k| !inside.contains(k)).collect();
        Ok(FaceIndex { p, inside, outside })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn inside(&self) -> &[usize] {
        &self.inside
    }

    pub fn outside(&self) -> &[usize] {
        &self.outside
    }

    /// Dimension `k` of the face.
    pub fn dim(&self) -> usize {
        self.inside.len() - 1
    }

    /// All faces of dimension `k` of `Δ^p`, lexicographically.
    pub fn all_of_dim(p: usize, k: usize) -> Vec<FaceIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, p: usize, need: usize, cur: &mut Vec<usize>, out: &mut Vec<FaceIndex>) {
            if cur.len() == need {
                out.push(FaceIndex::new(p, cur.clone()).expect("proper face"));
                return;
            }
            for v in start..=p {
                cur.push(v);
                rec(v + 1, p, need, cur, out);
                cur.pop();
            }
        }
        if k < p {
            rec(0, p, k + 1, &mut cur, &mut out);
        }
        out
    }

    /// Every proper face of `Δ^p`.
    pub fn all_proper(p: usize) -> Vec<FaceIndex> {
        (0..p).flat_map(|k| Self::all_of_dim(p, k)).collect()
    }
}

fn check_dim<T: Scalar>(face: &FaceIndex, x: &Bary<T>) -> Result<()> {
    if x.dim() != face.p {
        return Err(Error::DimensionMismatch { expected: face.p, got: x.dim() });
    }
    Ok(())
}

/// `Φ_I(x) = (u, v)` with `u = x_I / S` in the open face and
/// `v = (S, x_{j_1}, ...)` over the complement, where `S = Σ_{i∈I} x_i`.
pub fn good_nbhd_phi<T: Scalar>(face: &FaceIndex, x: &Bary<T>) -> Result<(Bary<T>, Bary<T>)> {
    check_dim(face, x)?;
    if face.inside.iter().any(|&i| !(*x.get(i) > T::zero())) {
        return Err(Error::OutOfDomain(format!("point has a zero coordinate in {:?}", face.inside)));
    }
    let s = face.inside.iter().fold(T::zero(), |a, &i| a + x.get(i).clone());
    let u = face.inside.iter().map(|&i| x.get(i).clone() / s.clone()).collect();
    let v = std::iter::once(s).chain(face.outside.iter().map(|&j| x.get(j).clone())).collect();
    Ok((Bary::new_unchecked(u), Bary::new_unchecked(v)))
}

/// Inverse of [`good_nbhd_phi`]: `x_{i_a} = v_0 u_a`, `x_{j_b} = v_b`.
pub fn good_nbhd_phi_inverse<T: Scalar>(face: &FaceIndex, u: &Bary<T>, v: &Bary<T>) -> Result<Bary<T>> {
    if u.dim() != face.dim() || v.dim() != face.outside.len() {
        return Err(Error::DimensionMismatch { expected: face.dim(), got: u.dim() });
    }
    if !u.is_interior() || !(*v.get(0) > T::zero()) {
        return Err(Error::OutOfDomain("Φ_I^{-1} needs interior u and v_0 > 0".into()));
    }
    let mut x = vec![T::zero(); face.p + 1];
    for (a, &i) in face.inside.iter().enumerate() {
        x[i] = v.get(0).clone() * u.get(a).clone();
    }
    for (b, &j) in face.outside.iter().enumerate() {
        x[j] = v.get(b + 1).clone();
    }
    Ok(Bary::new_unchecked(x))
}

/// `x ∈ U_I(ε)`: every `x_i`, `i ∈ I`, is positive and their sum exceeds `1 - ε`.
pub fn in_good_neighborhood<T: Scalar>(x: &Bary<T>, face: &FaceIndex, eps: &T) -> bool {
    if x.dim() != face.p || face.inside.iter().any(|&i| !(*x.get(i) > T::zero())) {
        return false;
    }
    let s = face.inside.iter().fold(T::zero(), |a, &i| a + x.get(i).clone());
    s > T::one() - eps.clone()
}
