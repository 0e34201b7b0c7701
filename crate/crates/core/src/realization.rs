//! Points of geometric realizations `|K|` in Eilenberg–Zilber normal form.
//!
//! A point is stored as a nondegenerate simplex together with strictly
//! positive barycentric coordinates, which makes equality of points a plain
//! structural comparison.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::bary::{Bary, Rational, Scalar};
use crate::simplicial::{FiniteSimplicialSet, Simplex, SimplexId, SimplicialMap};

/// A point `(σ, u)` of `|K|` with `σ` nondegenerate and `u` interior.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoint<T: Scalar = Rational> {
    pub sigma: SimplexId,
    pub u: Bary<T>,
}

impl<T: Scalar> RealPoint<T> {
    pub fn vertex(v: SimplexId) -> Self {
        RealPoint { sigma: v, u: Bary::vertex(0, 0) }
    }

    pub fn dim(&self) -> usize {
        self.u.dim()
    }

    pub fn to_json(&self) -> RealPointJson {
        RealPointJson { simplex: self.sigma, coords: self.u.to_f64().into_coords() }
    }
}

/// `{"simplex": id, "coords": [..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealPointJson {
    pub simplex: SimplexId,
    pub coords: Vec<f64>,
}

impl RealPointJson {
    /// Reads a point and brings it to normal form in `k`.
    pub fn to_point(&self, k: &FiniteSimplicialSet) -> Result<RealPoint<f64>> {
        if self.simplex >= k.len() {
            return Err(Error::OutOfDomain(format!("simplex {} is not in the complex", self.simplex)));
        }
        normalize(k, &k.simplex(self.simplex), &Bary::new(self.coords.clone())?)
    }
}

/// Brings `(x, u)` to normal form: coordinates are summed along the fibers
/// of the degeneracy of `x`, then restricted to the face spanned by the
/// nonzero coordinates, until the simplex is nondegenerate and `u` interior.
pub fn normalize<T: Scalar>(k: &FiniteSimplicialSet, x: &Simplex, u: &Bary<T>) -> Result<RealPoint<T>> {
    if x.base >= k.len() {
        return Err(Error::OutOfDomain(format!("simplex {} is not in the complex", x.base)));
    }
    if u.dim() != x.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), got: u.dim() });
    }
    let mut x = x.clone();
    let mut coords = u.coords().to_vec();
    loop {
        let mut summed = vec![T::zero(); x.base_dim() + 1];
        for (i, c) in coords.iter().enumerate() {
            let j = x.degeneracy.apply(i);
            summed[j] = summed[j].clone() + c.clone();
        }
        let support: Vec<usize> = (0..summed.len()).filter(|&j| summed[j] > T::zero()).collect();
        if support.len() == summed.len() {
            return Ok(RealPoint { sigma: x.base, u: Bary::new_unchecked(summed) });
        }
        coords = support.iter().map(|&j| summed[j].clone()).collect();
        x = k.pull(&k.simplex(x.base), &support);
    }
}

/// The point of `Δ^p` hit by `pt` under the map `|K| -> |Δ[p]| = Δ^p`
/// realizing `f: K -> Δ[p]`. The target must be labelled by vertex
/// sequences, as [`crate::simplicial::standard_simplicial_set`] is.
pub fn canonical_injection<T: Scalar>(f: &SimplicialMap, pt: &RealPoint<T>) -> Result<Bary<T>> {
    let source = f.source();
    if pt.sigma >= source.len() || source.dim(pt.sigma) != pt.dim() {
        return Err(Error::OutOfDomain(format!("simplex {} is not in K", pt.sigma)));
    }
    let target = f.target();
    let p = target.max_dim().unwrap_or(0);
    if target.counts().first().copied().unwrap_or(0) != p + 1 {
        return Err(Error::InvalidParameters("target is not a standard simplex".into()));
    }
    let img = f.image_of(pt.sigma);
    let mut out = vec![T::zero(); p + 1];
    for (a, v) in target.vertices(img).into_iter().enumerate() {
        let label = target.label(v).ok_or_else(|| Error::InvalidParameters("target is unlabelled".into()))?;
        out[label[0]] = out[label[0]].clone() + pt.u.get(a).clone();
    }
    Ok(Bary::new_unchecked(out))
}

/// `|f|` on one point.
pub fn realize_map<T: Scalar>(f: &SimplicialMap, pt: &RealPoint<T>) -> Result<RealPoint<T>> {
    if pt.sigma >= f.source().len() {
        return Err(Error::OutOfDomain(format!("simplex {} is not in the source", pt.sigma)));
    }
    normalize(f.target(), f.image_of(pt.sigma), &pt.u)
}

/// For one cell `σ`, the open faces of `Δ^{dim σ}` (as vertex index sets)
/// carried into the subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellPreimage {
    pub cell: SimplexId,
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberDecomposition {
    pub cells: Vec<CellPreimage>,
}

impl FiberDecomposition {
    /// Whether the point `u` of the cell lies in the recorded preimage.
    pub fn contains<T: Scalar>(&self, cell: SimplexId, u: &Bary<T>) -> bool {
        let support = u.support();
        self.cells.iter().any(|c| c.cell == cell && c.faces.contains(&support))
    }
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        (1u32..(1 << (n + 1))).map(|mask| (0..=n).filter(|&i| mask & (1 << i) != 0).collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Preimages of a subspace `B ⊆ |K|` under the characteristic maps of the
/// cells. `B` is given by a predicate on normal forms and is assumed to be a
/// union of open cells, so membership of an open face is decided at its
/// barycenter.
pub fn subcomplex_fiber_decomposition(
    k: &FiniteSimplicialSet,
    in_b: impl Fn(&RealPoint<Rational>) -> bool,
) -> FiberDecomposition {
    let cells = k
        .ids()
        .map(|cell| {
            let n = k.dim(cell);
            let faces = nonempty_subsets(n)
                .into_iter()
                .filter(|face| {
                    let mut u = vec![Rational::from_integer(0.into()); n + 1];
                    let w = Rational::new(1.into(), (face.len() as i64).into());
                    for &i in face {
                        u[i] = w.clone();
                    }
                    let pt = normalize(k, &k.simplex(cell), &Bary::new_unchecked(u)).expect("valid cell");
                    in_b(&pt)
                })
                .collect();
            CellPreimage { cell, faces }
        })
        .collect();
    FiberDecomposition { cells }
}

/// Maximal nondegenerate simplices, i.e. those that are not faces of others.
pub fn maximal_simplices(k: &FiniteSimplicialSet) -> Vec<SimplexId> {
    let mut is_face = vec![false; k.len()];
    for id in k.ids() {
        if k.dim(id) > 0 {
            for i in 0..=k.dim(id) {
                is_face[k.stored_face(id, i).base] = true;
            }
        }
    }
    k.ids().filter(|&id| !is_face[id]).collect()
}

/// Piecewise-linear curve from the barycenter of one maximal simplex through
/// a shared vertex to the barycenter of another.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingCurve {
    pub first: SimplexId,
    pub vertex_in_first: usize,
    pub second: SimplexId,
    pub vertex_in_second: usize,
}

impl CrossingCurve {
    /// `c(s)` for `s ∈ [-1, 1]`: the first half runs inside `first`, the
    /// second inside `second`, meeting at the vertex at `s = 0`.
    pub fn eval(&self, k: &FiniteSimplicialSet, s: f64) -> Result<RealPoint<f64>> {
        let (cell, v, w) =
            if s <= 0.0 { (self.first, self.vertex_in_first, -s) } else { (self.second, self.vertex_in_second, s) };
        let n = k.dim(cell);
        let b = w / (n + 1) as f64;
        let u: Vec<f64> = (0..=n).map(|i| if i == v { b + (1.0 - w) } else { b }).collect();
        normalize(k, &k.simplex(cell), &Bary::new_unchecked(u))
    }
}

/// Two maximal simplices sharing a vertex, when `K` is connected but not
/// generated by a single simplex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingleGenerationWitness {
    pub first: SimplexId,
    pub second: SimplexId,
    pub shared_vertex: SimplexId,
    pub curve: CrossingCurve,
}

/// Returns the lexicographically least pair of maximal simplices sharing a
/// vertex (ordered by vertex labels when present, ids otherwise) and the
/// least shared vertex, or `None` if `K` is empty, disconnected, or has a
/// single maximal simplex.
pub fn witness_not_single_generated(k: &FiniteSimplicialSet) -> Option<SingleGenerationWitness> {
    if k.is_empty() || k.components().len() != 1 {
        return None;
    }
    let key = |id: SimplexId| -> Vec<usize> { k.label(id).map_or_else(|| vec![id], <[usize]>::to_vec) };
    let cmp = |a: &SimplexId, b: &SimplexId| -> Ordering { key(*a).cmp(&key(*b)).then(a.cmp(b)) };
    let mut maximal = maximal_simplices(k);
    if maximal.len() < 2 {
        return None;
    }
    maximal.sort_by(cmp);
    let verts = |id: SimplexId| k.vertices(&k.simplex(id));
    for (a_pos, &a) in maximal.iter().enumerate() {
        for &b in &maximal[a_pos + 1..] {
            let (va, vb) = (verts(a), verts(b));
            let mut shared: Vec<SimplexId> = va.iter().copied().filter(|v| vb.contains(v)).collect();
            shared.sort_by(cmp);
            if let Some(&v) = shared.first() {
                let curve = CrossingCurve {
                    first: a,
                    vertex_in_first: va.iter().position(|&x| x == v).expect("shared"),
                    second: b,
                    vertex_in_second: vb.iter().position(|&x| x == v).expect("shared"),
                };
                return Some(SingleGenerationWitness { first: a, second: b, shared_vertex: v, curve });
            }
        }
    }
    None
}
