//! Standard simplices, boundaries, horns, cones and pushouts along inclusions.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::complex::{Builder, FiniteSimplicialSet};
use super::map::SimplicialMap;
use super::simplex::{Simplex, SimplexId, Surjection};

/// A subcomplex together with its inclusion into an ambient complex.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    pub complex: Arc<FiniteSimplicialSet>,
    pub ambient: Arc<FiniteSimplicialSet>,
    pub inclusion: SimplicialMap,
}

/// Strictly increasing `(k+1)`-subsequences of `0..=p`, lexicographic.
fn increasing_sequences(p: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=p {
            cur.push(v);
            rec(v + 1, p, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p, k + 1, &mut Vec::new(), &mut out);
    out
}

/// Builds the subcomplex of `Δ[p]` whose nondegenerate simplices are the
/// vertex sequences accepted by `keep`. The accepted set must be closed
/// under taking faces.
fn labelled_complex(p: usize, keep: impl Fn(&[usize]) -> bool) -> Result<FiniteSimplicialSet> {
    let mut builder = Builder::new();
    let mut index: HashMap<Vec<usize>, SimplexId> = HashMap::new();
    for k in 0..=p {
        for seq in increasing_sequences(p, k) {
            if !keep(&seq) {
                continue;
            }
            let mut faces = Vec::new();
            if k > 0 {
                for i in 0..=k {
                    let mut f = seq.clone();
                    f.remove(i);
                    let id = *index
                        .get(&f)
                        .ok_or_else(|| Error::MalformedComplex(format!("face {f:?} of {seq:?} is missing")))?;
                    faces.push(Simplex::nondegenerate(id, k - 1));
                }
            }
            let id = builder.add(k, faces, Some(seq.clone()));
            index.insert(seq, id);
        }
    }
    if builder.is_empty() {
        return Ok(FiniteSimplicialSet::empty().with_labels(Some(Vec::new())));
    }
    builder.build()
}

/// `Δ[p]`: nondegenerate `k`-simplices are the increasing `(k+1)`-subsets of
/// `{0,…,p}`, each labelled by its vertex sequence.
pub fn standard_simplicial_set(p: usize) -> FiniteSimplicialSet {
    labelled_complex(p, |_| true).expect("Δ[p] is closed under faces")
}

/// Subcomplex of `Δ[p]` given by a face-closed predicate on vertex sequences.
pub fn subcomplex_of_standard(p: usize, keep: impl Fn(&[usize]) -> bool) -> Result<Subcomplex> {
    let ambient = Arc::new(standard_simplicial_set(p));
    let complex = Arc::new(labelled_complex(p, keep)?);
    let assignment = complex
        .ids()
        .map(|id| {
            let label = complex.label(id).expect("labelled");
            let target = ambient.id_of_label(label).expect("label exists in Δ[p]");
            Simplex::nondegenerate(target, complex.dim(id))
        })
        .collect();
    let inclusion = SimplicialMap::new(complex.clone(), ambient.clone(), assignment)?;
    Ok(Subcomplex { complex, ambient, inclusion })
}

/// `∂Δ[p]`, all proper faces. For `p = 0` this is empty.
pub fn boundary_complex(p: usize) -> Subcomplex {
    subcomplex_of_standard(p, |s| s.len() <= p).expect("boundary is face closed")
}

/// `Λ[p,k]`: all proper faces except the one opposite vertex `k`.
pub fn horn_complex(p: usize, k: usize) -> Result<Subcomplex> {
    if p == 0 || k > p {
        return Err(Error::InvalidParameters(format!("no horn Λ[{p},{k}]")));
    }
    subcomplex_of_standard(p, |s| s.len() <= p && !(s.len() == p && !s.contains(&k)))
}

/// Cone with apex as vertex `(0)`: the apex, the simplices of `L`, and one
/// cone `(n+1)`-simplex over every nondegenerate `n`-simplex of `L`.
pub fn cone(l: &FiniteSimplicialSet) -> FiniteSimplicialSet {
    let n = l.len();
    let shift = |id: SimplexId| id + 1;
    let cone_id = |id: SimplexId| id + 1 + n;
    let mut dims = Vec::with_capacity(2 * n + 1);
    let mut faces = Vec::with_capacity(2 * n + 1);
    dims.push(0);
    faces.push(Vec::new());
    for id in l.ids() {
        dims.push(l.dim(id));
        let fs = if l.dim(id) == 0 {
            Vec::new()
        } else {
            (0..=l.dim(id))
                .map(|i| {
                    let f = l.stored_face(id, i);
                    Simplex { degeneracy: f.degeneracy.clone(), base: shift(f.base) }
                })
                .collect()
        };
        faces.push(fs);
    }
    for id in l.ids() {
        let d = l.dim(id);
        dims.push(d + 1);
        let mut fs = vec![Simplex::nondegenerate(shift(id), d)];
        if d == 0 {
            fs.push(Simplex::nondegenerate(0, 0));
        } else {
            for i in 1..=d + 1 {
                let f = l.stored_face(id, i - 1);
                let mut values = vec![0];
                values.extend(f.degeneracy.values().iter().map(|v| v + 1));
                fs.push(Simplex {
                    degeneracy: Surjection::from_values(values).expect("shifted surjection"),
                    base: cone_id(f.base),
                });
            }
        }
        faces.push(fs);
    }
    let labels = l.labels().map(|ls| {
        let mut out = vec![vec![0]];
        out.extend(ls.iter().map(|s| s.iter().map(|v| v + 1).collect::<Vec<_>>()));
        out.extend(ls.iter().map(|s| {
            let mut c = vec![0];
            c.extend(s.iter().map(|v| v + 1));
            c
        }));
        out
    });
    FiniteSimplicialSet::from_parts(dims, faces, labels).expect("cone satisfies the simplicial identities")
}

/// Pushout `X ∪_A B` of an injective `f: A -> X` and arbitrary `g: A -> B`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub complex: Arc<FiniteSimplicialSet>,
    /// Cocone leg `X -> X ∪_A B`.
    pub from_x: SimplicialMap,
    /// Cocone leg `B -> X ∪_A B`; keeps the ids of `B`.
    pub from_b: SimplicialMap,
    new_ids: HashMap<SimplexId, SimplexId>,
}

pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if *f.source() != *g.source() {
        return Err(Error::InvalidParameters("pushout legs must share their source".into()));
    }
    if !f.is_injective() {
        return Err(Error::InvalidParameters("pushouts are only formed along injective maps".into()));
    }
    let x = f.target().clone();
    let b = g.target().clone();
    let preimage: HashMap<SimplexId, SimplexId> = f.assignment().iter().enumerate().map(|(a, s)| (s.base, a)).collect();

    let mut dims: Vec<usize> = b.ids().map(|id| b.dim(id)).collect();
    let mut faces: Vec<Vec<Simplex>> = b
        .ids()
        .map(|id| (0..if b.dim(id) == 0 { 0 } else { b.dim(id) + 1 }).map(|i| b.stored_face(id, i).clone()).collect())
        .collect();

    let mut new_ids = HashMap::new();
    for sigma in x.ids().filter(|id| !preimage.contains_key(id)) {
        new_ids.insert(sigma, b.len() + new_ids.len());
    }
    let translate = |s: &Simplex| -> Simplex {
        match preimage.get(&s.base) {
            Some(&a) => b.pull(g.image_of(a), s.degeneracy.values()),
            None => Simplex { degeneracy: s.degeneracy.clone(), base: new_ids[&s.base] },
        }
    };
    let mut order: Vec<SimplexId> = new_ids.keys().copied().collect();
    order.sort_by_key(|id| new_ids[id]);
    for sigma in order {
        let d = x.dim(sigma);
        dims.push(d);
        let fs = if d == 0 { Vec::new() } else { (0..=d).map(|i| translate(x.stored_face(sigma, i))).collect() };
        faces.push(fs);
    }
    let complex = Arc::new(FiniteSimplicialSet::from_parts(dims, faces, None)?);
    let from_b = SimplicialMap::new_unchecked(b.clone(), complex.clone(), b.ids().map(|id| b.simplex(id)).collect());
    let from_x_assign = x.ids().map(|id| translate(&x.simplex(id))).collect();
    let from_x = SimplicialMap::new(x.clone(), complex.clone(), from_x_assign)?;
    Ok(Pushout { complex, from_x, from_b, new_ids })
}

impl Pushout {
    /// The unique map out of the pushout induced by a cocone `(u, v)` with
    /// `u: X -> Z`, `v: B -> Z`.
    pub fn induced(&self, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap> {
        if *u.target() != *v.target() {
            return Err(Error::InvalidParameters("cocone legs need a common target".into()));
        }
        let mut assignment: Vec<Simplex> = v.assignment().to_vec();
        let mut extra: Vec<(SimplexId, Simplex)> =
            self.new_ids.iter().map(|(&xid, &pid)| (pid, u.image_of(xid).clone())).collect();
        extra.sort_by_key(|(pid, _)| *pid);
        assignment.extend(extra.into_iter().map(|(_, s)| s));
        SimplicialMap::new(self.complex.clone(), u.target().clone(), assignment)
    }
}
