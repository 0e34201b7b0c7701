//! Brute-force enumeration: all simplices of a given dimension, all simplicial
//! maps between finite complexes, and horn-filling checks.

use std::ops::ControlFlow;

use serde::Serialize;

use super::complex::FiniteSimplicialSet;
use super::constructions::horn_complex;
use super::simplex::{surjections, Simplex, SimplexId};

/// All `n`-simplices of `x`, degenerate ones included, as Eilenberg–Zilber
/// pairs. Ordered by base dimension, then base id, then word.
pub fn enumerate_simplices(x: &FiniteSimplicialSet, n: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    for m in 0..=n {
        let surj = surjections(n, m);
        for &base in x.nondegenerate(m) {
            out.extend(surj.iter().map(|s| Simplex { degeneracy: s.clone(), base }));
        }
    }
    out
}

/// Backtracking search for simplicial maps `source -> target`.
///
/// `fixed` pins the images of some nondegenerate source simplices; `allow`
/// filters candidate images per simplex.
pub struct MapSearch<'a> {
    source: &'a FiniteSimplicialSet,
    target: &'a FiniteSimplicialSet,
    fixed: Vec<Option<Simplex>>,
    allow: Option<Box<dyn Fn(SimplexId, &Simplex) -> bool + 'a>>,
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &'a FiniteSimplicialSet, target: &'a FiniteSimplicialSet) -> Self {
        MapSearch { source, target, fixed: vec![None; source.len()], allow: None }
    }

    pub fn fix(mut self, id: SimplexId, image: Simplex) -> Self {
        self.fixed[id] = Some(image);
        self
    }

    pub fn allow(mut self, f: impl Fn(SimplexId, &Simplex) -> bool + 'a) -> Self {
        self.allow = Some(Box::new(f));
        self
    }

    /// Calls `visit` on every valid assignment until it breaks.
    pub fn run<B>(&self, mut visit: impl FnMut(&[Simplex]) -> ControlFlow<B>) -> Option<B> {
        let mut order: Vec<SimplexId> = self.source.ids().collect();
        order.sort_by_key(|&id| (self.source.dim(id), id));
        let max = self.source.max_dim().unwrap_or(0);
        let tables: Vec<Vec<Simplex>> = (0..=max).map(|d| enumerate_simplices(self.target, d)).collect();
        let mut current: Vec<Option<Simplex>> = vec![None; self.source.len()];
        match self.rec(0, &order, &tables, &mut current, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn consistent(&self, id: SimplexId, cand: &Simplex, current: &[Option<Simplex>]) -> bool {
        let d = self.source.dim(id);
        if let Some(allow) = &self.allow {
            if !allow(id, cand) {
                return false;
            }
        }
        if d == 0 {
            return true;
        }
        (0..=d).all(|i| {
            let f = self.source.stored_face(id, i);
            let img = current[f.base].as_ref().expect("faces assigned first");
            self.target.pull(img, f.degeneracy.values()) == self.target.face(cand, i)
        })
    }

    fn rec<B>(
        &self,
        pos: usize,
        order: &[SimplexId],
        tables: &[Vec<Simplex>],
        current: &mut Vec<Option<Simplex>>,
        visit: &mut impl FnMut(&[Simplex]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if pos == order.len() {
            let full: Vec<Simplex> = current.iter().map(|s| s.clone().expect("complete")).collect();
            return visit(&full);
        }
        let id = order[pos];
        if let Some(img) = &self.fixed[id] {
            if self.consistent(id, img, current) {
                current[id] = Some(img.clone());
                self.rec(pos + 1, order, tables, current, visit)?;
                current[id] = None;
            }
            return ControlFlow::Continue(());
        }
        for cand in &tables[self.source.dim(id)] {
            if self.consistent(id, cand, current) {
                current[id] = Some(cand.clone());
                self.rec(pos + 1, order, tables, current, visit)?;
                current[id] = None;
            }
        }
        ControlFlow::Continue(())
    }

    pub fn collect_all(&self) -> Vec<Vec<Simplex>> {
        let mut out = Vec::new();
        self.run::<()>(|a| {
            out.push(a.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn find_one(&self) -> Option<Vec<Simplex>> {
        self.run(|a| ControlFlow::Break(a.to_vec()))
    }
}

/// Fillability summary for the horns `Λ[p,k] -> X` of one `(p,k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HornReport {
    pub p: usize,
    pub k: usize,
    pub horn_maps: usize,
    pub unfillable: usize,
    /// First unfillable horn map, as `(word, target)` pairs per horn simplex.
    pub witness: Option<Vec<(Vec<usize>, SimplexId)>>,
}

impl HornReport {
    pub fn fillable(&self) -> bool {
        self.unfillable == 0
    }
}

/// Whether some `p`-simplex of `x` has the faces prescribed by a horn map.
pub fn fill_horn(x: &FiniteSimplicialSet, p: usize, k: usize, horn_faces: &[Option<Simplex>]) -> Option<Simplex> {
    enumerate_simplices(x, p)
        .into_iter()
        .find(|cand| (0..=p).filter(|&i| i != k).all(|i| horn_faces[i].as_ref() == Some(&x.face(cand, i))))
}

/// For every `1 ≤ p ≤ n_max` and `0 ≤ k ≤ p`, enumerates all maps
/// `Λ[p,k] -> x` and checks each for a filler.
pub fn is_kan_up_to(x: &FiniteSimplicialSet, n_max: usize) -> Vec<HornReport> {
    let mut out = Vec::new();
    for p in 1..=n_max {
        for k in 0..=p {
            let horn = horn_complex(p, k).expect("valid horn");
            let h = &horn.complex;
            let codim_one: Vec<Option<SimplexId>> = (0..=p)
                .map(|i| {
                    let label: Vec<usize> = (0..=p).filter(|&v| v != i).collect();
                    h.id_of_label(&label)
                })
                .collect();
            let mut report = HornReport { p, k, horn_maps: 0, unfillable: 0, witness: None };
            MapSearch::new(h, x).run::<()>(|assignment| {
                report.horn_maps += 1;
                let faces: Vec<Option<Simplex>> =
                    codim_one.iter().map(|id| id.map(|id| assignment[id].clone())).collect();
                if fill_horn(x, p, k, &faces).is_none() {
                    report.unfillable += 1;
                    if report.witness.is_none() {
                        report.witness = Some(assignment.iter().map(Simplex::to_pair).collect());
                    }
                }
                ControlFlow::Continue(())
            });
            out.push(report);
        }
    }
    out
}
