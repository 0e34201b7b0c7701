//! Exhaustive lifting-problem search against a generating set.

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use crate::simplicial::{enumerate_simplices, FiniteSimplicialSet, MapSearch, Simplex, SimplexId, SimplicialMap};

use super::generating::{GeneratingSet, Generator};

/// A commutative square from a generator `A -> Δ[p]` to `f: X -> Y`, with
/// the bottom map given by the `p`-simplex of `Y` it picks out.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LiftingProblem {
    pub p: usize,
    pub k: Option<usize>,
    /// Images in `X` of the nondegenerate simplices of `A`.
    pub top: Vec<Simplex>,
    /// The `p`-simplex of `Y`.
    pub bottom: Simplex,
}

/// JSON view of a problem.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProblemJson {
    pub generator: String,
    pub top: Vec<(Vec<usize>, SimplexId)>,
    pub bottom: (Vec<usize>, SimplexId),
}

impl LiftingProblem {
    pub fn generator_name(&self) -> String {
        match self.k {
            Some(k) => format!("horn({},{k})", self.p),
            None => format!("boundary({})", self.p),
        }
    }

    pub fn to_json(&self) -> ProblemJson {
        ProblemJson {
            generator: self.generator_name(),
            top: self.top.iter().map(Simplex::to_pair).collect(),
            bottom: self.bottom.to_pair(),
        }
    }
}

/// Outcome of [`rlp_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct RlpReport {
    pub squares: usize,
    /// Unsolvable squares, ordered by `(p, k, top, bottom)`.
    pub failures: Vec<LiftingProblem>,
}

impl RlpReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The simplicial map `Δ[p] -> Y` picking out the `p`-simplex `y`.
/// `delta` must be a labelled standard simplex `Δ[p]`.
pub fn yoneda_map(
    delta: &Arc<FiniteSimplicialSet>,
    y_complex: &Arc<FiniteSimplicialSet>,
    y: &Simplex,
) -> SimplicialMap {
    let assignment = delta.ids().map(|id| y_complex.pull(y, delta.label(id).expect("labelled"))).collect();
    SimplicialMap::new(delta.clone(), y_complex.clone(), assignment).expect("restriction of a simplex")
}

/// A `p`-simplex of `X` whose restriction to `A` is `top`, if one exists
/// with image `bottom` under `f`.
pub fn find_lift(gen: &Generator, f: &SimplicialMap, top: &[Simplex], bottom: &Simplex) -> Option<Simplex> {
    let a = &gen.inclusion.complex;
    let x = f.source();
    enumerate_simplices(x, gen.p).into_iter().find(|cand| {
        f.apply(cand) == *bottom && a.ids().all(|id| x.pull(cand, a.label(id).expect("labelled")) == top[id])
    })
}

/// Calls `visit(generator, top, bottom)` for every commutative square.
pub(crate) fn for_each_square(
    f: &SimplicialMap,
    gens: &GeneratingSet,
    mut visit: impl FnMut(&Generator, &[Simplex], &Simplex),
) {
    let (x, y) = (f.source(), f.target());
    for gen in gens.generators() {
        let a = &gen.inclusion.complex;
        for bottom in enumerate_simplices(y, gen.p) {
            let required: Vec<Simplex> = a.ids().map(|id| y.pull(&bottom, a.label(id).expect("labelled"))).collect();
            MapSearch::new(a, x).allow(|id, cand| f.apply(cand) == required[id]).run::<()>(|top| {
                visit(&gen, top, &bottom);
                ControlFlow::Continue(())
            });
        }
    }
}

/// Enumerates every square from a generator into `f` and searches each for a
/// diagonal lift.
pub fn rlp_check(f: &SimplicialMap, gens: &GeneratingSet) -> RlpReport {
    let mut squares = 0;
    let mut failures = Vec::new();
    for_each_square(f, gens, |gen, top, bottom| {
        squares += 1;
        if find_lift(gen, f, top, bottom).is_none() {
            failures.push(LiftingProblem { p: gen.p, k: gen.k, top: top.to_vec(), bottom: bottom.clone() });
        }
    });
    failures.sort();
    RlpReport { squares, failures }
}
