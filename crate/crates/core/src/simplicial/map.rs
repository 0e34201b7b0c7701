use std::sync::Arc;

use crate::error::{Error, Result};

use super::complex::FiniteSimplicialSet;
use super::simplex::{Simplex, SimplexId};

/// A simplicial map, determined by the images of the nondegenerate simplices
/// of its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<FiniteSimplicialSet>,
    target: Arc<FiniteSimplicialSet>,
    assignment: Vec<Simplex>,
}

impl SimplicialMap {
    /// Checks dimensions and compatibility with every face operator.
    pub fn new(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        assignment: Vec<Simplex>,
    ) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::NotSimplicial(format!(
                "assignment has {} entries for {} simplices",
                assignment.len(),
                source.len()
            )));
        }
        for (id, img) in assignment.iter().enumerate() {
            if img.base >= target.len() || img.dim() != source.dim(id) {
                return Err(Error::NotSimplicial(format!("bad image for simplex {id}")));
            }
        }
        let map = SimplicialMap { source, target, assignment };
        for id in map.source.ids() {
            let d = map.source.dim(id);
            if d == 0 {
                continue;
            }
            for i in 0..=d {
                let lhs = map.apply(map.source.stored_face(id, i));
                let rhs = map.target.face(&map.assignment[id], i);
                if lhs != rhs {
                    return Err(Error::NotSimplicial(format!("does not commute with d_{i} on simplex {id}")));
                }
            }
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        assignment: Vec<Simplex>,
    ) -> Self {
        SimplicialMap { source, target, assignment }
    }

    pub fn identity(x: Arc<FiniteSimplicialSet>) -> Self {
        let assignment = x.ids().map(|id| x.simplex(id)).collect();
        SimplicialMap { source: x.clone(), target: x, assignment }
    }

    pub fn source(&self) -> &Arc<FiniteSimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSimplicialSet> {
        &self.target
    }

    pub fn assignment(&self) -> &[Simplex] {
        &self.assignment
    }

    pub fn image_of(&self, id: SimplexId) -> &Simplex {
        &self.assignment[id]
    }

    /// Image of an arbitrary (possibly degenerate) simplex of the source.
    pub fn apply(&self, x: &Simplex) -> Simplex {
        let img = &self.assignment[x.base];
        self.target.pull(img, x.degeneracy.values())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if *self.target != *other.source {
            return Err(Error::NotSimplicial("composable maps need matching middle complex".into()));
        }
        let assignment = self.assignment.iter().map(|x| other.apply(x)).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), assignment })
    }

    /// Injective on simplices: nondegenerate simplices go to distinct
    /// nondegenerate simplices.
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.assignment.iter().all(|x| !x.is_degenerate() && seen.insert(x.base))
    }

    /// Equality of the underlying assignments (sources and targets compared
    /// structurally).
    pub fn same_as(&self, other: &SimplicialMap) -> bool {
        *self.source == *other.source && *self.target == *other.target && self.assignment == other.assignment
    }
}
