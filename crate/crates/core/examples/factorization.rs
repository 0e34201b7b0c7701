//! Factoring a map by gluing cells along its unsolved lifting problems.

use std::sync::Arc;

use diffeomodel::model::{igc_factor, GeneratingSet, GeneratorKind};
use diffeomodel::simplicial::{boundary_complex, standard_simplicial_set, FiniteSimplicialSet, SimplicialMap};

fn main() {
    // ∅ -> Δ[0] against I: one vertex is glued and the factorization is done.
    let empty = Arc::new(FiniteSimplicialSet::empty());
    let pt = Arc::new(standard_simplicial_set(0));
    let f = SimplicialMap::new(empty, pt, Vec::new()).unwrap();
    let fac = igc_factor(&f, &GeneratingSet::new(GeneratorKind::I, 1), 3).unwrap();
    for st in &fac.stages {
        println!(
            "∅ -> Δ[0], stage {}: {:?} simplices, {} glued, {} open problems",
            st.n,
            st.complex.counts(),
            st.attached,
            st.residual.len()
        );
    }

    // ∂Δ[1] -> Δ[1] against J: each stage fills the horns left by the previous one.
    let inclusion = boundary_complex(1).inclusion;
    let fac = igc_factor(&inclusion, &GeneratingSet::new(GeneratorKind::J, 2), 2).unwrap();
    for st in &fac.stages {
        println!(
            "∂Δ[1] -> Δ[1], stage {}: {:?} simplices, {} glued, {} open problems, q∘j = f: {}",
            st.n,
            st.complex.counts(),
            st.attached,
            st.residual.len(),
            st.commutes_with(&inclusion)
        );
    }
}
