//! Lifting problems against the generating horn and boundary inclusions.

use std::sync::Arc;

use diffeomodel::model::{rlp_check, GeneratingSet, GeneratorKind};
use diffeomodel::simplicial::{boundary_complex, standard_simplicial_set, FiniteSimplicialSet, SimplicialMap};

fn to_point(x: FiniteSimplicialSet) -> SimplicialMap {
    let pt = Arc::new(standard_simplicial_set(0));
    let x = Arc::new(x);
    let assignment = x.ids().map(|id| pt.pull(&pt.simplex(0), &vec![0; x.dim(id) + 1])).collect();
    SimplicialMap::new(x, pt, assignment).unwrap()
}

fn main() {
    let cases = [
        ("Δ[0] -> Δ[0]", standard_simplicial_set(0), GeneratorKind::J, 3),
        ("Δ[1] -> Δ[0]", standard_simplicial_set(1), GeneratorKind::J, 2),
        ("∂Δ[1] -> Δ[0]", (*boundary_complex(1).complex).clone(), GeneratorKind::I, 2),
        ("∂Δ[2] -> Δ[0]", (*boundary_complex(2).complex).clone(), GeneratorKind::J, 2),
    ];
    for (name, x, kind, max_dim) in cases {
        let report = rlp_check(&to_point(x), &GeneratingSet::new(kind, max_dim));
        print!("{name} against {kind:?} up to dimension {max_dim}: {} squares, ", report.squares);
        match report.failures.first() {
            None => println!("every square lifts"),
            Some(first) => {
                println!("{} without a lift, first against {}", report.failures.len(), first.generator_name())
            }
        }
    }
}
