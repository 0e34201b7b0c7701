//! Points of realizations in normal form, the map |∂Δ[2]| -> Δ², and the
//! witness that a horn is not generated by a single simplex.

use diffeomodel::geometry::bary::ratio;
use diffeomodel::geometry::Bary;
use diffeomodel::realization::{
    canonical_injection, normalize, subcomplex_fiber_decomposition, witness_not_single_generated,
};
use diffeomodel::simplicial::{boundary_complex, horn_complex, Surjection};

fn main() {
    let boundary = boundary_complex(2);
    let k = &boundary.complex;
    let edge = k.nondegenerate(1)[0];

    // A degenerate 2-simplex on an edge with weights (1/4, 1/4, 1/2) collapses onto the edge.
    let degenerate =
        diffeomodel::simplicial::Simplex { degeneracy: Surjection::from_values(vec![0, 0, 1]).unwrap(), base: edge };
    let u = Bary::new(vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]).unwrap();
    let pt = normalize(k, &degenerate, &u).unwrap();
    println!(
        "normal form: simplex {} with coordinates {:?}",
        pt.sigma,
        pt.u.coords().iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    let image = canonical_injection(&boundary.inclusion, &pt).unwrap();
    println!("its image in Δ²: {:?}", image.coords().iter().map(ToString::to_string).collect::<Vec<_>>());

    // Preimages of the vertex set of |∂Δ[2]| under each characteristic map.
    let fibers = subcomplex_fiber_decomposition(k, |p| k.dim(p.sigma) == 0);
    for cell in &fibers.cells {
        println!("cell {} meets the vertices in faces {:?}", cell.cell, cell.faces);
    }

    let horn = horn_complex(2, 0).unwrap();
    let w = witness_not_single_generated(&horn.complex).expect("the horn has two maximal edges");
    println!("Λ[2,0]: maximal simplices {} and {} meet at vertex {}", w.first, w.second, w.shared_vertex);
    for s in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let p = w.curve.eval(&horn.complex, s).unwrap();
        println!("  c({s:+.1}) = simplex {} at {:.3?}", p.sigma, p.u.coords());
    }
}
