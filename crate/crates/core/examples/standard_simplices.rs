//! Builds the standard simplices, their horns and boundaries, and checks
//! which of them satisfy the Kan condition in low dimensions.

use diffeomodel::simplicial::{boundary_complex, cone, horn_complex, is_kan_up_to, standard_simplicial_set};

fn main() {
    for p in 0..=3 {
        let delta = standard_simplicial_set(p);
        let boundary = boundary_complex(p);
        println!("Δ[{p}]: {:?} nondegenerate simplices, ∂Δ[{p}]: {:?}", delta.counts(), boundary.complex.counts());
    }

    let horn = horn_complex(2, 1).unwrap();
    println!("Λ[2,1] has {:?} simplices, cone on it has {:?}", horn.complex.counts(), cone(&horn.complex).counts());

    for (name, x) in [("Δ[1]", standard_simplicial_set(1)), ("∂Δ[2]", (*boundary_complex(2).complex).clone())] {
        let reports = is_kan_up_to(&x, 2);
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| !r.fillable())
            .map(|r| format!("Λ[{},{}] ({} of {})", r.p, r.k, r.unfillable, r.horn_maps))
            .collect();
        if bad.is_empty() {
            println!("{name}: every horn up to dimension 2 fills");
        } else {
            println!("{name}: unfillable horns {}", bad.join(", "));
        }
    }
}
