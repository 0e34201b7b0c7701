//! Components and edge-group rank, before and after gluing a 2-simplex along a horn.

use std::sync::Arc;

use diffeomodel::model::{edge_group_rank, pi0};
use diffeomodel::simplicial::{boundary_complex, horn_complex, pushout, MapSearch, SimplicialMap};

fn main() {
    let circle = boundary_complex(2).complex;
    let rank = edge_group_rank(&circle).unwrap();
    println!("∂Δ[2]: {} component, rank {} (χ = {})", pi0(&circle).count, rank.rank, circle.euler_characteristic());

    let horn = horn_complex(2, 1).unwrap();
    let maps = MapSearch::new(&horn.complex, &circle).collect_all();
    let injective = maps
        .into_iter()
        .map(|a| SimplicialMap::new(horn.complex.clone(), circle.clone(), a).unwrap())
        .find(SimplicialMap::is_injective)
        .expect("Λ[2,1] embeds in ∂Δ[2]");
    let filled = pushout(&horn.inclusion, &injective).unwrap();
    let glued: Arc<_> = filled.complex;
    println!(
        "after gluing Δ[2] along Λ[2,1]: {} component, rank {}, counts {:?}",
        pi0(&glued).count,
        edge_group_rank(&glued).unwrap().rank,
        glued.counts()
    );
}
