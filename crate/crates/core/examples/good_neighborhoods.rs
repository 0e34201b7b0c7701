//! Good neighborhoods of the faces of Δ³ and their product charts.

use diffeomodel::geometry::bary::ratio;
use diffeomodel::geometry::{good_nbhd_phi, good_nbhd_phi_inverse, in_good_neighborhood, Bary, FaceIndex};

fn main() {
    let x = Bary::new(vec![ratio(9, 20), ratio(8, 20), ratio(2, 20), ratio(1, 20)]).unwrap();
    let eps = ratio(1, 5);
    for face in FaceIndex::all_proper(3) {
        if !in_good_neighborhood(&x, &face, &eps) {
            continue;
        }
        let (u, v) = good_nbhd_phi(&face, &x).unwrap();
        let back = good_nbhd_phi_inverse(&face, &u, &v).unwrap();
        println!(
            "I = {:?}: u = {:?}, v = {:?}, round trip exact: {}",
            face.inside(),
            u.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
            v.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
            back == x
        );
    }
}
