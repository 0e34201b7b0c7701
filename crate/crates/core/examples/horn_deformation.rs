//! Deforms Δ² onto the horn Λ²₁ and follows a few points through the stages.

use diffeomodel::geometry::build_full_horn_deformation;
use diffeomodel::model::fill_horn_numeric;

fn main() {
    let (p, k) = (2, 1);
    let h = build_full_horn_deformation(p, k).unwrap();
    let names: Vec<&str> = h.stages().iter().map(|s| s.name.as_str()).collect();
    println!("stages of the deformation onto Λ[{p},{k}]: {names:?}");

    for x in [[1.0 / 3.0; 3], [0.6, 0.3, 0.1], [0.05, 0.9, 0.05], [0.5, 0.0, 0.5]] {
        print!("{x:.3?}");
        for s in [0.25, 0.5, 0.75, 1.0] {
            print!(" -> {:.3?} ({})", h.eval_raw(&x, s), h.stage_at(s));
        }
        println!();
    }

    // A map defined on the horn extends to the whole simplex through the retraction.
    let g = |x: &[f64]| vec![x[0] - x[2], x[1] * x[1]];
    let filled = fill_horn_numeric(g, p, k).unwrap();
    println!("extension at the barycenter: {:.4?}", filled(&[1.0 / 3.0; 3]));
    println!("on the horn it agrees with g: {:?} vs {:?}", filled(&[0.2, 0.8, 0.0]), g(&[0.2, 0.8, 0.0]));
}
