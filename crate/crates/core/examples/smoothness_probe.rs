//! Finite-difference probes through the cone charts: an affine map passes,
//! a map with a crease fails.

use diffeomodel::geometry::{smoothness_probe, AffineSimplexMap, Bary};

fn main() {
    let face = AffineSimplexMap::<f64>::face(2, 1).unwrap();
    let affine = move |x: &[f64]| face.eval(&Bary::renormalized(x.to_vec())).unwrap().into_coords();
    let smooth = smoothness_probe(&affine, 1, 2, 1e-6, 1).unwrap();
    println!(
        "d^1: Δ¹ -> Δ²: passed {}, worst discrepancy {:.2e} over {} samples",
        smooth.passed,
        smooth.max_discrepancy,
        smooth.samples.len()
    );

    let crease = |x: &[f64]| vec![(x[0] - x[1]).abs(), x[2]];
    let kinked = smoothness_probe(&crease, 2, 1, 1e-6, 1).unwrap();
    let worst = kinked.worst.as_ref().unwrap();
    println!(
        "|x0 - x1| on Δ²: passed {}, worst discrepancy {:.2e} near {:.3?}",
        kinked.passed, kinked.max_discrepancy, worst.point
    );
}
