//! The homotopy that pushes a collar of ∂Δᵖ onto the boundary while fixing
//! the barycenter.

use diffeomodel::geometry::build_boundary_homotopy_t;

fn main() {
    let eps = 0.15;
    for p in 1..=3 {
        let t = build_boundary_homotopy_t(p, eps).unwrap();
        let mut near = vec![0.9 / p as f64; p + 1];
        near[0] = 0.1;
        let b = vec![1.0 / (p + 1) as f64; p + 1];
        println!("p = {p}: {near:.3?} -> {:.3?}; barycenter -> {:.3?}", t.eval_raw(&near, 1.0), t.eval_raw(&b, 1.0));
    }
}
