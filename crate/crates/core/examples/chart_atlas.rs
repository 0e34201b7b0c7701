//! The cone charts of Δ² in exact arithmetic: decomposing lattice points,
//! rebuilding them, and passing between overlapping charts.

use diffeomodel::geometry::bary::{grid_rational, ratio};
use diffeomodel::geometry::chart::index_in_face;
use diffeomodel::geometry::{chart_decompose, chart_transition, phi_chart, Bary};

fn main() {
    let p = 2;
    let mut counts = vec![0usize; p + 1];
    for z in grid_rational(p, 6) {
        let d = (0..=p).find_map(|i| chart_decompose(&z, i).ok()).expect("every point is in some chart");
        assert_eq!(phi_chart(d.i, &d.x, &d.t).unwrap(), z);
        counts[d.i] += 1;
    }
    println!("lattice points by first chart: {counts:?}");

    let z = Bary::new(vec![ratio(1, 6), ratio(1, 3), ratio(1, 2)]).unwrap();
    for i in 0..=p {
        let d = chart_decompose(&z, i).unwrap();
        println!("chart {i}: x = {:?}, t = {}", d.x.coords().iter().map(ToString::to_string).collect::<Vec<_>>(), d.t);
    }

    let (i, j) = (0, 2);
    let y = Bary::vertex(0, 0);
    let (tau, t) = (ratio(1, 3), ratio(3, 4));
    let lhs = phi_chart(i, &phi_chart(index_in_face(i, j), &y, &tau).unwrap(), &t).unwrap();
    let (y2, tau2, t2) = chart_transition(i, j, &y, &tau, &t).unwrap();
    let rhs = phi_chart(j, &phi_chart(index_in_face(j, i), &y2, &tau2).unwrap(), &t2).unwrap();
    println!("transition {i} -> {j}: (τ, t) = ({tau}, {t}) becomes ({tau2}, {t2}); same point: {}", lhs == rhs);
}
