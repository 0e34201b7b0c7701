//! The maps behind concatenating based p-simplices.

use diffeomodel::geometry::bary::ratio;
use diffeomodel::geometry::{beta, concat_product, gamma, Bary, PointedMap};

fn main() {
    let x = Bary::new(vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]).unwrap();
    let show = |b: &Bary<_>| b.coords().iter().map(ToString::to_string).collect::<Vec<_>>();
    println!("β(x, 0) = {:?}", show(&beta(&x, &ratio(0, 1))));
    println!("β(x, 1) = {:?}", show(&beta(&x, &ratio(1, 1))));
    let y = Bary::new(vec![ratio(1, 5), ratio(1, 5), ratio(1, 5), ratio(2, 5)]).unwrap();
    let (side, g) = gamma(&y).unwrap();
    println!("γ{:?} = {:?} on the {side:?} face", show(&y), show(&g));

    let f = PointedMap::collapsed_near_boundary(2, vec![0.0], 0.05, |x| vec![x[0] * x[1]]);
    let h = PointedMap::collapsed_near_boundary(2, vec![0.0], 0.05, |x| vec![-x[2]]);
    let sum = concat_product(&f, &h).unwrap();
    for p in [[1.0 / 3.0; 3], [0.6, 0.2, 0.2], [0.2, 0.2, 0.6]] {
        println!("(f + g)({p:.2?}) = {:.4?}", sum.eval(&p));
    }
}
