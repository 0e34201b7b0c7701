#![allow(dead_code)]

use std::sync::Arc;

use diffeomodel::geometry::{Bary, Rational};
use diffeomodel::simplicial::{
    horn_complex, pushout, standard_simplicial_set, subcomplex_of_standard, FiniteSimplicialSet, MapSearch,
    SimplicialMap, Subcomplex,
};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

/// The subcomplex of `Δ[p]` generated by `tops` random nonempty vertex sets.
pub fn random_subcomplex(rng: &mut impl Rng, p: usize, tops: usize) -> Subcomplex {
    let gens: Vec<Vec<usize>> = (0..tops)
        .map(|_| {
            let mut s: Vec<usize> = (0..=p).filter(|_| rng.gen_bool(0.5)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..=p));
            }
            s
        })
        .collect();
    subcomplex_of_standard(p, |face| gens.iter().any(|g| face.iter().all(|v| g.contains(v)))).unwrap()
}

/// The unique map to `Δ[0]`.
pub fn collapse(x: Arc<FiniteSimplicialSet>) -> SimplicialMap {
    let pt = Arc::new(standard_simplicial_set(0));
    let assignment = x.ids().map(|id| pt.pull(&pt.simplex(0), &vec![0; x.dim(id) + 1])).collect();
    SimplicialMap::new(x, pt, assignment).unwrap()
}

/// Glues `Δ[p]` to `K` along a randomly chosen map `Λ[p,k] -> K`, if any exists.
pub fn attach_random_horn(
    rng: &mut impl Rng,
    k: &Arc<FiniteSimplicialSet>,
    p: usize,
) -> Option<Arc<FiniteSimplicialSet>> {
    let horn_k = rng.gen_range(0..=p);
    let horn = horn_complex(p, horn_k).unwrap();
    let maps = MapSearch::new(&horn.complex, k).collect_all();
    let chosen = maps.choose(rng)?;
    let g = SimplicialMap::new(horn.complex.clone(), k.clone(), chosen.clone()).unwrap();
    Some(pushout(&horn.inclusion, &g).unwrap().complex)
}

/// Connected components of the 1-skeleton by breadth-first search over stored faces.
pub fn component_count(x: &FiniteSimplicialSet) -> usize {
    let verts = x.nondegenerate(0).to_vec();
    let mut adj = vec![Vec::new(); x.len()];
    if x.max_dim().unwrap_or(0) >= 1 {
        for &e in x.nondegenerate(1) {
            let (a, b) = (x.stored_face(e, 0).base, x.stored_face(e, 1).base);
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; x.len()];
    let mut count = 0;
    for &v in &verts {
        if seen[v] {
            continue;
        }
        count += 1;
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(w) = stack.pop() {
            for &n in &adj[w] {
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
    }
    count
}

/// A random rational point of `Δ^p` with all coordinates positive.
pub fn random_interior(rng: &mut impl Rng, p: usize, den: i64) -> Bary<Rational> {
    let w: Vec<i64> = (0..=p).map(|_| rng.gen_range(1..=den)).collect();
    let total: i64 = w.iter().sum();
    Bary::new(w.into_iter().map(|a| Rational::new(a.into(), total.into())).collect()).unwrap()
}

/// A random rational point of `Δ^p`, coordinates allowed to vanish.
pub fn random_point(rng: &mut impl Rng, p: usize, den: i64) -> Bary<Rational> {
    let mut w: Vec<i64> = (0..=p).map(|_| rng.gen_range(0..=den)).collect();
    if w.iter().all(|&a| a == 0) {
        w[rng.gen_range(0..=p)] = 1;
    }
    let total: i64 = w.iter().sum();
    Bary::new(w.into_iter().map(|a| Rational::new(a.into(), total.into())).collect()).unwrap()
}

pub fn sum_is_one(x: &[Rational]) -> bool {
    x.iter().fold(Rational::from_integer(0.into()), |a, b| a + b) == Rational::one()
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
