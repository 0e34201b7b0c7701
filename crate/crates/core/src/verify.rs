//! Verification suites: each runs one family of checks and returns a
//! [`Report`].

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::geometry::affine::AffineSimplexMap;
use crate::geometry::bary::{
    grid_f64, grid_rational, lattice_points, max_abs_diff, ratio, simplex_drift, Bary, Rational,
};
use crate::geometry::chart::{chart_decompose, chart_transition, index_in_face, phi_chart};
use crate::geometry::deformation::build_full_horn_deformation;
use crate::geometry::probe::smoothness_probe;
use crate::geometry::Subspace;
use crate::model::fill_horn_numeric;
use crate::realization::{canonical_injection, normalize, RealPoint};
use crate::report::{Check, Report};
use crate::simplicial::{boundary_complex, horn_complex, Subcomplex};

fn exact_diff(a: &Bary<Rational>, b: &Bary<Rational>) -> f64 {
    max_abs_diff(a.to_f64().coords(), b.to_f64().coords()) + if a == b { 0.0 } else { f64::MIN_POSITIVE }
}

/// Chart covering of `Δ^p` on the lattice of step `1/grid`, and exact
/// chart transitions on a lattice of overlap parameters.
pub fn axiom1(p: usize, grid: usize) -> Result<Report> {
    let mut report = Report::new("verify-axiom1", 0).param("p", p).param("grid", grid);
    let mut uncovered = 0usize;
    let mut witness = None;
    let mut round_trip = 0.0f64;
    for z in grid_rational(p, grid) {
        let hit = (0..=p).find_map(|i| chart_decompose(&z, i).ok());
        match hit {
            Some(d) => round_trip = round_trip.max(exact_diff(&phi_chart(d.i, &d.x, &d.t)?, &z)),
            None => {
                uncovered += 1;
                witness.get_or_insert_with(|| json!(z));
            }
        }
    }
    report.push(Check::bounded("chart covering", uncovered as f64, 0.0, witness));
    report.push(Check::bounded("chart round trip", round_trip, 0.0, None));
    if p < 2 {
        report.push(Check::skipped("chart transitions", "the transition formula needs p ≥ 2"));
        return Ok(report);
    }
    let params: Vec<Rational> = (1..10).map(|k| ratio(k, 10)).collect();
    let mut worst = 0.0f64;
    let mut witness = None;
    for y in grid_rational(p - 2, 4) {
        for i in 0..=p {
            for j in (0..=p).filter(|&j| j != i) {
                for tau in params.iter().chain(std::iter::once(&ratio(1, 1))) {
                    for t in &params {
                        let lhs = phi_chart(i, &phi_chart(index_in_face(i, j), &y, tau)?, t)?;
                        let (y2, tau2, t2) = chart_transition(i, j, &y, tau, t)?;
                        let rhs = phi_chart(j, &phi_chart(index_in_face(j, i), &y2, &tau2)?, &t2)?;
                        let d = exact_diff(&lhs, &rhs);
                        if d > worst {
                            worst = d;
                            witness = Some(json!({"i": i, "j": j, "y": y, "tau": tau.to_string(), "t": t.to_string()}));
                        }
                    }
                }
            }
        }
    }
    report.push(Check::bounded("chart transitions", worst, 0.0, witness));
    Ok(report)
}

/// Smoothness probes of random affine maps `Δ^p -> Δ^q` compared with the
/// exact derivative, plus the kinked control map.
pub fn axiom2(p: usize, q: usize, trials: usize, seed: u64, tol: f64) -> Result<Report> {
    let mut report =
        Report::new("verify-axiom2", seed).param("p", p).param("q", q).param("trials", trials).param("tol", tol);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut consistency, mut oracle) = (0.0f64, 0.0f64);
    let (mut w1, mut w2) = (None, None);
    for trial in 0..trials {
        let a = AffineSimplexMap::random(p, q, 12, &mut rng);
        let af = a.to_f64();
        let f = move |x: &[f64]| af.eval(&Bary::new_unchecked(x.to_vec())).expect("dimension").into_coords();
        let probe = smoothness_probe(&f, p, 2, tol, rng.gen())?;
        if probe.max_discrepancy > consistency {
            consistency = probe.max_discrepancy;
            w1 = Some(json!({"trial": trial, "worst": probe.worst}));
        }
        let m = a.to_f64();
        for s in &probe.samples {
            let v = probe.curves[s.curve].velocity(s.tau);
            let exact: Vec<f64> = (0..=q).map(|r| (0..=p).map(|c| m.entry(r, c) * v[c]).sum()).collect();
            let d = max_abs_diff(&exact, &s.derivative);
            if d > oracle {
                oracle = d;
                w2 = Some(json!({"trial": trial, "point": s.point, "estimate": s.derivative, "exact": exact}));
            }
        }
    }
    report.push(Check::bounded("finite-difference consistency", consistency, tol, w1));
    report.push(Check::bounded("derivative vs exact affine derivative", oracle, tol, w2));
    let kink = smoothness_probe(&|x: &[f64]| vec![(x[0] - x[1]).abs()], 1, 1, tol, seed)?;
    report.push(Check::boolean("kinked control is rejected", !kink.passed, json!(kink.max_discrepancy)));
    Ok(report)
}

/// The horns and the boundary of `Δ[p]`, with display names.
pub fn standard_subcomplexes(p: usize) -> Vec<(String, Subcomplex)> {
    let mut out: Vec<(String, Subcomplex)> =
        (0..=p).map(|k| (format!("horn({p},{k})"), horn_complex(p, k).expect("valid horn"))).collect();
    out.push((format!("boundary({p})"), boundary_complex(p)));
    out
}

/// A random normal-form point of `K` with coordinates of denominator at most `den`.
pub fn random_real_point(
    k: &crate::simplicial::FiniteSimplicialSet,
    den: i64,
    rng: &mut impl Rng,
) -> RealPoint<Rational> {
    let sigma = rng.gen_range(0..k.len());
    let n = k.dim(sigma);
    let weights: Vec<i64> = (0..=n).map(|_| rng.gen_range(1..=den)).collect();
    let total: i64 = weights.iter().sum();
    let u = Bary::new_unchecked(weights.into_iter().map(|w| ratio(w, total)).collect());
    normalize(k, &k.simplex(sigma), &u).expect("interior point")
}

/// Injectivity of `|K| -> Δ^p` on random pairs of normal forms for every
/// horn and the boundary of `Δ[p]`.
pub fn axiom3(p: usize, trials: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new("verify-axiom3", seed).param("p", p).param("trials", trials);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, sub) in standard_subcomplexes(p) {
        let mut collisions = 0usize;
        let mut witness = None;
        let mut seen: HashMap<Vec<String>, (usize, Vec<String>)> = HashMap::new();
        for _ in 0..trials {
            let a = random_real_point(&sub.complex, 4, &mut rng);
            let b = random_real_point(&sub.complex, 4, &mut rng);
            for pt in [&a, &b] {
                let img = canonical_injection(&sub.inclusion, pt)?;
                let key: Vec<String> = img.coords().iter().map(Rational::to_string).collect();
                let form = (pt.sigma, pt.u.coords().iter().map(Rational::to_string).collect::<Vec<_>>());
                if let Some(prev) = seen.get(&key) {
                    if *prev != form {
                        collisions += 1;
                        witness.get_or_insert_with(|| json!({"image": key, "first": prev, "second": form}));
                    }
                } else {
                    seen.insert(key, form);
                }
            }
        }
        report.push(Check::bounded(format!("{name} injectivity"), collisions as f64, 0.0, witness));
    }
    Ok(report)
}

/// Contracts of the deformation of `Δ^p` onto `Λ^p_k` on the lattice of
/// step `1/grid`.
pub fn axiom4(p: usize, k: usize, grid: usize, tol: f64) -> Result<Report> {
    let mut report = Report::new("verify-axiom4", 0).param("p", p).param("k", k).param("grid", grid).param("tol", tol);
    let h = build_full_horn_deformation(p, k)?;
    let points = grid_f64(p, grid);
    let times = [0.25, 0.5, 0.75, 1.0];
    let mut worst = [0.0f64; 5];
    let mut witness: [Option<Value>; 5] = Default::default();
    let mut record = |slot: usize, v: f64, x: &[f64], s: f64| {
        if v > worst[slot] {
            worst[slot] = v;
            witness[slot] = Some(json!({"point": x, "s": s}));
        }
    };
    for x in &points {
        let x = x.coords();
        record(0, max_abs_diff(&h.eval_raw(x, 0.0), x), x, 0.0);
        for s in times {
            let y = h.eval_raw(x, s);
            let drift = simplex_drift(&y);
            record(1, drift, x, s);
            if Subspace::Horn(k).contains(x, 0.0) {
                record(2, max_abs_diff(&y, x), x, s);
            }
        }
        let r = h.eval_raw(x, 1.0);
        let miss = (0..=p).filter(|&i| i != k).map(|i| r[i].abs()).fold(f64::INFINITY, f64::min);
        record(3, miss, x, 1.0);
        record(4, max_abs_diff(&h.eval_raw(&r, 1.0), &r), x, 1.0);
    }
    let names = [
        "identity at time 0",
        "stays in the simplex",
        "horn fixed at all times",
        "lands in the horn",
        "retraction idempotent",
    ];
    let tols = [1e-12, 1e-12, tol, tol, tol];
    for i in 0..5 {
        report.push(Check::bounded(names[i], worst[i], tols[i], witness[i].take()));
    }
    report = report.param("points", points.len());
    Ok(report)
}

/// Filling three maps on the horn and comparing with them on the horn.
pub fn fill_horn(p: usize, k: usize, grid: usize, tol: f64) -> Result<Report> {
    let mut report = Report::new("fill-horn", 0).param("p", p).param("k", k).param("grid", grid).param("tol", tol);
    let edge = (k, if k == 0 { 1 } else { 0 });
    let maps: Vec<(&str, Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>)> = vec![
        ("inclusion", Box::new(|x: &[f64]| x.to_vec())),
        ("constant", Box::new(|_: &[f64]| vec![0.5, -2.0])),
        (
            "projection to an edge",
            Box::new(move |x: &[f64]| {
                let rest: f64 = x.iter().enumerate().filter(|&(i, _)| i != edge.0).map(|(_, v)| v).sum();
                vec![x[edge.0], rest]
            }),
        ),
    ];
    let horn_points: Vec<Vec<f64>> = lattice_points(p, grid)
        .into_iter()
        .map(|v| v.into_iter().map(|c| c as f64 / grid as f64).collect::<Vec<f64>>())
        .filter(|x| Subspace::Horn(k).contains(x, 0.0))
        .collect();
    for (name, g) in maps {
        let g = std::sync::Arc::new(g);
        let g2 = g.clone();
        let filled = fill_horn_numeric(move |x: &[f64]| g2(x), p, k)?;
        let mut worst = 0.0f64;
        let mut witness = None;
        for x in &horn_points {
            let d = max_abs_diff(&filled(x), &g(x));
            if d > worst {
                worst = d;
                witness = Some(json!(x));
            }
        }
        report.push(Check::bounded(format!("{name} restricts to itself"), worst, tol, witness));
    }
    Ok(report.param("horn_points", horn_points.len()))
}
