//! Acceptance suite: one PASS/FAIL line per criterion with pinned tolerances.
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use diffeomodel::geometry::bary::{grid_f64, grid_rational, lattice_points};
use diffeomodel::geometry::probe::ChartCurve;
use diffeomodel::geometry::{
    beta, build_boundary_homotopy_t, build_full_horn_deformation, chart_decompose, chart_transition, concat_product,
    gamma, good_nbhd_phi, good_nbhd_phi_inverse, phi_chart, smoothness_probe, AffineSimplexMap, Bary, FaceIndex,
    PointedMap, Rational, Side,
};
use diffeomodel::model::{edge_group_rank, igc_factor, pi0, rlp_check, GeneratingSet, GeneratorKind, RlpReport};
use diffeomodel::realization::{canonical_injection, witness_not_single_generated, RealPoint};
use diffeomodel::simplicial::{
    boundary_complex, horn_complex, standard_simplicial_set, FiniteSimplicialSet, SimplicialMap, Subcomplex,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const CHART_GRID: usize = 20;
const AFFINE_TRIALS: usize = 10;
const PROBE_TOL: f64 = 1e-6;
const INJECTIVITY_PAIRS: usize = 10_000;
const IDENTITY_TOL: f64 = 1e-12;
const CONTRACT_TOL: f64 = 1e-9;
const MIN_GRID_POINTS: usize = 200;
const NBHD_SAMPLES: usize = 1000;
const CONCAT_TOL: f64 = 1e-9;
const RANDOM_MODEL_CASES: usize = 5;
const T_EPS: f64 = 0.2;
const T_POINTS: usize = 100;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn zero() -> Rational {
    Rational::zero()
}

// ---------------------------------------------------------------- criterion 1

/// `φ_i(x, t)` written out coordinatewise.
fn phi_oracle(i: usize, x: &[Rational], t: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = x.iter().map(|c| t * c).collect();
    out.insert(i, Rational::one() - t);
    out
}

fn chart_atlas() -> Outcome {
    let mut uncovered = 0;
    let mut mismatches = 0;
    let mut points = 0;
    let mut transitions = 0;
    for p in 1..=3 {
        for z in grid_rational(p, CHART_GRID) {
            points += 1;
            let Some(i) = (0..=p).find(|&i| z.get(i) > &zero()) else {
                uncovered += 1;
                continue;
            };
            match chart_decompose(&z, i) {
                Ok(d) => {
                    if phi_oracle(i, d.x.coords(), &d.t) != z.coords() || phi_chart(i, &d.x, &d.t).unwrap() != z {
                        mismatches += 1;
                    }
                }
                Err(_) => uncovered += 1,
            }
        }
        if p < 2 {
            continue;
        }
        let params: Vec<Rational> = (1..=7).map(|a| q(a, 8)).collect();
        for y in grid_rational(p - 2, 4) {
            for i in 0..=p {
                for j in (0..=p).filter(|&j| j != i) {
                    let (ji, ij) = (if j < i { j } else { j - 1 }, if i < j { i } else { i - 1 });
                    for tau in params.iter().chain([Rational::one()].iter()) {
                        for t in &params {
                            transitions += 1;
                            let lhs = phi_oracle(i, &phi_oracle(ji, y.coords(), tau), t);
                            let (y2, tau2, t2) = chart_transition(i, j, &y, tau, t).unwrap();
                            let rhs = phi_oracle(j, &phi_oracle(ij, y2.coords(), &tau2), &t2);
                            if lhs != rhs || !sum_is_one(&rhs) {
                                mismatches += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(
        uncovered == 0 && mismatches == 0,
        format!(
            "{points} grid points, {transitions} transitions; uncovered {uncovered}, inexact {mismatches} (tol exact)"
        ),
    )
}

// ---------------------------------------------------------------- criterion 2

/// Velocity of `τ ↦ φ_i(x(τ), t(τ))` by the product rule.
fn curve_velocity(c: &ChartCurve, tau: f64) -> Vec<f64> {
    let w = tau * (1.0 - tau);
    let dw = 1.0 - 2.0 * tau;
    let x: Vec<f64> =
        (0..c.start.0.len()).map(|k| (1.0 - tau) * c.start.0[k] + tau * c.end.0[k] + w * c.bump.0[k]).collect();
    let t = (1.0 - tau) * c.start.1 + tau * c.end.1 + w * c.bump.1;
    let dx: Vec<f64> = (0..x.len()).map(|k| c.end.0[k] - c.start.0[k] + dw * c.bump.0[k]).collect();
    let dt = c.end.1 - c.start.1 + dw * c.bump.1;
    let mut v: Vec<f64> = x.iter().zip(&dx).map(|(xk, dxk)| dt * xk + t * dxk).collect();
    v.insert(c.chart, -dt);
    v
}

fn affine_smoothness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut failed_probes = 0;
    let mut samples = 0;
    for p in 1..=3 {
        for qd in 1..=3 {
            for _ in 0..AFFINE_TRIALS {
                let a = AffineSimplexMap::random(p, qd, 12, &mut rng).to_f64();
                let m: Vec<Vec<f64>> = (0..=qd).map(|r| (0..=p).map(|c| *a.entry(r, c)).collect()).collect();
                let mm = m.clone();
                let f = move |x: &[f64]| -> Vec<f64> {
                    mm.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
                };
                let probe = smoothness_probe(&f, p, 2, PROBE_TOL, rng.gen()).unwrap();
                if !probe.passed {
                    failed_probes += 1;
                }
                for s in &probe.samples {
                    samples += 1;
                    let v = curve_velocity(&probe.curves[s.curve], s.tau);
                    let exact: Vec<f64> = m.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
                    worst = worst.max(max_diff(&exact, &s.derivative));
                }
            }
        }
    }
    let kink = smoothness_probe(&|x: &[f64]| vec![(x[0] - x[1]).abs()], 1, 1, PROBE_TOL, 7).unwrap();
    outcome(
        failed_probes == 0 && samples > 0 && worst <= PROBE_TOL && !kink.passed,
        format!(
            "90 maps, {samples} samples; derivative error {worst:.2e} (tol {PROBE_TOL:.0e}); failed probes {failed_probes}; kink control rejected: {}",
            !kink.passed
        ),
    )
}

// ---------------------------------------------------------------- criterion 3

fn subcomplexes(p: usize) -> Vec<(String, Subcomplex)> {
    let mut out: Vec<(String, Subcomplex)> =
        (0..=p).map(|k| (format!("horn({p},{k})"), horn_complex(p, k).unwrap())).collect();
    out.push((format!("boundary({p})"), boundary_complex(p)));
    out
}

fn injectivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut collisions = 0;
    let mut wrong_image = 0;
    let mut cases = 0;
    for p in 2..=3 {
        for (_, sub) in subcomplexes(p) {
            cases += 1;
            let k = &sub.complex;
            let mut seen: HashMap<Vec<Rational>, (usize, Vec<Rational>)> = HashMap::new();
            for _ in 0..2 * INJECTIVITY_PAIRS {
                let sigma = rng.gen_range(0..k.len());
                let u = random_interior(&mut rng, k.dim(sigma), 5);
                let pt = RealPoint { sigma, u: u.clone() };
                let image = canonical_injection(&sub.inclusion, &pt).unwrap();
                let mut expected = vec![zero(); p + 1];
                for (a, &v) in k.label(sigma).unwrap().iter().enumerate() {
                    expected[v] = u.get(a).clone();
                }
                if image.coords() != expected.as_slice() {
                    wrong_image += 1;
                }
                let form = (sigma, u.into_coords());
                match seen.get(image.coords()) {
                    Some(prev) if *prev != form => collisions += 1,
                    Some(_) => {}
                    None => {
                        seen.insert(image.into_coords(), form);
                    }
                }
            }
        }
    }
    outcome(
        collisions == 0 && wrong_image == 0,
        format!("{cases} subcomplexes x {INJECTIVITY_PAIRS} pairs; collisions {collisions}, images off the vertex formula {wrong_image} (exact)"),
    )
}

// ---------------------------------------------------------------- criterion 4

fn horn_deformations() -> Outcome {
    let times = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
    let mut worst = [0.0f64; 4];
    let mut fewest = usize::MAX;
    for (p, grid) in [(1, 199), (2, 19), (3, 10)] {
        let points = grid_f64(p, grid);
        fewest = fewest.min(points.len());
        for k in 0..=p {
            let h = build_full_horn_deformation(p, k).unwrap();
            for x in &points {
                let x = x.coords();
                worst[0] = worst[0].max(max_diff(&h.eval_raw(x, 0.0), x));
                let in_horn = (0..=p).any(|i| i != k && x[i] == 0.0);
                if in_horn {
                    for s in times {
                        worst[1] = worst[1].max(max_diff(&h.eval_raw(x, s), x));
                    }
                }
                let r = h.eval_raw(x, 1.0);
                let miss = (0..=p).filter(|&i| i != k).map(|i| r[i].abs()).fold(f64::INFINITY, f64::min);
                worst[2] = worst[2].max(miss);
                worst[3] = worst[3].max(max_diff(&h.eval_raw(&r, 1.0), &r));
            }
        }
    }
    let ok = fewest >= MIN_GRID_POINTS
        && worst[0] <= IDENTITY_TOL
        && worst[1] <= CONTRACT_TOL
        && worst[2] <= CONTRACT_TOL
        && worst[3] <= CONTRACT_TOL;
    outcome(
        ok,
        format!(
            ">= {fewest} points per (p,k); H(.,0)=id {:.1e} (tol {IDENTITY_TOL:.0e}), horn fixed {:.1e}, lands in horn {:.1e}, idempotent {:.1e} (tol {CONTRACT_TOL:.0e})",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

// ---------------------------------------------------------------- criterion 5

fn good_neighborhoods() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = 0;
    let mut faces = 0;
    for p in 1..=3 {
        for face in FaceIndex::all_proper(p) {
            faces += 1;
            for _ in 0..NBHD_SAMPLES {
                let mut x = random_point(&mut rng, p, 9);
                if face.inside().iter().any(|&i| x.get(i).is_zero()) {
                    x = random_interior(&mut rng, p, 9);
                }
                let (u, v) = good_nbhd_phi(&face, &x).unwrap();
                let s = face.inside().iter().fold(zero(), |a, &i| a + x.get(i));
                let u_expected: Vec<Rational> = face.inside().iter().map(|&i| x.get(i) / &s).collect();
                if u.coords() != u_expected.as_slice()
                    || v.get(0) != &s
                    || good_nbhd_phi_inverse(&face, &u, &v).unwrap() != x
                {
                    failures += 1;
                }
                let u2 = random_interior(&mut rng, face.dim(), 9);
                let mut v2 = random_point(&mut rng, face.outside().len(), 9);
                if v2.get(0).is_zero() {
                    v2 = random_interior(&mut rng, face.outside().len(), 9);
                }
                let back = good_nbhd_phi(&face, &good_nbhd_phi_inverse(&face, &u2, &v2).unwrap()).unwrap();
                if back != (u2, v2) {
                    failures += 1;
                }
            }
        }
    }
    outcome(
        failures == 0,
        format!("{faces} faces x {NBHD_SAMPLES} samples each way; inexact round trips {failures} (exact)"),
    )
}

// ---------------------------------------------------------------- criterion 6

fn insert_zero(x: &[Rational], at: usize) -> Vec<Rational> {
    let mut out = x.to_vec();
    out.insert(at, zero());
    out
}

fn product_plumbing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut inexact = 0;
    for p in 1..=3 {
        for _ in 0..200 {
            let x = random_point(&mut rng, p, 7);
            if beta(&x, &Rational::one()).coords() != insert_zero(x.coords(), p + 1).as_slice()
                || beta(&x, &zero()).coords() != insert_zero(x.coords(), p).as_slice()
            {
                inexact += 1;
            }
            // A point of Δ^{p+1} on the seam x_{p-1} = x_{p+1}: both branch formulas give d^{p-1}, d^{p+1} faces
            // of the same point.
            let mut w: Vec<i64> = (0..p + 2).map(|_| rng.gen_range(0..6)).collect();
            w[p + 1] = w[p - 1];
            if w.iter().all(|&a| a == 0) {
                w[p] = 1;
            }
            let total: i64 = w.iter().sum();
            let y: Vec<Rational> = w.iter().map(|&a| q(a, total)).collect();
            let (side, g) = gamma(&Bary::new(y.clone()).unwrap()).unwrap();
            let mut second: Vec<Rational> = y[..p - 1].to_vec();
            second.push(&y[p - 1] - &y[p + 1]);
            second.push(&y[p] + q(2, 1) * &y[p + 1]);
            second.push(zero());
            if side != Side::First || g.coords() != second.as_slice() || !sum_is_one(&second) {
                inexact += 1;
            }
        }
    }
    let pairs: Vec<(usize, PointedMap, PointedMap)> = vec![
        (
            1,
            PointedMap::collapsed_near_boundary(1, vec![0.0], 0.1, |x| vec![(7.0 * x[0]).sin()]),
            PointedMap::collapsed_near_boundary(1, vec![0.0], 0.1, |x| vec![x[0] * x[1] * 3.0]),
        ),
        (
            2,
            PointedMap::collapsed_near_boundary(2, vec![1.0, -2.0], 0.05, |x| vec![x[0] + 5.0, x[1] * x[2]]),
            PointedMap::collapsed_near_boundary(2, vec![1.0, -2.0], 0.15, |x| vec![(x[2] * 4.0).cos(), x[0] - x[1]]),
        ),
        (
            3,
            PointedMap::collapsed_near_boundary(3, vec![0.5, 0.5, 0.0], 0.02, |x| vec![x[0], x[1], x[2] + x[3]]),
            PointedMap::collapsed_near_boundary(3, vec![0.5, 0.5, 0.0], 0.02, |x| vec![x[3].exp(), 0.0, -x[1]]),
        ),
    ];
    let mut worst = 0.0f64;
    for (p, f, g) in &pairs {
        let h = concat_product(f, g).unwrap();
        let b = vec![1.0 / (*p + 1) as f64; p + 1];
        worst = worst.max(max_diff(&h.eval(&b), f.base()));
    }
    outcome(
        inexact == 0 && worst <= CONCAT_TOL,
        format!("beta endpoints and gamma seam inexact {inexact} (exact); 3 pairs, |(f+g)(b) - base| = {worst:.1e} (tol {CONCAT_TOL:.0e})"),
    )
}

// ---------------------------------------------------------------- criterion 7

/// Vertex labels of an ordered complex sitting inside some `Δ[m]`.
fn ordered_simplices(x: &FiniteSimplicialSet) -> Vec<Vec<usize>> {
    x.ids().map(|id| x.label(id).unwrap().to_vec()).collect()
}

/// Order-preserving vertex maps `A -> X` sending simplices to simplices; for
/// subcomplexes of standard simplices these are exactly the simplicial maps.
fn vertex_maps(a: &[Vec<usize>], a_verts: &[usize], x: &[Vec<usize>]) -> Vec<HashMap<usize, usize>> {
    let x_simplices: BTreeSet<Vec<usize>> = x.iter().cloned().collect();
    let x_verts: Vec<usize> = x.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect();
    let mut out = Vec::new();
    let mut current = HashMap::new();
    fn rec(
        i: usize,
        a: &[Vec<usize>],
        a_verts: &[usize],
        x_verts: &[usize],
        x_simplices: &BTreeSet<Vec<usize>>,
        current: &mut HashMap<usize, usize>,
        out: &mut Vec<HashMap<usize, usize>>,
    ) {
        if i == a_verts.len() {
            let ok = a.iter().all(|s| {
                let img: Vec<usize> = s.iter().map(|v| current[v]).collect();
                let mut set = img.clone();
                set.dedup();
                img.windows(2).all(|w| w[0] <= w[1]) && x_simplices.contains(&set)
            });
            if ok {
                out.push(current.clone());
            }
            return;
        }
        for &xv in x_verts {
            current.insert(a_verts[i], xv);
            rec(i + 1, a, a_verts, x_verts, x_simplices, current, out);
        }
        current.remove(&a_verts[i]);
    }
    rec(0, a, a_verts, &x_verts, &x_simplices, &mut current, &mut out);
    out
}

/// Exhaustive verdict for `X -> Δ[0]`: per generator, the number of squares
/// and whether one lacks a lift.
fn oracle_rlp(x: &FiniteSimplicialSet, kind: GeneratorKind, max_dim: usize) -> (usize, Vec<(usize, Option<usize>)>) {
    let xs = ordered_simplices(x);
    let gens: Vec<(usize, Option<usize>, Vec<Vec<usize>>)> = match kind {
        GeneratorKind::I => (0..=max_dim).map(|p| (p, None, ordered_simplices(&boundary_complex(p).complex))).collect(),
        GeneratorKind::J => (1..=max_dim)
            .flat_map(|p| (0..=p).map(move |k| (p, k)))
            .map(|(p, k)| (p, Some(k), ordered_simplices(&horn_complex(p, k).unwrap().complex)))
            .collect(),
    };
    let mut squares = 0;
    let mut failing = Vec::new();
    for (p, k, a) in gens {
        let a_verts: Vec<usize> = a.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect();
        let full = ordered_simplices(&standard_simplicial_set(p));
        let all: Vec<usize> = (0..=p).collect();
        let lifts = vertex_maps(&full, &all, &xs);
        for top in vertex_maps(&a, &a_verts, &xs) {
            squares += 1;
            if !lifts.iter().any(|l| a_verts.iter().all(|v| l[v] == top[v])) {
                failing.push((p, k));
            }
        }
    }
    failing.dedup();
    (squares, failing)
}

fn failing_generators(r: &RlpReport) -> Vec<(usize, Option<usize>)> {
    let mut v: Vec<(usize, Option<usize>)> = r.failures.iter().map(|f| (f.p, f.k)).collect();
    v.dedup();
    v
}

fn model_engine() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    type Verdict = (&'static str, FiniteSimplicialSet, GeneratorKind, usize, bool, Option<(usize, Option<usize>)>);
    let cases: Vec<Verdict> = vec![
        ("Δ[0]→Δ[0] vs J", standard_simplicial_set(0), GeneratorKind::J, 3, true, None),
        ("Δ[1]→Δ[0] vs J", standard_simplicial_set(1), GeneratorKind::J, 2, false, Some((2, Some(0)))),
        ("∂Δ[1]→Δ[0] vs I", (*boundary_complex(1).complex).clone(), GeneratorKind::I, 2, false, Some((1, None))),
    ];
    for (name, x, kind, max_dim, passes, first_failure) in cases {
        let report = rlp_check(&collapse(Arc::new(x.clone())), &GeneratingSet::new(kind, max_dim));
        let (squares, failing) = oracle_rlp(&x, kind, max_dim);
        let agree = report.squares == squares && failing_generators(&report) == failing;
        let verdict = report.passes() == passes && failing.first().copied() == first_failure;
        ok &= agree && verdict;
        notes.push(format!(
            "{name}: {} squares, {} failures, oracle agrees {agree}",
            report.squares,
            report.failures.len()
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut stage_violations = 0;
    let mut stages = 0;
    for case in 0..RANDOM_MODEL_CASES {
        let sub = random_subcomplex(&mut rng, 2, 1 + case % 3);
        let f = if case % 2 == 0 { sub.inclusion.clone() } else { collapse(sub.complex.clone()) };
        let fac = igc_factor(&f, &GeneratingSet::new(GeneratorKind::J, 2), 2).unwrap();
        for st in &fac.stages {
            stages += 1;
            let composite: SimplicialMap = st.j.then(&st.q).unwrap();
            let images: BTreeSet<_> = st.j.assignment().iter().collect();
            let injective =
                images.len() == st.j.assignment().len() && st.j.assignment().iter().all(|s| !s.is_degenerate());
            if composite.assignment() != f.assignment() || !injective {
                stage_violations += 1;
            }
        }
    }
    ok &= stage_violations == 0;
    notes.push(format!("igc: {stages} stages, violations {stage_violations}"));

    let mut invariance_breaks = 0;
    let mut attached = 0;
    while attached < RANDOM_MODEL_CASES {
        let k = random_subcomplex(&mut rng, 3, 2 + attached % 2).complex;
        let p = 1 + attached % 2;
        let Some(glued) = attach_random_horn(&mut rng, &k, p) else { continue };
        attached += 1;
        let before = component_count(&k);
        let after = component_count(&glued);
        if before != after || pi0(&k).count != before || pi0(&glued).count != after {
            invariance_breaks += 1;
        }
        if before == 1 && edge_group_rank(&k).unwrap().rank != edge_group_rank(&glued).unwrap().rank {
            invariance_breaks += 1;
        }
    }
    ok &= invariance_breaks == 0;
    notes.push(format!("horn attachment: {attached} cases, invariant changes {invariance_breaks}"));
    outcome(ok, notes.join("; "))
}

// ---------------------------------------------------------------- criterion 8

fn boundary_homotopy() -> Outcome {
    let mut worst = [0.0f64; 3];
    let mut fewest = usize::MAX;
    for (p, grid) in [(1, 400), (2, 40), (3, 16)] {
        let t = build_boundary_homotopy_t(p, T_EPS).unwrap();
        let near: Vec<Vec<f64>> = lattice_points(p, grid)
            .into_iter()
            .map(|v| v.into_iter().map(|c| c as f64 / grid as f64).collect::<Vec<f64>>())
            .filter(|x| x.iter().cloned().fold(f64::INFINITY, f64::min) <= T_EPS)
            .collect();
        fewest = fewest.min(near.len());
        let b = vec![1.0 / (p + 1) as f64; p + 1];
        for s in [0.0, 0.3, 0.7, 1.0] {
            worst[1] = worst[1].max(max_diff(&t.eval_raw(&b, s), &b));
        }
        for x in &near {
            worst[0] = worst[0].max(max_diff(&t.eval_raw(x, 0.0), x));
            let y = t.eval_raw(x, 1.0);
            worst[2] = worst[2].max(y.iter().cloned().fold(f64::INFINITY, f64::min).abs());
        }
    }
    outcome(
        fewest >= T_POINTS && worst.iter().all(|&w| w <= CONTRACT_TOL),
        format!(
            "eps {T_EPS}, >= {fewest} points per p; T(.,0)=id {:.1e}, b fixed {:.1e}, T(.,1) on boundary {:.1e} (tol {CONTRACT_TOL:.0e})",
            worst[0], worst[1], worst[2]
        ),
    )
}

// ---------------------------------------------------------------- criterion 9

fn brute_maximal(k: &FiniteSimplicialSet) -> Vec<usize> {
    let labels = ordered_simplices(k);
    (0..labels.len())
        .filter(|&a| {
            !labels
                .iter()
                .enumerate()
                .any(|(b, l)| b != a && l.len() > labels[a].len() && labels[a].iter().all(|v| l.contains(v)))
        })
        .collect()
}

fn single_generation() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let cases: Vec<(&str, Arc<FiniteSimplicialSet>)> = vec![
        ("Λ[2,0]", horn_complex(2, 0).unwrap().complex),
        ("∂Δ[2]", boundary_complex(2).complex),
        ("Λ[3,1]", horn_complex(3, 1).unwrap().complex),
    ];
    for (name, k) in cases {
        let w = witness_not_single_generated(&k);
        let again = witness_not_single_generated(&k);
        let maximal = brute_maximal(&k);
        let good = match &w {
            Some(w) => {
                let (va, vb) = (k.vertices(&k.simplex(w.first)), k.vertices(&k.simplex(w.second)));
                let start = w.curve.eval(&k, -1.0).unwrap();
                let mid = w.curve.eval(&k, 0.0).unwrap();
                let end = w.curve.eval(&k, 1.0).unwrap();
                w.first != w.second
                    && maximal.contains(&w.first)
                    && maximal.contains(&w.second)
                    && va.contains(&w.shared_vertex)
                    && vb.contains(&w.shared_vertex)
                    && start.sigma == w.first
                    && end.sigma == w.second
                    && mid.sigma == w.shared_vertex
            }
            None => false,
        };
        ok &= good && w == again;
        notes.push(format!(
            "{name}: {}",
            w.map_or("none".to_string(), |w| format!("({},{}) via {}", w.first, w.second, w.shared_vertex))
        ));
    }
    for p in 0..=3 {
        let none = witness_not_single_generated(&standard_simplicial_set(p)).is_none();
        ok &= none;
        if !none {
            notes.push(format!("Δ[{p}] has a witness"));
        }
    }
    notes.push("Δ[0..3]: none".into());
    outcome(ok, notes.join("; "))
}

fn main() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("1 chart covering and exact transitions", Duration::from_secs(5), chart_atlas),
        ("2 affine maps are smooth, kink rejected", Duration::from_secs(30), affine_smoothness),
        ("3 canonical injection is injective", Duration::from_secs(10), injectivity),
        ("4 horn deformation retractions", Duration::from_secs(60), horn_deformations),
        ("5 good-neighborhood round trips", Duration::from_secs(10), good_neighborhoods),
        ("6 concatenation plumbing", Duration::from_secs(5), product_plumbing),
        ("7 lifting, factorization, invariants", Duration::from_secs(60), model_engine),
        ("8 boundary homotopy T", Duration::from_secs(10), boundary_homotopy),
        ("9 single-generation witnesses", Duration::from_secs(1), single_generation),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= budget;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {} [{:.2}s, budget {}s]",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {}/9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
