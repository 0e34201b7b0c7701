//! Finite-difference smoothness probes through the chart atlas.
//!
//! A map `F` on `Δ^p` is composed with each chart `φ_i` and with a seeded
//! family of quadratic curves `c` in the chart domain `Δ^{p-1} × (0,1)`.
//! Along each curve, at stations spaced `STEP` apart, forward, backward and
//! centered difference quotients of `F ∘ φ_i ∘ c` are Richardson-extrapolated
//! and compared. A smooth composite makes all estimates agree; a kink between
//! stations makes the one-sided ones disagree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

use super::bary::Bary;
use super::chart::phi_chart;

/// Spacing of the stations along each curve, also the largest stencil width.
pub const STEP: f64 = 1e-3;
/// Curves per chart.
pub const CURVES_PER_CHART: usize = 2;
const TAU_RANGE: (f64, f64) = (0.2, 0.8);
/// Every this many stations one sample is kept in the report.
const SAMPLE_EVERY: usize = 100;

/// `c(τ) = (1-τ) A + τ B + τ(1-τ) W` in chart coordinates `(x, t)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChartCurve {
    pub chart: usize,
    pub start: (Vec<f64>, f64),
    pub end: (Vec<f64>, f64),
    pub bump: (Vec<f64>, f64),
}

impl ChartCurve {
    pub fn chart_coords(&self, tau: f64) -> (Vec<f64>, f64) {
        let w = tau * (1.0 - tau);
        let x = (0..self.start.0.len())
            .map(|k| (1.0 - tau) * self.start.0[k] + tau * self.end.0[k] + w * self.bump.0[k])
            .collect();
        (x, (1.0 - tau) * self.start.1 + tau * self.end.1 + w * self.bump.1)
    }

    /// `φ_i(c(τ))` in `Δ^p`.
    pub fn point(&self, tau: f64) -> Vec<f64> {
        let (x, t) = self.chart_coords(tau);
        phi_chart(self.chart, &Bary::new_unchecked(x), &t).expect("curve stays in the chart").into_coords()
    }

    /// Exact velocity of `τ ↦ φ_i(c(τ))` in `R^{p+1}`.
    pub fn velocity(&self, tau: f64) -> Vec<f64> {
        let (x, t) = self.chart_coords(tau);
        let w = 1.0 - 2.0 * tau;
        let dt = self.end.1 - self.start.1 + w * self.bump.1;
        let dx: Vec<f64> = (0..x.len()).map(|k| self.end.0[k] - self.start.0[k] + w * self.bump.0[k]).collect();
        let mut out = Vec::with_capacity(x.len() + 1);
        for k in 0..=x.len() {
            out.push(match k.cmp(&self.chart) {
                std::cmp::Ordering::Equal => -dt,
                std::cmp::Ordering::Less => dt * x[k] + t * dx[k],
                std::cmp::Ordering::Greater => dt * x[k - 1] + t * dx[k - 1],
            });
        }
        out
    }

    fn random(chart: usize, p: usize, rng: &mut ChaCha8Rng) -> Self {
        let interior = |rng: &mut ChaCha8Rng| {
            let v: Vec<f64> = (0..p).map(|_| 0.5 + rng.gen::<f64>()).collect();
            let s: f64 = v.iter().sum();
            v.into_iter().map(|a| a / s).collect::<Vec<_>>()
        };
        let raw: Vec<f64> = (0..p).map(|_| rng.gen::<f64>()).collect();
        let mean = raw.iter().sum::<f64>() / p as f64;
        let bump_x = raw.iter().map(|v| 0.1 * (v - mean) / p as f64).collect();
        ChartCurve {
            chart,
            start: (interior(rng), rng.gen_range(0.05..0.3)),
            end: (interior(rng), rng.gen_range(0.7..0.95)),
            bump: (bump_x, rng.gen_range(-0.1..0.1)),
        }
    }
}

/// One retained derivative estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeSample {
    pub curve: usize,
    pub tau: f64,
    pub point: Vec<f64>,
    /// Extrapolated centered estimate of `d/dτ F(φ_i(c(τ)))`.
    pub derivative: Vec<f64>,
}

/// Largest disagreement found and where.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeWorst {
    pub curve: usize,
    pub tau: f64,
    pub point: Vec<f64>,
    pub check: String,
    pub discrepancy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub p: usize,
    pub order: usize,
    pub tol: f64,
    pub seed: u64,
    pub passed: bool,
    pub max_discrepancy: f64,
    pub worst: Option<ProbeWorst>,
    pub curves: Vec<ChartCurve>,
    pub samples: Vec<ProbeSample>,
}

fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn combine(a: &[f64], ca: f64, b: &[f64], cb: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| ca * x + cb * y).collect()
}

/// Probes `map` on `Δ^p` (`p ≥ 1`) through every chart. `order` is 1 (first
/// derivatives) or 2 (also second derivatives).
pub fn smoothness_probe(
    map: &dyn Fn(&[f64]) -> Vec<f64>,
    p: usize,
    order: usize,
    tol: f64,
    seed: u64,
) -> Result<ProbeReport> {
    if p == 0 {
        return Err(Error::InvalidParameters("Δ^0 has no charts to probe".into()));
    }
    if !(1..=2).contains(&order) {
        return Err(Error::InvalidParameters(format!("probe order must be 1 or 2, got {order}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let curves: Vec<ChartCurve> = (0..=p)
        .flat_map(|i| (0..CURVES_PER_CHART).map(move |_| i))
        .map(|i| ChartCurve::random(i, p, &mut rng))
        .collect();
    let mut report = ProbeReport {
        p,
        order,
        tol,
        seed,
        passed: true,
        max_discrepancy: 0.0,
        worst: None,
        curves: curves.clone(),
        samples: Vec::new(),
    };
    let stations = ((TAU_RANGE.1 - TAU_RANGE.0) / STEP).round() as usize;
    for (ci, curve) in curves.iter().enumerate() {
        let g = |tau: f64| map(&curve.point(tau));
        for j in 0..=stations {
            let tau = TAU_RANGE.0 + j as f64 * STEP;
            let g0 = g(tau);
            let hs = [STEP, STEP / 2.0, STEP / 4.0];
            let plus: Vec<Vec<f64>> = hs.iter().map(|h| g(tau + h)).collect();
            let minus: Vec<Vec<f64>> = hs.iter().map(|h| g(tau - h)).collect();
            let quot = |a: &[f64], b: &[f64], h: f64| combine(a, 1.0 / h, b, -1.0 / h);
            let fwd: Vec<Vec<f64>> = (0..3).map(|k| quot(&plus[k], &g0, hs[k])).collect();
            let bwd: Vec<Vec<f64>> = (0..3).map(|k| quot(&g0, &minus[k], hs[k])).collect();
            let cen: Vec<Vec<f64>> = (0..3).map(|k| quot(&plus[k], &minus[k], 2.0 * hs[k])).collect();
            // one-sided quotients have error O(h): two extrapolation levels
            let one_sided = |d: &[Vec<f64>]| {
                let r1 = combine(&d[1], 2.0, &d[0], -1.0);
                let r2 = combine(&d[2], 2.0, &d[1], -1.0);
                combine(&r2, 4.0 / 3.0, &r1, -1.0 / 3.0)
            };
            let centered = combine(&cen[2], 4.0 / 3.0, &cen[1], -1.0 / 3.0);
            let mut checks = vec![
                ("forward vs centered", sup_diff(&one_sided(&fwd), &centered)),
                ("backward vs centered", sup_diff(&one_sided(&bwd), &centered)),
            ];
            if order == 2 {
                let second: Vec<Vec<f64>> = (0..3)
                    .map(|k| {
                        plus[k]
                            .iter()
                            .zip(&minus[k])
                            .zip(&g0)
                            .map(|((a, b), c)| (a + b - 2.0 * c) / (hs[k] * hs[k]))
                            .collect()
                    })
                    .collect();
                let r1 = combine(&second[1], 4.0 / 3.0, &second[0], -1.0 / 3.0);
                let r2 = combine(&second[2], 4.0 / 3.0, &second[1], -1.0 / 3.0);
                checks.push(("second derivative convergence", sup_diff(&r1, &r2)));
            }
            for (name, d) in checks {
                if d > report.max_discrepancy || d.is_nan() {
                    report.max_discrepancy = if d.is_nan() { f64::INFINITY } else { d };
                    report.worst = Some(ProbeWorst {
                        curve: ci,
                        tau,
                        point: curve.point(tau),
                        check: name.to_string(),
                        discrepancy: d,
                    });
                }
            }
            if j % SAMPLE_EVERY == 0 {
                report.samples.push(ProbeSample { curve: ci, tau, point: curve.point(tau), derivative: centered });
            }
        }
    }
    report.passed = report.max_discrepancy <= tol;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::affine::AffineSimplexMap;
    use crate::geometry::bary::Rational;

    #[test]
    fn degeneracy_passes() {
        let s = AffineSimplexMap::<Rational>::degeneracy(2, 2).unwrap().to_f64();
        let f = move |x: &[f64]| s.eval(&Bary::new_unchecked(x.to_vec())).unwrap().into_coords();
        let r = smoothness_probe(&f, 3, 2, 1e-6, 0).unwrap();
        assert!(r.passed, "{:?}", r.worst);
    }

    #[test]
    fn kink_fails() {
        let f = |x: &[f64]| vec![(x[0] - x[1]).abs()];
        let r = smoothness_probe(&f, 1, 1, 1e-6, 0).unwrap();
        assert!(!r.passed);
        assert!(r.max_discrepancy > 0.1);
    }

    #[test]
    fn bad_order() {
        assert!(smoothness_probe(&|x: &[f64]| x.to_vec(), 1, 3, 1e-6, 0).is_err());
    }
}
