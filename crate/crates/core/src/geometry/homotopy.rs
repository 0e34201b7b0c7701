//! Homotopies `H: D × [0,1] -> D` that can be evaluated pointwise.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

use super::bary::{min_of, renormalize, Bary};
use super::smooth_step::step;

/// A subspace of `Δ^p` named by a membership rule.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Subspace {
    Whole,
    /// `Δ^p_k̂`: points with `x_k > 0`.
    HalfOpen(usize),
    /// `Λ^p_k`: points with `x_i = 0` for some `i ≠ k`.
    Horn(usize),
    /// `Λ^p_k ∩ Δ^p_k̂`.
    HalfOpenHorn(usize),
    /// `Δ̇^p`: points with some zero coordinate.
    Boundary,
    /// `∂_ε Δ^p`: points with some coordinate `≤ ε`.
    NearBoundary(f64),
    Barycenter,
}

impl Subspace {
    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        let horn = |k: usize| x.iter().enumerate().any(|(i, v)| i != k && v.abs() <= tol);
        match *self {
            Subspace::Whole => true,
            Subspace::HalfOpen(k) => x[k] > tol,
            Subspace::Horn(k) => horn(k),
            Subspace::HalfOpenHorn(k) => x[k] > tol && horn(k),
            Subspace::Boundary => min_of(x) <= tol,
            Subspace::NearBoundary(eps) => min_of(x) <= eps + tol,
            Subspace::Barycenter => {
                let b = 1.0 / x.len() as f64;
                x.iter().all(|v| (v - b).abs() <= tol)
            }
        }
    }
}

/// Named time subinterval of a homotopy.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stage {
    pub name: String,
    pub start: f64,
    pub end: f64,
}

type PointFn = Arc<dyn Fn(&[f64], f64) -> Vec<f64> + Send + Sync>;

/// A homotopy on a subspace of `Δ^p`, its fixed subspace, and its stage schedule.
#[derive(Clone)]
pub struct EvaluableHomotopy {
    p: usize,
    domain: Subspace,
    fixed: Subspace,
    target: Subspace,
    stages: Vec<Stage>,
    f: PointFn,
}

impl fmt::Debug for EvaluableHomotopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EvaluableHomotopy")
            .field("p", &self.p)
            .field("domain", &self.domain)
            .field("fixed", &self.fixed)
            .field("target", &self.target)
            .field("stages", &self.stages)
            .finish()
    }
}

impl EvaluableHomotopy {
    /// `names` lists the stages in order; each gets an equal share of `[0,1]`.
    pub fn new(
        p: usize,
        domain: Subspace,
        fixed: Subspace,
        target: Subspace,
        names: &[&str],
        f: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        let n = names.len().max(1) as f64;
        let stages = names
            .iter()
            .enumerate()
            .map(|(i, name)| Stage { name: name.to_string(), start: i as f64 / n, end: (i + 1) as f64 / n })
            .collect();
        EvaluableHomotopy { p, domain, fixed, target, stages, f: Arc::new(f) }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    /// Subspace held pointwise fixed at all times.
    pub fn fixed(&self) -> &Subspace {
        &self.fixed
    }

    /// Subspace containing `H(D, 1)` (for the part of the domain the
    /// homotopy is meant to retract).
    pub fn target(&self) -> &Subspace {
        &self.target
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// Name of the stage active at time `s`.
    pub fn stage_at(&self, s: f64) -> &str {
        let idx = self.stages.iter().position(|st| s < st.end).unwrap_or(self.stages.len().saturating_sub(1));
        self.stages.get(idx).map_or("", |st| st.name.as_str())
    }

    /// Raw evaluation on coordinate slices; no validation.
    pub fn eval_raw(&self, x: &[f64], s: f64) -> Vec<f64> {
        (self.f)(x, s)
    }

    pub fn eval(&self, x: &Bary<f64>, s: f64) -> Result<Bary<f64>> {
        if x.dim() != self.p {
            return Err(Error::DimensionMismatch { expected: self.p, got: x.dim() });
        }
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::OutOfDomain(format!("time {s} outside [0,1]")));
        }
        if !self.domain.contains(x.coords(), 0.0) {
            return Err(Error::OutOfDomain(format!("{:?} is outside the domain {:?}", x.coords(), self.domain)));
        }
        Ok(Bary::new_unchecked(self.eval_raw(x.coords(), s)))
    }

    /// `H(·, 1)` as a map.
    pub fn end_map(&self) -> impl Fn(&[f64]) -> Vec<f64> + '_ {
        move |x| self.eval_raw(x, 1.0)
    }

    /// `π ∘ H ∘ (π^{-1} × id)` for a vertex permutation `π` (`perm[j]` is
    /// the image of vertex `j`); the subspace descriptors are relabelled.
    pub fn conjugate(self, perm: Vec<usize>, domain: Subspace, fixed: Subspace, target: Subspace) -> Self {
        let mut inv = vec![0; perm.len()];
        for (j, &pj) in perm.iter().enumerate() {
            inv[pj] = j;
        }
        let inner = self.f.clone();
        let f = move |x: &[f64], s: f64| {
            let pulled: Vec<f64> = perm.iter().map(|&pj| x[pj]).collect();
            let out = inner(&pulled, s);
            inv.iter().map(|&ij| out[ij]).collect()
        };
        EvaluableHomotopy { p: self.p, domain, fixed, target, stages: self.stages, f: Arc::new(f) }
    }
}

/// Reparametrization used to splice consecutive stages.
pub(crate) fn splice(t: f64) -> f64 {
    step(0.1, 0.9, t)
}

/// Runs `n` stages in sequence: stage `i` sees local time `λ(n s - i)`.
/// Time 0 returns the input untouched; each stage output is renormalized.
pub(crate) fn run_staged(n: usize, x: &[f64], s: f64, apply: impl Fn(usize, &[f64], f64) -> Vec<f64>) -> Vec<f64> {
    let mut cur = x.to_vec();
    if s <= 0.0 {
        return cur;
    }
    for i in 0..n {
        let local = splice(n as f64 * s - i as f64);
        if local <= 0.0 {
            break;
        }
        cur = renormalize(apply(i, &cur, local));
    }
    cur
}
