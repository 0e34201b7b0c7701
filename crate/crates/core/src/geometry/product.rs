//! The maps used to concatenate two based `p`-simplices into one.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::bary::{min_of, Bary, Scalar};
use super::smooth_step::step;

/// `β(x, t) = (x_0, ..., x_{p-1}, t x_p, (1-t) x_p)`, a map `Δ^p × I -> Δ^{p+1}`.
pub fn beta<T: Scalar>(x: &Bary<T>, t: &T) -> Bary<T> {
    let p = x.dim();
    let mut out: Vec<T> = x.coords()[..p].to_vec();
    out.push(t.clone() * x.get(p).clone());
    out.push((T::one() - t.clone()) * x.get(p).clone());
    Bary::new_unchecked(out)
}

/// Which of the two faces of `Δ^{p+1}` the folding map lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Coordinate `p-1` vanishes: the first map applies.
    First,
    /// Coordinate `p+1` vanishes: the second map applies.
    Second,
}

/// The folding map `γ: Δ^{p+1} -> d^{p-1}Δ^p ∪ d^{p+1}Δ^p` (`p ≥ 1`).
pub fn gamma<T: Scalar>(x: &Bary<T>) -> Result<(Side, Bary<T>)> {
    let n = x.dim();
    if n < 2 {
        return Err(Error::InvalidParameters("γ needs Δ^{p+1} with p ≥ 1".into()));
    }
    let p = n - 1;
    let c = x.coords();
    let two = T::one() + T::one();
    let mut out: Vec<T> = c[..p - 1].to_vec();
    if c[p + 1] >= c[p - 1] {
        out.push(T::zero());
        out.push(c[p].clone() + two * c[p - 1].clone());
        out.push(c[p + 1].clone() - c[p - 1].clone());
        Ok((Side::First, Bary::new_unchecked(out)))
    } else {
        out.push(c[p - 1].clone() - c[p + 1].clone());
        out.push(c[p].clone() + two * c[p + 1].clone());
        out.push(T::zero());
        Ok((Side::Second, Bary::new_unchecked(out)))
    }
}

/// The second branch formula of `γ`, evaluated regardless of the branch
/// condition. Used to check that both formulas agree on the seam.
pub fn gamma_second_formula<T: Scalar>(x: &Bary<T>) -> Bary<T> {
    let c = x.coords();
    let p = c.len() - 2;
    let two = T::one() + T::one();
    let mut out: Vec<T> = c[..p - 1].to_vec();
    out.push(c[p - 1].clone() - c[p + 1].clone());
    out.push(c[p].clone() + two * c[p + 1].clone());
    out.push(T::zero());
    Bary::new_unchecked(out)
}

type VecFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A map `Δ^p -> R^d` with a designated base value.
#[derive(Clone)]
pub struct PointedMap {
    p: usize,
    base: Vec<f64>,
    f: VecFn,
}

impl PointedMap {
    pub fn new(p: usize, base: Vec<f64>, f: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static) -> Self {
        PointedMap { p, base, f: Arc::new(f) }
    }

    /// `x ↦ base + λ(min x) · (g(x) - base)` with `λ` switching on between
    /// `ε` and `2ε`: constant at the base value on `∂_ε Δ^p`.
    pub fn collapsed_near_boundary(
        p: usize,
        base: Vec<f64>,
        eps: f64,
        g: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        let b = base.clone();
        PointedMap::new(p, base, move |x| {
            let w = step(eps, 2.0 * eps, min_of(x));
            g(x).iter().zip(&b).map(|(gv, bv)| bv + w * (gv - bv)).collect()
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn base(&self) -> &[f64] {
        &self.base
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        (self.f)(x)
    }
}

fn delete(x: &[f64], k: usize) -> Vec<f64> {
    x.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, v)| *v).collect()
}

/// `(f + g) ∘ γ ∘ d^p`: the concatenation of two based maps of `Δ^p`.
pub fn concat_product(f: &PointedMap, g: &PointedMap) -> Result<PointedMap> {
    if f.p != g.p || f.p == 0 {
        return Err(Error::InvalidParameters("concatenation needs two maps on the same Δ^p, p ≥ 1".into()));
    }
    if f.base.len() != g.base.len() || f.base.iter().zip(&g.base).any(|(a, b)| (a - b).abs() > 1e-12) {
        return Err(Error::InvalidParameters("maps have different base points".into()));
    }
    let p = f.p;
    let (f, g) = (f.clone(), g.clone());
    Ok(PointedMap::new(p, f.base.clone(), move |x| {
        let mut lifted = x.to_vec();
        lifted.insert(p, 0.0);
        let (side, y) = gamma(&Bary::new_unchecked(lifted)).expect("p ≥ 1");
        match side {
            Side::First => f.eval(&delete(y.coords(), p - 1)),
            Side::Second => g.eval(&delete(y.coords(), p + 1)),
        }
    }))
}
