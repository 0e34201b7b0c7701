//! Barycentric points of the standard simplices.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = BigRational;

/// Coordinate type of barycentric points: `f64` or [`Rational`].
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + ToPrimitive + Send + Sync + 'static {
    /// Slack allowed by the membership checks (zero for exact types).
    fn membership_tol() -> Self;
    fn from_usize_exact(n: usize) -> Self;
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn membership_tol() -> Self {
        1e-12
    }
    fn from_usize_exact(n: usize) -> Self {
        n as f64
    }
}

impl Scalar for Rational {
    fn membership_tol() -> Self {
        Rational::from_integer(0.into())
    }
    fn from_usize_exact(n: usize) -> Self {
        Rational::from_usize(n).expect("usize fits")
    }
}

/// Shorthand for the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A point `(x_0, ..., x_p)` of `Δ^p`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bary<T = f64> {
    coords: Vec<T>,
}

impl<T: Scalar> Bary<T> {
    /// Validates nonnegativity and the unit sum, up to [`Scalar::membership_tol`].
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameters("a barycentric point needs at least one coordinate".into()));
        }
        let tol = T::membership_tol();
        let sum = coords.iter().fold(T::zero(), |a, x| a + x.clone());
        if coords.iter().any(|x| *x < -tol.clone()) || (sum - T::one()).abs() > tol {
            return Err(Error::OutOfDomain(format!("{coords:?} is not a point of a simplex")));
        }
        Ok(Bary { coords })
    }

    pub(crate) fn new_unchecked(coords: Vec<T>) -> Self {
        Bary { coords }
    }

    pub fn vertex(p: usize, i: usize) -> Self {
        Bary { coords: (0..=p).map(|k| if k == i { T::one() } else { T::zero() }).collect() }
    }

    pub fn barycenter(p: usize) -> Self {
        let w = T::one() / T::from_usize_exact(p + 1);
        Bary { coords: vec![w; p + 1] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &T {
        &self.coords[i]
    }

    pub fn min_coord(&self) -> T {
        self.coords.iter().skip(1).fold(self.coords[0].clone(), |m, x| if *x < m { x.clone() } else { m })
    }

    /// All coordinates strictly positive.
    pub fn is_interior(&self) -> bool {
        self.coords.iter().all(|x| *x > T::zero())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    pub fn to_f64(&self) -> Bary<f64> {
        Bary { coords: self.coords.iter().map(Scalar::to_f64_lossy).collect() }
    }
}

impl Bary<f64> {
    /// Clamps tiny negative drift to zero and rescales to unit sum.
    pub fn renormalized(coords: Vec<f64>) -> Self {
        Bary { coords: renormalize(coords) }
    }

    pub fn max_abs_diff(&self, other: &Bary<f64>) -> f64 {
        max_abs_diff(&self.coords, &other.coords)
    }

    /// Some coordinate is within `tol` of zero.
    pub fn on_boundary(&self, tol: f64) -> bool {
        self.coords.iter().any(|x| x.abs() <= tol)
    }
}

impl Bary<Rational> {
    /// Exact rational approximation of a float point: each coordinate is
    /// rounded to a multiple of `1/den` and the last absorbs the remainder.
    pub fn from_f64_grid(x: &[f64], den: i64) -> Result<Self> {
        let mut coords: Vec<Rational> =
            x[..x.len() - 1].iter().map(|v| ratio((v * den as f64).round() as i64, den)).collect();
        let rest = coords.iter().fold(Rational::from_integer(1.into()), |a, c| a - c);
        coords.push(rest);
        Bary::new(coords)
    }
}

impl<T: Scalar> Serialize for Bary<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<f64> = self.coords.iter().map(Scalar::to_f64_lossy).collect();
        v.serialize(s)
    }
}

pub(crate) fn renormalize(mut v: Vec<f64>) -> Vec<f64> {
    for x in v.iter_mut() {
        if *x < 0.0 {
            *x = 0.0;
        }
    }
    let sum: f64 = v.iter().sum();
    if sum > 0.0 {
        for x in v.iter_mut() {
            *x /= sum;
        }
    }
    v
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Distance of a coordinate vector from satisfying the simplex constraints:
/// the larger of `|Σx - 1|` and the most negative coordinate's magnitude.
pub fn simplex_drift(x: &[f64]) -> f64 {
    let neg = x.iter().copied().fold(0.0f64, |m, v| m.max(-v));
    (x.iter().sum::<f64>() - 1.0).abs().max(neg)
}

pub(crate) fn min_of(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

/// All points of `Δ^p` whose coordinates are multiples of `1/n`, as integer
/// numerators in lexicographic order.
pub fn lattice_points(p: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, p + 1, &mut Vec::new(), &mut out);
    out
}

/// The lattice grid of step `1/n` as float points.
pub fn grid_f64(p: usize, n: usize) -> Vec<Bary<f64>> {
    lattice_points(p, n)
        .into_iter()
        .map(|v| Bary::new_unchecked(v.into_iter().map(|k| k as f64 / n as f64).collect()))
        .collect()
}

/// The lattice grid of step `1/n` as exact points.
pub fn grid_rational(p: usize, n: usize) -> Vec<Bary<Rational>> {
    lattice_points(p, n)
        .into_iter()
        .map(|v| Bary::new_unchecked(v.into_iter().map(|k| ratio(k as i64, n as i64)).collect()))
        .collect()
}
