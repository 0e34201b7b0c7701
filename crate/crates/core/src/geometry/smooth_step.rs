//! Smooth transition functions built from `exp(-1/t)`.

use crate::error::{Error, Result};

/// `0` on `(-∞, a]`, `1` on `[b, ∞)`, smooth and monotone in between.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmoothStep {
    a: f64,
    b: f64,
}

fn sigma(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

impl SmoothStep {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParameters(format!("smooth step needs a < b, got a={a}, b={b}")));
        }
        Ok(SmoothStep { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn eval(&self, t: f64) -> f64 {
        if t <= self.a {
            return 0.0;
        }
        if t >= self.b {
            return 1.0;
        }
        let u = (t - self.a) / (self.b - self.a);
        let (l, r) = (sigma(u), sigma(1.0 - u));
        l / (l + r)
    }
}

/// Shorthand for `SmoothStep::new(a, b).unwrap().eval(t)` with constant breakpoints.
pub(crate) fn step(a: f64, b: f64, t: f64) -> f64 {
    SmoothStep { a, b }.eval(t)
}
