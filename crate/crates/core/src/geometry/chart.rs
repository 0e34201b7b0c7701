//! The cone charts `φ_i(x, t) = (1-t)(i) + t d^i(x)` of `Δ^p`.

use serde::Serialize;

use crate::error::{Error, Result};

use super::bary::{Bary, Scalar};

/// Chart coordinates of a point of `Δ^p` with respect to vertex `i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChartDecomp<T: Scalar> {
    pub i: usize,
    pub x: Bary<T>,
    pub t: T,
}

/// `φ_i(x, t)` for `x ∈ Δ^{p-1}`, `t ∈ [0, 1]`.
pub fn phi_chart<T: Scalar>(i: usize, x: &Bary<T>, t: &T) -> Result<Bary<T>> {
    let p = x.dim() + 1;
    if i > p {
        return Err(Error::InvalidParameters(format!("no vertex {i} in Δ^{p}")));
    }
    if *t < T::zero() || *t > T::one() {
        return Err(Error::OutOfDomain(format!("chart parameter {t:?} outside [0,1]")));
    }
    let mut out = Vec::with_capacity(p + 1);
    for k in 0..=p {
        out.push(match k.cmp(&i) {
            std::cmp::Ordering::Less => t.clone() * x.get(k).clone(),
            std::cmp::Ordering::Equal => T::one() - t.clone(),
            std::cmp::Ordering::Greater => t.clone() * x.get(k - 1).clone(),
        });
    }
    Ok(Bary::new_unchecked(out))
}

/// Inverts `φ_i`. Points of the opposite face (`x_i = 0`) are outside the
/// chart; at the vertex `(i)` itself the `x` part is the barycenter.
pub fn chart_decompose<T: Scalar>(z: &Bary<T>, i: usize) -> Result<ChartDecomp<T>> {
    let p = z.dim();
    if p == 0 || i > p {
        return Err(Error::InvalidParameters(format!("no chart {i} on Δ^{p}")));
    }
    if !(*z.get(i) > T::zero()) {
        return Err(Error::OutOfDomain(format!("point lies on the face opposite vertex {i}")));
    }
    let t = T::one() - z.get(i).clone();
    let x = if t.is_zero() {
        Bary::barycenter(p - 1)
    } else {
        Bary::new_unchecked((0..=p).filter(|&k| k != i).map(|k| z.get(k).clone() / t.clone()).collect())
    };
    Ok(ChartDecomp { i, x, t })
}

/// Transition between the charts at `i` and `j` on their overlap.
///
/// A point `φ_i(φ_{j'}(y, τ), t)` (with `j'` the position of `j` in the
/// face opposite `i`) equals `φ_j(φ_{i'}(y, τ'), t')` where
/// `(τ', t') = (tτ / (1 - t(1-τ)), 1 - t(1-τ))`. Returns `(y, τ', t')`.
pub fn chart_transition<T: Scalar>(i: usize, j: usize, y: &Bary<T>, tau: &T, t: &T) -> Result<(Bary<T>, T, T)> {
    let p = y.dim() + 2;
    if i == j || i > p || j > p {
        return Err(Error::InvalidParameters(format!("charts {i}, {j} on Δ^{p} do not overlap")));
    }
    let (zero, one) = (T::zero(), T::one());
    if !(*tau > zero && *tau <= one && *t > zero && *t < one) {
        return Err(Error::OutOfDomain("transition needs τ ∈ (0,1], t ∈ (0,1)".into()));
    }
    let t_new = one.clone() - t.clone() * (one - tau.clone());
    assert!(!t_new.is_zero(), "denominator vanished inside the overlap");
    let tau_new = t.clone() * tau.clone() / t_new.clone();
    Ok((y.clone(), tau_new, t_new))
}

/// Position of vertex `j` of `Δ^p` inside the face opposite `i`.
pub fn index_in_face(i: usize, j: usize) -> usize {
    if j < i {
        j
    } else {
        j - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::bary::{ratio, Rational};

    #[test]
    fn evaluates_and_decomposes() {
        let x = Bary::new(vec![0.5, 0.5]).unwrap();
        let z = phi_chart(0, &x, &0.5).unwrap();
        assert_eq!(z.coords(), &[0.5, 0.25, 0.25]);
        let d = chart_decompose(&z, 0).unwrap();
        assert_eq!((d.t, d.x.coords()), (0.5, &[0.5, 0.5][..]));
        let v = phi_chart(1, &Bary::new(vec![1.0]).unwrap(), &0.0).unwrap();
        assert_eq!(v.coords(), &[0.0, 1.0]);
    }

    #[test]
    fn opposite_face_is_out_of_domain() {
        let z = Bary::new(vec![0.0, 0.4, 0.6]).unwrap();
        assert!(matches!(chart_decompose(&z, 0), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn transition_values() {
        let y = Bary::new(vec![ratio(1, 1)]).unwrap();
        let (_, tau, t) = chart_transition(0, 1, &y, &ratio(1, 2), &ratio(1, 2)).unwrap();
        assert_eq!((tau, t), (ratio(1, 3), ratio(3, 4)));
        let (_, tau, t) = chart_transition::<Rational>(0, 1, &y, &ratio(1, 1), &ratio(2, 7)).unwrap();
        assert_eq!((tau, t), (ratio(2, 7), ratio(1, 1)));
    }
}
