//! Affine maps between standard simplices, stored by their vertex images.

use rand::Rng;

use crate::error::{Error, Result};

use super::bary::{ratio, Bary, Rational, Scalar};

/// The named families of affine maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineKind {
    /// `d^i: Δ^{p-1} -> Δ^p`, skipping vertex `i`.
    Face(usize),
    /// `s^k: Δ^{p+1} -> Δ^p`, identifying vertices `k` and `k+1`.
    Degeneracy(usize),
    /// Vertex `j` goes to vertex `perm[j]`.
    Permutation(Vec<usize>),
}

/// An affine map `Δ^p -> Δ^q`; column `j` is the image of vertex `(j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSimplexMap<T = Rational> {
    p: usize,
    q: usize,
    columns: Vec<Bary<T>>,
}

impl<T: Scalar> AffineSimplexMap<T> {
    pub fn from_columns(columns: Vec<Bary<T>>) -> Result<Self> {
        let q = columns.first().ok_or_else(|| Error::InvalidParameters("no columns".into()))?.dim();
        if let Some(c) = columns.iter().find(|c| c.dim() != q) {
            return Err(Error::DimensionMismatch { expected: q, got: c.dim() });
        }
        Ok(AffineSimplexMap { p: columns.len() - 1, q, columns })
    }

    /// The map of the given kind whose target is `Δ^q` (for faces and
    /// degeneracies) or whose source and target are `Δ^q` (permutations).
    pub fn affine(q: usize, kind: AffineKind) -> Result<Self> {
        let images: Vec<usize> = match &kind {
            AffineKind::Face(i) => {
                if q == 0 || *i > q {
                    return Err(Error::InvalidParameters(format!("no face d^{i} into Δ^{q}")));
                }
                (0..q).map(|j| if j < *i { j } else { j + 1 }).collect()
            }
            AffineKind::Degeneracy(k) => {
                if *k > q {
                    return Err(Error::InvalidParameters(format!("no degeneracy s^{k} onto Δ^{q}")));
                }
                (0..q + 2).map(|j| if j <= *k { j } else { j - 1 }).collect()
            }
            AffineKind::Permutation(perm) => {
                let mut sorted = perm.clone();
                sorted.sort_unstable();
                if sorted != (0..=q).collect::<Vec<_>>() {
                    return Err(Error::InvalidParameters(format!("{perm:?} is not a permutation of 0..={q}")));
                }
                perm.clone()
            }
        };
        Self::from_columns(images.into_iter().map(|v| Bary::vertex(q, v)).collect())
    }

    pub fn face(q: usize, i: usize) -> Result<Self> {
        Self::affine(q, AffineKind::Face(i))
    }

    pub fn degeneracy(q: usize, k: usize) -> Result<Self> {
        Self::affine(q, AffineKind::Degeneracy(k))
    }

    /// The permutation of `Δ^q` swapping vertices `a` and `b`.
    pub fn transposition(q: usize, a: usize, b: usize) -> Result<Self> {
        let mut perm: Vec<usize> = (0..=q).collect();
        if a > q || b > q {
            return Err(Error::InvalidParameters(format!("vertex out of range for Δ^{q}")));
        }
        perm.swap(a, b);
        Self::affine(q, AffineKind::Permutation(perm))
    }

    pub fn identity(p: usize) -> Self {
        Self::from_columns((0..=p).map(|j| Bary::vertex(p, j)).collect()).expect("nonempty")
    }

    pub fn source_dim(&self) -> usize {
        self.p
    }

    pub fn target_dim(&self) -> usize {
        self.q
    }

    pub fn columns(&self) -> &[Bary<T>] {
        &self.columns
    }

    /// Matrix entry `(row, col)`: coordinate `row` of the image of vertex `col`.
    pub fn entry(&self, row: usize, col: usize) -> &T {
        self.columns[col].get(row)
    }

    pub fn eval(&self, x: &Bary<T>) -> Result<Bary<T>> {
        if x.dim() != self.p {
            return Err(Error::DimensionMismatch { expected: self.p, got: x.dim() });
        }
        let mut out = vec![T::zero(); self.q + 1];
        for (xj, col) in x.coords().iter().zip(&self.columns) {
            for (o, c) in out.iter_mut().zip(col.coords()) {
                *o = o.clone() + xj.clone() * c.clone();
            }
        }
        Ok(Bary::new_unchecked(out))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AffineSimplexMap<T>) -> Result<AffineSimplexMap<T>> {
        let columns = self.columns.iter().map(|c| other.eval(c)).collect::<Result<_>>()?;
        Self::from_columns(columns)
    }

    pub fn to_f64(&self) -> AffineSimplexMap<f64> {
        AffineSimplexMap { p: self.p, q: self.q, columns: self.columns.iter().map(Bary::to_f64).collect() }
    }
}

impl AffineSimplexMap<Rational> {
    /// A pseudorandom affine map whose vertex images have denominator `den`.
    pub fn random(p: usize, q: usize, den: u32, rng: &mut impl Rng) -> Self {
        let columns = (0..=p)
            .map(|_| {
                let mut cuts: Vec<u32> = (0..q).map(|_| rng.gen_range(0..=den)).collect();
                cuts.sort_unstable();
                let mut prev = 0;
                let mut coords = Vec::with_capacity(q + 1);
                for c in cuts.into_iter().chain(std::iter::once(den)) {
                    coords.push(ratio((c - prev) as i64, den as i64));
                    prev = c;
                }
                Bary::new(coords).expect("partition of unity")
            })
            .collect();
        Self::from_columns(columns).expect("nonempty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[(i64, i64)]) -> Bary<Rational> {
        Bary::new(v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    #[test]
    fn degeneracy_merges_coordinates() {
        let s1 = AffineSimplexMap::<Rational>::degeneracy(1, 1).unwrap();
        let x = r(&[(1, 5), (3, 10), (1, 2)]);
        assert_eq!(s1.eval(&x).unwrap(), r(&[(1, 5), (4, 5)]));
    }

    #[test]
    fn degeneracy_after_face_is_identity() {
        for p in 0..=4 {
            for k in 0..=p {
                let d = AffineSimplexMap::<Rational>::face(p + 1, k).unwrap();
                let s = AffineSimplexMap::degeneracy(p, k).unwrap();
                assert_eq!(d.then(&s).unwrap(), AffineSimplexMap::identity(p));
            }
        }
    }

    #[test]
    fn transposition_is_an_involution() {
        let t = AffineSimplexMap::<Rational>::transposition(2, 0, 2).unwrap();
        let x = r(&[(1, 5), (3, 10), (1, 2)]);
        assert_eq!(t.eval(&x).unwrap(), r(&[(1, 2), (3, 10), (1, 5)]));
        assert_eq!(t.then(&t).unwrap(), AffineSimplexMap::identity(2));
    }

    #[test]
    fn bad_indices_are_rejected() {
        assert!(AffineSimplexMap::<Rational>::face(2, 3).is_err());
        assert!(AffineSimplexMap::<Rational>::affine(2, AffineKind::Permutation(vec![0, 0, 1])).is_err());
    }
}
