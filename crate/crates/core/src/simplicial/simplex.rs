//! Simplices in Eilenberg–Zilber normal form.
//!
//! Every simplex `x` of a simplicial set is uniquely `η^*(τ)` for a monotone
//! surjection `η: [n] -> [m]` and a nondegenerate `m`-simplex `τ`. Only the
//! nondegenerate simplices are stored by a complex; degenerate ones are carried
//! as the pair `(η, τ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stable identifier of a nondegenerate simplex inside one complex.
pub type SimplexId = usize;

/// A monotone map `[n] -> [m]` given by its list of values.
pub type MonotoneMap = Vec<usize>;

/// A monotone surjection `[n] -> [m]`, stored as its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surjection(Vec<usize>);

impl Surjection {
    pub fn identity(m: usize) -> Self {
        Surjection((0..=m).collect())
    }

    /// Builds `s_{j_1} ... s_{j_k}` acting on an `m`-simplex from a strictly
    /// decreasing index list.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Self> {
        if word.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::MalformedComplex(format!("degeneracy word {word:?} is not strictly decreasing")));
        }
        let n = m + word.len();
        if let Some(&top) = word.first() {
            if top >= n {
                return Err(Error::MalformedComplex(format!("degeneracy index {top} out of range for dimension {n}")));
            }
        }
        let mut values = Vec::with_capacity(n + 1);
        values.push(0);
        for i in 0..n {
            let last = values[i];
            values.push(if word.contains(&i) { last } else { last + 1 });
        }
        Ok(Surjection(values))
    }

    /// Wraps a value list; it must start at 0 and increase by steps of 0 or 1.
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        if values.first() != Some(&0) || values.windows(2).any(|w| w[1] != w[0] && w[1] != w[0] + 1) {
            return Err(Error::MalformedComplex(format!("{values:?} is not a monotone surjection")));
        }
        Ok(Surjection(values))
    }

    /// Normal-form word: the indices `i` with `η(i) = η(i+1)`, decreasing.
    pub fn word(&self) -> Vec<usize> {
        let mut w: Vec<usize> = (0..self.source_dim()).filter(|&i| self.0[i] == self.0[i + 1]).collect();
        w.reverse();
        w
    }

    pub fn source_dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        *self.0.last().expect("surjection has a nonempty source")
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }
}

/// A simplex `η^*(base)` of some finite simplicial set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub degeneracy: Surjection,
    pub base: SimplexId,
}

impl Simplex {
    pub fn nondegenerate(base: SimplexId, dim: usize) -> Self {
        Simplex { degeneracy: Surjection::identity(dim), base }
    }

    pub fn dim(&self) -> usize {
        self.degeneracy.source_dim()
    }

    pub fn base_dim(&self) -> usize {
        self.degeneracy.target_dim()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracy.is_identity()
    }

    /// `(word, target)` pair used by the JSON formats.
    pub fn to_pair(&self) -> (Vec<usize>, SimplexId) {
        (self.degeneracy.word(), self.base)
    }
}

/// `δ^i: [n-1] -> [n]`, skipping `i`.
pub fn coface(n: usize, i: usize) -> MonotoneMap {
    (0..n).map(|k| if k < i { k } else { k + 1 }).collect()
}

/// `σ^j: [n+1] -> [n]`, hitting `j` twice.
pub fn codegeneracy(n: usize, j: usize) -> MonotoneMap {
    (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect()
}

/// Epi–mono factorization of a monotone map: returns `(surjection, image)`
/// with `map = image ∘ surjection`.
pub fn epi_mono(map: &[usize]) -> (Surjection, Vec<usize>) {
    let mut image: Vec<usize> = Vec::new();
    let mut values = Vec::with_capacity(map.len());
    for &v in map {
        if image.last() != Some(&v) {
            image.push(v);
        }
        values.push(image.len() - 1);
    }
    (Surjection(values), image)
}

/// All monotone surjections `[n] -> [m]`, ordered by their normal-form words.
pub fn surjections(n: usize, m: usize) -> Vec<Surjection> {
    if m > n {
        return Vec::new();
    }
    let k = n - m;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    let mut sets = Vec::new();
    rec(0, n, k, &mut chosen, &mut sets);
    for mut s in sets {
        s.reverse();
        out.push(Surjection::from_word(m, &s).expect("valid word"));
    }
    out
}
