//! The generating cofibrations `I` and trivial cofibrations `J`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::simplicial::{boundary_complex, horn_complex, Subcomplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum GeneratorKind {
    /// Boundary inclusions `∂Δ[p] -> Δ[p]`, `p ≥ 0`.
    I,
    /// Horn inclusions `Λ[p,k] -> Δ[p]`, `p ≥ 1`.
    J,
}

/// One of the generating sets, truncated at `max_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratingSet {
    pub kind: GeneratorKind,
    pub max_dim: usize,
}

/// A single generator `A -> Δ[p]`; `k` is the horn vertex for `J`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub p: usize,
    pub k: Option<usize>,
    pub inclusion: Subcomplex,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "horn({},{k})", self.p),
            None => write!(f, "boundary({})", self.p),
        }
    }
}

impl GeneratingSet {
    pub fn new(kind: GeneratorKind, max_dim: usize) -> Self {
        GeneratingSet { kind, max_dim }
    }

    /// Generators ordered by `(p, k)`.
    pub fn generators(&self) -> Vec<Generator> {
        match self.kind {
            GeneratorKind::I => {
                (0..=self.max_dim).map(|p| Generator { p, k: None, inclusion: boundary_complex(p) }).collect()
            }
            GeneratorKind::J => (1..=self.max_dim)
                .flat_map(|p| (0..=p).map(move |k| (p, k)))
                .map(|(p, k)| Generator { p, k: Some(k), inclusion: horn_complex(p, k).expect("valid horn") })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(GeneratingSet::new(GeneratorKind::I, 3).generators().len(), 4);
        assert_eq!(GeneratingSet::new(GeneratorKind::J, 3).generators().len(), 9);
        let g = &GeneratingSet::new(GeneratorKind::I, 0).generators()[0];
        assert!(g.inclusion.complex.is_empty());
        assert_eq!(g.to_string(), "boundary(0)");
    }
}
