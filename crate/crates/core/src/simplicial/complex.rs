use crate::error::{Error, Result};

use super::simplex::{codegeneracy, coface, epi_mono, Simplex, SimplexId, Surjection};

/// A finite simplicial set presented by its nondegenerate simplices and their
/// faces. Complexes are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    dims: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
    by_dim: Vec<Vec<SimplexId>>,
    labels: Option<Vec<Vec<usize>>>,
}

/// Incremental constructor; `build` checks the simplicial identities.
#[derive(Default, Debug, Clone)]
pub struct Builder {
    dims: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
    labels: Vec<Option<Vec<usize>>>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self) -> SimplexId {
        self.add(0, Vec::new(), None)
    }

    /// Adds a nondegenerate simplex of dimension `dim` whose `i`th face is
    /// `faces[i]`. Vertices take an empty face list.
    pub fn add(&mut self, dim: usize, faces: Vec<Simplex>, label: Option<Vec<usize>>) -> SimplexId {
        self.dims.push(dim);
        self.faces.push(faces);
        self.labels.push(label);
        self.dims.len() - 1
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn build(self) -> Result<FiniteSimplicialSet> {
        let labels = if !self.labels.is_empty() && self.labels.iter().all(Option::is_some) {
            Some(self.labels.into_iter().map(Option::unwrap).collect())
        } else {
            None
        };
        FiniteSimplicialSet::from_parts(self.dims, self.faces, labels)
    }
}

impl FiniteSimplicialSet {
    pub fn empty() -> Self {
        FiniteSimplicialSet { dims: Vec::new(), faces: Vec::new(), by_dim: Vec::new(), labels: None }
    }

    pub(crate) fn from_parts(
        dims: Vec<usize>,
        faces: Vec<Vec<Simplex>>,
        labels: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let max = dims.iter().copied().max();
        let mut by_dim = vec![Vec::new(); max.map_or(0, |d| d + 1)];
        for (id, &d) in dims.iter().enumerate() {
            by_dim[d].push(id);
        }
        let set = FiniteSimplicialSet { dims, faces, by_dim, labels };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<()> {
        for id in 0..self.len() {
            let d = self.dims[id];
            let expected = if d == 0 { 0 } else { d + 1 };
            if self.faces[id].len() != expected {
                return Err(Error::MalformedComplex(format!(
                    "simplex {id} of dimension {d} has {} faces",
                    self.faces[id].len()
                )));
            }
            for f in &self.faces[id] {
                if f.base >= self.len() {
                    return Err(Error::MalformedComplex(format!("face target {} does not exist", f.base)));
                }
                if f.dim() + 1 != d || self.dims[f.base] != f.base_dim() {
                    return Err(Error::MalformedComplex(format!("face of simplex {id} has inconsistent dimension")));
                }
            }
        }
        for id in 0..self.len() {
            let d = self.dims[id];
            if d < 2 {
                continue;
            }
            let x = Simplex::nondegenerate(id, d);
            for j in 1..=d {
                for i in 0..j {
                    let lhs = self.face(&self.face(&x, j), i);
                    let rhs = self.face(&self.face(&x, i), j - 1);
                    if lhs != rhs {
                        return Err(Error::MalformedComplex(format!(
                            "d_{i} d_{j} != d_{} d_{i} on simplex {id}",
                            j - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Largest dimension of a nondegenerate simplex, `None` when empty.
    pub fn max_dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn dim(&self, id: SimplexId) -> usize {
        self.dims[id]
    }

    pub fn nondegenerate(&self, dim: usize) -> &[SimplexId] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    /// Number of nondegenerate simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn ids(&self) -> impl Iterator<Item = SimplexId> {
        0..self.len()
    }

    /// Stored `i`th face of a nondegenerate simplex.
    pub fn stored_face(&self, id: SimplexId, i: usize) -> &Simplex {
        &self.faces[id][i]
    }

    pub fn labels(&self) -> Option<&[Vec<usize>]> {
        self.labels.as_deref()
    }

    pub fn label(&self, id: SimplexId) -> Option<&[usize]> {
        self.labels.as_ref().map(|l| l[id].as_slice())
    }

    pub fn id_of_label(&self, label: &[usize]) -> Option<SimplexId> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub(crate) fn with_labels(mut self, labels: Option<Vec<Vec<usize>>>) -> Self {
        self.labels = labels;
        self
    }

    /// Pulls `x` back along a monotone map `θ: [n'] -> [dim x]`, returning the
    /// normal form of `θ^*(x)`.
    pub fn pull(&self, x: &Simplex, theta: &[usize]) -> Simplex {
        let composed: Vec<usize> = theta.iter().map(|&k| x.degeneracy.apply(k)).collect();
        self.pull_nondeg(x.base, &composed)
    }

    fn pull_nondeg(&self, base: SimplexId, map: &[usize]) -> Simplex {
        let m = self.dims[base];
        let (epi, image) = epi_mono(map);
        if image.len() == m + 1 {
            return Simplex { degeneracy: epi, base };
        }
        let c = (0..=m).rev().find(|k| !image.contains(k)).expect("image is proper");
        let reduced: Vec<usize> = image.iter().map(|&v| if v > c { v - 1 } else { v }).collect();
        let next: Vec<usize> = epi.values().iter().map(|&e| reduced[e]).collect();
        let face = &self.faces[base][c];
        self.pull(face, &next)
    }

    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        debug_assert!(x.dim() > 0 && i <= x.dim());
        self.pull(x, &coface(x.dim(), i))
    }

    pub fn degeneracy(&self, x: &Simplex, j: usize) -> Simplex {
        debug_assert!(j <= x.dim());
        self.pull(x, &codegeneracy(x.dim(), j))
    }

    /// Vertex ids of `x` in order.
    pub fn vertices(&self, x: &Simplex) -> Vec<SimplexId> {
        (0..=x.dim()).map(|k| self.pull(x, &[k]).base).collect()
    }

    pub fn simplex(&self, id: SimplexId) -> Simplex {
        Simplex::nondegenerate(id, self.dims[id])
    }

    /// Builds a simplex from a JSON-style `(word, target)` pair.
    pub fn simplex_from_pair(&self, word: &[usize], target: SimplexId) -> Result<Simplex> {
        if target >= self.len() {
            return Err(Error::MalformedComplex(format!("unknown simplex {target}")));
        }
        Ok(Simplex { degeneracy: Surjection::from_word(self.dims[target], word)?, base: target })
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<SimplexId>> {
        let mut parent: Vec<SimplexId> = (0..self.len()).collect();
        fn find(parent: &mut [SimplexId], mut v: SimplexId) -> SimplexId {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &e in self.nondegenerate(1) {
            let (a, b) = (self.faces[e][1].base, self.faces[e][0].base);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: std::collections::BTreeMap<SimplexId, Vec<SimplexId>> = Default::default();
        for &v in self.nondegenerate(0) {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut out: Vec<Vec<SimplexId>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Euler characteristic of the nondegenerate cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }
}
