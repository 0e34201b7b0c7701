//! Connected components and the rank of the first homology.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::bary::Rational;
use crate::simplicial::{FiniteSimplicialSet, SimplexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi0 {
    pub count: usize,
    /// Vertex ids of each component.
    pub components: Vec<Vec<SimplexId>>,
}

pub fn pi0(x: &FiniteSimplicialSet) -> Pi0 {
    let components = x.components();
    Pi0 { count: components.len(), components }
}

/// Free rank of the abelianized edge-path group of a connected complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeGroupRank {
    pub vertices: usize,
    pub edges: usize,
    pub tree_edges: usize,
    pub relation_rank: usize,
    pub rank: usize,
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pivot);
        let lead = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone() / lead.clone();
            for j in c..cols {
                let v = rows[r][j].clone() * factor.clone();
                rows[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

/// `E - V + 1 - rank(relations)`: generators are the nondegenerate edges off
/// a spanning tree, relations come from the nondegenerate 2-simplices.
pub fn edge_group_rank(x: &FiniteSimplicialSet) -> Result<EdgeGroupRank> {
    let components = x.components();
    if components.len() != 1 {
        return Err(Error::InvalidParameters(format!("complex has {} components, rank needs one", components.len())));
    }
    let vertices = x.nondegenerate(0).len();
    let edges = x.nondegenerate(1);
    let mut reached = vec![false; x.len()];
    let mut in_tree = vec![false; x.len()];
    let start = x.nondegenerate(0)[0];
    reached[start] = true;
    let mut tree_edges = 0;
    let mut grew = true;
    while grew {
        grew = false;
        for &e in edges {
            let (a, b) = (x.stored_face(e, 1).base, x.stored_face(e, 0).base);
            if reached[a] != reached[b] {
                reached[a] = true;
                reached[b] = true;
                in_tree[e] = true;
                tree_edges += 1;
                grew = true;
            }
        }
    }
    let generators: Vec<SimplexId> = edges.iter().copied().filter(|&e| !in_tree[e]).collect();
    let column = |e: SimplexId| generators.iter().position(|&g| g == e);
    let relations: Vec<Vec<Rational>> = x
        .nondegenerate(2)
        .iter()
        .map(|&t| {
            let mut row = vec![Rational::zero(); generators.len()];
            for (i, sign) in [(0usize, 1i64), (1, -1), (2, 1)] {
                let face = x.stored_face(t, i);
                if face.is_degenerate() {
                    continue;
                }
                if let Some(c) = column(face.base) {
                    row[c] += Rational::from_integer(sign.into());
                }
            }
            row
        })
        .collect();
    let relation_rank = rank(relations);
    Ok(EdgeGroupRank {
        vertices,
        edges: edges.len(),
        tree_edges,
        relation_rank,
        rank: edges.len() + 1 - vertices - relation_rank,
    })
}
