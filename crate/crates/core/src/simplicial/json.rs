//! JSON exchange formats for complexes and maps.
//!
//! Complex: `{"dims": [[ids]...], "faces": {"id": [[word, target], ...]}}`,
//! optionally with `"labels": {"id": [vertices]}`.
//! Map: `{"assignment": {"id": [word, target]}}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::complex::FiniteSimplicialSet;
use super::map::SimplicialMap;
use super::simplex::Simplex;

type Pair = (Vec<usize>, usize);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dims: Vec<Vec<usize>>,
    pub faces: BTreeMap<String, Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub assignment: BTreeMap<String, Pair>,
}

fn parse_id(key: &str) -> Result<usize> {
    key.parse().map_err(|_| Error::Json(format!("simplex id {key:?} is not an integer")))
}

impl ComplexJson {
    pub fn from_complex(x: &FiniteSimplicialSet) -> Self {
        let dims =
            (0..=x.max_dim().unwrap_or(0)).map(|d| x.nondegenerate(d).to_vec()).take_while(|_| !x.is_empty()).collect();
        let faces = x
            .ids()
            .map(|id| {
                let n = if x.dim(id) == 0 { 0 } else { x.dim(id) + 1 };
                (id.to_string(), (0..n).map(|i| x.stored_face(id, i).to_pair()).collect())
            })
            .collect();
        let labels = x.labels().map(|ls| ls.iter().enumerate().map(|(i, l)| (i.to_string(), l.clone())).collect());
        ComplexJson { dims, faces, labels }
    }

    pub fn to_complex(&self) -> Result<FiniteSimplicialSet> {
        let mut dim_of: BTreeMap<usize, usize> = BTreeMap::new();
        for (d, ids) in self.dims.iter().enumerate() {
            for &id in ids {
                if dim_of.insert(id, d).is_some() {
                    return Err(Error::Json(format!("simplex {id} listed twice")));
                }
            }
        }
        let n = dim_of.len();
        if dim_of.keys().copied().ne(0..n) {
            return Err(Error::Json("simplex ids must be 0..n".into()));
        }
        let dims: Vec<usize> = dim_of.values().copied().collect();
        let mut faces = vec![Vec::new(); n];
        for (key, list) in &self.faces {
            let id = parse_id(key)?;
            if id >= n {
                return Err(Error::Json(format!("faces given for unknown simplex {id}")));
            }
            faces[id] = list
                .iter()
                .map(|(word, target)| {
                    let td = *dims.get(*target).ok_or_else(|| Error::Json(format!("unknown face target {target}")))?;
                    Ok(Simplex { degeneracy: super::simplex::Surjection::from_word(td, word)?, base: *target })
                })
                .collect::<Result<_>>()?;
        }
        let labels = match &self.labels {
            None => None,
            Some(m) => {
                let mut v = vec![Vec::new(); n];
                for (k, l) in m {
                    let id = parse_id(k)?;
                    if id >= n {
                        return Err(Error::Json(format!("label for unknown simplex {id}")));
                    }
                    v[id] = l.clone();
                }
                Some(v)
            }
        };
        FiniteSimplicialSet::from_parts(dims, faces, labels)
    }
}

impl MapJson {
    pub fn from_map(f: &SimplicialMap) -> Self {
        MapJson { assignment: f.assignment().iter().enumerate().map(|(i, s)| (i.to_string(), s.to_pair())).collect() }
    }

    pub fn to_map(&self, source: Arc<FiniteSimplicialSet>, target: Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
        let mut assignment = vec![None; source.len()];
        for (k, (word, t)) in &self.assignment {
            let id = parse_id(k)?;
            if id >= source.len() {
                return Err(Error::Json(format!("assignment for unknown simplex {id}")));
            }
            assignment[id] = Some(target.simplex_from_pair(word, *t)?);
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::Json(format!("simplex {i} has no image"))))
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(source, target, assignment)
    }
}

pub fn complex_to_json(x: &FiniteSimplicialSet) -> String {
    serde_json::to_string(&ComplexJson::from_complex(x)).expect("serializable")
}

pub fn complex_from_json(s: &str) -> Result<FiniteSimplicialSet> {
    serde_json::from_str::<ComplexJson>(s)?.to_complex()
}
