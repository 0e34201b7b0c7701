//! Finite stages of the gluing construction that factors a map through
//! cells attached along unsolved lifting problems.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::{pushout, standard_simplicial_set, FiniteSimplicialSet, SimplicialMap};

use super::generating::GeneratingSet;
use super::lifting::{rlp_check, yoneda_map, LiftingProblem, ProblemJson};

/// `X --j--> G^n --q--> Y` with `q ∘ j = f`.
#[derive(Clone, Debug)]
pub struct FactorizationStage {
    pub n: usize,
    pub complex: Arc<FiniteSimplicialSet>,
    /// Cells glued to produce this stage.
    pub attached: usize,
    pub j: SimplicialMap,
    pub q: SimplicialMap,
    /// Lifting problems of `q` still unsolved at this stage.
    pub residual: Vec<LiftingProblem>,
}

/// `{"stage": n, "attached": m, "residual_problems": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageJson {
    pub stage: usize,
    pub attached: usize,
    pub residual_problems: Vec<ProblemJson>,
}

impl FactorizationStage {
    pub fn to_json(&self) -> StageJson {
        StageJson {
            stage: self.n,
            attached: self.attached,
            residual_problems: self.residual.iter().map(LiftingProblem::to_json).collect(),
        }
    }

    /// `q ∘ j = f`, compared simplex by simplex.
    pub fn commutes_with(&self, f: &SimplicialMap) -> bool {
        self.j.then(&self.q).map(|c| c.assignment() == f.assignment()).unwrap_or(false)
    }
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub stages: Vec<FactorizationStage>,
}

impl Factorization {
    pub fn last(&self) -> &FactorizationStage {
        self.stages.last().expect("stage 0 always exists")
    }

    /// The final `q` has every lift up to the generating set's dimension.
    pub fn rlp_clean(&self) -> bool {
        self.last().residual.is_empty()
    }
}

/// Glues one copy of `Δ[p]` to the current stage along the top map of
/// each problem. Returns the new complex, the inclusion of the old stage,
/// and the extended map to `Y`.
fn glue(
    g: &Arc<FiniteSimplicialSet>,
    q: &SimplicialMap,
    gens: &GeneratingSet,
    problems: &[LiftingProblem],
) -> Result<(Arc<FiniteSimplicialSet>, SimplicialMap, SimplicialMap)> {
    let generators = gens.generators();
    let mut complex = g.clone();
    let mut incl = SimplicialMap::identity(g.clone());
    let mut q = q.clone();
    for pr in problems {
        let gen = generators
            .iter()
            .find(|gen| gen.p == pr.p && gen.k == pr.k)
            .ok_or_else(|| Error::InvalidParameters("problem from another generating set".into()))?;
        let a = gen.inclusion.complex.clone();
        // The top map lands in the original stage; carry it along the cells glued so far.
        let top = SimplicialMap::new(a, g.clone(), pr.top.clone())?.then(&incl)?;
        let po = pushout(&gen.inclusion.inclusion, &top)?;
        let delta = Arc::new(standard_simplicial_set(pr.p));
        let bottom = yoneda_map(&delta, q.target(), &pr.bottom);
        q = po.induced(&bottom, &q)?;
        incl = incl.then(&po.from_b)?;
        complex = po.complex.clone();
    }
    Ok((complex, incl, q))
}

/// Runs the gluing construction for `f: X -> Y` for at most `max_stages`
/// stages after stage 0, stopping early once no problem is left.
pub fn igc_factor(f: &SimplicialMap, gens: &GeneratingSet, max_stages: usize) -> Result<Factorization> {
    let x = f.source().clone();
    let mut stages = vec![FactorizationStage {
        n: 0,
        complex: x.clone(),
        attached: 0,
        j: SimplicialMap::identity(x),
        q: f.clone(),
        residual: rlp_check(f, gens).failures,
    }];
    for n in 1..=max_stages {
        let prev = stages.last().expect("nonempty");
        if prev.residual.is_empty() {
            break;
        }
        let (complex, incl, q) = glue(&prev.complex, &prev.q, gens, &prev.residual)?;
        let j = prev.j.then(&incl)?;
        let residual = rlp_check(&q, gens).failures;
        stages.push(FactorizationStage { n, complex, attached: prev.residual.len(), j, q, residual });
    }
    Ok(Factorization { stages })
}
