//! Lifting properties, gluing factorizations, horn filling and invariants.

pub mod fill;
pub mod generating;
pub mod igc;
pub mod invariants;
pub mod lifting;

pub use fill::fill_horn_numeric;
pub use generating::{GeneratingSet, Generator, GeneratorKind};
pub use igc::{igc_factor, Factorization, FactorizationStage, StageJson};
pub use invariants::{edge_group_rank, pi0, EdgeGroupRank, Pi0};
pub use lifting::{find_lift, rlp_check, yoneda_map, LiftingProblem, ProblemJson, RlpReport};
