//! Finite simplicial sets as combinatorial data.

pub mod complex;
pub mod constructions;
pub mod enumerate;
pub mod json;
pub mod map;
pub mod simplex;

pub use complex::{Builder, FiniteSimplicialSet};
pub use constructions::{
    boundary_complex, cone, horn_complex, pushout, standard_simplicial_set, subcomplex_of_standard, Pushout, Subcomplex,
};
pub use enumerate::{enumerate_simplices, fill_horn, is_kan_up_to, HornReport, MapSearch};
pub use map::SimplicialMap;
pub use simplex::{Simplex, SimplexId, Surjection};
