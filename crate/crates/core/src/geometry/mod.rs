//! The smooth standard simplices and their explicit homotopies.

pub mod affine;
pub mod bary;
pub mod boundary;
pub mod chart;
pub mod deformation;
pub mod good_nbhd;
pub mod homotopy;
pub mod probe;
pub mod product;
pub mod smooth_step;

pub use affine::{AffineKind, AffineSimplexMap};
pub use bary::{Bary, Rational, Scalar};
pub use boundary::build_boundary_homotopy_t;
pub use chart::{chart_decompose, chart_transition, phi_chart, ChartDecomp};
pub use deformation::{build_full_horn_deformation, build_halfopen_deformation, build_punctured_deformation};
pub use good_nbhd::{good_nbhd_phi, good_nbhd_phi_inverse, in_good_neighborhood, FaceIndex};
pub use homotopy::{EvaluableHomotopy, Stage, Subspace};
pub use probe::{smoothness_probe, ProbeReport};
pub use product::{beta, concat_product, gamma, PointedMap, Side};
pub use smooth_step::SmoothStep;
