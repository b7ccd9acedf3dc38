//! Invariants of surfaces built as quotients of double covers of products,
//! with exact arithmetic throughout.

pub mod catalog;
pub mod error;
pub mod geography;
pub mod kunneth;
pub mod numeric;
pub mod pipeline;
pub mod quotients;
pub mod reference;
pub mod render;
pub mod sections;
pub mod surface;
pub mod verify;

pub use catalog::{Catalog, ExampleRecipe, GeneratingPair, PairId};
pub use error::{Error, Result};
pub use numeric::{LinForm, Param, Quantity, Rational};
pub use pipeline::{run_pipeline, symbolic_pipeline, PipelineReport};
pub use quotients::{cyclic3_quotient, involution_quotient, solve_fixed_point_profile, FixedPointProfile};
pub use sections::{invariant_dimension, invariant_monomial_basis, WeightConfig};
pub use surface::{make_surface, SurfaceInvariants};
