//! Tropical linear algebra over two isomorphic scalar carriers.
//!
//! The library works with the max-times carrier `(R_>=0, max, *)` and the
//! min-plus carrier `(R u {+inf}, min, +)`, linked by the mutually inverse
//! semiring isomorphisms `x -> -ln x` and `t -> e^{-t}`.
//!
//! | Carrier | ⊕ | ⊙ | ⊕-identity | ⊙-identity |
//! |---------|---|---|-----------|-----------|
//! | [`MaxTimes`] | max | × | 0 | 1 |
//! | [`MinPlus`]  | min | + | +∞ | 0 |
//!
//! On top of the scalars sit tropical vectors and matrices (with the full
//! classification of invertible and orthogonal tropical matrices), a
//! polyhedral-cone engine for span membership (closed cones and relative
//! interiors, via LP feasibility), and the simplex model of tropical
//! projective and Grassmannian spaces.
//!
//! See the crate `examples/` directory for a runnable tour of each
//! capability, and the `trop` binary for JSON-file access to the same
//! operations.

pub mod cli;
pub mod cone;
pub mod doc;
mod error;
pub mod grassmann;
mod lp;
pub mod matrix;
pub mod scalar;
pub mod svg;
pub mod vector;

pub use cone::{
    cone_contains, is_independent, orthant_decomposition, relint_contains, span_contains,
    ConicSubspace, FeasibilityResult,
};
pub use error::TropError;
pub use grassmann::{
    config_to_grassmann, grassmann_canonical, in_convex_position, is_configuration, projective_eq,
    projectivize, subspace_eq, GrassmannElement, SimplexConfiguration, SimplexPoint,
};
pub use matrix::{
    block_act, enumerate_orthogonal, perm_act, MonomialDecomposition, Permutation, TropMatrix,
};
pub use scalar::{MaxTimes, MinPlus, GEOM_EPSILON, REL_TOL};
pub use vector::{ComponentIndex, TropVector};
