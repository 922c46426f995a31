//! Quivers with loops, Euler and Borcherds-Cartan data, flag types and the
//! dimension formulas used as `v`-power normalizations.

pub mod cartan;
pub mod flags;
pub mod quiver;

pub use cartan::{approx_equivalent, cartan_matrix, euler_form, extend_cartan, symmetric_form, CartanIndex, CartanMatrix};
pub use flags::{bridge_type, enumerate_flag_types, flag_dims, induction_dims, FlagDims, FlagMode, FlagType};
pub use quiver::{presets, DimensionVector, Quiver};
