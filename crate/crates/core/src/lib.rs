//! Exact-arithmetic laboratory for correlation inequalities on the discrete
//! cube `{0,1}^n`.
//!
//! The crate computes Fourier–Walsh spectra, influences and correlations of
//! set families with exact dyadic arithmetic, decides the "flows to"
//! relation with certificates (exact max-flow and exact LP), evaluates a
//! registry of correlation inequalities as margin/ratio reports, and
//! searches for extremal families exhaustively, randomly, by local search,
//! and over the tribes construction.
//!
//! Conventions: element `i ∈ [n]` is bit `i - 1` of a point mask, and the
//! same little-endian convention indexes Fourier coefficients.

pub mod cli;
pub mod cube;
pub mod dyadic;
pub mod error;
pub mod families;
pub mod flow;
pub mod inequalities;
pub mod io;
pub mod profile;
pub mod search;
pub mod set_family;
pub mod value;

/// Largest dimension for truth-table operations.
pub const MAX_DIM: usize = 24;

pub use cube::{
    antipodal_lift, directional_difference, f_star, inverse_wht, m_alpha, wht, AntipodalLift,
    CubeFunction, DiffConvention, Spectrum,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use profile::FamilyProfile;
pub use set_family::{InfluenceVector, Predicates, SetFamily};
pub use value::Value;
