//! Combinatorial calculator for Arthur parameters of classical groups.
//!
//! The crate models global Arthur parameters as formal sums of pairs
//! `(tau, b)`, classifies them into the classical groups they factor
//! through, enumerates the elliptic endoscopy data those groups carry, and
//! compiles the case tables behind the automorphic kernel-function
//! constructions: nilpotent partitions `[d^c 1^r]`, their gradings,
//! stabilizers, Eisenstein normalizing factors and the resulting towers.
//!
//! Everything is exact and symbolic. Analytic facts (poles of
//! `L`-functions, nonvanishing of central values) are caller inputs.
//!
//! Modules:
//! - [`partitions`]: partition arithmetic, collapse, Barbasch-Vogan duality
//! - [`parameters`]: cuspidal data, simple parameters, the parameter algebra
//! - [`endoscopy`]: elliptic endoscopy data and their validation
//! - [`orbits`]: sl2 gradings, Bessel vs Fourier-Jacobi, stabilizers
//! - [`spectral`]: normalizing factors, pole cases, residual points
//! - [`kernel_cases`]: construction records, towers, basic triangles
//! - [`jordan`]: pole profiles, Jordan blocks and reconstruction
//! - [`audit`]: enumerated cross-module consistency sweeps

pub mod audit;
pub mod endoscopy;
pub mod error;
pub mod groups;
pub mod jordan;
pub mod kernel_cases;
pub mod orbits;
pub mod parameters;
pub mod partitions;
pub mod spectral;

mod dot;
mod ratio;

pub use error::{Error, Result};
pub use groups::{EtaLabel, GroupDatum, GroupFamily, Sign};
pub use parameters::{ArthurParameter, CuspidalDatum, SimpleParameter, TauId};
pub use partitions::{OrbitFamily, Partition};

/// Exact rationals used for pole locations and factor shifts.
pub type Rational = num_rational::Rational64;
