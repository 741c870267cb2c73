//! Open-system dynamics of the Ising-XYZ spin dimer under independent
//! zero-temperature reservoirs, with the entanglement, coherence and
//! Fisher-information measures evaluated along the trajectories.

pub mod dynamics;
pub mod error;
pub mod events;
pub mod linalg;
pub mod measures;
pub mod model;
pub mod plot;
pub mod scenario;

pub use dynamics::{DensityMatrix, IntegratorConfig, XView};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, EigenSystem};
pub use model::{ModelParams, Sector};
