//! Spontaneous decay of a dipole emitter near a finite rectangular
//! dielectric plate, to first order in the plate's susceptibility.
//!
//! Modules:
//! - [`em`]: free-space Green tensor and its scalar building blocks;
//! - [`born`]: first-order Born integrands and the plate decay rate;
//! - [`cubature`]: adaptive box cubature, 1-D quadrature and a Monte-Carlo oracle;
//! - [`slab`]: infinite-slab reference rates;
//! - [`spa`]: stationary-phase estimates and Fresnel integrals;
//! - [`scenario`]: sweeps, built-in presets, scenario files and CSV output.

pub mod born;
pub mod cubature;
pub mod em;
pub mod error;
pub mod scenario;
pub mod slab;
pub mod spa;

pub use born::{
    decay_rate, Dipole, EmitterConfig, PlateGeometry, RateAxis, RateFlags, RateResult, Susceptibility,
};
pub use cubature::{Box3, QuadratureSpec};
pub use em::{ComplexTensor3, Position, Wavenumber};
pub use error::{Error, Result};
