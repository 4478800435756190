//! Gray-Scott reaction-diffusion with mixed diffusion: a regional fractional
//! Laplacian drives the activator while the inhibitor diffuses classically
//! under zero-flux boundaries. Forward-Euler stepping, runtime invariant
//! monitors (nonnegativity, sup bound on `u`, total-mass bound), fractional
//! order sweeps, and bit-exact state serialization.

pub mod grid;
pub mod operators;
pub mod reactions;

pub use grid::{Field, GridError, GridSpec, SimState};
pub use operators::{riesz_constant, FracKernel, OperatorError};
pub use reactions::{steady_states, GrayScottParams, SteadyStates, Variant};
