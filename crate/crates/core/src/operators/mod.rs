//! The two diffusion operators of the simulated system: a classical 5-point
//! Laplacian with reflective (zero-flux) ghost cells, and the regional
//! fractional Laplacian built from midpoint quadrature of the Riesz kernel
//! over the domain.
//!
//! Both operators are symmetric, conservative (`h^2 * sum(L f) = 0`) and
//! dissipative (`<L f, f> <= 0`); the test suites and `check-operators`
//! verify those properties numerically.

mod fft2;
mod frac;
mod local;

pub use frac::{riesz_constant, FracKernel, FracScratch, KernelOptions};
pub use local::{apply_local_laplacian, apply_local_laplacian_into};

use crate::grid::Field;
use std::fmt;

/// Errors from operator construction and application.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorError {
    /// Fractional order outside the open interval (0, 1).
    BadOrder(f64),
    /// Dimension must be at least 1.
    BadDimension(u32),
    /// Field does not live on the kernel's grid.
    GridMismatch,
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::BadOrder(s) => write!(f, "fractional order s must lie in (0, 1), got {s}"),
            OperatorError::BadDimension(n) => write!(f, "dimension must be >= 1, got {n}"),
            OperatorError::GridMismatch => write!(f, "field grid does not match operator grid"),
        }
    }
}

impl std::error::Error for OperatorError {}

/// Which operator produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorTag {
    FracNaive,
    FracFast,
    LocalNeumann,
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OperatorTag::FracNaive => "frac-naive",
            OperatorTag::FracFast => "frac-fast",
            OperatorTag::LocalNeumann => "local-neumann",
        };
        f.write_str(name)
    }
}

/// An operator application result tagged with its producer, used by the
/// verification surfaces.
#[derive(Debug, Clone)]
pub struct OperatorOutput {
    pub result: Field,
    pub operator_tag: OperatorTag,
}

impl OperatorOutput {
    pub fn new(result: Field, operator_tag: OperatorTag) -> Self {
        OperatorOutput {
            result,
            operator_tag,
        }
    }

    /// `h^2 * sum(result)`; zero (to rounding) for both operators.
    pub fn conservation_defect(&self) -> f64 {
        self.result.integrate()
    }
}

/// Discrete inner product `<f, g> = h^2 * sum(f * g)`.
pub fn inner_product(f: &Field, g: &Field) -> f64 {
    debug_assert_eq!(f.grid(), g.grid());
    let mut acc = 0.0;
    for (a, b) in f.values().iter().zip(g.values()) {
        acc += a * b;
    }
    f.grid().cell_area() * acc
}

/// Discrete L2 norm induced by [`inner_product`].
pub fn l2_norm(f: &Field) -> f64 {
    inner_product(f, f).sqrt()
}
