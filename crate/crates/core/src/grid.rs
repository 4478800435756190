//! Uniform cell-centered discretization of a rectangular domain and the
//! scalar fields living on it.
//!
//! Values are stored row-major with index `(i, j) -> i * ny + j`, where `i`
//! runs along x and `j` along y. Every module in this crate reuses that
//! convention; it is defined once here in [`Field::idx`].

use std::fmt;

/// Errors from grid construction and field assembly.
#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    /// Grid dimensions below the 2x2 minimum.
    TooFewCells { nx: usize, ny: usize },
    /// Domain side length not a positive finite number.
    BadLength(f64),
    /// A field value was NaN or infinite.
    NonFinite { index: usize, value: f64 },
    /// Supplied value buffer does not match `nx * ny`.
    SizeMismatch { expected: usize, got: usize },
    /// Two fields or a field and a kernel disagree on their grid.
    GridMismatch,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::TooFewCells { nx, ny } => {
                write!(f, "grid must be at least 2x2 cells, got {nx}x{ny}")
            }
            GridError::BadLength(l) => write!(f, "domain length must be positive, got {l}"),
            GridError::NonFinite { index, value } => {
                write!(f, "non-finite value {value} at flat index {index}")
            }
            GridError::SizeMismatch { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            GridError::GridMismatch => write!(f, "operands live on different grids"),
        }
    }
}

impl std::error::Error for GridError {}

/// Uniform Cartesian grid over the rectangle `[0, nx*h] x [0, ny*h]`.
///
/// The cell width is `h = length / nx`; both axes share it, so the domain is
/// square exactly when `nx == ny`. Samples sit at cell centers
/// `((i + 1/2) h, (j + 1/2) h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    nx: usize,
    ny: usize,
    length: f64,
    h: f64,
}

impl GridSpec {
    /// Builds a grid with `nx * ny` cells over a domain of side `length`.
    pub fn new(nx: usize, ny: usize, length: f64) -> Result<Self, GridError> {
        if nx < 2 || ny < 2 {
            return Err(GridError::TooFewCells { nx, ny });
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(GridError::BadLength(length));
        }
        Ok(GridSpec {
            nx,
            ny,
            length,
            h: length / nx as f64,
        })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Cell width (shared by both axes).
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Total number of cells.
    pub fn cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Area of one cell.
    pub fn cell_area(&self) -> f64 {
        self.h * self.h
    }

    /// Domain area `|Omega|`.
    pub fn domain_area(&self) -> f64 {
        self.cell_area() * self.cells() as f64
    }

    /// Physical coordinates of the center of cell `(i, j)`.
    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        ((i as f64 + 0.5) * self.h, (j as f64 + 0.5) * self.h)
    }
}

/// One scalar concentration sampled at the cell centers of a [`GridSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: GridSpec,
    values: Vec<f64>,
}

impl Field {
    /// Constant field. Rejects NaN/infinite fill values.
    pub fn filled(grid: GridSpec, value: f64) -> Result<Self, GridError> {
        if !value.is_finite() {
            return Err(GridError::NonFinite { index: 0, value });
        }
        Ok(Field {
            grid,
            values: vec![value; grid.cells()],
        })
    }

    /// All-zero field.
    pub fn zeros(grid: GridSpec) -> Self {
        Field {
            grid,
            values: vec![0.0; grid.cells()],
        }
    }

    /// Wraps an existing buffer, checking length and finiteness.
    pub fn from_values(grid: GridSpec, values: Vec<f64>) -> Result<Self, GridError> {
        if values.len() != grid.cells() {
            return Err(GridError::SizeMismatch {
                expected: grid.cells(),
                got: values.len(),
            });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(GridError::NonFinite { index, value });
        }
        Ok(Field { grid, values })
    }

    /// Builds a field by evaluating `f` at every cell center.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(f64, f64) -> f64) -> Result<Self, GridError> {
        let mut values = Vec::with_capacity(grid.cells());
        for i in 0..grid.nx() {
            for j in 0..grid.ny() {
                let (x, y) = grid.cell_center(i, j);
                values.push(f(x, y));
            }
        }
        Field::from_values(grid, values)
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    /// Flat index of cell `(i, j)`; the crate-wide storage convention.
    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.grid.ny + j
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[self.idx(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let k = self.idx(i, j);
        self.values[k] = value;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Midpoint-rule integral over the domain: `h^2 * sum(values)`.
    ///
    /// The sum runs row-major sequentially so results are bit-reproducible.
    pub fn integrate(&self) -> f64 {
        let mut acc = 0.0;
        for &v in &self.values {
            acc += v;
        }
        self.grid.cell_area() * acc
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Population standard deviation of the cell values.
    pub fn std_dev(&self) -> f64 {
        let n = self.values.len() as f64;
        let mean = self.values.iter().sum::<f64>() / n;
        let var = self
            .values
            .iter()
            .map(|v| {
                let d = v - mean;
                d * d
            })
            .sum::<f64>()
            / n;
        var.sqrt()
    }
}

/// The simulated pair `(u, v)` plus elapsed time bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct SimState {
    pub u: Field,
    pub v: Field,
    pub t: f64,
    pub step_count: u64,
}

impl SimState {
    /// Couples two fields on the same grid at `t = 0`.
    pub fn new(u: Field, v: Field) -> Result<Self, GridError> {
        if u.grid() != v.grid() {
            return Err(GridError::GridMismatch);
        }
        Ok(SimState {
            u,
            v,
            t: 0.0,
            step_count: 0,
        })
    }

    pub fn grid(&self) -> GridSpec {
        self.u.grid()
    }

    /// `h^2 * sum(u + v)`, the quantity controlled by the mass bound.
    pub fn mass(&self) -> f64 {
        let mut acc = 0.0;
        for (a, b) in self.u.values().iter().zip(self.v.values()) {
            acc += a + b;
        }
        self.grid().cell_area() * acc
    }
}
