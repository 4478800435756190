//! Classical 5-point Laplacian with ghost-cell boundary handling.

use crate::grid::Field;

use super::OperatorError;

/// Applies the 5-point Laplacian `(f(i±1,j) + f(i,j±1) - 4 f(i,j)) / h^2`.
///
/// With `neumann = true` (the zero-flux setup) ghost cells mirror the
/// adjacent interior value, so each boundary difference vanishes; with
/// `neumann = false` ghosts are zero (homogeneous Dirichlet).
///
/// The stencil is evaluated in difference form, `sum over neighbors of
/// (f_nb - f_c) / h^2`, which is exactly zero on constant fields under
/// Neumann ghosts.
pub fn apply_local_laplacian(f: &Field, neumann: bool) -> Field {
    let mut out = Field::zeros(f.grid());
    apply_local_laplacian_into(f, neumann, &mut out).expect("freshly allocated grid matches");
    out
}

/// In-place variant of [`apply_local_laplacian`] for hot loops.
pub fn apply_local_laplacian_into(
    f: &Field,
    neumann: bool,
    out: &mut Field,
) -> Result<(), OperatorError> {
    if out.grid() != f.grid() {
        return Err(OperatorError::GridMismatch);
    }
    let grid = f.grid();
    let (nx, ny) = (grid.nx(), grid.ny());
    let inv_h2 = 1.0 / grid.cell_area();
    let src = f.values();
    let dst = out.values_mut();

    for i in 0..nx {
        for j in 0..ny {
            let k = i * ny + j;
            let c = src[k];
            let west = if i > 0 {
                src[k - ny] - c
            } else if neumann {
                0.0
            } else {
                -c
            };
            let east = if i + 1 < nx {
                src[k + ny] - c
            } else if neumann {
                0.0
            } else {
                -c
            };
            let south = if j > 0 {
                src[k - 1] - c
            } else if neumann {
                0.0
            } else {
                -c
            };
            let north = if j + 1 < ny {
                src[k + 1] - c
            } else if neumann {
                0.0
            } else {
                -c
            };
            dst[k] = (west + east + south + north) * inv_h2;
        }
    }
    Ok(())
}
