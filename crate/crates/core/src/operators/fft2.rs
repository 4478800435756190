//! Small 2D complex FFT used by the padded circular convolution in the fast
//! fractional-operator path.
//!
//! Buffers use two layouts: layout A is `px` rows of length `py` (row index
//! is the x cell index), layout B is the transpose. A forward transform is
//! "y-FFT rows of A, transpose, x-FFT rows of B"; the inverse walks back.
//! All row batches are deterministic under parallelism because each row is
//! transformed independently and written in place.

use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Below this many complex elements per pass, threading overhead wins.
const PAR_THRESHOLD: usize = 1 << 13;

const TRANSPOSE_BLOCK: usize = 64;

pub(crate) struct Fft2 {
    px: usize,
    py: usize,
    fwd_x: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
}

impl Fft2 {
    pub fn new(px: usize, py: usize) -> Self {
        let mut planner = FftPlanner::new();
        Fft2 {
            px,
            py,
            fwd_x: planner.plan_fft_forward(px),
            inv_x: planner.plan_fft_inverse(px),
            fwd_y: planner.plan_fft_forward(py),
            inv_y: planner.plan_fft_inverse(py),
        }
    }

    pub fn len(&self) -> usize {
        self.px * self.py
    }

    /// Forward transform of layout A into spectral layout B. Rows of A at
    /// index >= `filled_rows` must be zero (their transform is skipped).
    pub fn forward(&self, a: &mut [Complex<f64>], b: &mut [Complex<f64>], filled_rows: usize) {
        fft_rows(&self.fwd_y, a, self.py, filled_rows.min(self.px));
        transpose_into(a, self.px, self.py, b, self.py);
        fft_rows(&self.fwd_x, b, self.px, self.py);
    }

    /// Inverse of [`Fft2::forward`]; only the first `out_rows` rows of the
    /// resulting layout A are produced. No 1/(px*py) scaling is applied.
    pub fn inverse(&self, b: &mut [Complex<f64>], a: &mut [Complex<f64>], out_rows: usize) {
        let rows = out_rows.min(self.px);
        fft_rows(&self.inv_x, b, self.px, self.py);
        transpose_into(b, self.py, self.px, a, rows);
        fft_rows(&self.inv_y, a, self.py, rows);
    }
}

fn fft_rows(fft: &Arc<dyn Fft<f64>>, buf: &mut [Complex<f64>], len: usize, nrows: usize) {
    let active = &mut buf[..nrows * len];
    if active.len() >= PAR_THRESHOLD {
        active.par_chunks_mut(len).for_each_init(
            || vec![Complex::default(); fft.get_inplace_scratch_len()],
            |scratch, row| fft.process_with_scratch(row, scratch),
        );
    } else {
        let mut scratch = vec![Complex::default(); fft.get_inplace_scratch_len()];
        for row in active.chunks_exact_mut(len) {
            fft.process_with_scratch(row, &mut scratch);
        }
    }
}

/// Blocked transpose: `dst[b * rows + a] = src[a * cols + b]`, filling only
/// the first `dst_row_limit` rows of the transposed picture. Work splits
/// over contiguous bands of destination rows, so parallel tiles are disjoint.
fn transpose_into(
    src: &[Complex<f64>],
    rows: usize,
    cols: usize,
    dst: &mut [Complex<f64>],
    dst_row_limit: usize,
) {
    let limit = dst_row_limit.min(cols);
    let band = |b0: usize, dband: &mut [Complex<f64>]| {
        for a0 in (0..rows).step_by(TRANSPOSE_BLOCK) {
            let a1 = (a0 + TRANSPOSE_BLOCK).min(rows);
            for (bo, drow) in dband.chunks_exact_mut(rows).enumerate() {
                let b = b0 + bo;
                for a in a0..a1 {
                    drow[a] = src[a * cols + b];
                }
            }
        }
    };
    let active = &mut dst[..limit * rows];
    if active.len() >= PAR_THRESHOLD {
        active
            .par_chunks_mut(TRANSPOSE_BLOCK * rows)
            .enumerate()
            .for_each(|(ti, dband)| band(ti * TRANSPOSE_BLOCK, dband));
    } else {
        for (ti, dband) in active.chunks_mut(TRANSPOSE_BLOCK * rows).enumerate() {
            band(ti * TRANSPOSE_BLOCK, dband);
        }
    }
}
