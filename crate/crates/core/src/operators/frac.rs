//! Regional fractional Laplacian on the grid: midpoint quadrature of the
//! Riesz kernel `|x - y|^{-(2 + 2s)}` over in-domain cells, with the
//! singular cell excluded (the principal-value reading of the integral).
//!
//! The integral runs over the domain only, so the nonlocal zero-flux
//! condition holds vacuously: no exterior value is ever referenced.
//!
//! Sign convention: the normalization constant `C_{n,s}` is negative for
//! `s` in (0, 1) (it divides by `Gamma(-s) < 0`), so composing it literally
//! with a `+d1 L u` diffusion term would anti-diffuse. The kernel stores
//! `|C_{n,s}|` and `apply_*` return the dissipative operator
//! `sum_y w(y - x) (f(y) - f(x))` with positive weights, which is what a
//! stable forward-Euler simulation of the system must integrate.

use std::io::{self, Write};
use std::sync::OnceLock;

use rayon::prelude::*;
use rustfft::num_complex::Complex;

use crate::grid::{Field, GridSpec};

use super::fft2::Fft2;
use super::OperatorError;

/// Subdivision factor per axis for the optional near-singularity refinement.
const REFINE_SUBCELLS: usize = 16;

/// Normalization constant of the Riesz fractional Laplacian,
/// `C_{n,s} = 4^s Gamma(n/2 + s) / (pi^{n/2} Gamma(-s))`.
///
/// Returns the signed value; it is negative for every `n >= 1` and
/// `s` in (0, 1) because `Gamma(-s) < 0` there. Kernel construction uses
/// the magnitude (see module docs).
pub fn riesz_constant(n: u32, s: f64) -> Result<f64, OperatorError> {
    if n < 1 {
        return Err(OperatorError::BadDimension(n));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(OperatorError::BadOrder(s));
    }
    let half_n = n as f64 / 2.0;
    let num = 4.0f64.powf(s) * libm::tgamma(half_n + s);
    let den = std::f64::consts::PI.powf(half_n) * libm::tgamma(-s);
    Ok(num / den)
}

/// Construction options for [`FracKernel`].
#[derive(Debug, Clone, Copy, Default)]
pub struct KernelOptions {
    /// Replace the midpoint weight of the 8 cells around the singularity by
    /// a subdivided quadrature. Off by default; the plain midpoint rule is
    /// the documented scheme.
    pub refine_near_singularity: bool,
}

/// Precomputed quadrature for the regional fractional Laplacian on one
/// `(grid, s)` pair: a translation-invariant weight table over all integer
/// displacements reachable inside the grid, plus the per-cell diagonal
/// `diag(x) = sum over in-domain y != x of w(y - x)`, which varies in space
/// because the window truncates at the boundary.
pub struct FracKernel {
    grid: GridSpec,
    s: f64,
    c_norm: f64,
    /// `(2 nx - 1) x (2 ny - 1)` table, center entry zero.
    weights: Vec<f64>,
    diag: Vec<f64>,
    max_diag: f64,
    fft: OnceLock<FracFft>,
}

struct FracFft {
    fft2: Fft2,
    /// Spectrum of the padded weight table in transposed layout, pre-scaled
    /// by `1 / (px * py)`. Real because the table is even.
    kspec: Vec<f64>,
}

/// Reusable FFT buffers for [`FracKernel::apply_fast_into`].
#[derive(Default)]
pub struct FracScratch {
    a: Vec<Complex<f64>>,
    b: Vec<Complex<f64>>,
}

impl std::fmt::Debug for FracKernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FracKernel")
            .field("grid", &self.grid)
            .field("s", &self.s)
            .field("c_norm", &self.c_norm)
            .field("max_diag", &self.max_diag)
            .finish_non_exhaustive()
    }
}

impl FracKernel {
    /// Builds the kernel with default options.
    pub fn build(grid: GridSpec, s: f64) -> Result<Self, OperatorError> {
        Self::build_with(grid, s, KernelOptions::default())
    }

    pub fn build_with(grid: GridSpec, s: f64, opts: KernelOptions) -> Result<Self, OperatorError> {
        let c_norm = riesz_constant(2, s)?.abs();
        let (nx, ny) = (grid.nx(), grid.ny());
        let h = grid.h();
        let a_dim = 2 * nx - 1;
        let b_dim = 2 * ny - 1;
        let exponent = -(1.0 + s);

        // One h^2 factor is the quadrature measure of the y-integration;
        // r^2 = h^2 |delta|^2 raised to -(1 + s) is the Riesz kernel.
        let mut weights = vec![0.0; a_dim * b_dim];
        for (a, row) in weights.chunks_exact_mut(b_dim).enumerate() {
            let di = a as isize - (nx as isize - 1);
            for (b, w) in row.iter_mut().enumerate() {
                let dj = b as isize - (ny as isize - 1);
                if di == 0 && dj == 0 {
                    continue;
                }
                let near = di.abs() <= 1 && dj.abs() <= 1;
                *w = if opts.refine_near_singularity && near {
                    refined_weight(c_norm, h, s, di, dj)
                } else {
                    let r2 = (h * h) * (di * di + dj * dj) as f64;
                    c_norm * (h * h) * r2.powf(exponent)
                };
            }
        }

        let diag = diag_from_weights(&weights, nx, ny);
        let max_diag = diag.iter().copied().fold(0.0f64, f64::max);

        Ok(FracKernel {
            grid,
            s,
            c_norm,
            weights,
            diag,
            max_diag,
            fft: OnceLock::new(),
        })
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Magnitude of the Riesz normalization constant `|C_{2,s}|`.
    pub fn c_norm(&self) -> f64 {
        self.c_norm
    }

    /// Quadrature weight for displacement `(di, dj)`; zero at the center and
    /// outside the reachable window.
    pub fn weight(&self, di: isize, dj: isize) -> f64 {
        let nx = self.grid.nx() as isize;
        let ny = self.grid.ny() as isize;
        if di.abs() >= nx || dj.abs() >= ny {
            return 0.0;
        }
        let a = (di + nx - 1) as usize;
        let b = (dj + ny - 1) as usize;
        self.weights[a * (2 * self.grid.ny() - 1) + b]
    }

    /// Per-cell diagonal `sum_{y in domain, y != x} w(y - x)`.
    pub fn diag(&self, i: usize, j: usize) -> f64 {
        self.diag[i * self.grid.ny() + j]
    }

    pub fn diag_values(&self) -> &[f64] {
        &self.diag
    }

    /// Largest diagonal entry; the Gershgorin input of the stability bound.
    pub fn max_diag(&self) -> f64 {
        self.max_diag
    }

    /// Reference implementation: the literal double sum over all cell pairs,
    /// `out(x) = sum_{y != x} w(y - x) (f(y) - f(x))`. O(N^2); this is the
    /// correctness oracle for [`FracKernel::apply_fast`].
    pub fn apply_naive(&self, f: &Field) -> Result<Field, OperatorError> {
        if f.grid() != self.grid {
            return Err(OperatorError::GridMismatch);
        }
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let b_dim = 2 * ny - 1;
        let src = f.values();
        let mut out = Field::zeros(self.grid);

        let rows: Vec<(usize, &mut [f64])> = out.values_mut().chunks_mut(ny).enumerate().collect();
        rows.into_par_iter().for_each(|(i, out_row)| {
            for (j, out_cell) in out_row.iter_mut().enumerate() {
                let c = src[i * ny + j];
                let mut acc = 0.0;
                for yi in 0..nx {
                    let ta = (yi + nx - 1 - i) * b_dim + (ny - 1 - j);
                    let wrow = &self.weights[ta..ta + ny];
                    let srow = &src[yi * ny..yi * ny + ny];
                    // Center displacement carries weight zero, so including
                    // y == x is harmless.
                    for (w, v) in wrow.iter().zip(srow) {
                        acc += w * (v - c);
                    }
                }
                *out_cell = acc;
            }
        });
        Ok(out)
    }

    /// Fast path: `out(x) = (w conv f)(x) - diag(x) f(x)` with the
    /// correlation evaluated as a zero-padded circular FFT convolution.
    /// Mathematically identical to [`FracKernel::apply_naive`].
    pub fn apply_fast(&self, f: &Field) -> Result<Field, OperatorError> {
        let mut out = Field::zeros(self.grid);
        let mut scratch = FracScratch::default();
        self.apply_fast_into(f, &mut scratch, &mut out)?;
        Ok(out)
    }

    /// [`FracKernel::apply_fast`] with caller-owned buffers for hot loops.
    pub fn apply_fast_into(
        &self,
        f: &Field,
        scratch: &mut FracScratch,
        out: &mut Field,
    ) -> Result<(), OperatorError> {
        if f.grid() != self.grid || out.grid() != self.grid {
            return Err(OperatorError::GridMismatch);
        }
        let fft = self.fft.get_or_init(|| self.build_fft());
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let py = 2 * ny;
        let n = fft.fft2.len();
        scratch.a.clear();
        scratch.a.resize(n, Complex::default());
        scratch.b.clear();
        scratch.b.resize(n, Complex::default());

        // Shifting by f(0) keeps the identity exact (the operator kills
        // constants) and makes the output exactly zero on constant fields,
        // where the shifted input is identically 0.0.
        let src = f.values();
        let fbar = src[0];
        for (i, row) in src.chunks_exact(ny).enumerate() {
            let arow = &mut scratch.a[i * py..i * py + ny];
            for (dst, &v) in arow.iter_mut().zip(row) {
                dst.re = v - fbar;
            }
        }

        fft.fft2.forward(&mut scratch.a, &mut scratch.b, nx);
        if n >= 1 << 13 {
            scratch
                .b
                .par_iter_mut()
                .zip(fft.kspec.par_iter())
                .for_each(|(x, &k)| {
                    x.re *= k;
                    x.im *= k;
                });
        } else {
            for (x, &k) in scratch.b.iter_mut().zip(&fft.kspec) {
                x.re *= k;
                x.im *= k;
            }
        }
        fft.fft2.inverse(&mut scratch.b, &mut scratch.a, nx);

        let dst = out.values_mut();
        for i in 0..nx {
            let arow = &scratch.a[i * py..i * py + ny];
            let drow = &mut dst[i * ny..i * ny + ny];
            let srow = &src[i * ny..i * ny + ny];
            let diag_row = &self.diag[i * ny..i * ny + ny];
            for j in 0..ny {
                drow[j] = arow[j].re - diag_row[j] * (srow[j] - fbar);
            }
        }
        Ok(())
    }

    fn build_fft(&self) -> FracFft {
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let (px, py) = (2 * nx, 2 * ny);
        let fft2 = Fft2::new(px, py);

        // Periodized weight table: displacement d lands at index d mod p.
        // px >= 2 nx keeps the window [-(nx-1), nx-1] alias-free.
        let mut a_buf = vec![Complex::default(); px * py];
        let mut b_buf = vec![Complex::default(); px * py];
        for di in -(nx as isize - 1)..=(nx as isize - 1) {
            let a = di.rem_euclid(px as isize) as usize;
            for dj in -(ny as isize - 1)..=(ny as isize - 1) {
                let b = dj.rem_euclid(py as isize) as usize;
                a_buf[a * py + b].re = self.weight(di, dj);
            }
        }
        fft2.forward(&mut a_buf, &mut b_buf, px);

        // The table is even under negation, so its spectrum is real; drop
        // the rounding-level imaginary parts and fold in the FFT scaling.
        let scale = 1.0 / (px * py) as f64;
        let kspec = b_buf.iter().map(|z| z.re * scale).collect();
        FracFft { fft2, kspec }
    }

    /// Writes the weight table as CSV (`di,dj,weight`), center omitted.
    pub fn write_weights_csv(&self, mut w: impl Write) -> io::Result<()> {
        writeln!(w, "di,dj,weight")?;
        let nx = self.grid.nx() as isize;
        let ny = self.grid.ny() as isize;
        for di in -(nx - 1)..=(nx - 1) {
            for dj in -(ny - 1)..=(ny - 1) {
                if di == 0 && dj == 0 {
                    continue;
                }
                writeln!(w, "{},{},{}", di, dj, self.weight(di, dj))?;
            }
        }
        Ok(())
    }
}

/// Midpoint quadrature of the Riesz kernel over one cell subdivided into
/// `REFINE_SUBCELLS^2` pieces; used for the 8 cells next to the singularity
/// when refinement is requested.
fn refined_weight(c_norm: f64, h: f64, s: f64, di: isize, dj: isize) -> f64 {
    let m = REFINE_SUBCELLS;
    let sub_h = h / m as f64;
    let exponent = -(1.0 + s);
    let mut acc = 0.0;
    for a in 0..m {
        let dx = di as f64 * h + (a as f64 + 0.5) * sub_h - h / 2.0;
        for b in 0..m {
            let dy = dj as f64 * h + (b as f64 + 0.5) * sub_h - h / 2.0;
            acc += sub_h * sub_h * (dx * dx + dy * dy).powf(exponent);
        }
    }
    c_norm * acc
}

/// Per-cell window sums of the weight table via a summed-area table: cell
/// `(i, j)` sees displacements `[-i, nx-1-i] x [-j, ny-1-j]`, a contiguous
/// rectangle of the table. One accumulation pass, fixed order.
fn diag_from_weights(weights: &[f64], nx: usize, ny: usize) -> Vec<f64> {
    let a_dim = 2 * nx - 1;
    let b_dim = 2 * ny - 1;
    let tb = b_dim + 1;
    let mut sat = vec![0.0; (a_dim + 1) * tb];
    for a in 0..a_dim {
        for b in 0..b_dim {
            sat[(a + 1) * tb + (b + 1)] =
                weights[a * b_dim + b] + sat[a * tb + (b + 1)] + sat[(a + 1) * tb + b]
                    - sat[a * tb + b];
        }
    }
    let rect = |a0: usize, a1: usize, b0: usize, b1: usize| {
        sat[(a1 + 1) * tb + (b1 + 1)] - sat[a0 * tb + (b1 + 1)] - sat[(a1 + 1) * tb + b0]
            + sat[a0 * tb + b0]
    };
    let mut diag = vec![0.0; nx * ny];
    for i in 0..nx {
        for j in 0..ny {
            diag[i * ny + j] = rect(nx - 1 - i, 2 * (nx - 1) - i, ny - 1 - j, 2 * (ny - 1) - j);
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::inner_product;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_field(grid: GridSpec, seed: u64) -> Field {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Field::from_values(
            grid,
            (0..grid.cells()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn riesz_constant_half_order_closed_form() {
        // 2 * Gamma(1.5) / (pi * Gamma(-0.5)) with Gamma(1.5) = sqrt(pi)/2
        // and Gamma(-0.5) = -2 sqrt(pi) collapses to -1/(2 pi).
        let expect = -1.0 / (2.0 * std::f64::consts::PI);
        let got = riesz_constant(2, 0.5).unwrap();
        assert!(
            ((got - expect) / expect).abs() <= 1e-12,
            "got {got}, expected {expect}"
        );
    }

    #[test]
    fn riesz_constant_negative_on_unit_interval() {
        for n in 1..=3 {
            for k in 1..=9 {
                let s = k as f64 / 10.0;
                let c = riesz_constant(n, s).unwrap();
                assert!(c < 0.0, "C({n},{s}) = {c} not negative");
            }
        }
    }

    #[test]
    fn riesz_constant_continuous_in_s() {
        let eps = 1e-6;
        let left = (riesz_constant(2, 0.5).unwrap() - riesz_constant(2, 0.5 - eps).unwrap()) / eps;
        let right = (riesz_constant(2, 0.5 + eps).unwrap() - riesz_constant(2, 0.5).unwrap()) / eps;
        assert!(left.is_finite() && right.is_finite());
        assert!(
            ((left - right) / left).abs() < 1e-3,
            "one-sided slopes {left} vs {right}"
        );
    }

    #[test]
    fn riesz_constant_rejects_bad_input() {
        assert!(riesz_constant(2, 0.0).is_err());
        assert!(riesz_constant(2, 1.0).is_err());
        assert!(riesz_constant(2, -0.3).is_err());
        assert!(riesz_constant(2, 1.5).is_err());
        assert!(riesz_constant(0, 0.5).is_err());
    }

    #[test]
    fn weight_ratio_follows_power_law() {
        let grid = GridSpec::new(8, 8, 1.0).unwrap();
        for &s in &[0.25, 0.5, 0.75] {
            let k = FracKernel::build(grid, s).unwrap();
            let ratio = k.weight(1, 0) / k.weight(2, 0);
            let expect = 2.0f64.powf(2.0 + 2.0 * s);
            assert!(
                ((ratio - expect) / expect).abs() <= 1e-12,
                "s={s}: ratio {ratio} vs {expect}"
            );
        }
        let k = FracKernel::build(grid, 0.5).unwrap();
        assert!((k.weight(1, 0) / k.weight(2, 0) - 8.0).abs() <= 8.0 * 1e-12);
    }

    #[test]
    fn weights_are_symmetric_and_positive() {
        let grid = GridSpec::new(6, 5, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.4).unwrap();
        for di in -5isize..=5 {
            for dj in -4isize..=4 {
                if di == 0 && dj == 0 {
                    assert_eq!(k.weight(0, 0), 0.0);
                    continue;
                }
                assert!(k.weight(di, dj) > 0.0);
                assert_eq!(k.weight(di, dj), k.weight(-di, -dj));
            }
        }
    }

    #[test]
    fn diag_matches_brute_force_and_orders_corner_below_center() {
        let grid = GridSpec::new(4, 4, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.5).unwrap();
        // Brute-force oracle with its own loop structure.
        for i in 0..4usize {
            for j in 0..4usize {
                let mut acc = 0.0;
                for yi in 0..4usize {
                    for yj in 0..4usize {
                        if (yi, yj) == (i, j) {
                            continue;
                        }
                        acc += k.weight(yi as isize - i as isize, yj as isize - j as isize);
                    }
                }
                let got = k.diag(i, j);
                assert!(
                    ((got - acc) / acc).abs() <= 1e-12,
                    "diag({i},{j}) = {got}, brute force {acc}"
                );
            }
        }
        assert!(k.diag(0, 0) < k.diag(2, 2));
        assert!((k.max_diag() - k.diag(2, 2)).abs() <= 1e-15 * k.max_diag());
    }

    #[test]
    fn naive_constant_field_is_exactly_zero() {
        let grid = GridSpec::new(8, 8, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.5).unwrap();
        let f = Field::filled(grid, 3.25).unwrap();
        let out = k.apply_naive(&f).unwrap();
        assert!(out.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn naive_indicator_expansion() {
        // A unit mass at one cell produces w(hot - x) elsewhere and -diag at
        // the hot cell.
        let grid = GridSpec::new(6, 6, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.3).unwrap();
        let (hi, hj) = (2, 4);
        let mut f = Field::zeros(grid);
        f.set(hi, hj, 1.0);
        let out = k.apply_naive(&f).unwrap();
        for i in 0..6usize {
            for j in 0..6usize {
                let got = out.get(i, j);
                if (i, j) == (hi, hj) {
                    let expect = -k.diag(hi, hj);
                    assert!(((got - expect) / expect).abs() <= 1e-12);
                } else {
                    let expect = k.weight(hi as isize - i as isize, hj as isize - j as isize);
                    assert!(
                        ((got - expect) / expect).abs() <= 1e-12,
                        "cell ({i},{j}): {got} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn naive_conserves_mass() {
        let grid = GridSpec::new(16, 16, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.5).unwrap();
        let f = random_field(grid, 11);
        let out = k.apply_naive(&f).unwrap();
        let scale = k.max_diag();
        assert!(out.integrate().abs() <= 1e-12 * scale);
    }

    #[test]
    fn fast_matches_naive_on_random_fields() {
        for &(nx, ny) in &[(8usize, 8usize), (16, 16), (31, 17)] {
            let grid = GridSpec::new(nx, ny, 1.0).unwrap();
            for &s in &[0.25, 0.5, 0.75] {
                let k = FracKernel::build(grid, s).unwrap();
                for seed in 0..3 {
                    let f = random_field(grid, seed);
                    let naive = k.apply_naive(&f).unwrap();
                    let fast = k.apply_fast(&f).unwrap();
                    let scale = naive
                        .values()
                        .iter()
                        .fold(0.0f64, |m, v| m.max(v.abs()));
                    let err = naive
                        .values()
                        .iter()
                        .zip(fast.values())
                        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
                    assert!(
                        err <= 1e-12 * scale,
                        "{nx}x{ny} s={s} seed={seed}: err {err}, scale {scale}"
                    );
                }
            }
        }
    }

    #[test]
    fn fast_constant_field_is_exactly_zero() {
        let grid = GridSpec::new(16, 16, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.5).unwrap();
        let f = Field::filled(grid, 1.0).unwrap();
        let out = k.apply_fast(&f).unwrap();
        assert!(out.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn operator_is_self_adjoint_and_dissipative() {
        let grid = GridSpec::new(12, 12, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.6).unwrap();
        let a = random_field(grid, 3);
        let b = random_field(grid, 4);
        let la = k.apply_naive(&a).unwrap();
        let lb = k.apply_naive(&b).unwrap();
        let lhs = inner_product(&la, &b);
        let rhs = inner_product(&a, &lb);
        let scale = lhs.abs().max(rhs.abs()).max(1e-12);
        assert!((lhs - rhs).abs() <= 1e-10 * scale);

        let quad = inner_product(&la, &a);
        assert!(quad <= 1e-10 * inner_product(&a, &a));
    }

    #[test]
    fn refinement_only_touches_near_singularity_weights() {
        let grid = GridSpec::new(8, 8, 1.0).unwrap();
        let plain = FracKernel::build(grid, 0.5).unwrap();
        let refined = FracKernel::build_with(
            grid,
            0.5,
            KernelOptions {
                refine_near_singularity: true,
            },
        )
        .unwrap();
        // 1/r^{2+2s} is convex near the singularity, so the midpoint value
        // underestimates the cell average.
        assert!(refined.weight(1, 0) > plain.weight(1, 0));
        assert!(refined.weight(1, 1) > plain.weight(1, 1));
        assert_eq!(refined.weight(2, 0), plain.weight(2, 0));
        assert_eq!(refined.weight(3, 2), plain.weight(3, 2));
    }

    #[test]
    fn rejects_bad_order_and_mismatched_grids() {
        let grid = GridSpec::new(8, 8, 1.0).unwrap();
        assert!(FracKernel::build(grid, 1.0).is_err());
        assert!(FracKernel::build(grid, 0.0).is_err());
        let k = FracKernel::build(grid, 0.5).unwrap();
        let other = Field::zeros(GridSpec::new(8, 9, 1.0).unwrap());
        assert!(matches!(
            k.apply_naive(&other),
            Err(OperatorError::GridMismatch)
        ));
        assert!(matches!(
            k.apply_fast(&other),
            Err(OperatorError::GridMismatch)
        ));
    }

    #[test]
    fn weights_csv_has_header_and_full_window() {
        let grid = GridSpec::new(3, 3, 1.0).unwrap();
        let k = FracKernel::build(grid, 0.5).unwrap();
        let mut buf = Vec::new();
        k.write_weights_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "di,dj,weight");
        // 5x5 displacement window minus the center.
        assert_eq!(lines.len(), 1 + 24);
        assert!(lines[1].starts_with("-2,-2,"));
    }
}
