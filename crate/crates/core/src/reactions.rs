//! Gray-Scott kinetics: the two nonlinearities, quasi-positivity sampling,
//! and the closed-form steady states of the reaction ODE.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which diffusion acts on the activator `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Classical Laplacian on both species.
    Local,
    /// Regional fractional Laplacian on `u`, classical Laplacian on `v`.
    Mixed,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Local => "local",
            Variant::Mixed => "mixed",
        })
    }
}

/// Physical parameters of the simulated system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrayScottParams {
    /// Diffusion coefficient of the activator `u`.
    pub d1: f64,
    /// Diffusion coefficient of the inhibitor `v`.
    pub d2: f64,
    /// Feed rate.
    pub f: f64,
    /// Kill rate.
    pub kappa: f64,
    /// Fractional order; meaningful only for the mixed variant.
    pub s: f64,
    pub variant: Variant,
}

/// Parameter validation failure.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamError(pub String);

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid parameters: {}", self.0)
    }
}

impl std::error::Error for ParamError {}

impl GrayScottParams {
    /// Paper setup: unit-domain coefficients.
    pub fn paper_preset(variant: Variant, s: f64) -> Self {
        GrayScottParams {
            d1: 1.0,
            d2: 0.5,
            f: 0.04,
            kappa: 0.0636,
            s,
            variant,
        }
    }

    /// Desk-scale pattern setup: classic small diffusion coefficients with
    /// the same feed/kill pair.
    pub fn pearson_preset(variant: Variant, s: f64) -> Self {
        GrayScottParams {
            d1: 2e-5,
            d2: 1e-5,
            f: 0.04,
            kappa: 0.0636,
            s,
            variant,
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.d1.is_finite() && self.d1 > 0.0) || !(self.d2.is_finite() && self.d2 > 0.0) {
            return Err(ParamError(format!(
                "diffusion coefficients must be positive, got d1={}, d2={}",
                self.d1, self.d2
            )));
        }
        if self.d1 == self.d2 {
            return Err(ParamError("d1 and d2 must differ".into()));
        }
        if !(self.f.is_finite() && self.f >= 0.0) {
            return Err(ParamError(format!("feed rate must be >= 0, got {}", self.f)));
        }
        if !(self.kappa.is_finite() && self.kappa >= 0.0) {
            return Err(ParamError(format!(
                "kill rate must be >= 0, got {}",
                self.kappa
            )));
        }
        if self.variant == Variant::Mixed && !(self.s > 0.0 && self.s < 1.0) {
            return Err(ParamError(format!(
                "s out of (0,1) for mixed variant, got {}",
                self.s
            )));
        }
        Ok(())
    }

    /// Activator kinetics `g1(u, v) = -u v^2 + f (1 - u)`.
    #[inline]
    pub fn g1(&self, u: f64, v: f64) -> f64 {
        -u * v * v + self.f * (1.0 - u)
    }

    /// Inhibitor kinetics `g2(u, v) = u v^2 - (f + kappa) v`.
    #[inline]
    pub fn g2(&self, u: f64, v: f64) -> f64 {
        u * v * v - (self.f + self.kappa) * v
    }
}

/// One root of the kinetic steady-state system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub u: f64,
    pub v: f64,
}

/// Solutions of `g1 = g2 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteadyStates {
    /// The washout state `(1, 0)`, always present.
    pub trivial: SteadyState,
    /// Zero or two interior states (one when the discriminant vanishes).
    pub interior: Vec<SteadyState>,
    /// `1 - 4 (f + kappa)^2 / f`; interior states exist iff nonnegative.
    pub discriminant: f64,
    /// True when the discriminant is exactly zero and the doubled root is
    /// reported once.
    pub degenerate: bool,
}

/// Solves the kinetic system `u_t = v_t = 0` in closed form.
///
/// The trivial state is always returned. For `f > 0` the interior pair
/// `u = (1 ± sqrt(D))/2`, `v = f (1 ∓ sqrt(D)) / (2 (f + kappa))` exists
/// when the discriminant `D` is nonnegative; every returned pair is
/// re-verified by substitution into the kinetics.
pub fn steady_states(p: &GrayScottParams) -> Result<SteadyStates, ParamError> {
    if !(p.f >= 0.0) || !(p.kappa >= 0.0) {
        return Err(ParamError(format!(
            "steady states need f >= 0 and kappa >= 0, got f={}, kappa={}",
            p.f, p.kappa
        )));
    }
    let trivial = SteadyState { u: 1.0, v: 0.0 };
    if p.f == 0.0 {
        return Ok(SteadyStates {
            trivial,
            interior: Vec::new(),
            discriminant: f64::NEG_INFINITY,
            degenerate: false,
        });
    }
    let fk = p.f + p.kappa;
    let discriminant = 1.0 - 4.0 * fk * fk / p.f;
    let mut interior = Vec::new();
    let mut degenerate = false;
    if discriminant >= 0.0 {
        let root = discriminant.sqrt();
        let scale = p.f / (2.0 * fk);
        interior.push(SteadyState {
            u: 0.5 * (1.0 + root),
            v: scale * (1.0 - root),
        });
        if discriminant == 0.0 {
            degenerate = true;
        } else {
            interior.push(SteadyState {
                u: 0.5 * (1.0 - root),
                v: scale * (1.0 + root),
            });
        }
        for st in &interior {
            debug_assert!(p.g1(st.u, st.v).abs() <= 1e-12);
            debug_assert!(p.g2(st.u, st.v).abs() <= 1e-12);
        }
    }
    Ok(SteadyStates {
        trivial,
        interior,
        discriminant,
        degenerate,
    })
}

/// Samples `g1(0, v) >= 0` and `g2(u, 0) >= 0` over `u, v in [0, 10]`.
///
/// Holds identically for the Gray-Scott kinetics with legal parameters; the
/// sampler is seeded so results are reproducible.
pub fn check_quasi_positivity(p: &GrayScottParams, samples: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    // Always include the corner and an interior point.
    let mut probes = vec![0.0, 10.0];
    probes.extend((0..samples).map(|_| rng.gen_range(0.0..10.0)));
    probes.iter().all(|&w| {
        let edge_u = p.g1(0.0, w);
        let edge_v = p.g2(w, 0.0);
        edge_u >= 0.0 && edge_v >= 0.0
    })
}
