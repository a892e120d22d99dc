//! Interface flux stencils of the complete flux scheme.
//!
//! Every stencil is a linear form
//! `f = a_left·c_j + a_right·c_{j+1} + b_left·s_j + b_right·s_{j+1}`
//! in the two nodal unknowns and the two source values adjacent to the
//! interface. The velocity enters through the Péclet number `pe`, the
//! gradient correction `q` and the limiter `α`, bundled in [`PecletData`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::specfun::{bernoulli, bernoulli_scaled, w_tilde, w_weight};

/// Below this `|pe|` the gradient correction is switched off (`α = 0`).
pub const SMALL_PECLET_CUTOFF: f64 = 10.0;

/// Smallest admissible denominator magnitude in the exact-IBP stencils.
pub const DENOMINATOR_GUARD: f64 = 1e-12;

/// How `α` is chosen from `pe` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Limiter {
    /// `α = 1`: full linear velocity, no sign protection.
    Off,
    /// `α = min(1, |pe/q|)`.
    Ratio,
    /// `α = min(1, |pe/q|)`, except `α = 0` wherever `|pe| <` [`SMALL_PECLET_CUTOFF`].
    #[default]
    RatioWithCutoff,
}

impl Limiter {
    pub fn alpha(self, pe: f64, q: f64) -> f64 {
        if q == 0.0 {
            return 1.0;
        }
        match self {
            Limiter::Off => 1.0,
            Limiter::Ratio => (pe / q).abs().min(1.0),
            Limiter::RatioWithCutoff => {
                if pe.abs() < SMALL_PECLET_CUTOFF {
                    0.0
                } else {
                    (pe / q).abs().min(1.0)
                }
            }
        }
    }
}

/// Péclet data at one interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PecletData {
    pub pe: f64,
    pub q: f64,
    pub alpha: f64,
    pub pe_plus: f64,
    pub pe_minus: f64,
}

impl PecletData {
    /// Builds the data for a given `α`. When `α < 1` the adjusted numbers
    /// are snapped to zero if rounding pushed them across it.
    pub fn new(pe: f64, q: f64, alpha: f64) -> Self {
        let aq = alpha * q;
        let mut pe_plus = pe - aq;
        let mut pe_minus = pe + aq;
        if alpha < 1.0 {
            if pe > 0.0 && pe_plus < 0.0 {
                pe_plus = 0.0;
            }
            if pe < 0.0 && pe_minus > 0.0 {
                pe_minus = 0.0;
            }
        }
        Self {
            pe,
            q,
            alpha,
            pe_plus,
            pe_minus,
        }
    }

    /// Constant-velocity data: `q = 0`, `α = 1`.
    pub fn constant(pe: f64) -> Self {
        Self::new(pe, 0.0, 1.0)
    }

    pub fn alpha_q(&self) -> f64 {
        self.alpha * self.q
    }
}

/// `pe = (μ/D)·v·Δx`, `q = (μ/D)·v_x·Δx²/2` and `α` from `limiter`.
pub fn peclet_data(
    v: f64,
    dvdx: f64,
    dx: f64,
    mu: f64,
    diffusion: f64,
    limiter: Limiter,
) -> PecletData {
    let scale = mu / diffusion;
    let pe = scale * v * dx;
    let q = 0.5 * scale * dvdx * dx * dx;
    PecletData::new(pe, q, limiter.alpha(pe, q))
}

/// Flux at one interface as a linear form in `c_j, c_{j+1}, s_j, s_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxStencil {
    pub a_left: f64,
    pub a_right: f64,
    pub b_left: f64,
    pub b_right: f64,
}

impl FluxStencil {
    pub fn flux(&self, c_left: f64, c_right: f64, s_left: f64, s_right: f64) -> f64 {
        self.homogeneous(c_left, c_right) + self.inhomogeneous(s_left, s_right)
    }

    pub fn homogeneous(&self, c_left: f64, c_right: f64) -> f64 {
        self.a_left * c_left + self.a_right * c_right
    }

    pub fn inhomogeneous(&self, s_left: f64, s_right: f64) -> f64 {
        self.b_left * s_left + self.b_right * s_right
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            a_left: self.a_left * factor,
            a_right: self.a_right * factor,
            b_left: self.b_left * factor,
            b_right: self.b_right * factor,
        }
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.a_left, self.a_right, self.b_left, self.b_right]
    }

    fn checked(self) -> Result<Self> {
        if self.entries().iter().all(|v| v.is_finite()) {
            Ok(self)
        } else {
            Err(Error::NonFinite {
                what: "flux stencil coefficient",
            })
        }
    }
}

/// Which side the velocity is sampled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `Λ` expanded about `η = 0`, uses `pe⁺`.
    Plus,
    /// `Λ` expanded about `η = 1`, uses `pe⁻`.
    Minus,
}

/// Stencil family actually used at an interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PiecewiseConstant,
    Adjusted(Side),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FluxVariant {
    PiecewiseConstant,
    /// Plus family for `pe ≥ 0`, minus family for `pe < 0`.
    UpwindAdjusted,
    /// The opposite of [`FluxVariant::UpwindAdjusted`].
    DownwindAdjusted,
    /// Like `UpwindAdjusted`, with `pe = 0` going to the piecewise-constant stencil.
    AutoUpwind,
}

impl FluxVariant {
    pub const ALL: [FluxVariant; 4] = [
        FluxVariant::PiecewiseConstant,
        FluxVariant::UpwindAdjusted,
        FluxVariant::DownwindAdjusted,
        FluxVariant::AutoUpwind,
    ];

    pub fn family(self, pe: f64) -> Family {
        match self {
            FluxVariant::PiecewiseConstant => Family::PiecewiseConstant,
            FluxVariant::UpwindAdjusted => {
                Family::Adjusted(if pe >= 0.0 { Side::Plus } else { Side::Minus })
            }
            FluxVariant::DownwindAdjusted => {
                Family::Adjusted(if pe >= 0.0 { Side::Minus } else { Side::Plus })
            }
            FluxVariant::AutoUpwind => {
                if pe > 0.0 {
                    Family::Adjusted(Side::Plus)
                } else if pe < 0.0 {
                    Family::Adjusted(Side::Minus)
                } else {
                    Family::PiecewiseConstant
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FluxVariant::PiecewiseConstant => "pwc",
            FluxVariant::UpwindAdjusted => "upwind",
            FluxVariant::DownwindAdjusted => "downwind",
            FluxVariant::AutoUpwind => "auto",
        }
    }
}

impl fmt::Display for FluxVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FluxVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pwc" => Ok(FluxVariant::PiecewiseConstant),
            "upwind" => Ok(FluxVariant::UpwindAdjusted),
            "downwind" => Ok(FluxVariant::DownwindAdjusted),
            "auto" => Ok(FluxVariant::AutoUpwind),
            other => Err(Error::Config(format!(
                "unknown flux variant '{other}' (expected pwc, upwind, downwind or auto)"
            ))),
        }
    }
}

/// Piecewise-constant velocity stencil.
pub fn stencil_pwc(p: &PecletData, diffusion: f64, dx: f64) -> Result<FluxStencil> {
    let d = diffusion / dx;
    FluxStencil {
        a_left: d * bernoulli(-p.pe)?,
        a_right: -d * bernoulli(p.pe)?,
        b_left: dx * w_weight(-p.pe)?,
        b_right: -dx * w_weight(p.pe)?,
    }
    .checked()
}

/// Asymptotic stencil with `Λ` expanded about `η = 0`.
pub fn stencil_upwind_plus(p: &PecletData, diffusion: f64, dx: f64) -> Result<FluxStencil> {
    let aq = p.alpha_q();
    if aq == 0.0 {
        return stencil_pwc(p, diffusion, dx);
    }
    let d = diffusion / dx;
    let z = p.pe_plus;
    FluxStencil {
        a_left: d * bernoulli(-z)?,
        a_right: -d * bernoulli_scaled(z, -aq)?,
        b_left: dx * w_tilde(-z, 0.25 * aq)?,
        b_right: -dx * w_tilde(z, -0.75 * aq)?,
    }
    .checked()
}

/// Asymptotic stencil with `Λ` expanded about `η = 1`.
pub fn stencil_upwind_minus(p: &PecletData, diffusion: f64, dx: f64) -> Result<FluxStencil> {
    let aq = p.alpha_q();
    if aq == 0.0 {
        return stencil_pwc(p, diffusion, dx);
    }
    let d = diffusion / dx;
    let z = p.pe_minus;
    FluxStencil {
        a_left: d * bernoulli_scaled(-z, -aq)?,
        a_right: -d * bernoulli(z)?,
        b_left: dx * w_tilde(-z, -1.25 * aq)?,
        b_right: -dx * w_tilde(z, -0.25 * aq)?,
    }
    .checked()
}

/// Integration-by-parts stencil with trapezoidal quadrature, before the
/// asymptotic simplification. Uses `P = pe/2 - αq/4`.
pub fn stencil_exact_ibp(
    p: &PecletData,
    diffusion: f64,
    dx: f64,
    side: Side,
) -> Result<FluxStencil> {
    let aq = p.alpha_q();
    if aq == 0.0 {
        return stencil_pwc(p, diffusion, dx);
    }
    let d = diffusion / dx;
    let pe = p.pe;
    let big_p = 0.5 * pe - 0.25 * aq;
    let guard = |den: f64| {
        if den.is_finite() && den.abs() < DENOMINATOR_GUARD {
            Err(Error::DegenerateStencil { denominator: den })
        } else {
            Ok(den)
        }
    };
    let stencil = match side {
        Side::Plus => {
            let z = p.pe_plus;
            // 1 - (1 + αq)e^{-pe}
            let den = guard(-(-pe).exp_m1() - aq * (-pe).exp())?;
            let iden = guard(z * -den)?;
            let e_pe = (-pe).exp();
            let e_p = (-big_p).exp();
            let c_left = (1.0 - 0.5 * z - (1.0 + 0.5 * aq) * e_p) / iden;
            let c_right = ((1.0 + 0.5 * z) * (1.0 + aq) * e_pe - (1.0 - 0.5 * aq) * e_p) / iden;
            FluxStencil {
                a_left: d * z / den,
                a_right: -d * e_pe * z / den,
                b_left: dx * c_left,
                b_right: -dx * c_right,
            }
        }
        Side::Minus => {
            let z = p.pe_minus;
            // (1 + αq)e^{pe} - 1
            let den = guard(pe.exp_m1() + aq * pe.exp())?;
            let iden = guard(z * den)?;
            let e_pe = pe.exp();
            let e_p = big_p.exp();
            let c_left = ((1.0 - 0.5 * z) * (1.0 + aq) * e_pe - (1.0 - 0.5 * aq) * e_p) / iden;
            let c_right = ((1.0 + 0.5 * aq) * e_p - (1.0 + 0.5 * z)) / iden;
            FluxStencil {
                a_left: d * e_pe * z / den,
                a_right: -d * z / den,
                b_left: -dx * c_left,
                b_right: -dx * c_right,
            }
        }
    };
    stencil.checked()
}

/// The stencil `variant` prescribes for this interface.
pub fn select_stencil(
    variant: FluxVariant,
    p: &PecletData,
    diffusion: f64,
    dx: f64,
) -> Result<FluxStencil> {
    match variant.family(p.pe) {
        Family::PiecewiseConstant => stencil_pwc(p, diffusion, dx),
        Family::Adjusted(Side::Plus) => stencil_upwind_plus(p, diffusion, dx),
        Family::Adjusted(Side::Minus) => stencil_upwind_minus(p, diffusion, dx),
    }
}
