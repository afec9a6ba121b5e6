//! Best preparations and interrogation times for a single-qubit probe.
//!
//! Pure probes always beat mixed ones here, so everything below works at
//! Bloch radius 1 and optimizes over the polar angle `theta` and the time
//! `t`. Two regimes emerge:
//!
//! * at short times the fully polarized probe (`theta = pi`, the excited
//!   state's antipode) maximizes the separation `b + c`;
//! * past a branch time `t_star` — the root of `a^2 - b^2 = b c` — a partly
//!   transverse preparation with `cos theta = -bc / (a^2 - b^2)` takes over,
//!   reaching `a sqrt(1 + c^2 / (a^2 - b^2))`.
//!
//! Closed forms exist for the best interrogation time of the polarized
//! probe and (approximately) of the equatorial probe; the global optimum
//! over both variables is found by scanning the per-time envelope.

use crate::channel::ProbePair;
use crate::error::{Error, Result};
use crate::solve;

/// Separation of the polarized probe (`theta = pi`): `b + c`.
pub fn delta_ground(pair: ProbePair, t: f64) -> f64 {
    let co = pair.coefficients(t);
    co.b + co.c
}

/// Separation of the equatorial probe (`theta = pi/2`): `sqrt(a^2 + c^2)`.
pub fn delta_coherent(pair: ProbePair, t: f64) -> f64 {
    let co = pair.coefficients(t);
    co.a.hypot(co.c)
}

/// Time maximizing the polarized probe's separation,
/// `ln((n2 - 1) / (n1 - 1)) / (n2 - n1)`.
///
/// `None` when `n1 = 1`: against a zero-temperature bath the polarized
/// separation increases forever and only saturates in the limit.
pub fn t_ground_max(pair: ProbePair) -> Option<f64> {
    let (n1, n2) = (pair.n1().value(), pair.n2().value());
    if n1 <= 1.0 {
        return None;
    }
    Some(((n2 - n1) / (n1 - 1.0)).ln_1p() / (n2 - n1))
}

/// Time maximizing the transverse coefficient `a`,
/// `2 ln(n2 / n1) / (n2 - n1)` — a good proxy for the equatorial probe's
/// best time (the exact maximizer is slightly later because `c` still
/// grows).
pub fn t_coherent_approx(pair: ProbePair) -> f64 {
    let (n1, n2) = (pair.n1().value(), pair.n2().value());
    2.0 * ((n2 - n1) / n1).ln_1p() / (n2 - n1)
}

/// Branch time: the unique positive root of `a^2 - b^2 - b c`. Below it
/// the polarized probe is optimal; above it the optimum moves off the pole.
pub fn t_star(pair: ProbePair) -> Result<f64> {
    let f = |t: f64| {
        let co = pair.coefficients(t);
        co.a * co.a - co.b * co.b - co.b * co.c
    };
    let (lo, hi) = solve::bracket_sign_change(f, 1e-6)?;
    solve::brent_root(f, lo, hi)
}

/// Time at which the longitudinal coefficients coincide (`b = c`); the
/// entangled probe's separation curve has a kink here because a different
/// eigenvalue starts carrying the trace norm.
pub fn t_crossing(pair: ProbePair) -> Result<f64> {
    let f = |t: f64| {
        let co = pair.coefficients(t);
        co.b - co.c
    };
    let (lo, hi) = solve::bracket_sign_change(f, 1e-6)?;
    solve::brent_root(f, lo, hi)
}

/// Best pure preparation at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalStrategy {
    /// Polar angle of the best preparation, always in `[pi/2, pi]`.
    pub theta: f64,
    /// Separation it achieves.
    pub delta: f64,
}

/// Best polar angle and separation at time `t`.
///
/// The separation squared is `a^2 sin^2 theta + (b cos theta - c)^2`, whose
/// derivative in `theta` is `2 sin theta ((a^2 - b^2) cos theta + b c)`.
/// When `a^2 - b^2 <= b c` the derivative is one-signed (after comparing
/// the two poles) and the maximum sits at `theta = pi`; otherwise the
/// interior stationary point `cos theta = -bc / (a^2 - b^2)` wins.
pub fn theta_optimal(pair: ProbePair, t: f64) -> Result<OptimalStrategy> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let co = pair.coefficients(t);
    let disc = co.a * co.a - co.b * co.b;
    let bc = co.b * co.c;
    if disc <= bc {
        return Ok(OptimalStrategy {
            theta: std::f64::consts::PI,
            delta: co.b + co.c,
        });
    }
    let arg = bc / disc;
    if arg > 1.0 + 1e-9 {
        return Err(Error::ArccosDomain(arg));
    }
    Ok(OptimalStrategy {
        theta: std::f64::consts::PI - arg.min(1.0).acos(),
        delta: co.a.hypot(co.a * co.c / disc.sqrt()),
    })
}

/// Jointly optimal `(t, theta)` over `[0, t_max] x [0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalOptimum {
    pub t: f64,
    pub theta: f64,
    pub delta: f64,
}

const TIME_GRID_INTERVALS: usize = 1000;
const TIME_REFINE_TOLERANCE: f64 = 1e-10;

/// Maximize the per-time envelope of [`theta_optimal`] over `[0, t_max]`:
/// a 1001-point scan followed by golden-section refinement around the best
/// cell. Ties on the scan resolve to the later time.
pub fn global_optimum(pair: ProbePair, t_max: f64) -> Result<GlobalOptimum> {
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(Error::HorizonOutOfRange(t_max));
    }
    let envelope = |t: f64| {
        theta_optimal(pair, t)
            .map(|s| s.delta)
            .unwrap_or(f64::NEG_INFINITY)
    };
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..=TIME_GRID_INTERVALS {
        let t = (i as f64 / TIME_GRID_INTERVALS as f64) * t_max;
        let value = envelope(t);
        if value >= best.1 {
            best = (t, value);
        }
    }
    let spacing = t_max / TIME_GRID_INTERVALS as f64;
    let lo = (best.0 - spacing).max(0.0);
    let hi = (best.0 + spacing).min(t_max);
    let (refined, refined_value) = solve::golden_max(envelope, lo, hi, TIME_REFINE_TOLERANCE);
    let t = if refined_value >= best.1 {
        refined
    } else {
        best.0
    };
    let strategy = theta_optimal(pair, t)?;
    Ok(GlobalOptimum {
        t,
        theta: strategy.theta,
        delta: strategy.delta,
    })
}

/// Exact and tail-approximate separations for the pair `(n1, 2 n1)`.
///
/// Once `exp(-n1 t)` is small,
///
/// ```text
/// polarized:  1/(2 n1) + (1 - 1/n1)  exp(-n1 t)
/// equatorial: 1/(2 n1) + (n1 - 1/n1) exp(-n1 t)
/// ```
///
/// so the equatorial probe approaches the common limit `1/(2 n1)` from a
/// much larger offset — it stays more distinguishable in the tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubledBathAsymptotics {
    pub exact_ground: f64,
    pub approx_ground: f64,
    pub exact_coherent: f64,
    pub approx_coherent: f64,
}

/// Evaluate the exact separations and their tail approximations for the
/// doubled-occupancy pair `(n1, 2 n1)` at time `t`.
pub fn asymptotics_doubled(n1: f64, t: f64) -> Result<DoubledBathAsymptotics> {
    let pair = ProbePair::from_values(n1, 2.0 * n1)?;
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let decay = (-n1 * t).exp();
    Ok(DoubledBathAsymptotics {
        exact_ground: delta_ground(pair, t),
        approx_ground: 0.5 / n1 + (1.0 - 1.0 / n1) * decay,
        exact_coherent: delta_coherent(pair, t),
        approx_coherent: 0.5 / n1 + (n1 - 1.0 / n1) * decay,
    })
}

/// The characteristic quantities of a discrimination problem in one bundle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Landmarks {
    /// Equilibrium separation `1/n1 - 1/n2`.
    pub delta_infinity: f64,
    /// Branch time past which the optimum leaves the pole.
    pub t_star: f64,
    /// Best time for the polarized probe; `None` when `n1 = 1`.
    pub t_ground: Option<f64>,
    /// Proxy for the equatorial probe's best time.
    pub t_coherent_approx: f64,
    /// Time where the longitudinal coefficients cross (`b = c`).
    pub t_crossing: f64,
}

impl Landmarks {
    pub fn compute(pair: ProbePair) -> Result<Self> {
        Ok(Self {
            delta_infinity: pair.delta_infinity(),
            t_star: t_star(pair)?,
            t_ground: t_ground_max(pair),
            t_coherent_approx: t_coherent_approx(pair),
            t_crossing: t_crossing(pair)?,
        })
    }
}
