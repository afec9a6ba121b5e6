//! Closed-form qubit dynamics under a thermal bosonic bath, and the
//! distinguishability of the trajectories driven by two candidate baths.
//!
//! Time is dimensionless (spontaneous-emission rate set to 1) and the bath
//! enters only through the occupancy parameter `n = 1 + 2N, n >= 1`, where
//! `N` is the mean occupation of the resonant mode. A Bloch vector
//! `(x, y, z)` relaxes as
//!
//! ```text
//! x(t) = x(0) exp(-n t / 2)
//! y(t) = y(0) exp(-n t / 2)
//! z(t) = (exp(-n t) (1 + n z(0)) - 1) / n
//! ```
//!
//! so every state contracts toward the thermal fixed point `(0, 0, -1/n)`.
//! The basis convention puts the excited state at `z = +1`.
//!
//! For two candidate occupancies `n1 < n2` the separation of the evolved
//! states is governed by three nonnegative coefficients
//!
//! ```text
//! a(t) = exp(-n1 t / 2) - exp(-n2 t / 2)
//! b(t) = exp(-n1 t)     - exp(-n2 t)
//! c(t) = (1 - exp(-n1 t)) / n1 - (1 - exp(-n2 t)) / n2
//! ```
//!
//! and a probe prepared at Bloch radius `R`, polar angle `theta` ends up a
//! Euclidean distance `sqrt(a^2 R^2 sin^2 theta + (b R cos theta - c)^2)`
//! from its counterpart. For single qubits that Euclidean distance equals
//! the trace distance, so it feeds directly into the optimal two-outcome
//! discrimination probability.

use crate::error::{Error, Result};

/// Bath occupancy parameter `n = 1 + 2N = coth(1 / (2T))`.
///
/// `n = 1` is the zero-temperature bath; `n` grows without bound as the
/// temperature does (`n ~ 2T` for large `T`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathOccupancy(f64);

impl BathOccupancy {
    pub fn new(n: f64) -> Result<Self> {
        if n.is_finite() && n >= 1.0 {
            Ok(Self(n))
        } else {
            Err(Error::OccupancyOutOfRange(n))
        }
    }

    /// Occupancy of a bath at dimensionless temperature `T >= 0`.
    ///
    /// `T = 0` maps to exactly 1; otherwise `n = 1 / tanh(1 / (2T))`.
    pub fn from_temperature(temperature: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature < 0.0 {
            return Err(Error::TemperatureOutOfRange(temperature));
        }
        if temperature == 0.0 {
            return Ok(Self(1.0));
        }
        Ok(Self((0.5 / temperature).tanh().recip()))
    }

    /// Inverse of [`BathOccupancy::from_temperature`]: `T = 1 / (2 atanh(1/n))`.
    ///
    /// Fails for `n = 1`, where the temperature is the unattained limit 0.
    pub fn temperature(self) -> Result<f64> {
        if self.0 == 1.0 {
            return Err(Error::ZeroTemperatureBath);
        }
        Ok(0.5 / self.0.recip().atanh())
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Thermal fixed point `(0, 0, -1/n)` of the relaxation.
    pub fn equilibrium(self) -> BlochVector {
        BlochVector {
            x: 0.0,
            y: 0.0,
            z: -self.0.recip(),
        }
    }
}

/// Ordered pair of candidate occupancies `n1 < n2` to be discriminated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbePair {
    n1: BathOccupancy,
    n2: BathOccupancy,
}

impl ProbePair {
    pub fn new(n1: BathOccupancy, n2: BathOccupancy) -> Result<Self> {
        if n1.value() < n2.value() {
            Ok(Self { n1, n2 })
        } else {
            Err(Error::UnorderedPair {
                n1: n1.value(),
                n2: n2.value(),
            })
        }
    }

    pub fn from_values(n1: f64, n2: f64) -> Result<Self> {
        Self::new(BathOccupancy::new(n1)?, BathOccupancy::new(n2)?)
    }

    pub fn n1(self) -> BathOccupancy {
        self.n1
    }

    pub fn n2(self) -> BathOccupancy {
        self.n2
    }

    /// Equilibrium separation `1/n1 - 1/n2` of the two fixed points.
    ///
    /// Every preparation tends to this distance at long times.
    pub fn delta_infinity(self) -> f64 {
        let (n1, n2) = (self.n1.value(), self.n2.value());
        (n2 - n1) / (n1 * n2)
    }

    /// Separation coefficients `(a, b, c)` at time `t >= 0`.
    ///
    /// Small differences are evaluated through `exp_m1` so that all three
    /// vanish exactly at `t = 0` and `a`, `b` stay nonnegative; for widely
    /// separated exponents the plain difference is used instead, which keeps
    /// the deep tails finite (no 0 * inf).
    pub fn coefficients(self, t: f64) -> Coefficients {
        assert!(t >= 0.0, "time must be nonnegative, got {t}");
        let (n1, n2) = (self.n1.value(), self.n2.value());
        let gap_t = (n2 - n1) * t;
        let a = if gap_t <= 2.0 {
            (-n2 * t / 2.0).exp() * (gap_t / 2.0).exp_m1()
        } else {
            (-n1 * t / 2.0).exp() - (-n2 * t / 2.0).exp()
        };
        let b = if gap_t <= 1.0 {
            (-n2 * t).exp() * gap_t.exp_m1()
        } else {
            (-n1 * t).exp() - (-n2 * t).exp()
        };
        let c = (-n2 * t).exp_m1() / n2 - (-n1 * t).exp_m1() / n1;
        Coefficients { a, b, c }
    }
}

/// Transverse, longitudinal, and offset separation coefficients.
///
/// All three are nonnegative for `n1 < n2` and any `t >= 0`: `a` and `b`
/// decay back to zero, while `c` grows monotonically to the equilibrium
/// separation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Probe preparation in polar form: Bloch radius and angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeState {
    radius: f64,
    theta: f64,
    phi: f64,
}

impl ProbeState {
    pub fn new(radius: f64, theta: f64, phi: f64) -> Result<Self> {
        if !radius.is_finite() || !(0.0..=1.0).contains(&radius) {
            return Err(Error::ProbeStateOutOfRange(format!(
                "radius must lie in [0, 1], got {radius}"
            )));
        }
        if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::ProbeStateOutOfRange(format!(
                "theta must lie in [0, pi], got {theta}"
            )));
        }
        if !phi.is_finite() || !(0.0..2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(Error::ProbeStateOutOfRange(format!(
                "phi must lie in [0, 2 pi), got {phi}"
            )));
        }
        Ok(Self { radius, theta, phi })
    }

    /// Pure preparation (`radius = 1`) at the given angles.
    pub fn pure(theta: f64, phi: f64) -> Result<Self> {
        Self::new(1.0, theta, phi)
    }

    pub fn radius(self) -> f64 {
        self.radius
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn phi(self) -> f64 {
        self.phi
    }

    pub fn bloch_vector(self) -> BlochVector {
        let (sin_t, cos_t) = self.theta.sin_cos();
        let (sin_p, cos_p) = self.phi.sin_cos();
        BlochVector {
            x: self.radius * sin_t * cos_p,
            y: self.radius * sin_t * sin_p,
            z: self.radius * cos_t,
        }
    }
}

/// Cartesian Bloch vector with `x^2 + y^2 + z^2 <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    /// Validating constructor; tolerates rounding up to 1e-12 past the sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm_sq = x * x + y * y + z * z;
        if !norm_sq.is_finite() || norm_sq > 1.0 + 1e-12 {
            return Err(Error::BlochNormTooLarge(norm_sq.sqrt()));
        }
        Ok(Self { x, y, z })
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn distance(self, other: BlochVector) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Closed-form relaxation of `r0` for time `t >= 0` in a bath of occupancy `n`.
///
/// `t = 0` returns `r0` unchanged (the `exp_m1` offset vanishes exactly) and
/// `t -> inf` lands on the fixed point `(0, 0, -1/n)`.
pub fn evolve_bloch(r0: BlochVector, bath: BathOccupancy, t: f64) -> Result<BlochVector> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let n = bath.value();
    let transverse = (-n * t / 2.0).exp();
    let longitudinal = (-n * t).exp();
    Ok(BlochVector {
        x: r0.x * transverse,
        y: r0.y * transverse,
        z: r0.z * longitudinal + (-n * t).exp_m1() / n,
    })
}

/// Euclidean (= trace) distance between the two evolved copies of `state`.
///
/// Equal to `sqrt(a^2 R^2 sin^2 theta + (b R cos theta - c)^2)`; the azimuth
/// drops out, so discrimination power depends only on `R` and `theta`.
pub fn delta(state: ProbeState, pair: ProbePair, t: f64) -> f64 {
    let co = pair.coefficients(t);
    let (sin_t, cos_t) = state.theta().sin_cos();
    let r = state.radius();
    (co.a * r * sin_t).hypot(co.b * r * cos_t - co.c)
}

/// Optimal single-shot success probability `(1 + d/2) / 2` for trace
/// distance `d` between equiprobable hypotheses.
pub fn helstrom_probability(distance: f64) -> Result<f64> {
    if !distance.is_finite() || !(0.0..=2.0).contains(&distance) {
        return Err(Error::DistanceOutOfRange(distance));
    }
    Ok(0.5 * (1.0 + 0.5 * distance))
}
