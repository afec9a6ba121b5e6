//! Independent numerical routes used to cross-check the closed forms:
//! a fixed-step RK4 integration of the relaxation equations, a dense grid
//! search over preparations, and a trace distance computed directly from
//! eigenvalues. Nothing here reuses the expressions it is meant to check.

use num_complex::Complex64;

use crate::channel::{self, BathOccupancy, BlochVector, ProbePair, ProbeState};
use crate::error::{Error, Result};
use crate::linalg;

/// Step-size and horizon configuration for [`integrate_master_equation`].
///
/// The step is capped at 1e-3 so that every integration run is firmly in
/// the fourth-order convergence regime for the occupancies of interest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    step: f64,
    t_end: f64,
}

const MAX_STEP: f64 = 1e-3;

impl IntegratorConfig {
    pub fn new(step: f64, t_end: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 || step > MAX_STEP {
            return Err(Error::StepOutOfRange {
                step,
                max: MAX_STEP,
            });
        }
        if !t_end.is_finite() || t_end <= 0.0 {
            return Err(Error::HorizonOutOfRange(t_end));
        }
        Ok(Self { step, t_end })
    }

    pub fn step(self) -> f64 {
        self.step
    }

    pub fn t_end(self) -> f64 {
        self.t_end
    }
}

/// Classical fourth-order Runge-Kutta integration of
///
/// ```text
/// x' = -(n/2) x,   y' = -(n/2) y,   z' = -n z - 1
/// ```
///
/// from `r0`, sampled at uniform times `0 = t_0 < ... < t_steps = t_end`
/// (the step count is `round(t_end / step)`, at least one). Returns the
/// full `(time, state)` series including the initial point.
pub fn integrate_master_equation(
    r0: BlochVector,
    bath: BathOccupancy,
    cfg: &IntegratorConfig,
) -> Vec<(f64, BlochVector)> {
    let n = bath.value();
    let deriv = |r: [f64; 3]| [-0.5 * n * r[0], -0.5 * n * r[1], -n * r[2] - 1.0];

    let steps = (cfg.t_end / cfg.step).round().max(1.0) as usize;
    let h = cfg.t_end / steps as f64;

    let mut series = Vec::with_capacity(steps + 1);
    let mut r = [r0.x, r0.y, r0.z];
    series.push((0.0, r0));
    for k in 1..=steps {
        let k1 = deriv(r);
        let k2 = deriv(advance(r, k1, 0.5 * h));
        let k3 = deriv(advance(r, k2, 0.5 * h));
        let k4 = deriv(advance(r, k3, h));
        for i in 0..3 {
            r[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        let t = (k as f64 / steps as f64) * cfg.t_end;
        series.push((
            t,
            BlochVector {
                x: r[0],
                y: r[1],
                z: r[2],
            },
        ));
    }
    series
}

fn advance(r: [f64; 3], slope: [f64; 3], h: f64) -> [f64; 3] {
    [
        r[0] + h * slope[0],
        r[1] + h * slope[1],
        r[2] + h * slope[2],
    ]
}

/// Brute-force argmax of the pure-probe separation over a uniform polar
/// grid `theta_i = (i / (points - 1)) pi`. Ties resolve to the larger
/// angle. Returns `(theta, separation)`.
pub fn grid_argmax_theta(pair: ProbePair, t: f64, points: usize) -> (f64, f64) {
    assert!(points >= 3, "grid needs at least 3 points, got {points}");
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..points {
        let theta = (i as f64 / (points - 1) as f64) * std::f64::consts::PI;
        let value = channel::delta(ProbeState::pure(theta, 0.0).unwrap(), pair, t);
        if value >= best.1 {
            best = (theta, value);
        }
    }
    best
}

/// Trace norm `sum |eigenvalue|` of a Hermitian 4x4 matrix, computed by
/// Jacobi diagonalization of the symmetrized input. Rejects matrices whose
/// Hermitian defect exceeds 1e-12.
pub fn trace_distance_numeric(m: &[[Complex64; 4]; 4]) -> Result<f64> {
    let defect = linalg::hermitian_defect(m);
    if defect.is_nan() || defect > 1e-12 {
        return Err(Error::NotHermitian(defect));
    }
    let mut symmetrized = *m;
    for i in 0..4 {
        for j in 0..4 {
            symmetrized[i][j] = 0.5 * (m[i][j] + m[j][i].conj());
        }
    }
    let (eigenvalues, _) = linalg::jacobi_hermitian(&symmetrized)?;
    Ok(eigenvalues.iter().map(|v| v.abs()).sum())
}
