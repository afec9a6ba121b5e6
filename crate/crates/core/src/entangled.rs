//! Two-qubit probes: qubit `a` enters the bath, qubit `b` idles, and the
//! joint state is measured. Entanglement between the two can beat every
//! single-qubit preparation.
//!
//! The relaxation map is carried as four Kraus elements (a generalized
//! amplitude damping channel) so it can act on one tensor factor. For the
//! maximally entangled probe `(|00> + |11>)/sqrt(2)` the trace distance
//! between the two bath hypotheses has the closed form
//!
//! ```text
//! (|b+c| + |b-c| + |b+s| + |b-s|) / 4,   s = sqrt(4 a^2 + c^2)
//! ```
//!
//! in the separation coefficients of [`crate::channel`]; everything else is
//! handled numerically through a 4x4 Hermitian eigendecomposition.

use num_complex::Complex64;

use crate::channel::{BathOccupancy, BlochVector, ProbePair};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix4};
use crate::solve;

type C64 = Complex64;

/// 2x2 complex matrix in the basis (|0>, |1>), |0> excited.
pub type Matrix2 = [[Complex64; 2]; 2];

const NORMALIZATION_TOLERANCE: f64 = 1e-12;
const HERMITIAN_TOLERANCE: f64 = 1e-12;

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Pure two-qubit state over the basis (|00>, |01>, |10>, |11>),
/// qubit `a` first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitPureState {
    amplitudes: [Complex64; 4],
}

impl TwoQubitPureState {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::NotNormalized(norm_sq.sqrt()));
        }
        Ok(Self { amplitudes })
    }

    /// Maximally entangled state `(|00> + |11>)/sqrt(2)`.
    pub fn phi_plus() -> Self {
        let h = re(std::f64::consts::FRAC_1_SQRT_2);
        Self {
            amplitudes: [h, re(0.0), re(0.0), h],
        }
    }

    /// `sqrt(1-alpha)|00> + sqrt(alpha)|11>`; `alpha = 1/2` is `phi_plus`.
    pub fn phi_plus_like(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self {
            amplitudes: [re((1.0 - alpha).sqrt()), re(0.0), re(0.0), re(alpha.sqrt())],
        })
    }

    /// `sqrt(1-alpha)|01> - sqrt(alpha)|10>`, the singlet-like family.
    pub fn fujiwara(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self {
            amplitudes: [
                re(0.0),
                re((1.0 - alpha).sqrt()),
                re(-alpha.sqrt()),
                re(0.0),
            ],
        })
    }

    /// Product state `|q_a> (x) |q_b>`.
    pub fn product(qubit_a: [Complex64; 2], qubit_b: [Complex64; 2]) -> Result<Self> {
        Self::new([
            qubit_a[0] * qubit_b[0],
            qubit_a[0] * qubit_b[1],
            qubit_a[1] * qubit_b[0],
            qubit_a[1] * qubit_b[1],
        ])
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// 4x4 complex Hermitian matrix (density operators and their differences).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix4 {
    entries: Matrix4,
}

impl HermitianMatrix4 {
    /// Validates Hermiticity to 1e-12 entrywise and stores the symmetrized
    /// matrix `(m + m^dagger)/2`.
    pub fn new(entries: Matrix4) -> Result<Self> {
        let defect = linalg::hermitian_defect(&entries);
        if defect.is_nan() || defect > HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(defect));
        }
        let mut symmetrized = entries;
        for i in 0..4 {
            for j in 0..4 {
                symmetrized[i][j] = 0.5 * (entries[i][j] + entries[j][i].conj());
            }
        }
        Ok(Self {
            entries: symmetrized,
        })
    }

    pub fn entries(&self) -> &Matrix4 {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.entries[i][i].re).sum()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            entries: linalg::matrix_sub(&self.entries, &other.entries),
        }
    }

    /// Eigenvalues and eigenvectors (columns) by cyclic Jacobi rotations.
    pub fn eigen(&self) -> Result<([f64; 4], Matrix4)> {
        linalg::jacobi_hermitian(&self.entries)
    }

    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        Ok(self.eigen()?.0)
    }

    /// Trace norm `sum |eigenvalue|`.
    pub fn trace_norm(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.iter().map(|v| v.abs()).sum())
    }
}

/// Operator-sum form of the single-qubit relaxation, for use on one
/// subsystem of a larger state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubsystemChannel {
    kraus: [Matrix2; 4],
}

impl SubsystemChannel {
    pub fn kraus(&self) -> &[Matrix2; 4] {
        &self.kraus
    }

    /// Apply to a single-qubit density matrix.
    pub fn apply(&self, rho: Matrix2) -> Matrix2 {
        let mut out = [[re(0.0); 2]; 2];
        for k in &self.kraus {
            // k rho k^dagger
            for i in 0..2 {
                for j in 0..2 {
                    let mut acc = re(0.0);
                    for r in 0..2 {
                        for s in 0..2 {
                            acc += k[i][r] * rho[r][s] * k[j][s].conj();
                        }
                    }
                    out[i][j] += acc;
                }
            }
        }
        out
    }

    /// Bloch-vector action; matches the closed-form relaxation.
    pub fn apply_to_bloch(&self, r: BlochVector) -> BlochVector {
        let rho = [
            [
                C64::new(0.5 * (1.0 + r.z), 0.0),
                C64::new(0.5 * r.x, -0.5 * r.y),
            ],
            [
                C64::new(0.5 * r.x, 0.5 * r.y),
                C64::new(0.5 * (1.0 - r.z), 0.0),
            ],
        ];
        let out = self.apply(rho);
        BlochVector {
            x: 2.0 * out[0][1].re,
            y: -2.0 * out[0][1].im,
            z: out[0][0].re - out[1][1].re,
        }
    }
}

/// Kraus elements of the relaxation for time `t` in a bath of occupancy `n`.
///
/// With `eta = e^{-n t}` the decay branch (weight `p = (n+1)/(2n)`) damps
/// toward the ground state |1> and the excitation branch (weight `1-p`)
/// damps toward |0>; mixing them reproduces the closed-form Bloch map
/// exactly, including the fixed point `z = 1 - 2p = -1/n`.
pub fn gad_kraus(bath: BathOccupancy, t: f64) -> Result<SubsystemChannel> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let n = bath.value();
    let eta = (-n * t).exp();
    let one_minus_eta = -(-n * t).exp_m1();
    let p = (n + 1.0) / (2.0 * n);
    let (wp, wq) = (p.sqrt(), (1.0 - p).sqrt());
    let (root_eta, root_damp) = (eta.sqrt(), one_minus_eta.sqrt());
    let z = re(0.0);
    Ok(SubsystemChannel {
        kraus: [
            [[re(wp * root_eta), z], [z, re(wp)]],
            [[z, z], [re(wp * root_damp), z]],
            [[re(wq), z], [z, re(wq * root_eta)]],
            [[z, re(wq * root_damp)], [z, z]],
        ],
    })
}

/// Density matrix `sum_k (K_k (x) I)|psi><psi|(K_k (x) I)^dagger` after
/// qubit `a` has spent time `t` in the bath.
pub fn evolve_two_qubit(
    psi: &TwoQubitPureState,
    bath: BathOccupancy,
    t: f64,
) -> Result<HermitianMatrix4> {
    let channel = gad_kraus(bath, t)?;
    let amps = psi.amplitudes();
    let mut rho = [[re(0.0); 4]; 4];
    for k in channel.kraus() {
        // (K (x) I) acts on the first factor: out[2i+j] = sum_i' K[i][i'] amps[2i'+j].
        let mut v = [re(0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                v[2 * i + j] = k[i][0] * amps[j] + k[i][1] * amps[2 + j];
            }
        }
        for r in 0..4 {
            for c in 0..4 {
                rho[r][c] += v[r] * v[c].conj();
            }
        }
    }
    HermitianMatrix4::new(rho)
}

/// Closed-form trace distance between the evolved copies of the maximally
/// entangled probe: `(|b+c| + |b-c| + |b+s| + |b-s|)/4, s = sqrt(4a^2+c^2)`.
pub fn delta_entangled_phi_plus(pair: ProbePair, t: f64) -> f64 {
    let co = pair.coefficients(t);
    let s = (2.0 * co.a).hypot(co.c);
    0.25 * ((co.b + co.c).abs() + (co.b - co.c).abs() + (co.b + s).abs() + (co.b - s).abs())
}

/// Trace distance between the two evolved copies of an arbitrary pure
/// two-qubit probe, via eigendecomposition of the difference matrix.
pub fn delta_entangled(psi: &TwoQubitPureState, pair: ProbePair, t: f64) -> Result<f64> {
    let rho1 = evolve_two_qubit(psi, pair.n1(), t)?;
    let rho2 = evolve_two_qubit(psi, pair.n2(), t)?;
    rho1.sub(&rho2).trace_norm()
}

/// One-parameter probe families searched by [`optimize_alpha`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeFamily {
    /// `sqrt(1-alpha)|00> + sqrt(alpha)|11>`.
    PhiPlusLike,
    /// `sqrt(1-alpha)|01> - sqrt(alpha)|10>`.
    Fujiwara,
}

impl ProbeFamily {
    pub fn state(self, alpha: f64) -> Result<TwoQubitPureState> {
        match self {
            ProbeFamily::PhiPlusLike => TwoQubitPureState::phi_plus_like(alpha),
            ProbeFamily::Fujiwara => TwoQubitPureState::fujiwara(alpha),
        }
    }
}

/// Best entanglement weight found for a probe family at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaOptimum {
    pub alpha: f64,
    pub delta: f64,
}

const ALPHA_GRID_POINTS: usize = 1000;
const ALPHA_TOLERANCE: f64 = 1e-8;

/// Maximize `delta_entangled` over `alpha in [0, 1]` for one family:
/// 1001-point grid scan followed by golden-section refinement.
pub fn optimize_alpha(pair: ProbePair, t: f64, family: ProbeFamily) -> Result<AlphaOptimum> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let eval = |alpha: f64| -> Result<f64> { delta_entangled(&family.state(alpha)?, pair, t) };
    let mut best = (0.0, eval(0.0)?);
    for i in 1..=ALPHA_GRID_POINTS {
        let alpha = i as f64 / ALPHA_GRID_POINTS as f64;
        let value = eval(alpha)?;
        if value >= best.1 {
            best = (alpha, value);
        }
    }
    let spacing = 1.0 / ALPHA_GRID_POINTS as f64;
    let lo = (best.0 - spacing).max(0.0);
    let hi = (best.0 + spacing).min(1.0);
    let (alpha, delta) = solve::golden_max(
        |a| eval(a).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        ALPHA_TOLERANCE,
    );
    if delta >= best.1 {
        Ok(AlphaOptimum { alpha, delta })
    } else {
        Ok(AlphaOptimum {
            alpha: best.0,
            delta: best.1,
        })
    }
}
