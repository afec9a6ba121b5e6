use thiserror::Error;

/// Errors reported by domain constructors and numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("bath occupancy must be finite and >= 1, got {0}")]
    OccupancyOutOfRange(f64),
    #[error("temperature must be finite and nonnegative, got {0}")]
    TemperatureOutOfRange(f64),
    #[error("occupancy 1 is the zero-temperature bath; no finite inverse exists")]
    ZeroTemperatureBath,
    #[error("bath pair requires n1 < n2, got n1 = {n1}, n2 = {n2}")]
    UnorderedPair { n1: f64, n2: f64 },
    #[error("probe state parameter out of range: {0}")]
    ProbeStateOutOfRange(String),
    #[error("Bloch vector norm {0} exceeds 1")]
    BlochNormTooLarge(f64),
    #[error("time must be nonnegative, got {0}")]
    NegativeTime(f64),
    #[error("trace distance must lie in [0, 2], got {0}")]
    DistanceOutOfRange(f64),
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("state vector norm {0} differs from 1 beyond tolerance")]
    NotNormalized(f64),
    #[error("matrix deviates from Hermitian symmetry by {0}")]
    NotHermitian(f64),
    #[error("integrator step must lie in (0, {max}], got {step}")]
    StepOutOfRange { step: f64, max: f64 },
    #[error("integration horizon must be positive, got {0}")]
    HorizonOutOfRange(f64),
    #[error("no sign change while bracketing: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    BracketingFailed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("root refinement did not converge within {0} iterations")]
    RootIterationsExceeded(usize),
    #[error("arccos argument {0} lies outside [-1, 1] beyond the clamping band")]
    ArccosDomain(f64),
    #[error(
        "eigensolver did not converge after {sweeps} sweeps, off-diagonal norm {off_diagonal}"
    )]
    EigensolverDidNotConverge { sweeps: usize, off_diagonal: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
