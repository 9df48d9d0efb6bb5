//! Longitudinal fiber-link monitoring from transmitted/received waveform pairs.
//!
//! The crate has two halves. The forward half ([`signal`], [`channel`])
//! generates QAM waveforms and propagates them through a multi-span fiber
//! link with a split-step simulator, producing a received waveform plus an
//! analytic ground-truth profile of the per-position nonlinear coefficient
//! and group-velocity dispersion. The inverse half ([`dbp`], [`estimator`])
//! runs a digital-backpropagation chain whose per-step parameters are
//! trained by gradient descent so that the backpropagated received signal
//! matches the known transmitted one; the learned parameter vectors are the
//! longitudinal loss and dispersion profiles of the link.
//!
//! Canonical units throughout: time in ps, distance in km, power in W,
//! dispersion beta2 in ps^2/km, nonlinear coefficient in 1/(W*km), angular
//! frequency in rad/ps. These keep every exponent appearing in the
//! propagation operators O(1).

pub mod adam;
pub mod channel;
pub mod dbp;
pub mod estimator;
pub mod fft;
pub mod scenarios;
pub mod signal;
pub mod verify;

mod math;

use thiserror::Error;

/// Errors surfaced by the simulation and estimation APIs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported QAM order {0}; supported orders are 4, 16 and 64")]
    UnsupportedQamOrder(u32),
    #[error("{0}")]
    InvalidInput(String),
    #[error("waveform is empty or all-zero; operation undefined")]
    DegenerateWaveform,
    #[error("block length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("step size {dz} km does not divide length {length} km")]
    StepMismatch { dz: f64, length: f64 },
    #[error("block length {got} does not match the {expected}-point transform")]
    LengthMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("guard of {got} samples is too small for the accumulated dispersion; need at least {required} per block edge")]
    GuardTooSmall { required: usize, got: usize },
    #[error("waveform of {len} samples is shorter than one {block}-sample block")]
    WaveformTooShort { len: usize, block: usize },
    #[error("cost became non-finite at iteration {iteration}")]
    NonFiniteCost { iteration: usize },
    #[error("all {0} training runs were discarded (non-finite cost)")]
    AllRunsDiscarded(usize),
    #[error("profile has no positive entries; cannot form a dB profile")]
    AllNonPositive,
    #[error("need at least two spans for span-contrast analysis")]
    TooFewSpans,
}

pub type Result<T> = std::result::Result<T, Error>;
