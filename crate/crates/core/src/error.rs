//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A statistics or training dataset contained no valid pixels/entries.
    #[error("empty dataset: no valid pixels or entries to operate on")]
    EmptyDataset,

    /// Scene generation could not place an object after repeated tries.
    #[error("bin overfull: placement rejected {tries} consecutive times")]
    BinOverfull { tries: u32 },

    /// A command targeted a point outside the bin bounds.
    #[error("target ({x:.4}, {y:.4}) is outside the workspace")]
    OutOfWorkspace { x: f64, y: f64 },

    /// Image operators need a minimum spatial extent.
    #[error("image {h}x{w} too small for this operator (minimum {min}x{min})")]
    ImageTooSmall { h: usize, w: usize, min: usize },

    /// Tensor or input dimensions do not match the network architecture.
    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    /// A masked loss was requested with no active pixels.
    #[error("empty mask: loss needs at least one active pixel")]
    EmptyMask,

    /// A backward pass was given a cache that does not match the parameters.
    #[error("cache mismatch: activations are stale for these parameters")]
    CacheMismatch,

    /// Gradients became non-finite.
    #[error("diverged gradient: non-finite value in {tensor}")]
    DivergedGradient { tensor: String },

    /// A weights file does not describe the expected architecture.
    #[error("incompatible architecture: {0}")]
    IncompatibleArchitecture(String),

    /// Sampling from a replay buffer with no entries.
    #[error("empty replay buffer")]
    EmptyBuffer,

    /// A replay index that is not in the live ring (evicted or never issued).
    #[error("bad replay index {index}: live range is [{lo}, {hi})")]
    BadIndex { index: u64, lo: u64, hi: u64 },

    /// Action selection over a mask with no valid entries.
    #[error("no valid action: every entry is masked out")]
    NoValidAction,

    /// An action references a pixel that is invalid in its heightmap.
    #[error("invalid target pixel ({u}, {v})")]
    InvalidTarget { u: usize, v: usize },

    /// Evaluation started from a scene with no objects.
    #[error("empty scene: nothing to pick")]
    EmptyScene,

    /// Malformed text or binary input (catalogs, configs, containers).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
