//! afflab-core: a desk-scale testbed for transferring pixel-wise vision
//! models into manipulation affordance models.
//!
//! The crate is organized around a deterministic 2.5D bin simulator
//! ([`binsim`]), orthographic RGB-D heightmaps ([`heightmap`]), classical
//! vision label generation ([`labels`]), a small fully-convolutional
//! network with exact reverse-mode gradients ([`convnet`]), rotation-based
//! grasp affordance inference ([`affordance`]), prioritized experience
//! replay ([`replay`]), and the orchestration layer that ties pre-training,
//! weight transfer, interactive fine-tuning, and evaluation together
//! ([`pipeline`]).
//!
//! Everything is seeded and deterministic: identical seeds and configs
//! produce bitwise-identical datasets, weights, curves, and reports.

pub mod affordance;
pub mod binsim;
pub mod convnet;
pub mod error;
pub mod heightmap;
pub mod labels;
pub mod pipeline;
pub mod replay;
pub mod rotate;
pub mod util;
pub mod viz;

mod geom;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
