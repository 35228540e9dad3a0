//! Quaternion-valued Capon beamforming for crossed-dipole linear arrays.
//!
//! Each sensor's two dipole outputs are packed into one quaternion, a SOI
//! made of two complex sub-signals is treated as a single quaternion signal,
//! and the full beamformer keeps both of them with one linear constraint set.
//! A reduced beamformer that handles each sub-signal separately is included
//! for comparison.

pub mod array_model;
pub mod beamform;
pub mod error;
pub mod harness;
pub mod qlinalg;
pub mod quaternion;
pub mod selftest;

pub use error::{Error, Result};
pub use quaternion::{ComplexPair, Quaternion};
