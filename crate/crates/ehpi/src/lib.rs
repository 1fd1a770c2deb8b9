//! Pose-stream action recognition at desk scale.
//!
//! The pipeline consumes streams of 2D human skeletons (15 joints with
//! confidence scores per person per frame), tracks people across frames with
//! a joint-distance similarity score, encodes each tracked person's recent
//! motion into a 32x15x3 Encoded Human Pose Image (EHPI), and classifies the
//! action with a small convolutional network trained from scratch. A
//! parametric motion generator produces labeled synthetic training data
//! (idle / walk / wave) so the whole system is trainable without any camera
//! or external model.
//!
//! Modules follow the pipeline stages:
//!
//! - [`pose`]: skeleton, joint, and bounding-box types shared everywhere
//! - [`track`]: per-frame association of skeletons into persistent tracks
//! - [`flow`]: pyramidal Lucas-Kanade point tracker for joint propagation
//! - [`encode`]: EHPI construction, normalization, and augmentation
//! - [`nn`]: tensors, layers, backprop, SGD, and the six-conv classifier
//! - [`synth`]: procedural 3D motion generator with camera projection and
//!   detection-noise injection
//! - [`io`]: on-disk formats, dataset manifests, and evaluation
//! - [`cli`]: the `ehpi` command-line front end
//!
//! See the crate's `examples/` directory for runnable walkthroughs of each
//! capability.

pub mod cli;
pub mod encode;
pub mod flow;
pub mod io;
pub mod nn;
pub mod pose;
pub mod synth;
pub mod track;

pub use encode::{AugmentConfig, Ehpi, EhpiBuffer};
pub use pose::{BBox, JointId, Keypoint2D, Skeleton, TrackedHuman};
pub use track::{Tracker, TrackerConfig};
