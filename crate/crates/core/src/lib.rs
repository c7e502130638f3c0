//! Long-range distance estimation from reference objects.
//!
//! A target object beyond the short-range sensing cutoff is localized by
//! relating it to reference objects whose distances are known. Pairwise
//! target-reference embeddings (appearance, union context, and geometry
//! including the reference distance) are fused with an attention module
//! and decoded into an absolute distance plus per-pair relative distances.
//!
//! The crate is self-contained: it ships its own reverse-mode autodiff
//! ([`diff`]), a deterministic synthetic scene generator ([`sim`]),
//! dataset/prediction persistence ([`data`]), the embedding and model
//! stacks ([`features`], [`model`]), the training loop ([`train`]) and the
//! evaluation/ablation harnesses ([`eval`]).

pub mod data;
pub mod diff;
pub mod eval;
pub mod features;
pub mod model;
pub mod sim;
pub mod train;

pub use data::{Dataset, PredictionRecord, SplitTag};
pub use diff::{Graph, MlpSpec, NodeId, ParamId, ParamSet, Tensor};
pub use eval::MetricsReport;
pub use model::{DistancePrediction, PredictionMode, R4dModel};
pub use sim::{BBox, CameraModel, Regime, RenderedObject, Role, Scene, SceneSpec};
pub use train::TrainConfig;
