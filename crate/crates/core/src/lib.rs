//! Decide which algebraic structure a finite labeled graph is a Cayley graph
//! of, and synthesize the witnessing operation table.

pub mod algebra;
pub mod build;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod graph;
pub mod props;
pub mod synth;

pub use algebra::{AxiomReport, ClosureMode, GeneratorSet, MagmaTable};
pub use build::Labeling;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Token, Word};
pub use synth::{Injection, InjectionSearch, SemigroupVariant};
pub use classify::{ClassId, ClassVerdict, ClassificationReport, Witness};
