//! Collective evaluation of abstract argumentation frameworks.
//!
//! The crate covers labelings and their semantics, the skeptical, credulous
//! and super-credulous aggregation operators, the eight disagreement
//! measures and the preferences they induce, and brute-force checkers for
//! Pareto optimality and strategy-proofness.

pub mod aggregation;
pub mod analysis;
pub mod bitset;
pub mod config;
pub mod error;
pub mod framework;
pub mod io;
pub mod issues;
pub mod lattice;
pub mod metrics;
pub mod preferences;

pub use aggregation::{aggregate, aggregate_gated, apply_operator, OperatorKind, Profile};
pub use bitset::BitSet;
pub use error::{Error, Result};
pub use framework::{ArgumentationFramework, Label, Labeling, LabelingSpace, SemanticsKind};
pub use issues::IssuePartition;
pub use metrics::{DisagreementSet, IuoSets, MeasureKind};
pub use preferences::{AgentPreference, Measures, PreferenceClass, PreferenceProfile, Relation};
