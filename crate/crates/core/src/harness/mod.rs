//! Configured experiments and their reports.

mod config;
mod experiments;
mod report;
mod sequence;

pub use config::{ExperimentConfig, ExperimentKind, TargetSpec, Tolerances};
pub use experiments::{
    exact_paintbox_law, frequency_stderr, run_boundary_convergence, run_experiment,
    run_xi_uniformity,
};
pub use report::{emit, Environment, ExperimentReport, Format, Provenance, Record};
pub use sequence::SequenceSpec;
