//! Independent ground truth for testing the decision path.
//!
//! Nothing here calls into the simplex solver: feasibility is decided by
//! Fourier–Motzkin elimination, instances come from a seeded splitmix64
//! stream, and the sweep harness compares the two routes.

mod fm;
mod generate;
mod sweep;

pub use fm::{fm_feasible, fm_feasible_with, fm_witness, FmLimits};
pub use generate::{gen_instance, gen_planted, GeneratorConfig, Plant, SplitMix64};
pub use sweep::{
    check_instance, exhaustive_instance_count, exhaustive_small_check, random_agreement_check,
    SweepReport, MAX_SWEEP_INSTANCES,
};
