//! Exhaustive generation of small monoids and acts, and sweeps of the
//! verifiers over them.

mod acts;
mod canon;
mod monoids;
mod sweep;

pub use acts::{act_counts, enumerate_acts, enumerate_acts_naive};
pub use monoids::{enumerate_monoids, enumerate_monoids_naive};
pub use sweep::{
    check_monoid, run_sweep, search_counterexample, Bounds, SweepConfig, SweepConfigError,
    SweepCounterexample, SweepError, SweepReport, Tally,
};
