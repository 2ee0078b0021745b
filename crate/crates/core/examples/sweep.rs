//! The default sweep (orders and act sizes up to 4) as a table.

use actlab::enumerate::{run_sweep, SweepConfig};

fn main() {
    let report = run_sweep(&SweepConfig::default()).expect("unbounded sweep");
    println!("monoids {:?}, acts {:?}, {} ms", report.monoids, report.acts, report.wall_time_ms.unwrap_or(0));
    for (s, t) in &report.tallies {
        println!("{:<20} pass {:>5}  fail {:>2}  vacuous {:>5}  n/a {:>4}", s.as_str(), t.pass, t.fail, t.vacuous, t.not_applicable);
    }
    for c in &report.counterexamples {
        println!("counterexample to {}: {}", c.statement, c.counterexample.detail);
    }
}
