//! Counts of monoids by order and of acts by size over each small monoid.

use std::sync::Arc;
use std::time::Instant;

use actlab::enumerate::{act_counts, enumerate_monoids};

fn main() {
    let max_order: usize = std::env::args().nth(1).map_or(5, |a| a.parse().expect("a number"));
    for n in 1..=max_order {
        let start = Instant::now();
        let count = enumerate_monoids(n).len();
        println!("order {n}: {count} monoids ({:.2?})", start.elapsed());
    }
    for s in enumerate_monoids(3) {
        let s = Arc::new(s);
        println!("{} {:?}: acts of size 1..=4 {:?}", s.name().unwrap_or("S"), s.rows(), act_counts(&s, 4));
    }
}
