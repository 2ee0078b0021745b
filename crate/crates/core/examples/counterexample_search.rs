//! Looks for a failing instance of each statement in enumeration order.

use actlab::enumerate::{search_counterexample, Bounds};
use actlab::StatementId;

fn main() {
    let bounds = Bounds { max_monoid_order: 3, max_act_size: 4 };
    for statement in StatementId::ALL {
        match search_counterexample(statement, bounds) {
            Some(c) => println!("{statement}: {}", serde_json::to_string(&c).expect("serializable")),
            None => println!("{statement}: none up to |S| = 3, |A| = 4"),
        }
    }
}
