//! Structural report for a few catalog monoids, or for a monoid file given
//! as the first argument.

use actlab::cli::analyze;
use actlab::io::load_monoid;
use actlab::monoid::catalog::{full_transformation, idempotent_pair, mod_mul};

fn main() {
    let monoids = match std::env::args().nth(1) {
        Some(path) => vec![load_monoid(path.as_ref()).expect("readable monoid file")],
        None => vec![
            idempotent_pair().with_name("{1, e}"),
            mod_mul(6).with_name("Z6 under multiplication"),
            full_transformation(2).with_name("T2"),
        ],
    };
    for s in &monoids {
        let report = analyze(s, None).monoid;
        println!("{}", s.name().unwrap_or("S"));
        println!("  𝔐 = {}  two-sided: {}", report.maximal_right_ideal, report.maximal_ideal_two_sided);
        println!("  E(S) = {}  commutative: {}", report.idempotents, report.commutative);
        println!("  right ideals: {}", report.right_ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
        println!("  generators: {:?}", report.generating_set);
    }
}
