//! `A/A𝔐` as an act over `S` and over `S/𝔐`, and which subsets of `A`
//! generate it.

use std::sync::Arc;

use actlab::act::induced_quotient_act;
use actlab::monoid::catalog::mod_mul;
use actlab::{ActSubset, FiniteAct};

fn main() {
    let s = Arc::new(mod_mul(9));
    let a = FiniteAct::regular(s.clone());
    let induced = induced_quotient_act(&a, s.maximal_right_ideal()).expect("𝔐 is two-sided");
    println!("S/𝔐 has {} elements, A/A𝔐 has {} classes", induced.quotient.monoid.order(), induced.act.size());
    println!("π = {:?}", induced.projection.map);
    for bits in 1u64..1 << a.size() {
        let x = ActSubset::from_bits(bits);
        if x.len() == 1 && a.is_generating(x) {
            let image: ActSubset = x.iter().map(|p| induced.projection.map[p]).collect();
            println!("{x} generates A; π{x} = {image} generates over S/𝔐: {}", induced.act.is_generating(image));
        }
    }
}
