//! Descending chains `AI ⊇ AI² ⊇ …` for residue rings acting on themselves.

use std::sync::Arc;

use actlab::monoid::catalog::mod_mul;
use actlab::verify::krull_intersection;
use actlab::FiniteAct;

fn main() {
    for n in [4, 8, 12, 16] {
        let s = Arc::new(mod_mul(n));
        let a = FiniteAct::regular(s.clone());
        for ideal in s.enumerate_right_ideals(true) {
            let chain = krull_intersection(&a, ideal).expect("right ideal");
            let steps: Vec<String> = chain.chain.iter().map(|b| b.to_string()).collect();
            println!("Z{n}  I = {ideal}: {}  (stable after {})", steps.join(" ⊇ "), chain.stabilization_index);
        }
    }
}
