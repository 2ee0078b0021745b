//! Every commutative monoid of order up to 4: either a projective non-free
//! `eS`, or a check that all projective acts up to the given size are free.

use actlab::enumerate::enumerate_monoids;
use actlab::verify::{verify_projective_free, Witness};

fn main() {
    let max_act_size: usize = std::env::args().nth(1).map_or(4, |a| a.parse().expect("a number"));
    for n in 1..=4 {
        for s in enumerate_monoids(n).iter().filter(|s| s.is_commutative()) {
            let v = verify_projective_free(s, max_act_size);
            let what = match &v.witnesses[..] {
                [Witness::ProjectiveNonFree { idempotent, act }] => {
                    format!("E(S) = {}, {idempotent}S has {} points, projective and not free", s.idempotents(), act.size())
                }
                [Witness::ProjectiveActs { checked, projective }] => {
                    format!("E(S) = {{1}}, {projective} of {checked} acts projective, all free")
                }
                _ => String::new(),
            };
            println!("{:<6} {:?}  {what}", s.name().unwrap_or("S"), v.conclusion);
        }
    }
}
