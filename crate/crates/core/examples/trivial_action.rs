//! The trivial action satisfies `AI = A` for every proper ideal without being
//! `{θ}`; the faithful Nakayama statement does not apply because the act has
//! no unique zero and is not quasi-strongly faithful.

use actlab::enumerate::enumerate_monoids;
use actlab::verify::verify_nakayama_faithful;
use actlab::FiniteAct;
use std::sync::Arc;

fn main() {
    for s in enumerate_monoids(3).into_iter().map(Arc::new) {
        if s.maximal_right_ideal().is_empty() {
            continue;
        }
        let a = FiniteAct::trivial(s.clone(), 2);
        let absorbing = s
            .enumerate_right_ideals(true)
            .into_iter()
            .all(|i| a.ideal_product(i).expect("right ideal") == a.carrier());
        let v = verify_nakayama_faithful(&a);
        println!(
            "{}: AI = A for all proper I: {absorbing}; hypotheses {:?} ({}); conclusion {:?}",
            s.name().unwrap_or("S"),
            v.hypotheses.status,
            v.hypotheses.failed.as_deref().unwrap_or(""),
            v.conclusion
        );
    }
}
