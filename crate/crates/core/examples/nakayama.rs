//! The Nakayama-type verifiers on two acts over `{1, e}`: the two-point act
//! with a zero, and the trivial action.

use std::sync::Arc;

use actlab::monoid::catalog::idempotent_pair;
use actlab::verify::{verify_act_statement, StatementId};
use actlab::FiniteAct;

fn main() {
    let s = Arc::new(idempotent_pair());
    let theta_a = FiniteAct::from_rows(s.clone(), &[vec![0, 0], vec![1, 0]])
        .expect("a·e = θ is an act")
        .with_name("{θ, a}");
    let trivial = FiniteAct::trivial(s, 2);
    let statements = [
        StatementId::MaximalSubact,
        StatementId::NakayamaGeneral,
        StatementId::NakayamaFixer,
        StatementId::FixerCriterion,
        StatementId::NakayamaFaithful,
        StatementId::NakayamaUnion,
        StatementId::IdempotentIdeal,
    ];
    for act in [&theta_a, &trivial] {
        println!("{}", act.name().unwrap_or("A"));
        for statement in statements {
            let v = verify_act_statement(statement, act);
            let why = v.hypotheses.failed.as_deref().unwrap_or("");
            println!("  {:<18} {:?} {:?} {}", statement.as_str(), v.hypotheses.status, v.conclusion, why);
        }
    }
}
