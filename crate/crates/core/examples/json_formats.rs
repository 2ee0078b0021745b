//! Monoid and act files: write, read back, compare.

use std::sync::Arc;

use actlab::io::{parse_act, parse_monoid, ActFile};
use actlab::monoid::catalog::mod_mul;
use actlab::FiniteAct;

fn main() {
    let s = mod_mul(4).with_name("Z4");
    let text = serde_json::to_string_pretty(&s).expect("serializable");
    println!("{text}");
    assert_eq!(parse_monoid(&text).expect("valid"), s);

    let a = FiniteAct::regular(Arc::new(s));
    let text = serde_json::to_string(&ActFile::from(a.clone())).expect("serializable");
    println!("{text}");
    assert_eq!(parse_act(&text, None).expect("valid"), a);

    let broken = r#"{"order": 2, "identity": 0, "table": [[0, 1], [1, 2]]}"#;
    println!("{}", parse_monoid(broken).unwrap_err());
}
