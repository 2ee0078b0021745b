mod common;

use std::sync::Arc;

use actlab::act::act_isomorphic;
use actlab::enumerate::{enumerate_acts, enumerate_acts_naive, enumerate_monoids, enumerate_monoids_naive};
use actlab::monoid::monoid_isomorphic;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn monoid_iso_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=4 {
        let monoids = enumerate_monoids(n);
        let mut pool = monoids.clone();
        for m in &monoids {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            pool.push(relabel_monoid(m, &p));
        }
        for l in &pool {
            for r in &pool {
                let fast = monoid_isomorphic(l, r);
                assert_eq!(fast.is_some(), brute_monoid_iso(l, r));
                if let Some(map) = fast {
                    for s in l.elements() {
                        for t in l.elements() {
                            assert_eq!(map[l.mul(s, t)], r.mul(map[s], map[t]));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn act_iso_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in monoids_up_to(3) {
        for m in 1..=3 {
            let acts = enumerate_acts(&s, m);
            let mut pool = acts.clone();
            for a in &acts {
                let mut p: Vec<usize> = (0..m).collect();
                p.shuffle(&mut rng);
                pool.push(relabel_act(a, &p));
            }
            for l in &pool {
                for r in &pool {
                    let fast = act_isomorphic(l, r);
                    assert_eq!(fast.is_some(), brute_act_iso(l, r));
                    if let Some(w) = fast {
                        assert!(w.is_equivariant(l, r) && w.is_bijective(r));
                    }
                }
            }
        }
    }
}

#[test]
fn monoid_strategies_agree() {
    for n in 1..=3 {
        let smart = enumerate_monoids(n);
        let naive = enumerate_monoids_naive(n);
        assert_eq!(smart.len(), naive.len());
        for (i, a) in smart.iter().enumerate() {
            assert!(naive.iter().any(|b| brute_monoid_iso(a, b)));
            for b in &smart[i + 1..] {
                assert!(!brute_monoid_iso(a, b));
            }
        }
    }
}

#[test]
fn act_strategies_agree() {
    for s in monoids_up_to(3) {
        for m in 1..=3 {
            let smart = enumerate_acts(&s, m);
            let naive = enumerate_acts_naive(&s, m);
            assert_eq!(smart.len(), naive.len(), "{:?}, m = {m}", s.name());
            for (i, a) in smart.iter().enumerate() {
                assert!(naive.iter().any(|b| brute_act_iso(a, b)));
                for b in &smart[i + 1..] {
                    assert!(!brute_act_iso(a, b));
                }
            }
        }
    }
}

#[test]
fn enumerated_tables_validate() {
    for s in monoids_up_to(4) {
        let rebuilt = actlab::FiniteMonoid::from_rows(&s.rows(), Some(s.identity())).unwrap();
        assert!(rebuilt.same_structure(&s));
        for act in enumerate_acts(&Arc::clone(&s), 2) {
            assert!(actlab::FiniteAct::from_rows(s.clone(), &act.rows()).is_ok());
        }
    }
}
