use serde::{Deserialize, Serialize};

use super::FiniteMonoid;
use crate::error::AlgebraError;
use crate::set::ElementSet;

/// The Rees quotient `S/I` together with the map `s -> [s]`.
///
/// Classes are numbered by their smallest representative, so the zero class
/// takes the slot of the smallest member of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMonoid {
    pub monoid: FiniteMonoid,
    pub carrier_map: Vec<usize>,
    pub zero: usize,
}

impl QuotientMonoid {
    /// The unique representative of a nonzero class.
    pub fn representative(&self, class: usize) -> Option<usize> {
        if class == self.zero {
            return None;
        }
        self.carrier_map.iter().position(|&c| c == class)
    }

    /// Whether every class other than the zero has a two-sided inverse.
    pub fn nonzero_elements_invertible(&self) -> bool {
        let q = &self.monoid;
        q.elements().filter(|&c| c != self.zero).all(|c| {
            q.elements()
                .any(|d| q.mul(c, d) == q.identity() && q.mul(d, c) == q.identity())
        })
    }
}

/// Collapses the two-sided proper ideal `ideal` to a single zero.
pub fn rees_quotient_monoid(
    monoid: &FiniteMonoid,
    ideal: ElementSet,
) -> Result<QuotientMonoid, AlgebraError> {
    if !monoid.is_two_sided(ideal) {
        return Err(AlgebraError::NotTwoSided);
    }
    if ideal == monoid.carrier() {
        return Err(AlgebraError::NotProper);
    }
    let mut carrier_map = vec![usize::MAX; monoid.order()];
    let mut zero = None;
    let mut next = 0;
    for s in monoid.elements() {
        if ideal.contains(s) {
            let z = *zero.get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            carrier_map[s] = z;
        } else {
            carrier_map[s] = next;
            next += 1;
        }
    }
    let zero = zero.expect("ideal is nonempty");
    let mut reps = vec![0; next];
    for s in monoid.elements().rev() {
        reps[carrier_map[s]] = s;
    }
    let rows: Vec<Vec<usize>> = (0..next)
        .map(|c| {
            (0..next)
                .map(|d| {
                    if c == zero || d == zero {
                        zero
                    } else {
                        carrier_map[monoid.mul(reps[c], reps[d])]
                    }
                })
                .collect()
        })
        .collect();
    let name = format!("{}/I", monoid.name().unwrap_or("S"));
    let quotient = FiniteMonoid::from_rows(&rows, Some(carrier_map[monoid.identity()]))
        .expect("Rees quotient by a two-sided ideal is a monoid")
        .with_name(name);
    Ok(QuotientMonoid { monoid: quotient, carrier_map, zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;

    #[test]
    fn quotient_of_idempotent_pair() {
        let u = idempotent_pair();
        let q = rees_quotient_monoid(&u, ElementSet::singleton(IDEMPOTENT)).unwrap();
        assert_eq!(q.monoid.order(), 2);
        assert_eq!(q.zero, 1);
        assert_eq!(q.monoid.zero_element(), Some(q.zero));
        assert_eq!(q.monoid.identity(), 0);
    }

    #[test]
    fn quotient_of_z4_by_maximal_ideal() {
        let z4 = mod_mul(4);
        let m = z4.maximal_right_ideal();
        let q = rees_quotient_monoid(&z4, m).unwrap();
        assert_eq!(q.monoid.order(), 3);
        // classes {0,2} -> 0, {1} -> 1, {3} -> 2
        assert_eq!(q.carrier_map, vec![0, 1, 0, 2]);
        assert_eq!(q.representative(2), Some(3));
        assert_eq!(q.representative(q.zero), None);
        // [3][3] = [9 mod 4] = [1]
        assert_eq!(q.monoid.mul(2, 2), 1);
        assert!(q.nonzero_elements_invertible());
    }

    #[test]
    fn quotient_by_maximal_ideal_is_zero_group() {
        for s in [mod_mul(6), mod_mul(8), full_transformation(2), chain_semilattice(3)] {
            let m = s.maximal_right_ideal();
            let q = rees_quotient_monoid(&s, m).unwrap();
            assert!(q.nonzero_elements_invertible());
            for a in s.elements() {
                for b in s.elements() {
                    assert_eq!(q.carrier_map[s.mul(a, b)], q.monoid.mul(q.carrier_map[a], q.carrier_map[b]));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_ideals() {
        // sT_3 for a rank-2 map s is a right ideal but not a left one
        let t3 = full_transformation(3);
        let s = transformation_index(&[0, 0, 1], 3);
        let right_only = t3.principal_right_ideal(s);
        assert!(t3.is_right_ideal(right_only) && !t3.is_left_ideal(right_only));
        assert_eq!(rees_quotient_monoid(&t3, right_only), Err(AlgebraError::NotTwoSided));
        assert_eq!(rees_quotient_monoid(&t3, t3.carrier()), Err(AlgebraError::NotProper));
    }
}
