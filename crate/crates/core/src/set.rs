//! Small bitsets over dense element indices.
//!
//! Both monoid subsets ([`ElementSet`]) and act subsets ([`ActSubset`]) are
//! stored as a `u64` mask, which caps carriers at [`MAX_CARRIER`] elements.
//! The sets do not carry their host; operations that need the carrier size
//! take the host structure as an argument.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest carrier a monoid or act may have.
pub const MAX_CARRIER: usize = 64;

macro_rules! bitset_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(u64);

        impl $name {
            pub const fn empty() -> Self {
                Self(0)
            }

            pub const fn from_bits(bits: u64) -> Self {
                Self(bits)
            }

            /// All indices `0..n`.
            pub fn full(n: usize) -> Self {
                debug_assert!(n <= MAX_CARRIER);
                if n == MAX_CARRIER {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                debug_assert!(i < MAX_CARRIER);
                Self(1u64 << i)
            }

            pub const fn bits(self) -> u64 {
                self.0
            }

            #[inline]
            pub fn contains(self, i: usize) -> bool {
                i < MAX_CARRIER && self.0 >> i & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, i: usize) {
                debug_assert!(i < MAX_CARRIER);
                self.0 |= 1u64 << i;
            }

            #[inline]
            pub fn remove(&mut self, i: usize) {
                debug_assert!(i < MAX_CARRIER);
                self.0 &= !(1u64 << i);
            }

            pub const fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub const fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub const fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub const fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub const fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            pub const fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub const fn is_proper_subset(self, other: Self) -> bool {
                self.is_subset(other) && self.0 != other.0
            }

            /// Smallest member, if any.
            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            /// Members in ascending order.
            pub fn iter(self) -> impl Iterator<Item = usize> + Clone {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        return None;
                    }
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i)
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut set = Self::empty();
                for i in iter {
                    set.insert(i);
                }
                set
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (k, i) in self.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}")
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.iter())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let members = Vec::<usize>::deserialize(deserializer)?;
                if let Some(&bad) = members.iter().find(|&&i| i >= MAX_CARRIER) {
                    return Err(serde::de::Error::custom(format!(
                        "member {bad} exceeds the {MAX_CARRIER}-element carrier limit"
                    )));
                }
                Ok(members.into_iter().collect())
            }
        }
    };
}

bitset_type! {
    /// A subset of the elements of a finite monoid: ideals, idempotent sets,
    /// generating sets.
    ElementSet
}

bitset_type! {
    /// A subset of the elements of a finite act: subacts, `AI` products,
    /// generating sets.
    ActSubset
}

/// Closes `seeds` under pairwise union and returns every set reachable,
/// sorted by cardinality and then by mask.
///
/// Subacts of an act (and right ideals of a monoid) are exactly the nonempty
/// unions of cyclic ones, so feeding the cyclic sets in yields the full
/// lattice without scanning all `2^n` subsets.
pub(crate) fn union_closure(seeds: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut seen = std::collections::HashSet::new();
    let mut seeds: Vec<u64> = seeds.into_iter().filter(|&s| s != 0).collect();
    seeds.sort_unstable();
    seeds.dedup();
    let mut frontier = Vec::new();
    for &s in &seeds {
        if seen.insert(s) {
            frontier.push(s);
        }
    }
    while let Some(x) = frontier.pop() {
        for &s in &seeds {
            let u = x | s;
            if seen.insert(u) {
                frontier.push(u);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable_by_key(|&b| (b.count_ones(), b));
    out
}

/// Sort key used wherever a list of subsets must come out in a fixed order.
pub(crate) fn lattice_order(bits: u64) -> (u32, u64) {
    (bits.count_ones(), bits)
}
