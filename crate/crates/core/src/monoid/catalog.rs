//! Small named monoids used by examples and tests.

use super::FiniteMonoid;

/// Index of the non-identity element in [`idempotent_pair`].
pub const IDEMPOTENT: usize = 1;

/// The one-element monoid.
pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::from_fn(1, |_, _| 0).unwrap().with_name("trivial")
}

/// `{1, e}` with `e^2 = e`; identity at 0, `e` at [`IDEMPOTENT`].
pub fn idempotent_pair() -> FiniteMonoid {
    FiniteMonoid::from_fn(2, |s, t| s.max(t)).unwrap().with_name("{1,e}")
}

/// Residues mod `n` under multiplication. The identity is the residue 1
/// (index 1 for `n >= 2`).
pub fn mod_mul(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    FiniteMonoid::from_fn(n, |s, t| s * t % n)
        .unwrap()
        .with_name(format!("(Z_{n},*)"))
}

/// Residues mod `n` under addition; identity 0.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    FiniteMonoid::from_fn(n, |s, t| (s + t) % n)
        .unwrap()
        .with_name(format!("C_{n}"))
}

/// The chain `0 > 1 > ... > n-1` under meet; 0 is the identity and `n-1`
/// the zero.
pub fn chain_semilattice(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    FiniteMonoid::from_fn(n, |s, t| s.max(t))
        .unwrap()
        .with_name(format!("chain_{n}"))
}

/// Index of the transformation with images `img` in [`full_transformation`].
pub fn transformation_index(img: &[usize], k: usize) -> usize {
    img.iter().rev().fold(0, |acc, &x| acc * k + x)
}

fn transformation_images(mut index: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let x = index % k;
            index /= k;
            x
        })
        .collect()
}

/// All maps `{0..k} -> {0..k}`, acting on the right: `x(st) = (xs)t`.
pub fn full_transformation(k: usize) -> FiniteMonoid {
    assert!(k >= 1);
    let n = k.pow(k as u32);
    let images: Vec<Vec<usize>> = (0..n).map(|i| transformation_images(i, k)).collect();
    FiniteMonoid::from_fn(n, |s, t| {
        let composed: Vec<usize> = (0..k).map(|x| images[t][images[s][x]]).collect();
        transformation_index(&composed, k)
    })
    .unwrap()
    .with_name(format!("T_{k}"))
}

/// `S` with a new zero adjoined at index `|S|`.
pub fn with_zero(base: &FiniteMonoid) -> FiniteMonoid {
    let n = base.order();
    let zero = n;
    let rows: Vec<Vec<usize>> = (0..=n)
        .map(|s| {
            (0..=n)
                .map(|t| if s == zero || t == zero { zero } else { base.mul(s, t) })
                .collect()
        })
        .collect();
    let name = format!("{}^0", base.name().unwrap_or("S"));
    FiniteMonoid::from_rows(&rows, Some(base.identity())).unwrap().with_name(name)
}

/// The direct product `S x T`, element `(s, t)` at index `s * |T| + t`.
pub fn product(left: &FiniteMonoid, right: &FiniteMonoid) -> FiniteMonoid {
    let m = right.order();
    let n = left.order() * m;
    let name = format!("{}x{}", left.name().unwrap_or("S"), right.name().unwrap_or("T"));
    FiniteMonoid::from_fn(n, |a, b| left.mul(a / m, b / m) * m + right.mul(a % m, b % m))
        .unwrap()
        .with_name(name)
}
