//! Closed forms printed in the literature for classical types, kept verbatim
//! so computed values can be compared and divergences flagged. Nothing in the
//! crate computes with these.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::root::{Family, LieType};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e as usize
}

/// Printed exponent `N(ϖ_i, ϖ_j)` (1-based), where one is printed.
/// For `B_l` the spin row `2^{i+l+2} C(l−1, i−1)` is applied to `(l, l)` too.
pub fn tabulated_exponent(t: LieType, i: usize, j: usize) -> Option<BigInt> {
    let (i, j) = (i.min(j) as u64, i.max(j) as u64);
    let l = t.rank() as u64;
    if i == 0 || j > l {
        return None;
    }
    let cc = |a: u64, b: u64| binomial(l - 1, a - 1) * binomial(l - 1, b - 1);
    match t.family() {
        Family::A => Some(cc(i, j)),
        Family::B if j < l => Some(pow2(i + j) * cc(i, j)),
        Family::B => Some(pow2(i + l + 2) * binomial(l - 1, i - 1)),
        Family::C => Some(pow2(i + j) * cc(i, j)),
        Family::D if j <= l - 2 => Some(pow2(i + j) * cc(i, j)),
        Family::D if i <= l - 2 && j == l - 1 => Some(pow2(l - 3 + i) * BigInt::from(i) * binomial(l, i)),
        Family::D if i <= l - 2 => Some(pow2(l - 3 + i) * binomial(l - 1, i - 1)),
        Family::D if i == l - 1 && j == l => Some(pow2(2 * (l - 3)) * BigInt::from(l)),
        _ => None,
    }
}

/// Printed stabilizer order `|H_{ϖ_i}|` (1-based), where one is printed.
pub fn tabulated_stabilizer_order(t: LieType, i: usize) -> Option<BigInt> {
    let i = i as u64;
    let l = t.rank() as u64;
    if i == 0 || i > l {
        return None;
    }
    match t.family() {
        Family::A => Some(factorial(i) * factorial(l + 1 - i)),
        Family::B if i == l => Some(factorial(l)),
        Family::B | Family::C => Some(factorial(i) * factorial(l - i) * pow2(l - i)),
        Family::D if i <= l - 2 => Some(factorial(i) * factorial(l - i) * pow2(l - i - 1)),
        Family::D if i == l - 1 => Some(factorial(l - 1)),
        Family::D => Some(factorial(l)),
        _ => None,
    }
}

/// A printed value that a computation contradicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub lie_type: LieType,
    pub quantity: &'static str,
    pub indices: Vec<usize>,
    pub printed: BigInt,
    pub computed: BigInt,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn printed_rows() {
        let b2 = LieType::new(Family::B, 2).unwrap();
        assert_eq!(tabulated_exponent(b2, 1, 2), Some(BigInt::from(32)));
        assert_eq!(tabulated_exponent(b2, 1, 1), Some(BigInt::from(4)));
        let d4 = LieType::new(Family::D, 4).unwrap();
        assert_eq!(tabulated_exponent(d4, 1, 3), Some(BigInt::from(16)));
        assert_eq!(tabulated_exponent(d4, 1, 4), Some(BigInt::from(4)));
        assert_eq!(tabulated_exponent(d4, 3, 4), Some(BigInt::from(16)));
        assert_eq!(tabulated_exponent(d4, 3, 3), None);
        assert_eq!(tabulated_stabilizer_order(d4, 3), Some(BigInt::from(6)));
        assert_eq!(tabulated_stabilizer_order(d4, 1), Some(BigInt::from(24)));
        let g2 = LieType::new(Family::G, 2).unwrap();
        assert_eq!(tabulated_exponent(g2, 1, 1), None);
    }
}
