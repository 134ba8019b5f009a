//! Root data of the simple types: Cartan matrix, simple reflections,
//! fundamental weights and the invariant form on the weight space.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, lcm_denominators, parse_rational, rat, to_i64, QMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            "E" | "e" => Family::E,
            "F" | "f" => Family::F,
            "G" | "g" => Family::G,
            other => return Err(Error::Parse(alloc::format!("unknown Lie family {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType { family: family.letter(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// |W| from the classical product formulas.
    pub fn weyl_order(&self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Dynkin edges (0-based, Bourbaki numbering).
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Squared lengths of the simple roots, long roots normalized to 2.
    fn root_lengths(&self) -> Vec<Rational> {
        let n = self.rank;
        (0..n)
            .map(|i| match self.family {
                Family::A | Family::D | Family::E => int(2),
                Family::B => if i + 1 == n { int(1) } else { int(2) },
                Family::C => if i + 1 == n { int(2) } else { int(1) },
                Family::F => if i < 2 { int(2) } else { int(1) },
                Family::G => if i == 0 { rat(2, 3) } else { int(2) },
            })
            .collect()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A weight in fundamental-weight coordinates (row vector).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    /// The `i`-th fundamental weight, 1-based.
    pub fn fundamental(i: usize, rank: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, len: rank });
        }
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Ok(Self::from_ints(&c))
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![Rational::zero(); rank] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integral weights are exactly the elements of the weight lattice.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn int_coords(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NonIntegralWeight);
        }
        self.coords.iter().map(|c| to_i64(c.numer())).collect()
    }

    /// `(numerators, denominator)` with `self = numerators / denominator`.
    pub fn to_scaled(&self) -> Result<(Vec<i64>, i64)> {
        let den = lcm_denominators(&self.coords);
        let nums = self
            .coords
            .iter()
            .map(|c| to_i64(&(c.numer() * (&den / c.denom()))))
            .collect::<Result<Vec<_>>>()?;
        Ok((nums, to_i64(&den)?))
    }

    pub fn from_scaled(nums: &[i64], den: i64) -> Self {
        Weight { coords: nums.iter().map(|&n| rat(n, den)).collect() }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Weight { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn add(&self, other: &Weight) -> Self {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Weight) -> Self {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    /// Right action of an integer matrix: `self * m`.
    pub fn act(&self, m: &[i64]) -> Self {
        let n = self.coords.len();
        assert_eq!(m.len(), n * n);
        let coords = (0..n)
            .map(|c| (0..n).map(|r| &self.coords[r] * BigInt::from(m[r * n + c])).sum())
            .collect();
        Weight { coords }
    }
}

impl fmt::Display for Weight {
    /// Comma-separated; integers bare, other rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(String::from("empty weight")));
        }
        Ok(Weight { coords })
    }
}

/// Root datum of one simple type.
#[derive(Debug, Clone)]
pub struct RootDatum {
    lie_type: LieType,
    /// `cartan[i][j] = 2 (α_i, α_j) / (α_i, α_i)`; column `j` holds the
    /// fundamental-weight coordinates of `α_j`.
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    gram: QMatrix,
    gram_num: Vec<i64>,
    gram_den: i64,
    simple_roots: Vec<Vec<i64>>,
}

/// Builds the root datum for `t`, with long roots of squared length 2.
pub fn build_root_datum(t: LieType) -> RootDatum {
    RootDatum::new(t)
}

impl RootDatum {
    pub fn new(t: LieType) -> Self {
        let n = t.rank;
        let lengths = t.root_lengths();
        // (α_i, α_j) on the simple roots; every bond of every type pairs to
        // minus half the larger squared length.
        let mut b = QMatrix::zeros(n, n);
        for i in 0..n {
            b.set(i, i, lengths[i].clone());
        }
        for (i, j) in t.edges() {
            let v = -(lengths[i].clone().max(lengths[j].clone())) / int(2);
            b.set(i, j, v.clone());
            b.set(j, i, v);
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = int(2) * b.get(i, j) / b.get(i, i);
                        debug_assert!(c.is_integer());
                        c.to_integer().to_i64().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        // Fundamental weights are dual to the coroots, so the Gram matrix of
        // the ϖ_i is the inverse of the coroot Gram matrix.
        let coroot_gram = QMatrix::from_fn(n, n, |i, j| {
            int(4) * b.get(i, j) / (b.get(i, i) * b.get(j, j))
        });
        let gram = coroot_gram.inverse().expect("coroot Gram matrix is nondegenerate");
        let den = lcm_denominators(gram.entries());
        let gram_num = gram
            .entries()
            .iter()
            .map(|q| (q.numer() * (&den / q.denom())).to_i64().expect("small Gram entry"))
            .collect();
        let simple_roots = (0..n).map(|j| (0..n).map(|k| cartan[k][j]).collect()).collect();
        RootDatum {
            lie_type: t,
            cartan,
            symmetrizer: lengths.into_iter().map(|l| l / int(2)).collect(),
            gram,
            gram_num,
            gram_den: den.to_i64().expect("small denominator"),
            simple_roots,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i = (α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// Gram matrix of the fundamental weights.
    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn weyl_order(&self) -> u128 {
        self.lie_type.weyl_order()
    }

    /// Simple root `α_i` (1-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::from_ints(&self.simple_roots[i - 1]))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, len: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.rank() {
            Err(Error::DimensionMismatch { expected: self.rank(), found: w.dim() })
        } else {
            Ok(())
        }
    }

    /// `λᵀ · gram · μ`.
    pub fn pairing(&self, lambda: &Weight, mu: &Weight) -> Result<Rational> {
        self.check_weight(lambda)?;
        self.check_weight(mu)?;
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if lambda.coords[i].is_zero() {
                continue;
            }
            let row: Rational = (0..n).map(|j| self.gram.get(i, j) * &mu.coords[j]).sum();
            acc += &lambda.coords[i] * row;
        }
        Ok(acc)
    }

    /// Pairing of integer vectors, as a numerator over `gram_den()`.
    pub(crate) fn pairing_num(&self, a: &[i64], b: &[i64]) -> i128 {
        let n = self.rank();
        let mut acc: i128 = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..n {
                row += self.gram_num[i * n + j] as i128 * b[j] as i128;
            }
            acc += a[i] as i128 * row;
        }
        acc
    }

    pub(crate) fn gram_den(&self) -> i64 {
        self.gram_den
    }

    /// `gram · b` for an integer vector, numerators over `gram_den()`.
    pub(crate) fn gram_times(&self, b: &[i64]) -> Vec<i128> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.gram_num[i * n + j] as i128 * b[j] as i128).sum())
            .collect()
    }

    /// Matrix of `s_i` (1-based) acting on the right of weight row vectors.
    pub fn simple_reflection(&self, i: usize) -> Result<Vec<Vec<i64>>> {
        self.check_index(i)?;
        let n = self.rank();
        let alpha = &self.simple_roots[i - 1];
        Ok((0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let id = i64::from(r == c);
                        if r == i - 1 { id - alpha[c] } else { id }
                    })
                    .collect()
            })
            .collect())
    }

    /// Flattened `n×n` matrix of `s_i`, 0-based.
    pub(crate) fn reflection_flat(&self, i: usize) -> Vec<i64> {
        self.simple_reflection(i + 1).expect("valid index").into_iter().flatten().collect()
    }

    /// `v ← v · s_i` for a 0-based generator index.
    pub(crate) fn reflect(&self, v: &mut [i64], i: usize) -> Result<()> {
        let c = v[i];
        if c != 0 {
            for (x, a) in v.iter_mut().zip(&self.simple_roots[i]) {
                *x = x.checked_sub(c.checked_mul(*a).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    /// Pairwise orthogonal integral weights `v_1 … v_n`: Gram–Schmidt on the
    /// fundamental weights in order, each result multiplied by the least
    /// common denominator of its coordinates.
    pub fn orthogonal_weight_basis(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut basis: Vec<Weight> = Vec::with_capacity(n);
        let mut norms: Vec<Rational> = Vec::with_capacity(n);
        for k in 1..=n {
            let w = Weight::fundamental(k, n).expect("in range");
            let mut u = w.clone();
            for (v, nv) in basis.iter().zip(&norms) {
                let c = self.pairing(&w, v).expect("same rank") / nv;
                if !c.is_zero() {
                    u = u.sub(&v.scaled(&c));
                }
            }
            let den = lcm_denominators(u.coords());
            let u = u.scaled(&Rational::from_integer(den));
            norms.push(self.pairing(&u, &u).expect("same rank"));
            basis.push(u);
        }
        basis
    }

    /// Absolute values of the form on the fundamental weights, (ϖ_i, ϖ_i).
    pub fn fundamental_norm(&self, i: usize) -> Result<Rational> {
        self.check_index(i)?;
        Ok(self.gram.get(i - 1, i - 1).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, r: usize) -> RootDatum {
        RootDatum::new(LieType::new(f, r).unwrap())
    }

    pub(crate) fn all_small_types() -> Vec<LieType> {
        let mut v = Vec::new();
        for r in 1..=7 {
            v.push(LieType::new(Family::A, r).unwrap());
        }
        for r in 2..=6 {
            v.push(LieType::new(Family::B, r).unwrap());
            v.push(LieType::new(Family::C, r).unwrap());
        }
        for r in 3..=7 {
            v.push(LieType::new(Family::D, r).unwrap());
        }
        for r in 6..=8 {
            v.push(LieType::new(Family::E, r).unwrap());
        }
        v.push(LieType::new(Family::F, 4).unwrap());
        v.push(LieType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn rank_bounds() {
        assert!(LieType::new(Family::A, 0).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::C, 1).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 3).is_err());
        assert!(LieType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn gram_examples() {
        let a2 = datum(Family::A, 2);
        assert_eq!(
            a2.gram(),
            &QMatrix::from_rows(vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]])
        );
        assert_eq!(datum(Family::A, 1).gram(), &QMatrix::from_rows(vec![vec![rat(1, 2)]]));
        let b2 = datum(Family::B, 2);
        let w2 = Weight::fundamental(2, 2).unwrap();
        assert_eq!(b2.pairing(&w2, &w2).unwrap(), rat(1, 2));
    }

    #[test]
    fn fundamental_norms_match_closed_forms() {
        for n in 1..=7usize {
            let d = datum(Family::A, n);
            for k in 1..=n {
                let expect = rat((k * (n + 1 - k)) as i64, (n + 1) as i64);
                assert_eq!(d.fundamental_norm(k).unwrap(), expect, "A{n} ϖ{k}");
            }
        }
        for l in 2..=6usize {
            let d = datum(Family::B, l);
            for i in 1..l {
                assert_eq!(d.fundamental_norm(i).unwrap(), int(i as i64), "B{l} ϖ{i}");
            }
            assert_eq!(d.fundamental_norm(l).unwrap(), rat(l as i64, 4));
        }
    }

    #[test]
    fn zero_pairing() {
        let d = datum(Family::C, 3);
        let z = Weight::zero(3);
        let mu = Weight::from_ints(&[1, -2, 5]);
        assert!(d.pairing(&z, &mu).unwrap().is_zero());
        assert_eq!(
            d.pairing(&Weight::from_ints(&[1, 0]), &mu),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn gram_is_symmetric_positive_and_invariant() {
        for t in all_small_types() {
            let d = RootDatum::new(t);
            let g = d.gram();
            let n = d.rank();
            assert_eq!(g, &g.transpose(), "{t}");
            // Sylvester's criterion on leading minors.
            for k in 1..=n {
                let minor = QMatrix::from_fn(k, k, |r, c| g.get(r, c).clone());
                assert!(minor.determinant() > Rational::zero(), "{t} minor {k}");
            }
            for i in 1..=n {
                let s = d.simple_reflection(i).unwrap();
                let sm = QMatrix::from_fn(n, n, |r, c| int(s[r][c]));
                assert_eq!(&sm.mul(g).mul(&sm.transpose()), g, "{t} s{i}");
                assert_eq!(sm.mul(&sm), QMatrix::identity(n), "{t} s{i}^2");
            }
            let cartan = d.cartan();
            for i in 0..n {
                assert_eq!(cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(cartan[i][j] <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_weights_dual_to_roots() {
        for t in all_small_types() {
            let d = RootDatum::new(t);
            let n = d.rank();
            for i in 1..=n {
                let w = Weight::fundamental(i, n).unwrap();
                for j in 1..=n {
                    let a = d.simple_root(j).unwrap();
                    let expect = if i == j { d.symmetrizer()[j - 1].clone() } else { Rational::zero() };
                    assert_eq!(d.pairing(&w, &a).unwrap(), expect, "{t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn simple_reflection_examples() {
        assert_eq!(datum(Family::A, 1).simple_reflection(1).unwrap(), vec![vec![-1]]);
        let a2 = datum(Family::A, 2);
        let s1: Vec<i64> = a2.simple_reflection(1).unwrap().into_iter().flatten().collect();
        assert_eq!(Weight::from_ints(&[1, 0]).act(&s1), Weight::from_ints(&[-1, 1]));
        assert_eq!(Weight::from_ints(&[0, 1]).act(&s1), Weight::from_ints(&[0, 1]));
        assert!(matches!(a2.simple_reflection(3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(a2.simple_reflection(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn orthogonal_basis() {
        let a1 = datum(Family::A, 1).orthogonal_weight_basis();
        assert_eq!(a1, vec![Weight::from_ints(&[1])]);
        let a2 = datum(Family::A, 2).orthogonal_weight_basis();
        assert_eq!(a2, vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[-1, 2])]);
        for t in all_small_types() {
            let d = RootDatum::new(t);
            let b = d.orthogonal_weight_basis();
            let n = d.rank();
            for i in 0..n {
                assert!(b[i].is_integral());
                for j in 0..i {
                    assert!(d.pairing(&b[i], &b[j]).unwrap().is_zero(), "{t}");
                }
            }
            let m = QMatrix::from_fn(n, n, |r, c| b[r].coords()[c].clone());
            assert!(!m.determinant().is_zero());
        }
    }

    #[test]
    fn weight_parsing_round_trip() {
        let w: Weight = "1, -2, 3/4".parse().unwrap();
        assert_eq!(w.coords(), &[int(1), int(-2), rat(3, 4)]);
        assert_eq!(alloc::format!("{w}"), "1,-2,3/4");
        assert!("1,,2".parse::<Weight>().is_err());
        let (nums, den) = w.to_scaled().unwrap();
        assert_eq!((nums, den), (vec![4, -8, 3], 4));
    }
}
