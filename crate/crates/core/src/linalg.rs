//! Exact rational scalars and small dense rational matrices.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_i128(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Always renders as `p/q`, including integers (`3/1`).
pub fn fmt_pq(q: &Rational) -> String {
    alloc::format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub(crate) fn to_i64(b: &BigInt) -> Result<i64> {
    b.to_i64().ok_or(Error::Overflow)
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn filled(rows: usize, cols: usize, value: Rational) -> Self {
        QMatrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|q| q.is_integer())
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.rows).map(|r| self.row(r).iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c)).sum()).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Common denominator and integer numerators, if every numerator fits in i64.
    fn scaled_i64(&self) -> Option<(BigInt, Vec<i64>)> {
        let den = lcm_denominators(&self.data);
        let mut out = Vec::with_capacity(self.data.len());
        for q in &self.data {
            let n = q.numer() * (&den / q.denom());
            out.push(n.to_i64()?);
        }
        Some((den, out))
    }

    /// Exact product. Entries are brought to a common denominator so the inner
    /// loop runs on machine integers whenever they fit.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let (n, m, p) = (self.rows, self.cols, other.cols);
        if let (Some((da, a)), Some((db, b))) = (self.scaled_i64(), other.scaled_i64()) {
            let den = da * db;
            let mut data = Vec::with_capacity(n * p);
            let mut ok = true;
            'outer: for r in 0..n {
                for c in 0..p {
                    let mut acc: i128 = 0;
                    for k in 0..m {
                        let t = a[r * m + k] as i128 * b[k * p + c] as i128;
                        match acc.checked_add(t) {
                            Some(v) => acc = v,
                            None => {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                    data.push(Rational::new(BigInt::from(acc), den.clone()));
                }
            }
            if ok {
                return QMatrix { rows: n, cols: p, data };
            }
        }
        Self::from_fn(n, p, |r, c| (0..m).map(|k| self.get(r, k) * other.get(k, c)).sum())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Row-echelon form by exact Gaussian elimination; returns (echelon, pivot columns).
    fn echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (e, piv) = aug.echelon();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| e.get(r, c + n).clone()))
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Rational::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let f = m.get(i, c) / &piv;
                    for j in c..n {
                        let v = m.get(i, j) - &f * m.get(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Returns `c` with `self == c * other`, if such a scalar exists.
    /// When `other` is zero, `self` must be zero too and `c = 0` is returned.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<Rational> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let Some(i) = other.data.iter().position(|x| !x.is_zero()) else {
            return self.is_zero().then(Rational::zero);
        };
        let c = &self.data[i] / &other.data[i];
        self.data.iter().zip(&other.data).all(|(a, b)| *a == &c * b).then_some(c)
    }

    /// `Some(c)` when every entry equals `c`.
    pub fn constant_value(&self) -> Option<Rational> {
        let first = self.data.first()?.clone();
        self.data.iter().all(|x| *x == first).then_some(first)
    }

    /// Conjugate-style relabelling: `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self::from_fn(row_perm.len(), col_perm.len(), |r, c| self.get(row_perm[r], col_perm[c]).clone())
    }

    pub fn max_abs_denominator(&self) -> BigInt {
        lcm_denominators(&self.data).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn product_fast_path_matches_generic() {
        let a = QMatrix::from_fn(3, 4, |r, c| rat(r as i64 - 2 * c as i64, (c + 1) as i64));
        let b = QMatrix::from_fn(4, 2, |r, c| rat((r * c) as i64 + 1, 3));
        let generic = QMatrix::from_fn(3, 2, |r, c| (0..4).map(|k| a.get(r, k) * b.get(k, c)).sum());
        assert_eq!(a.mul(&b), generic);
    }

    #[test]
    fn rank_inverse_determinant() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.determinant(), int(3));
        let inv = a.inverse().unwrap();
        assert_eq!(inv, QMatrix::from_rows(alloc::vec![
            alloc::vec![rat(2, 3), rat(1, 3)],
            alloc::vec![rat(1, 3), rat(2, 3)],
        ]));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn scalar_multiple_detection() {
        let a = m(&[&[1, -1], &[-1, 1]]);
        assert_eq!(a.scale(&rat(5, 2)).scalar_multiple_of(&a), Some(rat(5, 2)));
        assert_eq!(m(&[&[1, 0], &[0, 2]]).scalar_multiple_of(&QMatrix::identity(2)), None);
        assert_eq!(QMatrix::zeros(2, 2).scalar_multiple_of(&QMatrix::zeros(2, 2)), Some(int(0)));
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_pq(&int(3)), "3/1");
    }
}
