//! Exact arithmetic in ℚ[W]: Schur elements, the rank-one idempotents `H_λ`,
//! character projectors and the averaging identities behind them.
//!
//! The averaging constant is `|W| / dim V`:
//!
//! ```text
//! Σ_h (λ₁h, λ₂)(λ₃, λ₄h) = (|W| / dim V) · (λ₁, λ₄)(λ₂, λ₃)
//! h_{λ₁} · h_{λ₂}          = (|W| / dim V) · (λ₁, λ₂) · Σ_t (λ₁t, λ₂) t
//! ```
//!
//! with `dim V` the rank. Both are checked here by brute force rather than
//! assumed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, lcm_denominators, rat_i128, QMatrix, Rational};
use crate::report::{Check, Report};
use crate::root::{RootDatum, Weight};
use crate::weyl::WeylGroup;

/// Sparse element of ℚ[W], keyed by group element index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `δ_g`.
    pub fn delta(g: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(g, Rational::one());
        AlgebraElement { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Self::zero();
        for (g, c) in pairs {
            e.add_term(g, c);
        }
        e
    }

    pub fn add_term(&mut self, g: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn coeff(&self, g: usize) -> Rational {
        self.coeffs.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        AlgebraElement { coeffs: self.coeffs.iter().map(|(&g, c)| (g, c * k)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.coeffs.values().sum()
    }

    /// Right multiplication by a group element: `Σ a_g g ↦ Σ a_g (g·w)`.
    pub fn right_translate(&self, w: usize, group: &WeylGroup) -> Self {
        AlgebraElement { coeffs: self.terms().map(|(g, c)| (group.product(g, w), c.clone())).collect() }
    }

    /// Common denominator and i64 numerators, when they fit.
    fn scaled_i64(&self) -> Option<(BigInt, Vec<(usize, i64)>)> {
        let den = lcm_denominators(self.coeffs.values());
        let nums = self
            .terms()
            .map(|(g, c)| (c.numer() * (&den / c.denom())).to_i64().map(|n| (g, n)))
            .collect::<Option<Vec<_>>>()?;
        Some((den, nums))
    }
}

/// One-dimensional and reflection characters, computable from the element
/// matrices alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Character {
    Trivial,
    Sign,
    Reflection,
}

impl Character {
    pub const ALL: [Character; 3] = [Character::Trivial, Character::Sign, Character::Reflection];

    pub fn dim(self, rank: usize) -> usize {
        match self {
            Character::Trivial | Character::Sign => 1,
            Character::Reflection => rank,
        }
    }

    pub fn value(self, group: &WeylGroup, g: usize) -> i64 {
        match self {
            Character::Trivial => 1,
            Character::Sign => group.determinant(g),
            Character::Reflection => group.trace(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Character::Trivial => "trivial",
            Character::Sign => "sign",
            Character::Reflection => "reflection",
        }
    }
}

/// ℚ[W] for an enumerated Weyl group.
#[derive(Debug, Clone, Copy)]
pub struct GroupAlgebra<'a> {
    datum: &'a RootDatum,
    group: &'a WeylGroup,
}

impl<'a> GroupAlgebra<'a> {
    /// Fails with `ResourceLimit` when `|W|` exceeds `max_order`.
    pub fn new(datum: &'a RootDatum, group: &'a WeylGroup, max_order: u64) -> Result<Self> {
        if group.order() as u64 > max_order {
            return Err(Error::ResourceLimit {
                what: "group algebra",
                size: group.order() as u128,
                limit: max_order as u128,
            });
        }
        Ok(GroupAlgebra { datum, group })
    }

    pub fn datum(&self) -> &'a RootDatum {
        self.datum
    }

    pub fn group(&self) -> &'a WeylGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn dim_v(&self) -> usize {
        self.datum.rank()
    }

    /// `|W| / dim V`.
    pub fn averaging_constant(&self) -> Rational {
        Rational::new(BigInt::from(self.order()), BigInt::from(self.dim_v()))
    }

    /// `(a·b)(t) = Σ_{gh=t} a(g) b(h)`.
    pub fn convolve(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        if let (Some((da, na)), Some((db, nb))) = (a.scaled_i64(), b.scaled_i64()) {
            let mut acc = vec![0i128; self.order()];
            let mut overflow = false;
            'outer: for &(g, x) in &na {
                for &(h, y) in &nb {
                    let t = self.group.product(g, h);
                    match acc[t].checked_add(x as i128 * y as i128) {
                        Some(v) => acc[t] = v,
                        None => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
            }
            if !overflow {
                let den = da * db;
                return AlgebraElement::from_pairs(
                    acc.into_iter()
                        .enumerate()
                        .filter(|(_, v)| *v != 0)
                        .map(|(t, v)| (t, Rational::new(BigInt::from(v), den.clone()))),
                );
            }
        }
        let mut out = AlgebraElement::zero();
        for (g, x) in a.terms() {
            for (h, y) in b.terms() {
                out.add_term(self.group.product(g, h), x * y);
            }
        }
        out
    }

    /// `g ↦ g⁻¹` extended linearly.
    pub fn involution(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_pairs(a.terms().map(|(g, c)| (self.group.inverse(g), c.clone())))
    }

    fn nonzero(&self, lambda: &Weight) -> Result<()> {
        self.datum.check_weight(lambda)?;
        if lambda.is_zero() {
            Err(Error::ZeroWeight)
        } else {
            Ok(())
        }
    }

    /// Numerators of `(λ·g, μ)` for every `g`, over `den`.
    fn pairing_table(&self, lambda: &Weight, mu: &Weight) -> Result<(Vec<i128>, i128)> {
        let (l, dl) = lambda.to_scaled()?;
        let (m, dm) = mu.to_scaled()?;
        let gm = self.datum.gram_times(&m);
        let table = (0..self.order())
            .map(|g| {
                let lg = self.group.act_int(g, &l);
                lg.iter().zip(&gm).map(|(&a, &b)| a as i128 * b).sum()
            })
            .collect();
        Ok((table, dl as i128 * dm as i128 * self.datum.gram_den() as i128))
    }

    /// `h_λ = Σ_g (λg, λ) g`.
    pub fn schur_element(&self, lambda: &Weight) -> Result<AlgebraElement> {
        self.nonzero(lambda)?;
        let (t, den) = self.pairing_table(lambda, lambda)?;
        Ok(AlgebraElement::from_pairs(t.into_iter().enumerate().map(|(g, v)| (g, rat_i128(v, den)))))
    }

    /// `H_λ = dim V / (|W| (λ, λ)) · h_λ`, an idempotent.
    pub fn projector_h(&self, lambda: &Weight) -> Result<AlgebraElement> {
        let h = self.schur_element(lambda)?;
        let norm = self.datum.pairing(lambda, lambda)?;
        let k = Rational::new(BigInt::from(self.dim_v()), BigInt::from(self.order())) / norm;
        Ok(h.scale(&k))
    }

    /// `p_χ = (dim χ / |W|) Σ_g χ(g) g`.
    pub fn schur_projector(&self, chi: Character) -> AlgebraElement {
        let k = Rational::new(BigInt::from(chi.dim(self.dim_v())), BigInt::from(self.order()));
        AlgebraElement::from_pairs(
            (0..self.order()).map(|g| (g, &k * BigInt::from(chi.value(self.group, g)))),
        )
    }

    /// Trace of left multiplication by `a` on the regular representation:
    /// `|W| · a(e)`. Equals the rank when `a` is idempotent.
    pub fn regular_trace(&self, a: &AlgebraElement) -> Rational {
        a.coeff(self.group.identity()) * BigInt::from(self.order())
    }

    /// Rank of left multiplication by `a` on ℚ[W], by exact elimination.
    /// Cost is cubic in |W|.
    pub fn regular_rank(&self, a: &AlgebraElement) -> usize {
        let n = self.order();
        // column h is a·h, so entry (t, h) = a(t h⁻¹)
        let m = QMatrix::from_fn(n, n, |t, h| a.coeff(self.group.product(t, self.group.inverse(h))));
        m.rank()
    }

    /// `Σ_h (λ₁h, λ₂)(λ₃, λ₄h)` by direct summation.
    pub fn four_linear_sum(&self, l1: &Weight, l2: &Weight, l3: &Weight, l4: &Weight) -> Result<Rational> {
        for w in [l1, l2, l3, l4] {
            self.datum.check_weight(w)?;
        }
        let (a, da) = self.pairing_table(l1, l2)?;
        let (b, db) = self.pairing_table(l4, l3)?;
        let mut acc = BigInt::zero();
        for (x, y) in a.iter().zip(&b) {
            acc += BigInt::from(*x) * BigInt::from(*y);
        }
        Ok(Rational::new(acc, BigInt::from(da) * BigInt::from(db)))
    }

    /// `(|W| / dim V) (λ₁, λ₄)(λ₂, λ₃)`.
    pub fn four_linear_closed_form(&self, l1: &Weight, l2: &Weight, l3: &Weight, l4: &Weight) -> Result<Rational> {
        Ok(self.averaging_constant() * self.datum.pairing(l1, l4)? * self.datum.pairing(l2, l3)?)
    }

    /// `Σ_t [Σ_h (λ₂h, λ₂)(λ₁t, λ₁h)] t`, summed directly over `t` and `h`.
    pub fn pair_composition(&self, l1: &Weight, l2: &Weight) -> Result<AlgebraElement> {
        self.nonzero(l1)?;
        self.nonzero(l2)?;
        let (v1, d1) = l1.to_scaled()?;
        let (c2, den2) = self.pairing_table(l2, l2)?;
        let images: Vec<Vec<i64>> = (0..self.order()).map(|g| self.group.act_int(g, &v1)).collect();
        let gram_images: Vec<Vec<i128>> = images.iter().map(|v| self.datum.gram_times(v)).collect();
        let den = BigInt::from(den2) * BigInt::from(d1) * BigInt::from(d1) * BigInt::from(self.datum.gram_den());
        let mut out = AlgebraElement::zero();
        for t in 0..self.order() {
            let mut acc = BigInt::zero();
            for h in 0..self.order() {
                if c2[h] == 0 {
                    continue;
                }
                let p: i128 = images[t].iter().zip(&gram_images[h]).map(|(&a, &b)| a as i128 * b).sum();
                acc += BigInt::from(c2[h]) * BigInt::from(p);
            }
            out.add_term(t, Rational::new(acc, den.clone()));
        }
        Ok(out)
    }

    /// `(|W| / dim V)(λ₁, λ₂) Σ_t (λ₁t, λ₂) t`.
    pub fn pair_composition_closed_form(&self, l1: &Weight, l2: &Weight) -> Result<AlgebraElement> {
        self.nonzero(l1)?;
        self.nonzero(l2)?;
        let k = self.averaging_constant() * self.datum.pairing(l1, l2)?;
        let (t, den) = self.pairing_table(l1, l2)?;
        Ok(AlgebraElement::from_pairs(t.into_iter().enumerate().map(|(g, v)| (g, &k * rat_i128(v, den)))))
    }

    /// Checks `p_reflection = Σ H_{v_i}` for the orthogonal weight basis.
    pub fn verify_basis_decomposition(&self) -> Result<Report> {
        let basis = self.datum.orthogonal_weight_basis();
        let p = self.schur_projector(Character::Reflection);
        let mut sum = AlgebraElement::zero();
        for v in &basis {
            sum = sum.add(&self.projector_h(v)?);
        }
        let mut report = Report::new(format!("basis decomposition {}", self.datum.lie_type()));
        report.push(Check::equal(
            "p_reflection equals the sum of H_v over an orthogonal weight basis",
            format!("{} terms, difference support {}", basis.len(), p.sub(&sum).support_len()),
            sum == p,
        ));
        Ok(report)
    }

    /// Idempotency, orthogonality, rank law and symmetry checks for the
    /// given weights plus the three character projectors.
    pub fn verify_idempotents(&self, weights: &[Weight], exact_rank_limit: usize) -> Result<Report> {
        let mut report = Report::new(format!("idempotents {}", self.datum.lie_type()));
        for w in weights {
            let h = self.schur_element(w)?;
            report.push(Check::equal(
                format!("h_λ coefficients sum to zero, λ = ({w})"),
                format!("{}", h.coefficient_sum()),
                h.coefficient_sum().is_zero(),
            ));
            report.push(Check::equal(
                format!("h_λ(g) = h_λ(g⁻¹), λ = ({w})"),
                "checked on all elements",
                self.involution(&h) == h,
            ));
            let big_h = self.projector_h(w)?;
            let sq = self.convolve(&big_h, &big_h);
            report.push(Check::equal(format!("H_λ² = H_λ, λ = ({w})"), "exact", sq == big_h));
            report.push(Check::expect(
                format!("rank of H_λ on the regular representation, λ = ({w})"),
                self.regular_trace(&big_h),
                int(self.dim_v() as i64),
            ));
        }
        let projectors: Vec<(Character, AlgebraElement)> =
            Character::ALL.iter().map(|&c| (c, self.schur_projector(c))).collect();
        for (c, p) in &projectors {
            let sq = self.convolve(p, p);
            report.push(Check::equal(format!("p_{}² = p_{}", c.name(), c.name()), "exact", &sq == p));
            let d = c.dim(self.dim_v()) as i64;
            let trace = self.regular_trace(p);
            report.push(Check::expect(format!("rank of p_{} on ℚ[W] (trace of idempotent)", c.name()), trace, int(d * d)));
            if self.order() <= exact_rank_limit {
                let r = self.regular_rank(p);
                report.push(Check::expect(
                    format!("rank of p_{} on ℚ[W] (elimination)", c.name()),
                    int(r as i64),
                    int(d * d),
                ));
            }
        }
        for i in 0..projectors.len() {
            for j in 0..projectors.len() {
                if i == j {
                    continue;
                }
                let (ci, pi) = &projectors[i];
                let (cj, pj) = &projectors[j];
                // with rank one the reflection and sign characters coincide
                if self.dim_v() == 1 && matches!((ci, cj), (Character::Sign, Character::Reflection) | (Character::Reflection, Character::Sign)) {
                    continue;
                }
                let prod = self.convolve(pi, pj);
                report.push(Check::equal(
                    format!("p_{} · p_{} = 0", ci.name(), cj.name()),
                    format!("support {}", prod.support_len()),
                    prod.is_zero(),
                ));
            }
        }
        report.extend(self.verify_basis_decomposition()?);
        Ok(report)
    }

    /// Brute-force four-linear sums against the `|W|/dim V` closed form.
    pub fn verify_four_linear(&self, tuples: &[[Weight; 4]]) -> Result<Report> {
        let mut report = Report::new(format!("four-linear sums {}", self.datum.lie_type()));
        for [a, b, c, d] in tuples {
            let brute = self.four_linear_sum(a, b, c, d)?;
            let closed = self.four_linear_closed_form(a, b, c, d)?;
            report.push(Check::expect(format!("Σ_h (λ₁h,λ₂)(λ₃,λ₄h), λ = ({a}) ({b}) ({c}) ({d})"), brute, closed));
        }
        Ok(report)
    }

    /// `h_{λ₁}h_{λ₂}`: direct double sum, convolution and closed form agree.
    pub fn verify_pair_composition(&self, l1: &Weight, l2: &Weight) -> Result<Report> {
        let direct = self.pair_composition(l1, l2)?;
        let conv = self.convolve(&self.schur_element(l1)?, &self.schur_element(l2)?);
        let closed = self.pair_composition_closed_form(l1, l2)?;
        let mut report = Report::new(format!("pair composition {} ({l1}) ({l2})", self.datum.lie_type()));
        report.push(Check::equal("double sum equals convolution h_λ₁ · h_λ₂", "exact", direct == conv));
        report.push(Check::equal(
            "h_λ₁ · h_λ₂ = (|W|/dim V)(λ₁,λ₂) Σ_t (λ₁t,λ₂) t",
            "exact",
            direct == closed,
        ));
        Ok(report)
    }
}
