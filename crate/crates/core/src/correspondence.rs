//! Orbit-indexed correspondence matrices.
//!
//! Rows are indexed by the orbit of the target weight `λ₂`, columns by the
//! orbit of the source weight `λ₁`. The Prym image of `λ` is the column space
//! of `G_λ = schur(λ, λ)`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};
use crate::report::{Check, Report};
use crate::root::{RootDatum, Weight};
use crate::tabulated::{tabulated_exponent, tabulated_stabilizer_order};
use crate::weyl::{coset_labels, weight_orbit_capped, WeightOrbit};
use crate::DEFAULT_MAX_DENSE_ORBIT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CorrespondenceKind {
    Schur,
    Trace,
    Kanev,
}

impl CorrespondenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CorrespondenceKind::Schur => "schur",
            CorrespondenceKind::Trace => "trace",
            CorrespondenceKind::Kanev => "kanev",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorrespondenceMatrix {
    rows: Arc<WeightOrbit>,
    cols: Arc<WeightOrbit>,
    entries: QMatrix,
    kind: CorrespondenceKind,
    scale: BigInt,
    shift: Rational,
}

impl CorrespondenceMatrix {
    pub fn rows(&self) -> &WeightOrbit {
        &self.rows
    }

    pub fn cols(&self) -> &WeightOrbit {
        &self.cols
    }

    pub fn entries(&self) -> &QMatrix {
        &self.entries
    }

    pub fn kind(&self) -> CorrespondenceKind {
        self.kind
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }
}

fn nonzero(datum: &RootDatum, w: &Weight) -> Result<()> {
    datum.check_weight(w)?;
    if w.is_zero() {
        Err(Error::ZeroWeight)
    } else {
        Ok(())
    }
}

fn orbit(datum: &RootDatum, w: &Weight) -> Result<Arc<WeightOrbit>> {
    nonzero(datum, w)?;
    weight_orbit_capped(w, datum, DEFAULT_MAX_DENSE_ORBIT).map(Arc::new)
}

/// Pairing matrix between two given orbits: entry `(β, α) = scale·(α, β)`.
pub fn schur_matrix_on(
    source: Arc<WeightOrbit>,
    target: Arc<WeightOrbit>,
    datum: &RootDatum,
    scale: &BigInt,
) -> CorrespondenceMatrix {
    let den = BigInt::from(source.denominator()) * BigInt::from(target.denominator()) * BigInt::from(datum.gram_den());
    let entries = QMatrix::from_fn(target.len(), source.len(), |b, a| {
        let p = datum.pairing_num(source.int_point(a), target.int_point(b));
        Rational::new(BigInt::from(p) * scale, den.clone())
    });
    CorrespondenceMatrix {
        rows: target,
        cols: source,
        entries,
        kind: CorrespondenceKind::Schur,
        scale: scale.clone(),
        shift: Rational::zero(),
    }
}

/// Schur correspondence `λ₁ → λ₂` with the form multiplied by `form_scale`.
pub fn schur_matrix(l1: &Weight, l2: &Weight, datum: &RootDatum, form_scale: &BigInt) -> Result<CorrespondenceMatrix> {
    Ok(schur_matrix_on(orbit(datum, l1)?, orbit(datum, l2)?, datum, form_scale))
}

/// All-ones matrix `|Orbit(λ₂)| × |Orbit(λ₁)|`.
pub fn trace_matrix(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<CorrespondenceMatrix> {
    let cols = orbit(datum, l1)?;
    let rows = orbit(datum, l2)?;
    let entries = QMatrix::filled(rows.len(), cols.len(), Rational::one());
    Ok(CorrespondenceMatrix {
        rows,
        cols,
        entries,
        kind: CorrespondenceKind::Trace,
        scale: BigInt::one(),
        shift: Rational::zero(),
    })
}

/// Least `k ≥ 1` with `k·(λ₂g − λ₂, λ₁) ∈ ℤ` for every `g`. Symmetric in
/// the two weights.
pub fn pair_scale(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<BigInt> {
    nonzero(datum, l1)?;
    let o2 = orbit(datum, l2)?;
    let (v1, d1) = l1.to_scaled()?;
    let base = o2.int_point(0).to_vec();
    let den = BigInt::from(d1) * BigInt::from(o2.denominator()) * BigInt::from(datum.gram_den());
    let mut k = BigInt::one();
    for i in 0..o2.len() {
        let diff: Vec<i64> = o2.int_point(i).iter().zip(&base).map(|(a, b)| a - b).collect();
        let q = Rational::new(BigInt::from(datum.pairing_num(&diff, &v1)), den.clone());
        k = k.lcm(q.denom());
    }
    Ok(k)
}

/// Distinguished scale of a pair: the lcm of the pair scales of `(λ₁,λ₁)`,
/// `(λ₂,λ₂)` and `(λ₁,λ₂)`. Under it both weights have integral
/// self-correspondences as well as an integral cross correspondence.
pub fn distinguished_scale(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<BigInt> {
    let a = pair_scale(l1, l1, datum)?;
    let b = pair_scale(l2, l2, datum)?;
    let c = pair_scale(l1, l2, datum)?;
    Ok(a.lcm(&b).lcm(&c))
}

/// `scale·(α, β) + r` with `r ∈ [0, 1)` the unique shift making every entry
/// integral.
pub fn kanev_matrix_with_scale(l1: &Weight, l2: &Weight, datum: &RootDatum, scale: &BigInt) -> Result<CorrespondenceMatrix> {
    kanev_from_schur(schur_matrix(l1, l2, datum, scale)?)
}

pub fn kanev_matrix(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<CorrespondenceMatrix> {
    let k = distinguished_scale(l1, l2, datum)?;
    kanev_matrix_with_scale(l1, l2, datum, &k)
}

fn kanev_from_schur(s: CorrespondenceMatrix) -> Result<CorrespondenceMatrix> {
    let x = s.entries.get(0, 0).clone();
    let shift = x.ceil() - &x;
    let entries = QMatrix::from_fn(s.entries.nrows(), s.entries.ncols(), |r, c| s.entries.get(r, c) + &shift);
    if !entries.is_integral() {
        return Err(Error::NonIntegralShift);
    }
    Ok(CorrespondenceMatrix { entries, kind: CorrespondenceKind::Kanev, shift, ..s })
}

/// The numbers entering `N` for a pair of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentData {
    pub scale: BigInt,
    pub weyl_order: BigInt,
    pub dim: usize,
    pub orbit1: usize,
    pub orbit2: usize,
    pub stab1: BigInt,
    pub stab2: BigInt,
    /// `(λ_i, λ_i)` under the scaled form.
    pub norm1: Rational,
    pub norm2: Rational,
    /// `s_i = |W| (λ_i, λ_i) / (dim V |H_i|)`, scaled form.
    pub s1: Rational,
    pub s2: Rational,
    pub n: Rational,
}

/// `s_λ = k |W| (λ,λ) / (dim V |Stab λ|)`.
pub fn scaled_eigenvalue(l: &Weight, datum: &RootDatum, scale: &BigInt) -> Result<Rational> {
    let o = orbit(datum, l)?;
    let norm = datum.pairing(l, l)? * scale;
    Ok(norm * BigInt::from(o.len()) / BigInt::from(datum.rank()))
}

pub fn exponent_data(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<ExponentData> {
    let scale = distinguished_scale(l1, l2, datum)?;
    let o1 = orbit(datum, l1)?;
    let o2 = orbit(datum, l2)?;
    let w = BigInt::from(datum.weyl_order());
    let dim = datum.rank();
    let norm1 = datum.pairing(l1, l1)? * &scale;
    let norm2 = datum.pairing(l2, l2)? * &scale;
    let s1 = &norm1 * BigInt::from(o1.len()) / BigInt::from(dim);
    let s2 = &norm2 * BigInt::from(o2.len()) / BigInt::from(dim);
    let n = &s1 * &s2;
    Ok(ExponentData {
        stab1: &w / BigInt::from(o1.len()),
        stab2: &w / BigInt::from(o2.len()),
        weyl_order: w,
        dim,
        orbit1: o1.len(),
        orbit2: o2.len(),
        scale,
        norm1,
        norm2,
        s1,
        s2,
        n,
    })
}

/// `N = |W|² (λ₁,λ₁)(λ₂,λ₂) / (|H₁||H₂| (dim V)²)` under the distinguished
/// form; must be a positive integer.
pub fn exponent_n(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<BigInt> {
    let d = exponent_data(l1, l2, datum)?;
    if !d.n.is_integer() || !d.n.is_positive() {
        return Err(Error::NonIntegralExponent(format!("{}", d.n)));
    }
    Ok(d.n.to_integer())
}

/// `s_λ` under the scale of `(λ, λ)`, after checking `G² = s_λ G` exactly.
pub fn gram_eigenvalue(l: &Weight, datum: &RootDatum) -> Result<Rational> {
    let k = distinguished_scale(l, l, datum)?;
    gram_eigenvalue_with_scale(l, datum, &k)
}

pub fn gram_eigenvalue_with_scale(l: &Weight, datum: &RootDatum, scale: &BigInt) -> Result<Rational> {
    let g = schur_matrix(l, l, datum, scale)?;
    let s = scaled_eigenvalue(l, datum, scale)?;
    let sq = g.entries.mul(&g.entries);
    if sq != g.entries.scale(&s) {
        return Err(Error::IdentityFailed(format!("G² = {s}·G for ({l})")));
    }
    Ok(s)
}

/// `Δ₂₁Δ₁₂` applied to the Prym image of `λ₁`, as an exact scalar.
pub fn composite_exponent(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<Rational> {
    let k = distinguished_scale(l1, l2, datum)?;
    let d12 = kanev_matrix_with_scale(l1, l2, datum, &k)?;
    let d21 = kanev_matrix_with_scale(l2, l1, datum, &k)?;
    let g1 = schur_matrix(l1, l1, datum, &BigInt::one())?;
    let image = d21.entries.mul(&d12.entries.mul(&g1.entries));
    image
        .scalar_multiple_of(&g1.entries)
        .ok_or_else(|| Error::IdentityFailed(format!("Δ₂₁Δ₁₂ is not scalar on the image of ({l1})")))
}

fn published_n(datum: &RootDatum, l1: &Weight, l2: &Weight) -> Option<Rational> {
    let i = fundamental_index(l1)?;
    let j = fundamental_index(l2)?;
    tabulated_exponent(datum.lie_type(), i, j).map(Rational::from_integer)
}

/// 1-based `i` when `w = ϖ_i`.
pub fn fundamental_index(w: &Weight) -> Option<usize> {
    let mut idx = None;
    for (i, c) in w.coords().iter().enumerate() {
        if c.is_one() && idx.is_none() {
            idx = Some(i + 1);
        } else if !c.is_zero() {
            return None;
        }
    }
    idx
}

/// Composition law `Δ₂₁Δ₁₂ = [N]` on both Prym images plus transpose
/// duality, trace vanishing and the Gram eigenvalues.
pub fn verify_composition(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<Report> {
    let data = exponent_data(l1, l2, datum)?;
    let k = &data.scale;
    let t = datum.lie_type();
    let mut report = Report::new(format!("composition {t} ({l1}) ({l2})"));

    let s12 = schur_matrix(l1, l2, datum, &BigInt::one())?;
    let s21 = schur_matrix(l2, l1, datum, &BigInt::one())?;
    let g1 = schur_matrix(l1, l1, datum, &BigInt::one())?;
    let g2 = schur_matrix(l2, l2, datum, &BigInt::one())?;
    let d12 = kanev_from_schur(schur_matrix_on(s12.cols.clone(), s12.rows.clone(), datum, k))?;
    let d21 = kanev_from_schur(schur_matrix_on(s21.cols.clone(), s21.rows.clone(), datum, k))?;

    report.push(Check::equal("S₂₁ = S₁₂ᵀ", "exact", s21.entries == s12.entries.transpose()));
    report.push(Check::equal("Δ₂₁ = Δ₁₂ᵀ", "exact", d21.entries == d12.entries.transpose()));
    let zero_sums = s12.entries.row_sums().iter().chain(s12.entries.column_sums().iter()).all(Zero::is_zero);
    report.push(Check::equal("T·S₁₂ = 0 and S₁₂·T = 0", "row and column sums", zero_sums));
    let diff = d12.entries.sub(&s12.entries.scale(&Rational::from_integer(k.clone())));
    report.push(Check::equal(
        "Δ₁₂ − k·S₁₂ is a multiple of T",
        format!("shift {}", d12.shift),
        diff.constant_value() == Some(d12.shift.clone()),
    ));
    report.push(Check::equal("Δ₁₂ has integer entries", "exact", d12.entries.is_integral()));

    for (g, s, name) in [(&g1, &data.s1, "λ₁"), (&g2, &data.s2, "λ₂")] {
        let gk = g.entries.scale(&Rational::from_integer(k.clone()));
        report.push(Check::equal(
            format!("G² = s·G for {name} under the pair scale, s = {s}"),
            "exact",
            gk.mul(&gk) == gk.scale(s),
        ));
    }
    report.push(Check::expect("N = s₁·s₂", &data.s1 * &data.s2, data.n.clone()));
    report.push(Check::equal("N is a positive integer", format!("{}", data.n), data.n.is_integer() && data.n.is_positive()));

    let on1 = d21.entries.mul(&d12.entries.mul(&g1.entries));
    let brute = on1.scalar_multiple_of(&g1.entries);
    let published = published_n(datum, l1, l2);
    match brute {
        Some(b) => report.push(Check::expect_with_published(
            "Δ₂₁Δ₁₂ acts on the image of λ₁ as N (brute force vs formula)",
            b,
            data.n.clone(),
            published,
        )),
        None => report.push(Check::equal("Δ₂₁Δ₁₂ acts as a scalar on the image of λ₁", "not scalar", false)),
    }
    let on2 = d12.entries.mul(&d21.entries.mul(&g2.entries));
    report.push(Check::equal(
        "Δ₁₂Δ₂₁ acts on the image of λ₂ as N",
        "exact",
        on2 == g2.entries.scale(&data.n),
    ));
    if let (Some(i), Some(j)) = (fundamental_index(l1), fundamental_index(l2)) {
        for (idx, stab) in [(i, &data.stab1), (j, &data.stab2)] {
            if let Some(p) = tabulated_stabilizer_order(t, idx) {
                report.push(Check::expect_with_published(
                    format!("|Stab ϖ_{idx}| from the orbit size"),
                    Rational::from_integer(stab.clone()),
                    Rational::from_integer(stab.clone()),
                    Some(Rational::from_integer(p)),
                ));
            }
        }
    }
    Ok(report)
}

/// `Δ₁₂ᵀΔ₁₂ = N` on the Prym image of `λ₁`.
pub fn verify_polarization_pullback(l1: &Weight, l2: &Weight, datum: &RootDatum) -> Result<Report> {
    let data = exponent_data(l1, l2, datum)?;
    let d12 = kanev_matrix_with_scale(l1, l2, datum, &data.scale)?;
    let g1 = schur_matrix(l1, l1, datum, &BigInt::one())?;
    let lhs = d12.entries.transpose().mul(&d12.entries.mul(&g1.entries));
    let mut report = Report::new(format!("polarization {} ({l1}) ({l2})", datum.lie_type()));
    match lhs.scalar_multiple_of(&g1.entries) {
        Some(c) => report.push(Check::expect("Δ₁₂ᵀΔ₁₂ acts on the image of λ₁ as N", c, data.n)),
        None => report.push(Check::equal("Δ₁₂ᵀΔ₁₂ acts as a scalar on the image of λ₁", "not scalar", false)),
    }
    Ok(report)
}

/// Full-cover composite `C = N₂ · R · P₁` with `R` right multiplication by
/// `h_{λ₁}h_{λ₂}`, `P₁` the pullback from cosets of `H₁` and `N₂` the norm to
/// cosets of `H₂`. Returns `C` indexed like the unscaled Schur matrix.
pub fn pushforward_composite(alg: &GroupAlgebra<'_>, l1: &Weight, l2: &Weight) -> Result<QMatrix> {
    let datum = alg.datum();
    let group = alg.group();
    let o1 = orbit(datum, l1)?;
    let o2 = orbit(datum, l2)?;
    let x = alg.convolve(&alg.schur_element(l1)?, &alg.schur_element(l2)?);
    let lab1 = coset_labels(&o1, group);
    let lab2 = coset_labels(&o2, group);
    let mut members: Vec<Vec<usize>> = (0..o1.len()).map(|_| Vec::new()).collect();
    for (w, &c) in lab1.iter().enumerate() {
        members[c].push(w);
    }
    let mut out = QMatrix::zeros(o2.len(), o1.len());
    for (c, ws) in members.iter().enumerate() {
        let pulled = AlgebraElement::from_pairs(ws.iter().map(|&w| (w, Rational::one())));
        let y = alg.convolve(&pulled, &x);
        let mut col: Vec<Rational> = (0..o2.len()).map(|_| Rational::zero()).collect();
        for (t, v) in y.terms() {
            col[lab2[t]] += v;
        }
        for (b, v) in col.into_iter().enumerate() {
            out.set(b, c, v);
        }
    }
    Ok(out)
}

/// The scalar `c` with `N₂RP₁ = c·S₁₂`, checked against
/// `(|W|/dim V)(λ₁,λ₂)|H₁||H₂|`.
pub fn relate_pushforward(alg: &GroupAlgebra<'_>, l1: &Weight, l2: &Weight) -> Result<(Rational, Rational)> {
    let datum = alg.datum();
    let c = pushforward_composite(alg, l1, l2)?;
    let s = schur_matrix(l1, l2, datum, &BigInt::one())?;
    let scalar = c
        .scalar_multiple_of(&s.entries)
        .ok_or_else(|| Error::IdentityFailed(format!("pushforward composite not proportional for ({l1}) ({l2})")))?;
    let w = alg.order();
    let h1 = w / s.cols.len();
    let h2 = w / s.rows.len();
    let expected = alg.averaging_constant() * datum.pairing(l1, l2)? * BigInt::from(h1) * BigInt::from(h2);
    Ok((scalar, expected))
}

pub fn verify_pushforward(alg: &GroupAlgebra<'_>, l1: &Weight, l2: &Weight) -> Result<Report> {
    let (c, e) = relate_pushforward(alg, l1, l2)?;
    let mut report = Report::new(format!("pushforward {} ({l1}) ({l2})", alg.datum().lie_type()));
    report.push(Check::expect("N₂RP₁ = (|W|/dim V)(λ₁,λ₂)|H₁||H₂|·S₁₂", c, e));
    Ok(report)
}

/// Orbit points of `l` listed in a different order, for well-definedness
/// checks.
pub fn permuted_orbit(l: &Weight, datum: &RootDatum, perm: &[usize]) -> Result<Arc<WeightOrbit>> {
    Ok(Arc::new(orbit(datum, l)?.permuted(perm)))
}

/// `Δ₂₁Δ₁₂` scalar computed on explicit (possibly reordered) orbits.
pub fn composite_exponent_on(
    o1: Arc<WeightOrbit>,
    o2: Arc<WeightOrbit>,
    datum: &RootDatum,
    scale: &BigInt,
) -> Result<Rational> {
    let d12 = kanev_from_schur(schur_matrix_on(o1.clone(), o2.clone(), datum, scale))?;
    let d21 = kanev_from_schur(schur_matrix_on(o2, o1.clone(), datum, scale))?;
    let g1 = schur_matrix_on(o1.clone(), o1, datum, &BigInt::one());
    d21.entries
        .mul(&d12.entries.mul(&g1.entries))
        .scalar_multiple_of(&g1.entries)
        .ok_or_else(|| Error::IdentityFailed("composite not scalar".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::linalg::{int, rat};
    use crate::root::{Family, LieType};
    use crate::weyl::enumerate_group;

    fn datum(f: Family, r: usize) -> RootDatum {
        RootDatum::new(LieType::new(f, r).unwrap())
    }

    fn fw(i: usize, r: usize) -> Weight {
        Weight::fundamental(i, r).unwrap()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    #[test]
    fn a2_schur_is_i_minus_j_over_3() {
        let d = datum(Family::A, 2);
        let s = schur_matrix(&fw(1, 2), &fw(1, 2), &d, &one()).unwrap();
        let expected = QMatrix::from_fn(3, 3, |r, c| if r == c { rat(2, 3) } else { rat(-1, 3) });
        assert_eq!(s.entries(), &expected);
        let k = kanev_matrix(&fw(1, 2), &fw(1, 2), &d).unwrap();
        assert_eq!(k.scale(), &one());
        assert_eq!(k.shift(), &rat(1, 3));
        assert_eq!(k.entries(), &QMatrix::identity(3));
    }

    #[test]
    fn a1_kanev() {
        // (ϖ₁s − ϖ₁, ϖ₁) = −1 is already integral, so the scale is 1.
        let d = datum(Family::A, 1);
        let k = kanev_matrix(&fw(1, 1), &fw(1, 1), &d).unwrap();
        assert_eq!(k.scale(), &one());
        assert_eq!(k.shift(), &rat(1, 2));
        assert_eq!(k.entries(), &QMatrix::identity(2));
        let k2 = kanev_matrix_with_scale(&fw(1, 1), &fw(1, 1), &d, &BigInt::from(2)).unwrap();
        assert!(k2.shift().is_zero());
        assert_eq!(k2.entries(), &QMatrix::from_rows(vec![vec![int(1), int(-1)], vec![int(-1), int(1)]]));
    }

    #[test]
    fn b2_schur_square() {
        let d = datum(Family::B, 2);
        let s = schur_matrix(&fw(1, 2), &fw(1, 2), &d, &one()).unwrap();
        assert_eq!(s.entries().nrows(), 4);
        assert_eq!(s.entries().mul(s.entries()), s.entries().scale(&int(2)));
        assert_eq!(gram_eigenvalue(&fw(1, 2), &d).unwrap(), int(2));
    }

    #[test]
    fn trace_vanishing_and_rank() {
        let d = datum(Family::B, 3);
        for i in 1..=3 {
            for j in 1..=3 {
                let s = schur_matrix(&fw(i, 3), &fw(j, 3), &d, &one()).unwrap();
                let t_left = trace_matrix(&fw(j, 3), &fw(j, 3), &d).unwrap();
                let t_right = trace_matrix(&fw(i, 3), &fw(i, 3), &d).unwrap();
                assert!(t_left.entries().mul(s.entries()).is_zero());
                assert!(s.entries().mul(t_right.entries()).is_zero());
                assert_eq!(t_left.entries().rank(), 1);
            }
            let g = schur_matrix(&fw(i, 3), &fw(i, 3), &d, &one()).unwrap();
            assert_eq!(g.entries().rank(), 3);
        }
    }

    #[test]
    fn scales() {
        let a2 = datum(Family::A, 2);
        assert_eq!(distinguished_scale(&fw(1, 2), &fw(2, 2), &a2).unwrap(), one());
        let b2 = datum(Family::B, 2);
        assert_eq!(distinguished_scale(&fw(1, 2), &fw(2, 2), &b2).unwrap(), BigInt::from(2));
        assert_eq!(distinguished_scale(&fw(1, 2), &fw(1, 2), &b2).unwrap(), one());
        let c3 = datum(Family::C, 3);
        assert_eq!(distinguished_scale(&fw(1, 3), &fw(1, 3), &c3).unwrap(), BigInt::from(2));
        assert_eq!(distinguished_scale(&fw(3, 3), &fw(3, 3), &c3).unwrap(), one());
        let g2 = datum(Family::G, 2);
        assert_eq!(distinguished_scale(&fw(1, 2), &fw(2, 2), &g2).unwrap(), BigInt::from(3));
        assert_eq!(
            distinguished_scale(&fw(2, 2), &fw(1, 2), &g2).unwrap(),
            distinguished_scale(&fw(1, 2), &fw(2, 2), &g2).unwrap()
        );
        assert_eq!(distinguished_scale(&Weight::zero(2), &fw(1, 2), &g2).unwrap_err(), Error::ZeroWeight);
    }

    #[test]
    fn exponents() {
        let a3 = datum(Family::A, 3);
        assert_eq!(exponent_n(&fw(1, 3), &fw(3, 3), &a3).unwrap(), one());
        assert_eq!(exponent_n(&fw(2, 3), &fw(2, 3), &a3).unwrap(), BigInt::from(4));
        let b2 = datum(Family::B, 2);
        assert_eq!(exponent_n(&fw(1, 2), &fw(1, 2), &b2).unwrap(), BigInt::from(4));
        assert_eq!(exponent_n(&fw(1, 2), &fw(2, 2), &b2).unwrap(), BigInt::from(8));
        assert_eq!(composite_exponent(&fw(1, 2), &fw(2, 2), &b2).unwrap(), int(8));
        let g2 = datum(Family::G, 2);
        assert_eq!(exponent_n(&fw(1, 2), &fw(2, 2), &g2).unwrap(), BigInt::from(108));
        let d4 = datum(Family::D, 4);
        assert_eq!(exponent_n(&fw(1, 4), &fw(3, 4), &d4).unwrap(), BigInt::from(4));
        assert_eq!(exponent_n(&fw(3, 4), &fw(4, 4), &d4).unwrap(), BigInt::from(4));
    }

    #[test]
    fn composition_reports() {
        let b2 = datum(Family::B, 2);
        let r = verify_composition(&fw(1, 2), &fw(2, 2), &b2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.divergences().count() >= 1);
        let a2 = datum(Family::A, 2);
        assert!(verify_composition(&fw(1, 2), &fw(1, 2), &a2).unwrap().passed());
        assert!(verify_polarization_pullback(&fw(1, 2), &fw(2, 2), &b2).unwrap().passed());
    }

    #[test]
    fn pushforward_scalars() {
        let a1 = datum(Family::A, 1);
        let g1 = enumerate_group(&a1, 100).unwrap();
        let alg1 = GroupAlgebra::new(&a1, &g1, 100).unwrap();
        let (c, e) = relate_pushforward(&alg1, &fw(1, 1), &fw(1, 1)).unwrap();
        assert_eq!(c, int(1));
        assert_eq!(c, e);

        let a2 = datum(Family::A, 2);
        let g = enumerate_group(&a2, 100).unwrap();
        let alg = GroupAlgebra::new(&a2, &g, 100).unwrap();
        let (c, e) = relate_pushforward(&alg, &fw(1, 2), &fw(1, 2)).unwrap();
        assert_eq!(c, int(8));
        assert_eq!(c, e);
        let (c, e) = relate_pushforward(&alg, &fw(1, 2), &fw(2, 2)).unwrap();
        assert_eq!(c, e);

        let basis = a2.orthogonal_weight_basis();
        let comp = pushforward_composite(&alg, &basis[0], &basis[1]).unwrap();
        assert!(comp.is_zero());
    }

    #[test]
    fn permuted_orbits_give_conjugate_matrices() {
        let d = datum(Family::B, 2);
        let o1 = orbit(&d, &fw(1, 2)).unwrap();
        let o2 = orbit(&d, &fw(2, 2)).unwrap();
        let p1 = [3usize, 0, 2, 1];
        let p2 = [1usize, 3, 0, 2];
        let s = schur_matrix_on(o1.clone(), o2.clone(), &d, &one());
        let sp = schur_matrix_on(Arc::new(o1.permuted(&p1)), Arc::new(o2.permuted(&p2)), &d, &one());
        assert_eq!(sp.entries(), &s.entries().permuted(&p2, &p1));
        let k = BigInt::from(2);
        assert_eq!(
            composite_exponent_on(Arc::new(o1.permuted(&p1)), Arc::new(o2.permuted(&p2)), &d, &k).unwrap(),
            int(8)
        );
    }

    #[test]
    fn fundamental_index_detection() {
        assert_eq!(fundamental_index(&fw(2, 3)), Some(2));
        assert_eq!(fundamental_index(&Weight::from_ints(&[1, 1])), None);
        assert_eq!(fundamental_index(&Weight::from_ints(&[2, 0])), None);
    }
}
