//! Integer lattices spanned by weight orbits, Smith normal form, and the
//! scalar identities of the evaluation maps.
//!
//! Equivariant morphisms `P(G) ⊗ ℚ → ℚ[W]` stand in for invariant torus
//! bundles. Such a morphism is stored by its values on the fundamental
//! weights. For a weight `x` the morphism `E_x(ν) = Σ_g (ν, x·g) g` is
//! equivariant under right multiplication.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::correspondence::{distinguished_scale, kanev_matrix_with_scale, pushforward_composite, schur_matrix};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};
use crate::report::{Check, Report};
use crate::root::{RootDatum, Weight};
use crate::weyl::{coset_labels, weight_orbit, weight_orbit_capped, WeightOrbit};
use crate::DEFAULT_MAX_DENSE_ORBIT;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, BigInt::from(x));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let data: Vec<BigInt> = rows.into_iter().inspect(|r| assert_eq!(r.len(), cols)).flatten().collect();
        IntMatrix { rows: n, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols).map(|c| v.iter().enumerate().map(|(r, x)| x * self.get(r, c)).sum()).collect()
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = a[k * n + k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n * n - 1]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// `row_dst += q · row_src`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * q;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// `col_dst += q · col_src`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * q;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -core::mem::take(&mut self.data[r * self.cols + c]);
            self.data[r * self.cols + c] = v;
        }
    }
}

/// Generators of a sublattice of the weight lattice, one per row, in
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    pub generators: IntMatrix,
}

/// `U · A · V = D` with `D` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `d₁ | d₂ | …`, one per diagonal position (`min(m, n)` of them).
    pub factors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Re-multiplies and checks shape, unimodularity and divisibility.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let d = self.u.mul(a).mul(&self.v);
        let diag_ok = (0..d.nrows()).all(|r| {
            (0..d.ncols()).all(|c| {
                if r == c {
                    *d.get(r, c) == self.factors[r]
                } else {
                    d.get(r, c).is_zero()
                }
            })
        });
        let chain_ok = self.factors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        });
        let nonneg = self.factors.iter().all(|f| !f.is_negative());
        diag_ok && chain_ok && nonneg && self.u.determinant().abs().is_one() && self.v.determinant().abs().is_one()
    }

    /// Largest invariant factor.
    pub fn exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }
}

/// Smith normal form by repeated minimal-pivot elimination, with a
/// divisibility fix-up between diagonal positions.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.nrows(), a.ncols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let steps = m.min(n);
    for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..m {
                for c in t..n {
                    let x = d.get(r, c);
                    if !x.is_zero() && best.is_none_or(|(br, bc)| x.abs() < d.get(br, bc).abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                break;
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);
            let p = d.get(t, t).clone();
            let mut clean = true;
            for r in t + 1..m {
                if d.get(r, t).is_zero() {
                    continue;
                }
                let q = -d.get(r, t).div_floor(&p);
                d.add_row(r, t, &q);
                u.add_row(r, t, &q);
                clean &= d.get(r, t).is_zero();
            }
            for c in t + 1..n {
                if d.get(t, c).is_zero() {
                    continue;
                }
                let q = -d.get(t, c).div_floor(&p);
                d.add_col(c, t, &q);
                v.add_col(c, t, &q);
                clean &= d.get(t, c).is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&r| (t + 1..n).any(|c| !(d.get(r, c) % &p).is_zero()));
            match bad {
                Some(r) => {
                    let one = BigInt::one();
                    d.add_row(t, r, &one);
                    u.add_row(t, r, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let factors = (0..steps).map(|i| d.get(i, i).clone()).collect();
    SnfResult { factors, u, v }
}

/// Generators = all orbit points of `λ`.
pub fn orbit_lattice(lambda: &Weight, datum: &RootDatum) -> Result<LatticeBasis> {
    datum.check_weight(lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegralWeight);
    }
    let orbit = weight_orbit(lambda, datum)?;
    let rows: Vec<Vec<i64>> = (0..orbit.len()).map(|i| orbit.int_point(i).to_vec()).collect();
    Ok(LatticeBasis { generators: IntMatrix::from_i64_rows(&rows, datum.rank()) })
}

/// Row-echelon basis of the lattice spanned by `gens`, built one generator at
/// a time with extended-gcd row merges.
pub fn hermite_basis(gens: &IntMatrix) -> IntMatrix {
    let n = gens.ncols();
    let mut pivots: Vec<Option<Vec<BigInt>>> = vec![None; n];
    for r in 0..gens.nrows() {
        let mut v = gens.row(r).to_vec();
        for col in 0..n {
            if v[col].is_zero() {
                continue;
            }
            match &mut pivots[col] {
                slot @ None => {
                    if v[col].is_negative() {
                        v.iter_mut().for_each(|x| *x = -core::mem::take(x));
                    }
                    *slot = Some(v);
                    break;
                }
                Some(b) => {
                    let e = b[col].extended_gcd(&v[col]);
                    let (g, x, y) = (e.gcd, e.x, e.y);
                    let bc = &b[col] / &g;
                    let vc = &v[col] / &g;
                    let merged: Vec<BigInt> = b.iter().zip(&v).map(|(p, q)| &x * p + &y * q).collect();
                    let rest: Vec<BigInt> = b.iter().zip(&v).map(|(p, q)| &bc * q - &vc * p).collect();
                    *b = merged;
                    v = rest;
                }
            }
        }
    }
    let rows: Vec<Vec<BigInt>> = pivots.into_iter().flatten().collect();
    IntMatrix::from_rows(rows, n)
}

/// Exponent of `P(G) / ℤ[W]λ`.
pub fn quotient_exponent(lambda: &Weight, datum: &RootDatum) -> Result<BigInt> {
    let lat = orbit_lattice(lambda, datum)?;
    let basis = hermite_basis(&lat.generators);
    if basis.nrows() != datum.rank() {
        return Err(Error::IdentityFailed(format!("orbit of ({lambda}) does not span")));
    }
    let snf = smith_normal_form(&basis);
    Ok(snf.exponent())
}

/// Integer `y` with `y · a = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, snf: &SnfResult, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let bv = snf.v.vec_mul(b);
    let mut z = vec![BigInt::zero(); a.nrows()];
    for (j, x) in bv.iter().enumerate() {
        let d = snf.factors.get(j).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            if !x.is_zero() {
                return None;
            }
        } else {
            let (q, r) = x.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            z[j] = q;
        }
    }
    Some(snf.u.vec_mul(&z))
}

/// `Σ_s (λs, μ) λs` over the whole group, against `(|W|(λ,λ)/dim V)·μ`.
pub fn gamma_identity(alg: &GroupAlgebra<'_>, lambda: &Weight, mu: &Weight) -> Result<Report> {
    let datum = alg.datum();
    let group = alg.group();
    datum.check_weight(lambda)?;
    datum.check_weight(mu)?;
    let mut gamma = Weight::zero(datum.rank());
    for s in 0..group.order() {
        let ls = group.act(s, lambda);
        let c = datum.pairing(&ls, mu)?;
        if !c.is_zero() {
            gamma = gamma.add(&ls.scaled(&c));
        }
    }
    let k = alg.averaging_constant() * datum.pairing(lambda, lambda)?;
    let expected = mu.scaled(&k);
    let mut report = Report::new(format!("gamma {} ({lambda}) ({mu})", datum.lie_type()));
    report.push(Check::equal(
        format!("Σ_s (λs,μ)λs = (|W|(λ,λ)/dim V)·μ, constant {k}"),
        format!("({gamma})"),
        gamma == expected,
    ));
    Ok(report)
}

/// Values `α ↦ (α, x)` on an orbit.
fn orbit_functional(orbit: &WeightOrbit, x: &Weight, datum: &RootDatum) -> Result<Vec<Rational>> {
    (0..orbit.len()).map(|i| datum.pairing(&orbit.point(i), x)).collect()
}

/// The scalar `c` with `Δ_{λ,μ} ∘ ẽv_λ = c · ẽv_μ` on the morphisms `E_x`,
/// `x` running over the fundamental weights. Also checks that `ev_λ(E_x)`
/// is constant on cosets of `Stab λ`.
pub fn evaluation_scalar(alg: &GroupAlgebra<'_>, lambda: &Weight, mu: &Weight) -> Result<Rational> {
    let datum = alg.datum();
    let group = alg.group();
    if datum.pairing(lambda, mu)?.is_zero() {
        return Err(Error::OrthogonalWeights);
    }
    let k = distinguished_scale(lambda, mu, datum)?;
    let delta = kanev_matrix_with_scale(lambda, mu, datum, &k)?;
    let o_l = weight_orbit_capped(lambda, datum, DEFAULT_MAX_DENSE_ORBIT)?;
    let o_m = weight_orbit_capped(mu, datum, DEFAULT_MAX_DENSE_ORBIT)?;
    let labels = coset_labels(&o_l, group);
    let mut c: Option<Rational> = None;
    for i in 1..=datum.rank() {
        let x = Weight::fundamental(i, datum.rank())?;
        let v = orbit_functional(&o_l, &x, datum)?;
        // coefficient of g in E_x(λ) is (λ, x g) = (λ g⁻¹, x)
        for g in 0..group.order() {
            let coeff = datum.pairing(lambda, &group.act(g, &x))?;
            if coeff != v[labels[g]] {
                return Err(Error::IdentityFailed(format!("ev of E_{i} is not constant on cosets")));
            }
        }
        let image = delta.entries().mul_vec(&v);
        let target = orbit_functional(&o_m, &x, datum)?;
        let col = QMatrix::from_fn(target.len(), 1, |r, _| image[r].clone());
        let tgt = QMatrix::from_fn(target.len(), 1, |r, _| target[r].clone());
        let ci = col
            .scalar_multiple_of(&tgt)
            .ok_or_else(|| Error::IdentityFailed(format!("Δ∘ẽv_λ not proportional to ẽv_μ on E_{i}")))?;
        match &c {
            None => c = Some(ci),
            Some(prev) if *prev == ci => {}
            Some(_) => return Err(Error::IdentityFailed("evaluation scalar depends on the morphism".into())),
        }
    }
    c.ok_or(Error::ZeroWeight)
}

/// Chain law `Δ₂₃Δ₁₂ = s_{λ₂}·Δ₁₃` on the Prym image of `λ₁`, all three
/// correspondences taken under one common scale.
pub fn verify_chain(
    alg: Option<&GroupAlgebra<'_>>,
    datum: &RootDatum,
    l1: &Weight,
    l2: &Weight,
    l3: &Weight,
) -> Result<Report> {
    let k = distinguished_scale(l1, l2, datum)?
        .lcm(&distinguished_scale(l2, l3, datum)?)
        .lcm(&distinguished_scale(l1, l3, datum)?);
    let d12 = kanev_matrix_with_scale(l1, l2, datum, &k)?;
    let d23 = kanev_matrix_with_scale(l2, l3, datum, &k)?;
    let d13 = kanev_matrix_with_scale(l1, l3, datum, &k)?;
    let g1 = schur_matrix(l1, l1, datum, &BigInt::one())?;
    let o2 = weight_orbit_capped(l2, datum, DEFAULT_MAX_DENSE_ORBIT)?;
    let s2 = datum.pairing(l2, l2)? * &k * BigInt::from(o2.len()) / BigInt::from(datum.rank());
    let lhs = d23.entries().mul(&d12.entries().mul(g1.entries()));
    let rhs = d13.entries().mul(g1.entries()).scale(&s2);
    let mut report = Report::new(format!("chain {} ({l1}) ({l2}) ({l3})", datum.lie_type()));
    report.push(Check::equal(
        format!("Δ₂₃Δ₁₂ = s₂·Δ₁₃ on the image of λ₁, scale {k}, s₂ = {s2}"),
        "exact",
        lhs == rhs,
    ));
    if datum.pairing(l1, l2)?.is_zero() {
        if let Some(alg) = alg {
            let comp = pushforward_composite(alg, l1, l2)?;
            report.push(Check::equal("λ₁ ⊥ λ₂: the full-cover composite vanishes", "exact", comp.is_zero()));
        }
    }
    Ok(report)
}

/// Equivariant morphism `P(G) ⊗ ℚ → ℚ[W]`, stored by its values on the
/// fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMorphism {
    pub values: Vec<AlgebraElement>,
}

impl EquivariantMorphism {
    /// `E_x(ν) = Σ_g (ν, x·g) g`.
    pub fn from_weight(alg: &GroupAlgebra<'_>, x: &Weight) -> Result<Self> {
        let datum = alg.datum();
        let n = datum.rank();
        let images: Vec<Weight> = (0..alg.order()).map(|g| alg.group().act(g, x)).collect();
        let values = (1..=n)
            .map(|i| {
                let w = Weight::fundamental(i, n)?;
                let mut e = AlgebraElement::zero();
                for (g, xg) in images.iter().enumerate() {
                    e.add_term(g, datum.pairing(&w, xg)?);
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivariantMorphism { values })
    }

    pub fn eval(&self, nu: &Weight) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, v) in nu.coords().iter().zip(&self.values) {
            if !c.is_zero() {
                out = out.add(&v.scale(c));
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        EquivariantMorphism { values: self.values.iter().map(|v| v.scale(k)).collect() }
    }
}

/// Data for `δ_λ`: the orbit, its integer lattice and its exponent.
pub struct DeltaMap {
    lambda: Weight,
    orbit: WeightOrbit,
    gens: IntMatrix,
    snf: SnfResult,
    exponent: BigInt,
    witnesses: Vec<usize>,
}

impl DeltaMap {
    pub fn new(alg: &GroupAlgebra<'_>, lambda: &Weight) -> Result<Self> {
        let datum = alg.datum();
        let gens = orbit_lattice(lambda, datum)?.generators;
        let orbit = weight_orbit(lambda, datum)?;
        let snf = smith_normal_form(&gens);
        let exponent = quotient_exponent(lambda, datum)?;
        let witnesses = (0..orbit.len()).map(|i| orbit.witness(i, alg.group())).collect();
        Ok(DeltaMap { lambda: lambda.clone(), orbit, gens, snf, exponent, witnesses })
    }

    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    /// Integer coefficients `c_p` with `Σ c_p p = v`, when `v ∈ ℤ[W]λ`.
    pub fn coefficients(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        solve_integer(&self.gens, &self.snf, v)
    }

    /// `ẽv_λ(E) = E(λ)`.
    pub fn ev(&self, e: &EquivariantMorphism) -> AlgebraElement {
        e.eval(&self.lambda)
    }

    /// `δ_λ(L)(ν) = ψ_L(M_λ ν)` with `ψ_L(Σ c_p p) = Σ c_p L·w_p`.
    pub fn delta(&self, alg: &GroupAlgebra<'_>, l: &AlgebraElement) -> Result<EquivariantMorphism> {
        let n = alg.datum().rank();
        let translates: Vec<AlgebraElement> =
            self.witnesses.iter().map(|&w| l.right_translate(w, alg.group())).collect();
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let mut target = vec![BigInt::zero(); n];
            target[i] = self.exponent.clone();
            let coeffs = self
                .coefficients(&target)
                .ok_or_else(|| Error::IdentityFailed(format!("M·ϖ_{} is not in ℤ[W]λ", i + 1)))?;
            let mut acc = AlgebraElement::zero();
            for (c, t) in coeffs.iter().zip(&translates) {
                if !c.is_zero() {
                    acc = acc.add(&t.scale(&Rational::from_integer(c.clone())));
                }
            }
            values.push(acc);
        }
        Ok(EquivariantMorphism { values })
    }

    /// No proper divisor of `M` already maps `P(G)` into `ℤ[W]λ`.
    pub fn exponent_is_minimal(&self, rank: usize) -> bool {
        let m = &self.exponent;
        let mut primes = Vec::new();
        let mut rest = m.clone();
        let mut p = BigInt::from(2);
        while &p * &p <= rest {
            if (&rest % &p).is_zero() {
                while (&rest % &p).is_zero() {
                    rest /= &p;
                }
                primes.push(p.clone());
            }
            p += 1;
        }
        if rest > BigInt::one() {
            primes.push(rest);
        }
        primes.iter().all(|p| {
            let d = m / p;
            !(0..rank).all(|i| {
                let mut v = vec![BigInt::zero(); rank];
                v[i] = d.clone();
                self.coefficients(&v).is_some()
            })
        })
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }
}

/// `δ_λ ∘ ẽv_λ = [M_λ]` on the morphisms `E_x`, and the composite through
/// `μ` equals `[M_λ M_μ]`.
pub fn delta_inverse_relation(alg: &GroupAlgebra<'_>, lambda: &Weight, mu: &Weight) -> Result<Report> {
    let datum = alg.datum();
    let dl = DeltaMap::new(alg, lambda)?;
    let dm = DeltaMap::new(alg, mu)?;
    let ml = Rational::from_integer(dl.exponent().clone());
    let mm = Rational::from_integer(dm.exponent().clone());
    let mut report = Report::new(format!("delta {} ({lambda}) ({mu})", datum.lie_type()));
    report.push(Check::equal(format!("M_λ = {} is minimal", dl.exponent()), "checked prime divisors", dl.exponent_is_minimal(datum.rank())));
    report.push(Check::equal(format!("M_μ = {} is minimal", dm.exponent()), "checked prime divisors", dm.exponent_is_minimal(datum.rank())));
    let mut single = true;
    let mut composite = true;
    for i in 1..=datum.rank() {
        let e = EquivariantMorphism::from_weight(alg, &Weight::fundamental(i, datum.rank())?)?;
        let back = dl.delta(alg, &dl.ev(&e))?;
        single &= back == e.scale(&ml);
        let twice = dm.delta(alg, &dm.ev(&back))?;
        composite &= twice == e.scale(&(&ml * &mm));
    }
    report.push(Check::equal("δ_λ ∘ ẽv_λ = [M_λ]", format!("M_λ = {}", dl.exponent()), single));
    report.push(Check::equal("δ_μ ẽv_μ δ_λ ẽv_λ = [M_λ M_μ]", format!("M_λ M_μ = {}", &ml * &mm), composite));
    Ok(report)
}
