//! Verification suites. Each suite returns reports in a fixed order; random
//! weights come from a ChaCha stream seeded by the Lie type, so reruns are
//! byte-identical.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use prymcorr_core::algebra::GroupAlgebra;
use prymcorr_core::correspondence::{
    distinguished_scale, exponent_data, scaled_eigenvalue, schur_matrix, trace_matrix, verify_composition,
    relate_pushforward, verify_polarization_pullback, verify_pushforward,
};
use prymcorr_core::lattice::{
    delta_inverse_relation, evaluation_scalar, gamma_identity, orbit_lattice, quotient_exponent, smith_normal_form,
    verify_chain,
};
use prymcorr_core::weyl::{enumerate_group, WeylGroup};
use prymcorr_core::{Check, Rational, Report, RootDatum, Weight};

use crate::error::RunResult;
use crate::check_group_cap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Idempotents,
    Sumcal,
    Composition,
    Trace,
    Polarization,
    Gamma,
    Snf,
    Chain,
    Pushforward,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Idempotents,
        Suite::Sumcal,
        Suite::Composition,
        Suite::Trace,
        Suite::Polarization,
        Suite::Gamma,
        Suite::Snf,
        Suite::Chain,
        Suite::Pushforward,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Idempotents => "idempotents",
            Suite::Sumcal => "sumcal",
            Suite::Composition => "composition",
            Suite::Trace => "trace",
            Suite::Polarization => "polarization",
            Suite::Gamma => "gamma",
            Suite::Snf => "snf",
            Suite::Chain => "chain",
            Suite::Pushforward => "pushforward",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All { Suite::EACH.to_vec() } else { vec![self] }
    }
}

/// Groups up to this order also get the exact-elimination rank cross-check.
pub const EXACT_RANK_LIMIT: usize = 48;
/// Groups up to this order run the δ/ẽv relation, whose cost grows like |W|·|orbit|.
pub const DELTA_LIMIT: usize = 384;
pub const RANDOM_TUPLES: usize = 50;
pub const RANDOM_PAIRS: usize = 25;

/// Seeded by the Lie type; `stream` separates the suites.
pub fn rng_for(datum: &RootDatum, stream: u64) -> ChaCha8Rng {
    let t = datum.lie_type();
    let seed = 0x7072_796d_0000_0000u64 ^ ((t.family().letter() as u64) << 16) ^ t.rank() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Nonzero integral weight with coordinates in `-3..=3`.
pub fn random_weight(rng: &mut impl Rng, rank: usize) -> Weight {
    loop {
        let v: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
        if v.iter().any(|&x| x != 0) {
            return Weight::from_ints(&v);
        }
    }
}

pub fn fundamentals(datum: &RootDatum) -> Vec<Weight> {
    (1..=datum.rank()).map(|i| Weight::fundamental(i, datum.rank()).expect("in range")).collect()
}

fn pairs(n: usize, ordered: bool) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (if ordered { 0 } else { i }..n).map(move |j| (i, j))).collect()
}

pub struct Context<'a> {
    pub datum: &'a RootDatum,
    pub group: WeylGroup,
    pub max_group_order: u64,
}

impl<'a> Context<'a> {
    pub fn new(datum: &'a RootDatum, max_group_order: u64) -> RunResult<Self> {
        check_group_cap(datum, max_group_order)?;
        let group = enumerate_group(datum, max_group_order)?;
        Ok(Context { datum, group, max_group_order })
    }

    pub fn algebra(&self) -> RunResult<GroupAlgebra<'_>> {
        Ok(GroupAlgebra::new(self.datum, &self.group, self.max_group_order)?)
    }
}

pub fn run(ctx: &Context<'_>, suites: &[Suite]) -> RunResult<Vec<Report>> {
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for s in suites.iter().flat_map(|s| s.expand()) {
        if seen.contains(&s) {
            continue;
        }
        seen.push(s);
        out.extend(run_one(ctx, s)?);
    }
    Ok(out)
}

pub fn run_one(ctx: &Context<'_>, suite: Suite) -> RunResult<Vec<Report>> {
    match suite {
        Suite::Idempotents => idempotents(ctx),
        Suite::Sumcal => sumcal(ctx),
        Suite::Composition => composition(ctx),
        Suite::Trace => trace(ctx),
        Suite::Polarization => polarization(ctx),
        Suite::Gamma => gamma(ctx),
        Suite::Snf => snf(ctx),
        Suite::Chain => chain(ctx),
        Suite::Pushforward => pushforward(ctx),
        Suite::All => run(ctx, &[Suite::All]),
    }
}

pub fn idempotents(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let alg = ctx.algebra()?;
    Ok(vec![alg.verify_idempotents(&fundamentals(ctx.datum), EXACT_RANK_LIMIT)?])
}

/// Four-linear sums on random tuples, pair compositions, and the constant in
/// `h_λ² = c·h_λ` against the `dim²` variant.
pub fn sumcal(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let alg = ctx.algebra()?;
    let d = ctx.datum;
    let mut rng = rng_for(d, 1);
    let tuples: Vec<[Weight; 4]> = (0..RANDOM_TUPLES)
        .map(|_| core::array::from_fn(|_| random_weight(&mut rng, d.rank())))
        .collect();
    let mut reports = vec![alg.verify_four_linear(&tuples)?];
    let fw = fundamentals(d);
    let comps: RunResult<Vec<Report>> = pairs(fw.len(), false)
        .par_iter()
        .map(|&(i, j)| Ok(alg.verify_pair_composition(&fw[i], &fw[j])?))
        .collect();
    reports.extend(comps?);
    reports.push(square_constant(&alg, &fw[0])?);
    Ok(reports)
}

/// `h_λ² = c·h_λ`: `c` measured, compared with `|W|(λ,λ)/dim V`, with the
/// `dim²` variant recorded as the printed value.
pub fn square_constant(alg: &GroupAlgebra<'_>, lambda: &Weight) -> RunResult<Report> {
    let d = alg.datum();
    let h = alg.schur_element(lambda)?;
    let sq = alg.convolve(&h, &h);
    let e = alg.group().identity();
    let c = sq.coeff(e) / h.coeff(e);
    let exact = sq == h.scale(&c);
    let norm = d.pairing(lambda, lambda)?;
    let expected = alg.averaging_constant() * &norm;
    let dim = BigInt::from(d.rank());
    let printed = Rational::from_integer(BigInt::from(alg.order())) * &norm / (&dim * &dim);
    let mut r = Report::new(format!("square constant {} ({lambda})", d.lie_type()));
    r.push(Check::equal("h_λ² is a scalar multiple of h_λ", format!("c = {c}"), exact));
    r.push(Check::expect_with_published(
        "h_λ² = (|W|(λ,λ)/dim V)·h_λ",
        c,
        expected,
        Some(printed),
    ));
    Ok(r)
}

pub fn composition(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let fw = fundamentals(ctx.datum);
    pairs(fw.len(), false)
        .par_iter()
        .map(|&(i, j)| Ok(verify_composition(&fw[i], &fw[j], ctx.datum)?))
        .collect()
}

pub fn polarization(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let fw = fundamentals(ctx.datum);
    pairs(fw.len(), true)
        .par_iter()
        .map(|&(i, j)| Ok(verify_polarization_pullback(&fw[i], &fw[j], ctx.datum)?))
        .collect()
}

/// Trace vanishing, transpose duality, Gram rank and eigenvalues, `N = s₁s₂`.
pub fn trace(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let d = ctx.datum;
    let fw = fundamentals(d);
    let mut reports = Vec::new();
    let mut gram = Report::new(format!("gram {}", d.lie_type()));
    for w in &fw {
        let g = schur_matrix(w, w, d, &BigInt::one())?;
        gram.push(Check::expect(
            format!("rank G = dim V, λ = ({w})"),
            Rational::from_integer(BigInt::from(g.entries().rank())),
            Rational::from_integer(BigInt::from(d.rank())),
        ));
        let k = distinguished_scale(w, w, d)?;
        let s = scaled_eigenvalue(w, d, &k)?;
        let gk = g.entries().scale(&Rational::from_integer(k));
        gram.push(Check::equal(
            format!("G² = s_λ·G under the scale of (λ,λ), λ = ({w})"),
            format!("s = {s}"),
            gk.mul(&gk) == gk.scale(&s),
        ));
    }
    reports.push(gram);
    let per_pair: RunResult<Vec<Report>> = pairs(fw.len(), true)
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&fw[i], &fw[j]);
            let mut r = Report::new(format!("trace {} ({a}) ({b})", d.lie_type()));
            let s12 = schur_matrix(a, b, d, &BigInt::one())?;
            let s21 = schur_matrix(b, a, d, &BigInt::one())?;
            let t_left = trace_matrix(b, b, d)?;
            let t_right = trace_matrix(a, a, d)?;
            r.push(Check::equal("T·S₁₂ = 0", "exact", t_left.entries().mul(s12.entries()).is_zero()));
            r.push(Check::equal("S₁₂·T = 0", "exact", s12.entries().mul(t_right.entries()).is_zero()));
            r.push(Check::equal("S₂₁ = S₁₂ᵀ", "exact", *s21.entries() == s12.entries().transpose()));
            let data = exponent_data(a, b, d)?;
            r.push(Check::expect("N = s₁·s₂", &data.s1 * &data.s2, data.n.clone()));
            let k = Rational::from_integer(distinguished_scale(a, b, d)?);
            let g1 = schur_matrix(a, a, d, &BigInt::one())?;
            let gk = g1.entries().scale(&k);
            r.push(Check::equal(
                format!("G₁² = s₁·G₁ under the pair scale, s₁ = {}", data.s1),
                "exact",
                gk.mul(&gk) == gk.scale(&data.s1),
            ));
            Ok(r)
        })
        .collect();
    reports.extend(per_pair?);
    Ok(reports)
}

/// γ identity on random pairs, evaluation scalars on fundamental pairs.
pub fn gamma(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let alg = ctx.algebra()?;
    let d = ctx.datum;
    let mut rng = rng_for(d, 2);
    let random: Vec<(Weight, Weight)> =
        (0..RANDOM_PAIRS).map(|_| (random_weight(&mut rng, d.rank()), random_weight(&mut rng, d.rank()))).collect();
    let mut reports: Vec<Report> =
        random.par_iter().map(|(l, m)| Ok(gamma_identity(&alg, l, m)?)).collect::<RunResult<Vec<_>>>()?;
    let fw = fundamentals(d);
    let evals: RunResult<Vec<Report>> = pairs(fw.len(), false)
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&fw[i], &fw[j]);
            let mut r = Report::new(format!("evaluation {} ({a}) ({b})", d.lie_type()));
            if d.pairing(a, b)?.is_zero() {
                r.push(Check::equal("(λ,μ) = 0: evaluation scalar undefined", "skipped", true));
                return Ok(r);
            }
            let data = exponent_data(a, b, d)?;
            let c12 = evaluation_scalar(&alg, a, b)?;
            let c21 = evaluation_scalar(&alg, b, a)?;
            r.push(Check::expect("Δ_{λ,μ}∘ẽv_λ = s_λ·ẽv_μ", c12.clone(), data.s1.clone()));
            r.push(Check::expect("Δ_{μ,λ}∘ẽv_μ = s_μ·ẽv_λ", c21.clone(), data.s2.clone()));
            r.push(Check::expect("c(λ,μ)·c(μ,λ) = N", c12 * c21, data.n));
            Ok(r)
        })
        .collect();
    reports.extend(evals?);
    Ok(reports)
}

/// Orbit lattices of fundamental weights and simple roots: certified SNF,
/// quotient exponent, and the δ/ẽv relations on small groups.
pub fn snf(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let d = ctx.datum;
    let mut weights = fundamentals(d);
    for i in 1..=d.rank() {
        weights.push(d.simple_root(i)?);
    }
    let mut reports: Vec<Report> = weights
        .par_iter()
        .map(|w| {
            let gens = orbit_lattice(w, d)?.generators;
            let snf = smith_normal_form(&gens);
            let m = quotient_exponent(w, d)?;
            let mut r = Report::new(format!("snf {} ({w})", d.lie_type()));
            r.push(Check::equal("U·A·V = D, unimodular U and V, divisibility chain", format!("factors {:?}", snf.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>()), snf.verify(&gens)));
            r.push(Check::expect(
                "exponent from the full orbit matrix equals the Hermite-basis exponent",
                Rational::from_integer(snf.exponent()),
                Rational::from_integer(m),
            ));
            Ok(r)
        })
        .collect::<RunResult<Vec<_>>>()?;
    if ctx.group.order() <= DELTA_LIMIT {
        let alg = ctx.algebra()?;
        for i in 1..=d.rank() {
            let w = Weight::fundamental(i, d.rank())?;
            reports.push(delta_inverse_relation(&alg, &w, &d.simple_root(i)?)?);
        }
    }
    Ok(reports)
}

/// Chain law on all ordered triples of fundamental weights, plus the
/// orthogonal case.
pub fn chain(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let alg = ctx.algebra()?;
    let d = ctx.datum;
    let fw = fundamentals(d);
    let n = fw.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect();
    let mut reports: Vec<Report> = triples
        .par_iter()
        .map(|&(i, j, k)| Ok(verify_chain(Some(&alg), d, &fw[i], &fw[j], &fw[k])?))
        .collect::<RunResult<Vec<_>>>()?;
    if n >= 2 {
        let basis = d.orthogonal_weight_basis();
        reports.push(verify_chain(Some(&alg), d, &basis[0], &basis[1], &basis[0])?);
    }
    Ok(reports)
}

/// Full-cover composite `N₂RP₁` against the Schur matrix, all ordered pairs.
pub fn pushforward(ctx: &Context<'_>) -> RunResult<Vec<Report>> {
    let alg = ctx.algebra()?;
    let d = ctx.datum;
    let fw = fundamentals(d);
    let mut reports: Vec<Report> = pairs(fw.len(), true)
        .par_iter()
        .map(|&(i, j)| Ok(verify_pushforward(&alg, &fw[i], &fw[j])?))
        .collect::<RunResult<Vec<_>>>()?;
    if fw.len() >= 2 {
        let basis = d.orthogonal_weight_basis();
        let (scalar, _) = relate_pushforward(&alg, &basis[0], &basis[1])?;
        let mut r = verify_pushforward(&alg, &basis[0], &basis[1])?;
        r.push(Check::expect("λ₁ ⊥ λ₂: the pushforward scalar is 0", scalar, Rational::zero()));
        reports.push(r);
    }
    Ok(reports)
}
