//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL` line before asserting.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use prymcorr::suites::{self, random_weight, rng_for, Context, Suite, RANDOM_TUPLES};
use prymcorr::table::exponent_table;
use prymcorr_core::correspondence::{composite_exponent, distinguished_scale, exponent_n, schur_matrix};
use prymcorr_core::lattice::{orbit_lattice, quotient_exponent, smith_normal_form};
use prymcorr_core::tabulated::{binomial, tabulated_exponent};
use prymcorr_core::weyl::enumerate_group;
use prymcorr_core::{Family, GroupAlgebra, LieType, Rational, Report, RootDatum, Weight};

const CRITERION_1_BUDGET: Duration = Duration::from_secs(10);
const CRITERION_6_BUDGET: Duration = Duration::from_secs(1);
const BRUTE_RANGE: u64 = 2000;
const ALGEBRA_RANGE: u64 = 1152;

fn datum(f: Family, r: usize) -> RootDatum {
    RootDatum::new(LieType::new(f, r).unwrap())
}

fn fw(i: usize, r: usize) -> Weight {
    Weight::fundamental(i, r).unwrap()
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// A₁..A₈, B₂..B₈, C₂..C₈, D₄..D₈, G₂, F₄ with `|W|` at most `max`.
fn types_up_to(max: u64) -> Vec<RootDatum> {
    let mut out = Vec::new();
    let ranges = [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4), (Family::G, 2), (Family::F, 4)];
    for (f, lo) in ranges {
        for r in lo..=8 {
            let Ok(t) = LieType::new(f, r) else { continue };
            let d = RootDatum::new(t);
            if d.weyl_order() <= max as u128 {
                out.push(d);
            }
        }
    }
    out
}

fn report_failures(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failures().map(move |c| format!("{} | {}: {} vs {}", r.name, c.claim, c.computed, c.expected)))
        .collect()
}

fn conclude(n: u32, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict}");
    for f in failures.iter().take(20) {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "criterion {n}: {} failure(s)", failures.len());
}

fn run_suites(types: &[RootDatum], which: &[Suite]) -> Vec<String> {
    types
        .par_iter()
        .flat_map(|d| {
            let ctx = Context::new(d, BRUTE_RANGE).unwrap();
            report_failures(&suites::run(&ctx, which).unwrap())
        })
        .collect()
}

#[test]
fn criterion_01_type_a_table() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=6u64 {
        let d = datum(Family::A, n as usize);
        for k in 1..=n {
            for l in 1..=n {
                let got = exponent_n(&fw(k as usize, n as usize), &fw(l as usize, n as usize), &d).unwrap();
                let want = binomial(n - 1, k - 1) * binomial(n - 1, l - 1);
                if got != want {
                    failures.push(format!("A{n} ({k},{l}): {got} vs {want}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= CRITERION_1_BUDGET {
        failures.push(format!("runtime {elapsed:?}"));
    }
    conclude(1, &failures);
}

#[test]
fn criterion_02_type_b_non_spin() {
    let mut failures = Vec::new();
    for l in 2..=5u64 {
        let d = datum(Family::B, l as usize);
        for i in 1..l {
            for j in 1..l {
                let got = exponent_n(&fw(i as usize, l as usize), &fw(j as usize, l as usize), &d).unwrap();
                let want = pow2(i + j) * binomial(l - 1, i - 1) * binomial(l - 1, j - 1);
                if got != want {
                    failures.push(format!("B{l} ({i},{j}): {got} vs {want}"));
                }
            }
        }
    }
    conclude(2, &failures);
}

/// Fails on the `(l,l)` cells: the long-root weight `ϖ_l` already pairs
/// integrally with its orbit, so the minimal scale there is 1 and
/// `N = 2^{2l−2}`, a quarter of the tabulated value.
#[test]
fn criterion_03_type_c() {
    let mut failures = Vec::new();
    for l in 2..=5u64 {
        let d = datum(Family::C, l as usize);
        for i in 1..=l {
            for j in 1..=l {
                let (a, b) = (fw(i as usize, l as usize), fw(j as usize, l as usize));
                let k = distinguished_scale(&a, &b, &d).unwrap();
                let got = exponent_n(&a, &b, &d).unwrap();
                let want = pow2(i + j) * binomial(l - 1, i - 1) * binomial(l - 1, j - 1);
                if k != BigInt::from(2) || got != want {
                    failures.push(format!("C{l} ({i},{j}): k = {k}, N = {got}; expected k = 2, N = {want}"));
                }
            }
        }
    }
    conclude(3, &failures);
}

#[test]
fn criterion_04_type_d() {
    let mut failures = Vec::new();
    for l in [4u64, 5] {
        let lu = l as usize;
        let d = datum(Family::D, lu);
        let n = |i: u64, j: u64| exponent_n(&fw(i as usize, lu), &fw(j as usize, lu), &d).unwrap();
        for i in 1..=l - 2 {
            for j in (1..=l - 2).chain([l]) {
                let printed = tabulated_exponent(d.lie_type(), i as usize, j as usize).unwrap();
                if n(i, j) != printed {
                    failures.push(format!("D{l} ({i},{j}): {} vs printed {printed}", n(i, j)));
                }
            }
            let corrected = pow2(l - 3 + i) * binomial(l - 1, i - 1);
            for (a, b) in [(i, l - 1), (l - 1, i)] {
                if n(a, b) != corrected {
                    failures.push(format!("D{l} ({a},{b}): {} vs corrected {corrected}", n(a, b)));
                }
            }
        }
        for (a, b) in [(l - 1, l), (l, l - 1), (l - 1, l - 1), (l, l)] {
            if n(a, b) != pow2(2 * l - 6) {
                failures.push(format!("D{l} ({a},{b}): {} vs corrected {}", n(a, b), pow2(2 * l - 6)));
            }
        }
    }
    let d4 = datum(Family::D, 4);
    let table = exponent_table(&d4, true).unwrap();
    for row in &table {
        if !row.brute_ok() {
            failures.push(format!("D4 ({},{}): brute force disagrees with the formula", row.i, row.j));
        }
        let touches = row.i == 3 || row.j == 3;
        if touches && row.paper_value.is_some() && row.flag != "divergent" {
            failures.push(format!("D4 ({},{}): printed value not flagged", row.i, row.j));
        }
    }
    conclude(4, &failures);
}

#[test]
fn criterion_05_brute_force_composition() {
    let types = types_up_to(BRUTE_RANGE);
    let failures: Vec<String> = types
        .par_iter()
        .flat_map(|d| {
            let r = d.rank();
            let mut out = Vec::new();
            for i in 1..=r {
                for j in i..=r {
                    let (a, b) = (fw(i, r), fw(j, r));
                    let report = prymcorr_core::correspondence::verify_composition(&a, &b, d).unwrap();
                    out.extend(report_failures(&[report]));
                    let brute = composite_exponent(&a, &b, d).unwrap();
                    let formula = Rational::from_integer(exponent_n(&a, &b, d).unwrap());
                    if brute != formula {
                        out.push(format!("{} ({i},{j}): brute {brute} vs formula {formula}", d.lie_type()));
                    }
                }
            }
            out
        })
        .collect();
    println!("  {} types: {}", types.len(), types.iter().map(|d| d.lie_type().to_string()).collect::<Vec<_>>().join(" "));
    conclude(5, &failures);
}

#[test]
fn criterion_06_b2_spin() {
    let start = Instant::now();
    let d = datum(Family::B, 2);
    let brute = composite_exponent(&fw(1, 2), &fw(2, 2), &d).unwrap();
    let table = exponent_table(&d, true).unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    if brute != Rational::from_integer(8.into()) {
        failures.push(format!("brute N = {brute}, expected 8"));
    }
    if tabulated_exponent(d.lie_type(), 1, 2) != Some(BigInt::from(32)) {
        failures.push("printed value is not 32".into());
    }
    match table.iter().find(|r| r.i == 1 && r.j == 2) {
        Some(row) if row.flag == "divergent" => {}
        _ => failures.push("divergence not reported".into()),
    }
    if elapsed >= CRITERION_6_BUDGET {
        failures.push(format!("runtime {elapsed:?}"));
    }
    conclude(6, &failures);
}

#[test]
fn criterion_07_idempotents() {
    conclude(7, &run_suites(&types_up_to(ALGEBRA_RANGE), &[Suite::Idempotents]));
}

#[test]
fn criterion_08_four_linear_constant() {
    let types = types_up_to(ALGEBRA_RANGE);
    let mut failures: Vec<String> = types
        .par_iter()
        .flat_map(|d| {
            let g = enumerate_group(d, ALGEBRA_RANGE).unwrap();
            let alg = GroupAlgebra::new(d, &g, ALGEBRA_RANGE).unwrap();
            let mut rng = rng_for(d, 1);
            let tuples: Vec<[Weight; 4]> =
                (0..RANDOM_TUPLES).map(|_| std::array::from_fn(|_| random_weight(&mut rng, d.rank()))).collect();
            report_failures(&[alg.verify_four_linear(&tuples).unwrap()])
        })
        .collect();

    let d = datum(Family::A, 2);
    let g = enumerate_group(&d, ALGEBRA_RANGE).unwrap();
    let alg = GroupAlgebra::new(&d, &g, ALGEBRA_RANGE).unwrap();
    let h = alg.schur_element(&fw(1, 2)).unwrap();
    let sq = alg.convolve(&h, &h);
    if sq != h.scale(&Rational::from_integer(2.into())) {
        failures.push("A2 witness: h² ≠ 2h".into());
    }
    if sq == h {
        failures.push("A2 witness: the dim² constant unexpectedly holds".into());
    }
    conclude(8, &failures);
}

#[test]
fn criterion_09_structural_identities() {
    let types = types_up_to(ALGEBRA_RANGE);
    let mut failures = run_suites(&types, &[Suite::Trace, Suite::Pushforward]);
    for d in &types {
        let g = enumerate_group(d, ALGEBRA_RANGE).unwrap();
        let r = d.rank();
        for i in 1..=r {
            let w = fw(i, r);
            let gram = schur_matrix(&w, &w, d, &BigInt::one()).unwrap();
            let stab = g.stabilizer(&w).unwrap().len();
            let s = Rational::from_integer(BigInt::from(g.order())) * d.pairing(&w, &w).unwrap()
                / Rational::from_integer(BigInt::from(r * stab));
            let e = gram.entries();
            if e.mul(e) != e.scale(&s) {
                failures.push(format!("{} ϖ{i}: G² ≠ {s}·G", d.lie_type()));
            }
        }
    }
    conclude(9, &failures);
}

#[test]
fn criterion_10_lattice_suite() {
    let types = types_up_to(ALGEBRA_RANGE);
    let mut failures = run_suites(&types, &[Suite::Gamma, Suite::Chain, Suite::Snf]);
    let a1 = datum(Family::A, 1);
    let a2 = datum(Family::A, 2);
    let fixtures = [
        (&a1, Weight::from_ints(&[2]), 2),
        (&a2, fw(1, 2), 1),
        (&a2, a2.simple_root(1).unwrap(), 3),
    ];
    for (d, w, m) in fixtures {
        let gens = orbit_lattice(&w, d).unwrap().generators;
        let snf = smith_normal_form(&gens);
        if !snf.verify(&gens) {
            failures.push(format!("{} ({w}): U·A·V ≠ D", d.lie_type()));
        }
        let got = quotient_exponent(&w, d).unwrap();
        if got != BigInt::from(m) || snf.exponent() != BigInt::from(m) {
            failures.push(format!("{} ({w}): M = {got}, expected {m}", d.lie_type()));
        }
    }
    conclude(10, &failures);
}

#[test]
fn criterion_11_polarization_pullback() {
    conclude(11, &run_suites(&types_up_to(BRUTE_RANGE), &[Suite::Polarization]));
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_prymcorr")).args(args).env_remove("PRYMCORR_MAX_GROUP_ORDER").output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

#[test]
fn criterion_12_determinism_and_exit_codes() {
    let mut failures = Vec::new();
    let args = ["verify", "--suite", "all", "--type", "A", "--rank", "3"];
    let (c1, first) = cli(&args);
    let (c2, second) = cli(&args);
    if first != second || first.is_empty() {
        failures.push("two runs differ".into());
    }
    if (c1, c2) != (0, 0) {
        failures.push(format!("passing run exited with {c1}, {c2}"));
    }
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain");
    std::fs::write(&file, b"").unwrap();
    let blocked = file.join("out.json");
    let blocked = blocked.to_str().unwrap();
    let cases: [(&[&str], i32); 6] = [
        (&["exponent", "--type", "B", "--rank", "2", "--w1", "w1", "--w2", "w2", "--expect", "8"], 0),
        (&["exponent", "--type", "B", "--rank", "2", "--w1", "w1", "--w2", "w2", "--expect", "32"], 1),
        (&["orbit", "--type", "A", "--rank", "2", "--weight", "1,x"], 2),
        (&["orbit", "--type", "A", "--rank", "2", "--weight", "0,0"], 2),
        (&["datum", "--type", "A", "--rank", "2", "--out", blocked], 2),
        (&["verify", "--type", "E", "--rank", "8"], 3),
    ];
    for (args, want) in cases {
        let (got, _) = cli(args);
        if got != want {
            failures.push(format!("{}: exit {got}, expected {want}", args.join(" ")));
        }
    }
    conclude(12, &failures);
}
