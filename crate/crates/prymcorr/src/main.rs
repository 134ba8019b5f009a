use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use prymcorr::export::{DatumExport, MatrixExport, OrbitExport, SnfExport, VerifyExport};
use prymcorr::output::{csv_line, emit, to_json, Format};
use prymcorr::suites::{self, Context, Suite};
use prymcorr::{check_group_cap, parse_type, parse_weight, table, RunError, RunResult, MAX_GROUP_ORDER_ENV};
use prymcorr_core::correspondence::{exponent_data, kanev_matrix, schur_matrix, trace_matrix};
use prymcorr_core::lattice::{orbit_lattice, quotient_exponent, smith_normal_form};
use prymcorr_core::linalg::fmt_pq;
use prymcorr_core::weyl::weight_orbit_capped;
use prymcorr_core::{Report, RootDatum, DEFAULT_MAX_DENSE_ORBIT, DEFAULT_MAX_GROUP_ORDER};

/// Exact Weyl-orbit correspondences, exponent tables and verification suites.
#[derive(Debug, Parser)]
#[command(name = "prymcorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Lie family: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Cap on |W| for anything that enumerates the group.
    #[arg(long, env = MAX_GROUP_ORDER_ENV, default_value_t = DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Kanev,
    Schur,
    Trace,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, root lengths and the form on fundamental weights.
    Datum(Common),
    /// Orbit of a weight with witness words.
    Orbit {
        #[command(flatten)]
        common: Common,
        /// Comma-separated coordinates, or wI for the I-th fundamental weight.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Exponent N for a pair of weights.
    Exponent {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
        /// Exit 1 unless N equals this value.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        expect: Option<BigInt>,
    },
    /// N for every pair of fundamental weights, flagged against printed values.
    ExponentTable(Common),
    /// Run verification suites; exit 0 iff every check passes.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Smith normal form of the orbit lattice of a weight.
    Snf {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Export a correspondence matrix between two orbits.
    DeltaExport {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
        #[arg(long, value_enum, default_value_t = Kind::Kanev)]
        kind: Kind,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("prymcorr: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn datum_of(c: &Common) -> RunResult<RootDatum> {
    parse_type(&c.family, c.rank)
}

fn unsupported(c: &Common, what: &str) -> RunResult<()> {
    Err(RunError::Invalid(format!("{what} has no {:?} output", c.format).to_lowercase()))
}

fn run(cmd: Command) -> RunResult<()> {
    match cmd {
        Command::Datum(c) => {
            let d = datum_of(&c)?;
            let e = DatumExport::new(&d);
            let text = match c.format {
                Format::Json => to_json(&e),
                Format::Csv => {
                    let mut s = csv_line(&["i".into(), "j".into(), "cartan".into(), "form".into()]);
                    for i in 0..e.rank {
                        for j in 0..e.rank {
                            s.push_str(&csv_line(&[(i + 1).to_string(), (j + 1).to_string(), e.cartan[i][j].to_string(), e.gram[i][j].clone()]));
                        }
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{} |W| = {}\n{}\ncartan:\n", e.lie_type, e.weyl_order, e.normalization);
                    for row in &e.cartan {
                        s.push_str(&format!("  {}\n", row.iter().map(|x| format!("{x:>3}")).collect::<String>()));
                    }
                    s.push_str(&format!("root lengths: {}\nform on fundamental weights:\n", e.root_lengths.join(" ")));
                    for row in &e.gram {
                        s.push_str(&format!("  {}\n", row.join(" ")));
                    }
                    s
                }
            };
            emit(&text, c.out.as_deref())
        }
        Command::Orbit { common: c, weight } => {
            let d = datum_of(&c)?;
            let w = parse_weight(&weight, &d)?;
            let o = weight_orbit_capped(&w, &d, DEFAULT_MAX_DENSE_ORBIT)?;
            let e = OrbitExport::new(&d, &o);
            let text = match c.format {
                Format::Json => to_json(&e),
                Format::Csv => {
                    let mut s = csv_line(&["index".into(), "point".into(), "witness".into()]);
                    for (i, (label, word)) in e.labels.iter().zip(&e.witnesses).enumerate() {
                        let word: Vec<String> = word.iter().map(|a| a.to_string()).collect();
                        s.push_str(&csv_line(&[i.to_string(), label.clone(), word.join(" ")]));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("orbit of ({w}) in {}: {} points, stabilizer order {}\n", e.lie_type, e.size, e.stabilizer_order);
                    for label in &e.labels {
                        s.push_str(&format!("  ({label})\n"));
                    }
                    s
                }
            };
            emit(&text, c.out.as_deref())
        }
        Command::Exponent { common: c, w1, w2, expect } => {
            let d = datum_of(&c)?;
            let a = parse_weight(&w1, &d)?;
            let b = parse_weight(&w2, &d)?;
            let data = exponent_data(&a, &b, &d)?;
            let fields: Vec<(&str, String)> = vec![
                ("type", d.lie_type().to_string()),
                ("w1", a.to_string()),
                ("w2", b.to_string()),
                ("scale", data.scale.to_string()),
                ("stab1", data.stab1.to_string()),
                ("stab2", data.stab2.to_string()),
                ("norm1", fmt_pq(&data.norm1)),
                ("norm2", fmt_pq(&data.norm2)),
                ("s1", fmt_pq(&data.s1)),
                ("s2", fmt_pq(&data.s2)),
                ("n", fmt_pq(&data.n)),
            ];
            let text = match c.format {
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> =
                        fields.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(v.clone()))).collect();
                    to_json(&map)
                }
                Format::Csv => {
                    csv_line(&fields.iter().map(|(k, _)| k.to_string()).collect::<Vec<_>>())
                        + &csv_line(&fields.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>())
                }
                Format::Text => fields.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
            };
            emit(&text, c.out.as_deref())?;
            if let Some(e) = expect {
                if !data.n.is_integer() || data.n.to_integer() != e {
                    return Err(RunError::Verification(format!("N = {} but expected {e}", data.n)));
                }
            }
            Ok(())
        }
        Command::ExponentTable(c) => {
            let d = datum_of(&c)?;
            let brute = check_group_cap(&d, c.max_group_order).is_ok();
            let rows = table::exponent_table(&d, brute)?;
            let text = match c.format {
                Format::Json => to_json(&rows),
                Format::Csv => table::to_csv(&rows),
                Format::Text => table::to_text(&d, &rows),
            };
            emit(&text, c.out.as_deref())?;
            if rows.iter().all(|r| r.brute_ok()) {
                Ok(())
            } else {
                Err(RunError::Verification("brute-force composition disagrees with the formula".into()))
            }
        }
        Command::Verify { common: c, suite } => {
            let d = datum_of(&c)?;
            let ctx = Context::new(&d, c.max_group_order)?;
            let reports = suites::run(&ctx, &[suite])?;
            let names: Vec<String> = suite.expand().iter().map(|s| s.name().to_string()).collect();
            let export = VerifyExport::new(&d, &names, &reports);
            let text = match c.format {
                Format::Json => to_json(&export),
                Format::Csv => verify_csv(&export),
                Format::Text => verify_text(&export),
            };
            emit(&text, c.out.as_deref())?;
            if reports.iter().all(Report::passed) {
                Ok(())
            } else {
                Err(RunError::Verification(format!("{} of {} checks failed", export.failures, export.total)))
            }
        }
        Command::Snf { common: c, weight } => {
            let d = datum_of(&c)?;
            let w = parse_weight(&weight, &d)?;
            weight_orbit_capped(&w, &d, DEFAULT_MAX_DENSE_ORBIT)?;
            let gens = orbit_lattice(&w, &d)?.generators;
            let snf = smith_normal_form(&gens);
            let m = quotient_exponent(&w, &d)?;
            let e = SnfExport::new(&d, &w, &gens, &snf, &m);
            let text = match c.format {
                Format::Json => to_json(&e),
                Format::Text => format!(
                    "orbit lattice of ({w}) in {}: factors {}, exponent {}, verified {}\n",
                    e.lie_type,
                    snf.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "),
                    m,
                    e.verified
                ),
                Format::Csv => return unsupported(&c, "snf"),
            };
            emit(&text, c.out.as_deref())?;
            if e.verified {
                Ok(())
            } else {
                Err(RunError::Verification("Smith normal form did not re-verify".into()))
            }
        }
        Command::DeltaExport { common: c, w1, w2, kind } => {
            let d = datum_of(&c)?;
            let a = parse_weight(&w1, &d)?;
            let b = parse_weight(&w2, &d)?;
            let m = match kind {
                Kind::Kanev => kanev_matrix(&a, &b, &d)?,
                Kind::Schur => schur_matrix(&a, &b, &d, &BigInt::from(1))?,
                Kind::Trace => trace_matrix(&a, &b, &d)?,
            };
            let e = MatrixExport::new(&d, &m);
            let text = match c.format {
                Format::Json => to_json(&e),
                Format::Csv => {
                    let mut header = vec![String::from("row")];
                    header.extend(e.col_labels.iter().cloned());
                    let mut s = csv_line(&header);
                    for (label, row) in e.row_labels.iter().zip(&e.entries) {
                        let mut line = vec![label.clone()];
                        line.extend(row.iter().cloned());
                        s.push_str(&csv_line(&line));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{} {}x{} scale {} shift {}\n", e.kind, e.rows, e.cols, e.scale, e.shift);
                    for row in &e.entries {
                        s.push_str(&format!("  {}\n", row.join(" ")));
                    }
                    s
                }
            };
            emit(&text, c.out.as_deref())
        }
    }
}

fn verify_csv(e: &VerifyExport) -> String {
    let mut s = csv_line(&["report", "claim", "computed", "expected", "paper_value", "verdict"].map(String::from));
    for c in &e.checks {
        s.push_str(&csv_line(&[
            c.report.clone(),
            c.claim.clone(),
            c.computed.clone(),
            c.expected.clone(),
            c.paper_value.clone().unwrap_or_default(),
            c.verdict.to_string(),
        ]));
    }
    s
}

fn verify_text(e: &VerifyExport) -> String {
    let mut s = format!("{} suites: {}\n", e.lie_type, e.suites.join(", "));
    for c in &e.checks {
        s.push_str(&format!("{:<9} {} | {}: {}", c.verdict.to_uppercase(), c.report, c.claim, c.computed));
        if let Some(p) = &c.paper_value {
            s.push_str(&format!(" (printed {p})"));
        }
        s.push('\n');
    }
    s.push_str(&format!(
        "{} checks, {} failed, {} divergent from printed values\n",
        e.total,
        e.failures,
        e.errata.len()
    ));
    s
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("not an integer: {s}"))
}
