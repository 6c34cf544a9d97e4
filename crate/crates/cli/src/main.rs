//! `circletopo`: tables, sequences, listings and self-verification for
//! nested and intersecting circle topologies.
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use circle_topo::expr::{enumerate_family, flip_clusters};
use circle_topo::golden::{self, parse_table};
use circle_topo::intersect::IntersectCounts;
use circle_topo::nested;
use circle_topo::verify::{self, VerifyOptions};
use circle_topo::{Count, FamilyId, Sequence, Table};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

#[derive(Parser)]
#[command(
    name = "circletopo",
    version,
    about = "Count and enumerate circle topologies"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Tsv,
    Json,
    Bfile,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Recurrence table: N, total, then the cells f = 1..N.
    Table {
        /// P, C, kC, M, Mv, X, Xt, X2 or X3.
        family: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Number of shapes for kC.
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// A counting sequence from index 0 (from the first defined index for
    /// X and Xt).
    Seq {
        /// A family name, or D, Dhat, Dbar, Dtilde, envelope, clusters.
        name: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Every canonical expression of a family with N circles.
    Enumerate {
        family: String,
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Nested-circle expressions with N circles grouped by flips.
    Clusters {
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run every consistency check; exit 1 on the first divergence.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Replace a reference table, e.g. `c=path.tsv`.
        #[arg(long = "golden", value_name = "NAME=PATH")]
        golden: Vec<String>,
    },
}

/// Bad input; reported with exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn family(name: &str, k: Option<u32>) -> Result<FamilyId, Usage> {
    let fam = FamilyId::from_str(name)?;
    match (fam, k) {
        (FamilyId::KC(_), Some(0)) => Err(Usage("--k must be at least 1".into())),
        (FamilyId::KC(_), Some(k)) => Ok(FamilyId::KC(k)),
        (FamilyId::KC(_), None) => Err(Usage("kC needs --k".into())),
        (_, Some(_)) => Err(Usage("--k applies to kC only".into())),
        (f, None) => Ok(f),
    }
}

fn num(c: &Count) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("decimal integer"))
}

fn join(values: &[Count], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn render_table(t: &Table, format: Format) -> String {
    let first = t.family().first_index();
    let rows = first..=t.max_n();
    let mut out = String::new();
    match format {
        Format::Csv | Format::Tsv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            for n in rows {
                let mut line = vec![t.row_total(n)];
                line.extend_from_slice(t.row(n));
                let _ = writeln!(out, "{n}{sep}{}", join(&line, sep));
            }
        }
        Format::Bfile => {
            for n in rows {
                let _ = writeln!(out, "{n} {}", t.row_total(n));
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .map(|n| {
                    json!({
                        "n": n,
                        "total": num(&t.row_total(n)),
                        "cells": t.row(n).iter().map(num).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut v = json!({ "family": t.family().name(), "rows": rows });
            if let FamilyId::KC(k) = t.family() {
                v["k"] = json!(k);
            }
            out = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
        }
    }
    out
}

fn render_seq(name: &str, offset: usize, values: &[Count], format: Format) -> String {
    match format {
        Format::Csv => join(values, ",") + "\n",
        Format::Tsv => join(values, "\t") + "\n",
        Format::Bfile => values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{} {v}\n", i + offset))
            .collect(),
        Format::Json => {
            let v = json!({
                "name": name,
                "offset": offset,
                "values": values.iter().map(num).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
    }
}

fn sequence(name: &str, max_n: usize, k: Option<u32>) -> Result<(usize, Vec<Count>), Usage> {
    let prefix = |s: Sequence| s.values()[..=max_n].to_vec();
    let d = || IntersectCounts::<Count>::compute(max_n.max(2)).map(|c| c.d);
    Ok(match name {
        "D" => (0, prefix(d()?.d)),
        "Dhat" => (0, prefix(d()?.d_hat)),
        "Dbar" => (0, prefix(d()?.d_bar)),
        "Dtilde" => (0, prefix(d()?.d_tilde)),
        "envelope" => (0, nested::envelope::<Count>(max_n)?.values().to_vec()),
        "clusters" => {
            let v = (0..=max_n)
                .map(|n| flip_clusters(n).map(|c| Count::from(c.len())))
                .collect::<Result<Vec<_>, _>>()?;
            (0, v)
        }
        _ => match family(name, k)? {
            FamilyId::C => (0, nested::c_series_via_euler::<Count>(max_n)?.into_coeffs()),
            FamilyId::KC(k) => (
                0,
                nested::kc_totals_via_euler::<Count>(k, max_n)?.into_coeffs(),
            ),
            fam => {
                let t = Table::compute(fam, max_n.max(2))?;
                let offset = match fam {
                    FamilyId::X | FamilyId::Xt => fam.first_index(),
                    _ => 0,
                };
                let v = t.totals().values()[..=max_n].to_vec();
                (offset, v.get(offset..).unwrap_or_default().to_vec())
            }
        },
    })
}

fn emit(text: &str, output: &Output) -> Result<(), Usage> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn listing(rows: &[(String, String)], header: [&str; 2], format: Format) -> Result<String, Usage> {
    Ok(match format {
        Format::Csv | Format::Tsv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            rows.iter().map(|(a, b)| format!("{a}{sep}{b}\n")).collect()
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(a, b)| json!({ header[0]: a.parse::<u64>().map(Value::from).unwrap_or(json!(a)), header[1]: b }))
                .collect();
            serde_json::to_string_pretty(&items).expect("serializable") + "\n"
        }
        Format::Bfile => return Err(Usage("bfile output is for sequences and tables".into())),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.cmd {
        Cmd::Table {
            family: name,
            max_n,
            k,
            output,
        } => {
            if max_n == 0 {
                return Err(Usage("--max-n must be at least 1".into()));
            }
            let fam = family(&name, k)?;
            let mut t = Table::compute(fam, max_n.max(fam.first_index()))?;
            if t.max_n() > max_n {
                t = Table::compute(fam, max_n.max(1))?;
            }
            emit(&render_table(&t, output.format), &output)?;
        }
        Cmd::Seq {
            name,
            max_n,
            k,
            output,
        } => {
            let (offset, values) = sequence(&name, max_n, k)?;
            emit(&render_seq(&name, offset, &values, output.format), &output)?;
        }
        Cmd::Enumerate {
            family: name,
            n,
            output,
        } => {
            let fam = family(&name, None)?;
            let e = enumerate_family(fam, n)?;
            let rows: Vec<(String, String)> = e
                .exprs
                .iter()
                .map(|x| (x.factor_count().to_string(), x.to_string()))
                .collect();
            emit(
                &listing(&rows, ["factors", "expr"], output.format)?,
                &output,
            )?;
        }
        Cmd::Clusters { n, output } => {
            let rows: Vec<(String, String)> = flip_clusters(n)?
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.iter().map(move |x| ((i + 1).to_string(), x.to_string())))
                .collect();
            emit(
                &listing(&rows, ["cluster", "expr"], output.format)?,
                &output,
            )?;
        }
        Cmd::Verify {
            max_n,
            golden: overrides,
        } => {
            let mut opts = VerifyOptions {
                max_n,
                ..VerifyOptions::default()
            };
            for o in overrides {
                let (name, path) = o
                    .split_once('=')
                    .ok_or_else(|| Usage(format!("expected NAME=PATH, got {o:?}")))?;
                let slot = opts
                    .tables
                    .iter_mut()
                    .find(|t| t.name == name)
                    .ok_or_else(|| Usage(format!("no reference table named {name:?}")))?;
                let text = fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}")))?;
                let name = golden::tables()
                    .into_iter()
                    .find(|t| t.name == slot.name)
                    .map(|t| t.name)
                    .expect("known table");
                *slot = parse_table(name, slot.family, &text)?;
            }
            let report = verify::run(&opts)?;
            println!("{report}");
            return Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("circletopo: {msg}");
            ExitCode::from(2)
        }
    }
}
