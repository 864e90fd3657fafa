//! `cliquekit`: clique polynomials, incidence matrices, identity checks and
//! seeded conjecture campaigns from the command line.
//!
//! Exit codes: 0 success, 1 a theorem-class check failed, 2 bad input or usage.

mod input;
mod range;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clique_core::campaign::{run_campaign, CampaignConfig, CampaignReport};
use clique_core::catalog::{run_check, CheckClass, CheckId, Outcome, ParamSelection};
use clique_core::incidence::{build_matrix, IncidenceMatrix, MatrixKind};
use clique_core::{clique_polynomial, random_gnp, to_graph6, CliqueError, IdentityReport, RngSpec};
use serde::Serialize;
use thiserror::Error;

use input::GraphInput;
use range::{parse_range, parse_usize_range};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CliqueError),
    #[error("cannot read {0}: {1}")]
    Io(String, #[source] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "cliquekit",
    version,
    about = "Exact clique polynomials and clique-counting identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the clique polynomial coefficients and the clique number.
    Poly {
        #[command(flatten)]
        input: GraphInput,
        /// Print (1/k!) times the k-th derivative instead.
        #[arg(long, value_name = "K")]
        derivative: Option<usize>,
        /// Print the reversed polynomial sum_k c_k x^(n-k).
        #[arg(long, conflicts_with = "derivative")]
        reversed: bool,
        /// Add the constant 1 to the reversed polynomial.
        #[arg(long, requires = "reversed")]
        with_unit: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export a clique incidence matrix with its row and column sums.
    Matrix {
        #[command(flatten)]
        input: GraphInput,
        /// super, vdeck, edeck or tdeck.
        #[arg(long)]
        kind: MatrixKind,
        /// Clique order of the rows.
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Evaluate identities and conjectures on one graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated check ids (repeatable).
        #[arg(long = "identity", value_name = "ID[,ID]")]
        identity: Vec<String>,
        /// Every theorem-class check.
        #[arg(long)]
        all_theorems: bool,
        /// Every conjecture-class check.
        #[arg(long)]
        all_conjectures: bool,
        /// Fix the clique order instead of sweeping it.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        vertex: Option<usize>,
        /// Edge as "u-v".
        #[arg(long)]
        edge: Option<String>,
        /// Triangle as "a-b-c".
        #[arg(long)]
        triangle: Option<String>,
        /// Clique whose edges are deleted in the clique-deletion expansion, as "a-b-...".
        #[arg(long)]
        clique: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a seeded campaign over random G(n, p) graphs.
    Fuzz {
        /// Vertex-count range "A..B" (inclusive).
        #[arg(long = "n", default_value = "4..10")]
        n: String,
        /// Edge-probability range "X..Y".
        #[arg(long = "p", default_value = "0.2..0.8")]
        p: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated check ids, or all, all-theorems, all-conjectures.
        #[arg(long)]
        check: String,
        /// Restrict order sweeps to "A..B".
        #[arg(long = "k")]
        k: Option<String>,
        #[arg(long)]
        shrink: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the graph6 string of a seeded G(n, p) sample.
    Gen { n: usize, p: f64, seed: u64 },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        Command::Poly {
            input,
            derivative,
            reversed,
            with_unit,
            json,
        } => cmd_poly(&mut out, &input, derivative, reversed, with_unit, json),
        Command::Matrix {
            input,
            kind,
            k,
            format,
        } => cmd_matrix(&mut out, &input, kind, k, format),
        Command::Verify {
            input,
            identity,
            all_theorems,
            all_conjectures,
            k,
            vertex,
            edge,
            triangle,
            clique,
            json,
        } => {
            let checks = select_checks(&identity, all_theorems, all_conjectures)?;
            let sel = ParamSelection {
                k,
                vertex,
                edge: edge.as_deref().map(parse_pair).transpose()?,
                triangle: triangle.as_deref().map(parse_triple).transpose()?,
                clique: clique.as_deref().map(parse_tuple).transpose()?,
                k_range: None,
            };
            cmd_verify(&mut out, &input, &checks, &sel, json)
        }
        Command::Fuzz {
            n,
            p,
            count,
            seed,
            check,
            k,
            shrink,
            json,
        } => {
            let mut cfg = CampaignConfig::new(CheckId::parse_list(&check)?, seed);
            cfg.n_range = parse_usize_range(&n)?;
            cfg.p_range = parse_range(&p)?;
            cfg.samples = count;
            cfg.shrink = shrink;
            cfg.k_range = k.as_deref().map(parse_usize_range).transpose()?;
            cmd_fuzz(&mut out, &cfg, json)
        }
        Command::Gen { n, p, seed } => {
            let g = random_gnp(n, p, RngSpec::new(seed))?;
            writeln!(out, "{}", to_graph6(&g)).map_err(stdout_err)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn stdout_err(e: io::Error) -> CliError {
    CliError::Io("stdout".into(), e)
}

fn cmd_poly(
    out: &mut impl Write,
    input: &GraphInput,
    derivative: Option<usize>,
    reversed: bool,
    with_unit: bool,
    json: bool,
) -> Result<ExitCode, CliError> {
    let g = input.load()?;
    let cp = clique_polynomial(&g)?;
    let (what, poly) = match derivative {
        Some(k) => ("derivative", cp.normalized_derivative(k)?),
        None if reversed => ("reversed", cp.reverse(g.n(), with_unit)?),
        None => ("clique_polynomial", cp.to_poly()?),
    };
    if json {
        #[derive(Serialize)]
        struct PolyOut<'a> {
            graph6: String,
            n: usize,
            m: usize,
            omega: usize,
            kind: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            order: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            include_unit: Option<bool>,
            coeffs: &'a [i128],
        }
        let doc = PolyOut {
            graph6: to_graph6(&g),
            n: g.n(),
            m: g.m(),
            omega: cp.degree(),
            kind: what,
            order: derivative,
            include_unit: reversed.then_some(with_unit),
            coeffs: poly.coeffs(),
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
    } else {
        writeln!(out, "{}", poly.coeff_string())
            .and_then(|_| writeln!(out, "omega {}", cp.degree()))
    }
    .map_err(stdout_err)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_matrix(
    out: &mut impl Write,
    input: &GraphInput,
    kind: MatrixKind,
    k: usize,
    format: MatrixFormat,
) -> Result<ExitCode, CliError> {
    let g = input.load()?;
    let m = build_matrix(&g, kind, k)?;
    match format {
        MatrixFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&m).expect("serializable")
            )
            .map_err(stdout_err)?;
        }
        MatrixFormat::Csv => write_matrix_csv(out, &m)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Dense matrix with a trailing `row_sum` column and `col_sum` row, then the
/// two double-count totals on their own lines.
fn write_matrix_csv(out: &mut impl Write, m: &IncidenceMatrix) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    let row_sums = m.row_sums();
    let col_sums = m.col_sums();
    let (by_rows, by_cols) = m.double_count();
    for (i, mut rec) in m.dense_records().into_iter().enumerate() {
        rec.push(match i {
            0 => "row_sum".to_string(),
            _ => row_sums[i - 1].to_string(),
        });
        w.write_record(&rec)?;
    }
    let mut last = vec!["col_sum".to_string()];
    last.extend(col_sums.iter().map(u128::to_string));
    last.push(by_rows.to_string());
    w.write_record(&last)?;
    w.write_record(["total_by_rows", &by_rows.to_string()])?;
    w.write_record(["total_by_cols", &by_cols.to_string()])?;
    w.flush().map_err(stdout_err)?;
    Ok(())
}

fn select_checks(
    ids: &[String],
    theorems: bool,
    conjectures: bool,
) -> Result<Vec<CheckId>, CliError> {
    let mut checks = Vec::new();
    for list in ids {
        checks.extend(CheckId::parse_list(list)?);
    }
    if theorems {
        checks.extend(CheckId::theorems());
    }
    if conjectures {
        checks.extend(CheckId::conjectures());
    }
    if checks.is_empty() {
        return Err(CliError::Usage(
            "no checks selected; pass --identity, --all-theorems or --all-conjectures".into(),
        ));
    }
    checks.sort();
    checks.dedup();
    Ok(checks)
}

fn parse_tuple(s: &str) -> Result<Vec<usize>, CliError> {
    s.split('-')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?} in {s:?}")))
        })
        .collect()
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    match parse_tuple(s)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(CliError::Usage(format!(
            "expected an edge \"u-v\", got {s:?}"
        ))),
    }
}

fn parse_triple(s: &str) -> Result<[usize; 3], CliError> {
    match parse_tuple(s)?[..] {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(CliError::Usage(format!(
            "expected a triangle \"a-b-c\", got {s:?}"
        ))),
    }
}

#[derive(Serialize)]
struct Skipped {
    identity: &'static str,
    reason: String,
}

#[derive(Serialize)]
struct VerifyOut {
    graph6: String,
    reports: Vec<IdentityReport>,
    inapplicable: Vec<Skipped>,
    theorem_failures: usize,
}

fn cmd_verify(
    out: &mut impl Write,
    input: &GraphInput,
    checks: &[CheckId],
    sel: &ParamSelection,
    json: bool,
) -> Result<ExitCode, CliError> {
    let g = input.load()?;
    let mut doc = VerifyOut {
        graph6: to_graph6(&g),
        reports: Vec::new(),
        inapplicable: Vec::new(),
        theorem_failures: 0,
    };
    for &check in checks {
        for outcome in run_check(check, &g, sel)? {
            match outcome {
                Outcome::Report(r) => {
                    if !r.holds && check.class() == CheckClass::Theorem {
                        doc.theorem_failures += 1;
                    }
                    doc.reports.push(r);
                }
                Outcome::Inapplicable(reason) => doc.inapplicable.push(Skipped {
                    identity: check.as_str(),
                    reason,
                }),
            }
        }
    }
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
        .map_err(stdout_err)?;
    } else {
        for r in &doc.reports {
            writeln!(out, "{}", r.summary()).map_err(stdout_err)?;
        }
        for s in &doc.inapplicable {
            writeln!(
                out,
                "{} {}: not applicable ({})",
                s.identity, doc.graph6, s.reason
            )
            .map_err(stdout_err)?;
        }
        let failed = doc.reports.iter().filter(|r| !r.holds).count();
        writeln!(
            out,
            "{} reports, {} do not hold, {} theorem failures",
            doc.reports.len(),
            failed,
            doc.theorem_failures
        )
        .map_err(stdout_err)?;
    }
    Ok(if doc.theorem_failures > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn theorem_alarm(report: &CampaignReport) -> bool {
    report.theorem_failures() > 0
        || report
            .errors
            .iter()
            .any(|e| e.check.parse::<CheckId>().is_ok_and(CheckId::is_theorem))
}

fn cmd_fuzz(out: &mut impl Write, cfg: &CampaignConfig, json: bool) -> Result<ExitCode, CliError> {
    let report = run_campaign(cfg)?;
    if json {
        writeln!(out, "{}", report.to_json()).map_err(stdout_err)?;
    } else {
        write_campaign_text(out, &report).map_err(stdout_err)?;
    }
    Ok(if theorem_alarm(&report) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn write_campaign_text(out: &mut impl Write, r: &CampaignReport) -> io::Result<()> {
    let c = &r.config;
    writeln!(
        out,
        "campaign seed={} samples={} n={}..{} p={}..{} rng={}",
        c.rng.seed, c.samples, c.n_range.0, c.n_range.1, c.p_range.0, c.p_range.1, r.rng_algorithm
    )?;
    writeln!(
        out,
        "{:<32} {:<10} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "check", "class", "graphs", "holds", "fails", "n/a", "errors"
    )?;
    for t in &r.tallies {
        let class = match t.class {
            Some(CheckClass::Theorem) => "theorem",
            Some(CheckClass::Conjecture) => "conjecture",
            None => "-",
        };
        writeln!(
            out,
            "{:<32} {:<10} {:>6} {:>6} {:>6} {:>6} {:>6}",
            t.check, class, t.graphs_tested, t.holds, t.fails, t.inapplicable, t.errors
        )?;
    }
    writeln!(out, "counterexamples: {}", r.counterexamples.len())?;
    for cx in &r.counterexamples {
        writeln!(out, "  #{} {}", cx.sample, cx.report.summary())?;
    }
    if c.shrink {
        writeln!(out, "shrunk: {}", r.shrunk.len())?;
        for s in &r.shrunk {
            writeln!(
                out,
                "  #{} {} -> n={} m={}: {}",
                s.sample,
                s.original_graph6,
                s.n,
                s.m,
                s.report.summary()
            )?;
        }
    }
    for e in &r.errors {
        writeln!(
            out,
            "error #{} {} {}: {}",
            e.sample, e.check, e.graph6, e.message
        )?;
    }
    writeln!(out, "theorem failures: {}", r.theorem_failures())
}
