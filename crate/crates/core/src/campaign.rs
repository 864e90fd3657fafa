//! Seeded fuzz campaigns over G(n, p) corpora, with greedy counterexample
//! shrinking.
//!
//! Sample `i` is drawn from one master ChaCha8 stream: `n` uniform in the
//! configured range, then `p` uniform in the configured range, then a 64-bit
//! seed for the graph itself. Graphs are evaluated in parallel but merged in
//! sample order, so reports depend only on the configuration.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{first_failure, run_check, CheckClass, CheckId, Outcome, ParamSelection};
use crate::error::{CliqueError, Result};
use crate::formats::to_graph6;
use crate::graph::{Graph, MAX_VERTICES};
use crate::random::{random_gnp, RngSpec, RNG_ALGORITHM};
use crate::report::IdentityReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub n_range: (usize, usize),
    pub p_range: (f64, f64),
    pub samples: usize,
    pub rng: RngSpec,
    pub checks: Vec<CheckId>,
    pub shrink: bool,
    /// Restricts order-parameterized checks to `lo..=hi`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_range: Option<(usize, usize)>,
    /// Records wall-clock time in the report (makes it non-reproducible).
    #[serde(default)]
    pub record_timing: bool,
}

impl CampaignConfig {
    pub fn new(checks: Vec<CheckId>, seed: u64) -> Self {
        CampaignConfig {
            n_range: (4, 10),
            p_range: (0.2, 0.8),
            samples: 100,
            rng: RngSpec::new(seed),
            checks,
            shrink: false,
            k_range: None,
            record_timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CliqueError::InvalidConfig(m));
        let (n0, n1) = self.n_range;
        let (p0, p1) = self.p_range;
        if n0 > n1 {
            return bad(format!("empty vertex range {n0}..{n1}"));
        }
        if n1 > MAX_VERTICES {
            return bad(format!("vertex range exceeds {MAX_VERTICES}"));
        }
        if !(0.0..=1.0).contains(&p0) || !(0.0..=1.0).contains(&p1) || p0 > p1 {
            return bad(format!("probability range {p0}..{p1} is not within [0, 1]"));
        }
        if self.samples == 0 {
            return bad("sample count must be at least 1".into());
        }
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        if let Some((a, b)) = self.k_range {
            if a > b {
                return bad(format!("empty order range {a}..{b}"));
            }
        }
        Ok(())
    }

    fn selection(&self) -> ParamSelection {
        ParamSelection {
            k_range: self.k_range,
            ..Default::default()
        }
    }
}

/// Per-check aggregate. A graph counts once: as a failure if any parameter
/// instance fails, as inapplicable if the hypothesis excludes it, as an
/// error if evaluation errored, and as holding otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub check: String,
    pub class: Option<CheckClass>,
    pub graphs_tested: usize,
    pub holds: usize,
    pub fails: usize,
    pub inapplicable: usize,
    pub errors: usize,
    pub instances: usize,
    pub failing_instances: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sample: usize,
    pub report: IdentityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrunkCounterexample {
    pub sample: usize,
    pub original_graph6: String,
    pub n: usize,
    pub m: usize,
    pub report: IdentityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationError {
    pub sample: usize,
    pub check: String,
    pub graph6: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub rng_algorithm: String,
    pub tallies: Vec<Tally>,
    /// The first failing instance of each failing (graph, check) pair.
    pub counterexamples: Vec<Counterexample>,
    pub shrunk: Vec<ShrunkCounterexample>,
    pub errors: Vec<EvaluationError>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u128>,
}

impl CampaignReport {
    pub fn theorem_failures(&self) -> usize {
        self.tallies
            .iter()
            .filter(|t| t.class == Some(CheckClass::Theorem))
            .map(|t| t.fails)
            .sum()
    }

    pub fn tally(&self, check: CheckId) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.check == check.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One generated corpus member.
#[derive(Clone, Debug)]
pub struct Sample {
    pub index: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// The corpus a configuration generates, in sample order.
pub fn generate_corpus(cfg: &CampaignConfig) -> Result<Vec<Sample>> {
    cfg.validate()?;
    let mut master = cfg.rng.stream();
    (0..cfg.samples)
        .map(|index| {
            let n = master.range_inclusive(cfg.n_range.0, cfg.n_range.1);
            let p = cfg.p_range.0 + (cfg.p_range.1 - cfg.p_range.0) * master.next_f64();
            let seed = master.next_u64();
            Ok(Sample {
                index,
                p,
                seed,
                graph: random_gnp(n, p, RngSpec::new(seed))?,
            })
        })
        .collect()
}

enum Verdict {
    Holds(usize),
    Fails(usize, usize, Box<IdentityReport>),
    Inapplicable,
    Error(String),
}

fn evaluate(check: CheckId, g: &Graph, sel: &ParamSelection) -> Verdict {
    match run_check(check, g, sel) {
        Err(e) => Verdict::Error(e.to_string()),
        Ok(outcomes) => {
            if outcomes
                .iter()
                .any(|o| matches!(o, Outcome::Inapplicable(_)))
            {
                return Verdict::Inapplicable;
            }
            let total = outcomes.len();
            let failing = outcomes.iter().filter(|o| o.failed()).count();
            match outcomes.into_iter().find(Outcome::failed) {
                Some(Outcome::Report(r)) => Verdict::Fails(total, failing, Box::new(r)),
                _ => Verdict::Holds(total),
            }
        }
    }
}

/// Runs every configured check over the generated corpus.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let start = Instant::now();
    let corpus = generate_corpus(cfg)?;
    let sel = cfg.selection();

    let verdicts: Vec<Vec<Verdict>> = corpus
        .par_iter()
        .map(|s| {
            cfg.checks
                .iter()
                .map(|&c| evaluate(c, &s.graph, &sel))
                .collect()
        })
        .collect();

    let mut tallies: Vec<Tally> = cfg
        .checks
        .iter()
        .map(|c| Tally {
            check: c.as_str().to_string(),
            class: Some(c.class()),
            ..Default::default()
        })
        .collect();
    let mut counterexamples = Vec::new();
    let mut errors = Vec::new();
    for (sample, per_check) in corpus.iter().zip(verdicts) {
        for ((tally, &check), verdict) in tallies.iter_mut().zip(&cfg.checks).zip(per_check) {
            tally.graphs_tested += 1;
            match verdict {
                Verdict::Holds(k) => {
                    tally.holds += 1;
                    tally.instances += k;
                }
                Verdict::Fails(k, f, report) => {
                    tally.fails += 1;
                    tally.instances += k;
                    tally.failing_instances += f;
                    counterexamples.push(Counterexample {
                        sample: sample.index,
                        report: *report,
                    });
                }
                Verdict::Inapplicable => tally.inapplicable += 1,
                Verdict::Error(message) => {
                    tally.errors += 1;
                    errors.push(EvaluationError {
                        sample: sample.index,
                        check: check.as_str().to_string(),
                        graph6: to_graph6(&sample.graph),
                        message,
                    });
                }
            }
        }
    }

    let shrunk = if cfg.shrink {
        counterexamples
            .par_iter()
            .map(|cx| {
                let check: CheckId = cx.report.identity.parse()?;
                let g = &corpus[cx.sample].graph;
                let (small, report) = shrink_counterexample(g, check, &sel)?;
                Ok(ShrunkCounterexample {
                    sample: cx.sample,
                    original_graph6: cx.report.graph6.clone(),
                    n: small.n(),
                    m: small.m(),
                    report,
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    Ok(CampaignReport {
        config: cfg.clone(),
        rng_algorithm: RNG_ALGORITHM.to_string(),
        tallies,
        counterexamples,
        shrunk,
        errors,
        wall_clock_ms: cfg.record_timing.then(|| start.elapsed().as_millis()),
    })
}

/// Greedy reduction of a failing graph: repeatedly take the first vertex
/// deletion (lowest index) that still fails, and only when none does, the
/// first failing edge deletion (lexicographic). Stops at a graph where every
/// single deletion passes or leaves the check inapplicable.
pub fn shrink_counterexample(
    g: &Graph,
    check: CheckId,
    sel: &ParamSelection,
) -> Result<(Graph, IdentityReport)> {
    let mut report = first_failure(check, g, sel)
        .ok_or_else(|| CliqueError::CheckPasses(check.as_str().to_string()))?;
    let mut current = g.clone();
    'descend: loop {
        for v in 0..current.n() {
            let smaller = current.delete_vertex(v)?;
            if let Some(r) = first_failure(check, &smaller, sel) {
                current = smaller;
                report = r;
                continue 'descend;
            }
        }
        let edges: Vec<_> = current.edges().collect();
        for e in edges {
            let smaller = current.delete_edge(e)?;
            if let Some(r) = first_failure(check, &smaller, sel) {
                current = smaller;
                report = r;
                continue 'descend;
            }
        }
        return Ok((current, report));
    }
}
