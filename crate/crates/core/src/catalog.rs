//! Check identifiers, their classes, and default parameter sweeps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::cliques::{enumerate_cliques, Clique};
use crate::conjectures;
use crate::error::{CliqueError, Result};
use crate::graph::{EdgeRef, Graph};
use crate::identities;
use crate::report::{IdentityReport, Interpretation};

/// Whether a check guards a proved statement or explores an open one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckClass {
    /// Proved identity; a failure is a regression.
    Theorem,
    /// Open question, conjecture or reading of an ambiguous statement;
    /// outcomes are reported only.
    Conjecture,
}

macro_rules! check_ids {
    ($( $variant:ident => $name:literal, $class:ident; )*) => {
        /// Every check known to the catalog.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $( $variant, )* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[ $( CheckId::$variant, )* ];

            pub fn as_str(self) -> &'static str {
                match self { $( CheckId::$variant => $name, )* }
            }

            pub fn class(self) -> CheckClass {
                match self { $( CheckId::$variant => CheckClass::$class, )* }
            }
        }
    };
}

check_ids! {
    Handshake => "handshake", Theorem;
    VertexRecurrence => "vertex_recurrence", Theorem;
    EdgeRecurrence => "edge_recurrence", Theorem;
    VertexDeck => "vertex_deck", Theorem;
    EdgeDeck => "edge_deck", Theorem;
    FirstDerivative => "first_derivative", Theorem;
    SecondDerivative => "second_derivative", Theorem;
    TriangleIdentity => "triangle_identity", Theorem;
    ThirdDerivativeK5Free => "third_derivative_k5free", Theorem;
    TriangleDeletionCounts => "triangle_deletion_counts", Theorem;
    CliqueDeletionAllSubsets => "clique_deletion_all_subsets", Conjecture;
    CliqueDeletionCliqueSubsets => "clique_deletion_clique_subsets", Conjecture;
    TriangleRecurrence => "triangle_recurrence", Conjecture;
    KthDerivative => "kth_derivative", Conjecture;
    Conjecture1 => "conjecture1", Conjecture;
    Conjecture1Unit => "conjecture1_unit", Conjecture;
    TriangleDeck => "triangle_deck", Conjecture;
    Conjecture2 => "conjecture2", Conjecture;
    Conjecture3 => "conjecture3", Conjecture;
}

impl CheckId {
    pub fn is_theorem(self) -> bool {
        self.class() == CheckClass::Theorem
    }

    pub fn theorems() -> Vec<CheckId> {
        CheckId::ALL
            .iter()
            .copied()
            .filter(|c| c.is_theorem())
            .collect()
    }

    pub fn conjectures() -> Vec<CheckId> {
        CheckId::ALL
            .iter()
            .copied()
            .filter(|c| !c.is_theorem())
            .collect()
    }

    /// Parses a comma-separated list of ids and the groups `all-theorems`,
    /// `all-conjectures` and `all`. Duplicates are dropped; catalog order is kept.
    pub fn parse_list(list: &str) -> Result<Vec<CheckId>> {
        let mut picked = Vec::new();
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "all" => picked.extend_from_slice(CheckId::ALL),
                "all-theorems" => picked.extend(CheckId::theorems()),
                "all-conjectures" => picked.extend(CheckId::conjectures()),
                other => picked.push(other.parse()?),
            }
        }
        if picked.is_empty() {
            return Err(CliqueError::UnknownCheck(list.to_string()));
        }
        picked.sort();
        picked.dedup();
        Ok(picked)
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = CliqueError;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CliqueError::UnknownCheck(s.to_string()))
    }
}

/// Explicit parameter choices; unset fields are swept over all valid values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamSelection {
    pub k: Option<usize>,
    pub vertex: Option<usize>,
    pub edge: Option<(usize, usize)>,
    pub triangle: Option<[usize; 3]>,
    /// Vertex set whose edges form `M` for the clique-deletion expansion.
    pub clique: Option<Vec<usize>>,
    /// Restricts swept orders to `lo..=hi` where a check takes an order.
    pub k_range: Option<(usize, usize)>,
}

/// Result of one parameter instance.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Report(IdentityReport),
    /// The check's hypothesis does not cover this graph.
    Inapplicable(String),
}

impl Outcome {
    pub fn failed(&self) -> bool {
        matches!(self, Outcome::Report(r) if !r.holds)
    }
}

fn orders(sel: &ParamSelection, lo: usize, hi: usize) -> Vec<usize> {
    if let Some(k) = sel.k {
        return vec![k];
    }
    let (a, b) = sel
        .k_range
        .map_or((lo, hi), |(a, b)| (a.max(lo), b.min(hi)));
    (a..=b).collect()
}

fn triangles(g: &Graph, sel: &ParamSelection) -> Result<Vec<Clique>> {
    match sel.triangle {
        Some(t) => Ok(vec![Clique::new(g, &t)?]),
        None => Ok(g
            .triangles()
            .into_iter()
            .map(|t| Clique::new(g, &t).expect("enumerated triangle"))
            .collect()),
    }
}

fn edges(g: &Graph, sel: &ParamSelection) -> Result<Vec<EdgeRef>> {
    match sel.edge {
        Some((a, b)) => Ok(vec![g.edge(a, b)?]),
        None => Ok(g.edges().collect()),
    }
}

/// Largest clique size used for the default clique-deletion sweep.
pub const EXPANSION_MAX_CLIQUE: usize = 4;

fn expansion_sets(g: &Graph, sel: &ParamSelection) -> Result<Vec<Vec<EdgeRef>>> {
    let cliques = match &sel.clique {
        Some(vs) => vec![Clique::new(g, vs)?],
        None => {
            let cat = enumerate_cliques(g, Some(EXPANSION_MAX_CLIQUE))?;
            let sizes = orders(sel, 2, cat.omega());
            sizes
                .into_iter()
                .flat_map(|q| cat.of_size(q).to_vec())
                .collect()
        }
    };
    Ok(cliques.iter().map(|q| clique_edges(q.set())).collect())
}

/// All edges among the members of a vertex set, in lexicographic order.
pub fn clique_edges(set: VertexSet) -> Vec<EdgeRef> {
    let vs = set.to_vec();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push(EdgeRef::new(a, b).expect("distinct members"));
        }
    }
    out
}

/// Evaluates `check` on `g` for every selected parameter value.
///
/// Invalid explicit parameters are errors; hypotheses that exclude the graph
/// (K5-freeness, an edgeless triangle graph) yield [`Outcome::Inapplicable`].
pub fn run_check(check: CheckId, g: &Graph, sel: &ParamSelection) -> Result<Vec<Outcome>> {
    use CheckId::*;
    let omega = || -> Result<usize> { Ok(crate::cliques::clique_polynomial(g)?.degree()) };
    let reports = |rs: Vec<IdentityReport>| rs.into_iter().map(Outcome::Report).collect();
    let out: Vec<Outcome> = match check {
        Handshake => reports(
            orders(sel, 1, omega()?)
                .into_iter()
                .map(|k| identities::check_handshake(g, k))
                .collect::<Result<_>>()?,
        ),
        VertexRecurrence => {
            let vs = match sel.vertex {
                Some(v) => vec![v],
                None => (0..g.n()).collect(),
            };
            reports(
                vs.into_iter()
                    .map(|v| identities::check_vertex_recurrence(g, v))
                    .collect::<Result<_>>()?,
            )
        }
        EdgeRecurrence => reports(
            edges(g, sel)?
                .into_iter()
                .map(|e| identities::check_edge_recurrence(g, e))
                .collect::<Result<_>>()?,
        ),
        VertexDeck => reports(
            orders(sel, 1, omega()?)
                .into_iter()
                .map(|k| identities::check_vertex_deck_identity(g, k))
                .collect::<Result<_>>()?,
        ),
        EdgeDeck => reports(
            orders(sel, 2, omega()?)
                .into_iter()
                .map(|k| identities::check_edge_deck_identity(g, k))
                .collect::<Result<_>>()?,
        ),
        FirstDerivative => vec![Outcome::Report(identities::check_first_derivative(g)?)],
        SecondDerivative => vec![Outcome::Report(identities::check_second_derivative(g)?)],
        TriangleIdentity => reports(
            triangles(g, sel)?
                .iter()
                .map(|t| identities::triangle_identity(g, t).map(|(r, _)| r))
                .collect::<Result<_>>()?,
        ),
        ThirdDerivativeK5Free => match identities::check_third_derivative_k5free(g) {
            Err(CliqueError::NotK5Free(w)) => {
                vec![Outcome::Inapplicable(format!("clique number {w} > 4"))]
            }
            r => vec![Outcome::Report(r?)],
        },
        TriangleDeletionCounts => {
            let w = omega()?;
            if w > 4 {
                vec![Outcome::Inapplicable(format!("clique number {w} > 4"))]
            } else {
                reports(
                    triangles(g, sel)?
                        .iter()
                        .map(|t| identities::triangle_deletion_counts(g, t).map(|c| c.report))
                        .collect::<Result<_>>()?,
                )
            }
        }
        CliqueDeletionAllSubsets | CliqueDeletionCliqueSubsets => {
            let interp = if check == CliqueDeletionAllSubsets {
                Interpretation::AllSubsets
            } else {
                Interpretation::CliqueSubsets
            };
            reports(
                expansion_sets(g, sel)?
                    .iter()
                    .map(|m| identities::clique_deletion_expansion(g, m, interp))
                    .collect::<Result<_>>()?,
            )
        }
        TriangleRecurrence => reports(
            triangles(g, sel)?
                .iter()
                .map(|t| identities::check_triangle_recurrence(g, t))
                .collect::<Result<_>>()?,
        ),
        KthDerivative => reports(
            orders(sel, 1, omega()?)
                .into_iter()
                .map(|k| identities::check_kth_derivative_general(g, k))
                .collect::<Result<_>>()?,
        ),
        Conjecture1 | Conjecture1Unit => {
            let (a, b) = conjectures::check_conjecture1(g, check == Conjecture1Unit)?;
            vec![Outcome::Report(a), Outcome::Report(b)]
        }
        TriangleDeck => reports(
            orders(sel, 3, omega()?.max(3))
                .into_iter()
                .map(|k| conjectures::check_triangle_deck_identity(g, k))
                .collect::<Result<_>>()?,
        ),
        Conjecture2 => match conjectures::check_conjecture2(g)? {
            Some(r) => vec![Outcome::Report(r)],
            None => vec![Outcome::Inapplicable("triangle graph has edges".into())],
        },
        Conjecture3 => vec![Outcome::Report(conjectures::check_conjecture3(g)?)],
    };
    Ok(out)
}

/// First failing instance of `check` on `g` under the default sweep, if any.
/// Errors count as not failing.
pub fn first_failure(check: CheckId, g: &Graph, sel: &ParamSelection) -> Option<IdentityReport> {
    run_check(check, g, sel)
        .ok()?
        .into_iter()
        .find_map(|o| match o {
            Outcome::Report(r) if !r.holds => Some(r),
            _ => None,
        })
}
