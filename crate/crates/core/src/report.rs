//! Structured verdicts shared by identity checks, conjecture checks and campaigns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliqueError;
use crate::graph::EdgeRef;
use crate::poly::Poly;

/// One side of an identity.
///
/// JSON: a count is a number, a polynomial is an array of integer
/// coefficients (low degree first), a per-order family is an object keyed by
/// the order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Count(i128),
    Poly(Poly),
    PerOrder(BTreeMap<usize, i128>),
}

// Hand-written because untagged deserialization buffers numbers without
// 128-bit support.
impl<'de> Deserialize<'de> for Side {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct SideVisitor;

        impl<'de> serde::de::Visitor<'de> for SideVisitor {
            type Value = Side;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, an array of integers, or a map of order to integer")
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Side, E> {
                Ok(Side::Count(v.into()))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Side, E> {
                Ok(Side::Count(v.into()))
            }

            fn visit_i128<E: serde::de::Error>(self, v: i128) -> Result<Side, E> {
                Ok(Side::Count(v))
            }

            fn visit_u128<E: serde::de::Error>(self, v: u128) -> Result<Side, E> {
                i128::try_from(v)
                    .map(Side::Count)
                    .map_err(|_| E::custom("count exceeds i128"))
            }

            fn visit_seq<A: serde::de::SeqAccess<'de>>(self, mut seq: A) -> Result<Side, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<i128>()? {
                    coeffs.push(c);
                }
                Ok(Side::Poly(Poly::new(coeffs)))
            }

            fn visit_map<A: serde::de::MapAccess<'de>>(self, mut map: A) -> Result<Side, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = map.next_entry::<usize, i128>()? {
                    out.insert(k, v);
                }
                Ok(Side::PerOrder(out))
            }
        }

        d.deserialize_any(SideVisitor)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Count(c) => write!(f, "{c}"),
            Side::Poly(p) => write!(f, "{p}"),
            Side::PerOrder(m) => {
                let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// Reading of the inner sum of the clique-deletion expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Interpretation {
    /// Every edge subset `S ⊆ M` with `|S| = C(r, 2)`.
    AllSubsets,
    /// Only edge subsets that are the edge set of an `r`-clique.
    CliqueSubsets,
}

impl Interpretation {
    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::AllSubsets => "all_subsets",
            Interpretation::CliqueSubsets => "clique_subsets",
        }
    }
}

impl FromStr for Interpretation {
    type Err = CliqueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all_subsets" | "a" => Ok(Interpretation::AllSubsets),
            "clique_subsets" | "b" => Ok(Interpretation::CliqueSubsets),
            other => Err(CliqueError::InvalidConfig(format!(
                "unknown interpretation {other:?} (expected all_subsets or clique_subsets)"
            ))),
        }
    }
}

/// Parameters an identity was evaluated at. Absent fields are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<EdgeRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_set: Option<Vec<EdgeRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interpretation: Option<Interpretation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub include_unit: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
}

impl Params {
    pub fn is_empty(&self) -> bool {
        *self == Params::default()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = &self.claim {
            parts.push(format!("claim={c}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(v) = self.vertex {
            parts.push(format!("v={v}"));
        }
        if let Some(e) = self.edge {
            parts.push(format!("e={e}"));
        }
        if let Some([a, b, c]) = self.triangle {
            parts.push(format!("triangle={a}-{b}-{c}"));
        }
        if let Some(m) = &self.edge_set {
            let s: Vec<String> = m.iter().map(|e| e.to_string()).collect();
            parts.push(format!("M={{{}}}", s.join(",")));
        }
        if let Some(i) = self.interpretation {
            parts.push(format!("interpretation={}", i.as_str()));
        }
        if let Some(u) = self.include_unit {
            parts.push(format!("include_unit={u}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Verdict of a single identity evaluation. `holds` is exactly `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub graph6: String,
    pub params: Params,
    pub lhs: Side,
    pub rhs: Side,
    pub holds: bool,
    /// Auxiliary findings (connectivity, equivalent conditions, conventions).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
}

impl IdentityReport {
    pub fn new(identity: &str, graph6: String, params: Params, lhs: Side, rhs: Side) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            identity: identity.to_string(),
            graph6,
            params,
            lhs,
            rhs,
            holds,
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let verdict = if self.holds { "holds" } else { "does not hold" };
        let params = if self.params.is_empty() {
            String::new()
        } else {
            format!(" [{}]", self.params)
        };
        format!(
            "{} {}{}: {} | lhs = {} | rhs = {}",
            self.identity, self.graph6, params, verdict, self.lhs, self.rhs
        )
    }
}
