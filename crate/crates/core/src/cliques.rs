//! Clique enumeration and counting.
//!
//! Every k-clique is grown from its smallest vertex by adding, in ascending
//! order, common-neighborhood vertices above its current maximum. Each
//! clique is therefore produced exactly once and the per-size lists come out
//! in lexicographic order.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{CliqueError, Result};
use crate::graph::Graph;
use crate::poly::CliquePolynomial;

/// Sorted vertex set inducing a complete subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    /// Validates that `vertices` is a clique of `g`.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Clique> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        let set = VertexSet::from_slice(&v);
        if v.len() != vertices.len() || v.iter().any(|&x| x >= g.n()) || !g.is_clique(set) {
            return Err(CliqueError::NotAClique(vertices.to_vec()));
        }
        Ok(Clique { vertices: v })
    }

    pub(crate) fn from_set(set: VertexSet) -> Clique {
        Clique {
            vertices: set.to_vec(),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn set(&self) -> VertexSet {
        VertexSet::from_slice(&self.vertices)
    }

    /// Vertex tuple joined by `-`, e.g. `0-1-2`.
    pub fn label(&self) -> String {
        self.vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }
}

/// All cliques of a graph grouped by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCatalog {
    // levels[k - 1] is the list of k-cliques
    levels: Vec<Vec<Clique>>,
}

impl CliqueCatalog {
    /// `Δ_k`; empty for `k = 0` or `k` above the clique number.
    pub fn of_size(&self, k: usize) -> &[Clique] {
        if k == 0 {
            return &[];
        }
        self.levels.get(k - 1).map_or(&[], Vec::as_slice)
    }

    /// `c_k`.
    pub fn count(&self, k: usize) -> usize {
        self.of_size(k).len()
    }

    /// `[c_1, ..., c_omega]`.
    pub fn counts(&self) -> Vec<u128> {
        self.levels.iter().map(|l| l.len() as u128).collect()
    }

    /// Largest enumerated size.
    pub fn omega(&self) -> usize {
        self.levels.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clique> {
        self.levels.iter().flatten()
    }
}

/// Materializes `Δ_1, ..., Δ_min(k_max, ω)`.
pub fn enumerate_cliques(g: &Graph, k_max: Option<usize>) -> Result<CliqueCatalog> {
    let limit = k_max.unwrap_or(usize::MAX);
    let mut levels: Vec<Vec<Clique>> = Vec::new();
    if limit == 0 {
        return Ok(CliqueCatalog { levels });
    }
    let mut stack: Vec<(VertexSet, VertexSet, usize)> = Vec::new();
    // Depth-first preorder with candidates visited in ascending order. The
    // stack holds siblings in reverse so the smallest is popped first.
    for v in g.vertices().iter().rev() {
        stack.push((VertexSet::singleton(v), g.neighbors(v).above(v), 1));
    }
    while let Some((clique, candidates, size)) = stack.pop() {
        if levels.len() < size {
            levels.push(Vec::new());
        }
        levels[size - 1].push(Clique::from_set(clique));
        if size == limit {
            continue;
        }
        for w in candidates.iter().collect::<Vec<_>>().into_iter().rev() {
            let next = candidates.intersect(g.neighbors(w)).above(w);
            stack.push((clique.with(w), next, size + 1));
        }
    }
    Ok(CliqueCatalog { levels })
}

/// `[c_1, ..., c_omega]` without materializing the cliques.
pub fn count_cliques(g: &Graph) -> Result<Vec<u128>> {
    fn extend(
        g: &Graph,
        candidates: VertexSet,
        depth: usize,
        counts: &mut Vec<u128>,
    ) -> Result<()> {
        // every candidate closes a (depth + 1)-clique
        if candidates.is_empty() {
            return Ok(());
        }
        if counts.len() <= depth {
            counts.push(0);
        }
        if g.is_clique(candidates) {
            // every subset of a complete candidate set extends the current clique
            let s = candidates.len();
            if counts.len() < depth + s {
                counts.resize(depth + s, 0);
            }
            for j in 1..=s {
                let ways = crate::poly::binomial(s, j)? as u128;
                counts[depth + j - 1] = counts[depth + j - 1]
                    .checked_add(ways)
                    .ok_or(CliqueError::Overflow("clique count"))?;
            }
            return Ok(());
        }
        counts[depth] = counts[depth]
            .checked_add(candidates.len() as u128)
            .ok_or(CliqueError::Overflow("clique count"))?;
        for w in candidates.iter() {
            extend(
                g,
                candidates.intersect(g.neighbors(w)).above(w),
                depth + 1,
                counts,
            )?;
        }
        Ok(())
    }

    let mut counts = Vec::new();
    extend(g, g.vertices(), 0, &mut counts)?;
    Ok(counts)
}

/// `C(G, x) = 1 + sum_k c_k(G) x^k`.
pub fn clique_polynomial(g: &Graph) -> Result<CliquePolynomial> {
    Ok(CliquePolynomial::from_counts(&count_cliques(g)?))
}

/// Common neighborhood of a clique's vertices; the vertex set whose size is
/// the clique-value.
pub fn clique_neighborhood(g: &Graph, q: &Clique) -> Result<VertexSet> {
    if !q.vertices.iter().all(|&v| v < g.n()) || !g.is_clique(q.set()) {
        return Err(CliqueError::NotAClique(q.vertices.clone()));
    }
    g.common_neighborhood(q.set())
}

/// `val_G(Q)`: number of vertices adjacent to every vertex of `Q`.
pub fn clique_value(g: &Graph, q: &Clique) -> Result<usize> {
    clique_neighborhood(g, q).map(VertexSet::len)
}

pub const ORACLE_MAX_VERTICES: usize = 20;

/// Exponential reference counter: tests every vertex subset for completeness
/// with pairwise adjacency queries. Independent of [`enumerate_cliques`].
pub fn brute_force_counts(g: &Graph) -> Result<Vec<u128>> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(CliqueError::OracleTooLarge {
            n,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let mut counts = vec![0u128; n];
    for mask in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let complete = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if complete {
            counts[members.len() - 1] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}
