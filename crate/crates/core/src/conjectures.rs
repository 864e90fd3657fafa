//! Checks for the open questions and conjectures. None of these are asserted
//! to hold; callers only record the verdicts.

use std::collections::BTreeMap;

use crate::catalog::CheckId;
use crate::cliques::clique_polynomial;
use crate::error::{CliqueError, Result};
use crate::formats::to_graph6;
use crate::graph::{EdgeRef, Graph};
use crate::identities::{count_of, poly_of};
use crate::poly::{binomial, Poly};
use crate::report::{IdentityReport, Params, Side};

/// Vertex-deck members are reversed at base `n - 1`, edge-deck members at `n`.
pub const REVERSAL_CONVENTION: &str =
    "c(G,x) reversed at base n; c(G-v,x) at base n-1; c(G-e,x) at base n";

fn reversed(g: &Graph, base: usize, include_unit: bool) -> Result<Poly> {
    clique_polynomial(g)?.reverse(base, include_unit)
}

fn triangle_edge_set(t: &[usize; 3]) -> [EdgeRef; 3] {
    let e = |a, b| EdgeRef::new(a, b).expect("distinct triangle vertices");
    [e(t[0], t[1]), e(t[0], t[2]), e(t[1], t[2])]
}

/// Both derivative claims for the reversed clique polynomial
/// `c(G, x) = sum_k c_k x^(n-k)` (plus 1 when `include_unit`):
///
/// 1. `c'(G, x) = sum_v c(G - v, x)`
/// 2. `(1/2!) c''(G, x) = sum_e c(G - e, x)`
pub fn check_conjecture1(
    g: &Graph,
    include_unit: bool,
) -> Result<(IdentityReport, IdentityReport)> {
    let n = g.n();
    let id = if include_unit {
        CheckId::Conjecture1Unit
    } else {
        CheckId::Conjecture1
    };
    let c = reversed(g, n, include_unit)?;
    let graph6 = to_graph6(g);

    let vertex_deck = (0..n)
        .map(|v| reversed(&g.delete_vertex(v)?, n - 1, include_unit))
        .collect::<Result<Vec<_>>>()?;
    let first = IdentityReport::new(
        id.as_str(),
        graph6.clone(),
        Params {
            include_unit: Some(include_unit),
            claim: Some("first_derivative".into()),
            ..Default::default()
        },
        Side::Poly(c.derivative(1)?),
        Side::Poly(Poly::checked_sum(&vertex_deck)?),
    )
    .with_detail("convention", REVERSAL_CONVENTION);

    let edge_deck = g
        .edges()
        .map(|e| reversed(&g.delete_edge(e)?, n, include_unit))
        .collect::<Result<Vec<_>>>()?;
    let second = IdentityReport::new(
        id.as_str(),
        graph6,
        Params {
            include_unit: Some(include_unit),
            claim: Some("second_derivative".into()),
            ..Default::default()
        },
        Side::Poly(c.normalized_derivative(2)?),
        Side::Poly(Poly::checked_sum(&edge_deck)?),
    )
    .with_detail("convention", REVERSAL_CONVENTION);

    Ok((first, second))
}

/// `(t - C(k, 3)) c_k(G)` against `sum_δ c_k(G - δ)`, `t = c_3(G)`, `k >= 3`.
pub fn check_triangle_deck_identity(g: &Graph, k: usize) -> Result<IdentityReport> {
    if k < 3 {
        return Err(CliqueError::InvalidOrder { k, min: 3 });
    }
    let (lhs, rhs) = triangle_deck_sides(g, k)?;
    Ok(IdentityReport::new(
        CheckId::TriangleDeck.as_str(),
        to_graph6(g),
        Params {
            k: Some(k),
            ..Default::default()
        },
        Side::Count(lhs),
        Side::Count(rhs),
    ))
}

fn triangle_deck_sides(g: &Graph, k: usize) -> Result<(i128, i128)> {
    let overflow = || CliqueError::Overflow("triangle-deck arithmetic");
    let c = poly_of(g)?;
    let t = c.coeff(3);
    let lhs = (t - binomial(k, 3)?)
        .checked_mul(c.coeff(k))
        .ok_or_else(overflow)?;
    let mut rhs = 0i128;
    for tri in g.triangles() {
        let minus = g.delete_edge_set(&triangle_edge_set(&tri))?;
        rhs = rhs.checked_add(count_of(&minus, k)?).ok_or_else(overflow)?;
    }
    Ok((lhs, rhs))
}

/// Whether the triangle graph `T(G)` has no edges, i.e. no two triangles
/// share an edge. Equivalent to every edge lying in at most one triangle,
/// which needs no bound on the triangle count.
pub fn triangle_graph_is_edgeless(g: &Graph) -> bool {
    g.edges()
        .all(|e| g.neighbors(e.u()).intersect(g.neighbors(e.v())).len() <= 1)
}

/// When `T(G)` is edgeless, the triangle-deck identity for every
/// `k in 3..=ω(G)` (one conjunctive report). `None` when `T(G)` has edges.
pub fn check_conjecture2(g: &Graph) -> Result<Option<IdentityReport>> {
    if !triangle_graph_is_edgeless(g) {
        return Ok(None);
    }
    let omega = clique_polynomial(g)?.degree();
    let mut lhs = BTreeMap::new();
    let mut rhs = BTreeMap::new();
    for k in 3..=omega {
        let (l, r) = triangle_deck_sides(g, k)?;
        lhs.insert(k, l);
        rhs.insert(k, r);
    }
    Ok(Some(IdentityReport::new(
        CheckId::Conjecture2.as_str(),
        to_graph6(g),
        Params::default(),
        Side::PerOrder(lhs),
        Side::PerOrder(rhs),
    )))
}

/// `(1/3!) C'''(G, x)` against `sum_δ C(G - δ, x)`.
pub fn check_conjecture3(g: &Graph) -> Result<IdentityReport> {
    let lhs = poly_of(g)?.normalized_derivative(3)?;
    let decks = g
        .triangles()
        .iter()
        .map(|t| poly_of(&g.delete_edge_set(&triangle_edge_set(t))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        CheckId::Conjecture3.as_str(),
        to_graph6(g),
        Params::default(),
        Side::Poly(lhs),
        Side::Poly(Poly::checked_sum(&decks)?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i128]) -> Side {
        Side::Poly(Poly::new(v.to_vec()))
    }

    fn two_triangles() -> Graph {
        let k3 = Graph::complete(3).unwrap();
        k3.disjoint_union(&k3).unwrap()
    }

    #[test]
    fn conjecture1_examples() {
        let k2 = Graph::complete(2).unwrap();
        let (first, _) = check_conjecture1(&k2, false).unwrap();
        assert_eq!(first.lhs, p(&[2, 2]));
        assert_eq!(first.rhs, p(&[2, 2]));
        assert!(first.holds);

        let (first, _) = check_conjecture1(&k2, true).unwrap();
        assert_eq!(first.lhs, p(&[2, 2]));
        assert_eq!(first.rhs, p(&[4, 2]));
        assert!(!first.holds);
        assert_eq!(first.params.claim.as_deref(), Some("first_derivative"));
    }

    #[test]
    fn conjecture1_first_claim_without_unit_tracks_vertex_deck() {
        // reversed first claim is the vertex-deck identity coefficient-wise
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap(),
        ] {
            assert!(check_conjecture1(&g, false).unwrap().0.holds);
        }
    }

    #[test]
    fn triangle_deck_examples() {
        let r = check_triangle_deck_identity(&two_triangles(), 3).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (Side::Count(2), Side::Count(2))
        );
        let r = check_triangle_deck_identity(&Graph::complete(4).unwrap(), 3).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (Side::Count(12), Side::Count(0))
        );
        assert!(!r.holds);
        let r = check_triangle_deck_identity(&Graph::cycle(6).unwrap(), 3).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (Side::Count(0), Side::Count(0))
        );
        assert!(check_triangle_deck_identity(&Graph::cycle(6).unwrap(), 2).is_err());
    }

    #[test]
    fn conjecture2_examples() {
        let r = check_conjecture2(&two_triangles()).unwrap().unwrap();
        assert!(r.holds);
        assert!(check_conjecture2(&Graph::complete(4).unwrap())
            .unwrap()
            .is_none());
        let r = check_conjecture2(&Graph::cycle(5).unwrap())
            .unwrap()
            .unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Side::PerOrder(BTreeMap::new()));
    }

    #[test]
    fn edgeless_criterion_matches_triangle_graph() {
        let graphs = [
            Graph::complete(4).unwrap(),
            two_triangles(),
            Graph::cycle(5).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let t = g.triangle_graph().unwrap();
            assert_eq!(triangle_graph_is_edgeless(&g), t.m() == 0, "{g:?}");
        }
    }

    #[test]
    fn conjecture3_examples() {
        let r = check_conjecture3(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(r.lhs, p(&[4, 4]));
        assert_eq!(r.rhs, p(&[4, 16, 12]));
        assert!(!r.holds);
        let r = check_conjecture3(&Graph::cycle(5).unwrap()).unwrap();
        assert!(r.holds);
        let r = check_conjecture3(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[1]), p(&[1, 3])));
        assert!(!r.holds);
    }
}
