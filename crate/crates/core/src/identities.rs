//! Exact checks of the clique-polynomial recurrences, deck identities and
//! derivative formulas.
//!
//! Nothing here divides: identities of the form `A = B / x^j` are checked as
//! `x^j A = B` or rewritten so both sides stay integer polynomials. Each check
//! returns an [`IdentityReport`] instead of asserting, so the same code serves
//! regression tests and exploration.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::bits::VertexSet;
use crate::catalog::{clique_edges, CheckId};
use crate::cliques::{clique_polynomial, clique_value, enumerate_cliques, Clique};
use crate::error::{CliqueError, Result};
use crate::formats::to_graph6;
use crate::graph::{EdgeRef, Graph};
use crate::poly::{binomial, Poly};
use crate::report::{IdentityReport, Interpretation, Params, Side};

/// `C(G, x)` as a signed polynomial.
pub fn poly_of(g: &Graph) -> Result<Poly> {
    clique_polynomial(g)?.to_poly()
}

/// `C(G[S], x)` for `S` the common neighborhood of `set` (all of `V` when
/// `set` is empty).
pub fn neighborhood_poly(g: &Graph, set: VertexSet) -> Result<Poly> {
    let nb = if set.is_empty() {
        g.vertices()
    } else {
        g.common_neighborhood(set)?
    };
    poly_of(&g.induced_subgraph(nb))
}

pub(crate) fn count_of(g: &Graph, k: usize) -> Result<i128> {
    Ok(poly_of(g)?.coeff(k))
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .ok_or(CliqueError::Overflow("identity arithmetic"))
}

fn sum_counts<I: IntoIterator<Item = Result<i128>>>(items: I) -> Result<i128> {
    items.into_iter().try_fold(0i128, |acc, c| {
        acc.checked_add(c?)
            .ok_or(CliqueError::Overflow("identity arithmetic"))
    })
}

fn require_triangle(g: &Graph, delta: &Clique) -> Result<[usize; 3]> {
    match delta.vertices() {
        &[a, b, c] if c < g.n() && g.is_clique(delta.set()) => Ok([a, b, c]),
        other => Err(CliqueError::NotAClique(other.to_vec())),
    }
}

fn triangle_edges(t: [usize; 3]) -> [EdgeRef; 3] {
    let e = |a, b| EdgeRef::new(a, b).expect("distinct triangle vertices");
    [e(t[0], t[1]), e(t[0], t[2]), e(t[1], t[2])]
}

fn require_order(k: usize, min: usize) -> Result<()> {
    if k < min {
        Err(CliqueError::InvalidOrder { k, min })
    } else {
        Ok(())
    }
}

/// `sum_{Q in Δ_k} val_G(Q) = (k + 1) c_{k+1}(G)`.
pub fn check_handshake(g: &Graph, k: usize) -> Result<IdentityReport> {
    require_order(k, 1)?;
    let cat = enumerate_cliques(g, Some(k + 1))?;
    let lhs = sum_counts(
        cat.of_size(k)
            .iter()
            .map(|q| Ok(clique_value(g, q)? as i128)),
    )?;
    let rhs = mul(k as i128 + 1, cat.count(k + 1) as i128)?;
    Ok(IdentityReport::new(
        CheckId::Handshake.as_str(),
        to_graph6(g),
        Params {
            k: Some(k),
            ..Default::default()
        },
        Side::Count(lhs),
        Side::Count(rhs),
    ))
}

/// `C(G, x) = C(G - v, x) + x C(G[N(v)], x)`.
pub fn check_vertex_recurrence(g: &Graph, v: usize) -> Result<IdentityReport> {
    let minus = g.delete_vertex(v)?;
    let rhs =
        poly_of(&minus)?.checked_add(&neighborhood_poly(g, VertexSet::singleton(v))?.shift(1))?;
    Ok(IdentityReport::new(
        CheckId::VertexRecurrence.as_str(),
        to_graph6(g),
        Params {
            vertex: Some(v),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?),
        Side::Poly(rhs),
    ))
}

/// `C(G, x) = C(G - e, x) + x^2 C(G[N(e)], x)`.
pub fn check_edge_recurrence(g: &Graph, e: EdgeRef) -> Result<IdentityReport> {
    let e = g.edge(e.u(), e.v())?;
    let minus = g.delete_edge(e)?;
    let rhs = poly_of(&minus)?.checked_add(&neighborhood_poly(g, e.endpoints())?.shift(2))?;
    Ok(IdentityReport::new(
        CheckId::EdgeRecurrence.as_str(),
        to_graph6(g),
        Params {
            edge: Some(e),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?),
        Side::Poly(rhs),
    ))
}

/// `(n - k) c_k(G) = sum_v c_k(G - v)`, `k >= 1`.
pub fn check_vertex_deck_identity(g: &Graph, k: usize) -> Result<IdentityReport> {
    require_order(k, 1)?;
    let lhs = mul(g.n() as i128 - k as i128, count_of(g, k)?)?;
    let rhs = sum_counts((0..g.n()).map(|v| count_of(&g.delete_vertex(v)?, k)))?;
    Ok(IdentityReport::new(
        CheckId::VertexDeck.as_str(),
        to_graph6(g),
        Params {
            k: Some(k),
            ..Default::default()
        },
        Side::Count(lhs),
        Side::Count(rhs),
    ))
}

/// `(m - C(k, 2)) c_k(G) = sum_e c_k(G - e)`, `k >= 2`.
pub fn check_edge_deck_identity(g: &Graph, k: usize) -> Result<IdentityReport> {
    require_order(k, 2)?;
    let lhs = mul(g.m() as i128 - binomial(k, 2)?, count_of(g, k)?)?;
    let rhs = sum_counts(g.edges().map(|e| count_of(&g.delete_edge(e)?, k)))?;
    Ok(IdentityReport::new(
        CheckId::EdgeDeck.as_str(),
        to_graph6(g),
        Params {
            k: Some(k),
            ..Default::default()
        },
        Side::Count(lhs),
        Side::Count(rhs),
    ))
}

/// `d/dx C(G, x) = sum_v C(G[N(v)], x)`.
pub fn check_first_derivative(g: &Graph) -> Result<IdentityReport> {
    let polys = (0..g.n())
        .map(|v| neighborhood_poly(g, VertexSet::singleton(v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        CheckId::FirstDerivative.as_str(),
        to_graph6(g),
        Params::default(),
        Side::Poly(poly_of(g)?.derivative(1)?),
        Side::Poly(Poly::checked_sum(&polys)?),
    ))
}

/// `(1/2!) d^2/dx^2 C(G, x) = sum_e C(G[N(e)], x)`.
pub fn check_second_derivative(g: &Graph) -> Result<IdentityReport> {
    let polys = g
        .edges()
        .map(|e| neighborhood_poly(g, e.endpoints()))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        CheckId::SecondDerivative.as_str(),
        to_graph6(g),
        Params::default(),
        Side::Poly(poly_of(g)?.normalized_derivative(2)?),
        Side::Poly(Poly::checked_sum(&polys)?),
    ))
}

/// Right side of the clique-deletion expansion
/// `C(G - M) + sum_{r=2}^{|M|} (-1)^r (r - 1) x^r sum_S C(G[N(S)])`
/// where `M` is the edge set of a clique and `S` ranges per `interp`.
pub fn clique_deletion_rhs(g: &Graph, m: &[EdgeRef], interp: Interpretation) -> Result<Poly> {
    let mut rhs = poly_of(&g.delete_edge_set(m)?)?;
    let support: VertexSet = m
        .iter()
        .fold(VertexSet::EMPTY, |s, e| s.union(e.endpoints()));
    // the clique order bounds r as well, so a single edge still gets its r = 2 term
    for r in 2..=m.len().max(support.len()) {
        let size = binomial(r, 2)? as usize;
        let inner = match interp {
            Interpretation::AllSubsets => {
                if size > m.len() {
                    continue;
                }
                let mut acc = Poly::zero();
                for subset in m.iter().combinations(size) {
                    let ends = subset
                        .iter()
                        .fold(VertexSet::EMPTY, |s, e| s.union(e.endpoints()));
                    acc = acc.checked_add(&neighborhood_poly(g, ends)?)?;
                }
                acc
            }
            Interpretation::CliqueSubsets => {
                if r > support.len() {
                    continue;
                }
                let mut acc = Poly::zero();
                for vs in support.iter().combinations(r) {
                    acc = acc.checked_add(&neighborhood_poly(g, VertexSet::from_slice(&vs))?)?;
                }
                acc
            }
        };
        let sign: i128 = if r % 2 == 0 { 1 } else { -1 };
        rhs = rhs.checked_add(&inner.checked_scale(sign * (r as i128 - 1))?.shift(r))?;
    }
    Ok(rhs)
}

/// Compares `C(G, x)` with the clique-deletion expansion for the edge set `m`
/// of a clique of `g`.
pub fn clique_deletion_expansion(
    g: &Graph,
    m: &[EdgeRef],
    interp: Interpretation,
) -> Result<IdentityReport> {
    let mut edges: Vec<EdgeRef> = m.to_vec();
    edges.sort();
    edges.dedup();
    let support: VertexSet = edges
        .iter()
        .fold(VertexSet::EMPTY, |s, e| s.union(e.endpoints()));
    if edges.iter().any(|e| !g.has_edge(e.u(), e.v()))
        || !g.is_clique(support)
        || edges != clique_edges(support)
    {
        return Err(CliqueError::NotAClique(support.to_vec()));
    }
    let id = match interp {
        Interpretation::AllSubsets => CheckId::CliqueDeletionAllSubsets,
        Interpretation::CliqueSubsets => CheckId::CliqueDeletionCliqueSubsets,
    };
    let rhs = clique_deletion_rhs(g, &edges, interp)?;
    Ok(IdentityReport::new(
        id.as_str(),
        to_graph6(g),
        Params {
            edge_set: Some(edges),
            interpretation: Some(interp),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?),
        Side::Poly(rhs),
    ))
}

/// The two correction terms of the triangle identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleIdentityParts {
    /// `sum_i C(G[N(e_i)], x)` over the three edges of the triangle.
    pub i2: Poly,
    /// `C(G[N(δ)], x)`.
    pub i3: Poly,
    pub triangle: Clique,
}

fn triangle_parts(g: &Graph, delta: &Clique) -> Result<TriangleIdentityParts> {
    let t = require_triangle(g, delta)?;
    let edge_polys = triangle_edges(t)
        .iter()
        .map(|e| neighborhood_poly(g, e.endpoints()))
        .collect::<Result<Vec<_>>>()?;
    Ok(TriangleIdentityParts {
        i2: Poly::checked_sum(&edge_polys)?,
        i3: neighborhood_poly(g, delta.set())?,
        triangle: delta.clone(),
    })
}

fn minus_triangle(g: &Graph, t: [usize; 3]) -> Result<Graph> {
    g.delete_edge_set(&triangle_edges(t))
}

/// `C(G, x) = C(G - δ, x) + I_2 x^2 - 2 I_3 x^3`.
pub fn triangle_identity(
    g: &Graph,
    delta: &Clique,
) -> Result<(IdentityReport, TriangleIdentityParts)> {
    let parts = triangle_parts(g, delta)?;
    let t = require_triangle(g, delta)?;
    let rhs = poly_of(&minus_triangle(g, t)?)?
        .checked_add(&parts.i2.shift(2))?
        .checked_sub(&parts.i3.checked_scale(2)?.shift(3))?;
    let report = IdentityReport::new(
        CheckId::TriangleIdentity.as_str(),
        to_graph6(g),
        Params {
            triangle: Some(t),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?),
        Side::Poly(rhs),
    );
    Ok((report, parts))
}

/// Whether `C(G, x) = C(G - δ, x) + x^3 C(G[N(δ)], x)` for this triangle.
/// The stated equivalent condition `I_2 = 3x I_3` is evaluated verbatim and
/// recorded in the details.
pub fn check_triangle_recurrence(g: &Graph, delta: &Clique) -> Result<IdentityReport> {
    let parts = triangle_parts(g, delta)?;
    let t = require_triangle(g, delta)?;
    let rhs = poly_of(&minus_triangle(g, t)?)?.checked_add(&parts.i3.shift(3))?;
    let cond_rhs = parts.i3.checked_scale(3)?.shift(1);
    let condition = serde_json::json!({
        "lhs": parts.i2,
        "rhs": cond_rhs,
        "holds": parts.i2 == cond_rhs,
    });
    Ok(IdentityReport::new(
        CheckId::TriangleRecurrence.as_str(),
        to_graph6(g),
        Params {
            triangle: Some(t),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?),
        Side::Poly(rhs),
    )
    .with_detail("equivalent_condition", condition))
}

/// `(1/3!) C'''(G, x) = sum_{δ in Δ_3} C(G[N(δ)], x)` on K5-free graphs.
/// Connectivity is recorded, not required.
pub fn check_third_derivative_k5free(g: &Graph) -> Result<IdentityReport> {
    let c = poly_of(g)?;
    let omega = c.degree().unwrap_or(0);
    if omega >= 5 {
        return Err(CliqueError::NotK5Free(omega));
    }
    let polys = g
        .triangles()
        .iter()
        .map(|t| neighborhood_poly(g, VertexSet::from_slice(t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        CheckId::ThirdDerivativeK5Free.as_str(),
        to_graph6(g),
        Params::default(),
        Side::Poly(c.normalized_derivative(3)?),
        Side::Poly(Poly::checked_sum(&polys)?),
    )
    .with_detail("connected", g.is_connected()))
}

/// `(1/k!) C^(k)(G, x)` against `sum_{Q in Δ_k} C(G[N(Q)], x)`.
pub fn check_kth_derivative_general(g: &Graph, k: usize) -> Result<IdentityReport> {
    require_order(k, 1)?;
    let cat = enumerate_cliques(g, Some(k))?;
    let polys = cat
        .of_size(k)
        .iter()
        .map(|q| neighborhood_poly(g, q.set()))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(
        CheckId::KthDerivative.as_str(),
        to_graph6(g),
        Params {
            k: Some(k),
            ..Default::default()
        },
        Side::Poly(poly_of(g)?.normalized_derivative(k)?),
        Side::Poly(Poly::checked_sum(&polys)?),
    ))
}

/// `c_1..c_4` of `G - δ` predicted from counts of `G`, next to the directly
/// enumerated values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleDeletionCounts {
    pub predicted: [i128; 4],
    pub direct: [i128; 4],
    pub report: IdentityReport,
}

impl TriangleDeletionCounts {
    pub fn matches(&self) -> bool {
        self.predicted == self.direct
    }
}

/// Predicts `c_i(G - δ)` for `i = 1..4` on a K5-free graph:
///
/// * `c_1(G - δ) = c_1(G)`
/// * `c_2(G - δ) = c_2(G) - 3`
/// * `c_3(G - δ) = c_3(G) - sum_i val(e_i) + 2`
/// * `c_4(G - δ) = c_4(G) - sum_i c_2(G[N(e_i)]) + 2 val(δ)`
///
/// and cross-checks against enumeration of `G - δ`. A mismatch is reported
/// through `holds = false`, not as an error.
pub fn triangle_deletion_counts(g: &Graph, delta: &Clique) -> Result<TriangleDeletionCounts> {
    let t = require_triangle(g, delta)?;
    let c = poly_of(g)?;
    let omega = c.degree().unwrap_or(0);
    if omega >= 5 {
        return Err(CliqueError::NotK5Free(omega));
    }
    let edges = triangle_edges(t);
    let val_edges = sum_counts(
        edges
            .iter()
            .map(|e| Ok(g.common_neighborhood(e.endpoints())?.len() as i128)),
    )?;
    let c2_edges = sum_counts(
        edges
            .iter()
            .map(|e| Ok(neighborhood_poly(g, e.endpoints())?.coeff(2))),
    )?;
    let val_delta = g.common_neighborhood(delta.set())?.len() as i128;
    let predicted = [
        c.coeff(1),
        c.coeff(2) - 3,
        c.coeff(3) - val_edges + 2,
        c.coeff(4) - c2_edges + 2 * val_delta,
    ];
    let after = poly_of(&minus_triangle(g, t)?)?;
    let direct = [
        after.coeff(1),
        after.coeff(2),
        after.coeff(3),
        after.coeff(4),
    ];
    let as_map = |a: [i128; 4]| -> BTreeMap<usize, i128> { (1..=4).zip(a).collect() };
    let report = IdentityReport::new(
        CheckId::TriangleDeletionCounts.as_str(),
        to_graph6(g),
        Params {
            triangle: Some(t),
            ..Default::default()
        },
        Side::PerOrder(as_map(predicted)),
        Side::PerOrder(as_map(direct)),
    );
    Ok(TriangleDeletionCounts {
        predicted,
        direct,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i128]) -> Side {
        Side::Poly(Poly::new(v.to_vec()))
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn tri(g: &Graph, t: [usize; 3]) -> Clique {
        Clique::new(g, &t).unwrap()
    }

    #[test]
    fn vertex_recurrence_examples() {
        let r = check_vertex_recurrence(&k(3), 0).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, p(&[1, 3, 3, 1]));
        let iso = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(check_vertex_recurrence(&iso, 2).unwrap().holds);
        let c5 = Graph::cycle(5).unwrap();
        assert!((0..5).all(|v| check_vertex_recurrence(&c5, v).unwrap().holds));
        assert!(check_vertex_recurrence(&c5, 5).is_err());
    }

    #[test]
    fn edge_recurrence_examples() {
        let k3 = k(3);
        for e in k3.edges() {
            assert!(check_edge_recurrence(&k3, e).unwrap().holds);
        }
        let p3 = Graph::path(3).unwrap();
        let r = check_edge_recurrence(&p3, p3.edge(0, 1).unwrap()).unwrap();
        assert!(r.holds);
        let k4 = k(4);
        assert!(k4
            .edges()
            .all(|e| check_edge_recurrence(&k4, e).unwrap().holds));
        let absent = EdgeRef::new(0, 2).unwrap();
        assert_eq!(
            check_edge_recurrence(&p3, absent),
            Err(CliqueError::EdgeAbsent(0, 2))
        );
    }

    #[test]
    fn deck_identity_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = check_vertex_deck_identity(&c5, 2).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (Side::Count(15), Side::Count(15))
        );
        let r = check_vertex_deck_identity(&k(4), 4).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(0), Side::Count(0)));
        let r = check_vertex_deck_identity(&c5, 1).unwrap();
        assert_eq!(r.lhs, Side::Count(20));
        assert!(r.holds);

        let r = check_edge_deck_identity(&k(4), 3).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(12), Side::Count(12)));
        let r = check_edge_deck_identity(&k(4), 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(30), Side::Count(30)));
        let r = check_edge_deck_identity(&c5, 3).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(0), Side::Count(0)));

        assert!(check_edge_deck_identity(&c5, 1).is_err());
        assert!(check_vertex_deck_identity(&c5, 0).is_err());
    }

    #[test]
    fn derivative_examples() {
        let r = check_first_derivative(&k(4)).unwrap();
        assert_eq!(r.lhs, p(&[4, 12, 12, 4]));
        assert!(r.holds);
        let r = check_first_derivative(&Graph::empty(6).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[6]), p(&[6])));
        let r = check_first_derivative(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(r.lhs, p(&[5, 10]));
        assert!(r.holds);

        let r = check_second_derivative(&k(4)).unwrap();
        assert_eq!(r.lhs, p(&[6, 12, 6]));
        assert!(r.holds);
        let r = check_second_derivative(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[7]), p(&[7])));
        let r = check_second_derivative(&diamond()).unwrap();
        assert_eq!(r.lhs, p(&[5, 6]));
        assert!(r.holds);
    }

    #[test]
    fn triangle_identity_examples() {
        let k4 = k(4);
        let (r, parts) = triangle_identity(&k4, &tri(&k4, [0, 1, 2])).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, p(&[1, 4, 6, 4, 1]));
        assert_eq!(parts.i2, Poly::new(vec![3, 6, 3]));
        assert_eq!(parts.i3, Poly::new(vec![1, 1]));

        let k3 = k(3);
        let (r, parts) = triangle_identity(&k3, &tri(&k3, [0, 1, 2])).unwrap();
        assert!(r.holds);
        // each edge's common neighborhood is the opposite vertex
        assert_eq!(parts.i2, Poly::new(vec![3, 3]));
        assert_eq!(parts.i3, Poly::new(vec![1]));

        let d = diamond();
        for t in d.triangles() {
            assert!(triangle_identity(&d, &tri(&d, t)).unwrap().0.holds);
        }
        let c5 = Graph::cycle(5).unwrap();
        let bogus = Clique::new(&Graph::complete(5).unwrap(), &[0, 1, 2]).unwrap();
        assert!(triangle_identity(&c5, &bogus).is_err());
    }

    #[test]
    fn triangle_recurrence_examples() {
        let k3 = k(3);
        let r = check_triangle_recurrence(&k3, &tri(&k3, [0, 1, 2])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.rhs, p(&[1, 3, 0, 1]));
        let cond = &r.details["equivalent_condition"];
        assert_eq!(cond["lhs"], serde_json::json!([3, 3]));
        assert_eq!(cond["rhs"], serde_json::json!([0, 3]));
        assert_eq!(cond["holds"], serde_json::json!(false));
        let k4 = k(4);
        let r = check_triangle_recurrence(&k4, &tri(&k4, [1, 2, 3])).unwrap();
        assert_eq!(r.lhs, p(&[1, 4, 6, 4, 1]));
        // C(star) + x^3 (1 + x)
        assert_eq!(r.rhs, p(&[1, 4, 3, 1, 1]));
        assert!(!r.holds);
    }

    #[test]
    fn third_derivative_examples() {
        let r = check_third_derivative_k5free(&k(4)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[4, 4]), p(&[4, 4])));
        assert_eq!(r.details["connected"], serde_json::json!(true));
        let r = check_third_derivative_k5free(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[]), p(&[])));
        let r = check_third_derivative_k5free(&diamond()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (p(&[2]), p(&[2])));
        assert_eq!(
            check_third_derivative_k5free(&k(5)),
            Err(CliqueError::NotK5Free(5))
        );
    }

    #[test]
    fn kth_derivative_examples() {
        let k4 = k(4);
        let a = check_kth_derivative_general(&k4, 1).unwrap();
        let b = check_first_derivative(&k4).unwrap();
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
        let a = check_kth_derivative_general(&k4, 2).unwrap();
        let b = check_second_derivative(&k4).unwrap();
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
        let r = check_kth_derivative_general(&k(5), 3).unwrap();
        // (1/3!) d^3 (1+x)^5 = 10 (1+x)^2 and 10 triangles each with N = K2
        assert_eq!(r.lhs, p(&[10, 20, 10]));
        assert!(r.holds);
    }

    #[test]
    fn triangle_deletion_count_examples() {
        let k4 = k(4);
        let c = triangle_deletion_counts(&k4, &tri(&k4, [0, 1, 2])).unwrap();
        assert_eq!(c.predicted, [4, 3, 0, 0]);
        assert!(c.matches() && c.report.holds);

        let k3 = k(3);
        let c = triangle_deletion_counts(&k3, &tri(&k3, [0, 1, 2])).unwrap();
        assert_eq!(c.predicted, [3, 0, 0, 0]);
        assert!(c.matches());

        let d = diamond();
        let c = triangle_deletion_counts(&d, &tri(&d, [0, 1, 2])).unwrap();
        assert_eq!(c.direct, [4, 2, 0, 0]);
        assert!(c.matches());

        let k5 = k(5);
        assert!(triangle_deletion_counts(&k5, &tri(&k5, [0, 1, 2])).is_err());
    }

    #[test]
    fn clique_deletion_examples() {
        let k4 = k(4);
        let e = vec![k4.edge(0, 1).unwrap()];
        for interp in [Interpretation::AllSubsets, Interpretation::CliqueSubsets] {
            let r = clique_deletion_expansion(&k4, &e, interp).unwrap();
            assert!(r.holds);
            let edge = check_edge_recurrence(&k4, e[0]).unwrap();
            assert_eq!(r.rhs, edge.rhs);
        }
        let t = clique_edges(VertexSet::from_slice(&[0, 1, 2]));
        let a = clique_deletion_expansion(&k4, &t, Interpretation::AllSubsets).unwrap();
        let b = clique_deletion_expansion(&k4, &t, Interpretation::CliqueSubsets).unwrap();
        let (tri_report, _) = triangle_identity(&k4, &tri(&k4, [0, 1, 2])).unwrap();
        assert!(a.holds && b.holds);
        assert_eq!(a.rhs, tri_report.rhs);
        assert_eq!(b.rhs, tri_report.rhs);

        let all = clique_edges(VertexSet::below(4));
        let b = clique_deletion_expansion(&k4, &all, Interpretation::CliqueSubsets).unwrap();
        assert!(b.holds);
        let a = clique_deletion_expansion(&k4, &all, Interpretation::AllSubsets).unwrap();
        assert_eq!(a.lhs, p(&[1, 4, 6, 4, 1]));

        // not the full edge set of a clique
        let partial = vec![k4.edge(0, 1).unwrap(), k4.edge(1, 2).unwrap()];
        assert!(clique_deletion_expansion(&k4, &partial, Interpretation::AllSubsets).is_err());
        let p4 = Graph::path(4).unwrap();
        let path_edges: Vec<EdgeRef> = p4.edges().collect();
        assert!(
            clique_deletion_expansion(&p4, &path_edges, Interpretation::CliqueSubsets).is_err()
        );
    }

    #[test]
    fn handshake_examples() {
        let k4 = k(4);
        let r = check_handshake(&k4, 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(12), Side::Count(12)));
        let c5 = Graph::cycle(5).unwrap();
        let r = check_handshake(&c5, 1).unwrap();
        assert_eq!((r.lhs, r.rhs), (Side::Count(10), Side::Count(10)));
    }
}
