//! Clique incidence matrices and their double counts.
//!
//! Rows are always the k-cliques of `G` in lexicographic order. Columns are
//! (k+1)-cliques, deleted vertices, deleted edges, or deleted triangles,
//! depending on the [`MatrixKind`]. Entries are stored sparsely per row.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::cliques::{enumerate_cliques, Clique};
use crate::error::{CliqueError, Result};
use crate::graph::{EdgeRef, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// k-cliques against the (k+1)-cliques containing them.
    SubcliqueSuperclique,
    /// k-cliques against the vertex-deleted subgraphs they survive in.
    VertexDeck,
    /// k-cliques against the edge-deleted subgraphs they survive in.
    EdgeDeck,
    /// k-cliques against the triangle-edge-deleted subgraphs they survive in.
    TriangleDeck,
}

impl MatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::SubcliqueSuperclique => "super",
            MatrixKind::VertexDeck => "vdeck",
            MatrixKind::EdgeDeck => "edeck",
            MatrixKind::TriangleDeck => "tdeck",
        }
    }

    /// Smallest meaningful order for this kind.
    pub fn min_order(self) -> usize {
        match self {
            MatrixKind::SubcliqueSuperclique | MatrixKind::VertexDeck => 1,
            MatrixKind::EdgeDeck => 2,
            MatrixKind::TriangleDeck => 3,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixKind {
    type Err = CliqueError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "super" => Ok(MatrixKind::SubcliqueSuperclique),
            "vdeck" => Ok(MatrixKind::VertexDeck),
            "edeck" => Ok(MatrixKind::EdgeDeck),
            "tdeck" => Ok(MatrixKind::TriangleDeck),
            other => Err(CliqueError::InvalidConfig(format!(
                "unknown matrix kind {other:?} (expected super, vdeck, edeck or tdeck)"
            ))),
        }
    }
}

/// Row or column label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Label {
    Clique(Clique),
    DeletedVertex(usize),
    DeletedEdge(EdgeRef),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Clique(q) => f.write_str(&q.label()),
            Label::DeletedVertex(v) => write!(f, "{v}"),
            Label::DeletedEdge(e) => write!(f, "{e}"),
        }
    }
}

/// Labeled sparse 0/1 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    kind: MatrixKind,
    k: usize,
    rows: Vec<Label>,
    cols: Vec<Label>,
    // ascending column indices of the ones in each row
    entries: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    fn build<F>(kind: MatrixKind, k: usize, rows: Vec<Clique>, cols: Vec<Label>, mut hit: F) -> Self
    where
        F: FnMut(&Clique, &Label) -> bool,
    {
        let entries = rows
            .iter()
            .map(|q| {
                cols.iter()
                    .enumerate()
                    .filter(|(_, c)| hit(q, c))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        IncidenceMatrix {
            kind,
            k,
            rows: rows.into_iter().map(Label::Clique).collect(),
            cols,
            entries,
        }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        u8::from(self.entries[i].binary_search(&j).is_ok())
    }

    /// Ones as `(row, column)` pairs in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&j| (i, j)))
    }

    pub fn row_sums(&self) -> Vec<u128> {
        self.entries.iter().map(|r| r.len() as u128).collect()
    }

    pub fn col_sums(&self) -> Vec<u128> {
        let mut sums = vec![0u128; self.cols.len()];
        for (_, j) in self.ones() {
            sums[j] += 1;
        }
        sums
    }

    /// Grand total summed by rows and by columns.
    pub fn double_count(&self) -> (u128, u128) {
        (self.row_sums().iter().sum(), self.col_sums().iter().sum())
    }

    /// Dense rows for export: a header of column labels (first cell empty),
    /// then one row per row label.
    pub fn dense_records(&self) -> Vec<Vec<String>> {
        let mut out = Vec::with_capacity(self.rows.len() + 1);
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().map(Label::to_string));
        out.push(header);
        for (i, label) in self.rows.iter().enumerate() {
            let mut rec = vec![label.to_string()];
            rec.extend((0..self.cols.len()).map(|j| self.get(i, j).to_string()));
            out.push(rec);
        }
        out
    }
}

impl Serialize for IncidenceMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let labels = |ls: &[Label]| ls.iter().map(Label::to_string).collect::<Vec<_>>();
        let (by_rows, by_cols) = self.double_count();
        let mut st = s.serialize_struct("IncidenceMatrix", 9)?;
        st.serialize_field("kind", self.kind.as_str())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("rows", &labels(&self.rows))?;
        st.serialize_field("cols", &labels(&self.cols))?;
        st.serialize_field(
            "entries",
            &self.ones().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
        )?;
        st.serialize_field("row_sums", &self.row_sums())?;
        st.serialize_field("col_sums", &self.col_sums())?;
        st.serialize_field("total_by_rows", &by_rows)?;
        st.serialize_field("total_by_cols", &by_cols)?;
        st.end()
    }
}

fn require_order(kind: MatrixKind, k: usize) -> Result<()> {
    if k < kind.min_order() {
        Err(CliqueError::InvalidOrder {
            k,
            min: kind.min_order(),
        })
    } else {
        Ok(())
    }
}

/// Rows `Δ_k`, columns `Δ_{k+1}`, entry 1 when the row clique lies in the
/// column clique. Order 1 is the vertex-edge incidence matrix.
pub fn subclique_superclique_matrix(g: &Graph, k: usize) -> Result<IncidenceMatrix> {
    require_order(MatrixKind::SubcliqueSuperclique, k)?;
    let cat = enumerate_cliques(g, Some(k + 1))?;
    let cols = cat
        .of_size(k + 1)
        .iter()
        .cloned()
        .map(Label::Clique)
        .collect();
    Ok(IncidenceMatrix::build(
        MatrixKind::SubcliqueSuperclique,
        k,
        cat.of_size(k).to_vec(),
        cols,
        |q, c| matches!(c, Label::Clique(big) if q.set().is_subset(big.set())),
    ))
}

/// Rows `Δ_k`, one column per vertex `v` (standing for `G - v`), entry 1 when
/// the clique avoids `v`.
pub fn vertex_deck_matrix(g: &Graph, k: usize) -> Result<IncidenceMatrix> {
    require_order(MatrixKind::VertexDeck, k)?;
    let cat = enumerate_cliques(g, Some(k))?;
    let cols = (0..g.n()).map(Label::DeletedVertex).collect();
    Ok(IncidenceMatrix::build(
        MatrixKind::VertexDeck,
        k,
        cat.of_size(k).to_vec(),
        cols,
        |q, c| matches!(c, Label::DeletedVertex(v) if !q.set().contains(*v)),
    ))
}

/// Rows `Δ_k`, one column per edge `e` (standing for `G - e`), entry 1 when
/// `e` is not an edge of the clique.
pub fn edge_deck_matrix(g: &Graph, k: usize) -> Result<IncidenceMatrix> {
    require_order(MatrixKind::EdgeDeck, k)?;
    let cat = enumerate_cliques(g, Some(k))?;
    let cols = g.edges().map(Label::DeletedEdge).collect();
    Ok(IncidenceMatrix::build(
        MatrixKind::EdgeDeck,
        k,
        cat.of_size(k).to_vec(),
        cols,
        |q, c| matches!(c, Label::DeletedEdge(e) if !e.endpoints().is_subset(q.set())),
    ))
}

/// Rows `Δ_k`, one column per triangle `δ` (standing for `G - δ`), entry 1
/// when no edge of `δ` lies in the clique. Row sums are not constant in
/// general.
pub fn triangle_deck_matrix(g: &Graph, k: usize) -> Result<IncidenceMatrix> {
    require_order(MatrixKind::TriangleDeck, k)?;
    let cat = enumerate_cliques(g, Some(k.max(3)))?;
    let cols = cat.of_size(3).iter().cloned().map(Label::Clique).collect();
    Ok(IncidenceMatrix::build(
        MatrixKind::TriangleDeck,
        k,
        cat.of_size(k).to_vec(),
        cols,
        |q, c| matches!(c, Label::Clique(t) if q.set().intersect(t.set()).len() < 2),
    ))
}

pub fn build_matrix(g: &Graph, kind: MatrixKind, k: usize) -> Result<IncidenceMatrix> {
    match kind {
        MatrixKind::SubcliqueSuperclique => subclique_superclique_matrix(g, k),
        MatrixKind::VertexDeck => vertex_deck_matrix(g, k),
        MatrixKind::EdgeDeck => edge_deck_matrix(g, k),
        MatrixKind::TriangleDeck => triangle_deck_matrix(g, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn order_one_is_vertex_edge_incidence() {
        let m = subclique_superclique_matrix(&k(3), 1).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (3, 3));
        assert_eq!(m.row_sums(), vec![2, 2, 2]);
        assert_eq!(m.col_sums(), vec![2, 2, 2]);
        // vertex 0 lies on edges 0-1 and 0-2 but not 1-2
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(0, 2)), (1, 1, 0));
    }

    #[test]
    fn superclique_examples() {
        let m = subclique_superclique_matrix(&k(4), 2).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (6, 4));
        assert!(m.row_sums().iter().all(|&s| s == 2));
        assert!(m.col_sums().iter().all(|&s| s == 3));
        assert_eq!(m.double_count(), (12, 12));

        let m = subclique_superclique_matrix(&Graph::cycle(5).unwrap(), 2).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (5, 0));
        assert_eq!(m.double_count(), (0, 0));

        let m = subclique_superclique_matrix(&k(3), 9).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (0, 0));
        assert!(subclique_superclique_matrix(&k(3), 0).is_err());
    }

    #[test]
    fn vertex_deck_examples() {
        let m = vertex_deck_matrix(&Graph::cycle(5).unwrap(), 2).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (5, 5));
        assert!(m.row_sums().iter().all(|&s| s == 3));
        assert!(m.col_sums().iter().all(|&s| s == 3));
        assert_eq!(m.double_count(), (15, 15));

        let m = vertex_deck_matrix(&k(4), 4).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (1, 4));
        assert_eq!(m.double_count(), (0, 0));

        let m = vertex_deck_matrix(&k(2), 2).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (1, 2));
        assert_eq!(m.ones().count(), 0);
    }

    #[test]
    fn edge_deck_examples() {
        let m = edge_deck_matrix(&k(4), 3).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (4, 6));
        assert!(m.row_sums().iter().all(|&s| s == 3));
        assert!(m.col_sums().iter().all(|&s| s == 2));

        let m = edge_deck_matrix(&k(3), 3).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (1, 3));
        assert_eq!(m.ones().count(), 0);

        let m = edge_deck_matrix(&k(4), 2).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (6, 6));
        assert!(m.row_sums().iter().all(|&s| s == 5));
        assert!(m.col_sums().iter().all(|&s| s == 5));
        assert!(edge_deck_matrix(&k(4), 1).is_err());
    }

    #[test]
    fn triangle_deck_examples() {
        let two = k(3).disjoint_union(&k(3)).unwrap();
        let m = triangle_deck_matrix(&two, 3).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (2, 2));
        assert_eq!(m.row_sums(), vec![1, 1]);
        assert_eq!(
            (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)),
            (0, 1, 1, 0)
        );

        let m = triangle_deck_matrix(&k(4), 3).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (4, 4));
        assert_eq!(m.ones().count(), 0);

        let m = triangle_deck_matrix(&Graph::cycle(6).unwrap(), 3).unwrap();
        assert_eq!(m.n_rows(), 0);
        assert!(triangle_deck_matrix(&k(4), 2).is_err());
    }

    #[test]
    fn export_shapes() {
        let m = subclique_superclique_matrix(&k(3), 1).unwrap();
        let recs = m.dense_records();
        assert_eq!(recs[0], ["", "0-1", "0-2", "1-2"]);
        assert_eq!(recs[1], ["0", "1", "1", "0"]);
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["kind"], "super");
        assert_eq!(v["total_by_rows"], 6);
        assert_eq!(v["entries"][0], serde_json::json!([0, 0]));
        let d = vertex_deck_matrix(&k(3), 1).unwrap();
        assert_eq!(d.dense_records()[0], ["", "0", "1", "2"]);
        let e = edge_deck_matrix(&k(3), 2).unwrap();
        assert_eq!(e.dense_records()[0], ["", "0-1", "0-2", "1-2"]);
    }
}
