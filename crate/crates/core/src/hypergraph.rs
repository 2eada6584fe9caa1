//! Hypergraphs over a linearly ordered vertex set, colorings, and the
//! exhaustive colorability oracle.
//!
//! Vertex `i` is the `i`-th vertex of the order; hyperedges are stored as
//! strictly increasing index lists, deduplicated and kept sorted, so two
//! hypergraphs with the same vertex labels and the same edge set compare equal.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of color assignments the oracle is willing to enumerate.
pub const ORACLE_SEARCH_LIMIT: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedHypergraph {
    vertices: Vec<String>,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphDoc {
    vertices: Vec<String>,
    edges: Vec<Vec<i64>>,
}

impl OrderedHypergraph {
    /// Builds a hypergraph, validating every edge. Duplicate edges are merged.
    pub fn new(vertices: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let count = vertices.len();
        let mut set = BTreeSet::new();
        for (pos, edge) in edges.into_iter().enumerate() {
            validate_edge(pos, &edge, count)?;
            set.insert(edge);
        }
        Ok(Self {
            vertices,
            edges: set.into_iter().collect(),
        })
    }

    /// Same as [`OrderedHypergraph::new`] with labels `v0, v1, ...`.
    pub fn with_vertex_count(count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(default_labels("v", count), edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: HypergraphDoc = serde_json::from_str(text)?;
        let count = doc.vertices.len();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for raw in doc.edges {
            let mut edge = Vec::with_capacity(raw.len());
            for &index in &raw {
                if index < 0 || index as u64 >= count as u64 {
                    return Err(Error::IndexOutOfRange {
                        edge: raw.iter().map(|&i| i.max(0) as usize).collect(),
                        index: index.max(0) as usize,
                        count,
                    });
                }
                edge.push(index as usize);
            }
            edges.push(edge);
        }
        Self::new(doc.vertices, edges)
    }

    /// Compact JSON in the `{"vertices":[...],"edges":[[...]...]}` layout.
    pub fn to_json(&self) -> String {
        let doc = HypergraphDoc {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|&i| i as i64).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("hypergraph serialization cannot fail")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    /// Inserts an edge, keeping the edge list sorted. Returns `false` if it was
    /// already present.
    pub fn insert_edge(&mut self, edge: Vec<usize>) -> Result<bool> {
        validate_edge(self.edges.len(), &edge, self.vertices.len())?;
        match self.edges.binary_search(&edge) {
            Ok(_) => Ok(false),
            Err(at) => {
                self.edges.insert(at, edge);
                Ok(true)
            }
        }
    }

    /// Removes an edge. Returns `false` if it was not present.
    pub fn remove_edge(&mut self, edge: &[usize]) -> bool {
        match self.edges.binary_search_by(|e| e.as_slice().cmp(edge)) {
            Ok(at) => {
                self.edges.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    /// Returns the hypergraph whose `k`-th vertex is vertex `order[k]` of `self`.
    ///
    /// `order` must be a permutation of `0..vertex_count()`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if order.len() != n {
            return Err(Error::Invalid(format!(
                "order has {} entries, expected {n}",
                order.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (k, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::Invalid(format!("{order:?} is not a permutation")));
            }
            position[v] = k;
        }
        let vertices = order.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut mapped: Vec<usize> = e.iter().map(|&v| position[v]).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        Self::new(vertices, edges)
    }
}

pub(crate) fn default_labels(prefix: &str, count: usize) -> Vec<String> {
    (0..count).map(|i| format!("{prefix}{i}")).collect()
}

fn validate_edge(pos: usize, edge: &[usize], count: usize) -> Result<()> {
    if edge.is_empty() {
        return Err(Error::EmptyHyperedge { edge: pos });
    }
    if let Some(&index) = edge.iter().find(|&&i| i >= count) {
        return Err(Error::IndexOutOfRange {
            edge: edge.to_vec(),
            index,
            count,
        });
    }
    if edge.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing {
            edge: edge.to_vec(),
        });
    }
    Ok(())
}

pub fn parse_hypergraph(text: &str) -> Result<OrderedHypergraph> {
    OrderedHypergraph::from_json(text)
}

/// A color class per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColoringDoc {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Self { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, vertex: usize) -> usize {
        self.colors[vertex]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn palette_size(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringDoc {
            colors: self.colors.clone(),
            palette: self.palette_size(),
        })
        .expect("coloring serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringDoc = serde_json::from_str(text)?;
        let coloring = Self::new(doc.colors);
        if coloring.palette_size() != doc.palette {
            return Err(Error::Invalid(format!(
                "palette field says {} but {} colors are used",
                doc.palette,
                coloring.palette_size()
            )));
        }
        Ok(coloring)
    }
}

/// True iff every hyperedge with at least two vertices sees two colors.
pub fn is_proper_coloring(h: &OrderedHypergraph, coloring: &Coloring) -> Result<bool> {
    if coloring.len() != h.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: h.vertex_count(),
            got: coloring.len(),
        });
    }
    Ok(monochromatic_edge(h, coloring).is_none())
}

/// Returns the first monochromatic hyperedge of size at least two, if any.
pub fn monochromatic_edge<'a>(h: &'a OrderedHypergraph, coloring: &Coloring) -> Option<&'a [usize]> {
    h.edges()
        .iter()
        .find(|e| e.len() >= 2 && e.iter().all(|&v| coloring.color(v) == coloring.color(e[0])))
        .map(|e| e.as_slice())
}

/// Exhaustive search for a proper `c`-coloring.
///
/// Returns the lexicographically least proper coloring (as a color vector), or
/// `None` when the hypergraph is not `c`-colorable. Refuses instances with more
/// than [`ORACLE_SEARCH_LIMIT`] assignments.
pub fn colorability_oracle(h: &OrderedHypergraph, c: usize) -> Result<Option<Coloring>> {
    if c == 0 {
        return Err(Error::Invalid("number of colors must be positive".into()));
    }
    let n = h.vertex_count();
    let space = (c as u128).checked_pow(n as u32);
    if space.is_none_or(|s| s > ORACLE_SEARCH_LIMIT) {
        return Err(Error::TooLarge(format!(
            "{c}^{n} color assignments exceed the limit of {ORACLE_SEARCH_LIMIT}"
        )));
    }

    // Each edge is checked once its last vertex is assigned.
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges().iter().filter(|e| e.len() >= 2) {
        closing[*e.last().unwrap()].push(e);
    }

    let mut colors = vec![0usize; n];
    if n == 0 {
        return Ok(Some(Coloring::new(colors)));
    }
    let mut v = 0usize;
    let mut next = vec![0usize; n];
    loop {
        if next[v] == c {
            next[v] = 0;
            if v == 0 {
                return Ok(None);
            }
            v -= 1;
            continue;
        }
        colors[v] = next[v];
        next[v] += 1;
        let ok = closing[v]
            .iter()
            .all(|e| e.iter().any(|&u| colors[u] != colors[v]));
        if ok {
            if v + 1 == n {
                return Ok(Some(Coloring::new(colors)));
            }
            v += 1;
        }
    }
}
