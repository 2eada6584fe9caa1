//! Proper 3-coloring of ABAB-free hypergraphs.
//!
//! Pipeline: every hyperedge of size at least 3 that contains no 2-edge gets an
//! unsplittable consecutive pair added as a new 2-edge (saturation). The 2-edges
//! then form a graph whose edges do not interleave in the vertex order, i.e. an
//! outerplanar drawing, which is 2-degenerate and greedily 3-colorable. A proper
//! coloring of that graph is proper for the original hypergraph because every
//! hyperedge of size at least 2 contains one of its edges.
//!
//! Routines here trust the caller that the input is ABAB-free. When that turns
//! out to be false they fail with [`Error::NotAbabFree`] rather than return a
//! wrong coloring.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{is_proper_coloring, Coloring, OrderedHypergraph};
use crate::pattern::{is_abl_free_ordered, HalfIntegerL};

/// True iff `b` splits the pair `p < q`: `p, q` are outside `b`, some vertex of
/// `b` lies strictly between them, and some other vertex of `b` lies outside
/// `[p, q]` (a `BEBE`- or `EBEB`-sequence).
pub fn splits(pair: (usize, usize), b: &[usize]) -> bool {
    let (p, q) = pair;
    debug_assert!(p < q);
    if b.binary_search(&p).is_ok() || b.binary_search(&q).is_ok() {
        return false;
    }
    let between = b.iter().any(|&x| p < x && x < q);
    let outside = b.iter().any(|&x| x < p || x > q);
    between && outside
}

/// Returns the first hyperedge of `h` that splits `pair`, if any.
pub fn splitter(pair: (usize, usize), h: &OrderedHypergraph) -> Option<&[usize]> {
    h.edges()
        .iter()
        .find(|b| splits(pair, b))
        .map(|b| b.as_slice())
}

/// Leftmost consecutive pair of `a` that no hyperedge of `h` splits.
///
/// For an ABAB-free `h` such a pair always exists; failure is reported as
/// [`Error::NotAbabFree`] with the splitting hyperedge of every pair.
pub fn find_unsplittable_pair(a: &[usize], h: &OrderedHypergraph) -> Result<(usize, usize)> {
    if a.len() < 2 {
        return Err(Error::Invalid(format!(
            "hyperedge {a:?} has fewer than two vertices"
        )));
    }
    let mut certificate = Vec::new();
    for w in a.windows(2) {
        let pair = (w[0], w[1]);
        match splitter(pair, h) {
            None => return Ok(pair),
            Some(b) => certificate.push(format!("{{{},{}}} split by {b:?}", pair.0, pair.1)),
        }
    }
    Err(Error::NotAbabFree(format!(
        "no unsplittable consecutive pair in hyperedge {a:?} ({})",
        certificate.join("; ")
    )))
}

fn is_hit(edge: &[usize], pairs: &HashSet<(usize, usize)>) -> bool {
    if edge.len() * edge.len() / 2 <= pairs.len() {
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                if pairs.contains(&(u, v)) {
                    return true;
                }
            }
        }
        false
    } else {
        pairs
            .iter()
            .any(|&(u, v)| edge.binary_search(&u).is_ok() && edge.binary_search(&v).is_ok())
    }
}

/// Adds unsplittable pairs until every hyperedge of size at least 3 contains a
/// 2-edge. The lexicographically least unhit hyperedge is processed first, and
/// each pair is tested against the hypergraph augmented so far.
pub fn saturate(h: &OrderedHypergraph) -> Result<OrderedHypergraph> {
    let mut out = h.clone();
    let mut pairs: HashSet<(usize, usize)> = out
        .edges()
        .iter()
        .filter(|e| e.len() == 2)
        .map(|e| (e[0], e[1]))
        .collect();
    loop {
        let unhit = out
            .edges()
            .iter()
            .find(|e| e.len() >= 3 && !is_hit(e, &pairs))
            .cloned();
        let Some(edge) = unhit else {
            return Ok(out);
        };
        let (p, q) = find_unsplittable_pair(&edge, &out)?;
        out.insert_edge(vec![p, q])?;
        pairs.insert((p, q));
    }
}

/// Graph on the hypergraph's vertices whose edges are its 2-element hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TwoEdgeGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= n || e.1 >= n {
                return Err(Error::Invalid(format!("bad graph edge {e:?} on {n} vertices")));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

pub fn two_edge_graph(h: &OrderedHypergraph) -> TwoEdgeGraph {
    let edges = h
        .edges()
        .iter()
        .filter(|e| e.len() == 2)
        .map(|e| (e[0], e[1]))
        .collect();
    TwoEdgeGraph::new(h.vertex_count(), edges).expect("hyperedges are valid graph edges")
}

/// Two graph edges `{a,b}`, `{c,d}` with `a < c < b < d`. This is also an ABAB
/// witness for the corresponding hyperedges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingPair {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edges {{{},{}}} and {{{},{}}} interleave",
            self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

/// Checks that no two edges interleave in the vertex order.
pub fn certify_noncrossing(g: &TwoEdgeGraph) -> std::result::Result<(), CrossingPair> {
    // Edges are sorted by left endpoint, so only c > a needs checking.
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if c >= b {
                break;
            }
            if a < c && c < b && b < d {
                return Err(CrossingPair {
                    first: (a, b),
                    second: (c, d),
                });
            }
        }
    }
    Ok(())
}

/// Vertices in smallest-last order: the vertex removed first comes last.
/// Ties on degree remove the highest index first, so low indices are colored
/// first. Also returns the degeneracy.
pub fn smallest_last_order(g: &TwoEdgeGraph) -> (Vec<usize>, usize) {
    let adj = g.adjacency();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n];
    let mut removal = Vec::with_capacity(g.n);
    let mut degeneracy = 0;
    for _ in 0..g.n {
        let v = (0..g.n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
            .unwrap();
        degeneracy = degeneracy.max(degree[v]);
        removed[v] = true;
        removal.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    removal.reverse();
    (removal, degeneracy)
}

/// Greedy coloring along `order`, each vertex getting the least color unused by
/// its already-colored neighbors.
pub fn greedy_coloring(g: &TwoEdgeGraph, order: &[usize]) -> Coloring {
    let adj = g.adjacency();
    let mut colors = vec![usize::MAX; g.n];
    for &v in order {
        let used: HashSet<usize> = adj[v]
            .iter()
            .map(|&u| colors[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    Coloring::new(colors)
}

/// Proper coloring with at most three colors of an ABAB-free hypergraph.
pub fn three_color(h: &OrderedHypergraph) -> Result<Coloring> {
    let saturated = saturate(h)?;
    let graph = two_edge_graph(&saturated);
    certify_noncrossing(&graph).map_err(|c| Error::NotAbabFree(c.to_string()))?;
    let (order, degeneracy) = smallest_last_order(&graph);
    if degeneracy > 2 {
        return Err(Error::NotAbabFree(format!(
            "2-edge graph has degeneracy {degeneracy}, so it is not outerplanar"
        )));
    }
    let coloring = greedy_coloring(&graph, &order);
    if coloring.colors().iter().any(|&c| c > 2) {
        return Err(Error::NotAbabFree("greedy coloring needed a fourth color".into()));
    }
    if !is_proper_coloring(h, &coloring)? {
        return Err(Error::NotAbabFree(
            "saturated hypergraph has a hyperedge without a 2-edge".into(),
        ));
    }
    Ok(coloring)
}

/// [`three_color`] preceded by a full ABAB-freeness check of the input order.
pub fn three_color_verified(h: &OrderedHypergraph) -> Result<Coloring> {
    if let Some(v) = is_abl_free_ordered(h, HalfIntegerL::ABAB).violation() {
        return Err(Error::NotAbabFree(format!(
            "hyperedges {:?} and {:?} alternate at {:?}",
            v.edge_a, v.edge_b, v.witness
        )));
    }
    three_color(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::colorability_oracle;

    fn hyper(n: usize, edges: &[&[usize]]) -> OrderedHypergraph {
        OrderedHypergraph::with_vertex_count(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn split_examples() {
        assert!(splits((1, 3), &[0, 2]));
        assert!(!splits((0, 1), &[2, 3]));
        assert!(!splits((1, 3), &[1, 2]));
        assert!(splits((0, 2), &[1, 3]));
        assert!(!splits((0, 3), &[1, 2]));
    }

    #[test]
    fn unsplittable_examples() {
        let h = hyper(3, &[&[0, 1, 2], &[1, 2]]);
        assert_eq!(find_unsplittable_pair(&[0, 1, 2], &h).unwrap(), (0, 1));
        let h = hyper(4, &[&[0, 1, 2, 3], &[0, 1], &[2, 3]]);
        assert_eq!(find_unsplittable_pair(&[0, 1, 2, 3], &h).unwrap(), (0, 1));
        let h = hyper(6, &[&[1, 2, 4], &[3, 4, 5]]);
        assert_eq!(find_unsplittable_pair(&[1, 2, 4], &h).unwrap(), (1, 2));
    }

    #[test]
    fn unsplittable_failure_is_a_certificate() {
        // {0,2} is split by {1,3}; the input is not ABAB-free.
        let h = hyper(4, &[&[0, 2], &[1, 3]]);
        let err = find_unsplittable_pair(&[0, 2], &h).unwrap_err();
        assert!(matches!(err, Error::NotAbabFree(_)));
    }

    #[test]
    fn saturation_examples() {
        let h = hyper(3, &[&[0, 1, 2]]);
        assert_eq!(saturate(&h).unwrap().edges(), &[vec![0, 1], vec![0, 1, 2]]);

        let h = hyper(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(saturate(&h).unwrap(), h);

        let h = hyper(4, &[&[0, 1, 2], &[1, 2, 3]]);
        let s = saturate(&h).unwrap();
        assert_eq!(
            s.edges(),
            &[vec![0, 1], vec![0, 1, 2], vec![1, 2], vec![1, 2, 3]]
        );
    }

    #[test]
    fn two_edge_graph_examples() {
        assert_eq!(two_edge_graph(&hyper(3, &[&[0, 1], &[0, 1, 2]])).edges(), &[(0, 1)]);
        assert_eq!(
            two_edge_graph(&hyper(3, &[&[0, 1], &[1, 2], &[0, 2]])).edges(),
            &[(0, 1), (0, 2), (1, 2)]
        );
        assert!(two_edge_graph(&hyper(3, &[&[0, 1, 2]])).edges().is_empty());
    }

    #[test]
    fn crossing_examples() {
        let g = TwoEdgeGraph::new(4, vec![(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            certify_noncrossing(&g),
            Err(CrossingPair { first: (0, 2), second: (1, 3) })
        );
        let g = TwoEdgeGraph::new(4, vec![(0, 3), (1, 2)]).unwrap();
        assert_eq!(certify_noncrossing(&g), Ok(()));
        let g = TwoEdgeGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(certify_noncrossing(&g), Ok(()));
    }

    #[test]
    fn colors_triangle_with_three() {
        let h = hyper(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(colorability_oracle(&h, 2).unwrap().is_none());
        let c = three_color(&h).unwrap();
        assert!(is_proper_coloring(&h, &c).unwrap());
        assert_eq!(c.palette_size(), 3);
    }

    #[test]
    fn colors_single_big_edge() {
        let h = hyper(5, &[&[0, 1, 2, 3, 4]]);
        let c = three_color(&h).unwrap();
        assert_ne!(c.color(0), c.color(1));
    }

    #[test]
    fn colors_prefix_edges() {
        let h = hyper(3, &[&[0], &[0, 1], &[0, 1, 2]]);
        let c = three_color(&h).unwrap();
        assert!(is_proper_coloring(&h, &c).unwrap());
        assert!(c.palette_size() <= 2);
    }

    #[test]
    fn rejects_non_free_input() {
        let h = hyper(4, &[&[0, 2], &[1, 3]]);
        assert!(matches!(three_color(&h), Err(Error::NotAbabFree(_))));
        assert!(matches!(three_color_verified(&h), Err(Error::NotAbabFree(_))));
    }

    #[test]
    fn outerplanar_graphs_are_two_degenerate() {
        // Fan triangulation of a hexagon.
        let g = TwoEdgeGraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (0, 3), (0, 4)],
        )
        .unwrap();
        assert_eq!(certify_noncrossing(&g), Ok(()));
        let (order, degeneracy) = smallest_last_order(&g);
        assert_eq!(degeneracy, 2);
        let colors = greedy_coloring(&g, &order);
        assert!(colors.colors().iter().all(|&c| c < 3));
    }
}
