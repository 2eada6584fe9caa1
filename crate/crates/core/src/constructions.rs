//! Tree hypergraphs `H(a, b)` and the non-`c`-colorable ABABA-free family `H_c`.
//!
//! All constructions lay the tree out in DFS order, so vertex `i` of the
//! hypergraph is the `i`-th vertex visited. Siblings are visited in the vertex
//! order of the block hypergraph placed on them.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{default_labels, Coloring, OrderedHypergraph};

/// Largest vertex count any construction will materialize.
pub const MAX_VERTICES: usize = 1_000_000;

/// Counts beyond this many bits are refused instead of computed.
const MAX_COUNT_BITS: u64 = 1 << 20;

/// A rooted tree stored in DFS order; node `0` is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl LabeledTree {
    /// The full `arity`-ary tree whose root-to-leaf paths have `depth` vertices.
    pub fn full(arity: usize, depth: usize) -> Result<Self> {
        let count = full_tree_size(arity, depth)?;
        let mut parent = vec![None; count];
        let mut children = vec![Vec::new(); count];
        let sizes = subtree_sizes(arity, depth);
        // (position, level)
        let mut stack = vec![(0usize, 0usize)];
        while let Some((pos, level)) = stack.pop() {
            if level + 1 == depth {
                continue;
            }
            for q in 0..arity {
                let child = pos + 1 + q * sizes[level + 1];
                parent[child] = Some(pos);
                children[pos].push(child);
                stack.push((child, level + 1));
            }
        }
        Ok(Self { parent, children })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.children[node].is_empty()
    }

    /// Vertex sets of all root-to-leaf paths, leaves in DFS order.
    pub fn root_to_leaf_paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.is_empty() {
            return out;
        }
        let mut stack = vec![(0usize, vec![0usize])];
        while let Some((node, path)) = stack.pop() {
            if self.is_leaf(node) {
                out.push(path);
                continue;
            }
            for &c in self.children[node].iter().rev() {
                let mut next = path.clone();
                next.push(c);
                stack.push((c, next));
            }
        }
        out
    }
}

/// Number of vertices in a subtree rooted at each level.
fn subtree_sizes(arity: usize, depth: usize) -> Vec<usize> {
    let mut sizes = vec![1usize; depth.max(1)];
    for level in (0..depth.saturating_sub(1)).rev() {
        sizes[level] = 1 + arity * sizes[level + 1];
    }
    sizes
}

fn geometric_sum(base: &BigUint, terms: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..terms {
        total += &power;
        power *= base;
        if power.bits() > MAX_COUNT_BITS {
            return Err(Error::TooLarge(format!(
                "vertex count exceeds 2^{MAX_COUNT_BITS}"
            )));
        }
    }
    Ok(total)
}

fn full_tree_size(arity: usize, depth: usize) -> Result<usize> {
    if arity == 0 || depth == 0 {
        return Err(Error::Invalid("tree arity and depth must be at least 1".into()));
    }
    let count = geometric_sum(&BigUint::from(arity), depth)?;
    match count.to_usize() {
        Some(n) if n <= MAX_VERTICES => Ok(n),
        _ => Err(Error::TooLarge(format!(
            "tree with {count} vertices exceeds the limit of {MAX_VERTICES}"
        ))),
    }
}

/// Places a copy of `block` on the children of every internal vertex of the
/// full `|block|`-ary tree with root-to-leaf paths of `depth` vertices.
///
/// Hyperedges: every root-to-leaf path (vertical) and, for every internal
/// vertex, the edges of `block` mapped onto its children (horizontal). Sibling
/// order follows the vertex order of `block`.
pub fn block_tree_hypergraph(block: &OrderedHypergraph, depth: usize) -> Result<OrderedHypergraph> {
    let arity = block.vertex_count();
    let tree = LabeledTree::full(arity, depth)?;
    let mut edges = tree.root_to_leaf_paths();
    for node in 0..tree.len() {
        let kids = tree.children(node);
        if kids.is_empty() {
            continue;
        }
        for e in block.edges() {
            edges.push(e.iter().map(|&v| kids[v]).collect());
        }
    }
    OrderedHypergraph::new(default_labels("v", tree.len()), edges)
}

/// `H(a, b)`: children of each internal vertex form a horizontal hyperedge of
/// size `a`, root-to-leaf paths form vertical hyperedges of size `b`.
pub fn build_tree_hypergraph(a: usize, b: usize) -> Result<OrderedHypergraph> {
    if a == 0 || b == 0 {
        return Err(Error::Invalid("a and b must be at least 1".into()));
    }
    let siblings = OrderedHypergraph::with_vertex_count(a, vec![(0..a).collect()])?;
    block_tree_hypergraph(&siblings, b)
}

/// One step of the recursion: `H_c` from `H_{c-1}`.
pub fn extend_hc(previous: &OrderedHypergraph, m: usize) -> Result<OrderedHypergraph> {
    if m < 2 {
        return Err(Error::Invalid("m must be at least 2".into()));
    }
    block_tree_hypergraph(previous, m)
}

/// Number of vertices of `H_c` for uniformity `m`.
pub fn vertex_count_hc(c: usize, m: usize) -> Result<BigUint> {
    if c < 2 || m < 2 {
        return Err(Error::Invalid("c and m must be at least 2".into()));
    }
    let mut n = geometric_sum(&BigUint::from(m), m)?;
    for _ in 3..=c {
        n = geometric_sum(&n, m)?;
    }
    Ok(n)
}

/// The `m`-uniform, ABABA-free, non-`c`-colorable hypergraph `H_c`, in DFS order.
pub fn build_hc(c: usize, m: usize) -> Result<OrderedHypergraph> {
    let count = vertex_count_hc(c, m)?;
    if count > BigUint::from(MAX_VERTICES) {
        return Err(Error::TooLarge(format!(
            "H_{c} with m = {m} has {count} vertices, limit is {MAX_VERTICES}"
        )));
    }
    let mut h = build_tree_hypergraph(m, m)?;
    for _ in 3..=c {
        h = extend_hc(&h, m)?;
    }
    Ok(h)
}

/// Given a coloring of `build_hc(c, m)` with at most `c` colors, returns a
/// monochromatic hyperedge.
///
/// Follows the root's color downwards: whenever some child shares the color
/// we descend into it, and reaching a leaf yields a monochromatic vertical
/// edge. Otherwise the children avoid that color, so the copy of `H_{c-1}` on
/// them uses at most `c - 1` colors and the search recurses into that copy.
pub fn monochromatic_edge_hc(c: usize, m: usize, coloring: &Coloring) -> Result<Vec<usize>> {
    let count = vertex_count_hc(c, m)?;
    if count != BigUint::from(coloring.len()) {
        return Err(Error::LengthMismatch {
            expected: count.to_usize().unwrap_or(usize::MAX),
            got: coloring.len(),
        });
    }
    if coloring.palette_size() > c {
        return Err(Error::Invalid(format!(
            "coloring uses {} colors, more than {c}",
            coloring.palette_size()
        )));
    }
    // Block sizes: sizes[k] = |H_k|, with sizes[1] = m standing for a plain
    // sibling hyperedge.
    let mut sizes = vec![0usize, m];
    for k in 2..=c {
        let a = sizes[k - 1];
        sizes.push(full_tree_size(a, m)?);
    }
    let vertices: Vec<usize> = (0..coloring.len()).collect();
    let mut edge = descend(c, m, &sizes, &vertices, coloring)?;
    edge.sort_unstable();
    Ok(edge)
}

fn descend(
    k: usize,
    m: usize,
    sizes: &[usize],
    vertices: &[usize],
    coloring: &Coloring,
) -> Result<Vec<usize>> {
    if k == 1 {
        let first = coloring.color(vertices[0]);
        if vertices.iter().all(|&v| coloring.color(v) == first) {
            return Ok(vertices.to_vec());
        }
        return Err(Error::Invalid(
            "coloring uses more colors than the construction allows".into(),
        ));
    }
    let arity = sizes[k - 1];
    let subtree = subtree_sizes(arity, m);
    let root_color = coloring.color(vertices[0]);
    let mut pos = 0usize;
    let mut path = vec![vertices[0]];
    for level in 0..m - 1 {
        let kids: Vec<usize> = (0..arity)
            .map(|q| vertices[pos + 1 + q * subtree[level + 1]])
            .collect();
        match (0..arity).find(|&q| coloring.color(kids[q]) == root_color) {
            Some(q) => {
                pos += 1 + q * subtree[level + 1];
                path.push(vertices[pos]);
            }
            None => return descend(k - 1, m, sizes, &kids, coloring),
        }
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::colorability_oracle;

    #[test]
    fn tree_hypergraph_examples() {
        let h = build_tree_hypergraph(2, 2).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);

        let h = build_tree_hypergraph(3, 1).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edges(), &[vec![0]]);

        let h = build_tree_hypergraph(3, 3).unwrap();
        assert_eq!(h.vertex_count(), 13);
        assert_eq!(h.edge_count(), 13);
        assert!(h.edges().iter().all(|e| e.len() == 3));
    }

    #[test]
    fn tree_is_in_dfs_order() {
        let t = LabeledTree::full(2, 3).unwrap();
        assert_eq!(t.children(0), &[1, 4]);
        assert_eq!(t.children(1), &[2, 3]);
        assert_eq!(t.children(4), &[5, 6]);
        assert_eq!(t.parent(6), Some(4));
        assert_eq!(
            t.root_to_leaf_paths(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 4, 5], vec![0, 4, 6]]
        );
    }

    #[test]
    fn hc_examples() {
        assert_eq!(build_hc(2, 2).unwrap(), build_tree_hypergraph(2, 2).unwrap());
        let k4 = build_hc(3, 2).unwrap();
        assert_eq!(k4.vertex_count(), 4);
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3],
        ];
        assert_eq!(k4.edges(), expected.as_slice());
        assert!(colorability_oracle(&k4, 3).unwrap().is_none());
        assert_eq!(build_hc(3, 3).unwrap().vertex_count(), 183);
    }

    #[test]
    fn counts() {
        assert_eq!(vertex_count_hc(2, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(vertex_count_hc(3, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(vertex_count_hc(3, 3).unwrap(), BigUint::from(183u32));
        // 1 + 183 + 183^2
        assert_eq!(vertex_count_hc(4, 3).unwrap(), BigUint::from(33673u32));
        assert!(vertex_count_hc(1, 3).is_err());
        assert!(matches!(vertex_count_hc(40, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn guards() {
        assert!(matches!(build_hc(4, 4), Err(Error::TooLarge(_))));
        assert!(matches!(build_tree_hypergraph(10, 8), Err(Error::TooLarge(_))));
        assert!(build_tree_hypergraph(0, 2).is_err());
    }

    #[test]
    fn extraction_on_small_instance() {
        // All-zero coloring: the leftmost vertical path is monochromatic.
        let c = Coloring::new(vec![0; 4]);
        assert_eq!(monochromatic_edge_hc(3, 2, &c).unwrap(), vec![0, 1]);
        // Root alone in its color class forces recursion into the K3 block.
        let c = Coloring::new(vec![2, 0, 1, 0]);
        assert_eq!(monochromatic_edge_hc(3, 2, &c).unwrap(), vec![1, 3]);
        assert!(monochromatic_edge_hc(3, 2, &Coloring::new(vec![0, 1, 2, 3])).is_err());
    }
}
