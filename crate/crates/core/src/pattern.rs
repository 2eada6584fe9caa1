//! Detection of `(AB)^l`-sequences.
//!
//! Two hyperedges `A`, `B` form an `(AB)^l`-sequence when the vertex order
//! contains `2l` vertices `a1 < b1 < a2 < b2 < ...` with the `a`s in `A \ B`
//! and the `b`s in `B \ A`. Hyperedges are index lists, so "order" is simply
//! numeric order of indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::OrderedHypergraph;

/// Largest vertex count accepted by [`find_abl_free_order`].
pub const ORDER_SEARCH_LIMIT: usize = 10;

/// The parameter `l` of `(AB)^l`, stored as the sequence length `2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIntegerL {
    twice_l: usize,
}

impl HalfIntegerL {
    pub const ABA: HalfIntegerL = HalfIntegerL { twice_l: 3 };
    pub const ABAB: HalfIntegerL = HalfIntegerL { twice_l: 4 };
    pub const ABABA: HalfIntegerL = HalfIntegerL { twice_l: 5 };

    pub fn from_twice(twice_l: usize) -> Result<Self> {
        if twice_l < 2 {
            return Err(Error::Invalid(format!(
                "2l must be at least 2, got {twice_l}"
            )));
        }
        Ok(Self { twice_l })
    }

    /// Sequence length `2l`.
    pub fn twice(self) -> usize {
        self.twice_l
    }
}

impl FromStr for HalfIntegerL {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("`{s}` is not a half-integer l >= 1"));
        let s = s.trim();
        let twice = match s.split_once('.') {
            None => s.parse::<usize>().map_err(|_| bad())?.checked_mul(2).ok_or_else(bad)?,
            Some((whole, frac)) => {
                let whole = whole.parse::<usize>().map_err(|_| bad())?;
                let half = match frac.trim_end_matches('0') {
                    "" => 0,
                    "5" => 1,
                    _ => return Err(bad()),
                };
                whole.checked_mul(2).ok_or_else(bad)? + half
            }
        };
        Self::from_twice(twice).map_err(|_| bad())
    }
}

impl fmt::Display for HalfIntegerL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice_l.is_multiple_of(2) {
            write!(f, "{}", self.twice_l / 2)
        } else {
            write!(f, "{}.5", self.twice_l / 2)
        }
    }
}

/// Two hyperedges together with an alternating witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternViolation {
    pub edge_a: Vec<usize>,
    pub edge_b: Vec<usize>,
    /// `a1 < b1 < a2 < ...`, odd positions in `A \ B`, even positions in `B \ A`.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Free,
    Violation(PatternViolation),
}

impl Verdict {
    pub fn is_free(&self) -> bool {
        matches!(self, Verdict::Free)
    }

    pub fn violation(&self) -> Option<&PatternViolation> {
        match self {
            Verdict::Free => None,
            Verdict::Violation(v) => Some(v),
        }
    }
}

/// Greedy left-to-right alternation starting with an element of `A \ B`.
/// Both slices must be sorted.
pub fn alternation_witness(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    let mut want_a = true;
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => unreachable!(),
        };
        let in_a = a.get(i) == Some(&v);
        let in_b = b.get(j) == Some(&v);
        if in_a {
            i += 1;
        }
        if in_b {
            j += 1;
        }
        if in_a != in_b && in_a == want_a {
            out.push(v);
            want_a = !want_a;
        }
    }
    out
}

/// Length of the longest `(AB)^l`-sequence (i.e. `2l`) formed by `a` and `b`.
pub fn alternation_length(a: &[usize], b: &[usize]) -> usize {
    alternation_witness(a, b).len()
}

/// Checks every ordered pair of distinct hyperedges, so both `ABAB...` and
/// `BABA...` are caught. The witness is truncated to exactly `2l` vertices.
pub fn is_abl_free_ordered(h: &OrderedHypergraph, l: HalfIntegerL) -> Verdict {
    let need = l.twice();
    let edges = h.edges();
    let longest = edges.iter().map(Vec::len).max().unwrap_or(0);
    // A sequence starting in A has length at most min(2|A|, 2|B| + 1).
    if 2 * longest < need {
        return Verdict::Free;
    }
    for (i, a) in edges.iter().enumerate() {
        if 2 * a.len() < need {
            continue;
        }
        for (j, b) in edges.iter().enumerate() {
            if i == j || 2 * b.len() + 1 < need {
                continue;
            }
            let mut witness = alternation_witness(a, b);
            if witness.len() >= need {
                witness.truncate(need);
                return Verdict::Violation(PatternViolation {
                    edge_a: a.clone(),
                    edge_b: b.clone(),
                    witness,
                });
            }
        }
    }
    Verdict::Free
}

/// Searches all vertex orders in lexicographic order and returns the first one
/// (as a list of original vertex indices) under which `h` is `(AB)^l`-free.
pub fn find_abl_free_order(h: &OrderedHypergraph, l: HalfIntegerL) -> Result<Option<Vec<usize>>> {
    let n = h.vertex_count();
    if n > ORDER_SEARCH_LIMIT {
        return Err(Error::TooLarge(format!(
            "order search over {n}! permutations; limit is {ORDER_SEARCH_LIMIT} vertices"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut position = vec![0usize; n];
    loop {
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        let relabeled: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| {
                let mut m: Vec<usize> = e.iter().map(|&v| position[v]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        let candidate = OrderedHypergraph::with_vertex_count(n, relabeled)?;
        if is_abl_free_ordered(&candidate, l).is_free() {
            return Ok(Some(order));
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
