//! Canonical labeling for small graphs.
//!
//! Individualization-refinement search: refine a coloring to an equitable
//! partition, branch on the first non-singleton cell, and keep the maximal
//! adjacency bit string over all discrete leaves. Exhaustive, so exact for
//! every graph it accepts; the order budget keeps the worst case (highly
//! regular graphs) cheap enough in practice.

use crate::graph::{Graph, GraphError};
use std::fmt;

/// Public budget for [`certificate`]; enumeration never exceeds it.
pub const CERTIFICATE_BUDGET: usize = 12;

/// Isomorphism-invariant canonical form. Two graphs within the budget have
/// equal certificates iff they are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphCertificate {
    n: u8,
    bits: u128,
}

impl GraphCertificate {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Compact hex rendering used in reports.
    pub fn hex(&self) -> String {
        format!("{}:{:x}", self.n, self.bits)
    }
}

impl fmt::Display for GraphCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex())
    }
}

/// Canonical form of `g`; errors with `TooLarge` above [`CERTIFICATE_BUDGET`].
pub fn certificate(g: &Graph) -> Result<GraphCertificate, GraphError> {
    if g.n() > CERTIFICATE_BUDGET {
        return Err(GraphError::TooLarge {
            n: g.n(),
            budget: CERTIFICATE_BUDGET,
        });
    }
    Ok(certificate_unchecked(g))
}

/// Certificate without the budget check, for enumeration internals that
/// already bound the order.
pub(crate) fn certificate_unchecked(g: &Graph) -> GraphCertificate {
    let n = g.n();
    let mut best: u128 = 0;
    let mut have_best = false;
    // seed with degree ranks; refinement renumbers canonically anyway
    let mut degrees: Vec<u32> = g.degrees();
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for d in &mut degrees {
        *d = distinct.binary_search(d).expect("present") as u32;
    }
    search(g, refine(g, degrees), &mut best, &mut have_best);
    GraphCertificate { n: n as u8, bits: best }
}

/// 1-WL refinement: split cells by multisets of neighbor colors until
/// stable. Colors are renumbered 0.. in order of (old color, signature),
/// which keeps the refinement canonical.
///
/// With at most 14 vertices and colors below 16, the neighbor-color
/// multiset is a vector of 4-bit counters in one u64 (counts cannot exceed
/// 13), so a vertex signature is just (own color, counter word).
fn refine(g: &Graph, mut color: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    debug_assert!(n <= 15);
    let mut sigs: Vec<(u128, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut counters = 0u64;
            for w in g.neighbors(v) {
                counters += 1 << (4 * color[w]);
            }
            sigs.push(((color[v] as u128) << 64 | counters as u128, v));
        }
        sigs.sort_unstable();
        let mut next = vec![0u32; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                c += 1;
            }
            next[sigs[i].1] = c;
        }
        if next == color {
            return color;
        }
        color = next;
    }
}

fn search(g: &Graph, color: Vec<u32>, best: &mut u128, have_best: &mut bool) {
    let n = g.n();
    // find the first non-singleton cell (smallest color value)
    let mut counts = [0u8; 16];
    for &c in &color {
        counts[c as usize] += 1;
    }
    let target = (0..n).find(|&c| counts[c] > 1);
    let Some(target) = target else {
        // discrete: vertex with color c goes to position c
        let mut label = vec![0usize; n];
        for (v, &c) in color.iter().enumerate() {
            label[c as usize] = v;
        }
        let word = adjacency_word(g, &label);
        if !*have_best || word > *best {
            *best = word;
            *have_best = true;
        }
        return;
    };

    if homogeneous(g, &color) {
        // every cell is internally complete/empty and every cell pair is
        // fully joined or fully disjoint: any within-cell order gives the
        // same word, so finalize greedily.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (color[v], v));
        let word = adjacency_word(g, &order);
        if !*have_best || word > *best {
            *best = word;
            *have_best = true;
        }
        return;
    }

    for v in 0..n {
        if color[v] as usize == target {
            let mut c = color.clone();
            // individualize v ahead of its old cell
            for w in 0..n {
                if c[w] >= c[v] && w != v {
                    c[w] += 1;
                }
            }
            search(g, refine(g, c), best, have_best);
        }
    }
}

/// True when the partition cannot be split by any further individualization:
/// cells are internally complete or empty, and between any two cells the
/// bipartite adjacency is complete or empty.
fn homogeneous(g: &Graph, color: &[u32]) -> bool {
    let ncells = color.iter().max().map_or(0, |&c| c as usize + 1);
    let mut cell_mask = [0u64; 16];
    for (v, &c) in color.iter().enumerate() {
        cell_mask[c as usize] |= 1 << v;
    }
    for a in 0..ncells {
        let mask_a = cell_mask[a];
        for &mask_b in &cell_mask[a..ncells] {
            // every vertex of cell a must see all of cell b or none of it
            // (within a cell, all of the rest or none of the rest)
            let mut v_bits = mask_a;
            let mut expect: Option<bool> = None;
            while v_bits != 0 {
                let v = v_bits.trailing_zeros() as usize;
                v_bits &= v_bits - 1;
                let others = mask_b & !(1 << v);
                if others == 0 {
                    continue;
                }
                let hits = g.neighbors_mask(v) & others;
                let full = hits == others;
                if !full && hits != 0 {
                    return false;
                }
                match expect {
                    None => expect = Some(full),
                    Some(e) => {
                        if e != full {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Upper-triangle adjacency bits under `label` (label[i] = original vertex at
/// canonical position i), column-major like graph6.
fn adjacency_word(g: &Graph, label: &[usize]) -> u128 {
    let n = label.len();
    let mut word: u128 = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(label[i], label[j]) as u128;
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let p4_shuffled = g(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(certificate(&p4).unwrap(), certificate(&p4_shuffled).unwrap());
    }

    #[test]
    fn different_trees_differ() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let s4 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(certificate(&p4).unwrap(), certificate(&s4).unwrap());
    }

    #[test]
    fn regular_graphs_within_budget() {
        // C12 is vertex-transitive, the worst case for plain refinement.
        let pairs: Vec<_> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        let c12 = g(12, &pairs);
        let relabel: Vec<_> = (0..12).map(|i| (5 * i % 12, (5 * i + 5) % 12)).collect();
        let c12b = g(12, &relabel);
        assert_eq!(certificate(&c12).unwrap(), certificate(&c12b).unwrap());

        // complete graph exercises the homogeneous shortcut
        let mut pairs = Vec::new();
        for i in 0..12 {
            for j in (i + 1)..12 {
                pairs.push((i, j));
            }
        }
        let k12 = g(12, &pairs);
        assert!(certificate(&k12).is_ok());
    }

    #[test]
    fn budget_enforced() {
        let big = Graph::empty(13).unwrap();
        assert!(matches!(certificate(&big), Err(GraphError::TooLarge { .. })));
    }
}
