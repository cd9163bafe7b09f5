//! Exhaustive, isomorphism-free corpora of small graphs.
//!
//! Free trees come from the Beyer-Hedetniemi successor walk over canonical
//! rooted level sequences, filtered down to one representative per free
//! isomorphism class via a center-rooted canonical code. Bipartite classes
//! walk biadjacency row multisets and dedup with a component-wise canonical
//! key; general connected graphs walk all edge masks and dedup by
//! certificate. Every stream is emitted in a deterministic canonical order.

use crate::canon::certificate_unchecked;
use crate::exec;
use crate::generators::{self, RandomSpec};
use crate::graph::{Graph, GraphError};
use crate::graph6::write_graph6;
use std::collections::HashSet;
use std::fmt;

/// Enumeration budgets, matching the scales the claims sweep.
pub const TREE_BUDGET: usize = 14;
pub const BIPARTITE_CELL_BUDGET: usize = 25;
pub const CONNECTED_BUDGET: usize = 7;

/// A corpus descriptor: which graphs a claim sweep runs over.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphClass {
    /// All free trees of order n.
    Trees { n: usize },
    /// Free trees of order n with maximum degree exactly `max_deg`.
    TreesMaxDeg { n: usize, max_deg: u32 },
    /// Bipartite graphs with declared part sizes (n1, n2).
    Bipartite { n1: usize, n2: usize, connected_only: bool },
    /// All connected graphs of order n.
    Connected { n: usize },
    /// Seeded random corpus.
    Random { spec: RandomSpec, count: usize, seed: u64 },
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Trees { n } => write!(f, "trees(n={n})"),
            GraphClass::TreesMaxDeg { n, max_deg } => {
                write!(f, "trees(n={n},maxdeg={max_deg})")
            }
            GraphClass::Bipartite { n1, n2, connected_only } => {
                if *connected_only {
                    write!(f, "bipartite({n1},{n2},connected)")
                } else {
                    write!(f, "bipartite({n1},{n2})")
                }
            }
            GraphClass::Connected { n } => write!(f, "connected(n={n})"),
            GraphClass::Random { spec, count, seed } => {
                write!(f, "random({spec},count={count},seed={seed})")
            }
        }
    }
}

impl GraphClass {
    /// Declared bipartition part sizes, when the class has them.
    pub fn declared_parts(&self) -> Option<(usize, usize)> {
        match self {
            GraphClass::Bipartite { n1, n2, .. } => Some((*n1, *n2)),
            GraphClass::Random { spec: RandomSpec::Bipartite { n1, n2, .. }, .. } => {
                Some((*n1, *n2))
            }
            _ => None,
        }
    }

    /// Materializes the corpus in canonical order.
    pub fn graphs(&self) -> Result<Vec<Graph>, GraphError> {
        match *self {
            GraphClass::Trees { n } => enumerate_free_trees(n),
            GraphClass::TreesMaxDeg { n, max_deg } => {
                enumerate_trees_with_max_degree(n, max_deg)
            }
            GraphClass::Bipartite { n1, n2, connected_only } => {
                enumerate_bipartite(n1, n2, connected_only)
            }
            GraphClass::Connected { n } => enumerate_connected(n),
            GraphClass::Random { ref spec, count, seed } => {
                validate_random_spec(spec)?;
                Ok(generators::random_corpus(spec, count, seed))
            }
        }
    }
}

fn validate_random_spec(spec: &RandomSpec) -> Result<(), GraphError> {
    let check = |ok: bool, reason: &str| {
        if ok {
            Ok(())
        } else {
            Err(GraphError::BadParameter(format!("{reason} in {spec}")))
        }
    };
    match *spec {
        RandomSpec::Tree { n } => check(
            (2..=crate::graph::MAX_VERTICES).contains(&n),
            "tree order out of range",
        ),
        RandomSpec::Bipartite { n1, n2, edge_prob } => {
            check(
                n1 >= 1 && n2 >= 1 && n1 + n2 <= crate::graph::MAX_VERTICES,
                "part sizes out of range",
            )?;
            check((0.0..=1.0).contains(&edge_prob), "edge probability out of range")
        }
    }
}

/// All free trees of order n, one per isomorphism class.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > TREE_BUDGET {
        return Err(GraphError::TooLarge { n, budget: TREE_BUDGET });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1).expect("order 1")]);
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for levels in RootedLevelSequences::new(n) {
        let g = graph_from_levels(&levels);
        if seen.insert(free_tree_code(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Free trees of order n with maximum degree exactly `max_deg`. An empty
/// class (no such tree) is an empty stream, not an error.
pub fn enumerate_trees_with_max_degree(n: usize, max_deg: u32) -> Result<Vec<Graph>, GraphError> {
    let trees = enumerate_free_trees(n)?;
    Ok(trees
        .into_iter()
        .filter(|g| g.degrees().iter().max().copied().unwrap_or(0) == max_deg)
        .collect())
}

/// Beyer-Hedetniemi walk over canonical level sequences of rooted trees on
/// n vertices (depths in preorder, root at depth 1). Each canonical rooted
/// tree appears exactly once, in decreasing lexicographic order.
struct RootedLevelSequences {
    levels: Vec<u8>,
    started: bool,
    done: bool,
}

impl RootedLevelSequences {
    fn new(n: usize) -> Self {
        RootedLevelSequences {
            levels: (1..=n as u8).collect(),
            started: false,
            done: n == 0,
        }
    }
}

impl Iterator for RootedLevelSequences {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.levels.clone());
        }
        // successor: find the last entry > 2, decrement it, then tile the
        // block since its nearest shallower ancestor position
        let n = self.levels.len();
        let Some(p) = (0..n).rev().find(|&i| self.levels[i] > 2) else {
            self.done = true;
            return None;
        };
        let q = (0..p)
            .rev()
            .find(|&i| self.levels[i] == self.levels[p] - 1)
            .expect("a shallower entry precedes any depth > 2");
        let block: Vec<u8> = self.levels[q..p].to_vec();
        let mut i = p;
        let mut k = 0;
        while i < n {
            self.levels[i] = block[k % block.len()];
            i += 1;
            k += 1;
        }
        Some(self.levels.clone())
    }
}

/// Builds the tree a level sequence denotes: each vertex attaches to the
/// nearest earlier vertex one level up.
fn graph_from_levels(levels: &[u8]) -> Graph {
    let n = levels.len();
    let mut pairs = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == levels[i] - 1)
            .expect("level sequence is canonical");
        pairs.push((parent, i));
    }
    Graph::from_edge_list(n, &pairs).expect("level sequence yields a tree")
}

/// Canonical code of a free tree: the AHU parenthesization rooted at the
/// center, or at the ordered pair of centers for bicentral trees.
pub(crate) fn free_tree_code(g: &Graph) -> Vec<u8> {
    let centers = tree_centers(g);
    match centers.as_slice() {
        [c] => ahu_code(g, *c, usize::MAX),
        [a, b] => {
            let mut ca = ahu_code(g, *a, *b);
            let mut cb = ahu_code(g, *b, *a);
            if cb < ca {
                std::mem::swap(&mut ca, &mut cb);
            }
            ca.extend_from_slice(&cb);
            ca
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for w in g.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn ahu_code(g: &Graph, root: usize, blocked: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(root)
        .filter(|&w| w != blocked)
        .map(|w| ahu_code(g, w, root))
        .collect();
    children.sort();
    let mut code = vec![b'('];
    for c in children {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

/// Bipartite graphs with declared parts (n1, n2), one per graph isomorphism
/// class, optional connectivity filter. Part 1 is vertices 0..n1.
pub fn enumerate_bipartite(
    n1: usize,
    n2: usize,
    connected_only: bool,
) -> Result<Vec<Graph>, GraphError> {
    if n1 == 0 || n2 == 0 || n1 * n2 > BIPARTITE_CELL_BUDGET {
        return Err(GraphError::TooLarge { n: n1 * n2, budget: BIPARTITE_CELL_BUDGET });
    }
    // walk row multisets over the larger side so the alphabet (subsets of
    // the smaller side) stays small
    let (rows, cols, transposed) = if n1 >= n2 { (n1, n2, false) } else { (n2, n1, true) };
    let mut seen: HashSet<Vec<(usize, usize, u64)>> = HashSet::new();
    let mut out = Vec::new();
    let mut row_values = vec![0u32; rows];
    loop {
        let g = graph_from_rows(n1, n2, &row_values, transposed);
        if (!connected_only || g.is_connected()) && seen.insert(bipartite_key(&g, n1)) {
            out.push(g);
        }
        if !next_multiset(&mut row_values, 1u32 << cols) {
            break;
        }
    }
    out.sort_by_key(|g| (g.m(), write_graph6(g)));
    Ok(out)
}

/// Rebuilds the graph a row assignment denotes. `row_values[i]` is the
/// neighborhood of the i-th vertex of the larger side as a bitmask over the
/// smaller side.
fn graph_from_rows(n1: usize, n2: usize, row_values: &[u32], transposed: bool) -> Graph {
    let mut pairs = Vec::new();
    for (i, &bits) in row_values.iter().enumerate() {
        let mut rest = bits;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // rows are part 1 unless transposed
            let (u, v) = if transposed { (j, i) } else { (i, j) };
            pairs.push((u, n1 + v));
        }
    }
    Graph::from_edge_list(n1 + n2, &pairs).expect("bipartite construction in range")
}

/// Advances a non-increasing sequence over `0..alphabet` (odometer with the
/// non-increasing constraint). Returns false after the last sequence.
fn next_multiset(values: &mut [u32], alphabet: u32) -> bool {
    for i in (0..values.len()).rev() {
        let cap = if i == 0 { alphabet - 1 } else { values[i - 1] };
        if values[i] < cap {
            values[i] += 1;
            values[(i + 1)..].fill(0);
            return true;
        }
    }
    false
}

/// Complete isomorphism key for a bipartite graph with parts 0..n1 and
/// n1..n: the sorted multiset of per-component canonical biadjacency forms.
/// A connected bipartite component's 2-coloring is unique up to swap, so
/// canonicalizing each component over row/column order (and orientation when
/// balanced) is exact.
fn bipartite_key(g: &Graph, n1: usize) -> Vec<(usize, usize, u64)> {
    let mut keys: Vec<(usize, usize, u64)> = g
        .components()
        .iter()
        .map(|comp| {
            let side_a: Vec<usize> = comp.iter().copied().filter(|&v| v < n1).collect();
            let side_b: Vec<usize> = comp.iter().copied().filter(|&v| v >= n1).collect();
            component_key(g, &side_a, &side_b)
        })
        .collect();
    keys.sort();
    keys
}

fn component_key(g: &Graph, side_a: &[usize], side_b: &[usize]) -> (usize, usize, u64) {
    let (small, large) = if side_a.len() <= side_b.len() {
        (side_a, side_b)
    } else {
        (side_b, side_a)
    };
    if small.is_empty() {
        // isolated vertex; both orientations are the same K1
        return (0, large.len(), 0);
    }
    let mut best = canon_biadj(g, small, large);
    if small.len() == large.len() {
        best = best.max(canon_biadj(g, large, small));
    }
    (small.len(), large.len(), best)
}

/// Max biadjacency word over row permutations with columns sorted, rows =
/// `small` side (at most 5 of them at this budget).
fn canon_biadj(g: &Graph, small: &[usize], large: &[usize]) -> u64 {
    let r = small.len();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut best = 0u64;
    permute(&mut perm, 0, &mut |p| {
        let mut cols: Vec<u32> = large
            .iter()
            .map(|&v| {
                let mut col = 0u32;
                for (bit, &ri) in p.iter().enumerate() {
                    col |= (g.has_edge(small[ri], v) as u32) << bit;
                }
                col
            })
            .collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let mut word = 0u64;
        for &c in &cols {
            word = word << r | c as u64;
        }
        best = best.max(word);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// All connected graphs of order n, one per isomorphism class, by walking
/// every edge mask and deduplicating on certificates.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > CONNECTED_BUDGET {
        return Err(GraphError::TooLarge { n, budget: CONNECTED_BUDGET });
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let nmasks: usize = 1 << cells.len();
    // chunked so the parallel path has work units; first occurrence per
    // certificate is the smallest mask, which keeps the output identical
    // across worker counts
    let chunk = 1 << 12;
    let nchunks = nmasks.div_ceil(chunk);
    let graph_of_mask = |mask: usize| -> Graph {
        let pairs: Vec<(usize, usize)> = cells
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &pairs).expect("cells in range")
    };
    let per_chunk = exec::map_range(0..nchunks, |ci| {
        let mut local = Vec::new();
        let mut seen = HashSet::new();
        for mask in ci * chunk..((ci + 1) * chunk).min(nmasks) {
            let g = graph_of_mask(mask);
            if !g.is_connected() {
                continue;
            }
            let cert = certificate_unchecked(&g);
            if seen.insert(cert) {
                local.push((cert, mask));
            }
        }
        local
    });
    let mut first = std::collections::HashMap::new();
    for (cert, mask) in per_chunk.into_iter().flatten() {
        first
            .entry(cert)
            .and_modify(|m: &mut usize| *m = (*m).min(mask))
            .or_insert(mask);
    }
    let mut masks: Vec<usize> = first.into_values().collect();
    masks.sort_unstable();
    Ok(masks.into_iter().map(graph_of_mask).collect())
}
