//! Deterministic constructors for the named graph families, plus seeded
//! random corpora.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::invariants::{check_spine, InvariantError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum GenError {
    TooSmall { what: &'static str, min: usize, got: usize },
    TooLarge { n: usize },
    InvalidSpine(String),
    BadProbability(f64),
    /// Example construction needs n >= 11 and m >= 11.
    InvalidParams(String),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooSmall { what, min, got } => {
                write!(f, "{what} needs order >= {min}, got {got}")
            }
            GenError::TooLarge { n } => write!(f, "order {n} exceeds {MAX_VERTICES}"),
            GenError::InvalidSpine(why) => write!(f, "invalid spine: {why}"),
            GenError::BadProbability(p) => write!(f, "edge probability {p} not in [0, 1]"),
            GenError::InvalidParams(why) => write!(f, "invalid construction params: {why}"),
        }
    }
}

impl std::error::Error for GenError {}

impl From<GraphError> for GenError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::BadOrder { n } => GenError::TooLarge { n },
            other => GenError::InvalidParams(other.to_string()),
        }
    }
}

/// Path P_n on vertices 0..n in order.
pub fn generate_path(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::TooSmall { what: "path", min: 2, got: n });
    }
    let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(n, &pairs)?)
}

/// Star S_n = K_{1,n-1} with center 0.
pub fn generate_star(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::TooSmall { what: "star", min: 2, got: n });
    }
    let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::from_edge_list(n, &pairs)?)
}

/// Complete bipartite K_{s,t}: part 1 = 0..s, part 2 = s..s+t.
pub fn generate_complete_bipartite(s: usize, t: usize) -> Graph {
    assert!(s >= 1 && t >= 1, "parts must be nonempty");
    let mut pairs = Vec::with_capacity(s * t);
    for u in 0..s {
        for v in 0..t {
            pairs.push((u, s + v));
        }
    }
    Graph::from_edge_list(s + t, &pairs).expect("complete bipartite within bounds")
}

/// Caterpillar realized from an ordered spine degree list: spine vertices
/// 0..k form a path; interior vertex i carries spine[i] - 2 pendant leaves,
/// ends carry spine[i] - 1.
pub fn generate_caterpillar(spine: &[u32]) -> Result<Graph, GenError> {
    check_spine(spine).map_err(|e| match e {
        InvariantError::InvalidSpine(w) => GenError::InvalidSpine(w),
        other => GenError::InvalidSpine(other.to_string()),
    })?;
    let k = spine.len();
    let mut pairs: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    let mut next = k;
    for (i, &d) in spine.iter().enumerate() {
        let spine_neighbors = if i == 0 || i == k - 1 { 1 } else { 2 };
        let leaves = d as usize - spine_neighbors;
        for _ in 0..leaves {
            pairs.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::from_edge_list(next, &pairs)?)
}

/// Parameters of the two-part example construction: `n` vertices u_1..u_n on
/// one side, `m` vertices v_1..v_m on the other. The fixed edge rows
/// reference u_9 and v_{m-4} down to v_3, hence the lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExampleConstructionParams {
    pub n: usize,
    pub m: usize,
}

impl ExampleConstructionParams {
    pub fn new(n: usize, m: usize) -> Result<Self, GenError> {
        if n < 11 {
            return Err(GenError::InvalidParams(format!("n = {n} < 11")));
        }
        if m < 11 {
            return Err(GenError::InvalidParams(format!("m = {m} < 11")));
        }
        if n + m > MAX_VERTICES {
            return Err(GenError::TooLarge { n: n + m });
        }
        Ok(ExampleConstructionParams { n, m })
    }
}

/// Bipartite example construction. Row ranges that come out empty (i - 2 >
/// m - 4 in the generic row) contribute no edges; vertices left isolated
/// stay in the vertex set. u_i is vertex i-1, v_j is vertex n+j-1.
pub fn generate_example_47(params: ExampleConstructionParams) -> Graph {
    let (n, m) = (params.n, params.m);
    let mut pairs = Vec::new();
    {
        let mut row = |i: usize, lo: usize, hi: usize| {
            // 1-based u_i adjacent to v_lo..v_hi (skipped when empty)
            for j in lo..=hi.min(m) {
                pairs.push((i - 1, n + j - 1));
            }
        };
        row(1, 2, m - 1);
        row(2, 3, m - 1);
        row(3, 3, m - 1);
        row(4, 4, m - 2);
        row(5, 3, m - 3);
        row(6, 4, m - 2);
        row(7, 5, m - 4);
        row(8, 6, m - 4);
        row(9, 7, m - 4);
        for i in 10..n {
            if i - 2 <= m - 4 {
                row(i, i - 2, m - 4);
            }
        }
        row(n, 1, 2);
        row(n, m, m);
    }
    Graph::from_edge_list(n + m, &pairs).expect("params validated")
}

/// Uniform random labeled tree on n vertices via a random Prufer sequence.
/// Deterministic for a fixed seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::TooSmall { what: "random tree", min: 2, got: n });
    }
    if n > MAX_VERTICES {
        return Err(GenError::TooLarge { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    Ok(prufer_decode(n, &seq))
}

/// Decodes a Prufer sequence into a labeled tree on n >= 2 vertices:
/// repeatedly join the smallest current leaf to the next sequence entry.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len(), n - 2, "sequence length must be n - 2");
    let mut deg = vec![1u32; n];
    for &x in seq {
        deg[x] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf always remains");
        pairs.push((leaf, x));
        deg[leaf] -= 1;
        deg[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| deg[v] == 1);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    pairs.push((u, v));
    Graph::from_edge_list(n, &pairs).expect("prufer decode yields a valid tree")
}

/// What a seeded random corpus samples.
#[derive(Debug, Clone, PartialEq)]
pub enum RandomSpec {
    Tree { n: usize },
    Bipartite { n1: usize, n2: usize, edge_prob: f64 },
}

impl fmt::Display for RandomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RandomSpec::Tree { n } => write!(f, "tree:{n}"),
            RandomSpec::Bipartite { n1, n2, edge_prob } => {
                write!(f, "bipartite:{n1}x{n2}x{edge_prob}")
            }
        }
    }
}

/// `count` samples of `spec`, seeded per index so the corpus is a pure
/// function of (spec, count, seed).
pub fn random_corpus(spec: &RandomSpec, count: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            match *spec {
                RandomSpec::Tree { n } => random_tree(n, s).expect("spec validated by caller"),
                RandomSpec::Bipartite { n1, n2, edge_prob } => {
                    random_bipartite(n1, n2, edge_prob, s).expect("spec validated by caller")
                }
            }
        })
        .collect()
}

/// Bipartite G(n1, n2, p): each cross pair present independently with
/// probability `edge_prob`. Deterministic for a fixed seed.
pub fn random_bipartite(
    n1: usize,
    n2: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    if n1 < 1 || n2 < 1 {
        return Err(GenError::TooSmall { what: "bipartite part", min: 1, got: n1.min(n2) });
    }
    if n1 + n2 > MAX_VERTICES {
        return Err(GenError::TooLarge { n: n1 + n2 });
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenError::BadProbability(edge_prob));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n1 {
        for v in 0..n2 {
            if rng.gen::<f64>() < edge_prob {
                pairs.push((u, n1 + v));
            }
        }
    }
    Ok(Graph::from_edge_list(n1 + n2, &pairs)?)
}
