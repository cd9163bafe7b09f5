//! Simple undirected graphs on small vertex counts.
//!
//! Vertices are `0..n` and adjacency is kept as one 64-bit mask per vertex,
//! which caps the order at [`MAX_VERTICES`]. That is far beyond the scale
//! anything here enumerates; the cap exists so the masks stay a single word.

use std::fmt;

/// Hard cap on the vertex count (graph6 short form also stops at 62).
pub const MAX_VERTICES: usize = 62;

/// Largest order for which [`Graph::is_hamiltonian`] will run.
pub const HAMILTONIAN_BUDGET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Vertex index outside `0..n`.
    OutOfRangeVertex { vertex: usize, n: usize },
    /// An edge `(v, v)` was supplied.
    SelfLoop { vertex: usize },
    /// Order 0 or above [`MAX_VERTICES`].
    BadOrder { n: usize },
    /// Operation refused because the order exceeds its search budget.
    TooLarge { n: usize, budget: usize },
    /// Malformed edge-list text.
    BadEdgeList { line: usize, reason: String },
    /// Invalid parameter for a derived construction (random corpora).
    BadParameter(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OutOfRangeVertex { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::BadOrder { n } => {
                write!(f, "order {n} not in 1..={MAX_VERTICES}")
            }
            GraphError::TooLarge { n, budget } => {
                write!(f, "order {n} exceeds budget {budget}")
            }
            GraphError::BadEdgeList { line, reason } => {
                write!(f, "edge list line {line}: {reason}")
            }
            GraphError::BadParameter(reason) => write!(f, "bad parameter: {reason}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A simple undirected graph: no loops, no parallel edges.
///
/// Immutable after construction, so values can be shared freely across
/// worker threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in pairs {
            if u >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRangeVertex { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph { n, adj, m })
    }

    /// Order-only constructor (no edges).
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edge_list(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|a| a.count_ones()).collect()
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// True iff the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        let full: u64 = (1 << self.n) - 1;
        self.component_mask(0) == full
    }

    /// Mask of the component containing `start`.
    fn component_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut remaining: u64 = (1 << self.n) - 1;
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mask = self.component_mask(start);
            out.push(BitIter(mask).collect());
            remaining &= !mask;
        }
        out
    }

    /// Proper 2-coloring if one exists. Within each component the vertex of
    /// lowest index goes to part 1, so the split is deterministic even for
    /// disconnected graphs.
    pub fn find_bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let part1 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let part2 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some(Bipartition { part1, part2 })
    }

    /// Exhaustive Hamiltonian-cycle search; rejects orders above
    /// [`HAMILTONIAN_BUDGET`].
    pub fn is_hamiltonian(&self) -> Result<bool, GraphError> {
        if self.n > HAMILTONIAN_BUDGET {
            return Err(GraphError::TooLarge {
                n: self.n,
                budget: HAMILTONIAN_BUDGET,
            });
        }
        if self.n < 3 || self.m < self.n || !self.is_connected() {
            return Ok(false);
        }
        if self.degrees().iter().any(|&d| d < 2) {
            return Ok(false);
        }
        // Fix vertex 0 as the cycle start; extend paths by backtracking.
        fn extend(g: &Graph, last: usize, visited: u64, full: u64) -> bool {
            if visited == full {
                return g.has_edge(last, 0);
            }
            let mut cand = g.neighbors_mask(last) & !visited;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if extend(g, v, visited | 1 << v, full) {
                    return true;
                }
            }
            false
        }
        let full: u64 = (1 << self.n) - 1;
        Ok(extend(self, 0, 1, full))
    }

    /// Parses the plain edge-list text format: first line `n m`, then `m`
    /// lines `u v` with 0-based endpoints. Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (lno, header) = lines.next().ok_or(GraphError::BadEdgeList {
            line: 1,
            reason: "empty input".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, lno: usize| -> Result<usize, GraphError> {
            tok.and_then(|t| t.parse().ok())
                .ok_or(GraphError::BadEdgeList {
                    line: lno + 1,
                    reason: "expected integer".into(),
                })
        };
        let n = parse_num(it.next(), lno)?;
        let m = parse_num(it.next(), lno)?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let (lno, line) = lines.next().ok_or(GraphError::BadEdgeList {
                line: 0,
                reason: format!("expected {m} edge lines"),
            })?;
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), lno)?;
            let v = parse_num(it.next(), lno)?;
            pairs.push((u, v));
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Renders the edge-list text format.
    pub fn write_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Degree sequence in the paper's descending convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn of(g: &Graph) -> DegreeSequence {
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    /// Degrees sorted descending.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    /// Maximum degree (first entry); 0 for the empty sequence is impossible
    /// since graphs have order >= 1.
    pub fn max_degree(&self) -> u32 {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.last().copied().unwrap_or(0)
    }
}

/// A 2-coloring of the vertex set; every edge crosses the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}
