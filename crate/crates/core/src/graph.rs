//! Immutable simple undirected graphs with the metric and induced-cycle
//! queries the solvers use as class-membership predicates.
//!
//! Vertices are dense indices `0..n`. Every iteration over vertices or
//! neighbors runs in ascending order, so all searches are deterministic.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// A simple undirected graph in canonical form: sorted neighbor lists plus a
/// dense adjacency bitmap for constant-time edge queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (wu, bu) = (u * words + v / 64, v % 64);
            if bits[wu] >> bu & 1 == 1 {
                continue;
            }
            bits[wu] |= 1 << bu;
            bits[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            words,
            bits,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("no edges")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Common neighbors of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u]
            .iter()
            .copied()
            .filter(move |&w| self.has_edge(v, w))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("permutation keeps edges valid")
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices are reached");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Distance {
        let mut best = Distance::Finite(0);
        for s in 0..self.n {
            for d in self.bfs(s) {
                let d = d.map_or(Distance::Infinite, Distance::Finite);
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// First pair `(u, v)`, `u < v` in lexicographic order, whose distance
    /// exceeds `bound`.
    pub fn far_pair(&self, bound: usize) -> Option<FarPair> {
        for u in 0..self.n {
            let dist = self.bfs(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                match d {
                    Some(d) if *d <= bound => {}
                    _ => {
                        return Some(FarPair {
                            u,
                            v,
                            distance: d.map_or(Distance::Infinite, Distance::Finite),
                        })
                    }
                }
            }
        }
        None
    }

    pub fn has_diameter_at_most(&self, bound: usize) -> bool {
        self.far_pair(bound).is_none()
    }

    /// Searches for an induced cycle on `k >= 3` vertices.
    ///
    /// Enumeration fixes the smallest cycle vertex first and extends induced
    /// paths through larger vertices in ascending order, so the returned
    /// certificate is the lexicographically least vertex sequence among all
    /// induced `k`-cycles written from their minimum vertex.
    pub fn find_induced_cycle(&self, k: usize) -> Option<InducedCycleCertificate> {
        assert!(k >= 3, "cycles have at least three vertices");
        if k > self.n {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            on_path[start] = true;
            if self.extend_induced(k, &mut path, &mut on_path) {
                return Some(InducedCycleCertificate { vertices: path });
            }
            on_path[start] = false;
            path.pop();
        }
        None
    }

    // `path` is an induced path whose first vertex is the smallest; on
    // success the full cycle is left in `path`.
    fn extend_induced(&self, k: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let start = path[0];
        let last = *path.last().expect("nonempty path");
        let len = path.len();
        for &w in &self.adj[last] {
            if w <= start || on_path[w] {
                continue;
            }
            // Past the second vertex, w may touch only `last` among the
            // path's interior, and touches `start` exactly when it closes.
            let closes = len + 1 == k;
            if len > 1 {
                if self.has_edge(w, start) != closes {
                    continue;
                }
                if path[1..len - 1].iter().any(|&p| self.has_edge(w, p)) {
                    continue;
                }
            }
            path.push(w);
            if closes {
                return true;
            }
            on_path[w] = true;
            let found = self.extend_induced(k, path, on_path);
            on_path[w] = false;
            if found {
                return true;
            }
            path.pop();
        }
        false
    }

    /// An induced 5-cycle as the tuple `(v1, .., v5)` in cycle order.
    pub fn find_induced_c5(&self) -> Option<[usize; 5]> {
        self.find_induced_cycle(5).map(|c| {
            let v = &c.vertices;
            [v[0], v[1], v[2], v[3], v[4]]
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A graph distance; `Infinite` between disconnected vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Witness that two vertices are further apart than a distance bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FarPair {
    pub u: usize,
    pub v: usize,
    pub distance: Distance,
}

/// Vertices of an induced cycle in cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCycleCertificate {
    pub vertices: Vec<usize>,
}

impl InducedCycleCertificate {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks distinctness, the cycle edges and the absence of chords.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (self.vertices[i], self.vertices[j]);
                if a == b {
                    return false;
                }
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(a, b) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}
