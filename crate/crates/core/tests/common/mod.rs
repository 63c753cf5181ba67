//! Helpers shared by the integration tests: a seeded RNG, random list
//! assignments, corpus builders and larger C4-free graph families.

#![allow(dead_code)]

use diam2col::generate::{random_diam2, Constraint, GeneratorSpec};
use diam2col::graph::Graph;
use diam2col::lists::ListAssignment;
use diam2col::palette::ColorSet;
use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub struct TestRng(SplitMix64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }
}

/// A random nonempty list of exactly `k` colors.
pub fn list_of_size(rng: &mut TestRng, k: usize) -> ColorSet {
    loop {
        let s = ColorSet::from_bits((rng.below(7) + 1) as u8).expect("nonzero mask");
        if s.len() == k {
            return s;
        }
    }
}

/// Mixed list 3-assignments: a quarter are all full; the rest keep most
/// lists full and shrink some to two or one colors.
pub fn random_lists(rng: &mut TestRng, n: usize) -> ListAssignment {
    if rng.chance(0.25) {
        return ListAssignment::full(n);
    }
    let lists = (0..n)
        .map(|_| {
            let r = rng.below(10);
            let k = if r < 6 {
                3
            } else if r < 9 {
                2
            } else {
                1
            };
            list_of_size(rng, k)
        })
        .collect();
    ListAssignment::from_lists(lists)
}

/// Lists with every size in {1, 2}.
pub fn random_two_lists(rng: &mut TestRng, n: usize) -> ListAssignment {
    let lists = (0..n)
        .map(|_| {
            let k = if rng.chance(0.8) { 2 } else { 1 };
            list_of_size(rng, k)
        })
        .collect();
    ListAssignment::from_lists(lists)
}

/// Lists of any size, including empty ones.
pub fn arbitrary_lists(rng: &mut TestRng, n: usize) -> ListAssignment {
    let lists = (0..n)
        .map(|_| {
            if rng.chance(0.02) {
                ColorSet::EMPTY
            } else {
                ColorSet::from_bits((rng.below(7) + 1) as u8).expect("nonzero mask")
            }
        })
        .collect();
    ListAssignment::from_lists(lists)
}

/// `G(n, p)` without any conditioning.
pub fn gnp(rng: &mut TestRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid pairs")
}

/// Up to `count` seeded random diameter-two graphs with `constraints`;
/// seeds whose rejection budget runs out are skipped and counted.
pub fn sample_graphs(
    n: usize,
    p: f64,
    constraints: &[Constraint],
    count: usize,
    seed0: u64,
) -> (Vec<Graph>, usize) {
    let mut out = Vec::new();
    let mut failed = 0;
    let mut seed = seed0;
    while out.len() < count && failed < 4 * count {
        match random_diam2(&GeneratorSpec::random(n, p, seed, constraints)) {
            Ok((g, _)) => out.push(g),
            Err(_) => failed += 1,
        }
        seed += 1;
    }
    (out, failed)
}

/// Adds random edges one at a time, keeping only those after which the
/// graph has no induced 4-cycle through the new edge.
pub fn greedy_c4_free(rng: &mut TestRng, n: usize, tries: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    for _ in 0..tries {
        let (u, v) = (rng.below(n), rng.below(n));
        if u == v || adj[u][v] {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        if creates_induced_c4(&adj, u, v) {
            adj[u][v] = false;
            adj[v][u] = false;
        }
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v]);
    Graph::new(n, edges.collect::<Vec<_>>()).expect("valid pairs")
}

// A new edge can only add chords to 4-cycles avoiding it, so only cycles
// through uv need checking.
fn creates_induced_c4(adj: &[Vec<bool>], u: usize, v: usize) -> bool {
    let n = adj.len();
    // u - v - x - y - u with no chords u-x, v-y.
    for x in 0..n {
        if x == u || !adj[v][x] || adj[u][x] {
            continue;
        }
        if (0..n).any(|y| y != u && y != v && y != x && adj[x][y] && adj[y][u] && !adj[v][y]) {
            return true;
        }
    }
    false
}

/// Plain enumeration of every coloring drawn from the lists. Independent
/// of the library's oracle; exponential, meant for `n <= 10`.
pub fn naive_colorable(g: &Graph, lists: &ListAssignment) -> bool {
    fn go(g: &Graph, lists: &ListAssignment, colors: &mut Vec<u8>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        for c in 0..3u8 {
            if lists.get(v).bits() >> c & 1 == 1
                && g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c)
            {
                colors.push(c);
                if go(g, lists, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(g, lists, &mut Vec::new())
}

/// Whether some `k`-subset induces a cycle, by checking every subset for
/// a connected 2-regular induced subgraph.
pub fn naive_has_induced_cycle(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k > n || n > 20 {
        assert!(n <= 20, "subset enumeration is for small graphs");
        return false;
    }
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            let deg = |v: usize| vs.iter().filter(|&&w| g.has_edge(v, w)).count();
            if vs.iter().any(|&v| deg(v) != 2) {
                return false;
            }
            // 2-regular: connected iff walking from one vertex covers all.
            let (mut prev, mut cur, mut len) = (usize::MAX, vs[0], 0);
            loop {
                let next = vs
                    .iter()
                    .copied()
                    .find(|&w| w != prev && g.has_edge(cur, w))
                    .expect("degree two");
                prev = cur;
                cur = next;
                len += 1;
                if cur == vs[0] {
                    break;
                }
            }
            len == k
        })
}

/// A uniformly shuffled permutation of `0..n`.
pub fn shuffled(rng: &mut TestRng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.below(i + 1));
    }
    perm
}

/// A maximal triangle-free graph from a random edge order. Maximality
/// forces diameter at most two.
pub fn maximal_triangle_free(rng: &mut TestRng, n: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.below(i + 1));
    }
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in pairs {
        if (0..n).all(|w| !(adj[u][w] && adj[v][w])) {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v]);
    Graph::new(n, edges.collect::<Vec<_>>()).expect("valid pairs")
}
