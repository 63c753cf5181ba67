//! The partition around an anchored C5 and the structural facts a
//! (C4, Cs)-free diameter-two instance satisfies at a fixpoint.

use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::solve::{SolveError, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Cycle,
    N1,
    N2,
}

/// Sets are ascending vertex lists. `n1i[i]` holds the uncolored
/// neighbors of `c5[i]` off the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C5Decomposition {
    pub c5: [usize; 5],
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    pub col1: Vec<usize>,
    pub col2: Vec<usize>,
    pub n1i: [Vec<usize>; 5],
    pub l2: Vec<usize>,
    pub l3: Vec<usize>,
    region: Vec<Region>,
}

impl C5Decomposition {
    pub fn region(&self, v: usize) -> Region {
        self.region[v]
    }

    pub fn in_n1(&self, v: usize) -> bool {
        self.region[v] == Region::N1
    }

    pub fn in_n2(&self, v: usize) -> bool {
        self.region[v] == Region::N2
    }

    /// Neighbors of `v` in N1.
    pub fn n1_neighbors<'a>(&'a self, g: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.in_n1(w))
    }
}

/// Splits the vertices around `c5` using the current lists.
pub fn decompose_around_c5(
    g: &Graph,
    lists: &ListAssignment,
    c5: [usize; 5],
) -> Result<C5Decomposition, SolveError> {
    let n = g.n();
    let mut region = vec![None; n];
    for &v in &c5 {
        region[v] = Some(Region::Cycle);
    }
    for &v in &c5 {
        for &w in g.neighbors(v) {
            if region[w].is_none() {
                region[w] = Some(Region::N1);
            }
        }
    }
    for v in 0..n {
        if region[v].is_none()
            && g.neighbors(v)
                .iter()
                .any(|&w| region[w] == Some(Region::N1))
        {
            region[v] = Some(Region::N2);
        }
    }
    if let Some(v) = (0..n).find(|&v| region[v].is_none()) {
        return Err(SolveError::PartitionLeftover(v));
    }
    let region: Vec<Region> = region
        .into_iter()
        .map(|r| r.expect("every vertex placed"))
        .collect();
    let members = |r: Region| (0..n).filter(|&v| region[v] == r).collect::<Vec<_>>();
    let n1 = members(Region::N1);
    let n2 = members(Region::N2);
    let col1 = n1
        .iter()
        .copied()
        .filter(|&v| lists.is_colored(v))
        .collect();
    let col2 = n2
        .iter()
        .copied()
        .filter(|&v| lists.is_colored(v))
        .collect();
    let n1i = std::array::from_fn(|i| {
        g.neighbors(c5[i])
            .iter()
            .copied()
            .filter(|&w| region[w] == Region::N1 && !lists.is_colored(w))
            .collect()
    });
    let l2 = n2.iter().copied().filter(|&v| lists.size(v) == 2).collect();
    let l3 = n2.iter().copied().filter(|&v| lists.size(v) == 3).collect();
    Ok(C5Decomposition {
        c5,
        n1,
        n2,
        col1,
        col2,
        n1i,
        l2,
        l3,
        region,
    })
}

/// Checks the structural facts on a decomposition taken at a fixpoint.
/// Each violation names the rule and its witnesses.
pub fn check_structural_lemmas(g: &Graph, dec: &C5Decomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let on_cycle = |v: usize| dec.region(v) == Region::Cycle;
    let colored1 = |v: usize| dec.col1.binary_search(&v).is_ok();
    let colored2 = |v: usize| dec.col2.binary_search(&v).is_ok();
    let count_in = |v: usize, set: &[usize]| set.iter().filter(|&&w| g.has_edge(v, w)).count();

    // Uncolored N1 vertices see exactly one cycle vertex.
    for &v in dec.n1.iter().filter(|&&v| !colored1(v)) {
        let seen: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| on_cycle(w))
            .collect();
        if seen.len() != 1 {
            out.push(Violation::new(
                "n1-one-cycle-neighbor",
                [vec![v], seen].concat(),
            ));
        }
    }
    // No edges between N1(i) and N1(i+1).
    for i in 0..5 {
        let j = (i + 1) % 5;
        for &u in &dec.n1i[i] {
            for &w in &dec.n1i[j] {
                if g.has_edge(u, w) {
                    out.push(Violation::new("n1-adjacent-parts", [u, w]));
                }
            }
        }
    }
    // At most one neighbor in any other N1(j).
    for i in 0..5 {
        for &v in &dec.n1i[i] {
            for j in (0..5).filter(|&j| j != i) {
                if count_in(v, &dec.n1i[j]) > 1 {
                    out.push(Violation::new("n1-cross-degree", [v, dec.c5[j]]));
                }
            }
        }
    }
    // N1(1)-N1(3) and N1(2)-N1(4) are perfect matchings.
    for (i, j) in [(0, 2), (1, 3)] {
        for (from, to) in [(i, j), (j, i)] {
            for &v in &dec.n1i[from] {
                if count_in(v, &dec.n1i[to]) != 1 {
                    out.push(Violation::new("n1-matching", [v, dec.c5[to]]));
                }
            }
        }
    }
    // Uncolored N2 vertices see at most one vertex of each N1(i); those
    // with full lists see exactly one.
    let is_l3 = |v: usize| dec.l3.binary_search(&v).is_ok();
    for &v in dec.n2.iter().filter(|&&v| !colored2(v)) {
        for i in 0..5 {
            let k = count_in(v, &dec.n1i[i]);
            if k > 1 || (is_l3(v) && k != 1) {
                out.push(Violation::new("n2-into-n1", [v, dec.c5[i]]));
            }
        }
    }
    // Matched pairs have no common neighbor in L2 or L3.
    for (i, j) in [(0, 2), (1, 3)] {
        for &x in &dec.n1i[i] {
            for &y in dec.n1i[j].iter().filter(|&&y| g.has_edge(x, y)) {
                for z in g.common_neighbors(x, y) {
                    if dec.in_n2(z) && !colored2(z) {
                        out.push(Violation::new("matched-pair-common-neighbor", [x, y, z]));
                    }
                }
            }
        }
    }
    // A full-list z and a non-neighbor u in some N1(i) share at most one
    // neighbor in N2.
    for &z in &dec.l3 {
        for i in 0..5 {
            for &u in dec.n1i[i].iter().filter(|&&u| !g.has_edge(u, z)) {
                let shared: Vec<usize> =
                    g.common_neighbors(u, z).filter(|&w| dec.in_n2(w)).collect();
                if shared.len() > 1 {
                    out.push(Violation::new(
                        "full-list-shared-neighbors",
                        [vec![z, u], shared].concat(),
                    ));
                }
            }
        }
    }
    out
}
