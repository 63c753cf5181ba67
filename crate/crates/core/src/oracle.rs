//! Ground truth: exhaustive list-coloring search and an independent
//! coloring checker. Nothing here calls into the solvers or the
//! preprocessing engine.

use thiserror::Error;

use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::palette::Color;
use crate::two_list::Coloring;

pub const DEFAULT_ORACLE_BOUND: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance with {0} vertices exceeds the oracle bound")]
    TooLarge(usize),
}

/// True iff `c` is proper on `g` and picks every color from its list.
pub fn verify_coloring(g: &Graph, lists: &ListAssignment, c: &Coloring) -> bool {
    c.len() == g.n()
        && lists.len() == g.n()
        && (0..g.n()).all(|v| lists.get(v).contains(c.color(v)))
        && g.edges().all(|(u, v)| c.color(u) != c.color(v))
}

/// Backtracking search with forward checking.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    /// Largest vertex count accepted; `None` for no limit.
    pub max_vertices: Option<usize>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_vertices: Some(DEFAULT_ORACLE_BOUND),
        }
    }
}

impl Oracle {
    pub fn unbounded() -> Self {
        Oracle { max_vertices: None }
    }

    pub fn solve(
        &self,
        g: &Graph,
        lists: &ListAssignment,
    ) -> Result<Option<Coloring>, OracleError> {
        if let Some(bound) = self.max_vertices {
            if g.n() > bound {
                return Err(OracleError::TooLarge(g.n()));
            }
        }
        assert_eq!(lists.len(), g.n(), "list assignment does not match graph");
        let domains: Vec<u8> = lists.as_slice().iter().map(|s| s.bits()).collect();
        let mut assigned = vec![None; g.n()];
        let found = search(g, domains, &mut assigned);
        Ok(found.then(|| {
            let c = Coloring(
                assigned
                    .into_iter()
                    .map(|c| c.expect("complete assignment"))
                    .collect(),
            );
            assert!(
                verify_coloring(g, lists, &c),
                "oracle produced an invalid coloring"
            );
            c
        }))
    }
}

/// Decides list-colorability with the default vertex bound.
pub fn brute_force(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>, OracleError> {
    Oracle::default().solve(g, lists)
}

fn search(g: &Graph, mut domains: Vec<u8>, assigned: &mut [Option<Color>]) -> bool {
    // Commit forced vertices until none remain.
    loop {
        let forced = (0..g.n()).find(|&v| assigned[v].is_none() && domains[v].count_ones() <= 1);
        let Some(v) = forced else { break };
        let c = domains[v].trailing_zeros() as usize;
        if domains[v] == 0 || !assign(g, &mut domains, assigned, v, c) {
            return false;
        }
    }
    // Branch on the open vertex with the fewest options, then most
    // open neighbors.
    let pick = (0..g.n())
        .filter(|&v| assigned[v].is_none())
        .min_by_key(|&v| {
            let open = g
                .neighbors(v)
                .iter()
                .filter(|&&w| assigned[w].is_none())
                .count();
            (domains[v].count_ones(), usize::MAX - open)
        });
    let Some(v) = pick else { return true };
    for c in 0..3 {
        if domains[v] >> c & 1 == 0 {
            continue;
        }
        let mut trial = domains.clone();
        let snapshot: Vec<Option<Color>> = assigned.to_vec();
        if assign(g, &mut trial, assigned, v, c) && search(g, trial, assigned) {
            return true;
        }
        assigned.copy_from_slice(&snapshot);
    }
    false
}

fn assign(
    g: &Graph,
    domains: &mut [u8],
    assigned: &mut [Option<Color>],
    v: usize,
    c: usize,
) -> bool {
    assigned[v] = Color::from_index(c);
    domains[v] = 1 << c;
    for &w in g.neighbors(v) {
        if assigned[w].is_none() {
            domains[w] &= !(1 << c);
            if domains[w] == 0 {
                return false;
            }
        } else if assigned[w] == assigned[v] {
            return false;
        }
    }
    true
}
