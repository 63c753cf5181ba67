//! Exact solver for list assignments in which every list has at most two
//! colors, via a 2-SAT encoding decided on the implication graph.
//!
//! Each vertex with a 2-list gets one boolean (false: lower color, true:
//! higher color). A colored vertex fixes nothing on its own; its color
//! becomes unit clauses on its neighbors. Every edge forbids each shared
//! color on both endpoints at once.

use thiserror::Error;

use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::oracle::verify_coloring;
use crate::palette::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoListError {
    #[error("malformed 2-list instance: vertex {vertex} has {size} colors")]
    MalformedInstance { vertex: usize, size: usize },
}

/// A proper coloring, one palette color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }
}

/// Decides whether `g` has a proper coloring respecting `lists`, where every
/// list has one or two colors. Returns the coloring on success.
pub fn solve_2list(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>, TwoListError> {
    let n = g.n();
    for v in 0..n {
        let size = lists.size(v);
        if size == 0 || size > 2 {
            return Err(TwoListError::MalformedInstance { vertex: v, size });
        }
    }
    let mut sat = TwoSat::new(n);
    for (u, v) in g.edges() {
        let shared = lists.get(u).intersect(lists.get(v));
        for c in shared.iter() {
            match (literal(lists, u, c), literal(lists, v, c)) {
                // Both colored with c.
                (None, None) => return Ok(None),
                (None, Some(lv)) => sat.add_clause(lv.not(), lv.not()),
                (Some(lu), None) => sat.add_clause(lu.not(), lu.not()),
                (Some(lu), Some(lv)) => sat.add_clause(lu.not(), lv.not()),
            }
        }
    }
    let Some(values) = sat.solve() else {
        return Ok(None);
    };
    let colors = (0..n)
        .map(|v| {
            let mut it = lists.get(v).iter();
            let low = it.next().expect("nonempty list");
            match it.next() {
                Some(high) if values[v] => high,
                _ => low,
            }
        })
        .collect();
    let coloring = Coloring(colors);
    assert!(
        verify_coloring(g, lists, &coloring),
        "2-SAT assignment failed independent verification"
    );
    Ok(Some(coloring))
}

/// The literal "v takes color c", or `None` when v is colored with c.
fn literal(lists: &ListAssignment, v: usize, c: Color) -> Option<Lit> {
    let l = lists.get(v);
    if l.len() == 1 {
        return None;
    }
    let high = l.iter().nth(1).expect("2-list");
    Some(Lit::new(v, c == high))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lit(usize);

impl Lit {
    fn new(var: usize, positive: bool) -> Lit {
        Lit(2 * var + usize::from(!positive))
    }

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

struct TwoSat {
    vars: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            implications: vec![Vec::new(); 2 * vars],
        }
    }

    /// Adds `a ∨ b`.
    fn add_clause(&mut self, a: Lit, b: Lit) {
        self.implications[a.not().0].push(b.0);
        if a != b {
            self.implications[b.not().0].push(a.0);
        }
    }

    fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan(&self.implications);
        // Tarjan numbers components in reverse topological order, so a
        // literal whose component comes first is implied, not implying.
        (0..self.vars)
            .map(|v| {
                let (pos, neg) = (comp[2 * v], comp[2 * v + 1]);
                (pos != neg).then_some(pos < neg)
            })
            .collect()
    }
}

/// Iterative Tarjan; returns the component index of every node.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSEEN; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::lists_from_strs;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn odd_cycle_on_two_colors_fails() {
        assert_eq!(
            solve_2list(&cycle(3), &lists_from_strs(&["ab", "ab", "ab"])),
            Ok(None)
        );
        assert_eq!(
            solve_2list(&cycle(5), &lists_from_strs(&["ab"; 5])),
            Ok(None)
        );
    }

    #[test]
    fn even_cycle_alternates() {
        let c = solve_2list(&cycle(4), &lists_from_strs(&["ab"; 4]))
            .unwrap()
            .unwrap();
        assert_ne!(c.color(0), c.color(1));
        assert_eq!(c.color(0), c.color(2));
        assert_eq!(c.color(1), c.color(3));
    }

    #[test]
    fn forced_by_neighbor() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let c = solve_2list(&g, &lists_from_strs(&["a", "ab"]))
            .unwrap()
            .unwrap();
        assert_eq!(c.as_slice(), &[Color::A, Color::B]);
        assert_eq!(solve_2list(&g, &lists_from_strs(&["a", "a"])), Ok(None));
    }

    #[test]
    fn rejects_malformed() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            solve_2list(&g, &lists_from_strs(&["abc", "a"])),
            Err(TwoListError::MalformedInstance { vertex: 0, size: 3 })
        );
        assert!(solve_2list(&g, &lists_from_strs(&["", "a"])).is_err());
    }

    #[test]
    fn isolated_vertices_keep_their_lists() {
        let g = Graph::empty(2);
        let c = solve_2list(&g, &lists_from_strs(&["bc", "c"]))
            .unwrap()
            .unwrap();
        assert_ne!(c.color(0), Color::A);
        assert_eq!(c.color(1), Color::C);
    }

    #[test]
    fn tarjan_on_small_digraph() {
        // 0 -> 1 -> 2 -> 0, 2 -> 3
        let comp = tarjan(&[vec![1], vec![2], vec![0, 3], vec![]]);
        assert_eq!(comp[0], comp[1]);
        assert_eq!(comp[1], comp[2]);
        assert_ne!(comp[2], comp[3]);
        assert!(comp[3] < comp[0]);
    }
}
