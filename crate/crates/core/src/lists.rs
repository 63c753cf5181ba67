//! List assignments over the palette and the six preprocessing rules.
//!
//! Rule 1 propagates a colored vertex to its neighbors, rule 2 rejects an
//! empty list, rule 3 recognizes a 2-list instance, rule 4 merges the tips
//! of a diamond, rule 5 clears a triangle's third vertex when the other two
//! share a 2-list, and rule 6 removes the forced color from the fourth
//! vertex of an induced 4-cycle carrying three distinct 2-lists.
//! [`run_to_fixpoint`] applies them exhaustively.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::palette::{Color, ColorSet, PalettePerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("rule precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("expected {expected} lists, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Per-vertex color lists; a vertex is colored when its list is a singleton.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
    by_size: [usize; 4],
}

impl ListAssignment {
    pub fn full(n: usize) -> Self {
        ListAssignment {
            lists: vec![ColorSet::FULL; n],
            by_size: [0, 0, 0, n],
        }
    }

    pub fn from_lists(lists: Vec<ColorSet>) -> Self {
        let mut by_size = [0; 4];
        for s in &lists {
            by_size[s.len()] += 1;
        }
        ListAssignment { lists, by_size }
    }

    /// Lists sized for `g`, or an error naming the mismatch.
    pub fn for_graph(g: &Graph, lists: Vec<ColorSet>) -> Result<Self, ListError> {
        if lists.len() != g.n() {
            return Err(ListError::LengthMismatch {
                expected: g.n(),
                got: lists.len(),
            });
        }
        Ok(Self::from_lists(lists))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.lists.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn set(&mut self, v: usize, s: ColorSet) {
        let old = self.lists[v];
        self.by_size[old.len()] -= 1;
        self.by_size[s.len()] += 1;
        self.lists[v] = s;
    }

    /// Intersects `L(v)` with `s`; returns whether the list shrank.
    pub fn restrict(&mut self, v: usize, s: ColorSet) -> bool {
        let old = self.lists[v];
        let new = old.intersect(s);
        if new != old {
            self.set(v, new);
            true
        } else {
            false
        }
    }

    pub fn as_slice(&self) -> &[ColorSet] {
        &self.lists
    }

    #[inline]
    pub fn size(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    #[inline]
    pub fn is_colored(&self, v: usize) -> bool {
        self.lists[v].len() == 1
    }

    /// Number of vertices whose list has exactly `k` colors.
    pub fn count_with_size(&self, k: usize) -> usize {
        self.by_size[k]
    }

    pub fn has_empty(&self) -> bool {
        self.by_size[0] > 0
    }

    /// Every list nonempty with at most two colors.
    pub fn is_two_list(&self) -> bool {
        self.by_size[0] == 0 && self.by_size[3] == 0
    }

    /// Sum of list sizes.
    pub fn mass(&self) -> usize {
        self.by_size[1] + 2 * self.by_size[2] + 3 * self.by_size[3]
    }

    pub fn vertices_with_size(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.lists
            .iter()
            .enumerate()
            .filter(move |(_, s)| s.len() == k)
            .map(|(v, _)| v)
    }

    /// The same lists with every color renamed by `perm`.
    pub fn permuted(&self, perm: PalettePerm) -> ListAssignment {
        ListAssignment::from_lists(self.lists.iter().map(|&s| perm.apply_set(s)).collect())
    }

    /// The lists of a relabeled graph, where vertex `v` became `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> ListAssignment {
        let mut lists = vec![ColorSet::EMPTY; self.len()];
        for (v, &s) in self.lists.iter().enumerate() {
            lists[perm[v]] = s;
        }
        ListAssignment::from_lists(lists)
    }

    /// Rule 1: removes the color of a colored `u` from all its neighbors.
    pub fn rule1_propagate(&mut self, g: &Graph, u: usize) -> Result<bool, ListError> {
        if self.size(u) != 1 {
            return Err(ListError::PreconditionViolated(format!(
                "vertex {u} is not colored"
            )));
        }
        let cu = self.get(u);
        let mut changed = false;
        for &v in g.neighbors(u) {
            changed |= self.restrict(v, cu.complement());
        }
        Ok(changed)
    }

    /// Rule 4: `(v, w, x, y)` spans a diamond whose only missing edge is
    /// `vx`; both tips get `L(v) ∩ L(x)`.
    pub fn rule4_diamond(
        &mut self,
        g: &Graph,
        [v, w, x, y]: [usize; 4],
    ) -> Result<bool, ListError> {
        let is_diamond = distinct(&[v, w, x, y])
            && !g.has_edge(v, x)
            && g.has_edge(w, y)
            && [v, x].iter().all(|&t| g.has_edge(t, w) && g.has_edge(t, y));
        if !is_diamond {
            return Err(ListError::PreconditionViolated(format!(
                "({v},{w},{x},{y}) is not a diamond missing edge ({v},{x})"
            )));
        }
        let both = self.get(v).intersect(self.get(x));
        Ok(self.restrict(v, both) | self.restrict(x, both))
    }

    /// Rule 5: in triangle `(v, w, x)` with `L(v) = L(w)` of size two,
    /// removes those colors from `x`.
    pub fn rule5_triangle(&mut self, g: &Graph, [v, w, x]: [usize; 3]) -> Result<bool, ListError> {
        let ok = distinct(&[v, w, x])
            && g.has_edge(v, w)
            && g.has_edge(w, x)
            && g.has_edge(v, x)
            && self.size(v) == 2
            && self.get(v) == self.get(w);
        if !ok {
            return Err(ListError::PreconditionViolated(format!(
                "({v},{w},{x}) is not a triangle with equal 2-lists on {v},{w}"
            )));
        }
        Ok(self.restrict(x, self.get(v).complement()))
    }

    /// Rule 6: in induced 4-cycle `(v, w, x, y)` with pairwise different
    /// 2-lists on `v, w, x`, removes `L(v) ∩ L(x)` from `y`.
    pub fn rule6_c4(&mut self, g: &Graph, [v, w, x, y]: [usize; 4]) -> Result<bool, ListError> {
        let induced = distinct(&[v, w, x, y])
            && g.has_edge(v, w)
            && g.has_edge(w, x)
            && g.has_edge(x, y)
            && g.has_edge(y, v)
            && !g.has_edge(v, x)
            && !g.has_edge(w, y);
        let lists_ok = [v, w, x].iter().all(|&t| self.size(t) == 2)
            && self.get(v) != self.get(w)
            && self.get(w) != self.get(x)
            && self.get(v) != self.get(x);
        if !(induced && lists_ok) {
            return Err(ListError::PreconditionViolated(format!(
                "({v},{w},{x},{y}) is not an induced 4-cycle with distinct 2-lists on {v},{w},{x}"
            )));
        }
        let forced = self.get(v).intersect(self.get(x));
        Ok(self.restrict(y, forced.complement()))
    }
}

impl std::fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.lists.iter()).finish()
    }
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, a)| vs[i + 1..].iter().all(|b| a != b))
}

/// Result of exhaustive rule application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    /// Some list became empty.
    No,
    /// Every list has one or two colors.
    TwoListReady(ListAssignment),
    /// Some list still has all three colors.
    Reduced(ListAssignment),
}

impl Propagation {
    pub fn lists(&self) -> Option<&ListAssignment> {
        match self {
            Propagation::No => None,
            Propagation::TwoListReady(l) | Propagation::Reduced(l) => Some(l),
        }
    }

    pub fn into_lists(self) -> Option<ListAssignment> {
        match self {
            Propagation::No => None,
            Propagation::TwoListReady(l) | Propagation::Reduced(l) => Some(l),
        }
    }

    fn classify(lists: ListAssignment) -> Propagation {
        if lists.has_empty() {
            Propagation::No
        } else if lists.is_two_list() {
            Propagation::TwoListReady(lists)
        } else {
            Propagation::Reduced(lists)
        }
    }
}

/// Which dirty vertex the worklist processes next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WorklistOrder {
    #[default]
    Ascending,
    Descending,
}

/// Rule applications that shrank a list during one fixpoint run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FixpointStats {
    pub rule1: usize,
    pub rule4: usize,
    pub rule5: usize,
    pub rule6: usize,
}

impl FixpointStats {
    pub fn total(&self) -> usize {
        self.rule1 + self.rule4 + self.rule5 + self.rule6
    }
}

/// Applies rules 1, 2, 4, 5 and 6 until none is applicable.
pub fn run_to_fixpoint(g: &Graph, lists: ListAssignment) -> Propagation {
    run_to_fixpoint_with(g, lists, WorklistOrder::Ascending).0
}

pub fn run_to_fixpoint_with(
    g: &Graph,
    lists: ListAssignment,
    order: WorklistOrder,
) -> (Propagation, FixpointStats) {
    assert_eq!(lists.len(), g.n(), "list assignment does not match graph");
    if lists.has_empty() {
        return (Propagation::No, FixpointStats::default());
    }
    let mut engine = Engine {
        g,
        dirty: (0..g.n()).collect(),
        lists,
        stats: FixpointStats::default(),
    };
    loop {
        let next = match order {
            WorklistOrder::Ascending => engine.dirty.pop_first(),
            WorklistOrder::Descending => engine.dirty.pop_last(),
        };
        let Some(u) = next else { break };
        if engine.process(u).is_err() {
            return (Propagation::No, engine.stats);
        }
    }
    (Propagation::classify(engine.lists), engine.stats)
}

struct EmptyList;

#[derive(Clone, Copy)]
enum Rule {
    Propagate,
    Diamond,
    Triangle,
    Cycle4,
}

struct Engine<'g> {
    g: &'g Graph,
    lists: ListAssignment,
    dirty: BTreeSet<usize>,
    stats: FixpointStats,
}

impl Engine<'_> {
    fn shrink(&mut self, v: usize, keep: ColorSet, rule: Rule) -> Result<(), EmptyList> {
        if self.lists.restrict(v, keep) {
            match rule {
                Rule::Propagate => self.stats.rule1 += 1,
                Rule::Diamond => self.stats.rule4 += 1,
                Rule::Triangle => self.stats.rule5 += 1,
                Rule::Cycle4 => self.stats.rule6 += 1,
            }
            if self.lists.get(v).is_empty() {
                return Err(EmptyList);
            }
            self.dirty.insert(v);
        }
        Ok(())
    }

    fn diamond(&mut self, v: usize, x: usize) -> Result<(), EmptyList> {
        let both = self.lists.get(v).intersect(self.lists.get(x));
        self.shrink(v, both, Rule::Diamond)?;
        self.shrink(x, both, Rule::Diamond)
    }

    fn triangle(&mut self, t: [usize; 3]) -> Result<(), EmptyList> {
        for k in 0..3 {
            let (p, q, target) = (t[(k + 1) % 3], t[(k + 2) % 3], t[k]);
            let lp = self.lists.get(p);
            if lp.len() == 2 && lp == self.lists.get(q) {
                self.shrink(target, lp.complement(), Rule::Triangle)?;
            }
        }
        Ok(())
    }

    fn cycle4(&mut self, c: [usize; 4]) -> Result<(), EmptyList> {
        for k in 0..4 {
            let (y, v, w, x) = (c[k], c[(k + 1) % 4], c[(k + 2) % 4], c[(k + 3) % 4]);
            let (lv, lw, lx) = (self.lists.get(v), self.lists.get(w), self.lists.get(x));
            if lv.len() == 2 && lw.len() == 2 && lx.len() == 2 && lv != lw && lw != lx && lv != lx {
                self.shrink(y, lv.intersect(lx).complement(), Rule::Cycle4)?;
            }
        }
        Ok(())
    }

    /// Re-examines every rule pattern that contains `u`.
    fn process(&mut self, u: usize) -> Result<(), EmptyList> {
        let g = self.g;
        let nu = g.neighbors(u);
        if self.lists.get(u).is_empty() {
            return Err(EmptyList);
        }
        if self.lists.is_colored(u) {
            let keep = self.lists.get(u).complement();
            for &v in nu {
                self.shrink(v, keep, Rule::Propagate)?;
            }
        }
        for (i, &w) in nu.iter().enumerate() {
            for &y in &nu[i + 1..] {
                if g.has_edge(w, y) {
                    self.triangle([u, w, y])?;
                    // u as a diamond tip: the other tip is a common
                    // neighbor of the spine (w, y) not adjacent to u.
                    for x in g.common_neighbors(w, y) {
                        if x != u && !g.has_edge(u, x) {
                            self.diamond(u, x)?;
                        }
                    }
                } else {
                    // u on an induced 4-cycle u-w-r-y.
                    for r in g.common_neighbors(w, y) {
                        if r != u && !g.has_edge(u, r) {
                            self.cycle4([u, w, r, y])?;
                        }
                    }
                }
            }
        }
        // u on the spine (u, y) of a diamond with tips v, x.
        for &y in nu {
            let common: Vec<usize> = g.common_neighbors(u, y).collect();
            for (i, &v) in common.iter().enumerate() {
                for &x in &common[i + 1..] {
                    if !g.has_edge(v, x) {
                        self.diamond(v, x)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A rule that would still change some list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicable {
    EmptyList(usize),
    Propagate(usize),
    Diamond([usize; 4]),
    Triangle([usize; 3]),
    Cycle4([usize; 4]),
}

/// Scans every vertex subset of size at most four for an applicable rule.
/// Quartic in `n`; intended as an independent check on [`run_to_fixpoint`].
pub fn first_applicable_rule(g: &Graph, lists: &ListAssignment) -> Option<Applicable> {
    let n = g.n();
    for v in 0..n {
        if lists.get(v).is_empty() {
            return Some(Applicable::EmptyList(v));
        }
    }
    for u in 0..n {
        if lists.is_colored(u)
            && g.neighbors(u)
                .iter()
                .any(|&v| !lists.get(v).intersect(lists.get(u)).is_empty())
        {
            return Some(Applicable::Propagate(u));
        }
    }
    let perms3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = [a, b, c];
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    for p in perms3 {
                        let (v, w, x) = (t[p[0]], t[p[1]], t[p[2]]);
                        let mut trial = lists.clone();
                        if trial.rule5_triangle(g, [v, w, x]) == Ok(true) {
                            return Some(Applicable::Triangle([v, w, x]));
                        }
                    }
                }
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    for v in q {
                        for w in q {
                            for x in q {
                                for y in q {
                                    if !distinct(&[v, w, x, y]) {
                                        continue;
                                    }
                                    let mut trial = lists.clone();
                                    if trial.rule4_diamond(g, [v, w, x, y]) == Ok(true) {
                                        return Some(Applicable::Diamond([v, w, x, y]));
                                    }
                                    let mut trial = lists.clone();
                                    if trial.rule6_c4(g, [v, w, x, y]) == Ok(true) {
                                        return Some(Applicable::Cycle4([v, w, x, y]));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// A vertex whose whole open neighborhood is colored, if any.
///
/// In a diameter-two graph every other vertex then sees a colored vertex,
/// so rule 1 leaves a 2-list instance (or an empty list).
pub fn neighborhood_shortcut(g: &Graph, lists: &ListAssignment) -> Option<usize> {
    (0..g.n()).find(|&v| g.neighbors(v).iter().all(|&w| lists.is_colored(w)))
}

/// Convenience for tests and examples: lists written as strings over `abc`.
pub fn lists_from_strs(items: &[&str]) -> ListAssignment {
    ListAssignment::from_lists(
        items
            .iter()
            .map(|s| {
                if s.is_empty() {
                    ColorSet::EMPTY
                } else {
                    ColorSet::parse(s).expect("letters a, b, c")
                }
            })
            .collect(),
    )
}

/// The singleton list `{c}`.
pub fn singleton(c: Color) -> ColorSet {
    ColorSet::single(c)
}
