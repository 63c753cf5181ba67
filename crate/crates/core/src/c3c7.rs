//! List 3-coloring of (C3, C7)-free diameter-two graphs.
//!
//! After anchoring, the uncolored neighbors of the cycle split by which
//! cycle vertices they see: A around 1 and 3, B around 2 and 4, C around 5.
//! The branching then needs at most `2 + |L3| (2 + n)` 2-list instances:
//! full lists restricted to {a, b}; or some full-list z1 colored c, after
//! which the remaining full lists are restricted to {a, c}, or some z2
//! among them is colored b and propagation leaves only 2-lists.

use crate::c4cs::Region;
use crate::graph::Graph;
use crate::lists::{run_to_fixpoint, ListAssignment, Propagation};
use crate::palette::{Color, ColorSet};
use crate::solve::{
    anchored_search, check_diameter, check_lists, BudgetRun, SolveError, SolveResult, SolverConfig,
    Violation,
};
use crate::two_list::{solve_2list, Coloring};

/// Sets are ascending vertex lists; cycle positions 1..5 are `c5[0..5]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ABCPartition {
    pub c5: [usize; 5],
    pub a1: Vec<usize>,
    pub a3: Vec<usize>,
    pub a13: Vec<usize>,
    pub b2: Vec<usize>,
    pub b4: Vec<usize>,
    pub b24: Vec<usize>,
    pub c: Vec<usize>,
    pub col1: Vec<usize>,
    pub col2: Vec<usize>,
    pub l2: Vec<usize>,
    pub l3: Vec<usize>,
    region: Vec<Region>,
}

impl ABCPartition {
    pub fn region(&self, v: usize) -> Region {
        self.region[v]
    }

    pub fn a(&self) -> impl Iterator<Item = usize> + '_ {
        self.a1.iter().chain(&self.a3).chain(&self.a13).copied()
    }

    pub fn b(&self) -> impl Iterator<Item = usize> + '_ {
        self.b2.iter().chain(&self.b4).chain(&self.b24).copied()
    }

    /// The seven named sets, labeled.
    pub fn named_sets(&self) -> [(&'static str, &[usize]); 7] {
        [
            ("A1", &self.a1),
            ("A3", &self.a3),
            ("A13", &self.a13),
            ("B2", &self.b2),
            ("B4", &self.b4),
            ("B24", &self.b24),
            ("C", &self.c),
        ]
    }
}

/// Builds the partition for lists at a fixpoint with `c5` colored
/// a, b, a, b, c, and checks the three basic facts it rests on.
pub fn build_abc(
    g: &Graph,
    lists: &ListAssignment,
    c5: [usize; 5],
) -> Result<ABCPartition, SolveError> {
    let part = partition(g, lists, c5)?;
    validate(g, &part)?;
    Ok(part)
}

fn partition(
    g: &Graph,
    lists: &ListAssignment,
    c5: [usize; 5],
) -> Result<ABCPartition, SolveError> {
    let dec = crate::c4cs::decompose_around_c5(g, lists, c5)?;
    let on = |v: usize, i: usize| g.has_edge(v, c5[i]);
    let uncolored_n1: Vec<usize> = dec
        .n1
        .iter()
        .copied()
        .filter(|&v| !lists.is_colored(v))
        .collect();
    let pick = |f: &dyn Fn(usize) -> bool| {
        uncolored_n1
            .iter()
            .copied()
            .filter(|&v| f(v))
            .collect::<Vec<_>>()
    };
    let part = ABCPartition {
        c5,
        a1: pick(&|v| on(v, 0) && !on(v, 2)),
        a3: pick(&|v| on(v, 2) && !on(v, 0)),
        a13: pick(&|v| on(v, 0) && on(v, 2)),
        b2: pick(&|v| on(v, 1) && !on(v, 3)),
        b4: pick(&|v| on(v, 3) && !on(v, 1)),
        b24: pick(&|v| on(v, 1) && on(v, 3)),
        c: pick(&|v| on(v, 4)),
        col1: dec.col1.clone(),
        col2: dec.col2.clone(),
        l2: dec.l2.clone(),
        l3: dec.l3.clone(),
        region: (0..g.n()).map(|v| dec.region(v)).collect(),
    };
    Ok(part)
}

fn validate(g: &Graph, part: &ABCPartition) -> Result<(), SolveError> {
    let c5 = part.c5;
    let on = |v: usize, i: usize| g.has_edge(v, c5[i]);
    let fail = |w: Vec<usize>| {
        Err(SolveError::LemmaViolation(Violation::new(
            "abc-cycle-neighbors",
            w,
        )))
    };
    for v in part.a() {
        if let Some(&i) = [1, 3, 4].iter().find(|&&i| on(v, i)) {
            return fail(vec![v, c5[i]]);
        }
    }
    for v in part.b() {
        if let Some(&i) = [0, 2, 4].iter().find(|&&i| on(v, i)) {
            return fail(vec![v, c5[i]]);
        }
    }
    for &v in &part.c {
        if let Some(&i) = [0, 1, 2, 3].iter().find(|&&i| on(v, i)) {
            return fail(vec![v, c5[i]]);
        }
    }
    for &z in &part.l3 {
        let sees = |mut set: Box<dyn Iterator<Item = usize> + '_>| set.any(|w| g.has_edge(z, w));
        if !sees(Box::new(part.a()))
            || !sees(Box::new(part.b()))
            || !sees(Box::new(part.c.iter().copied()))
        {
            return Err(SolveError::LemmaViolation(Violation::new(
                "full-list-sees-abc",
                [z],
            )));
        }
    }
    let mut independent: Vec<(&[usize], &[usize])> =
        part.named_sets().iter().map(|&(_, s)| (s, s)).collect();
    independent.extend([
        (&part.a1[..], &part.a13[..]),
        (&part.a3[..], &part.a13[..]),
        (&part.b2[..], &part.b24[..]),
        (&part.b4[..], &part.b24[..]),
    ]);
    for (s, t) in independent {
        for &u in s {
            if let Some(&w) = t.iter().find(|&&w| g.has_edge(u, w)) {
                return Err(SolveError::LemmaViolation(Violation::new(
                    "abc-independent",
                    [u, w],
                )));
            }
        }
    }
    Ok(())
}

/// Checks the facts the branching relies on. For the first group the
/// witnesses are the N2 vertex and the two neighbors that would close an
/// induced 7-cycle through the anchored C5.
pub fn check_c3_lemmas(g: &Graph, part: &ABCPartition) -> Vec<Violation> {
    let mut out = Vec::new();
    let colored2 = |v: usize| part.col2.binary_search(&v).is_ok();
    let open_n2: Vec<usize> = (0..g.n())
        .filter(|&v| part.region(v) == Region::N2 && !colored2(v))
        .collect();
    let hit = |z: usize, set: &[usize]| set.iter().copied().find(|&w| g.has_edge(z, w));

    for &z in &open_n2 {
        // A vertex seeing C sees neither A3 nor B2, and none sees both A1
        // and B4.
        if let Some(uc) = hit(z, &part.c) {
            if let Some(ub) = hit(z, &part.b2) {
                out.push(Violation::new("n2-closes-c7", [z, ub, uc]));
            }
            if let Some(ua) = hit(z, &part.a3) {
                out.push(Violation::new("n2-closes-c7", [z, ua, uc]));
            }
        }
        if let (Some(ua), Some(ub)) = (hit(z, &part.a1), hit(z, &part.b4)) {
            out.push(Violation::new("n2-closes-c7", [z, ua, ub]));
        }
    }
    for &z in &part.l3 {
        if hit(z, &part.a13).is_none() || hit(z, &part.b24).is_none() {
            out.push(Violation::new("full-list-sees-a13-b24", [z]));
        }
        for &w in g.neighbors(z) {
            if part.region(w) == Region::N2 {
                out.push(Violation::new("full-list-n2-neighbor", [z, w]));
            }
        }
    }
    out
}

/// `2 + |L3| (2 + n)`.
pub fn instance_budget(l3: usize, n: usize) -> usize {
    l3.saturating_mul(n.saturating_add(2)).saturating_add(2)
}

/// The two-level branching; returns the first coloring found and the
/// number of 2-list instances solved.
pub fn theorem2_branch(
    g: &Graph,
    lists: &ListAssignment,
    part: &ABCPartition,
) -> Result<(Option<Coloring>, usize), SolveError> {
    let instances = std::cell::Cell::new(0);
    let solve = |l: &ListAssignment| {
        instances.set(instances.get() + 1);
        solve_2list(g, l).expect("2-list instance")
    };
    let ab = ColorSet::of(&[Color::A, Color::B]);
    let ac = ColorSet::of(&[Color::A, Color::C]);
    let full = |l: &ListAssignment| l.vertices_with_size(3).collect::<Vec<_>>();

    let mut first = lists.clone();
    for &z in &part.l3 {
        first.restrict(z, ab);
    }
    if let Some(c) = solve(&first) {
        return Ok((Some(c), instances.get()));
    }
    for &z1 in &part.l3 {
        let mut with_c = lists.clone();
        with_c.set(z1, ColorSet::single(Color::C));
        let after_c = match run_to_fixpoint(g, with_c) {
            Propagation::No => continue,
            Propagation::TwoListReady(l) => {
                if let Some(c) = solve(&l) {
                    return Ok((Some(c), instances.get()));
                }
                continue;
            }
            Propagation::Reduced(l) => l,
        };
        let remaining = full(&after_c);
        let mut restricted = after_c.clone();
        for &z in &remaining {
            restricted.restrict(z, ac);
        }
        if let Some(c) = solve(&restricted) {
            return Ok((Some(c), instances.get()));
        }
        for &z2 in &remaining {
            let mut with_b = after_c.clone();
            with_b.set(z2, ColorSet::single(Color::B));
            match run_to_fixpoint(g, with_b) {
                Propagation::No => {}
                Propagation::TwoListReady(l) => {
                    if let Some(c) = solve(&l) {
                        return Ok((Some(c), instances.get()));
                    }
                }
                Propagation::Reduced(l) => {
                    let z3 = full(&l)[0];
                    return Err(SolveError::LemmaViolation(Violation::new(
                        "theorem2-z3",
                        [z1, z2, z3],
                    )));
                }
            }
        }
    }
    Ok((None, instances.get()))
}

/// Decides whether `g` admits a proper coloring from `lists`, for a
/// (C3, C7)-free graph of diameter at most two.
pub fn solve_c3c7(
    g: &Graph,
    lists: &ListAssignment,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    check_lists(g, lists)?;
    if config.runs_checks(g.n()) {
        check_diameter(g)?;
        if let Some(c) = g.find_induced_cycle(3) {
            return Err(SolveError::HasInducedC3(c));
        }
        if let Some(c) = g.find_induced_cycle(7) {
            return Err(SolveError::HasInducedC7(c));
        }
    }
    anchored_search(g, lists, |state, telemetry| {
        let c5 = state.anchoring.c5;
        match state.propagation {
            Propagation::No => Ok(None),
            Propagation::TwoListReady(l) => {
                if config.check_lemmas {
                    match build_abc(g, l, c5) {
                        Ok(part) => telemetry.lemma_violations.extend(check_c3_lemmas(g, &part)),
                        Err(SolveError::LemmaViolation(v)) => telemetry.lemma_violations.push(v),
                        Err(e) => return Err(e),
                    }
                }
                telemetry.instances += 1;
                Ok(solve_2list(g, l).expect("fixpoint leaves no empty list"))
            }
            Propagation::Reduced(l) => {
                let part = build_abc(g, l, c5)?;
                if config.check_lemmas {
                    telemetry.lemma_violations.extend(check_c3_lemmas(g, &part));
                }
                let (found, instances) = theorem2_branch(g, l, &part)?;
                telemetry.instances += instances;
                telemetry.branch_runs.push(BudgetRun {
                    instances,
                    budget: instance_budget(part.l3.len(), g.n()),
                });
                Ok(found)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anchor::CANONICAL;
    use crate::generate::{cycle, petersen};

    fn anchored(g: &Graph, c5: [usize; 5]) -> ListAssignment {
        let mut l = ListAssignment::full(g.n());
        for (k, &v) in c5.iter().enumerate() {
            l.set(v, ColorSet::single(CANONICAL[k]));
        }
        run_to_fixpoint(g, l).into_lists().expect("colorable")
    }

    #[test]
    fn pentagon_partition_is_empty() {
        let g = cycle(5);
        let part = build_abc(&g, &anchored(&g, [0, 1, 2, 3, 4]), [0, 1, 2, 3, 4]).unwrap();
        assert!(part.named_sets().iter().all(|(_, s)| s.is_empty()));
        assert!(check_c3_lemmas(&g, &part).is_empty());
    }

    #[test]
    fn petersen_inner_vertices_follow_their_spoke() {
        let g = petersen();
        let part = build_abc(&g, &anchored(&g, [0, 1, 2, 3, 4]), [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(part.a1, vec![5]);
        assert_eq!(part.b2, vec![6]);
        assert_eq!(part.a3, vec![7]);
        assert_eq!(part.b4, vec![8]);
        assert_eq!(part.c, vec![9]);
        assert!(check_c3_lemmas(&g, &part).is_empty());
    }

    #[test]
    fn vertex_on_one_and_three_is_in_a13() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap();
        let part = build_abc(&g, &anchored(&g, [0, 1, 2, 3, 4]), [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(part.a13, vec![5]);
    }

    #[test]
    fn full_list_neighbor_in_n2_is_flagged() {
        // Petersen's outer ring and spokes, plus adjacent far vertices 10
        // and 11 hanging off spokes 5 and 6.
        let g = Graph::new(
            12,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (10, 5),
                (10, 11),
                (11, 6),
            ],
        )
        .unwrap();
        let lists = anchored(&g, [0, 1, 2, 3, 4]);
        assert_eq!(
            build_abc(&g, &lists, [0, 1, 2, 3, 4]),
            Err(SolveError::LemmaViolation(Violation::new(
                "full-list-sees-abc",
                [10]
            )))
        );
        let part = partition(&g, &lists, [0, 1, 2, 3, 4]).unwrap();
        let v = check_c3_lemmas(&g, &part);
        assert!(
            v.contains(&Violation::new("full-list-n2-neighbor", [10, 11])),
            "{v:?}"
        );
        assert!(
            v.contains(&Violation::new("full-list-sees-a13-b24", [10])),
            "{v:?}"
        );
    }

    #[test]
    fn budget_formula() {
        assert_eq!(instance_budget(0, 10), 2);
        assert_eq!(instance_budget(3, 10), 38);
    }
}
