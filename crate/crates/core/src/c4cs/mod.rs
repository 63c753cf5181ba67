//! List 3-coloring of (C4, Cs)-free diameter-two graphs.

mod decompose;
mod grow;

pub use decompose::{check_structural_lemmas, decompose_around_c5, C5Decomposition, Region};
pub use grow::{grow_pstar_or_branch, leaf_budget, refute_via_cs, GrowOutcome, GrowReport, PStar};

use crate::graph::Graph;
use crate::lists::{run_to_fixpoint, ListAssignment, Propagation};
use crate::palette::ColorSet;
use crate::solve::{
    anchored_search, check_diameter, check_lists, BudgetRun, SolveError, SolveResult, SolverConfig,
    Telemetry,
};
use crate::two_list::{solve_2list, Coloring};

/// Decides whether `g` admits a proper coloring from `lists`, for a
/// (C4, Cs)-free graph of diameter at most two.
pub fn solve_c4cs(
    g: &Graph,
    lists: &ListAssignment,
    s: usize,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    if s < 5 {
        return Err(SolveError::InvalidCycleLength(s));
    }
    check_lists(g, lists)?;
    if config.runs_checks(g.n()) {
        check_diameter(g)?;
        if let Some(c) = g.find_induced_cycle(4) {
            return Err(SolveError::HasInducedC4(c));
        }
        if let Some(certificate) = g.find_induced_cycle(s) {
            return Err(SolveError::HasInducedCs { s, certificate });
        }
    }
    anchored_search(g, lists, |state, telemetry| {
        let lists = match state.propagation {
            Propagation::No => return Ok(None),
            Propagation::TwoListReady(l) => {
                if config.check_lemmas {
                    let dec = decompose_around_c5(g, l, state.anchoring.c5)?;
                    telemetry
                        .lemma_violations
                        .extend(check_structural_lemmas(g, &dec));
                }
                telemetry.instances += 1;
                return Ok(solve_2list(g, l).expect("fixpoint leaves no empty list"));
            }
            Propagation::Reduced(l) => l,
        };
        let dec = decompose_around_c5(g, lists, state.anchoring.c5)?;
        if config.check_lemmas {
            telemetry
                .lemma_violations
                .extend(check_structural_lemmas(g, &dec));
        }
        if let Some(k) = config.lemma1_budget {
            for i in 0..5 {
                if let Some((found, instances)) = lemma1_component_branch(g, lists, &dec, i, k)? {
                    telemetry.instances += instances;
                    return Ok(found);
                }
            }
        }
        grow_step(g, lists, &dec, s, telemetry)
    })
}

fn grow_step(
    g: &Graph,
    lists: &ListAssignment,
    dec: &C5Decomposition,
    s: usize,
    telemetry: &mut Telemetry,
) -> Result<Option<Coloring>, SolveError> {
    let ell = s - 4;
    let (outcome, report) = grow_pstar_or_branch(g, lists, dec, ell)?;
    telemetry.instances += report.leaves;
    telemetry.grow_runs.push(BudgetRun {
        instances: report.leaves,
        budget: leaf_budget(ell),
    });
    telemetry.max_trail = telemetry.max_trail.max(report.max_trail);
    telemetry.failed_refutations += report.failed_refutations;
    telemetry.claim_violations.extend(report.claim_violations);
    match outcome {
        GrowOutcome::Decided(found) => Ok(found),
        GrowOutcome::Refuted { certificate, .. } => {
            Err(SolveError::HasInducedCs { s, certificate })
        }
    }
}

/// Branches on the two colorings of each component of `G[N1(i)]`.
///
/// Returns `None` when `N1(i)` has more than `k` components. An odd cycle
/// in `N1(i)` means no coloring exists, since its vertices all see `i`.
/// Otherwise every branch colors `N(i)` entirely, which leaves a 2-list
/// instance; the pair holds the first coloring found and the number of
/// 2-list instances solved.
pub fn lemma1_component_branch(
    g: &Graph,
    lists: &ListAssignment,
    dec: &C5Decomposition,
    i: usize,
    k: usize,
) -> Result<Option<(Option<Coloring>, usize)>, SolveError> {
    let members = &dec.n1i[i];
    let mut side = vec![None; g.n()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for &root in members {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut comp = vec![root];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &w in g.neighbors(u) {
                if members.binary_search(&w).is_err() {
                    continue;
                }
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].expect("visited"));
                        comp.push(w);
                    }
                    Some(sw) if Some(sw) == side[u] => return Ok(Some((None, 0))),
                    Some(_) => {}
                }
            }
        }
        components.push(comp);
    }
    if components.len() > k || components.len() >= 64 {
        return Ok(None);
    }
    let pair = ColorSet::single(crate::anchor::CANONICAL[i]).complement();
    let mut colors = pair.iter();
    let (x, y) = (
        colors.next().expect("two colors"),
        colors.next().expect("two colors"),
    );
    let mut instances = 0;
    for mask in 0u64..1 << components.len() {
        let mut branch = lists.clone();
        for (bit, comp) in components.iter().enumerate() {
            let flip = mask >> bit & 1 == 1;
            for &v in comp {
                let c = if side[v] == Some(flip) { x } else { y };
                branch.restrict(v, ColorSet::single(c));
            }
        }
        match run_to_fixpoint(g, branch) {
            Propagation::No => {}
            Propagation::TwoListReady(l) => {
                instances += 1;
                if let Some(c) = solve_2list(g, &l).expect("fixpoint leaves no empty list") {
                    return Ok(Some((Some(c), instances)));
                }
            }
            Propagation::Reduced(l) => {
                let v = l.vertices_with_size(3).next();
                return Err(SolveError::InternalInvariantBroken(format!(
                    "vertex {v:?} kept a full list with N({}) colored",
                    dec.c5[i]
                )));
            }
        }
    }
    Ok(Some((None, instances)))
}
