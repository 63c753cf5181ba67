//! Growing an induced path through the full-list vertices of N2 while
//! branching on colors, and turning a long enough path into an induced Cs.
//!
//! Starting from the least full-list vertex p1, each round commits the
//! current endpoint and its N1-neighbors to every color their lists allow,
//! propagating after each commitment. A branch whose lists all shrink to
//! two colors is a leaf, handed to the 2-list solver. Otherwise the path
//! is extended by a list-2 connector y and a full-list vertex x, where no
//! N1-neighbor of y touches p1. When no such pair exists, the N2-neighbors
//! of the endpoint that do reach p1's N1-neighbors are committed instead,
//! after which no full list can remain. Once the path holds s - 4
//! vertices it is closed through two adjacent cycle vertices into an
//! induced Cs, which the class forbids.

use crate::graph::{Graph, InducedCycleCertificate};
use crate::lists::{run_to_fixpoint, ListAssignment, Propagation};
use crate::palette::ColorSet;
use crate::solve::{SolveError, Violation};
use crate::two_list::{solve_2list, Coloring};

use super::decompose::{C5Decomposition, Region};

/// A path `p1, ..., p_l` from the growing procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PStar {
    pub vertices: Vec<usize>,
}

impl PStar {
    pub fn is_induced_path(&self, g: &Graph) -> bool {
        let p = &self.vertices;
        (0..p.len()).all(|i| (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)))
    }

    /// The N1-neighborhoods of the endpoints avoid the neighborhoods of
    /// the interior. Reading "neighborhood" there as N1-neighborhood or as
    /// the full neighborhood gives the same test, since the endpoint side
    /// already lies in N1.
    pub fn endpoints_separated(&self, g: &Graph, dec: &C5Decomposition) -> bool {
        let p = &self.vertices;
        let l = p.len();
        if l < 3 {
            return true;
        }
        let mut ends = dec
            .n1_neighbors(g, p[0])
            .chain(dec.n1_neighbors(g, p[l - 1]));
        ends.all(|q| p[1..l - 1].iter().all(|&m| !g.has_edge(q, m)))
    }
}

/// Per-run counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GrowReport {
    /// 2-list instances solved.
    pub leaves: usize,
    pub max_trail: usize,
    pub pstar_attempts: usize,
    pub failed_refutations: usize,
    pub claim_violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowOutcome {
    /// All branches were decided; `Some` carries the first coloring found.
    Decided(Option<Coloring>),
    /// A path of the target length closed into an induced Cs.
    Refuted {
        pstar: PStar,
        certificate: InducedCycleCertificate,
    },
}

/// `3^(6l)`, saturating.
pub fn leaf_budget(ell: usize) -> usize {
    3usize.saturating_pow(u32::try_from(6 * ell).unwrap_or(u32::MAX))
}

/// Runs the procedure with target length `ell = s - 4` on lists at a
/// fixpoint that still has full lists.
pub fn grow_pstar_or_branch(
    g: &Graph,
    lists: &ListAssignment,
    dec: &C5Decomposition,
    ell: usize,
) -> Result<(GrowOutcome, GrowReport), SolveError> {
    assert!(ell >= 1, "target length is at least one");
    let mut grower = Grower {
        g,
        dec,
        ell,
        report: GrowReport::default(),
    };
    let Some(&p1) = dec.l3.iter().find(|&&v| lists.size(v) == 3) else {
        return Err(SolveError::InternalInvariantBroken(
            "no full list left to grow from".into(),
        ));
    };
    let path = vec![p1];
    if let Some(stop) = grower.try_refute(&path, 0)? {
        return Ok((stop.into_outcome(), grower.report));
    }
    let pending: Vec<usize> = std::iter::once(p1).chain(dec.n1_neighbors(g, p1)).collect();
    let mut trail = Vec::new();
    let stop = grower.commit(lists.clone(), &pending, &mut trail, &Next::Extend(path))?;
    let outcome = stop.map_or(GrowOutcome::Decided(None), Stop::into_outcome);
    Ok((outcome, grower.report))
}

/// Closes `p` through adjacent cycle vertices `i` and `j`: the cycle
/// `p1, ..., p_l, c_j, j, i, c_i`, with `c_i` an N1-neighbor of `i`
/// adjacent to `p1` and `c_j` one of `j` adjacent to `p_l`. The pair
/// (2, 3) of the cycle is tried first, then every other adjacent pair in
/// both orientations; the first induced cycle wins.
pub fn refute_via_cs(
    g: &Graph,
    dec: &C5Decomposition,
    p: &PStar,
    s: usize,
) -> Result<InducedCycleCertificate, SolveError> {
    let path = &p.vertices;
    assert_eq!(path.len() + 4, s, "P* must have s - 4 vertices");
    let (first, last) = (path[0], path[path.len() - 1]);
    let attached = |i: usize, end: usize| -> Vec<usize> {
        g.neighbors(dec.c5[i])
            .iter()
            .copied()
            .filter(|&w| dec.in_n1(w) && g.has_edge(w, end))
            .collect()
    };
    let mut tried = None;
    for (i, j) in arc_order() {
        for ci in attached(i, first) {
            for cj in attached(j, last) {
                let mut vertices = path.clone();
                vertices.extend([cj, dec.c5[j], dec.c5[i], ci]);
                let cert = InducedCycleCertificate { vertices };
                if cert.is_valid_in(g) {
                    return Ok(cert);
                }
                tried.get_or_insert(cert);
            }
        }
    }
    let fallback = || {
        let mut vertices = path.clone();
        vertices.extend([dec.c5[2], dec.c5[1]]);
        InducedCycleCertificate { vertices }
    };
    Err(SolveError::CertificateInvalid(
        tried.unwrap_or_else(fallback),
    ))
}

fn arc_order() -> impl Iterator<Item = (usize, usize)> {
    let all = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, (i + 4) % 5)]);
    std::iter::once((1, 2)).chain(all.filter(|&a| a != (1, 2)))
}

enum Next {
    /// Pick the next pair for the path ending at the last vertex.
    Extend(Vec<usize>),
    /// The fallback set is committed; no full list may survive.
    Exhausted,
}

enum Stop {
    Yes(Coloring),
    Refuted(PStar, InducedCycleCertificate),
}

impl Stop {
    fn into_outcome(self) -> GrowOutcome {
        match self {
            Stop::Yes(c) => GrowOutcome::Decided(Some(c)),
            Stop::Refuted(pstar, certificate) => GrowOutcome::Refuted { pstar, certificate },
        }
    }
}

struct Grower<'a> {
    g: &'a Graph,
    dec: &'a C5Decomposition,
    ell: usize,
    report: GrowReport,
}

impl Grower<'_> {
    /// Commits `pending` in order, branching over each uncolored vertex's
    /// list in palette order.
    fn commit(
        &mut self,
        lists: ListAssignment,
        pending: &[usize],
        trail: &mut Vec<usize>,
        next: &Next,
    ) -> Result<Option<Stop>, SolveError> {
        let Some((&v, rest)) = pending.split_first() else {
            return self.proceed(&lists, trail, next);
        };
        if lists.is_colored(v) {
            return self.commit(lists, rest, trail, next);
        }
        trail.push(v);
        self.report.max_trail = self.report.max_trail.max(trail.len());
        let mut result = Ok(None);
        for c in lists.get(v).iter() {
            let mut branch = lists.clone();
            branch.set(v, ColorSet::single(c));
            result = match run_to_fixpoint(self.g, branch) {
                Propagation::No => Ok(None),
                Propagation::TwoListReady(l) => Ok(self.leaf(&l)),
                Propagation::Reduced(l) => self.commit(l, rest, trail, next),
            };
            if !matches!(result, Ok(None)) {
                break;
            }
        }
        trail.pop();
        result
    }

    fn leaf(&mut self, lists: &ListAssignment) -> Option<Stop> {
        self.report.leaves += 1;
        solve_2list(self.g, lists)
            .expect("fixpoint leaves no empty list")
            .map(Stop::Yes)
    }

    fn proceed(
        &mut self,
        lists: &ListAssignment,
        trail: &mut Vec<usize>,
        next: &Next,
    ) -> Result<Option<Stop>, SolveError> {
        let path = match next {
            Next::Extend(path) => path,
            Next::Exhausted => {
                let v = self.dec.l3.iter().find(|&&v| lists.size(v) == 3).copied();
                return Err(SolveError::InternalInvariantBroken(format!(
                    "vertex {v:?} kept a full list after the fallback commit"
                )));
            }
        };
        let (g, dec) = (self.g, self.dec);
        let p1 = path[0];
        let pi = *path.last().expect("nonempty path");
        if let Some((x, y)) = self.find_pair(lists, p1, pi) {
            self.check_claims(lists, p1, x);
            let mut longer = path.clone();
            longer.extend([y, x]);
            if let Some(stop) = self.try_refute(&longer, path.len())? {
                return Ok(Some(stop));
            }
            let pending: Vec<usize> = [y, x]
                .into_iter()
                .flat_map(|v| std::iter::once(v).chain(dec.n1_neighbors(g, v)))
                .collect();
            return self.commit(lists.clone(), &pending, trail, &Next::Extend(longer));
        }
        // Every full-list vertex now has a common neighbor with p_i among
        // these, so coloring them leaves a 2-list instance.
        let reaches_p1 = |y: usize| dec.n1_neighbors(g, y).any(|q| g.has_edge(q, p1));
        let fallback: Vec<usize> = g
            .neighbors(pi)
            .iter()
            .copied()
            .filter(|&y| dec.in_n2(y) && !lists.is_colored(y) && reaches_p1(y))
            .collect();
        self.commit(lists.clone(), &fallback, trail, &Next::Exhausted)
    }

    /// Least full-list `x`, then least list-2 `y` adjacent to `x` and `p_i`
    /// whose N1-neighbors all avoid `p1`.
    fn find_pair(&self, lists: &ListAssignment, p1: usize, pi: usize) -> Option<(usize, usize)> {
        let (g, dec) = (self.g, self.dec);
        dec.l3
            .iter()
            .copied()
            .filter(|&x| lists.size(x) == 3)
            .find_map(|x| {
                g.common_neighbors(x, pi)
                    .find(|&y| {
                        dec.region(y) == Region::N2
                            && lists.size(y) == 2
                            && dec.n1_neighbors(g, y).all(|q| !g.has_edge(q, p1))
                    })
                    .map(|y| (x, y))
            })
    }

    /// Records failures of the two counting claims for the new endpoint
    /// `x`, which still has a full list after p1 was colored.
    fn check_claims(&mut self, lists: &ListAssignment, p1: usize, x: usize) {
        let (g, dec) = (self.g, self.dec);
        debug_assert_eq!(lists.size(x), 3);
        for &q in g.neighbors(p1) {
            let shared: Vec<usize> = g.common_neighbors(q, x).collect();
            if shared.len() > 1 {
                self.report.claim_violations.push(Violation::new(
                    "endpoint-shared-neighbors",
                    [vec![p1, x, q], shared].concat(),
                ));
            }
        }
        let reached: Vec<usize> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| dec.in_n2(y) && dec.n1_neighbors(g, y).any(|q| g.has_edge(q, p1)))
            .collect();
        if reached.len() > 5 {
            self.report.claim_violations.push(Violation::new(
                "endpoint-reach",
                [vec![p1, x], reached].concat(),
            ));
        }
    }

    /// Tries to close the prefix of `path` of the target length when this
    /// extension (from `before` vertices) first reaches it.
    fn try_refute(&mut self, path: &[usize], before: usize) -> Result<Option<Stop>, SolveError> {
        if !(before < self.ell && self.ell <= path.len()) {
            return Ok(None);
        }
        self.report.pstar_attempts += 1;
        let pstar = PStar {
            vertices: path[..self.ell].to_vec(),
        };
        match refute_via_cs(self.g, self.dec, &pstar, self.ell + 4) {
            Ok(cert) => Ok(Some(Stop::Refuted(pstar, cert))),
            Err(SolveError::CertificateInvalid(_)) => {
                self.report.failed_refutations += 1;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_saturates() {
        assert_eq!(leaf_budget(1), 729);
        assert_eq!(leaf_budget(100), usize::MAX);
    }

    #[test]
    fn arcs_start_with_the_pair_two_three() {
        let arcs: Vec<_> = arc_order().collect();
        assert_eq!(arcs.len(), 10);
        assert_eq!(arcs[0], (1, 2));
        let mut sorted = arcs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 10);
    }

    #[test]
    fn pstar_shape_checks() {
        let g = crate::generate::path(4);
        assert!(PStar {
            vertices: vec![0, 1, 2, 3]
        }
        .is_induced_path(&g));
        assert!(!PStar {
            vertices: vec![0, 2, 1]
        }
        .is_induced_path(&g));
    }
}
