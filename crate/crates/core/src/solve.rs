//! Types shared by the two class solvers: configuration, results,
//! telemetry and errors, plus the class gate and the C5-anchoring driver.

use std::fmt;

use thiserror::Error;

use crate::anchor::{anchorings, Anchoring};
use crate::graph::{FarPair, Graph, InducedCycleCertificate};
use crate::lists::{run_to_fixpoint, ListAssignment, Propagation};
use crate::oracle::{verify_coloring, Oracle, OracleError};
use crate::two_list::{solve_2list, Coloring};

pub const DEFAULT_CHECK_BOUND: usize = 300;
pub const DEFAULT_LEMMA1_BUDGET: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Class checks run up front only when `n` is at most this.
    pub check_bound: usize,
    /// Skip the up-front class checks regardless of size.
    pub skip_checks: bool,
    /// Run the structural lemma checks on every anchoring and record
    /// violations in the telemetry.
    pub check_lemmas: bool,
    /// Component budget for the optional component-branching fast path of
    /// the (C4, Cs) solver; `None` disables it.
    pub lemma1_budget: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            check_bound: DEFAULT_CHECK_BOUND,
            skip_checks: false,
            check_lemmas: false,
            lemma1_budget: None,
        }
    }
}

impl SolverConfig {
    pub(crate) fn runs_checks(&self, n: usize) -> bool {
        !self.skip_checks && n <= self.check_bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Coloring),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Decision::Yes(c) => Some(c),
            Decision::No => None,
        }
    }
}

/// A named property that failed, with the vertices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: &'static str,
    pub witnesses: Vec<usize>,
}

impl Violation {
    pub fn new(rule: &'static str, witnesses: impl Into<Vec<usize>>) -> Self {
        Violation {
            rule,
            witnesses: witnesses.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.rule, self.witnesses)
    }
}

/// Instances solved by one bounded branching run against its budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetRun {
    pub instances: usize,
    pub budget: usize,
}

impl BudgetRun {
    pub fn within_budget(&self) -> bool {
        self.instances <= self.budget
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Telemetry {
    /// 2-list instances solved in total.
    pub instances: usize,
    /// The input had no induced C5 and was decided by the oracle.
    pub fallback: bool,
    /// C5 colorings tried.
    pub anchorings: usize,
    /// One entry per P*-growing run.
    pub grow_runs: Vec<BudgetRun>,
    /// One entry per two-level branching run.
    pub branch_runs: Vec<BudgetRun>,
    /// Longest commit trail seen in any P*-growing run.
    pub max_trail: usize,
    /// P* candidates whose assembled cycle failed the induced check.
    pub failed_refutations: usize,
    pub lemma_violations: Vec<Violation>,
    pub claim_violations: Vec<Violation>,
}

impl Telemetry {
    pub fn budget_violations(&self) -> usize {
        self.grow_runs
            .iter()
            .chain(&self.branch_runs)
            .filter(|r| !r.within_budget())
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: Decision,
    pub telemetry: Telemetry,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("forbidden cycle length {0} is below 5")]
    InvalidCycleLength(usize),
    #[error("expected {expected} lists, got {got}")]
    ListMismatch { expected: usize, got: usize },
    #[error("NotDiameterTwo: d({},{})={}", .0.u, .0.v, .0.distance)]
    NotDiameterTwo(FarPair),
    #[error("HasInducedC3: {:?}", .0.vertices)]
    HasInducedC3(InducedCycleCertificate),
    #[error("HasInducedC4: {:?}", .0.vertices)]
    HasInducedC4(InducedCycleCertificate),
    #[error("HasInducedC7: {:?}", .0.vertices)]
    HasInducedC7(InducedCycleCertificate),
    #[error("HasInducedCs (s={s}): {:?}", .certificate.vertices)]
    HasInducedCs {
        s: usize,
        certificate: InducedCycleCertificate,
    },
    #[error("PartitionLeftover: vertex {0} is at distance above 2 from the C5")]
    PartitionLeftover(usize),
    #[error("LemmaViolation: {0}")]
    LemmaViolation(Violation),
    #[error("CertificateInvalid: {:?}", .0.vertices)]
    CertificateInvalid(InducedCycleCertificate),
    #[error("InternalInvariantBroken: {0}")]
    InternalInvariantBroken(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl SolveError {
    /// Short property name used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            SolveError::InvalidCycleLength(_) => "InvalidCycleLength",
            SolveError::ListMismatch { .. } => "ListMismatch",
            SolveError::NotDiameterTwo(_) => "NotDiameterTwo",
            SolveError::HasInducedC3(_) => "HasInducedC3",
            SolveError::HasInducedC4(_) => "HasInducedC4",
            SolveError::HasInducedC7(_) => "HasInducedC7",
            SolveError::HasInducedCs { .. } => "HasInducedCs",
            SolveError::PartitionLeftover(_) => "PartitionLeftover",
            SolveError::LemmaViolation(_) => "LemmaViolation",
            SolveError::CertificateInvalid(_) => "CertificateInvalid",
            SolveError::InternalInvariantBroken(_) => "InternalInvariantBroken",
            SolveError::Oracle(_) => "TooLarge",
        }
    }

    /// Witness vertices carried by the error, if any.
    pub fn witnesses(&self) -> Vec<usize> {
        match self {
            SolveError::NotDiameterTwo(p) => vec![p.u, p.v],
            SolveError::HasInducedC3(c)
            | SolveError::HasInducedC4(c)
            | SolveError::HasInducedC7(c)
            | SolveError::HasInducedCs { certificate: c, .. }
            | SolveError::CertificateInvalid(c) => c.vertices.clone(),
            SolveError::PartitionLeftover(v) => vec![*v],
            SolveError::LemmaViolation(v) => v.witnesses.clone(),
            _ => Vec::new(),
        }
    }
}

pub(crate) fn check_lists(g: &Graph, lists: &ListAssignment) -> Result<(), SolveError> {
    if lists.len() != g.n() {
        return Err(SolveError::ListMismatch {
            expected: g.n(),
            got: lists.len(),
        });
    }
    Ok(())
}

pub(crate) fn check_diameter(g: &Graph) -> Result<(), SolveError> {
    match g.far_pair(2) {
        Some(p) => Err(SolveError::NotDiameterTwo(p)),
        None => Ok(()),
    }
}

/// Decides with the exhaustive oracle.
pub fn solve_oracle(
    g: &Graph,
    lists: &ListAssignment,
    oracle: Oracle,
) -> Result<SolveResult, SolveError> {
    check_lists(g, lists)?;
    let decision = match oracle.solve(g, lists)? {
        Some(c) => Decision::Yes(c),
        None => Decision::No,
    };
    Ok(SolveResult {
        decision,
        telemetry: Telemetry::default(),
    })
}

/// Runs the common frame of both solvers on a checked input: initial
/// fixpoint, C5 search (oracle fallback when there is none), then every
/// C5 coloring allowed by the lists, normalized so the cycle reads
/// a, b, a, b, c. `on_anchor` receives the normalized lists after the
/// anchoring's fixpoint; its coloring is mapped back to the input palette.
pub(crate) fn anchored_search<F>(
    g: &Graph,
    lists: &ListAssignment,
    mut on_anchor: F,
) -> Result<SolveResult, SolveError>
where
    F: FnMut(&AnchorState<'_>, &mut Telemetry) -> Result<Option<Coloring>, SolveError>,
{
    let mut telemetry = Telemetry::default();
    let reduced = match run_to_fixpoint(g, lists.clone()) {
        Propagation::No => {
            return Ok(SolveResult {
                decision: Decision::No,
                telemetry,
            })
        }
        Propagation::TwoListReady(l) => {
            telemetry.instances += 1;
            let decision = decide(solve_2list(g, &l).expect("fixpoint leaves no empty list"));
            return Ok(SolveResult {
                decision,
                telemetry,
            });
        }
        Propagation::Reduced(l) => l,
    };
    let Some(c5) = g.find_induced_c5() else {
        telemetry.fallback = true;
        let decision = decide(Oracle::unbounded().solve(g, &reduced)?);
        return Ok(SolveResult {
            decision,
            telemetry,
        });
    };
    for anchoring in anchorings(c5, &reduced) {
        telemetry.anchorings += 1;
        let propagation = run_to_fixpoint(g, anchoring.apply(&reduced));
        let state = AnchorState {
            anchoring,
            propagation: &propagation,
        };
        if let Some(c) = on_anchor(&state, &mut telemetry)? {
            let c = anchoring.restore(&c);
            assert!(
                verify_coloring(g, lists, &c),
                "anchored coloring failed verification"
            );
            return Ok(SolveResult {
                decision: Decision::Yes(c),
                telemetry,
            });
        }
    }
    Ok(SolveResult {
        decision: Decision::No,
        telemetry,
    })
}

pub(crate) struct AnchorState<'a> {
    pub anchoring: Anchoring,
    pub propagation: &'a Propagation,
}

fn decide(found: Option<Coloring>) -> Decision {
    found.map_or(Decision::No, Decision::Yes)
}
