//! Named graphs and seeded random diameter-two instances.
//!
//! Random graphs come from SplitMix64 (Steele, Lea and Flood), seeded
//! directly with the 64-bit seed of the generator spec. One attempt draws
//! one value per vertex pair `(u, v)`, `u < v`, in lexicographic order,
//! converts it to a float in `[0, 1)` as `(x >> 11) * 2^-53`, and keeps the
//! edge when that float is below `p`. Rejected attempts continue the same
//! stream. Any implementation following these steps reproduces the same
//! graphs.

use std::fmt;
use std::str::FromStr;

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_REJECTION_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("no graph satisfied {spec} within {attempts} attempts")]
    RejectionBudgetExhausted { spec: String, attempts: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown constraint `{0}`")]
    UnknownConstraint(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Grotzsch,
    C5,
    K4,
    RandomDiam2,
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "petersen" => Ok(Family::Petersen),
            "grotzsch" => Ok(Family::Grotzsch),
            "c5" => Ok(Family::C5),
            "k4" => Ok(Family::K4),
            "random_diam2" => Ok(Family::RandomDiam2),
            other => Err(GenError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Petersen => "petersen",
            Family::Grotzsch => "grotzsch",
            Family::C5 => "c5",
            Family::K4 => "k4",
            Family::RandomDiam2 => "random_diam2",
        })
    }
}

/// Forbidden induced cycle for random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    C3Free,
    C4Free,
    C7Free,
    CsFree(usize),
}

impl Constraint {
    pub fn cycle_length(self) -> usize {
        match self {
            Constraint::C3Free => 3,
            Constraint::C4Free => 4,
            Constraint::C7Free => 7,
            Constraint::CsFree(s) => s,
        }
    }

    pub fn holds(self, g: &Graph) -> bool {
        g.find_induced_cycle(self.cycle_length()).is_none()
    }
}

impl FromStr for Constraint {
    type Err = GenError;

    /// Accepts `c3free`, `c4free`, `c7free`, `csfree(k)` and `csfree=k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::UnknownConstraint(s.to_string());
        match s {
            "c3free" => return Ok(Constraint::C3Free),
            "c4free" => return Ok(Constraint::C4Free),
            "c7free" => return Ok(Constraint::C7Free),
            _ => {}
        }
        let arg = s
            .strip_prefix("csfree(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("csfree="))
            .ok_or_else(bad)?;
        let k: usize = arg.parse().map_err(|_| bad())?;
        if k < 3 {
            return Err(bad());
        }
        Ok(Constraint::CsFree(k))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::C3Free => f.write_str("c3free"),
            Constraint::C4Free => f.write_str("c4free"),
            Constraint::C7Free => f.write_str("c7free"),
            Constraint::CsFree(s) => write!(f, "csfree({s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub constraints: Vec<Constraint>,
    pub budget: usize,
}

impl GeneratorSpec {
    pub fn named(family: Family) -> Self {
        GeneratorSpec {
            family,
            n: 0,
            p: 0.0,
            seed: 0,
            constraints: Vec::new(),
            budget: DEFAULT_REJECTION_BUDGET,
        }
    }

    pub fn random(n: usize, p: f64, seed: u64, constraints: &[Constraint]) -> Self {
        GeneratorSpec {
            family: Family::RandomDiam2,
            n,
            p,
            seed,
            constraints: constraints.to_vec(),
            budget: DEFAULT_REJECTION_BUDGET,
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::RandomDiam2 => {
                write!(
                    f,
                    "random_diam2(n={}, p={}, seed={}",
                    self.n, self.p, self.seed
                )?;
                for c in &self.constraints {
                    write!(f, ", {c}")?;
                }
                f.write_str(")")
            }
            named => write!(f, "{named}"),
        }
    }
}

/// Produces the graph a spec describes. Named families ignore `n`, `p`,
/// `seed` and `constraints`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenError> {
    match spec.family {
        Family::Petersen => Ok(petersen()),
        Family::Grotzsch => Ok(grotzsch()),
        Family::C5 => Ok(cycle(5)),
        Family::K4 => Ok(complete(4)),
        Family::RandomDiam2 => random_diam2(spec).map(|(g, _)| g),
    }
}

/// Rejection sampling; also reports how many attempts were drawn.
pub fn random_diam2(spec: &GeneratorSpec) -> Result<(Graph, usize), GenError> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(GenError::InvalidProbability(spec.p));
    }
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let n = spec.n;
    for attempt in 1..=spec.budget {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if unit_float(rng.next_u64()) < spec.p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("pairs are in range");
        if g.has_diameter_at_most(2) && spec.constraints.iter().all(|c| c.holds(&g)) {
            return Ok((g, attempt));
        }
    }
    Err(GenError::RejectionBudgetExhausted {
        spec: spec.to_string(),
        attempts: spec.budget,
    })
}

#[inline]
fn unit_float(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete edges")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges")
}

/// Outer pentagon `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen edges")
}

/// Mycielskian of the pentagon: outer cycle `0..5`, shadow `5 + i` adjacent
/// to the cycle neighbors of `i`, hub `10` adjacent to every shadow.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::with_capacity(20);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((10, 5 + i));
    }
    Graph::new(11, edges).expect("grotzsch edges")
}

/// Robertson's pentagons-and-pentagrams construction: `P_h[j] = 5h + j`,
/// `Q_i[j] = 25 + 5i + j`, with `P_h[j] ~ Q_i[hi + j]`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for a in 0..5 {
        for j in 0..5 {
            edges.push((p(a, j), p(a, j + 1)));
            edges.push((q(a, j), q(a, j + 2)));
            for i in 0..5 {
                edges.push((p(a, j), q(i, a * i + j)));
            }
        }
    }
    Graph::new(50, edges).expect("hoffman-singleton edges")
}

/// Erdős–Rényi polarity graph over the projective plane of prime order `q`:
/// points are joined when orthogonal. Diameter two and free of 4-cycles.
pub fn polarity(q: usize) -> Graph {
    assert!(q >= 2 && (2..q).all(|d| !q.is_multiple_of(d)), "prime order required");
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            points.push([1, x, y]);
        }
    }
    for y in 0..q {
        points.push([0, 1, y]);
    }
    points.push([0, 0, 1]);
    let m = points.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let dot: usize = (0..3).map(|k| points[i][k] * points[j][k]).sum();
            if dot.is_multiple_of(q) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(m, edges).expect("polarity edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Distance;

    #[test]
    fn splitmix_reference_stream() {
        let mut rng = SplitMix64::seed_from_u64(0);
        assert_eq!(rng.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(rng.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn petersen_properties() {
        let g = petersen();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert_eq!(g.diameter(), Distance::Finite(2));
        assert!(Constraint::C3Free.holds(&g) && Constraint::C4Free.holds(&g));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn grotzsch_properties() {
        let g = grotzsch();
        assert_eq!((g.n(), g.edge_count()), (11, 20));
        assert_eq!(g.diameter(), Distance::Finite(2));
        assert!(Constraint::C3Free.holds(&g));
        assert!(!Constraint::C4Free.holds(&g));
    }

    #[test]
    fn hoffman_singleton_is_a_moore_graph() {
        let g = hoffman_singleton();
        assert_eq!((g.n(), g.edge_count()), (50, 175));
        assert!((0..50).all(|v| g.degree(v) == 7));
        assert_eq!(g.diameter(), Distance::Finite(2));
        assert!(Constraint::C3Free.holds(&g) && Constraint::C4Free.holds(&g));
    }

    #[test]
    fn polarity_graph_shape() {
        for q in [2, 3, 5] {
            let g = polarity(q);
            assert_eq!(g.n(), q * q + q + 1);
            assert_eq!(g.diameter(), Distance::Finite(2));
            assert!(Constraint::C4Free.holds(&g));
        }
    }

    #[test]
    fn named_families() {
        assert_eq!(
            generate(&GeneratorSpec::named(Family::C5)).unwrap(),
            cycle(5)
        );
        assert_eq!(
            generate(&GeneratorSpec::named(Family::K4))
                .unwrap()
                .edge_count(),
            6
        );
    }

    #[test]
    fn random_is_seed_deterministic() {
        let spec = GeneratorSpec::random(8, 0.55, 1, &[Constraint::C3Free, Constraint::C7Free]);
        let (a, tries_a) = random_diam2(&spec).unwrap();
        let (b, tries_b) = random_diam2(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(tries_a, tries_b);
        assert!(a.has_diameter_at_most(2));
        assert!(Constraint::C3Free.holds(&a) && Constraint::C7Free.holds(&a));
    }

    #[test]
    fn impossible_constraints_exhaust_budget() {
        let mut spec = GeneratorSpec::random(6, 0.0, 3, &[]);
        spec.budget = 5;
        assert!(matches!(
            random_diam2(&spec),
            Err(GenError::RejectionBudgetExhausted { attempts: 5, .. })
        ));
        spec.p = 1.5;
        assert_eq!(random_diam2(&spec), Err(GenError::InvalidProbability(1.5)));
    }

    #[test]
    fn constraint_parsing() {
        assert_eq!(
            "csfree(8)".parse::<Constraint>().unwrap(),
            Constraint::CsFree(8)
        );
        assert_eq!(
            "csfree=6".parse::<Constraint>().unwrap(),
            Constraint::CsFree(6)
        );
        assert_eq!("c7free".parse::<Constraint>().unwrap(), Constraint::C7Free);
        assert!("csfree(2)".parse::<Constraint>().is_err());
        assert!("c9".parse::<Constraint>().is_err());
    }
}
