//! Class properties checked by the `check` command. Certificates are
//! printed with 1-indexed vertices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Diam2,
    /// No induced cycle of this length.
    CycleFree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown property `{0}` (expected diam2, c3, c4, c5, c7 or cs=<k>)")]
pub struct UnknownProperty(pub String);

impl FromStr for Property {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = match s {
            "diam2" => return Ok(Property::Diam2),
            "c3" => 3,
            "c4" => 4,
            "c5" => 5,
            "c7" => 7,
            _ => s
                .strip_prefix("cs=")
                .and_then(|k| k.parse().ok())
                .filter(|&k| k >= 3)
                .ok_or_else(|| UnknownProperty(s.to_string()))?,
        };
        Ok(Property::CycleFree(k))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Diam2 => f.write_str("diam2"),
            Property::CycleFree(k @ (3 | 4 | 5 | 7)) => write!(f, "c{k}"),
            Property::CycleFree(k) => write!(f, "cs={k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    Holds,
    Fails(String),
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Holds => f.write_str("holds"),
            Report::Fails(cert) => write!(f, "fails: {cert}"),
        }
    }
}

pub fn check_property(g: &Graph, p: Property) -> Report {
    match p {
        Property::Diam2 => match g.far_pair(2) {
            None => Report::Holds,
            Some(fp) => Report::Fails(format!("d({},{})={}", fp.u + 1, fp.v + 1, fp.distance)),
        },
        Property::CycleFree(k) => match g.find_induced_cycle(k) {
            None => Report::Holds,
            Some(c) => Report::Fails(format!("induced C{k} {}", one_indexed(&c.vertices))),
        },
    }
}

pub fn one_indexed(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("({})", items.join(","))
}
