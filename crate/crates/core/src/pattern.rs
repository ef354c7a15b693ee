//! Loose and linear paths and cycles: target specifications, sequence
//! classification, and end-point/end-pair extraction.
//!
//! A loose path/cycle of length k is k distinct edges where consecutive edges
//! intersect and non-consecutive edges are disjoint; linear variants require
//! consecutive intersections of size exactly one. For paths, non-consecutive
//! means |i−j| ≥ 2 with no wraparound; for cycles indices wrap, so every pair
//! of edges in a 3-cycle counts as consecutive.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypergraph::{RSet, Vertex};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tightness {
    Loose,
    Linear,
}

/// A target family: loose/linear paths or cycles with `k` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSpec {
    pub shape: Shape,
    pub tightness: Tightness,
    #[serde(rename = "length")]
    pub k: usize,
}

impl PatternSpec {
    pub fn new(shape: Shape, tightness: Tightness, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Unsupported(format!("pattern length {k} < 2")));
        }
        if shape == Shape::Cycle && k < 3 {
            return Err(Error::Unsupported(
                "cycles of length 2 are degenerate and rejected".into(),
            ));
        }
        Ok(PatternSpec {
            shape,
            tightness,
            k,
        })
    }

    pub fn loose_path(k: usize) -> Result<Self> {
        Self::new(Shape::Path, Tightness::Loose, k)
    }

    pub fn loose_cycle(k: usize) -> Result<Self> {
        Self::new(Shape::Cycle, Tightness::Loose, k)
    }

    pub fn linear_path(k: usize) -> Result<Self> {
        Self::new(Shape::Path, Tightness::Linear, k)
    }

    pub fn linear_cycle(k: usize) -> Result<Self> {
        Self::new(Shape::Cycle, Tightness::Linear, k)
    }

    /// Parses the CLI form `loose-path:4`, `linear-cycle:5`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::Unsupported(format!("cannot parse pattern spec {text:?}"));
        let (name, k) = text.split_once(':').ok_or_else(err)?;
        let k: usize = k.parse().map_err(|_| err())?;
        match name {
            "loose-path" => Self::loose_path(k),
            "loose-cycle" => Self::loose_cycle(k),
            "linear-path" => Self::linear_path(k),
            "linear-cycle" => Self::linear_cycle(k),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tight = match self.tightness {
            Tightness::Loose => "loose",
            Tightness::Linear => "linear",
        };
        let shape = match self.shape {
            Shape::Path => "path",
            Shape::Cycle => "cycle",
        };
        write!(f, "{tight}-{shape}:{}", self.k)
    }
}

/// First constraint violated by a candidate edge sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    LengthMismatch { expected: usize, got: usize },
    MixedArity { position: usize },
    DuplicateEdge { first: usize, second: usize },
    /// Consecutive edges must intersect (positions are 0-based).
    ConsecutiveDisjoint { left: usize, right: usize },
    /// Linear patterns need consecutive intersections of size exactly 1.
    ConsecutiveOverlap { left: usize, right: usize, size: usize },
    /// Non-consecutive edges must be disjoint.
    NonConsecutiveIntersect { left: usize, right: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} edges, got {got}")
            }
            Violation::MixedArity { position } => {
                write!(f, "edge at position {position} has a different arity")
            }
            Violation::DuplicateEdge { first, second } => {
                write!(f, "edges at positions {first} and {second} are equal")
            }
            Violation::ConsecutiveDisjoint { left, right } => {
                write!(f, "consecutive edges {left} and {right} are disjoint")
            }
            Violation::ConsecutiveOverlap { left, right, size } => {
                write!(
                    f,
                    "consecutive edges {left} and {right} share {size} vertices, linear needs exactly 1"
                )
            }
            Violation::NonConsecutiveIntersect { left, right } => {
                write!(f, "non-consecutive edges {left} and {right} intersect")
            }
        }
    }
}

/// Accepts iff `edges` realizes `spec`; rejects with the first violated
/// constraint otherwise (checked in order: length, arity, then pairs in
/// lexicographic position order).
pub fn classify_sequence(edges: &[RSet], spec: &PatternSpec) -> std::result::Result<(), Violation> {
    if edges.len() != spec.k {
        return Err(Violation::LengthMismatch {
            expected: spec.k,
            got: edges.len(),
        });
    }
    let r = edges[0].arity();
    for (i, e) in edges.iter().enumerate() {
        if e.arity() != r {
            return Err(Violation::MixedArity { position: i });
        }
    }
    let k = spec.k;
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = match spec.shape {
                Shape::Path => j == i + 1,
                Shape::Cycle => j == i + 1 || (i == 0 && j == k - 1),
            };
            let overlap = edges[i].intersection_size(&edges[j]);
            if overlap == r as usize {
                return Err(Violation::DuplicateEdge { first: i, second: j });
            }
            if consecutive {
                match spec.tightness {
                    Tightness::Loose if overlap == 0 => {
                        return Err(Violation::ConsecutiveDisjoint { left: i, right: j })
                    }
                    Tightness::Linear if overlap != 1 => {
                        if overlap == 0 {
                            return Err(Violation::ConsecutiveDisjoint { left: i, right: j });
                        }
                        return Err(Violation::ConsecutiveOverlap {
                            left: i,
                            right: j,
                            size: overlap,
                        });
                    }
                    _ => {}
                }
            } else if overlap > 0 {
                return Err(Violation::NonConsecutiveIntersect { left: i, right: j });
            }
        }
    }
    Ok(())
}

/// An ordered edge sequence realizing a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyWitness {
    spec: PatternSpec,
    edges: Vec<RSet>,
}

impl CopyWitness {
    pub fn new(spec: PatternSpec, edges: Vec<RSet>) -> Result<Self> {
        if let Err(v) = classify_sequence(&edges, &spec) {
            return Err(Error::InvalidEdge(format!(
                "sequence does not realize {spec}: {v}"
            )));
        }
        Ok(CopyWitness { spec, edges })
    }

    pub fn spec(&self) -> &PatternSpec {
        &self.spec
    }

    pub fn edges(&self) -> &[RSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// All vertices spanned by the witness, sorted.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self
            .edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Wire format: `{"spec": {...}, "edges": [[...]]}` with 1-based vertices.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<Vec<u32>> = self
            .edges
            .iter()
            .map(|e| e.vertices().iter().map(|v| v + 1).collect())
            .collect();
        serde_json::json!({ "spec": self.spec, "edges": edges })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.into(),
        };
        let spec: PatternSpec = serde_json::from_value(
            value
                .get("spec")
                .ok_or_else(|| bad("missing 'spec'"))?
                .clone(),
        )
        .map_err(|e| bad(&format!("bad spec: {e}")))?;
        let edges = value
            .get("edges")
            .and_then(|e| e.as_array())
            .ok_or_else(|| bad("missing 'edges'"))?;
        let mut out = Vec::with_capacity(edges.len());
        for e in edges {
            let vs = e
                .as_array()
                .ok_or_else(|| bad("edge is not an array"))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .filter(|&v| v >= 1)
                        .map(|v| (v - 1) as Vertex)
                        .ok_or_else(|| bad("vertices must be positive integers"))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(RSet::new(vs)?);
        }
        CopyWitness::new(spec, out)
    }
}

/// End points and end pairs of a loose path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndData {
    /// Degree-1 vertices of the two end edges, sorted.
    pub end_points: Vec<Vertex>,
    /// Cross pairs between the two end edges' end points, as (min, max).
    pub end_pairs: Vec<(Vertex, Vertex)>,
}

/// Extracts end points and end pairs from a path witness; cycles have no end
/// edges and are a domain error.
pub fn end_data(witness: &CopyWitness) -> Result<EndData> {
    if witness.spec().shape != Shape::Path {
        return Err(Error::Precondition(
            "end data is defined for paths only; cycles have no end edges".into(),
        ));
    }
    let edges = witness.edges();
    let k = edges.len();
    let degree_one = |edge: &RSet| -> Vec<Vertex> {
        edge.vertices()
            .iter()
            .copied()
            .filter(|&v| edges.iter().filter(|e| e.contains(v)).count() == 1)
            .collect()
    };
    let first = degree_one(&edges[0]);
    let last = degree_one(&edges[k - 1]);
    let mut end_points: Vec<Vertex> = first.iter().chain(last.iter()).copied().collect();
    end_points.sort_unstable();
    end_points.dedup();
    let mut end_pairs = Vec::with_capacity(first.len() * last.len());
    for &u in &first {
        for &v in &last {
            end_pairs.push((u.min(v), u.max(v)));
        }
    }
    end_pairs.sort_unstable();
    Ok(EndData {
        end_points,
        end_pairs,
    })
}
