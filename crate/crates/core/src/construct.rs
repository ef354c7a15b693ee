//! Generators for the extremal lower-bound colorings and Turán-type extremal
//! hypergraphs, with search-backed certificates: freeness is always verified
//! by exhaustive search, never assumed from the construction.

use serde::Serialize;

use crate::binom::binom;
use crate::coloring::{find_rainbow_copy_parallel, EdgeColoring};
use crate::error::Error;
use crate::hypergraph::{Hypergraph, RSet, Vertex};
use crate::pattern::{CopyWitness, PatternSpec};
use crate::search::{find_copy_parallel, SearchStatus};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The lower-bound coloring: edges meeting a core `L` of t−1 vertices are
/// singleton color classes; the remaining edges form one extra class (even k)
/// or two (odd k).
pub struct LbColoring {
    pub coloring: EdgeColoring,
    pub core: Vec<Vertex>,
    pub parity: Parity,
    pub colors_used: u64,
}

/// Builds the lower-bound coloring for loose paths/cycles of length `k ≥ 4`
/// on `n ≥ r + t` vertices, with `t` in the anti-Ramsey convention and
/// `L = {0, …, t−2}`.
///
/// Odd k splits the remaining edges deterministically: the first extra class
/// holds the remaining edges containing vertex `t−1` (the smallest non-core
/// vertex), the second everything else.
pub fn lb_coloring(n: u32, r: u32, k: u64) -> Result<LbColoring> {
    if r < 2 {
        return Err(Error::Unsupported(format!("need r >= 2, got r={r}")));
    }
    if k < 4 {
        return Err(Error::Unsupported(format!(
            "the construction needs k >= 4, got k={k}"
        )));
    }
    let t = k / 2;
    if (n as u64) < r as u64 + t {
        return Err(Error::OutOfRange(format!(
            "need n >= r + t = {}, got n={n}",
            r as u64 + t
        )));
    }
    let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
    let core: Vec<Vertex> = (0..(t - 1) as u32).collect();
    let core_mask: u128 = core.iter().fold(0, |m, &v| m | 1u128 << v);
    let split_vertex = (t - 1) as u32;

    let host = Hypergraph::complete(n, r)?;
    let total = host.edge_count();
    let mut color_of = vec![u32::MAX; total as usize];
    let mut next = 0u32;
    for (rank, edge) in host.edge_ranks().zip(host.edges()) {
        if edge.mask() & core_mask != 0 {
            color_of[rank as usize] = next;
            next += 1;
        }
    }
    let singleton_colors = next as u64;
    let (class_a, class_b) = (next, next + 1);
    for (rank, edge) in host.edge_ranks().zip(host.edges()) {
        if color_of[rank as usize] != u32::MAX {
            continue;
        }
        color_of[rank as usize] = match parity {
            Parity::Even => class_a,
            Parity::Odd => {
                if edge.contains(split_vertex) {
                    class_a
                } else {
                    class_b
                }
            }
        };
    }
    let coloring = EdgeColoring::new(n, r, color_of)?;
    let colors_used = coloring.color_count() as u64;

    let expected_singletons = binom(n as u64, r as u64) - binom(n as u64 - t + 1, r as u64);
    debug_assert_eq!(singleton_colors, expected_singletons);
    debug_assert_eq!(
        colors_used,
        expected_singletons
            + match parity {
                Parity::Even => 1,
                Parity::Odd => 2,
            }
    );
    Ok(LbColoring {
        coloring,
        core,
        parity,
        colors_used,
    })
}

/// The loose-path Turán extremal hypergraph: all edges meeting the t-set
/// `{0, …, t−1}` with `t = ⌊(k−1)/2⌋`, plus — for even k — one canonical
/// extra edge, the colex-smallest r-set disjoint from the t-set.
pub fn turan_extremal_loose(n: u32, r: u32, k: u64, shape: crate::pattern::Shape) -> Result<Hypergraph> {
    if shape != crate::pattern::Shape::Path {
        return Err(Error::Unsupported(
            "only the path extremal family is generated; the loose 4-cycle family depends on an undefined constant".into(),
        ));
    }
    if r < 3 || k < 4 {
        return Err(Error::Unsupported(format!(
            "need r >= 3 and k >= 4, got r={r} k={k}"
        )));
    }
    let t = ((k - 1) / 2) as u32;
    if n < 2 * r + t {
        return Err(Error::OutOfRange(format!(
            "need n >= 2r + t = {}, got n={n}",
            2 * r + t
        )));
    }
    let core_mask: u128 = (0..t).fold(0, |m, v| m | 1u128 << v);
    let mut edges: Vec<RSet> = Hypergraph::complete(n, r)?
        .edges()
        .filter(|e| e.mask() & core_mask != 0)
        .collect();
    if k % 2 == 0 {
        edges.push(RSet::new((t..t + r).collect())?);
    }
    Hypergraph::new(n, r, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every rainbow search ran to completion and found nothing.
    CertifiedRainbowFree,
    /// Every plain copy search ran to completion and found nothing.
    CertifiedPatternFree,
    /// Some target pattern was found; the check carries the witness.
    Refuted,
    /// At least one search hit its budget; nothing is certified.
    Indeterminate,
}

/// Outcome of one spec's search during certification.
#[derive(Clone, Debug, Serialize)]
pub struct SpecCheck {
    pub spec: String,
    pub status: SearchStatus,
    pub nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

/// A machine-checkable record of an exhaustive search over the listed specs.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub target: String,
    pub checks: Vec<SpecCheck>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::CertifiedRainbowFree | Verdict::CertifiedPatternFree
        )
    }

    pub fn first_witness(&self) -> Option<CopyWitness> {
        self.checks
            .iter()
            .find_map(|c| c.witness.as_ref())
            .and_then(|w| CopyWitness::from_json(w).ok())
    }
}

fn combine(target: String, checks: Vec<SpecCheck>, certified: Verdict) -> Certificate {
    let verdict = if checks.iter().any(|c| c.status == SearchStatus::Found) {
        Verdict::Refuted
    } else if checks.iter().all(|c| c.status == SearchStatus::None) {
        certified
    } else {
        Verdict::Indeterminate
    };
    Certificate {
        target,
        checks,
        verdict,
    }
}

/// Certifies a coloring rainbow-free for every spec, by exhaustive rainbow
/// search; budget exhaustion yields `Indeterminate`, never a certificate.
pub fn verify_coloring(
    coloring: &EdgeColoring,
    specs: &[PatternSpec],
    budget: u64,
    workers: usize,
) -> Result<Certificate> {
    let mut checks = Vec::with_capacity(specs.len());
    for spec in specs {
        let report = find_rainbow_copy_parallel(coloring, spec, budget, workers)?;
        checks.push(SpecCheck {
            spec: spec.to_string(),
            status: report.status,
            nodes_expanded: report.nodes_expanded,
            witness: report.witness.map(|w| w.to_json()),
        });
    }
    let target = format!(
        "coloring n={} r={} c={}",
        coloring.n(),
        coloring.r(),
        coloring.color_count()
    );
    Ok(combine(target, checks, Verdict::CertifiedRainbowFree))
}

/// Certifies a hypergraph free of every spec, by exhaustive copy search.
pub fn verify_hypergraph(
    h: &Hypergraph,
    specs: &[PatternSpec],
    budget: u64,
    workers: usize,
) -> Result<Certificate> {
    let mut checks = Vec::with_capacity(specs.len());
    for spec in specs {
        let report = find_copy_parallel(h, spec, budget, workers)?;
        checks.push(SpecCheck {
            spec: spec.to_string(),
            status: report.status,
            nodes_expanded: report.nodes_expanded,
            witness: report.witness.map(|w| w.to_json()),
        });
    }
    let target = format!("hypergraph n={} r={} m={}", h.n(), h.r(), h.edge_count());
    Ok(combine(target, checks, Verdict::CertifiedPatternFree))
}
