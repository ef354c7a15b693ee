//! Unpruned reference enumerators used to cross-validate the search engine.
//!
//! These deliberately share nothing with [`crate::search`]: every ordered
//! tuple of distinct edges is generated and handed to the classifier, and
//! rainbowness is checked by sorting the color multiset. Desk scale only.

use crate::coloring::EdgeColoring;
use crate::hypergraph::{Hypergraph, RSet};
use crate::pattern::{classify_sequence, CopyWitness, PatternSpec};
use crate::Result;

/// First copy of `spec` in ordered-tuple enumeration order, if any.
pub fn naive_find_copy(h: &Hypergraph, spec: &PatternSpec) -> Result<Option<CopyWitness>> {
    let edges: Vec<RSet> = h.edges().collect();
    let mut picked = Vec::with_capacity(spec.k);
    let found = tuples(&edges, spec.k, &mut picked, &mut |tuple| {
        classify_sequence(tuple, spec).is_ok()
    });
    Ok(found.map(|t| CopyWitness::new(*spec, t).expect("classified tuple")))
}

/// First rainbow copy of `spec` in the colored complete r-graph, if any.
pub fn naive_find_rainbow_copy(
    coloring: &EdgeColoring,
    spec: &PatternSpec,
) -> Result<Option<CopyWitness>> {
    let host = Hypergraph::complete(coloring.n(), coloring.r())?;
    let edges: Vec<RSet> = host.edges().collect();
    let mut picked = Vec::with_capacity(spec.k);
    let found = tuples(&edges, spec.k, &mut picked, &mut |tuple| {
        if classify_sequence(tuple, spec).is_err() {
            return false;
        }
        let mut colors: Vec<u32> = tuple
            .iter()
            .map(|e| coloring.color_of_edge(e).expect("edge of the host"))
            .collect();
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    });
    Ok(found.map(|t| CopyWitness::new(*spec, t).expect("classified tuple")))
}

/// Depth-first odometer over ordered k-tuples of distinct edges; `accept` is
/// evaluated only on full tuples so no pruning can hide a disagreement.
fn tuples(
    edges: &[RSet],
    k: usize,
    picked: &mut Vec<usize>,
    accept: &mut impl FnMut(&[RSet]) -> bool,
) -> Option<Vec<RSet>> {
    if picked.len() == k {
        let tuple: Vec<RSet> = picked.iter().map(|&i| edges[i].clone()).collect();
        if accept(&tuple) {
            return Some(tuple);
        }
        return None;
    }
    for i in 0..edges.len() {
        if picked.contains(&i) {
            continue;
        }
        picked.push(i);
        if let Some(found) = tuples(edges, k, picked, accept) {
            return Some(found);
        }
        picked.pop();
    }
    None
}
