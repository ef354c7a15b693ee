//! Pruned backtracking search for pattern copies.
//!
//! Sequences are extended edge by edge; candidates come from the incidence
//! lists of the previous edge's usable link vertices, non-consecutive
//! disjointness is enforced with a running forbidden-vertex mask, and an
//! optional color constraint turns the same engine into the rainbow search.
//!
//! Copies are canonicalized so each unordered copy is visited once: paths
//! require `rank(e_1) < rank(e_k)`, cycles put the minimum-rank edge first
//! with its smaller neighbor second. The single-worker search returns the
//! canonically smallest witness; parallel runs split deterministically on the
//! first-edge choice and reduce to the same witness when all shards finish.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypergraph::{Hypergraph, RSet};
use crate::pattern::{CopyWitness, PatternSpec, Shape, Tightness};
use crate::Result;

/// No budget: searches run to completion.
pub const UNBOUNDED: u64 = u64::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    /// A copy was found; the report carries a witness.
    Found,
    /// The search space was exhausted without finding a copy.
    None,
    /// The node budget ran out; existence is undecided.
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub status: SearchStatus,
    pub witness: Option<CopyWitness>,
    /// Partial sequences constructed. Deterministic for exhaustive runs;
    /// for found runs under multiple workers it depends on the worker count.
    pub nodes_expanded: u64,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

/// Searches `h` for a copy of `spec` within `budget` node expansions.
pub fn find_copy(h: &Hypergraph, spec: &PatternSpec, budget: u64) -> Result<SearchReport> {
    find_copy_parallel(h, spec, budget, 1)
}

/// Deterministic parallel variant: first-edge choices are sharded round-robin
/// over `workers`, each worker gets the full `budget`.
pub fn find_copy_parallel(
    h: &Hypergraph,
    spec: &PatternSpec,
    budget: u64,
    workers: usize,
) -> Result<SearchReport> {
    let prepared = Prepared::from_hypergraph(h, None)?;
    Ok(run_sharded(&prepared, spec, budget, workers))
}

/// Shared, read-only search input: one entry per edge in rank order.
pub(crate) struct Prepared {
    pub(crate) ranks: Vec<u64>,
    pub(crate) vertices: Vec<RSet>,
    pub(crate) masks: Vec<u128>,
    /// vertex -> indexes into the edge arrays, ascending.
    pub(crate) incidence: Vec<Vec<u32>>,
    /// Color per edge index, when the search is rainbow-constrained.
    pub(crate) colors: Option<Vec<u32>>,
}

impl Prepared {
    pub(crate) fn from_hypergraph(h: &Hypergraph, colors: Option<Vec<u32>>) -> Result<Self> {
        if h.r() < 2 {
            return Err(Error::Unsupported(
                "pattern search needs uniformity at least 2".into(),
            ));
        }
        let mut ranks = Vec::with_capacity(h.edge_count() as usize);
        let mut vertices = Vec::with_capacity(ranks.capacity());
        let mut masks = Vec::with_capacity(ranks.capacity());
        let mut incidence = vec![Vec::new(); h.n() as usize];
        for (idx, (rank, edge)) in h.edge_ranks().zip(h.edges()).enumerate() {
            for &v in edge.vertices() {
                incidence[v as usize].push(idx as u32);
            }
            masks.push(edge.mask());
            vertices.push(edge);
            ranks.push(rank);
        }
        if let Some(colors) = &colors {
            debug_assert_eq!(colors.len(), ranks.len());
        }
        Ok(Prepared {
            ranks,
            vertices,
            masks,
            incidence,
            colors,
        })
    }
}

pub(crate) fn run_sharded(
    prepared: &Prepared,
    spec: &PatternSpec,
    budget: u64,
    workers: usize,
) -> SearchReport {
    let workers = workers.max(1);
    if workers == 1 {
        return Engine::new(prepared, spec, budget, 0, 1).run();
    }
    let reports: Vec<SearchReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || Engine::new(prepared, spec, budget, w, workers).run()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    merge_reports(reports)
}

fn merge_reports(reports: Vec<SearchReport>) -> SearchReport {
    let nodes_expanded = reports.iter().map(|r| r.nodes_expanded).sum();
    let mut best: Option<CopyWitness> = None;
    let mut indeterminate = false;
    for report in reports {
        match report.status {
            SearchStatus::Found => {
                let w = report.witness.expect("found implies witness");
                best = Some(match best.take() {
                    None => w,
                    Some(b) => {
                        if witness_key(&w) < witness_key(&b) {
                            w
                        } else {
                            b
                        }
                    }
                });
            }
            SearchStatus::Indeterminate => indeterminate = true,
            SearchStatus::None => {}
        }
    }
    match best {
        Some(w) => SearchReport {
            status: SearchStatus::Found,
            witness: Some(w),
            nodes_expanded,
        },
        None if indeterminate => SearchReport {
            status: SearchStatus::Indeterminate,
            witness: None,
            nodes_expanded,
        },
        None => SearchReport {
            status: SearchStatus::None,
            witness: None,
            nodes_expanded,
        },
    }
}

fn witness_key(w: &CopyWitness) -> Vec<u64> {
    w.edges()
        .iter()
        .map(|e| crate::hypergraph::rank_unchecked(e.vertices()))
        .collect()
}

struct Engine<'a> {
    input: &'a Prepared,
    spec: PatternSpec,
    budget: u64,
    worker: usize,
    stride: usize,
    nodes: u64,
    aborted: bool,
    chosen: Vec<u32>,
    /// prefix_union[i] = union of masks of chosen[0..=i]
    prefix_union: Vec<u128>,
    used_colors: Vec<u32>,
    /// dedupe stamps for candidate generation, one slot per edge
    stamp: Vec<u32>,
    generation: u32,
    /// candidate scratch, one buffer per depth
    buffers: Vec<Vec<u32>>,
}

impl<'a> Engine<'a> {
    fn new(input: &'a Prepared, spec: &PatternSpec, budget: u64, worker: usize, stride: usize) -> Self {
        Engine {
            input,
            spec: *spec,
            budget,
            worker,
            stride,
            nodes: 0,
            aborted: false,
            chosen: Vec::with_capacity(spec.k),
            prefix_union: Vec::with_capacity(spec.k),
            used_colors: Vec::with_capacity(spec.k),
            stamp: vec![0; input.ranks.len()],
            generation: 0,
            buffers: vec![Vec::new(); spec.k],
        }
    }

    fn run(&mut self) -> SearchReport {
        let m = self.input.ranks.len();
        let mut witness = None;
        'outer: for first in (self.worker..m).step_by(self.stride) {
            if !self.push(first as u32) {
                if self.aborted {
                    break 'outer;
                }
                continue;
            }
            if self.extend() {
                witness = Some(self.current_witness());
                break 'outer;
            }
            self.pop();
            if self.aborted {
                break 'outer;
            }
        }
        let status = match (&witness, self.aborted) {
            (Some(_), _) => SearchStatus::Found,
            (None, true) => SearchStatus::Indeterminate,
            (None, false) => SearchStatus::None,
        };
        SearchReport {
            status,
            witness,
            nodes_expanded: self.nodes,
        }
    }

    fn extend(&mut self) -> bool {
        let depth = self.chosen.len();
        if depth == self.spec.k {
            return true;
        }
        let mut candidates = std::mem::take(&mut self.buffers[depth]);
        self.collect_candidates(&mut candidates);
        for i in 0..candidates.len() {
            let c = candidates[i];
            if !self.feasible(c) {
                continue;
            }
            if !self.push(c) {
                // budget hit; the search ends, no need to restore scratch
                return false;
            }
            if self.extend() {
                return true;
            }
            self.pop();
            if self.aborted {
                return false;
            }
        }
        self.buffers[depth] = candidates;
        false
    }

    /// Forbidden vertices for the next edge: all vertices of edges the new
    /// edge must be disjoint from.
    fn forbidden(&self) -> u128 {
        let j = self.chosen.len(); // position about to be filled, 0-based
        let k = self.spec.k;
        if self.spec.shape == Shape::Cycle && j == k - 1 {
            // closing edge: disjoint from e_2..e_{k-2}, overlaps e_1 and e_{k-1}
            self.chosen[1..k.saturating_sub(2)]
                .iter()
                .map(|&c| self.input.masks[c as usize])
                .fold(0u128, |acc, m| acc | m)
        } else if j >= 2 {
            self.prefix_union[j - 2]
        } else {
            0
        }
    }

    fn collect_candidates(&mut self, out: &mut Vec<u32>) {
        out.clear();
        let prev = *self.chosen.last().expect("candidates need a previous edge");
        let link_mask = self.input.masks[prev as usize] & !self.forbidden();
        if self.generation == u32::MAX {
            self.stamp.fill(0);
            self.generation = 0;
        }
        self.generation += 1;
        let gen = self.generation;
        let mut bits = link_mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for &ci in &self.input.incidence[v] {
                if self.stamp[ci as usize] != gen {
                    self.stamp[ci as usize] = gen;
                    out.push(ci);
                }
            }
        }
        out.sort_unstable();
    }

    fn feasible(&self, c: u32) -> bool {
        let j = self.chosen.len();
        let k = self.spec.k;
        let mask = self.input.masks[c as usize];
        let prev = *self.chosen.last().unwrap();
        if c == prev {
            return false;
        }
        let closing = self.spec.shape == Shape::Cycle && j == k - 1;

        // canonical form: cycles keep their minimum-rank edge first, paths
        // compare the two ends at the last step
        match self.spec.shape {
            Shape::Cycle => {
                if c <= self.chosen[0] {
                    return false;
                }
                if closing && c <= self.chosen[1] {
                    return false;
                }
            }
            Shape::Path => {
                if j == k - 1 && c <= self.chosen[0] {
                    return false;
                }
            }
        }

        if mask & self.forbidden() != 0 {
            return false;
        }
        let overlap_prev = (mask & self.input.masks[prev as usize]).count_ones();
        let tight_ok = |overlap: u32| match self.spec.tightness {
            Tightness::Loose => overlap >= 1,
            Tightness::Linear => overlap == 1,
        };
        if !tight_ok(overlap_prev) {
            return false;
        }
        if closing {
            let first = self.chosen[0];
            if c == first {
                return false;
            }
            let overlap_first = (mask & self.input.masks[first as usize]).count_ones();
            if !tight_ok(overlap_first) {
                return false;
            }
        }
        if let Some(colors) = &self.input.colors {
            if self.used_colors.contains(&colors[c as usize]) {
                return false;
            }
        }
        true
    }

    fn push(&mut self, c: u32) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return false;
        }
        let mask = self.input.masks[c as usize];
        let union = self.prefix_union.last().copied().unwrap_or(0) | mask;
        self.chosen.push(c);
        self.prefix_union.push(union);
        if let Some(colors) = &self.input.colors {
            self.used_colors.push(colors[c as usize]);
        }
        true
    }

    fn pop(&mut self) {
        self.chosen.pop();
        self.prefix_union.pop();
        if self.input.colors.is_some() {
            self.used_colors.pop();
        }
    }

    fn current_witness(&self) -> CopyWitness {
        let edges: Vec<RSet> = self
            .chosen
            .iter()
            .map(|&c| self.input.vertices[c as usize].clone())
            .collect();
        CopyWitness::new(self.spec, edges).expect("search result must classify")
    }
}

/// Sweeps `n` upward until `K_n^r` contains a copy of `spec`; used to pin
/// minimum host sizes in fixtures.
pub fn min_complete_host(r: u32, spec: &PatternSpec, n_limit: u32) -> Result<Option<u32>> {
    for n in r..=n_limit {
        let host = Hypergraph::complete(n, r)?;
        if find_copy(&host, spec, UNBOUNDED)?.found() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::classify_sequence;

    #[test]
    fn loose_p3_needs_six_vertices() {
        let spec = PatternSpec::loose_path(3).unwrap();
        let k6 = Hypergraph::complete(6, 3).unwrap();
        let report = find_copy(&k6, &spec, UNBOUNDED).unwrap();
        assert_eq!(report.status, SearchStatus::Found);
        let w = report.witness.unwrap();
        assert_eq!(classify_sequence(w.edges(), &spec), Ok(()));

        let k5 = Hypergraph::complete(5, 3).unwrap();
        let report = find_copy(&k5, &spec, UNBOUNDED).unwrap();
        assert_eq!(report.status, SearchStatus::None);
    }

    #[test]
    fn min_host_for_loose_c4_is_six() {
        // frozen from an exhaustive sweep: a loose 4-cycle packs into 6
        // vertices (consecutive overlaps alternating 1 and 2) and no fewer
        let spec = PatternSpec::loose_cycle(4).unwrap();
        assert_eq!(min_complete_host(3, &spec, 10).unwrap(), Some(6));
    }

    #[test]
    fn min_host_for_linear_c4_is_eight() {
        // linear overlaps are single vertices, so 4 edges of arity 3 span 8
        let spec = PatternSpec::linear_cycle(4).unwrap();
        assert_eq!(min_complete_host(3, &spec, 10).unwrap(), Some(8));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = PatternSpec::loose_path(3).unwrap();
        let k5 = Hypergraph::complete(5, 3).unwrap();
        let report = find_copy(&k5, &spec, 4).unwrap();
        assert_eq!(report.status, SearchStatus::Indeterminate);
        assert!(report.witness.is_none());
    }

    #[test]
    fn witnesses_classify_on_fuzzed_hosts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let specs: Vec<PatternSpec> = vec![
            PatternSpec::loose_path(2).unwrap(),
            PatternSpec::loose_path(4).unwrap(),
            PatternSpec::linear_path(3).unwrap(),
            PatternSpec::loose_cycle(3).unwrap(),
            PatternSpec::linear_cycle(4).unwrap(),
        ];
        for _ in 0..30 {
            let n = rng.gen_range(5..=10);
            let m = rng.gen_range(0..=crate::binom::binom(n as u64, 3));
            let host = crate::instances::random_hypergraph(n, 3, m, &mut rng).unwrap();
            for spec in &specs {
                let report = find_copy(&host, spec, UNBOUNDED).unwrap();
                if let Some(w) = report.witness {
                    assert_eq!(classify_sequence(w.edges(), spec), Ok(()));
                    assert!(w.edges().iter().all(|e| host.contains(e)));
                }
            }
        }
    }

    #[test]
    fn completeness_matches_naive_up_to_n8() {
        use rand::{Rng, SeedableRng};
        let mut specs = Vec::new();
        for k in 2..=4 {
            specs.push(PatternSpec::loose_path(k).unwrap());
            specs.push(PatternSpec::linear_path(k).unwrap());
        }
        for k in 3..=4 {
            specs.push(PatternSpec::loose_cycle(k).unwrap());
            specs.push(PatternSpec::linear_cycle(k).unwrap());
        }
        let mut hosts: Vec<Hypergraph> = (4..=8)
            .map(|n| Hypergraph::complete(n, 3).unwrap())
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        for n in 6..=8u32 {
            let m = rng.gen_range(5..=25u64.min(crate::binom::binom(n as u64, 3)));
            hosts.push(crate::instances::random_hypergraph(n, 3, m, &mut rng).unwrap());
        }
        for host in &hosts {
            for spec in &specs {
                let pruned = find_copy(host, spec, UNBOUNDED).unwrap().found();
                let naive = crate::naive::naive_find_copy(host, spec).unwrap().is_some();
                assert_eq!(pruned, naive, "n={} spec={spec}", host.n());
            }
        }
    }

    #[test]
    fn loose_path_vertex_span_bounds() {
        use rand::{Rng, SeedableRng};
        // minimum spans pinned by the exhaustive host sweep; the maximum is
        // k·r − (k−1) when all overlaps are single vertices
        let pinned_min = [(2usize, 4u32), (3, 6), (4, 7)];
        for &(k, expected) in &pinned_min {
            let spec = PatternSpec::loose_path(k).unwrap();
            assert_eq!(min_complete_host(3, &spec, 12).unwrap(), Some(expected));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let n = rng.gen_range(7..=10);
            let m = rng.gen_range(10..=crate::binom::binom(n as u64, 3));
            let host = crate::instances::random_hypergraph(n, 3, m, &mut rng).unwrap();
            for &(k, min_span) in &pinned_min {
                let spec = PatternSpec::loose_path(k).unwrap();
                if let Some(w) = find_copy(&host, &spec, UNBOUNDED).unwrap().witness {
                    let span = w.vertex_set().len();
                    assert!(span <= k * 3 - (k - 1));
                    assert!(span >= min_span as usize);
                }
            }
        }
    }

    #[test]
    fn linear_witnesses_accept_as_loose() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(24);
        for _ in 0..20 {
            let n = rng.gen_range(8..=10);
            let m = rng.gen_range(20..=crate::binom::binom(n as u64, 3));
            let host = crate::instances::random_hypergraph(n, 3, m, &mut rng).unwrap();
            for (linear, loose) in [
                (PatternSpec::linear_path(3).unwrap(), PatternSpec::loose_path(3).unwrap()),
                (PatternSpec::linear_cycle(4).unwrap(), PatternSpec::loose_cycle(4).unwrap()),
            ] {
                if let Some(w) = find_copy(&host, &linear, UNBOUNDED).unwrap().witness {
                    assert_eq!(classify_sequence(w.edges(), &loose), Ok(()));
                }
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = PatternSpec::loose_cycle(4).unwrap();
        let host = Hypergraph::complete(7, 3).unwrap();
        let seq = find_copy(&host, &spec, UNBOUNDED).unwrap();
        let par = find_copy_parallel(&host, &spec, UNBOUNDED, 4).unwrap();
        assert_eq!(seq.status, par.status);
        assert_eq!(
            seq.witness.as_ref().map(|w| w.edges().to_vec()),
            par.witness.as_ref().map(|w| w.edges().to_vec())
        );

        let spec = PatternSpec::loose_path(4).unwrap();
        let k5 = Hypergraph::complete(5, 3).unwrap();
        let seq = find_copy(&k5, &spec, UNBOUNDED).unwrap();
        let par = find_copy_parallel(&k5, &spec, UNBOUNDED, 3).unwrap();
        assert_eq!(seq.status, SearchStatus::None);
        assert_eq!(par.status, SearchStatus::None);
        assert_eq!(seq.nodes_expanded, par.nodes_expanded);
    }
}
