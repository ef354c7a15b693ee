//! Structural diagnostics around a core vertex set: τ-small pairs,
//! crossing/missing accounting, the E_i partition with its shadow-degree
//! split, the constructive rainbow extension, and a greedy core detector.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::binom::binom;
use crate::coloring::EdgeColoring;
use crate::error::Error;
use crate::hypergraph::{subsets_of, unrank_rset, Hypergraph, RSet, Vertex};
use crate::pattern::{CopyWitness, PatternSpec, Shape, Tightness};
use crate::Result;

/// `τ·C(n, r−3)`: the pair-degree threshold below which a core/outside pair
/// counts as small. For r = 3 this is just τ.
pub fn small_threshold(n: u32, r: u32, tau: u64) -> u64 {
    tau * binom(n as u64, r as u64 - 3)
}

fn validate_core(h: &Hypergraph, core: &[Vertex]) -> Result<()> {
    if core.is_empty() {
        return Err(Error::Precondition("the core set is empty".into()));
    }
    let mut sorted = core.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != core.len() {
        return Err(Error::Precondition("core vertices repeat".into()));
    }
    if let Some(&v) = core.iter().find(|&&v| v >= h.n()) {
        return Err(Error::Precondition(format!(
            "core vertex {v} out of range for n={}",
            h.n()
        )));
    }
    if h.r() < 3 {
        return Err(Error::Precondition(
            "small-pair accounting needs r >= 3".into(),
        ));
    }
    Ok(())
}

/// All τ-small pairs `(u ∈ core, v ∉ core)`, ascending by `(u, v)`.
pub fn tau_small_pairs(h: &Hypergraph, core: &[Vertex], tau: u64) -> Result<Vec<(Vertex, Vertex)>> {
    validate_core(h, core)?;
    let threshold = small_threshold(h.n(), h.r(), tau);
    let mut core_sorted = core.to_vec();
    core_sorted.sort_unstable();
    let mut out = Vec::new();
    for &u in &core_sorted {
        for v in 0..h.n() {
            if core.contains(&v) {
                continue;
            }
            if h.pair_degree(u, v)? <= threshold {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// The τ-small degree of `v`: how many core vertices form a τ-small pair
/// with it. `v` must lie outside the core.
pub fn small_degree(h: &Hypergraph, core: &[Vertex], tau: u64, v: Vertex) -> Result<u64> {
    validate_core(h, core)?;
    if core.contains(&v) {
        return Err(Error::Precondition(format!(
            "small degree is defined outside the core, got core vertex {v}"
        )));
    }
    if v >= h.n() {
        return Err(Error::Precondition(format!(
            "vertex {v} out of range for n={}",
            h.n()
        )));
    }
    let threshold = small_threshold(h.n(), h.r(), tau);
    let mut count = 0;
    for &u in core {
        if h.pair_degree(u, v)? <= threshold {
            count += 1;
        }
    }
    Ok(count)
}

/// Partition of the vertex set around a core: `small` holds the vertices
/// with τ-small degree ≥ 1, `outside` the rest.
#[derive(Clone, Debug, Serialize)]
pub struct CoreDecomposition {
    pub core: Vec<Vertex>,
    pub tau: u64,
    pub small: Vec<Vertex>,
    pub outside: Vec<Vertex>,
}

pub fn decompose(h: &Hypergraph, core: &[Vertex], tau: u64) -> Result<CoreDecomposition> {
    validate_core(h, core)?;
    let mut small = Vec::new();
    let mut outside = Vec::new();
    for v in 0..h.n() {
        if core.contains(&v) {
            continue;
        }
        if small_degree(h, core, tau, v)? >= 1 {
            small.push(v);
        } else {
            outside.push(v);
        }
    }
    let mut core_sorted = core.to_vec();
    core_sorted.sort_unstable();
    Ok(CoreDecomposition {
        core: core_sorted,
        tau,
        small,
        outside,
    })
}

/// Exact crossing/missing and E_i accounting for a core and an outside set,
/// with the two counting identities verified before returning.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeClassCounts {
    pub cross: u64,
    pub missing: u64,
    /// `e_i[i]` = edges of `H − L` with exactly i vertices in the outside set.
    pub e_i: Vec<u64>,
    pub htilde_edges: u64,
    pub f1: u64,
    pub f2_plus: u64,
}

pub fn edge_class_counts(
    h: &Hypergraph,
    core: &[Vertex],
    outside: &[Vertex],
) -> Result<EdgeClassCounts> {
    validate_core(h, core)?;
    if let Some(&v) = outside.iter().find(|v| core.contains(v)) {
        return Err(Error::Precondition(format!(
            "vertex {v} is in both the core and the outside set"
        )));
    }
    if let Some(&v) = outside.iter().find(|&&v| v >= h.n()) {
        return Err(Error::Precondition(format!(
            "outside vertex {v} out of range for n={}",
            h.n()
        )));
    }
    let core_mask: u128 = core.iter().fold(0, |m, &v| m | 1u128 << v);
    let outside_mask: u128 = outside.iter().fold(0, |m, &v| m | 1u128 << v);

    // crossing and missing r-sets, enumerated independently of the edge scan
    let rest: Vec<Vertex> = (0..h.n()).filter(|v| !core.contains(v)).collect();
    let mut cross = 0u64;
    let mut missing = 0u64;
    for &u in core {
        for sub in subsets_of(&rest, h.r() as usize - 1) {
            let mut vs = sub.vertices().to_vec();
            vs.push(u);
            let edge = RSet::new(vs)?;
            if h.contains(&edge) {
                cross += 1;
            } else {
                missing += 1;
            }
        }
    }
    let expected = core.len() as u64 * binom((h.n() as usize - core.len()) as u64, h.r() as u64 - 1);
    if cross + missing != expected {
        return Err(Error::Precondition(format!(
            "crossing/missing identity broke: {cross}+{missing} != {expected}"
        )));
    }
    // second route: crossing edges counted by scanning the edge set
    let cross_scan = h
        .edges()
        .filter(|e| (e.mask() & core_mask).count_ones() == 1)
        .count() as u64;
    if cross_scan != cross {
        return Err(Error::Precondition(format!(
            "crossing recount mismatch: {cross_scan} vs {cross}"
        )));
    }

    // E_i partition of H − L
    let mut e_i = vec![0u64; h.r() as usize + 1];
    let mut htilde_edges = 0u64;
    let mut e1_edges: Vec<RSet> = Vec::new();
    for e in h.edges() {
        if e.mask() & core_mask != 0 {
            continue;
        }
        htilde_edges += 1;
        let i = (e.mask() & outside_mask).count_ones() as usize;
        e_i[i] += 1;
        if i == 1 {
            e1_edges.push(e);
        }
    }
    if e_i.iter().sum::<u64>() != htilde_edges {
        return Err(Error::Precondition("E_i partition does not sum".into()));
    }

    // shadow-degree split of E_1 inside S = V ∖ (L ∪ outside)
    let small: Vec<Vertex> = (0..h.n())
        .filter(|v| !core.contains(v) && !outside.contains(v))
        .collect();
    let (f1, f2_plus) = if e1_edges.is_empty() {
        (0, 0)
    } else {
        let split = shadow_degree_split(&e1_edges, &small)?;
        (split.f1.len() as u64, split.f2_plus.len() as u64)
    };

    Ok(EdgeClassCounts {
        cross,
        missing,
        e_i,
        htilde_edges,
        f1,
        f2_plus,
    })
}

/// The split of `∂(E_1) ∩ C(S, r−1)` by shadow degree: `f1` holds the
/// (r−1)-sets covered by exactly one E_1 edge, `f2_plus` the rest.
#[derive(Clone, Debug)]
pub struct ShadowSplit {
    pub f1: Vec<RSet>,
    pub f2_plus: Vec<RSet>,
    /// `Σ d_{E_1}(f)` over both parts; always equals `|E_1|`.
    pub degree_sum: u64,
}

pub fn shadow_degree_split(e1: &[RSet], small: &[Vertex]) -> Result<ShadowSplit> {
    let mut degrees: BTreeMap<Vec<Vertex>, u64> = BTreeMap::new();
    for e in e1 {
        let inside: Vec<Vertex> = e
            .vertices()
            .iter()
            .copied()
            .filter(|v| small.contains(v))
            .collect();
        if inside.len() != e.arity() as usize - 1 {
            return Err(Error::Precondition(format!(
                "edge {e:?} has {} vertices outside S, expected exactly 1",
                e.arity() as usize - inside.len()
            )));
        }
        *degrees.entry(inside).or_insert(0) += 1;
    }
    let degree_sum: u64 = degrees.values().sum();
    if degree_sum != e1.len() as u64 {
        return Err(Error::Precondition(
            "shadow degree sum does not match |E_1|".into(),
        ));
    }
    let mut f1 = Vec::new();
    let mut f2_plus = Vec::new();
    for (vs, d) in degrees {
        let rset = RSet::new(vs)?;
        if d == 1 {
            f1.push(rset);
        } else {
            f2_plus.push(rset);
        }
    }
    Ok(ShadowSplit {
        f1,
        f2_plus,
        degree_sum,
    })
}

/// Extends a rainbow loose path by `2i` edges through the core, exactly as
/// the big-pair argument does it: reserve connector vertices, then for each
/// pair along the chain take the colex-first edge of `h` through the pair
/// that avoids all used vertices and colors.
///
/// `mode` selects the target: `Shape::Cycle` closes the two path ends
/// through the core (needs an end pair outside the small set), `Shape::Path`
/// grows one end (needs an end point outside the small set).
pub fn extend_rainbow(
    coloring: &EdgeColoring,
    h: &Hypergraph,
    core: &[Vertex],
    path: &CopyWitness,
    mode: Shape,
    i: usize,
) -> Result<CopyWitness> {
    validate_core(h, core)?;
    let t = core.len();
    if i < 1 || i > t {
        return Err(Error::Precondition(format!(
            "the extension count must satisfy 1 <= i <= t = {t}, got i={i}"
        )));
    }
    if path.spec().shape != Shape::Path {
        return Err(Error::Precondition("the seed witness must be a path".into()));
    }
    let ell = path.len();
    let tau = h.r() as u64 * (ell as u64 + 2 * t as u64);

    // the subgraph must be rainbow and must contain the seed path away from
    // the core
    let h_edges: Vec<RSet> = h.edges().collect();
    if !coloring.is_rainbow(&h_edges)? {
        return Err(Error::Precondition(
            "the subgraph is not rainbow under the coloring".into(),
        ));
    }
    for e in path.edges() {
        if !h.contains(e) {
            return Err(Error::Precondition(format!(
                "seed edge {e:?} is not in the subgraph"
            )));
        }
        if core.iter().any(|&v| e.contains(v)) {
            return Err(Error::Precondition(format!(
                "seed edge {e:?} meets the core"
            )));
        }
    }

    let decomposition = decompose(h, core, tau)?;
    if decomposition.small.len() as u64 * 2 > h.n() as u64 {
        return Err(Error::Precondition(format!(
            "|S| = {} exceeds n/2",
            decomposition.small.len()
        )));
    }
    let in_outside = |v: Vertex| decomposition.outside.binary_search(&v).is_ok();

    // degree-1 vertices of the two end edges, kept per side to orient the
    // new chain
    let edges = path.edges();
    let degree_one = |edge: &RSet| -> Vec<Vertex> {
        edge.vertices()
            .iter()
            .copied()
            .filter(|&v| edges.iter().filter(|e| e.contains(v)).count() == 1)
            .collect()
    };
    let first_ends = degree_one(&edges[0]);
    let last_ends = degree_one(&edges[ell - 1]);

    let path_vertices = path.vertex_set();
    let mut connectors: Vec<Vertex> = decomposition
        .outside
        .iter()
        .copied()
        .filter(|v| !path_vertices.contains(v))
        .take(t)
        .collect();
    if connectors.len() < t {
        return Err(Error::Precondition(format!(
            "cannot reserve {t} connector vertices outside S and the path"
        )));
    }

    // chain of vertices the new edges run through
    let core_sorted = &decomposition.core;
    let (chain, attach_first): (Vec<Vertex>, bool) = match mode {
        Shape::Cycle => {
            let mut found = None;
            'outer: for &x in &first_ends {
                for &y in &last_ends {
                    if in_outside(x) && in_outside(y) {
                        found = Some((x, y));
                        break 'outer;
                    }
                }
            }
            let (x, y) = found.ok_or_else(|| {
                Error::Precondition("no end pair lies outside the small set".into())
            })?;
            let mut chain = vec![x];
            for j in 0..i {
                chain.push(core_sorted[j]);
                if j + 1 < i {
                    chain.push(connectors[j]);
                }
            }
            chain.push(y);
            (chain, true)
        }
        Shape::Path => {
            let x = first_ends
                .iter()
                .chain(last_ends.iter())
                .copied()
                .find(|&v| in_outside(v))
                .ok_or_else(|| {
                    Error::Precondition("no end point lies outside the small set".into())
                })?;
            let attach_first = first_ends.contains(&x);
            let mut chain = vec![x];
            for j in 0..i {
                chain.push(core_sorted[j]);
                chain.push(connectors[j]);
            }
            (chain, attach_first)
        }
    };
    connectors.truncate(t);

    // reserved vertices: the path, the chain, and the unused connectors
    let mut reserved: u128 = path_vertices.iter().fold(0, |m, &v| m | 1u128 << v);
    for &v in chain.iter().chain(connectors.iter()) {
        reserved |= 1u128 << v;
    }
    let mut used_colors: Vec<u32> = path
        .edges()
        .iter()
        .map(|e| coloring.color_of_edge(e))
        .collect::<Result<Vec<_>>>()?;

    let mut new_edges: Vec<RSet> = Vec::with_capacity(2 * i);
    for pair in chain.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let pair_mask = (1u128 << a) | (1u128 << b);
        let avoid = reserved & !pair_mask;
        let candidate = merge_ranks(h.incident(a), h.incident(b))
            .into_iter()
            .map(|rank| unrank_rset(rank, h.n(), h.r()).expect("stored rank"))
            .find(|e| {
                e.mask() & avoid == 0 && {
                    let color = coloring
                        .color_of_edge(e)
                        .expect("edge of the colored host");
                    !used_colors.contains(&color)
                }
            });
        let edge = candidate.ok_or(Error::ExtensionStuck { u: a, v: b })?;
        used_colors.push(coloring.color_of_edge(&edge)?);
        reserved |= edge.mask();
        new_edges.push(edge);
    }

    // assemble: the new chain runs x → core → (… → y); sequencing depends on
    // which end it attaches to
    let mut sequence: Vec<RSet> = Vec::with_capacity(ell + 2 * i);
    match mode {
        Shape::Cycle => {
            sequence.extend(edges.iter().cloned());
            sequence.extend(new_edges.into_iter().rev());
        }
        Shape::Path => {
            if attach_first {
                sequence.extend(new_edges.into_iter().rev());
                sequence.extend(edges.iter().cloned());
            } else {
                sequence.extend(edges.iter().cloned());
                sequence.extend(new_edges);
            }
        }
    }
    let spec = PatternSpec::new(mode, Tightness::Loose, ell + 2 * i)?;
    let witness = CopyWitness::new(spec, sequence)?;
    if !coloring.is_rainbow(witness.edges())? {
        return Err(Error::Precondition(
            "internal error: extension produced a non-rainbow witness".into(),
        ));
    }
    Ok(witness)
}

fn merge_ranks(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Greedy stand-in for structural core detection: picks `t` vertices one at
/// a time, each maximizing the number of newly covered edges, ties to the
/// lowest id. No optimality claim; exploratory use only.
pub fn greedy_core_detect(h: &Hypergraph, t: usize) -> Result<Vec<Vertex>> {
    if t as u64 >= h.n() as u64 {
        return Err(Error::Precondition(format!(
            "need t < n, got t={t} n={}",
            h.n()
        )));
    }
    let mut covered: std::collections::HashSet<u64> = std::collections::HashSet::new();
    let mut chosen: Vec<Vertex> = Vec::with_capacity(t);
    for _ in 0..t {
        let mut best: Option<(u64, Vertex)> = None;
        for v in 0..h.n() {
            if chosen.contains(&v) {
                continue;
            }
            let gain = h
                .incident(v)
                .iter()
                .filter(|rank| !covered.contains(rank))
                .count() as u64;
            let better = match best {
                None => true,
                Some((g, _)) => gain > g,
            };
            if better {
                best = Some((gain, v));
            }
        }
        let (_, v) = best.expect("t < n leaves a candidate");
        covered.extend(h.incident(v).iter().copied());
        chosen.push(v);
    }
    chosen.sort_unstable();
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{planted_extension, random_hypergraph};
    use crate::pattern::classify_sequence;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rset(vs: &[Vertex]) -> RSet {
        RSet::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn empty_graph_makes_all_pairs_small() {
        let h = Hypergraph::empty(8, 3).unwrap();
        let pairs = tau_small_pairs(&h, &[0, 1], 5).unwrap();
        assert_eq!(pairs.len(), 2 * 6);
        assert_eq!(small_degree(&h, &[0, 1], 5, 7).unwrap(), 2);
    }

    #[test]
    fn complete_graph_pairs_turn_big_at_n18() {
        // r=3, τ=15: the pair degree n-2 first exceeds 15·C(n,0) at n=18;
        // pinned by sweeping n upward
        let tau = 15;
        let mut first_all_big = None;
        for n in 4..=20u32 {
            let h = Hypergraph::complete(n, 3).unwrap();
            let pairs = tau_small_pairs(&h, &[0], tau).unwrap();
            if pairs.is_empty() && first_all_big.is_none() {
                first_all_big = Some(n);
            }
        }
        assert_eq!(first_all_big, Some(18));
    }

    #[test]
    fn small_degree_rejects_core_vertices() {
        let h = Hypergraph::complete(6, 3).unwrap();
        assert!(small_degree(&h, &[0, 1], 1, 0).is_err());
    }

    #[test]
    fn planted_starved_pair_gives_degree_one() {
        // all edges through {0} except those containing vertex 5
        let edges: Vec<RSet> = Hypergraph::complete(9, 3)
            .unwrap()
            .edges()
            .filter(|e| e.contains(0) && !e.contains(5))
            .collect();
        let h = Hypergraph::new(9, 3, edges).unwrap();
        // τ=1, r=3: threshold 1; pair (0,5) has degree 0, every other pair
        // through 0 has degree 6 > 1
        assert_eq!(small_degree(&h, &[0], 1, 5).unwrap(), 1);
        assert_eq!(small_degree(&h, &[0], 1, 4).unwrap(), 0);
        let d = decompose(&h, &[0], 1).unwrap();
        assert_eq!(d.small, vec![5]);
        assert!(d.outside.contains(&4));
    }

    #[test]
    fn star_counts() {
        let edges: Vec<RSet> = Hypergraph::complete(5, 3)
            .unwrap()
            .edges()
            .filter(|e| e.contains(0))
            .collect();
        let h = Hypergraph::new(5, 3, edges).unwrap();
        let outside: Vec<Vertex> = (1..5).collect();
        let counts = edge_class_counts(&h, &[0], &outside).unwrap();
        assert_eq!(counts.cross, 6);
        assert_eq!(counts.missing, 0);
        assert_eq!(counts.cross + counts.missing, binom(4, 2));
        assert_eq!(counts.htilde_edges, 0);
    }

    #[test]
    fn complete_graph_has_no_missing_edges() {
        let h = Hypergraph::complete(8, 3).unwrap();
        let outside: Vec<Vertex> = (2..8).collect();
        let counts = edge_class_counts(&h, &[0, 1], &outside).unwrap();
        assert_eq!(counts.missing, 0);
        assert_eq!(counts.cross, 2 * binom(6, 2));
    }

    #[test]
    fn random_instances_satisfy_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..30 {
            let n = 8 + (trial % 3) as u32;
            let h = random_hypergraph(n, 3, 40, &mut rng).unwrap();
            let core = [0, 1];
            let outside: Vec<Vertex> = (2..n).filter(|v| v % 2 == 0).collect();
            let counts = edge_class_counts(&h, &core, &outside).unwrap();
            assert_eq!(
                counts.cross + counts.missing,
                2 * binom(n as u64 - 2, 2),
                "trial {trial}"
            );
            assert_eq!(counts.e_i.iter().sum::<u64>(), counts.htilde_edges);
        }
    }

    #[test]
    fn shadow_split_examples() {
        // one edge: its S-part is the unique member of F_1
        let s: Vec<Vertex> = vec![1, 2, 5, 6];
        let split = shadow_degree_split(&[rset(&[1, 2, 3])], &s).unwrap();
        assert_eq!(split.f1, vec![rset(&[1, 2])]);
        assert!(split.f2_plus.is_empty());

        // two edges sharing their S-part
        let split =
            shadow_degree_split(&[rset(&[1, 2, 3]), rset(&[1, 2, 4])], &s).unwrap();
        assert!(split.f1.is_empty());
        assert_eq!(split.f2_plus, vec![rset(&[1, 2])]);
        assert_eq!(split.degree_sum, 2);

        // precondition: exactly one vertex outside S
        assert!(shadow_degree_split(&[rset(&[3, 4, 7])], &s).is_err());
    }

    #[test]
    fn e1_bound_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let h = random_hypergraph(10, 3, 60, &mut rng).unwrap();
            let core = [0];
            let outside: Vec<Vertex> = (1..10).filter(|v| v % 2 == 1).collect();
            let counts = edge_class_counts(&h, &core, &outside).unwrap();
            assert!(
                counts.e_i[1] <= counts.f1 + 10 * counts.f2_plus,
                "|E_1| <= |F_1| + n|F_2+| must hold"
            );
        }
    }

    #[test]
    fn extension_produces_verified_witnesses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let inst = planted_extension(40, 3, 2, 3, &mut rng).unwrap();
        for mode in [Shape::Path, Shape::Cycle] {
            for i in 1..=2 {
                let w = extend_rainbow(&inst.coloring, &inst.host, &inst.core, &inst.path, mode, i)
                    .unwrap();
                assert_eq!(w.len(), 3 + 2 * i);
                assert_eq!(classify_sequence(w.edges(), w.spec()), Ok(()));
                assert!(inst.coloring.is_rainbow(w.edges()).unwrap());
            }
        }
    }

    #[test]
    fn extension_rejects_i_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let inst = planted_extension(40, 3, 1, 3, &mut rng).unwrap();
        let err = extend_rainbow(
            &inst.coloring,
            &inst.host,
            &inst.core,
            &inst.path,
            Shape::Path,
            0,
        );
        assert!(err.is_err());
        let err = extend_rainbow(
            &inst.coloring,
            &inst.host,
            &inst.core,
            &inst.path,
            Shape::Cycle,
            2,
        );
        assert!(err.is_err(), "i exceeding t is rejected");
    }

    #[test]
    fn greedy_detection_examples() {
        // star plus noise
        let mut edges: Vec<RSet> = Hypergraph::complete(9, 3)
            .unwrap()
            .edges()
            .filter(|e| e.contains(0))
            .collect();
        edges.push(rset(&[4, 5, 6]));
        edges.push(rset(&[5, 6, 7]));
        let h = Hypergraph::new(9, 3, edges).unwrap();
        assert_eq!(greedy_core_detect(&h, 1).unwrap(), vec![0]);

        // complete host: ties break to the lowest ids
        let k = Hypergraph::complete(7, 3).unwrap();
        assert_eq!(greedy_core_detect(&k, 2).unwrap(), vec![0, 1]);

        // the Turán extremal family plants its core
        let h = crate::construct::turan_extremal_loose(12, 3, 5, Shape::Path).unwrap();
        assert_eq!(greedy_core_detect(&h, 2).unwrap(), vec![0, 1]);
    }
}
