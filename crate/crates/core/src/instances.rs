//! Seeded generators for random and planted test instances. Everything is
//! driven by a caller-supplied ChaCha RNG so runs reproduce bit-for-bit.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::binom::binom_checked;
use crate::coloring::EdgeColoring;
use crate::error::Error;
use crate::hypergraph::{unrank_rset, Hypergraph, RSet, Vertex};
use crate::pattern::{CopyWitness, PatternSpec, Tightness};
use crate::Result;

/// Random r-graph with exactly `m` distinct edges.
pub fn random_hypergraph<R: Rng>(n: u32, r: u32, m: u64, rng: &mut R) -> Result<Hypergraph> {
    let total = binom_checked(n as u64, r as u64)
        .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
    if m > total {
        return Err(Error::InvalidEdge(format!(
            "requested {m} edges, K_{n}^{r} has only {total}"
        )));
    }
    let mut ranks: Vec<u64> = (0..total).collect();
    ranks.partial_shuffle(rng, m as usize);
    let edges = ranks[..m as usize]
        .iter()
        .map(|&rank| unrank_rset(rank, n, r))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(n, r, edges)
}

/// Random surjective coloring of `K_n^r` with exactly `c` colors.
pub fn random_coloring<R: Rng>(n: u32, r: u32, c: u32, rng: &mut R) -> Result<EdgeColoring> {
    let total = binom_checked(n as u64, r as u64)
        .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
    if c as u64 > total || c == 0 {
        return Err(Error::InvalidEdge(format!(
            "cannot use {c} colors on {total} edges"
        )));
    }
    // surjectivity: one designated edge per color, the rest uniform
    let mut ranks: Vec<u64> = (0..total).collect();
    ranks.shuffle(rng);
    let mut color_of = vec![0u32; total as usize];
    for (color, &rank) in ranks.iter().take(c as usize).enumerate() {
        color_of[rank as usize] = color as u32;
    }
    for &rank in ranks.iter().skip(c as usize) {
        color_of[rank as usize] = rng.gen_range(0..c);
    }
    EdgeColoring::new(n, r, color_of)
}

/// Random loose or linear path of length `k` drawn from vertices of `[0, n)`
/// outside `avoid`. Consecutive overlaps are size 1 for linear and random in
/// `1..r` for loose.
pub fn random_path<R: Rng>(
    n: u32,
    r: u32,
    k: usize,
    tightness: Tightness,
    avoid: &[Vertex],
    rng: &mut R,
) -> Result<CopyWitness> {
    let spec = PatternSpec::new(crate::pattern::Shape::Path, tightness, k)?;
    let mut pool: Vec<Vertex> = (0..n).filter(|v| !avoid.contains(v)).collect();
    pool.shuffle(rng);
    let mut edges: Vec<RSet> = Vec::with_capacity(k);
    let mut fresh = pool.into_iter();
    let mut take_fresh = |count: usize| -> Result<Vec<Vertex>> {
        let vs: Vec<Vertex> = fresh.by_ref().take(count).collect();
        if vs.len() < count {
            return Err(Error::Precondition(format!(
                "not enough vertices outside the avoided set for a path of length {k}"
            )));
        }
        Ok(vs)
    };
    let first = take_fresh(r as usize)?;
    let mut prev_private = first.clone();
    edges.push(RSet::new(first)?);
    for _ in 1..k {
        let max_overlap = match tightness {
            Tightness::Linear => 1,
            Tightness::Loose => (r as usize - 1).min(prev_private.len()),
        };
        let overlap = rng.gen_range(1..=max_overlap);
        prev_private.shuffle(rng);
        let mut vs: Vec<Vertex> = prev_private[..overlap].to_vec();
        let new = take_fresh(r as usize - overlap)?;
        // the next edge may only link through vertices it does not share
        // with earlier edges
        prev_private = new.clone();
        vs.extend(new);
        edges.push(RSet::new(vs)?);
    }
    CopyWitness::new(spec, edges)
}

/// A planted instance for the rainbow-extension procedure: a colored
/// `K_n^r`, a rainbow subgraph containing every edge that meets the core
/// (so every core pair is big) plus a rainbow loose path avoiding the core.
pub struct PlantedExtension {
    pub coloring: EdgeColoring,
    pub host: Hypergraph,
    pub core: Vec<Vertex>,
    pub path: CopyWitness,
}

/// Builds a [`PlantedExtension`] with `t` core vertices and a planted loose
/// path of length `ell`. All core pairs have degree `n-2` in the subgraph,
/// which exceeds the `τ·C(n, r-3)` threshold for the desk-scale parameters
/// used in tests (r=3, n=40).
pub fn planted_extension<R: Rng>(
    n: u32,
    r: u32,
    t: usize,
    ell: usize,
    rng: &mut R,
) -> Result<PlantedExtension> {
    let core: Vec<Vertex> = (0..t as u32).collect();
    let path = random_path(n, r, ell, Tightness::Loose, &core, rng)?;

    let host_edges: Vec<RSet> = Hypergraph::complete(n, r)?
        .edges()
        .filter(|e| core.iter().any(|&v| e.contains(v)) || path.edges().contains(e))
        .collect();
    let host = Hypergraph::new(n, r, host_edges)?;

    // rainbow on the subgraph, arbitrary elsewhere: subgraph edges take
    // distinct low ids, the rest draw uniformly from the same id range
    let total = binom_checked(n as u64, r as u64).expect("checked by complete()") as usize;
    let distinct = host.edge_count() as u32;
    let mut color_of = vec![u32::MAX; total];
    for (i, rank) in host.edge_ranks().enumerate() {
        color_of[rank as usize] = i as u32;
    }
    for slot in color_of.iter_mut() {
        if *slot == u32::MAX {
            *slot = rng.gen_range(0..distinct);
        }
    }
    let coloring = EdgeColoring::new(n, r, color_of)?;
    Ok(PlantedExtension {
        coloring,
        host,
        core,
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_hypergraph_has_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = random_hypergraph(9, 3, 30, &mut rng).unwrap();
        assert_eq!(h.edge_count(), 30);
        assert_eq!(h.n(), 9);
    }

    #[test]
    fn random_coloring_is_surjective() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for c in [1u32, 3, 10, 20] {
            let coloring = random_coloring(6, 3, c, &mut rng).unwrap();
            assert_eq!(coloring.color_count(), c);
        }
    }

    #[test]
    fn random_paths_classify() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 2..=5 {
            for tightness in [Tightness::Loose, Tightness::Linear] {
                let w = random_path(30, 3, k, tightness, &[0, 1], &mut rng).unwrap();
                assert_eq!(w.len(), k);
                for e in w.edges() {
                    assert!(!e.contains(0) && !e.contains(1));
                }
            }
        }
    }

    #[test]
    fn planted_instance_is_rainbow_and_big() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let inst = planted_extension(40, 3, 2, 3, &mut rng).unwrap();
        let edges: Vec<RSet> = inst.host.edges().collect();
        assert!(inst.coloring.is_rainbow(&edges).unwrap());
        // every core pair has full degree in the host
        for &u in &inst.core {
            for v in 0..40 {
                if u != v {
                    assert_eq!(inst.host.pair_degree(u, v).unwrap(), 38);
                }
            }
        }
        for e in inst.path.edges() {
            assert!(inst.host.contains(e));
        }
    }
}
