//! Vertex and edge primitives: r-sets with colex ranking, hypergraph storage
//! with per-vertex incidence indexes, shadows and pair degrees.
//!
//! Vertices are 0-based `u32` ids internally; the 1-based convention of the
//! text formats is mapped at the I/O boundary.

use std::collections::BTreeSet;
use std::fmt;

use crate::binom::{binom, binom_checked};
use crate::error::Error;
use crate::Result;

pub type Vertex = u32;

/// Largest ground set the combinatorial machinery accepts; search state is
/// kept in 128-bit vertex masks.
pub const MAX_VERTICES: u32 = 128;

/// An r-element subset of the vertex set, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RSet(Vec<Vertex>);

impl RSet {
    /// Builds an r-set from vertices in any order; rejects duplicates.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(format!(
                "duplicate vertex in {:?}",
                vertices
            )));
        }
        if vertices.is_empty() {
            return Err(Error::InvalidEdge("empty vertex set".into()));
        }
        Ok(RSet(vertices))
    }

    /// Internal constructor for already sorted, duplicate-free input.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        RSet(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn arity(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Checks the set is a valid edge of `K_n^r`.
    pub fn validate(&self, n: u32, r: u32) -> Result<()> {
        if self.arity() != r {
            return Err(Error::InvalidEdge(format!(
                "expected {r} vertices, got {}",
                self.arity()
            )));
        }
        if let Some(&max) = self.0.last() {
            if max >= n {
                return Err(Error::InvalidEdge(format!(
                    "vertex {max} out of range for n={n}"
                )));
            }
        }
        Ok(())
    }

    /// Bitmask over vertices; requires all ids < 128.
    pub fn mask(&self) -> u128 {
        let mut m = 0u128;
        for &v in &self.0 {
            debug_assert!(v < MAX_VERTICES);
            m |= 1u128 << v;
        }
        m
    }

    /// Number of common vertices with `other`.
    pub fn intersection_size(&self, other: &RSet) -> usize {
        let mut it = other.0.iter().peekable();
        let mut count = 0;
        for &v in &self.0 {
            while let Some(&&w) = it.peek() {
                if w < v {
                    it.next();
                } else {
                    break;
                }
            }
            if it.peek() == Some(&&v) {
                count += 1;
            }
        }
        count
    }
}

impl fmt::Debug for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Colex rank of an r-set within `K_n^r`: for `{a_1 < ... < a_r}` the rank is
/// `Σ C(a_i, i)`, which does not depend on `n` beyond validation.
pub fn rank_rset(edge: &RSet, n: u32) -> Result<u64> {
    edge.validate(n, edge.arity())?;
    Ok(rank_unchecked(edge.vertices()))
}

pub(crate) fn rank_unchecked(vertices: &[Vertex]) -> u64 {
    vertices
        .iter()
        .enumerate()
        .map(|(i, &a)| binom(a as u64, i as u64 + 1))
        .sum()
}

/// Inverse of [`rank_rset`].
pub fn unrank_rset(index: u64, n: u32, r: u32) -> Result<RSet> {
    let total = binom_checked(n as u64, r as u64)
        .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
    if index >= total {
        return Err(Error::RankOutOfRange {
            index,
            limit: total,
        });
    }
    let mut rem = index;
    let mut upper = n as u64;
    let mut out = vec![0; r as usize];
    for i in (1..=r as u64).rev() {
        let mut c = upper;
        loop {
            c -= 1;
            if binom(c, i) <= rem {
                break;
            }
        }
        rem -= binom(c, i);
        out[i as usize - 1] = c as Vertex;
        upper = c;
    }
    Ok(RSet::from_sorted_unchecked(out))
}

#[derive(Clone, Debug)]
enum EdgeStore {
    /// Sorted edge ranks.
    Sparse(Vec<u64>),
    /// One bit per rank of `K_n^r`; used when density exceeds 1/64.
    Dense { words: Vec<u64>, count: u64 },
}

impl EdgeStore {
    fn contains(&self, rank: u64) -> bool {
        match self {
            EdgeStore::Sparse(ranks) => ranks.binary_search(&rank).is_ok(),
            EdgeStore::Dense { words, .. } => {
                words[(rank / 64) as usize] >> (rank % 64) & 1 == 1
            }
        }
    }

    fn len(&self) -> u64 {
        match self {
            EdgeStore::Sparse(ranks) => ranks.len() as u64,
            EdgeStore::Dense { count, .. } => *count,
        }
    }

    fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            EdgeStore::Sparse(ranks) => Box::new(ranks.iter().copied()),
            EdgeStore::Dense { words, .. } => Box::new(
                words
                    .iter()
                    .enumerate()
                    .flat_map(|(w, &bits)| BitIter { bits, base: w as u64 * 64 }),
            ),
        }
    }
}

struct BitIter {
    bits: u64,
    base: u64,
}

impl Iterator for BitIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.bits == 0 {
            return None;
        }
        let tz = self.bits.trailing_zeros() as u64;
        self.bits &= self.bits - 1;
        Some(self.base + tz)
    }
}

/// An r-uniform hypergraph on `[0, n)`, immutable after construction.
///
/// Edges are held as colex ranks, dense (bitset) when they fill more than
/// 1/64 of `K_n^r` and sorted-sparse otherwise, with a per-vertex incidence
/// index for intersection-constrained search.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: u32,
    r: u32,
    store: EdgeStore,
    incidence: Vec<Vec<u64>>,
}

impl Hypergraph {
    pub fn new(n: u32, r: u32, edges: Vec<RSet>) -> Result<Self> {
        if r == 0 || n < r {
            return Err(Error::InvalidEdge(format!(
                "need n >= r >= 1, got n={n} r={r}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "n={n} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        let total = binom_checked(n as u64, r as u64)
            .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
        let mut ranked: Vec<(u64, RSet)> = Vec::with_capacity(edges.len());
        for e in edges {
            e.validate(n, r)?;
            ranked.push((rank_unchecked(e.vertices()), e));
        }
        ranked.sort_by_key(|(rank, _)| *rank);
        if let Some(w) = ranked.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidEdge(format!("duplicate edge {:?}", w[0].1)));
        }

        let mut incidence = vec![Vec::new(); n as usize];
        for (rank, e) in &ranked {
            for &v in e.vertices() {
                incidence[v as usize].push(*rank);
            }
        }

        let count = ranked.len() as u64;
        let store = if count.saturating_mul(64) >= total && total > 0 {
            let mut words = vec![0u64; (total as usize + 63) / 64];
            for (rank, _) in &ranked {
                words[(rank / 64) as usize] |= 1 << (rank % 64);
            }
            EdgeStore::Dense { words, count }
        } else {
            EdgeStore::Sparse(ranked.into_iter().map(|(rank, _)| rank).collect())
        };

        Ok(Hypergraph {
            n,
            r,
            store,
            incidence,
        })
    }

    pub fn empty(n: u32, r: u32) -> Result<Self> {
        Self::new(n, r, Vec::new())
    }

    /// The complete r-graph `K_n^r`.
    pub fn complete(n: u32, r: u32) -> Result<Self> {
        let total = binom_checked(n as u64, r as u64)
            .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
        let edges = (0..total)
            .map(|i| unrank_rset(i, n, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, r, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edge_count(&self) -> u64 {
        self.store.len()
    }

    pub fn contains_rank(&self, rank: u64) -> bool {
        self.store.contains(rank)
    }

    pub fn contains(&self, edge: &RSet) -> bool {
        edge.validate(self.n, self.r).is_ok() && self.contains_rank(rank_unchecked(edge.vertices()))
    }

    /// Edge ranks in ascending (colex) order.
    pub fn edge_ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.store.iter()
    }

    /// Edges in ascending rank order.
    pub fn edges(&self) -> impl Iterator<Item = RSet> + '_ {
        self.store
            .iter()
            .map(|rank| unrank_rset(rank, self.n, self.r).expect("stored rank is valid"))
    }

    /// Ranks of edges containing `v`, ascending.
    pub fn incident(&self, v: Vertex) -> &[u64] {
        &self.incidence[v as usize]
    }

    /// Number of edges containing both `u` and `v`, by incidence-list
    /// intersection.
    pub fn pair_degree(&self, u: Vertex, v: Vertex) -> Result<u64> {
        if u == v {
            return Err(Error::DegeneratePair(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidEdge(format!(
                    "vertex {w} out of range for n={}",
                    self.n
                )));
            }
        }
        let (a, b) = (self.incident(u), self.incident(v));
        let mut i = 0;
        let mut j = 0;
        let mut count = 0;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    /// The shadow `∂H`: all (r−1)-sets contained in some edge of `H`.
    pub fn shadow(&self) -> Result<Hypergraph> {
        if self.r < 2 {
            return Err(Error::Unsupported(
                "shadow needs uniformity at least 2".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for edge in self.edges() {
            let vs = edge.vertices();
            for skip in 0..vs.len() {
                let sub: Vec<Vertex> = vs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(sub);
            }
        }
        let edges = seen
            .into_iter()
            .map(RSet::from_sorted_unchecked)
            .collect();
        Hypergraph::new(self.n, self.r - 1, edges)
    }

    /// Parses the text format: first significant line `n r`, then one edge
    /// per line as space-separated 1-based vertex ids. Blank lines and `'#'`
    /// comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(u32, u32)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match header {
                None => {
                    if tokens.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected header 'n r', got {tokens:?}"),
                        });
                    }
                    let n = parse_u32(tokens[0], line)?;
                    let r = parse_u32(tokens[1], line)?;
                    header = Some((n, r));
                }
                Some((n, r)) => {
                    if tokens.len() != r as usize {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected {r} vertices, got {}", tokens.len()),
                        });
                    }
                    let mut vs = Vec::with_capacity(r as usize);
                    for t in tokens {
                        let v = parse_u32(t, line)?;
                        if v == 0 || v > n {
                            return Err(Error::Parse {
                                line,
                                msg: format!("vertex {v} out of range 1..={n}"),
                            });
                        }
                        vs.push(v - 1);
                    }
                    let edge = RSet::new(vs).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?;
                    edges.push((line, edge));
                }
            }
        }
        let (n, r) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing 'n r' header".into(),
        })?;
        let mut seen = BTreeSet::new();
        for (line, edge) in &edges {
            if !seen.insert(edge.clone()) {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("duplicate edge {edge:?}"),
                });
            }
        }
        Hypergraph::new(n, r, edges.into_iter().map(|(_, e)| e).collect())
    }

    /// Writes the text format; inverse of [`Hypergraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for edge in self.edges() {
            let line: Vec<String> = edge.vertices().iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn parse_u32(token: &str, line: usize) -> Result<u32> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not an integer: {token:?}"),
    })
}

/// All r-subsets of `pool` in colex order over positions.
pub fn subsets_of(pool: &[Vertex], r: usize) -> Vec<RSet> {
    let mut out = Vec::new();
    if r == 0 || r > pool.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        out.push(RSet::from_sorted_unchecked(
            idx.iter().map(|&i| pool[i]).collect(),
        ));
        // advance the index odometer
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < pool.len() - (r - i) {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rset(vs: &[Vertex]) -> RSet {
        RSet::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_rset(&rset(&[0, 1, 2]), 5).unwrap(), 0);
        assert_eq!(rank_rset(&rset(&[2, 3, 4]), 5).unwrap(), 9);
        assert_eq!(unrank_rset(0, 5, 3).unwrap(), rset(&[0, 1, 2]));
        assert_eq!(unrank_rset(9, 5, 3).unwrap(), rset(&[2, 3, 4]));
    }

    #[test]
    fn rank_rejects_bad_edges() {
        assert!(RSet::new(vec![1, 1, 2]).is_err());
        assert!(rank_rset(&rset(&[0, 1, 7]), 5).is_err());
        assert!(unrank_rset(10, 5, 3).is_err());
        assert!(unrank_rset(35, 7, 3).is_err());
    }

    #[test]
    fn roundtrip_k7_3_and_k6_4() {
        for (n, r) in [(7u32, 3u32), (6, 4)] {
            let total = binom(n as u64, r as u64);
            for index in 0..total {
                let e = unrank_rset(index, n, r).unwrap();
                assert_eq!(rank_rset(&e, n).unwrap(), index);
            }
        }
    }

    #[test]
    fn roundtrip_small_grid() {
        for n in 2..=9u32 {
            for r in 2..=4u32.min(n) {
                let total = binom(n as u64, r as u64);
                let mut seen = BTreeSet::new();
                for index in 0..total {
                    let e = unrank_rset(index, n, r).unwrap();
                    assert_eq!(rank_rset(&e, n).unwrap(), index);
                    assert!(seen.insert(e.vertices().to_vec()));
                }
                assert_eq!(seen.len() as u64, total);
            }
        }
    }

    #[test]
    fn shadow_single_edge() {
        let h = Hypergraph::new(5, 3, vec![rset(&[1, 2, 3])]).unwrap();
        let s = h.shadow().unwrap();
        let expected: Vec<RSet> = vec![rset(&[1, 2]), rset(&[1, 3]), rset(&[2, 3])];
        assert_eq!(s.edges().collect::<Vec<_>>().len(), 3);
        for e in expected {
            assert!(s.contains(&e));
        }
    }

    #[test]
    fn shadow_deduplicates_overlap() {
        let h = Hypergraph::new(5, 3, vec![rset(&[1, 2, 3]), rset(&[1, 2, 4])]).unwrap();
        let s = h.shadow().unwrap();
        assert_eq!(s.edge_count(), 5);
    }

    #[test]
    fn shadow_of_complete_graph() {
        let h = Hypergraph::complete(8, 4).unwrap();
        let s = h.shadow().unwrap();
        assert_eq!(s.edge_count(), 56);
        assert_eq!(s.edge_count(), binom(8, 3));
    }

    #[test]
    fn pair_degree_complete_and_empty() {
        let k6 = Hypergraph::complete(6, 3).unwrap();
        assert_eq!(k6.pair_degree(0, 1).unwrap(), 4);
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert_eq!(k6.pair_degree(u, v).unwrap(), binom(4, 1));
                }
            }
        }
        let empty = Hypergraph::empty(6, 3).unwrap();
        assert_eq!(empty.pair_degree(0, 1).unwrap(), 0);
        assert!(k6.pair_degree(2, 2).is_err());
    }

    #[test]
    fn pair_degree_matches_naive_scan() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let h = crate::instances::random_hypergraph(10, 3, 60, &mut rng).unwrap();
        for u in 0..10 {
            for v in (u + 1)..10 {
                let naive = h
                    .edges()
                    .filter(|e| e.contains(u) && e.contains(v))
                    .count() as u64;
                assert_eq!(h.pair_degree(u, v).unwrap(), naive);
            }
        }
    }

    #[test]
    fn incidence_sum_is_r_times_edges() {
        let h = Hypergraph::complete(7, 3).unwrap();
        let total: usize = (0..7).map(|v| h.incident(v).len()).sum();
        assert_eq!(total as u64, 3 * h.edge_count());
    }

    #[test]
    fn dense_and_sparse_agree() {
        // the complete graph lands in the bitset store, a 2-edge matching on
        // 12 vertices is below the 1/64 density threshold; both must answer
        // membership identically
        let k = Hypergraph::complete(6, 3).unwrap();
        let m = Hypergraph::new(12, 3, vec![rset(&[0, 1, 2]), rset(&[3, 4, 5])]).unwrap();
        assert!(matches!(k.store, EdgeStore::Dense { .. }));
        assert!(matches!(m.store, EdgeStore::Sparse(_)));
        for rank in 0..binom(6, 3) {
            let e = unrank_rset(rank, 6, 3).unwrap();
            assert!(k.contains(&e));
        }
        for rank in 0..binom(12, 3) {
            let e = unrank_rset(rank, 12, 3).unwrap();
            assert_eq!(m.contains(&e), e == rset(&[0, 1, 2]) || e == rset(&[3, 4, 5]));
        }
        // colex: rank({3,4,5}) = C(3,1)+C(4,2)+C(5,3) = 19
        assert_eq!(m.edge_ranks().collect::<Vec<_>>(), vec![0, 19]);
        assert_eq!(k.edge_ranks().collect::<Vec<_>>(), (0..20).collect::<Vec<_>>());
    }

    #[test]
    fn duplicate_edges_rejected() {
        let err = Hypergraph::new(5, 3, vec![rset(&[0, 1, 2]), rset(&[0, 1, 2])]);
        assert!(err.is_err());
    }

    #[test]
    fn text_format_roundtrip() {
        let h = Hypergraph::new(6, 3, vec![rset(&[0, 1, 2]), rset(&[2, 3, 5])]).unwrap();
        let text = h.to_text();
        let back = Hypergraph::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(back.edge_count(), 2);

        let commented = "# a matching\n6 3\n\n1 2 3  # first\n3 4 6\n";
        let g = Hypergraph::parse(commented).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.contains(&rset(&[2, 3, 5])));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let missing = Hypergraph::parse("# nothing\n");
        assert!(matches!(missing, Err(Error::Parse { line: 0, .. })));

        let bad_vertex = Hypergraph::parse("5 3\n1 2 9\n");
        assert!(matches!(bad_vertex, Err(Error::Parse { line: 2, .. })));

        let dup = Hypergraph::parse("5 3\n1 2 3\n3 2 1\n");
        assert!(matches!(dup, Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn subsets_enumeration() {
        let pool = [2u32, 4, 7, 9];
        let subs = subsets_of(&pool, 3);
        assert_eq!(subs.len() as u64, binom(4, 3));
        assert!(subs.contains(&rset(&[2, 4, 7])));
        assert!(subs.contains(&rset(&[4, 7, 9])));
    }
}
