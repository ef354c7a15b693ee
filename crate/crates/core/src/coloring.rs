//! Edge colorings of `K_n^r`: total color assignments with dense 0-based
//! color ids, rainbow tests, rainbow-copy search and the representative
//! subgraph.

use crate::binom::binom_checked;
use crate::error::Error;
use crate::hypergraph::{rank_rset, unrank_rset, Hypergraph, RSet};
use crate::pattern::PatternSpec;
use crate::search::{run_sharded, Prepared, SearchReport};
use crate::Result;

pub type ColorId = u32;

/// A total, surjective edge coloring of the complete r-graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: u32,
    r: u32,
    color_of: Vec<ColorId>,
    classes: Vec<Vec<u64>>,
}

impl EdgeColoring {
    /// Builds a coloring from a rank-indexed color vector. The vector must
    /// cover all `C(n,r)` ranks (totality) and use every id in `[0, c)` for
    /// some `c` (surjectivity onto dense ids).
    pub fn new(n: u32, r: u32, color_of: Vec<ColorId>) -> Result<Self> {
        let total = binom_checked(n as u64, r as u64)
            .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
        if color_of.len() as u64 != total {
            return Err(Error::InvalidEdge(format!(
                "coloring covers {} of {total} edges",
                color_of.len()
            )));
        }
        if total == 0 {
            return Err(Error::InvalidEdge("empty edge set cannot be colored".into()));
        }
        let c = *color_of.iter().max().expect("nonempty") + 1;
        let mut classes = vec![Vec::new(); c as usize];
        for (rank, &color) in color_of.iter().enumerate() {
            classes[color as usize].push(rank as u64);
        }
        if let Some(missing) = classes.iter().position(|cl| cl.is_empty()) {
            return Err(Error::InvalidEdge(format!(
                "color {missing} has an empty class; ids must be dense"
            )));
        }
        Ok(EdgeColoring {
            n,
            r,
            color_of,
            classes,
        })
    }

    /// Every edge in one class.
    pub fn monochromatic(n: u32, r: u32) -> Result<Self> {
        let total = binom_checked(n as u64, r as u64)
            .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
        Self::new(n, r, vec![0; total as usize])
    }

    /// Every edge its own color; any copy of anything is rainbow.
    pub fn all_distinct(n: u32, r: u32) -> Result<Self> {
        let total = binom_checked(n as u64, r as u64)
            .ok_or_else(|| Error::Unsupported(format!("C({n},{r}) overflows u64")))?;
        Self::new(n, r, (0..total as u32).collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn color_count(&self) -> u32 {
        self.classes.len() as u32
    }

    pub fn color_of_rank(&self, rank: u64) -> ColorId {
        self.color_of[rank as usize]
    }

    pub fn color_of_edge(&self, edge: &RSet) -> Result<ColorId> {
        let rank = rank_rset(edge, self.n)?;
        if edge.arity() != self.r {
            return Err(Error::InvalidEdge(format!(
                "arity {} does not match r={}",
                edge.arity(),
                self.r
            )));
        }
        Ok(self.color_of_rank(rank))
    }

    /// Edge ranks of one color class, ascending.
    pub fn class(&self, color: ColorId) -> &[u64] {
        &self.classes[color as usize]
    }

    /// Rank-indexed colors, aligned with `K_n^r` colex order.
    pub fn colors_by_rank(&self) -> &[ColorId] {
        &self.color_of
    }

    /// True iff all the given edges have pairwise distinct colors.
    pub fn is_rainbow(&self, edges: &[RSet]) -> Result<bool> {
        let mut seen: Vec<ColorId> = Vec::with_capacity(edges.len());
        for e in edges {
            let color = self.color_of_edge(e)?;
            if seen.contains(&color) {
                return Ok(false);
            }
            seen.push(color);
        }
        Ok(true)
    }

    /// The rainbow subgraph obtained by choosing one edge from each color
    /// class — the lowest rank in each class.
    pub fn representative_subgraph(&self) -> Hypergraph {
        let edges: Vec<RSet> = self
            .classes
            .iter()
            .map(|class| unrank_rset(class[0], self.n, self.r).expect("stored rank"))
            .collect();
        Hypergraph::new(self.n, self.r, edges).expect("one edge per class is duplicate-free")
    }

    /// Parses the coloring format: header `n r c`, then one line per edge as
    /// `v1 v2 ... vr : color` with 1-based vertices and 0-based colors.
    /// Every edge of `K_n^r` must be listed exactly once.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(u32, u32, u32)> = None;
        let mut assigned: Vec<Option<ColorId>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match header {
                None => {
                    let tokens: Vec<&str> = content.split_whitespace().collect();
                    if tokens.len() != 3 {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected header 'n r c', got {tokens:?}"),
                        });
                    }
                    let n: u32 = parse_num(tokens[0], line)?;
                    let r: u32 = parse_num(tokens[1], line)?;
                    let c: u32 = parse_num(tokens[2], line)?;
                    let total = binom_checked(n as u64, r as u64).ok_or(Error::Parse {
                        line,
                        msg: format!("C({n},{r}) overflows u64"),
                    })?;
                    assigned = vec![None; total as usize];
                    header = Some((n, r, c));
                }
                Some((n, r, c)) => {
                    let (lhs, rhs) = content.split_once(':').ok_or(Error::Parse {
                        line,
                        msg: "expected 'v1 ... vr : color'".into(),
                    })?;
                    let color: u32 = parse_num(rhs.trim(), line)?;
                    if color >= c {
                        return Err(Error::Parse {
                            line,
                            msg: format!("color {color} out of range 0..{c}"),
                        });
                    }
                    let mut vs = Vec::with_capacity(r as usize);
                    for t in lhs.split_whitespace() {
                        let v: u32 = parse_num(t, line)?;
                        if v == 0 || v > n {
                            return Err(Error::Parse {
                                line,
                                msg: format!("vertex {v} out of range 1..={n}"),
                            });
                        }
                        vs.push(v - 1);
                    }
                    if vs.len() != r as usize {
                        return Err(Error::Parse {
                            line,
                            msg: format!("expected {r} vertices, got {}", vs.len()),
                        });
                    }
                    let edge = RSet::new(vs).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?;
                    let rank = rank_rset(&edge, n).map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })? as usize;
                    if assigned[rank].is_some() {
                        return Err(Error::Parse {
                            line,
                            msg: format!("edge {edge:?} assigned twice"),
                        });
                    }
                    assigned[rank] = Some(color);
                }
            }
        }
        let (n, r, c) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing 'n r c' header".into(),
        })?;
        let mut color_of = Vec::with_capacity(assigned.len());
        for (rank, slot) in assigned.iter().enumerate() {
            match slot {
                Some(color) => color_of.push(*color),
                None => {
                    let edge = unrank_rset(rank as u64, n, r)?;
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("edge {edge:?} is unlisted; the coloring must be total"),
                    });
                }
            }
        }
        let coloring = Self::new(n, r, color_of).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })?;
        if coloring.color_count() != c {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "header declares {c} colors but {} are used",
                    coloring.color_count()
                ),
            });
        }
        Ok(coloring)
    }

    /// Writes the coloring format; inverse of [`EdgeColoring::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.r, self.color_count());
        for (rank, &color) in self.color_of.iter().enumerate() {
            let edge = unrank_rset(rank as u64, self.n, self.r).expect("valid rank");
            let vs: Vec<String> = edge.vertices().iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!("{} : {}\n", vs.join(" "), color));
        }
        out
    }
}

fn parse_num<T: std::str::FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a number: {token:?}"),
    })
}

/// Searches the colored `K_n^r` for a rainbow copy of `spec`.
pub fn find_rainbow_copy(
    coloring: &EdgeColoring,
    spec: &PatternSpec,
    budget: u64,
) -> Result<SearchReport> {
    find_rainbow_copy_parallel(coloring, spec, budget, 1)
}

/// Deterministic parallel variant, same contract as
/// [`crate::search::find_copy_parallel`].
pub fn find_rainbow_copy_parallel(
    coloring: &EdgeColoring,
    spec: &PatternSpec,
    budget: u64,
    workers: usize,
) -> Result<SearchReport> {
    let host = Hypergraph::complete(coloring.n(), coloring.r())?;
    // the host is complete, so edge index == rank
    let colors = coloring.colors_by_rank().to_vec();
    let prepared = Prepared::from_hypergraph(&host, Some(colors))?;
    Ok(run_sharded(&prepared, spec, budget, workers))
}
