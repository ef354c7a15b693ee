//! The full acceptance suite as a library call: exact small-case
//! reproduction plus the property checks, each criterion reported as one
//! pass/fail line with deterministic details.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::find_rainbow_copy_parallel;
use crate::construct::{lb_coloring, verify_coloring, Verdict};
use crate::formulas::{consistency_audit, standard_grid};
use crate::hypergraph::Hypergraph;
use crate::instances::{planted_extension, random_coloring, random_hypergraph};
use crate::naive::{naive_find_copy, naive_find_rainbow_copy};
use crate::oracle::{brute_ar, brute_ex, OracleValue};
use crate::pattern::{classify_sequence, PatternSpec, Shape};
use crate::search::{find_copy, find_copy_parallel, SearchStatus, UNBOUNDED};
use crate::structure::{decompose, edge_class_counts, extend_rainbow};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSize {
    /// The stated acceptance parameters.
    Small,
    /// Extended formula grid.
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct AuditConfig {
    pub seed: u64,
    pub workers: usize,
    pub grid: GridSize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            seed: 0,
            workers: 1,
            grid: GridSize::Small,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}]: {} — {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.details
        )
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub criteria: Vec<CriterionResult>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&c.line());
            out.push('\n');
        }
        out
    }
}

fn result(id: u8, name: &'static str, passed: bool, details: String) -> CriterionResult {
    CriterionResult {
        id,
        name,
        passed,
        details,
    }
}

/// Criterion 1: the exact anti-Ramsey oracle reproduces the short-path value
/// ar(5,3,P_2) = 2 by enumerating the 10-edge partition lattice.
pub fn criterion_1(cfg: &AuditConfig) -> Result<CriterionResult> {
    let spec = PatternSpec::loose_path(2)?;
    let res = brute_ar(5, 3, &[spec], 12, cfg.workers)?;
    let passed = res.value == OracleValue::Exact(2) && res.max_colors == 1;
    Ok(result(
        1,
        "short-path oracle reproduction",
        passed,
        format!("oracle ar(5,3,loose-path:2) = {:?}, max rainbow-free colors = {}", res.value, res.max_colors),
    ))
}

/// Criterion 2: the even construction on (10,3,4) uses exactly 37 colors and
/// is certified rainbow-free for loose P_4 and C_4 by exhaustive search.
pub fn criterion_2(cfg: &AuditConfig) -> Result<CriterionResult> {
    construction_certificate(2, "even-case construction certificate", 10, 3, 4, 37, cfg)
}

/// Criterion 3: the odd construction on (11,3,5) uses exactly 47 colors and
/// is certified rainbow-free for loose P_5 and C_5.
pub fn criterion_3(cfg: &AuditConfig) -> Result<CriterionResult> {
    construction_certificate(3, "odd-case construction certificate", 11, 3, 5, 47, cfg)
}

fn construction_certificate(
    id: u8,
    name: &'static str,
    n: u32,
    r: u32,
    k: u64,
    expected_colors: u64,
    cfg: &AuditConfig,
) -> Result<CriterionResult> {
    let lb = lb_coloring(n, r, k)?;
    let specs = [
        PatternSpec::loose_path(k as usize)?,
        PatternSpec::loose_cycle(k as usize)?,
    ];
    let cert = verify_coloring(&lb.coloring, &specs, UNBOUNDED, cfg.workers)?;
    let passed = lb.colors_used == expected_colors && cert.verdict == Verdict::CertifiedRainbowFree;
    let nodes: Vec<String> = cert
        .checks
        .iter()
        .map(|c| format!("{}={:?}({} nodes)", c.spec, c.status, c.nodes_expanded))
        .collect();
    Ok(result(
        id,
        name,
        passed,
        format!(
            "colors_used = {} (expected {expected_colors}), verdict = {:?}, {}",
            lb.colors_used,
            cert.verdict,
            nodes.join(", ")
        ),
    ))
}

/// Criterion 4: the formula identities hold with zero violations over the
/// full grid.
pub fn criterion_4(cfg: &AuditConfig) -> Result<CriterionResult> {
    let n_max = match cfg.grid {
        GridSize::Small => 60,
        GridSize::Full => 100,
    };
    let grid = standard_grid(n_max);
    let report = consistency_audit(&grid);
    Ok(result(
        4,
        "closed-form identity audit",
        report.passed(),
        format!(
            "{} grid points, {} violations (n up to {n_max})",
            report.points_checked,
            report.violations.len()
        ),
    ))
}

/// Criterion 5: Turán oracle coherence on the pinned small cases, with every
/// witness re-verified pattern-free by the independent search engine.
pub fn criterion_5(cfg: &AuditConfig) -> Result<CriterionResult> {
    let p2 = PatternSpec::loose_path(2)?;
    let p3 = PatternSpec::loose_path(3)?;

    let a = brute_ex(5, 3, &[p2], 40, cfg.workers)?;
    let b = brute_ex(6, 3, &[p2], 40, cfg.workers)?;
    let c = brute_ex(7, 3, &[p3], 40, cfg.workers)?;

    let mut ok = a.value == 1 && b.value == 2 && c.value >= 15;

    // the full star at vertex 0 must be feasible for the P_3 instance
    let star: Vec<_> = Hypergraph::complete(7, 3)?
        .edges()
        .filter(|e| e.contains(0))
        .collect();
    let star_h = Hypergraph::new(7, 3, star)?;
    ok &= star_h.edge_count() == 15;
    ok &= find_copy(&star_h, &p3, UNBOUNDED)?.status == SearchStatus::None;

    // witness coherence
    for (res, spec) in [(&a, &p2), (&b, &p2), (&c, &p3)] {
        ok &= res.witness.edge_count() == res.value;
        ok &= find_copy(&res.witness, spec, UNBOUNDED)?.status == SearchStatus::None;
    }
    Ok(result(
        5,
        "Turán oracle coherence",
        ok,
        format!(
            "ex(5,3,P2)={}, ex(6,3,P2)={}, ex(7,3,P3)={} (star feasible at 15), all witnesses re-verified free",
            a.value, b.value, c.value
        ),
    ))
}

/// Criterion 6: the crossing/missing and E_i counting identities hold on 100
/// random (H, L) instances.
pub fn criterion_6(cfg: &AuditConfig) -> Result<CriterionResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6);
    let mut checked = 0;
    for trial in 0..100u32 {
        let r = if trial % 2 == 0 { 3 } else { 4 };
        let n = rng.gen_range((r + 3)..=12);
        let total = crate::binom::binom(n as u64, r as u64);
        let m = rng.gen_range(0..=total);
        let h = random_hypergraph(n, r, m, &mut rng)?;
        let core_size = rng.gen_range(1..=2usize.min(n as usize - 2));
        let core: Vec<u32> = (0..core_size as u32).collect();
        let tau = rng.gen_range(1..=4);
        let d = decompose(&h, &core, tau)?;
        let counts = edge_class_counts(&h, &core, &d.outside)?;
        let expected =
            core.len() as u64 * crate::binom::binom(n as u64 - core.len() as u64, r as u64 - 1);
        if counts.cross + counts.missing != expected {
            return Ok(result(
                6,
                "counting identities",
                false,
                format!("cross+missing broke at trial {trial} (n={n}, r={r})"),
            ));
        }
        if counts.e_i.iter().sum::<u64>() != counts.htilde_edges {
            return Ok(result(
                6,
                "counting identities",
                false,
                format!("E_i partition broke at trial {trial}"),
            ));
        }
        checked += 1;
    }
    Ok(result(
        6,
        "counting identities",
        checked == 100,
        format!("{checked}/100 random instances satisfied both identities exactly"),
    ))
}

/// Criterion 7: the constructive rainbow extension succeeds on all 50 seeded
/// planted instances, for every i ≤ t in both path and cycle modes.
pub fn criterion_7(cfg: &AuditConfig) -> Result<CriterionResult> {
    let mut successes = 0;
    let mut attempts = 0;
    for instance in 0..50u64 {
        let t = 1 + (instance % 2) as usize;
        let ell = 3 + ((instance / 2) % 2) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (0x7000 + instance));
        let inst = planted_extension(40, 3, t, ell, &mut rng)?;
        for mode in [Shape::Path, Shape::Cycle] {
            for i in 1..=t {
                attempts += 1;
                let w = extend_rainbow(&inst.coloring, &inst.host, &inst.core, &inst.path, mode, i)?;
                let good = w.len() == ell + 2 * i
                    && classify_sequence(w.edges(), w.spec()).is_ok()
                    && inst.coloring.is_rainbow(w.edges())?;
                if good {
                    successes += 1;
                }
            }
        }
    }
    Ok(result(
        7,
        "rainbow extension suite",
        successes == attempts,
        format!("{successes}/{attempts} extensions verified on 50 planted instances"),
    ))
}

/// Criterion 8: the pruned searches agree with the unpruned enumerator on
/// all small hosts and 20 random colorings each.
pub fn criterion_8(cfg: &AuditConfig) -> Result<CriterionResult> {
    let specs: Vec<PatternSpec> = {
        let mut v = Vec::new();
        for k in 2..=4 {
            v.push(PatternSpec::loose_path(k)?);
            v.push(PatternSpec::linear_path(k)?);
        }
        for k in 3..=4 {
            v.push(PatternSpec::loose_cycle(k)?);
            v.push(PatternSpec::linear_cycle(k)?);
        }
        v
    };
    let mut comparisons = 0u64;
    let mut disagreements = 0u64;
    for n in 4..=7u32 {
        let host = Hypergraph::complete(n, 3)?;
        for spec in &specs {
            let pruned = find_copy_parallel(&host, spec, UNBOUNDED, cfg.workers)?;
            let naive = naive_find_copy(&host, spec)?;
            comparisons += 1;
            if pruned.found() != naive.is_some() {
                disagreements += 1;
            }
        }
        let total = crate::binom::binom(n as u64, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (0x8000 + n as u64));
        for trial in 0..20u32 {
            // alternate few colors (rainbow-free heavy) and many colors
            let c = if trial % 2 == 0 {
                rng.gen_range(1..=3.min(total as u32))
            } else {
                rng.gen_range((total as u32 / 2).max(1)..=total as u32)
            };
            let coloring = random_coloring(n, 3, c, &mut rng)?;
            for spec in &specs {
                let pruned = find_rainbow_copy_parallel(&coloring, spec, UNBOUNDED, cfg.workers)?;
                let naive = naive_find_rainbow_copy(&coloring, spec)?;
                comparisons += 1;
                if pruned.found() != naive.is_some() {
                    disagreements += 1;
                }
            }
        }
    }
    Ok(result(
        8,
        "search cross-validation",
        disagreements == 0,
        format!("{comparisons} pruned-vs-naive comparisons, {disagreements} disagreements"),
    ))
}

/// Runs criteria 1 through 8.
pub fn run_criteria(cfg: &AuditConfig) -> Result<Vec<CriterionResult>> {
    Ok(vec![
        criterion_1(cfg)?,
        criterion_2(cfg)?,
        criterion_3(cfg)?,
        criterion_4(cfg)?,
        criterion_5(cfg)?,
        criterion_6(cfg)?,
        criterion_7(cfg)?,
        criterion_8(cfg)?,
    ])
}

/// Criterion 9: determinism. Re-runs the whole value pipeline with the same
/// seed and again with four workers; all rendered value lines must match
/// byte for byte.
pub fn criterion_9(cfg: &AuditConfig, baseline: &[CriterionResult]) -> Result<CriterionResult> {
    let render = |cs: &[CriterionResult]| {
        cs.iter().map(|c| c.line()).collect::<Vec<_>>().join("\n")
    };
    let base = render(baseline);
    let rerun = render(&run_criteria(cfg)?);
    let four = render(&run_criteria(&AuditConfig {
        workers: 4,
        ..*cfg
    })?);
    let passed = base == rerun && base == four;
    Ok(result(
        9,
        "determinism",
        passed,
        format!(
            "same-seed rerun identical: {}; 1-vs-4-worker values identical: {}",
            base == rerun,
            base == four
        ),
    ))
}

/// The full acceptance audit, criteria 1–9.
pub fn run_full(cfg: &AuditConfig) -> Result<AuditReport> {
    let mut criteria = run_criteria(cfg)?;
    let nine = criterion_9(cfg, &criteria)?;
    criteria.push(nine);
    Ok(AuditReport { criteria })
}
