//! Command-line front end: formula tables, constructions with certificates,
//! exact oracles, structure diagnostics, and the acceptance audit.
//!
//! Exit codes: 0 = all requested checks pass, 1 = failure or refutation,
//! 2 = indeterminate (some search hit its node budget).

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperar::audit::{run_full, AuditConfig, GridSize};
use hyperar::coloring::EdgeColoring;
use hyperar::construct::{lb_coloring, verify_coloring, verify_hypergraph, Certificate, Verdict};
use hyperar::formulas;
use hyperar::hypergraph::Hypergraph;
use hyperar::oracle;
use hyperar::pattern::PatternSpec;
use hyperar::search::UNBOUNDED;
use hyperar::structure;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INDETERMINATE: u8 = 2;

/// Anti-Ramsey machinery for loose paths and cycles in uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hyperar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed forms over a parameter grid and emit CSV.
    Formulas(FormulasArgs),
    /// Build a lower-bound coloring and certify it rainbow-free.
    Construct(ConstructArgs),
    /// Re-certify a coloring or hypergraph file against pattern specs.
    Verify(VerifyArgs),
    /// Exact maximum pattern-free edge count (branch and bound).
    OracleEx(OracleExArgs),
    /// Exact anti-Ramsey value (restricted-growth partition enumeration).
    OracleAr(OracleArArgs),
    /// Structure diagnostics for a hypergraph or coloring file.
    Analyze(AnalyzeArgs),
    /// Run the full acceptance audit, one pass/fail line per criterion.
    Audit(AuditArgs),
}

/// Inclusive integer range, written `4` or `4..9`.
#[derive(Clone, Copy, Debug)]
struct Range {
    lo: u64,
    hi: u64,
}

impl FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.parse::<u64>().map_err(|_| format!("not an integer: {t:?}"));
        if let Some((a, b)) = s.split_once("..") {
            let (lo, hi) = (parse(a)?, parse(b)?);
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(Range { lo, hi })
        } else {
            let v = parse(s)?;
            Ok(Range { lo: v, hi: v })
        }
    }
}

impl Range {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct FormulasArgs {
    /// Vertex count or range, e.g. 20 or 20..60.
    #[arg(long)]
    n: Range,
    /// Uniformity or range.
    #[arg(long)]
    r: Range,
    /// Pattern length or range (k >= 4).
    #[arg(long)]
    k: Range,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    k: u64,
    /// Directory for the coloring file and its certificate.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Node budget per search; exhausting it yields an indeterminate verdict.
    #[arg(long, default_value_t = UNBOUNDED)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Coloring file (header `n r c`) or hypergraph file (header `n r`).
    file: PathBuf,
    /// Pattern spec, repeatable: loose-path:4, linear-cycle:5, ...
    #[arg(long = "spec", required = true)]
    specs: Vec<String>,
    #[arg(long, default_value_t = UNBOUNDED)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the certificate here as well as to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleExArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    /// Comma-separated pattern specs, e.g. loose-path:2,loose-path:3.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = oracle::DEFAULT_EX_LIMIT)]
    max_edges: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Directory for the witness file.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = oracle::DEFAULT_AR_LIMIT)]
    max_edges: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Hypergraph file, or a coloring file whose representative subgraph is
    /// analyzed.
    file: PathBuf,
    /// Core vertices, comma-separated 1-based ids. Defaults to a greedy
    /// detection of `--t` vertices.
    #[arg(long)]
    core: Option<String>,
    /// Core size for greedy detection when --core is absent.
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Small-pair threshold multiplier; defaults to r·(2t+1).
    #[arg(long)]
    tau: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, value_enum, default_value = "small")]
    grid: Grid,
    /// Seed for every randomized generator in the suite.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the JSON report here as well.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Grid {
    Small,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Formulas(args) => cmd_formulas(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::OracleEx(args) => cmd_oracle_ex(args),
        Command::OracleAr(args) => cmd_oracle_ar(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Audit(args) => cmd_audit(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_formulas(args: FormulasArgs) -> anyhow::Result<u8> {
    let mut rows = Vec::new();
    for r in args.r.iter() {
        for k in args.k.iter() {
            for n in args.n.iter() {
                let ar_loose = formulas::ar_loose(n, r, k)?;
                let ar_linear = formulas::ar_linear(n, r, k)?;
                let ex_loose =
                    formulas::ex_loose(n, r, k, hyperar::Shape::Path, None)?;
                let ex_linear = formulas::ex_linear(n, r, k, hyperar::Shape::Path)?;
                rows.push((n, r, k, ar_loose, ar_linear, ex_loose, ex_linear));
            }
        }
    }
    let content = match args.format {
        Format::Csv => {
            let mut s =
                String::from("n,r,k,ar_loose,ar_linear,ex_loose_path,ex_linear_path,applicability\n");
            for (n, r, k, al, ali, exl, exli) in &rows {
                s.push_str(&format!(
                    "{n},{r},{k},{},{},{},{},asymptotic\n",
                    al.value, ali.value, exl.value, exli.value
                ));
            }
            s
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, r, k, al, ali, exl, exli)| {
                    serde_json::json!({
                        "n": n, "r": r, "k": k,
                        "ar_loose": al.value.to_string(),
                        "ar_linear": ali.value.to_string(),
                        "ex_loose_path": exl.value.to_string(),
                        "ex_linear_path": exli.value.to_string(),
                        "applicability": "asymptotic",
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&items)?)
        }
    };
    emit(&args.out, &content)?;
    Ok(EXIT_PASS)
}

fn certificate_exit(cert: &Certificate) -> u8 {
    match cert.verdict {
        Verdict::CertifiedRainbowFree | Verdict::CertifiedPatternFree => EXIT_PASS,
        Verdict::Refuted => EXIT_FAIL,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<u8> {
    let lb = lb_coloring(args.n, args.r, args.k)?;
    let specs = vec![
        PatternSpec::loose_path(args.k as usize)?,
        PatternSpec::loose_cycle(args.k as usize)?,
    ];
    let cert = verify_coloring(&lb.coloring, &specs, args.budget, args.workers)?;

    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;
    let stem = format!("lb_n{}_r{}_k{}", args.n, args.r, args.k);
    let coloring_path = args.out.join(format!("{stem}.coloring"));
    let cert_path = args.out.join(format!("{stem}.cert.json"));
    std::fs::write(&coloring_path, lb.coloring.to_text())?;
    std::fs::write(&cert_path, format!("{}\n", serde_json::to_string_pretty(&cert)?))?;

    println!(
        "{}",
        serde_json::json!({
            "colors_used": lb.colors_used,
            "core": lb.core.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "parity": lb.parity,
            "verdict": cert.verdict,
            "coloring": coloring_path.display().to_string(),
            "certificate": cert_path.display().to_string(),
        })
    );
    Ok(certificate_exit(&cert))
}

fn parse_specs(texts: &[String]) -> anyhow::Result<Vec<PatternSpec>> {
    texts
        .iter()
        .map(|t| Ok(PatternSpec::parse(t)?))
        .collect()
}

/// A coloring header has three fields, a hypergraph header two.
fn sniff_coloring(text: &str) -> anyhow::Result<bool> {
    for raw in text.lines() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        return Ok(match content.split_whitespace().count() {
            2 => false,
            3 => true,
            other => bail!("header has {other} fields, expected 'n r' or 'n r c'"),
        });
    }
    bail!("the file has no header line");
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let specs = parse_specs(&args.specs)?;
    let cert = if sniff_coloring(&text)? {
        let coloring = EdgeColoring::parse(&text)?;
        verify_coloring(&coloring, &specs, args.budget, args.workers)?
    } else {
        let h = Hypergraph::parse(&text)?;
        verify_hypergraph(&h, &specs, args.budget, args.workers)?
    };
    let rendered = format!("{}\n", serde_json::to_string_pretty(&cert)?);
    if let Some(path) = &args.out {
        std::fs::write(path, &rendered)?;
    }
    print!("{rendered}");
    Ok(certificate_exit(&cert))
}

fn parse_family(text: &str) -> anyhow::Result<Vec<PatternSpec>> {
    text.split(',')
        .map(|t| Ok(PatternSpec::parse(t.trim())?))
        .collect()
}

fn family_label(family: &[PatternSpec]) -> String {
    family
        .iter()
        .map(|s| s.to_string().replace(':', ""))
        .collect::<Vec<_>>()
        .join("_")
}

fn cmd_oracle_ex(args: OracleExArgs) -> anyhow::Result<u8> {
    let family = parse_family(&args.family)?;
    let start = Instant::now();
    let res = oracle::brute_ex(args.n, args.r, &family, args.max_edges, args.workers)?;
    let wall_ms = start.elapsed().as_millis();

    std::fs::create_dir_all(&args.out)?;
    let witness_path = args.out.join(format!(
        "ex_n{}_r{}_{}.hypergraph",
        args.n,
        args.r,
        family_label(&family)
    ));
    std::fs::write(&witness_path, res.witness.to_text())?;
    println!(
        "{}",
        serde_json::json!({
            "value": res.value,
            "witness": witness_path.display().to_string(),
            "nodes": res.nodes,
            "wall_ms": wall_ms,
        })
    );
    Ok(EXIT_PASS)
}

fn cmd_oracle_ar(args: OracleArArgs) -> anyhow::Result<u8> {
    let family = parse_family(&args.family)?;
    let start = Instant::now();
    let res = oracle::brute_ar(args.n, args.r, &family, args.max_edges, args.workers)?;
    let wall_ms = start.elapsed().as_millis();

    std::fs::create_dir_all(&args.out)?;
    let witness_path = res.witness.as_ref().map(|w| {
        let path = args.out.join(format!(
            "ar_n{}_r{}_{}.coloring",
            args.n,
            args.r,
            family_label(&family)
        ));
        std::fs::write(&path, w.to_text()).map(|_| path)
    });
    let witness_path = match witness_path {
        Some(Ok(p)) => Some(p.display().to_string()),
        Some(Err(e)) => return Err(e.into()),
        None => None,
    };
    println!(
        "{}",
        serde_json::json!({
            "value": match res.value {
                oracle::OracleValue::Exact(v) => serde_json::json!(v),
                oracle::OracleValue::Unattainable => serde_json::json!("unattainable"),
            },
            "max_rainbow_free_colors": res.max_colors,
            "witness": witness_path,
            "nodes": res.nodes,
            "wall_ms": wall_ms,
        })
    );
    Ok(EXIT_PASS)
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let (h, colors) = if sniff_coloring(&text)? {
        let coloring = EdgeColoring::parse(&text)?;
        let rep = coloring.representative_subgraph();
        (rep, Some(coloring.color_count()))
    } else {
        (Hypergraph::parse(&text)?, None)
    };

    let core: Vec<u32> = match &args.core {
        Some(list) => {
            let mut core = Vec::new();
            for token in list.split(',') {
                let v: u32 = token
                    .trim()
                    .parse()
                    .with_context(|| format!("bad core vertex {token:?}"))?;
                if v == 0 || v > h.n() {
                    bail!("core vertex {v} out of range 1..={}", h.n());
                }
                core.push(v - 1);
            }
            core
        }
        None => structure::greedy_core_detect(&h, args.t)?,
    };
    let t = core.len();
    let tau = args.tau.unwrap_or(h.r() as u64 * (2 * t as u64 + 1));

    let decomposition = structure::decompose(&h, &core, tau)?;
    let counts = structure::edge_class_counts(&h, &core, &decomposition.outside)?;
    let small_pairs = structure::tau_small_pairs(&h, &core, tau)?;
    let cross_missing_rhs = core.len() as u64
        * hyperar::binom::binom(h.n() as u64 - core.len() as u64, h.r() as u64 - 1);

    let report = serde_json::json!({
        "n": h.n(),
        "r": h.r(),
        "edges": h.edge_count(),
        "representative_of_colors": colors,
        "core": core.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "tau": tau,
        "threshold": structure::small_threshold(h.n(), h.r(), tau),
        "small_pairs": small_pairs.len(),
        "small_vertices": decomposition.small.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "outside_count": decomposition.outside.len(),
        "cross": counts.cross,
        "missing": counts.missing,
        "cross_plus_missing": counts.cross + counts.missing,
        "cross_missing_identity_rhs": cross_missing_rhs,
        "e_i": counts.e_i,
        "htilde_edges": counts.htilde_edges,
        "f1": counts.f1,
        "f2_plus": counts.f2_plus,
        "identities_hold": counts.cross + counts.missing == cross_missing_rhs
            && counts.e_i.iter().sum::<u64>() == counts.htilde_edges,
    });
    let rendered = format!("{}\n", serde_json::to_string_pretty(&report)?);
    if let Some(path) = &args.out {
        std::fs::write(path, &rendered)?;
    }
    print!("{rendered}");
    Ok(EXIT_PASS)
}

fn cmd_audit(args: AuditArgs) -> anyhow::Result<u8> {
    let cfg = AuditConfig {
        seed: args.seed,
        workers: args.workers,
        grid: match args.grid {
            Grid::Small => GridSize::Small,
            Grid::Full => GridSize::Full,
        },
    };
    let report = run_full(&cfg)?;
    print!("{}", report.render());
    if let Some(path) = &args.out {
        let json: Vec<serde_json::Value> = report
            .criteria
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "name": c.name,
                    "passed": c.passed,
                    "details": c.details,
                })
            })
            .collect();
        std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&json)?))?;
    }
    if report.all_passed() {
        Ok(EXIT_PASS)
    } else if report
        .criteria
        .iter()
        .any(|c| !c.passed && c.details.contains("Indeterminate"))
    {
        Ok(EXIT_INDETERMINATE)
    } else {
        Ok(EXIT_FAIL)
    }
}
