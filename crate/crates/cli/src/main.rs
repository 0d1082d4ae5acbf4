//! `ehrhart`: lattice point counts, Ehrhart polynomials, roots and the claim
//! suites from the command line.
//!
//! Every subcommand reads JSON from `--in` (or stdin) and writes JSON to
//! `--out` (or stdout), so the steps compose in shell pipelines:
//!
//! ```text
//! ehrhart family sn --n 3 --l 1 | ehrhart ehrhart | ehrhart roots
//! ```
//!
//! Exit codes: 0 success, 1 domain or input error, 2 a verified claim failed,
//! 64 usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ehrhart_core::counting::{self, CountTable};
use ehrhart_core::ehrhart::interpolate_capped;
use ehrhart_core::families::FamilySpec;
use ehrhart_core::lattice::{LatticePolytope, PolytopeJson};
use ehrhart_core::reflexive::{critical_line_criterion, reflexive_factorization, reflexivity_report};
use ehrhart_core::roots::{critical_line_check, find_roots, sn1_spectrum, DEFAULT_TOL};
use ehrhart_core::serial::EhrhartJson;
use ehrhart_core::verify::{lookup_claim, run_suite, VerifyConfig, CLAIMS};

const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart polynomials of lattice polytopes")]
struct Cli {
    /// Row budget per count; overrides EHRHART_WORK_CAP.
    #[arg(long, global = true)]
    work_cap: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Input JSON file; stdin when omitted or "-".
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice points of the dilates kP and of their interiors.
    Count {
        #[command(flatten)]
        io: Io,
        /// Largest dilate to count.
        #[arg(long, default_value_t = 3)]
        kmax: u64,
        #[arg(long)]
        csv: bool,
    },
    /// Ehrhart polynomial and h*-vector of a polytope.
    Ehrhart {
        #[command(flatten)]
        io: Io,
    },
    /// Roots of an Ehrhart polynomial (or of a polytope's).
    Roots {
        #[command(flatten)]
        io: Io,
        /// Relative residual every root must reach.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        csv: bool,
    },
    /// Build a named family member, e.g. `family sn --n 3 --l 1`.
    Family {
        name: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reflexivity tests and the critical-line criterion.
    Reflexive {
        #[command(subcommand)]
        action: ReflexiveAction,
    },
    /// Imaginary parts of the roots of G(s, S_n(1)).
    Sn1Spectrum {
        #[arg(long)]
        n: usize,
        /// Only the first K values.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the claim suites on fixtures and seeded random polytopes.
    Verify {
        /// A claim id, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random polytopes per pool.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        dim_max: usize,
        /// Print the registered claim ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ReflexiveAction {
    /// Check one polytope.
    Check {
        #[command(flatten)]
        io: Io,
    },
    /// Check every `*.json` polytope in a directory.
    Scan {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Raised when a claim check fails, so `main` can pick exit code 2.
#[derive(Debug)]
struct VerificationFailed(usize);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} claim check(s) failed", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let j: PolytopeJson = serde_json::from_str(text).context("input is not a polytope JSON")?;
    Ok(LatticePolytope::try_from(j)?)
}

fn cmd_count(io: &Io, kmax: u64, csv: bool, cap: u128) -> Result<()> {
    let p = parse_polytope(&read_input(io.input.as_deref())?)?;
    let t = CountTable::build(&p, kmax, cap)?;
    let text = if csv { t.to_csv() } else { pretty(&t)? };
    write_output(io.out.as_deref(), &text)
}

fn cmd_ehrhart(io: &Io, cap: u128) -> Result<()> {
    let p = parse_polytope(&read_input(io.input.as_deref())?)?;
    let e = interpolate_capped(&p, cap)?;
    write_output(io.out.as_deref(), &pretty(&EhrhartJson::new(p.label(), &e)?)?)
}

fn cmd_roots(io: &Io, tol: f64, csv: bool, cap: u128) -> Result<()> {
    if !(tol > 0.0) {
        bail!("--tol must be positive");
    }
    let text = read_input(io.input.as_deref())?;
    let v: Value = serde_json::from_str(&text).context("input is not JSON")?;
    let ej: EhrhartJson = if v.get("vertices").is_some() {
        let p = parse_polytope(&text)?;
        EhrhartJson::new(p.label(), &interpolate_capped(&p, cap)?)?
    } else {
        serde_json::from_value(v).context("input is neither a polytope nor an Ehrhart polynomial")?
    };
    let e = ej.polynomial();
    if e.degree() == 0 {
        bail!("a constant polynomial has no roots");
    }
    let r = find_roots(&e, tol)?;
    let out = if csv {
        let mut s = String::from("re,im,multiplicity,residual\n");
        for z in &r.roots {
            s.push_str(&format!("{},{},{},{:e}\n", z.re_text(), z.im_text(), z.multiplicity, z.residual));
        }
        s
    } else {
        let mut v = serde_json::to_value(&ej)?;
        v["roots"] = serde_json::to_value(&r.roots)?;
        v["real_roots"] =
            json!(r.roots.iter().filter(|z| z.is_real()).map(|z| z.multiplicity).sum::<usize>());
        v["critical_line"] = json!(critical_line_check(&r, tol));
        v["worst_residual"] = json!(r.worst_residual());
        pretty(&v)?
    };
    write_output(io.out.as_deref(), &out)
}

fn cmd_family(name: &str, params: &[(&str, Option<i64>)], out: Option<&Path>) -> Result<()> {
    let given: Vec<(String, i64)> = params
        .iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect();
    let p = FamilySpec::from_parts(name, &given)?.build()?;
    write_output(out, &pretty(&p)?)
}

fn reflexive_json(p: &LatticePolytope) -> Result<Value> {
    let report = reflexivity_report(p)?;
    let mut v = json!({ "label": p.label(), "dim": p.dim(), "report": report });
    if report.is_reflexive && p.dim() <= 4 {
        v["critical_line_criterion"] = serde_json::to_value(critical_line_criterion(p)?)?;
    }
    if report.is_reflexive && (p.dim() == 3 || p.dim() == 4) {
        v["factorization"] = serde_json::to_value(reflexive_factorization(p)?)?;
    }
    Ok(v)
}

fn cmd_reflexive_scan(dir: &Path, out: Option<&Path>) -> Result<()> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    for f in &files {
        let name = f.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let row = fs::read_to_string(f)
            .map_err(anyhow::Error::from)
            .and_then(|t| parse_polytope(&t))
            .and_then(|p| reflexive_json(&p));
        rows.push(match row {
            Ok(mut v) => {
                v["file"] = json!(name);
                v
            }
            Err(e) => json!({ "file": name, "error": format!("{e:#}") }),
        });
    }
    let reflexive = rows.iter().filter(|r| r["report"]["is_reflexive"] == json!(true)).count();
    write_output(out, &pretty(&json!({ "scanned": rows.len(), "reflexive": reflexive, "results": rows }))?)
}

fn cmd_sn1(n: usize, kmax: Option<usize>, tol: f64, csv: bool, out: Option<&Path>) -> Result<()> {
    if !(tol > 0.0) {
        bail!("--tol must be positive");
    }
    let mut b = sn1_spectrum(n, tol)?;
    if let Some(k) = kmax {
        b.truncate(k);
    }
    let text = if csv {
        let mut s = String::from("k,re,im\n");
        for (i, x) in b.iter().enumerate() {
            s.push_str(&format!("{},-0.5,{x:.17e}\n", i + 1));
        }
        s
    } else {
        pretty(&json!({ "n": n, "re": -0.5, "imaginary_parts": b }))?
    };
    write_output(out, &text)
}

fn cmd_verify(cfg: VerifyConfig, suite: &str, list: bool, out: Option<&Path>) -> Result<()> {
    if list {
        let rows: Vec<String> = CLAIMS.iter().map(|c| format!("{}\t{}", c.id, c.statement)).collect();
        return write_output(out, &rows.join("\n"));
    }
    if suite != "all" && lookup_claim(suite).is_none() {
        bail!("unknown claim id {suite:?}; `verify --list` shows the registered ids");
    }
    let report = run_suite(&cfg, suite)?;
    write_output(out, &report.to_json())?;
    eprintln!(
        "{}: {} reports, {} failures, {} discoveries",
        suite, report.total, report.failures, report.discoveries
    );
    if report.failures > 0 {
        return Err(VerificationFailed(report.failures).into());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let cap = cli.work_cap.unwrap_or_else(counting::work_cap_from_env);
    match &cli.command {
        Command::Count { io, kmax, csv } => cmd_count(io, *kmax, *csv, cap),
        Command::Ehrhart { io } => cmd_ehrhart(io, cap),
        Command::Roots { io, tol, csv } => cmd_roots(io, *tol, *csv, cap),
        Command::Family { name, n, l, k, q, out } => {
            cmd_family(name, &[("n", *n), ("l", *l), ("k", *k), ("q", *q)], out.as_deref())
        }
        Command::Reflexive { action: ReflexiveAction::Check { io } } => {
            let p = parse_polytope(&read_input(io.input.as_deref())?)?;
            write_output(io.out.as_deref(), &pretty(&reflexive_json(&p)?)?)
        }
        Command::Reflexive { action: ReflexiveAction::Scan { dir, out } } => {
            cmd_reflexive_scan(dir, out.as_deref())
        }
        Command::Sn1Spectrum { n, kmax, tol, csv, out } => cmd_sn1(*n, *kmax, *tol, *csv, out.as_deref()),
        Command::Verify { suite, seed, trials, dim_max, list, out } => {
            let cfg = VerifyConfig { seed: *seed, trials: *trials, dim_max: *dim_max };
            cmd_verify(cfg, suite, *list, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<VerificationFailed>().is_some() {
                ExitCode::from(EXIT_VERIFY)
            } else {
                ExitCode::from(EXIT_DOMAIN)
            }
        }
    }
}
