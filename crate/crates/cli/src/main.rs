use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use hyperschubert::fga::FglMode;
use hyperschubert::gkm::{render_value, rho, ClassId, ClassKind, ClassTable, GkmClass};
use hyperschubert::roots::{parse_elem, parse_word, render_elem, CartanSpec, Family};
use hyperschubert::verify::{self, small_systems, Report, Workspace};

#[derive(Parser)]
#[command(name = "hyperschubert", version, about = "Hyperbolic Bott-Samelson and KL-Schubert classes")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Opts {
    /// Root system family: A, B, C, D or G2.
    #[arg(long, global = true)]
    family: Option<Family>,
    /// Rank (defaults to 2 for G2).
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Formal group law: generic, additive, ktheory, lorentz or hecke.
    /// Defaults to hecke for `compute kls`, generic otherwise.
    #[arg(long, global = true)]
    mode: Option<FglMode>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, global = true, value_enum, default_value = "canonical")]
    display: Display,
    /// Directory for KL table caches.
    #[arg(long, global = true, env = "HYPERSCHUBERT_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Report 0 ms for every check, so reports compare byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
    /// No progress lines on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Display {
    Canonical,
    Bracket,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the values of one class at every element.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
        /// Word for `bs`, e.g. 1,2,1.
        #[arg(long)]
        word: Option<String>,
        /// Element for `kls` and `smooth`: s1,s0,s1, 312 or "2 -1 3".
        #[arg(long)]
        element: Option<String>,
        /// Index for `rho`.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i32>,
    },
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Run the suites listed in a TOML file.
    Batch { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bs,
    Kls,
    Smooth,
    Point,
    Rho,
}

#[derive(Clone, Copy, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Suite {
    Fgl,
    Lemma0,
    Relations,
    Hecke,
    Examples,
    Mainthm,
    SmoothAgree,
    Positivity,
    KtheoryLimit,
    Lemmas,
    Combin,
    Triangularity,
}

#[derive(Deserialize)]
struct Batch {
    run: Vec<BatchItem>,
}

#[derive(Deserialize)]
struct BatchItem {
    suite: Suite,
    family: Option<String>,
    rank: Option<usize>,
    mode: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let o = cli.opts;
    rayon::ThreadPoolBuilder::new().num_threads(o.jobs).build_global().context("thread pool")?;
    let ws = Workspace::new(o.cache.clone());
    match cli.cmd {
        Cmd::Compute { kind, word, element, k } => {
            let table = compute(&ws, &o, kind, word, element, k)?;
            match o.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&table)?),
                Format::Text => print!("{}", table.to_text()),
            }
            Ok(true)
        }
        Cmd::Check { suite } => {
            let reports = check(&ws, &o, suite, o.family, o.rank, o.mode)?;
            emit(&o, reports)
        }
        Cmd::Batch { file } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let batch: Batch = toml::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
            let mut all = Vec::new();
            for item in batch.run {
                let family = item.family.map(|f| f.parse()).transpose()?;
                let mode = item.mode.map(|m| m.parse()).transpose()?;
                all.extend(check(&ws, &o, item.suite, family, item.rank, mode)?);
            }
            emit(&o, all)
        }
    }
}

fn emit(o: &Opts, mut reports: Vec<Report>) -> Result<bool> {
    if o.no_timing {
        for c in reports.iter_mut().flat_map(|r| r.checks.iter_mut()) {
            c.millis = 0;
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    match o.format {
        Format::Json => {
            let v = serde_json::json!({ "passed": ok, "reports": reports });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => {
            for r in &reports {
                print!("{}", r.to_text());
            }
            println!("{}", if ok { "all checks passed" } else { "some checks failed" });
        }
    }
    Ok(ok)
}

fn require_spec(family: Option<Family>, rank: Option<usize>) -> Result<CartanSpec> {
    let Some(f) = family else { bail!("--family is required") };
    let r = match (f, rank) {
        (_, Some(r)) => r,
        (Family::G2, None) => 2,
        _ => bail!("--rank is required for family {f}"),
    };
    Ok(CartanSpec::new(f, r)?)
}

fn progress(o: &Opts, msg: &str) {
    if !o.quiet {
        eprintln!("{msg}");
    }
}

fn compute(
    ws: &Workspace,
    o: &Opts,
    kind: Kind,
    word: Option<String>,
    element: Option<String>,
    k: Option<i32>,
) -> Result<ClassTable> {
    let spec = require_spec(o.family, o.rank)?;
    let default = if matches!(kind, Kind::Kls) { FglMode::Hecke } else { FglMode::GenericHyperbolic };
    let mode = o.mode.unwrap_or(default);
    let sp = ws.space(spec, mode)?;
    let g = sp.group().clone();
    let elem = |e: &Option<String>| -> Result<usize> {
        let e = e.as_deref().context("--element is required")?;
        Ok(parse_elem(&g, e)?)
    };
    progress(o, &format!("computing on {spec} ({} elements, {} mode)", g.size(), mode.name()));
    let mut note = None;
    let (kind, index, class): (ClassKind, String, GkmClass) = match kind {
        Kind::Bs => {
            let w = word.context("--word is required")?;
            let parsed = if w.trim().is_empty() { vec![] } else { parse_word(g.system(), &w)? };
            (ClassKind::BottSamelson, w, (*sp.bott_samelson(&parsed)?).clone())
        }
        Kind::Kls => {
            let w = elem(&element)?;
            (ClassKind::KlSchubert, g.render_word(w), (*sp.kl_schubert(w)?).clone())
        }
        Kind::Smooth => {
            let w = elem(&element)?;
            if !sp.hecke().rationally_smooth(w) {
                note = Some(format!("{} is not rationally smooth: formula value, not a class", render_elem(&g, w)));
            }
            (ClassKind::Smooth, g.render_word(w), sp.smooth_class(w))
        }
        Kind::Point => (ClassKind::Point, String::new(), sp.point_class()),
        Kind::Rho => {
            let k = k.context("--k is required")?;
            (ClassKind::Rho, k.to_string(), rho(&sp, k)?)
        }
    };
    let render = |f: &_| match o.display {
        Display::Canonical => sp.fga().render(f),
        Display::Bracket => render_value(&sp, f),
    };
    let mut table = ClassTable::new(sp.fga(), &g, ClassId { kind, index }, &class, render);
    table.note = note;
    Ok(table)
}

fn specs_or(family: Option<Family>, rank: Option<usize>, default: Vec<CartanSpec>) -> Result<Vec<CartanSpec>> {
    if family.is_none() && rank.is_none() {
        return Ok(default);
    }
    Ok(vec![require_spec(family, rank)?])
}

fn list(items: &[(Family, usize)]) -> Vec<CartanSpec> {
    items.iter().map(|&(f, r)| verify::spec(f, r)).collect()
}

fn check(
    ws: &Workspace,
    o: &Opts,
    suite: Suite,
    family: Option<Family>,
    rank: Option<usize>,
    mode: Option<FglMode>,
) -> Result<Vec<Report>> {
    use Family::*;
    let per = |default: Vec<CartanSpec>, f: &dyn Fn(CartanSpec) -> Report| -> Result<Vec<Report>> {
        let mut out = Vec::new();
        for s in specs_or(family, rank, default)? {
            progress(o, &format!("checking {s}"));
            out.push(f(s));
        }
        Ok(out)
    };
    let reports = match suite {
        Suite::Fgl => vec![verify::fgl(mode.unwrap_or(FglMode::GenericHyperbolic))],
        Suite::Lemma0 => vec![verify::lemma0(ws)],
        Suite::Relations => {
            let m = mode.unwrap_or(FglMode::GenericHyperbolic);
            per(small_systems(), &|s| verify::relations(ws, s, m))?
        }
        Suite::Hecke => per(list(&[(A, 2), (A, 3), (B, 2), (C, 2), (G2, 2)]), &|s| verify::hecke(ws, s))?,
        Suite::Examples => vec![verify::examples(ws), verify::example_bsa3(ws)],
        Suite::Mainthm => per(list(&[(A, 1), (A, 2), (A, 3), (C, 2), (C, 3)]), &|s| verify::mainthm(ws, s))?,
        Suite::SmoothAgree => {
            let mut out = per(small_systems(), &|s| verify::distinct_products(ws, s))?;
            out.extend(per(list(&[(A, 3), (C, 2), (G2, 2)]), &|s| verify::mainconj(ws, s))?);
            out
        }
        Suite::Positivity => vec![verify::positivity(ws)],
        Suite::KtheoryLimit => per(list(&[(A, 2), (C, 2), (A, 3)]), &|s| verify::ktheory_limit(ws, s))?,
        Suite::Lemmas => per(list(&[(A, 2), (A, 3), (C, 2), (C, 3)]), &|s| verify::lemmas(ws, s))?,
        Suite::Combin => per(list(&[(A, 2), (B, 2), (C, 2), (G2, 2)]), &|s| verify::combin(ws, s))?,
        Suite::Triangularity => per(list(&[(A, 2), (C, 2)]), &|s| verify::triangularity(ws, s))?,
    };
    Ok(reports)
}

