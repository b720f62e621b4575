//! The `homfly` command line: invariants, LMOV tables, colored Alexander
//! polynomials, named verification suites and the persistent cache.

mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use homfly_core::combinat::{partitions_up_to, Partition};
use homfly_core::exactalg::QFraction;
use homfly_core::invariants::{Flavor, FramedKnot, InvariantCache, InvariantKey, Knot};
use homfly_core::lmov::{refined_epsilon, LmovPipeline, SeriesFlavor};
use homfly_core::special::colored_alexander;
use homfly_core::suites::{run_suite, SuiteParams, SUITES};
use homfly_core::{Error, ENGINE_VERSION};

pub use report::{CacheRecord, Format, LmovRecord, Record, Report, ValueRecord};

/// Environment variable overriding the cache file location.
pub const CACHE_ENV: &str = "HOMFLY_CACHE";

/// Largest accepted truncation or color weight.
pub const WEIGHT_CAP: u32 = 8;

#[derive(Debug, Parser)]
#[command(name = "homfly", version, about = "Exact colored HOMFLY-PT invariants and integrality checks")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Cache file (default: $XDG_CACHE_HOME/homfly/invariants.json).
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache: Option<PathBuf>,
    /// Do not read or write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a colored invariant.
    Invariant {
        #[arg(long)]
        knot: Knot,
        /// Color, as comma-separated parts.
        #[arg(long)]
        color: Partition,
        /// Color of the reversed strand (unknot only).
        #[arg(long, default_value = "")]
        reverse: Partition,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        framing: i64,
        /// Divide by the unknot value, giving a Laurent polynomial.
        #[arg(long, conflicts_with = "composite")]
        normalized: bool,
        /// Composite invariant `𝒞_λ` (unknot only).
        #[arg(long)]
        composite: bool,
    },
    /// Refined LMOV functions and their integer tables.
    Lmov {
        #[arg(long)]
        knot: Knot,
        /// Framing (default: writhe of the standard diagram).
        #[arg(long, allow_negative_numbers = true)]
        framing: Option<i64>,
        /// Truncation weight D.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=WEIGHT_CAP as i64))]
        max_weight: u32,
        /// Restrict to one μ.
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// Colored Alexander polynomial `A_λ(K; q)`.
    Alexander {
        #[arg(long)]
        knot: Knot,
        #[arg(long, default_value = "1")]
        color: Partition,
    },
    /// Run a named verification suite.
    Verify {
        /// One of the registered suites, or `all`.
        suite: String,
        /// Restrict knot-based suites to this knot.
        #[arg(long)]
        knot: Option<Knot>,
        /// Framing for --knot (default: diagram writhe).
        #[arg(long, allow_negative_numbers = true, requires = "knot")]
        framing: Option<i64>,
        /// Largest color or cycle-type weight to sweep.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=WEIGHT_CAP as i64))]
        max_weight: Option<u32>,
        /// Strand cap for the Hecke suite.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
        n: Option<u32>,
        /// Prime for the alpha, special-lmov and alexander suites.
        #[arg(long)]
        p: Option<u32>,
        /// Framing for the alpha suite.
        #[arg(long, allow_negative_numbers = true)]
        tau: Option<i64>,
        /// Also check the literal sandwich statement in the Hecke suite.
        #[arg(long)]
        literal_sandwich: bool,
    },
    /// Inspect or clear the persistent cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Print the cache file location.
    Path,
    /// Entry count and engine version.
    Stats,
    /// List cached keys.
    List,
    /// Delete every entry.
    Clear,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// `0` when every record passed, `1` otherwise.
pub fn exit_code(results: &[Record]) -> i32 {
    if results.iter().all(Record::passed) {
        0
    } else {
        1
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) | Error::UnsupportedFlavor(_) | Error::UnknownSuite(_) | Error::SizeCap { .. } => 2,
        _ => 1,
    }
}

fn default_cache_path() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("homfly").join("invariants.json"))
}

fn exact_json<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).unwrap_or(serde_json::Value::Null)
}

struct Ctx {
    cache_path: Option<PathBuf>,
}

impl Ctx {
    fn load_cache(&self) -> Result<InvariantCache, Error> {
        match &self.cache_path {
            Some(p) => InvariantCache::load(p),
            None => Ok(InvariantCache::new()),
        }
    }

    fn cached(&self, key: &InvariantKey) -> Result<QFraction, Error> {
        let cache = self.load_cache()?;
        let before = cache.len();
        let value = cache.get_or_compute(key)?;
        if let Some(p) = &self.cache_path {
            if cache.len() != before {
                cache.save(p)?;
            }
        }
        Ok(value)
    }
}

fn invariant(
    ctx: &Ctx,
    knot: Knot,
    color: Partition,
    reverse: Partition,
    framing: i64,
    normalized: bool,
    composite: bool,
) -> Result<Vec<Record>, Error> {
    let flavor = match (normalized, composite) {
        (true, _) => Flavor::Normalized,
        (_, true) => Flavor::Composite,
        _ => Flavor::Framed,
    };
    let key = InvariantKey { knot, color: color.clone(), reverse: reverse.clone(), framing, flavor };
    let value = ctx.cached(&key)?;
    let quantity = match flavor {
        Flavor::Normalized => "normalized",
        Flavor::Composite => "composite",
        _ => "framed",
    };
    let (text, exact) = if flavor == Flavor::Normalized {
        let p = value.to_laurent()?;
        (p.to_string(), exact_json(&p))
    } else {
        (value.to_string(), exact_json(&value))
    };
    Ok(vec![Record::Value(ValueRecord {
        quantity: quantity.into(),
        knot: knot.to_string(),
        framing,
        color: color.to_string(),
        reverse: (!reverse.is_empty()).then(|| reverse.to_string()),
        value: text,
        exact,
    })])
}

fn lmov(knot: Knot, framing: Option<i64>, d: u32, mu: Option<Partition>) -> Result<Vec<Record>, Error> {
    let k = FramedKnot::new(knot, framing.unwrap_or_else(|| knot.writhe()));
    let mus = match mu {
        Some(m) if m.is_empty() || m.weight() > d => {
            return Err(Error::Invalid(format!("μ={m} must be nonempty with |μ| ≤ {d}")))
        }
        Some(m) => vec![m],
        None => partitions_up_to(d).into_iter().skip(1).collect(),
    };
    let pipeline = LmovPipeline::new(k, d, SeriesFlavor::Colored)?;
    let mut out = Vec::new();
    for m in mus {
        let v = pipeline.refined(&m);
        let n = v
            .rewrite
            .as_ref()
            .map(|r| {
                r.rows()
                    .into_iter()
                    .map(|(g, q, n)| {
                        let val = n.to_string().parse::<i64>().map(serde_json::Value::from);
                        (g, q, val.unwrap_or_else(|_| serde_json::Value::from(n.to_string())))
                    })
                    .collect()
            })
            .unwrap_or_default();
        out.push(Record::Lmov(LmovRecord {
            knot: knot.to_string(),
            framing: k.framing,
            mu: m.to_string(),
            verdict: if v.pass { "pass" } else { "fail" }.into(),
            pole: 1,
            epsilon: refined_epsilon(&m),
            n,
            detail: if v.pass { String::new() } else { v.detail },
        }));
    }
    Ok(out)
}

fn alexander(knot: Knot, color: Partition) -> Result<Vec<Record>, Error> {
    let a = colored_alexander(knot, &color)?;
    Ok(vec![Record::Value(ValueRecord {
        quantity: "alexander".into(),
        knot: knot.to_string(),
        framing: 0,
        color: color.to_string(),
        reverse: None,
        value: a.to_string(),
        exact: exact_json(&a),
    })])
}

fn cache_action(ctx: &Ctx, action: CacheAction) -> Result<Vec<Record>, Error> {
    let path = ctx.cache_path.as_ref().ok_or_else(|| Error::Invalid("no cache path configured".into()))?;
    let rec = |k: &str, v: String| Record::Cache(CacheRecord { key: k.into(), value: v });
    Ok(match action {
        CacheAction::Path => vec![rec("path", path.display().to_string())],
        CacheAction::Stats => {
            let cache = InvariantCache::load(path)?;
            vec![
                rec("path", path.display().to_string()),
                rec("engine_version", ENGINE_VERSION.into()),
                rec("entries", cache.len().to_string()),
            ]
        }
        CacheAction::List => InvariantCache::load(path)?
            .keys()
            .into_iter()
            .map(|k| {
                let flavor = serde_json::to_value(k.flavor).ok().and_then(|v| v.as_str().map(String::from));
                let rev = if k.reverse.is_empty() { String::new() } else { format!(" reverse {}", k.reverse) };
                rec(
                    &format!("{} {} (τ={}) {}{rev}", flavor.unwrap_or_default(), k.knot, k.framing, k.color),
                    "cached".into(),
                )
            })
            .collect(),
        CacheAction::Clear => {
            let cache = InvariantCache::load(path)?;
            let n = cache.len();
            cache.clear();
            cache.save(path)?;
            vec![rec("cleared", n.to_string())]
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: String,
    knot: Option<Knot>,
    framing: Option<i64>,
    max_weight: Option<u32>,
    n: Option<u32>,
    p: Option<u32>,
    tau: Option<i64>,
    literal_sandwich: bool,
) -> Result<Vec<Record>, Error> {
    if suite != "all" && !SUITES.contains(&suite.as_str()) {
        return Err(Error::UnknownSuite(format!("{suite} (known: {}, all)", SUITES.join(", "))));
    }
    let params = SuiteParams {
        knot: knot.map(|k| FramedKnot::new(k, framing.unwrap_or_else(|| k.writhe()))),
        max_weight,
        n: n.map(|n| n as usize),
        p,
        tau,
        literal_sandwich,
    };
    Ok(run_suite(&suite, &params)?.into_iter().map(Record::Verdict).collect())
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<(Vec<Record>, bool), Error> {
    Ok(match command {
        Command::Invariant { knot, color, reverse, framing, normalized, composite } => {
            (invariant(ctx, knot, color, reverse, framing, normalized, composite)?, false)
        }
        Command::Lmov { knot, framing, max_weight, mu } => (lmov(knot, framing, max_weight, mu)?, true),
        Command::Alexander { knot, color } => (alexander(knot, color)?, false),
        Command::Verify { suite, knot, framing, max_weight, n, p, tau, literal_sandwich } => {
            (verify(suite, knot, framing, max_weight, n, p, tau, literal_sandwich)?, true)
        }
        Command::Cache { action } => (cache_action(ctx, action)?, false),
    })
}

/// Parses `argv` (program name first), runs the command and renders the report.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let ctx = Ctx { cache_path: if cli.no_cache { None } else { cli.cache.clone().or_else(default_cache_path) } };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let start = Instant::now();
    let result = pool.install(|| dispatch(&ctx, cli.command));
    let wall_time_seconds = start.elapsed().as_secs_f64();
    match result {
        Ok((results, is_check)) => {
            let report =
                Report { engine_version: ENGINE_VERSION.into(), command, wall_time_seconds, results };
            let code = if is_check { exit_code(&report.results) } else { 0 };
            Outcome { code, stdout: report.render(cli.format), stderr: String::new() }
        }
        Err(e) => Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
