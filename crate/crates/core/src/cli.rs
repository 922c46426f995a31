//! Command-line front end. [`run`] takes the argument list and writers and
//! returns the process exit code: 0 when every requested check passes, 1 on
//! a failed check, 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::formalg::{primitive_space_symbolic, radical_quotient_dim, GeneratorSet};
use crate::hallfq::cache::TableCache;
use crate::hallfq::{primitive_space_fq, span_analysis_mode, Twist, DEFAULT_BUDGET, DEFAULT_TWIST};
use crate::qring::Prime;
use crate::quiverlab::{
    bridge_type, cartan_matrix, enumerate_flag_types, flag_dims, presets, DimensionVector, FlagMode, FlagType, Quiver,
};
use crate::theorems::{self, DegreeBound, SuiteConfig, VerificationReport};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "QUIVERHALL_CACHE_DIR";
/// Bumped whenever cached payloads change meaning.
pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+1");

#[derive(Parser, Debug)]
#[command(name = "quiverhall", version, about = "Quantum algebras of quivers with loops, checked two ways")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest `E_V(F_q)` enumerated in full.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u128,
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Sym,
    Hall,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Concatenation,
    Calibrate,
    Serre,
    EngineCross,
    CEquiv,
    MDims,
    Primitive,
    Orientation,
    VectorBundle,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Borcherds-Cartan matrix with real/imaginary tags.
    Cartan { file: String },
    /// Graded dimension at one degree from either engine.
    Dims {
        file: String,
        #[arg(long)]
        nu: String,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u64>,
        /// Use every flag type instead of full-flag types only.
        #[arg(long)]
        all_types: bool,
    },
    /// Flag types of a degree with their dimensions.
    Flags {
        file: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        full_flag: bool,
    },
    /// Primitive space at `m e_i`.
    Primitive {
        file: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        file: String,
        #[arg(long)]
        file2: Option<String>,
        /// Total degree (`3`) or a componentwise bound (`2,2`).
        #[arg(long, default_value = "3")]
        nu_max: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u64>,
        /// `sign,diag,offset` of the induction twist.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
        /// Replace a Cartan entry on the symbolic side: `i,j,value` with labels.
        #[arg(long, allow_hyphen_values = true)]
        cartan_entry: Option<String>,
    },
    /// Expand imaginary multi-steps of a flag type into unit steps.
    Bridge {
        file: String,
        #[arg(long = "type")]
        flag_type: String,
    },
}

/// Reads a quiver file; `preset:<name>` selects a built-in quiver.
pub fn load_quiver(path: &str) -> Result<Quiver> {
    if let Some(name) = path.strip_prefix("preset:") {
        return presets::by_name(name)
            .ok_or_else(|| Error::Parse(format!("unknown preset `{name}`; known: {}", presets::NAMES.join(", "))));
    }
    Quiver::load(path).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        other => other,
    })
}

/// Content-addressed store for command payloads.
#[derive(Clone, Debug)]
pub struct ResultCache {
    dir: Option<PathBuf>,
}

/// Where a payload came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Cached,
}

impl ResultCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn key(parts: &[&str]) -> String {
        let mut h = Sha256::new();
        h.update(TOOL_VERSION.as_bytes());
        for p in parts {
            h.update([0]);
            h.update(p.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Serves a stored payload when one with this key and the current tool
    /// version is intact; otherwise runs `producer` and stores its output.
    /// Damaged entries are removed, I/O trouble only costs a warning.
    pub fn get_or_compute<F>(&self, key: &str, warn: &mut dyn Write, producer: F) -> Result<(String, Provenance)>
    where
        F: FnOnce() -> Result<String>,
    {
        let Some(path) = self.path(key) else {
            return Ok((producer()?, Provenance::Computed));
        };
        if let Ok(text) = std::fs::read_to_string(&path) {
            match read_entry(&text, key) {
                Some(Some(payload)) => return Ok((payload, Provenance::Cached)),
                Some(None) => {}
                None => {
                    let _ = writeln!(warn, "warning: evicting damaged cache entry {}", path.display());
                    let _ = std::fs::remove_file(&path);
                }
            }
        }
        let payload = producer()?;
        if let Err(e) = write_entry(&path, key, &payload) {
            let _ = writeln!(warn, "warning: cache write failed ({e}); continuing without cache");
        }
        Ok((payload, Provenance::Computed))
    }
}

fn digest(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// `None` for a damaged entry, `Some(None)` for another version's entry.
fn read_entry(text: &str, key: &str) -> Option<Option<String>> {
    let v: Value = serde_json::from_str(text).ok()?;
    let payload = v.get("payload")?.as_str()?;
    if v.get("key")?.as_str()? != key || v.get("sha256")?.as_str()? != digest(payload) {
        return None;
    }
    if v.get("version")?.as_str()? != TOOL_VERSION {
        return Some(None);
    }
    Some(Some(payload.to_string()))
}

fn write_entry(path: &Path, key: &str, payload: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let entry = json!({ "version": TOOL_VERSION, "key": key, "payload": payload, "sha256": digest(payload) });
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_string(&entry).expect("entry serializes"))?;
    std::fs::rename(tmp, path)
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(ok) => i32::from(!ok),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn primes(qs: &[u64]) -> Result<Vec<Prime>> {
    qs.iter().map(|&p| Prime::new(p)).collect()
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, text: &str) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Text => write!(out, "{text}")?,
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let g = &cli.global;
    let cache_dir = if g.no_cache { None } else { g.cache_dir.clone() };
    let results = ResultCache::new(cache_dir.clone());
    let cfg = SuiteConfig {
        budget: g.budget,
        seed: g.seed,
        cache: cache_dir.map(|d| TableCache::new(d.join("tables"))),
    };
    match &cli.command {
        Command::Cartan { file } => {
            let q = load_quiver(file)?;
            let c = cartan_matrix(&q);
            let tags: Vec<&str> = c.real.iter().map(|&r| if r { "real" } else { "imaginary" }).collect();
            let v = json!({ "labels": c.labels, "matrix": c.entries, "tags": tags });
            emit(out, g.format, &v, &c.to_text())?;
            Ok(true)
        }
        Command::Bridge { file, flag_type } => {
            let q = load_quiver(file)?;
            let f = FlagType::parse(&q, flag_type)?;
            let b = bridge_type(&q, &f);
            let v = json!({ "input": f.display(&q), "bridge": b.display(&q) });
            emit(out, g.format, &v, &format!("{}\n", b.display(&q)))?;
            Ok(true)
        }
        Command::Flags { file, nu, full_flag } => {
            let q = load_quiver(file)?;
            let nu = DimensionVector::parse(&q, nu)?;
            let mode = if *full_flag { FlagMode::FullFlag } else { FlagMode::All };
            let mut rows = Vec::new();
            let mut text = String::new();
            for f in enumerate_flag_types(&q, &nu, mode) {
                let d = flag_dims(&q, &f);
                text.push_str(&format!(
                    "{}  dim_flag={} dim_tilde={} points={}\n",
                    f.display(&q),
                    d.dim_flag,
                    d.dim_tilde,
                    d.flag_point_count
                ));
                rows.push(json!({
                    "type": f.display(&q),
                    "full_flag": f.is_full_flag(&q),
                    "dims": d,
                }));
            }
            emit(out, g.format, &json!({ "degree": nu, "types": rows }), &text)?;
            Ok(true)
        }
        Command::Dims {
            file,
            nu,
            engine,
            q: qs,
            all_types,
        } => {
            let q = load_quiver(file)?;
            let nu = DimensionVector::parse(&q, nu)?;
            let ps = primes(qs)?;
            let key = ResultCache::key(&[
                "dims",
                &q.content_hash(),
                &nu.to_string(),
                &format!("{engine:?}"),
                &format!("{qs:?}"),
                &all_types.to_string(),
            ]);
            let (payload, _) = results.get_or_compute(&key, err, || {
                let mut v = json!({ "degree": nu, "engine": format!("{engine:?}").to_lowercase() });
                if *engine != Engine::Hall {
                    v["symbolic"] = if *all_types {
                        let gs = GeneratorSet::extended(&q, nu.total());
                        json!(crate::formalg::serre_ideal_dim(&gs, &crate::quiverlab::extend_cartan(&q, nu.total()), &nu)?)
                    } else {
                        json!(radical_quotient_dim(&GeneratorSet::standard(&q), &nu).0)
                    };
                }
                if *engine != Engine::Sym {
                    let mode = if *all_types { FlagMode::All } else { FlagMode::FullFlag };
                    let mut hall = Vec::new();
                    for &p in &ps {
                        let r = span_analysis_mode(&q, &nu, p, mode)?;
                        hall.push(json!({ "q": p.get(), "rank": r.rank, "monomials": r.monomials.len() }));
                    }
                    v["hall"] = json!(hall);
                }
                Ok(serde_json::to_string(&v)?)
            })?;
            let v: Value = serde_json::from_str(&payload)?;
            let mut dims: Vec<u64> = v["hall"].as_array().into_iter().flatten().filter_map(|h| h["rank"].as_u64()).collect();
            dims.extend(v["symbolic"].as_u64());
            let agree = dims.windows(2).all(|w| w[0] == w[1]);
            let mut text = format!("degree {nu}\n");
            if let Some(s) = v["symbolic"].as_u64() {
                text.push_str(&format!("  symbolic: {s}\n"));
            }
            for h in v["hall"].as_array().into_iter().flatten() {
                text.push_str(&format!("  hall q={}: {}\n", h["q"], h["rank"]));
            }
            if !agree {
                text.push_str("  engines disagree\n");
            }
            let mut shown = v.clone();
            shown["agree"] = json!(agree);
            emit(out, g.format, &shown, &text)?;
            Ok(agree)
        }
        Command::Primitive { file, vertex, m, q: p } => {
            let q = load_quiver(file)?;
            let i = q.vertex_index(vertex)?;
            let p = Prime::new(*p)?;
            let fq = primitive_space_fq(&q, i, *m, p)?;
            let gs = GeneratorSet::extended(&q, *m);
            let sym = primitive_space_symbolic(&gs, vertex, *m as i64)?;
            let xi: Vec<(String, String)> = fq.monomials.iter().zip(&fq.xi).map(|(f, c)| (f.display(&q), c.to_string())).collect();
            let v = json!({
                "vertex": vertex, "m": m, "q": p.get(),
                "hall_dim": fq.dim, "symbolic_dim": sym.dim,
                "xi": xi, "symbolic_xi": sym.xi.display(&gs),
            });
            let mut text = format!("H at {m}·{vertex}: dim {} (q={}), symbolic dim {}\n", fq.dim, p.get(), sym.dim);
            for (f, c) in &xi {
                text.push_str(&format!("  {c}  ·  {f}\n"));
            }
            emit(out, g.format, &v, &text)?;
            Ok(fq.dim == 1 && sym.dim == 1)
        }
        Command::Verify {
            suite,
            file,
            file2,
            nu_max,
            q: qs,
            twist,
            cartan_entry,
        } => {
            let q = load_quiver(file)?;
            let ps = primes(qs)?;
            let bound = DegreeBound::parse(&q, nu_max)?;
            let twist = match twist {
                Some(t) => parse_twist(t)?,
                None => DEFAULT_TWIST,
            };
            let report = run_suite(*suite, &q, file2.as_deref(), &bound, &ps, twist, cartan_entry.as_deref(), &cfg)?;
            emit(out, g.format, &serde_json::to_value(&report)?, &report.to_text())?;
            Ok(report.passed())
        }
    }
}

fn parse_twist(text: &str) -> Result<Twist> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad twist `{text}`"))))
        .collect::<Result<_>>()?;
    match parts[..] {
        [sign, diag, offset] => Ok(Twist { sign, diag, offset }),
        _ => Err(Error::Parse(format!("twist needs sign,diag,offset: `{text}`"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_suite(
    suite: Suite,
    q: &Quiver,
    file2: Option<&str>,
    bound: &DegreeBound,
    ps: &[Prime],
    twist: Twist,
    cartan_entry: Option<&str>,
    cfg: &SuiteConfig,
) -> Result<VerificationReport> {
    match suite {
        Suite::Concatenation => theorems::verify_concatenation(q, bound, ps, twist, cfg),
        Suite::Calibrate => {
            let cal = theorems::calibrate_twist(std::slice::from_ref(q), bound, ps, cfg)?;
            let mut r = cal.reports.into_iter().next().expect("one quiver");
            r.suite = "calibrate".into();
            r.params["passing_twists"] = json!(cal.passing);
            r.params["passing_twists_negative_v"] = json!(cal.passing_negative);
            if cal.passing.len() != 1 {
                r.status = theorems::Status::Fail;
                r.counterexample.get_or_insert(json!({ "passing_twists": cal.passing.len() }));
            }
            Ok(r)
        }
        Suite::Serre => theorems::verify_serre_in_radical(q, bound),
        Suite::EngineCross => {
            let c = match cartan_entry {
                Some(text) => Some(corrupt_cartan(q, text)?),
                None => None,
            };
            theorems::verify_engine_cross(q, bound, ps, c.as_ref())
        }
        Suite::CEquiv => {
            let other = load_quiver(file2.ok_or_else(|| Error::Parse("c-equiv needs --file2".into()))?)?;
            theorems::verify_c_equiv(q, &other, bound, ps)
        }
        Suite::MDims => theorems::verify_m_dims(q, bound, ps),
        Suite::Primitive => {
            let m_max = match bound {
                DegreeBound::Total(n) => *n,
                DegreeBound::Below(d) => d.total(),
            };
            theorems::verify_primitive_dims(q, m_max, ps, cfg)
        }
        Suite::Orientation => theorems::verify_orientation(q, bound, ps),
        Suite::VectorBundle => theorems::verify_vector_bundle(q, bound, ps, cfg),
    }
}

fn corrupt_cartan(q: &Quiver, text: &str) -> Result<crate::quiverlab::CartanMatrix> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [i, j, val] = parts[..] else {
        return Err(Error::Parse(format!("cartan entry needs i,j,value: `{text}`")));
    };
    let val: i64 = val.parse().map_err(|_| Error::Parse(format!("bad value `{val}`")))?;
    Ok(cartan_matrix(q).with_entry(q.vertex_index(i)?, q.vertex_index(j)?, val))
}
