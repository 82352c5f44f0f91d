use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hyperfinite::graph::boundary;
use hyperfinite::{
    build_schreier, cycle_action, enumerate_k_separators, exact_game, find_folner_set, greedy_separator, is_planar,
    mwu_game, random_action, ula_profile, ula_profile_approx, Graph, Rational, DEFAULT_ENUM_CAP, DEFAULT_ULA_CAP,
};
use serde_json::{json, Value};

use crate::format::{emit_graph, emit_labels, parse_action, parse_graph};
use crate::report;

/// Thresholds reported by `profile`.
const PROFILE_EPS: [(i64, i64); 3] = [(1, 4), (1, 2), (3, 4)];
const PROFILE_SAMPLES: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "hfl", version, about = "Følner sets, greedy separators and the separator game on bounded-degree graphs")]
pub struct Cli {
    /// Worker threads for the exhaustive scans; output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file ("n m d" header, then "u v" edge lines).
    pub graph: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact game report plus amenability profile at eps = 1/4, 1/2, 3/4.
    Profile {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
    },
    /// Greedy separator from repeated Følner sets.
    Greedy {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        k: usize,
    },
    /// Best Følner witness at (eps, k).
    Folner {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        k: usize,
    },
    /// Separator game value, exactly or bracketed by multiplicative weights.
    Game {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "mwu")]
        exact: bool,
        #[arg(long)]
        mwu: bool,
        #[arg(long, default_value_t = 4000)]
        rounds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// K-separators in canonical order.
    Separators {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        minimal: bool,
    },
    /// Schreier graph of an involution action of C2*C2*C2*C2.
    Schreier {
        /// Action file: "n", then four lines of images.
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        action: Option<PathBuf>,
        /// cycle:<n> or random:<n>:<seed>.
        #[arg(long)]
        family: Option<String>,
        /// Also solve the separator game on the Schreier graph.
        #[arg(long)]
        profile: bool,
        #[arg(long)]
        k: Option<usize>,
        /// Write the Schreier graph in graph format.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        /// Write the generator label of each edge line.
        #[arg(long)]
        labels_out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone)]
pub struct Config {
    pub enum_cap: usize,
    pub ula_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { enum_cap: DEFAULT_ENUM_CAP, ula_cap: DEFAULT_ULA_CAP }
    }
}

impl Config {
    /// Defaults, with `HFL_ENUM_CAP` overriding the enumeration cap.
    pub fn from_env() -> Result<Self, String> {
        let mut config = Self::default();
        if let Ok(raw) = std::env::var("HFL_ENUM_CAP") {
            config.enum_cap = raw.trim().parse().map_err(|_| format!("HFL_ENUM_CAP is not a decimal integer: {raw:?}"))?;
        }
        Ok(config)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

#[derive(Debug)]
enum Failure {
    Input(String),
    Size(String),
}

impl From<hyperfinite::Error> for Failure {
    fn from(e: hyperfinite::Error) -> Self {
        match e {
            hyperfinite::Error::SizeLimit { .. } => Failure::Size(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Loaded {
    graph: Graph,
    digest: String,
}

fn load_graph(path: &Path) -> Result<Loaded, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| Failure::Input(format!("{}: not ASCII text", path.display())))?;
    let graph = parse_graph(text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Loaded { graph, digest: report::digest(&bytes) })
}

fn parse_eps(raw: &str) -> Result<Rational, Failure> {
    raw.trim().parse::<Rational>().map_err(|_| Failure::Input(format!("eps must be a rational like 1/2, got {raw:?}")))
}

/// Runs one command and returns its exit code and output. Never exits the
/// process.
pub fn run<I, T>(args: I, config: &Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    let result = match cli.workers {
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, config)),
            Err(e) => Err(Failure::Input(format!("cannot start {w} workers: {e}"))),
        },
        None => execute(&cli.command, config),
    };
    match result {
        Ok((command, digest, params, payload)) => {
            let full = report::envelope(command, &digest, params, payload, start.elapsed().as_millis());
            let mut stdout = serde_json::to_string_pretty(&full).expect("json values serialize");
            stdout.push('\n');
            Outcome { code: EXIT_OK, stdout, stderr: String::new() }
        }
        Err(Failure::Input(msg)) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Size(msg)) => Outcome { code: EXIT_SIZE, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

type Executed = (&'static str, String, Value, Value);

fn execute(command: &Command, config: &Config) -> Result<Executed, Failure> {
    match command {
        Command::Profile { input, k } => {
            let Loaded { graph, digest } = load_graph(&input.graph)?;
            let game = exact_game(&graph, *k, config.enum_cap)?;
            let ula = ula_summary(&graph, config)?;
            let payload = json!({ "h": report::rational(&game.h), "game": report::game(&game), "ula": ula });
            Ok(("profile", digest, json!({ "k": k }), payload))
        }
        Command::Greedy { input, eps, k } => {
            let Loaded { graph, digest } = load_graph(&input.graph)?;
            let eps = parse_eps(eps)?;
            let outcome = greedy_separator(&graph, &eps, *k)?;
            Ok(("greedy", digest, json!({ "eps": report::rational(&eps), "k": k }), report::greedy(&outcome)))
        }
        Command::Folner { input, eps, k } => {
            let Loaded { graph, digest } = load_graph(&input.graph)?;
            let eps = parse_eps(eps)?;
            let witness = find_folner_set(&graph, &eps, *k)?;
            let b = witness.as_ref().map(|w| boundary(&graph, &w.e)).transpose()?;
            let params = json!({ "eps": report::rational(&eps), "k": k });
            Ok(("folner", digest, params, report::folner(witness.as_ref(), b.as_ref())))
        }
        Command::Game { input, k, exact: _, mwu, rounds, seed } => {
            let Loaded { graph, digest } = load_graph(&input.graph)?;
            if *mwu {
                let r = mwu_game(&graph, *k, *rounds, *seed, config.enum_cap)?;
                let params = json!({ "k": k, "mode": "mwu", "rounds": rounds, "seed": seed });
                Ok(("game", digest, params, report::mwu(&r, *seed)))
            } else {
                let r = exact_game(&graph, *k, config.enum_cap)?;
                Ok(("game", digest, json!({ "k": k, "mode": "exact" }), report::game(&r)))
            }
        }
        Command::Separators { input, k, minimal } => {
            let Loaded { graph, digest } = load_graph(&input.graph)?;
            let list = enumerate_k_separators(&graph, *k, *minimal, config.enum_cap)?;
            let payload = json!({
                "count": list.len(),
                "separators": list.iter().map(report::set).collect::<Vec<_>>(),
            });
            Ok(("separators", digest, json!({ "k": k, "minimal": minimal }), payload))
        }
        Command::Schreier { action, family, profile, k, graph_out, labels_out } => {
            let (source, digest, act) = match (action, family) {
                (Some(path), _) => {
                    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    let text = String::from_utf8_lossy(&bytes);
                    let act = parse_action(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    ("action-file".to_string(), report::digest(&bytes), act)
                }
                (None, Some(name)) => (name.clone(), report::digest(name.as_bytes()), family_action(name)?),
                (None, None) => return Err(Failure::Input("one of --action or --family is required".into())),
            };
            let s = build_schreier(&act);
            let mut payload = report::schreier(&source, &s, is_planar(&s.graph));
            let mut params = json!({ "profile": profile });
            if *profile {
                let k = k.ok_or_else(|| Failure::Input("--profile needs --k".into()))?;
                let game = exact_game(&s.graph, k, config.enum_cap)?;
                payload["game"] = report::game(&game);
                params["k"] = json!(k);
            }
            if let Some(path) = graph_out {
                std::fs::write(path, emit_graph(&s.graph)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = labels_out {
                std::fs::write(path, emit_labels(&s)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(("schreier", digest, params, payload))
        }
    }
}

fn ula_summary(graph: &Graph, config: &Config) -> Result<Value, Failure> {
    PROFILE_EPS
        .iter()
        .map(|&(p, q)| {
            let eps = hyperfinite::rational::ratio(p, q);
            if graph.n() <= config.ula_cap {
                Ok(report::ula_exact(&ula_profile(graph, &eps, config.ula_cap)?))
            } else {
                Ok(report::ula_bounds(&ula_profile_approx(graph, &eps, PROFILE_SAMPLES, 0)?))
            }
        })
        .collect::<Result<Vec<_>, Failure>>()
        .map(Value::Array)
}

fn family_action(name: &str) -> Result<hyperfinite::InvolutionAction, Failure> {
    let parts: Vec<&str> = name.split(':').collect();
    let num = |s: &str| s.parse::<u64>().map_err(|_| Failure::Input(format!("bad number {s:?} in family {name:?}")));
    match parts.as_slice() {
        ["cycle", n] => Ok(cycle_action(num(n)? as usize)?),
        ["random", n, seed] => Ok(random_action(num(n)? as usize, num(seed)?)?),
        _ => Err(Failure::Input(format!("unknown family {name:?}; expected cycle:<n> or random:<n>:<seed>"))),
    }
}
