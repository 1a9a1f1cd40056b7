mod input;
mod play;

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbd_core::domination::domination_number;
use mbd_core::solver::{all_mbd_numbers_with, solve_with_stats};
use mbd_core::verify::{self, SuiteResult};
use mbd_core::{
    corona, from_graph6, optimal_move, run_suite, to_graph6, Error, GameState,
    Graph, Instance, Objective, Player, Selector, SolveConfig, VerifyConfig, VertexSet,
};
use rayon::prelude::*;
use serde_json::json;

use input::{parse_graph_arg, parse_vertex, GraphInput};

/// Exit status plus a one-line diagnostic.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NodeLimitExceeded(_) => 3,
        Error::SizeLimit(_) => 4,
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure { code: 2, message: format!("io error: {e}") }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        Failure { code: 2, message: format!("csv error: {e}") }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure { code: 2, message: format!("json error: {e}") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "mbd", version, about = "Maker-Breaker domination game solver")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// Abort a search after this many nodes
    #[arg(long, global = true, default_value_t = 200_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    node_limit: u64,
    /// Transposition table budget in MiB (MBD_TABLE_MB overrides)
    #[arg(long, global = true, default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..))]
    table_mb: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reserved; only the sampled continuation check draws random numbers
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Game {
    D,
    S,
}

impl Game {
    fn first(self) -> Player {
        match self {
            Game::D => Player::Dominator,
            Game::S => Player::Staller,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Obj {
    Mb,
    Smb,
}

impl Obj {
    fn objective(self) -> Objective {
        match self {
            Obj::Mb => Objective::Mb,
            Obj::Smb => Objective::Smb,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Role {
    Dominator,
    Staller,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Game value, an optimal first move and search statistics
    Solve {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = Game::D)]
        game: Game,
        #[arg(long, value_enum, default_value_t = Obj::Mb)]
        objective: Obj,
        /// Comma-separated vertices (labels or indices) that start dominated
        #[arg(long, value_delimiter = ',')]
        predominated: Vec<String>,
    },
    /// Corona product G ⊙ H as graph6 plus its vertex labeling
    Corona {
        /// gen:<spec>, g6:<graph6>, file:<path>, edges:<list>, or bare graph6
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Write graph6 here and the labeling to <out>.labels.json
        #[arg(long)]
        out: Option<String>,
    },
    /// Invariants of every graph6 line on stdin, as CSV
    Batch,
    /// Check the corona formulas and game properties
    Verify {
        /// One of the check names, or all
        #[arg(long)]
        theorem: Selector,
        #[arg(long)]
        g: Option<String>,
        #[arg(long, conflicts_with = "t")]
        h: Option<String>,
        /// Tree factor for tree-pm
        #[arg(long)]
        t: Option<String>,
        /// default, graphs:N, connected:N, a graph6 file, or - for stdin
        #[arg(long, conflicts_with = "g")]
        corpus: Option<String>,
        /// Raise the size cap and node budget for the 27-vertex instance
        #[arg(long)]
        stretch: bool,
    },
    /// Play against the engine
    Play {
        #[command(flatten)]
        graph: GraphInput,
        /// Side taken by the human
        #[arg(long, value_enum, default_value_t = Role::Staller)]
        role: Role,
        #[arg(long, value_enum, default_value_t = Game::D)]
        game: Game,
        #[arg(long, value_enum, default_value_t = Obj::Mb)]
        objective: Obj,
    },
}

struct Limits {
    node_limit: u64,
    table_bytes: usize,
    seed: u64,
    format: Format,
}

impl Limits {
    fn from(common: &Common) -> Result<Limits, Failure> {
        let table_mb = match std::env::var("MBD_TABLE_MB") {
            Ok(s) => match s.trim().parse::<u64>() {
                Ok(v) if v > 0 => v,
                _ => return Err(Failure::parse(format!("MBD_TABLE_MB must be a positive integer, got {s:?}"))),
            },
            Err(_) => common.table_mb,
        };
        Ok(Limits {
            node_limit: common.node_limit,
            table_bytes: usize::try_from(table_mb << 20).unwrap_or(usize::MAX),
            seed: common.seed,
            format: common.format,
        })
    }

    fn solve_config(&self, objective: Objective, first: Player) -> SolveConfig {
        SolveConfig {
            node_limit: self.node_limit,
            table_memory_bytes: self.table_bytes,
            ..SolveConfig::new(objective, first)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = Limits::from(&cli.common)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Cmd::Solve { graph, game, objective, predominated } => {
            let g = graph.load()?;
            let a = predominated
                .iter()
                .map(|s| parse_vertex(&g, s))
                .collect::<Result<VertexSet, _>>()?;
            let cfg = limits.solve_config(objective.objective(), game.first()).with_predominated(a);
            cmd_solve(&g, &cfg, limits.format, &mut out)?;
            Ok(0)
        }
        Cmd::Corona { g, h, out: path } => {
            let (g, h) = (parse_graph_arg(&g)?, parse_graph_arg(&h)?);
            cmd_corona(&g, &h, path.as_deref(), limits.format, &mut out)?;
            Ok(0)
        }
        Cmd::Batch => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            cmd_batch(&text, &limits, &mut out)?;
            Ok(0)
        }
        Cmd::Verify { theorem, g, h, t, corpus, stretch } => {
            let corpus = match (g, h.or(t), corpus) {
                (Some(g), Some(h), None) => vec![Instance::pair(parse_graph_arg(&g)?, parse_graph_arg(&h)?)],
                (Some(g), None, None) => vec![Instance::single(parse_graph_arg(&g)?)],
                (None, Some(_), _) => return Err(Failure::parse("--h and --t need --g")),
                (None, None, spec) => load_corpus(spec.as_deref().unwrap_or("default"))?,
                (Some(_), _, Some(_)) => unreachable!("clap rejects --g with --corpus"),
            };
            let mut cfg = VerifyConfig {
                node_limit: limits.node_limit,
                table_memory_bytes: limits.table_bytes,
                seed: limits.seed,
                ..VerifyConfig::default()
            };
            if stretch {
                cfg = cfg.stretch();
            }
            let result = run_suite(&corpus, theorem, &cfg);
            write_reports(&result, limits.format, &mut out)?;
            Ok(if result.summary.fail > 0 { 1 } else { 0 })
        }
        Cmd::Play { graph, role, game, objective } => {
            let g = graph.load()?;
            let human = match role {
                Role::Dominator => Player::Dominator,
                Role::Staller => Player::Staller,
            };
            let cfg = limits.solve_config(objective.objective(), game.first());
            let stdin = io::stdin();
            play::play(&g, &cfg, human, &mut stdin.lock(), &mut out)?;
            Ok(0)
        }
    }
}

fn cmd_solve(g: &Graph, cfg: &SolveConfig, format: Format, out: &mut impl Write) -> Result<(), Failure> {
    let started = Instant::now();
    let report = solve_with_stats(g, cfg)?;
    let root = GameState::new(cfg.first_player, cfg.predominated);
    let best = match optimal_move(g, &root, cfg) {
        Ok(v) => Some(v),
        Err(Error::NoLegalMove) => None,
        Err(e) => return Err(e.into()),
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    let value = report.value.to_string();
    let label = best.map(|v| g.label(v));
    match format {
        Format::Text => {
            writeln!(out, "{value}")?;
            match best {
                Some(v) => writeln!(out, "move: {} ({v})", g.label(v))?,
                None => writeln!(out, "move: none")?,
            }
            writeln!(
                out,
                "nodes: {} table_hits: {} elapsed_ms: {elapsed_ms}",
                report.stats.nodes, report.stats.table_hits
            )?;
        }
        Format::Json => {
            let doc = json!({
                "graph6": to_graph6(g),
                "value": value,
                "move": best,
                "move_label": label,
                "nodes": report.stats.nodes,
                "table_hits": report.stats.table_hits,
                "elapsed_ms": elapsed_ms,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["graph6", "value", "move", "move_label", "nodes", "table_hits", "elapsed_ms"])?;
            w.write_record([
                to_graph6(g),
                value,
                best.map(|v| v.to_string()).unwrap_or_default(),
                label.unwrap_or_default(),
                report.stats.nodes.to_string(),
                report.stats.table_hits.to_string(),
                elapsed_ms.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_corona(
    g: &Graph,
    h: &Graph,
    path: Option<&str>,
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let (p, labeling) = corona(g, h)?;
    let g6 = to_graph6(&p);
    if let Some(path) = path {
        fs::write(path, format!("{g6}\n"))?;
        fs::write(format!("{path}.labels.json"), serde_json::to_string_pretty(&labeling)? + "\n")?;
        return Ok(());
    }
    match format {
        Format::Json => {
            let doc = json!({
                "graph6": g6,
                "n": p.order(),
                "base_vertices": labeling.base_vertices,
                "copy_vertices": labeling.copy_vertices,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Text | Format::Csv => {
            writeln!(out, "{g6}")?;
            writeln!(out, "{}", serde_json::to_string(&labeling)?)?;
        }
    }
    Ok(())
}

const BATCH_HEADER: [&str; 9] = ["graph6", "n", "gamma", "outcome", "mb", "mb_prime", "smb", "smb_prime", "error"];

fn error_name(e: &Error) -> &'static str {
    match e {
        Error::ParseError(_) => "ParseError",
        Error::SizeLimit(_) => "SizeLimit",
        Error::NodeLimitExceeded(_) => "NodeLimitExceeded",
        Error::Inconsistent(_) => "Inconsistent",
        _ => "InvalidInput",
    }
}

fn batch_row(line: &str, cfg: &SolveConfig) -> Vec<String> {
    let line = line.trim();
    let row = from_graph6(line).and_then(|g| {
        let numbers = all_mbd_numbers_with(&g, cfg)?;
        Ok(vec![
            line.to_string(),
            g.order().to_string(),
            domination_number(&g).to_string(),
            numbers.outcome.to_string(),
            numbers.mb.to_string(),
            numbers.mb_prime.to_string(),
            numbers.smb.to_string(),
            numbers.smb_prime.to_string(),
            String::new(),
        ])
    });
    row.unwrap_or_else(|e| {
        let mut r = vec![String::new(); BATCH_HEADER.len()];
        r[0] = line.to_string();
        r[8] = error_name(&e).to_string();
        r
    })
}

fn cmd_batch(text: &str, limits: &Limits, out: &mut impl Write) -> Result<(), Failure> {
    let cfg = limits.solve_config(Objective::Mb, Player::Dominator);
    let rows: Vec<Vec<String>> = text.lines().collect::<Vec<_>>().par_iter().map(|l| batch_row(l, &cfg)).collect();
    if limits.format == Format::Json {
        for r in rows {
            let doc: serde_json::Map<String, serde_json::Value> =
                BATCH_HEADER.iter().zip(r).map(|(k, v)| (k.to_string(), json!(v))).collect();
            writeln!(out, "{}", serde_json::Value::Object(doc))?;
        }
        return Ok(());
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BATCH_HEADER)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn load_corpus(spec: &str) -> Result<Vec<Instance>, Failure> {
    let order = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Failure::parse(format!("bad corpus order {s:?}")))
    };
    if spec == "default" {
        Ok(verify::default_corpus())
    } else if let Some(n) = spec.strip_prefix("graphs:") {
        Ok(verify::graph_corpus(order(n)?, false)?)
    } else if let Some(n) = spec.strip_prefix("connected:") {
        Ok(verify::graph_corpus(order(n)?, true)?)
    } else if spec == "-" {
        let mut text = String::new();
        for line in io::stdin().lock().lines() {
            text.push_str(&line?);
            text.push('\n');
        }
        Ok(verify::corpus_from_graph6_lines(&text)?)
    } else {
        let text = fs::read_to_string(spec).map_err(|e| Failure::parse(format!("{spec}: {e}")))?;
        Ok(verify::corpus_from_graph6_lines(&text)?)
    }
}

fn write_reports(result: &SuiteResult, format: Format, out: &mut impl Write) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for r in &result.reports {
                write!(
                    out,
                    "{} {} {} predicted={} computed={}",
                    r.status, r.theorem_id, r.instance, r.predicted, r.computed
                )?;
                if let Some(reason) = &r.reason {
                    write!(out, " reason={reason:?}")?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            for r in &result.reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "theorem_id", "instance", "g_graph6", "h_graph6", "predicted", "computed", "status", "reason",
                "elapsed_ms",
            ])?;
            for r in &result.reports {
                w.write_record([
                    r.theorem_id.clone(),
                    r.instance.clone(),
                    r.g_graph6.clone(),
                    r.h_graph6.clone().unwrap_or_default(),
                    r.predicted.to_string(),
                    r.computed.to_string(),
                    r.status.to_string(),
                    r.reason.clone().unwrap_or_default(),
                    r.elapsed_ms.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    let s = &result.summary;
    match format {
        Format::Json => writeln!(out, "{}", json!({ "summary": s }))?,
        Format::Text => writeln!(out, "{s}")?,
        // keep stdout a single CSV table
        Format::Csv => eprintln!("{s}"),
    }
    Ok(())
}
