//! `bitree`: counts, codes, invariants, movements, and verification suites
//! for plane labelled bipartite trees.
//!
//! Machine output (JSON) goes to stdout, diagnostics to stderr. Exit codes:
//! 0 on success, 1 when a verification suite finds a counterexample, 2 on
//! usage or resource errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bitree_core::{
    breakdown, canonical_code, census, decode, encode, lex, move_leaf, orbit, verify, CodeString,
    Direction, EncodingRoot, MovementSpec, Passport, PlaneTree, VertexRef,
};

const MAX_TREES_ENV: &str = "BITREE_MAX_TREES";

#[derive(Parser)]
#[command(
    name = "bitree",
    version,
    about = "Plane labelled bipartite trees: counts, codes, parity, movements, censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count plane labelled (n,m)-trees, optionally for one passport.
    Count {
        n: usize,
        m: usize,
        /// Restrict to a passport, e.g. "3,1|2,1,1".
        #[arg(long)]
        passport: Option<String>,
    },
    /// List every (n,m)-tree in canonical-code order.
    Enumerate {
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode the tree in a JSON file as a contour code.
    Encode {
        /// Tree JSON file ({"white":…,"black":…,"rotation":[…]}).
        #[arg(long = "in")]
        input: PathBuf,
        /// Root vertex (white); defaults to the canonical encoding.
        #[arg(long)]
        root: Option<String>,
        /// Root edge, named by its black endpoint; requires --root.
        #[arg(long)]
        edge: Option<String>,
    },
    /// Rebuild the trees described by codes.
    Decode {
        codes: Vec<String>,
        /// Read codes from a file, one per line ('#' comments ignored).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
    },
    /// Invariant breakdown of codes (even vertex counts only).
    Invariant {
        codes: Vec<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Move a leaf along the contour of the remaining tree.
    Move {
        code: String,
        /// The leaf to move, e.g. "u3".
        #[arg(long)]
        leaf: String,
        #[arg(long, value_enum)]
        dir: DirArg,
        /// Number of elementary movements.
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Full movement orbit of a leaf (canonical codes).
    Orbit {
        code: String,
        #[arg(long)]
        leaf: String,
        #[arg(long, value_enum, default_value_t = DirArg::Ccw)]
        dir: DirArg,
    },
    /// Even/odd and per-passport census of all (n,m)-trees.
    Census { n: usize, m: usize },
    /// Elementary-movement graph summary for all (n,m)-trees.
    Graph { n: usize, m: usize },
    /// Run exhaustive verification suites.
    Verify {
        #[arg(value_enum)]
        claim: ClaimArg,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
    },
    /// Sample a uniformly random (n,m)-tree.
    Random {
        n: usize,
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
    },
    /// Graphviz DOT rendering of coded trees.
    Dot {
        codes: Vec<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Codes,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Ccw,
    Cw,
}

impl From<DirArg> for Direction {
    fn from(d: DirArg) -> Direction {
        match d {
            DirArg::Ccw => Direction::Ccw,
            DirArg::Cw => Direction::Cw,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    #[value(name = "thm-2-1")]
    Thm21,
    #[value(name = "thm-3-1-2")]
    Thm312,
    #[value(name = "thm-4-1")]
    Thm41,
    Gj,
    All,
}

impl From<ClaimArg> for verify::Claim {
    fn from(c: ClaimArg) -> verify::Claim {
        match c {
            ClaimArg::Thm21 => verify::Claim::Counting,
            ClaimArg::Thm312 => verify::Claim::RootIndependence,
            ClaimArg::Thm41 => verify::Claim::ParityFlip,
            ClaimArg::Gj => verify::Claim::GouldenJackson,
            ClaimArg::All => verify::Claim::All,
        }
    }
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(message)) => {
            eprintln!("{}", json!({ "error": message }));
            ExitCode::from(2)
        }
    }
}

fn max_trees() -> Result<u64, CliError> {
    match std::env::var(MAX_TREES_ENV) {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| CliError(format!("{MAX_TREES_ENV} must be an integer, got {raw:?}"))),
        Err(_) => Ok(census::DEFAULT_MAX_TREES),
    }
}

/// Gathers codes from the command line and/or a codes file (one per line,
/// `#` starts a comment).
fn gather_codes(codes: Vec<String>, input: Option<PathBuf>) -> Result<Vec<CodeString>, CliError> {
    let mut texts = codes;
    if let Some(path) = input {
        let contents = fs::read_to_string(&path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
        for line in contents.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                texts.push(line.to_string());
            }
        }
    }
    if texts.is_empty() {
        return Err(CliError("no codes given; pass them as arguments or via --in".into()));
    }
    texts.iter().map(|t| Ok(lex(t)?)).collect()
}

fn parse_vertex(name: &str) -> Result<VertexRef, CliError> {
    Ok(name.parse::<VertexRef>()?)
}

fn emit(out: Option<PathBuf>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, payload)
            .map_err(|e| CliError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Count { n, m, passport } => {
            let count = match passport {
                Some(text) => {
                    let passport: Passport = text.parse()?;
                    census::count_passport(n, m, &passport)?
                }
                None => census::count_total(n, m)?,
            };
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, m, format, out } => {
            let cap = max_trees()?;
            let trees = census::enumerate_all(n, m, cap)?;
            let mut payload = String::new();
            match format {
                ListFormat::Codes => {
                    for tree in &trees {
                        writeln!(payload, "{}", canonical_code(tree)).unwrap();
                    }
                }
                ListFormat::Json => {
                    let docs: Vec<serde_json::Value> = trees
                        .iter()
                        .map(|t| serde_json::to_value(t).expect("trees serialise"))
                        .collect();
                    writeln!(payload, "{}", serde_json::Value::Array(docs)).unwrap();
                }
                ListFormat::Dot => {
                    for (k, tree) in trees.iter().enumerate() {
                        payload.push_str(&tree.to_dot(&format!("T{k}")));
                    }
                }
            }
            emit(out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { input, root, edge } => {
            let contents = fs::read_to_string(&input)
                .map_err(|e| CliError(format!("cannot read {}: {e}", input.display())))?;
            let tree = PlaneTree::from_json(&contents)?;
            let code = match (root, edge) {
                (Some(root), Some(edge)) => encode(
                    &tree,
                    EncodingRoot {
                        vertex: parse_vertex(&root)?,
                        edge: parse_vertex(&edge)?,
                    },
                )?,
                (None, None) => canonical_code(&tree),
                _ => return Err(CliError("--root and --edge go together".into())),
            };
            println!("{}", json!({ "code": code.to_string() }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { codes, input, format } => {
            for code in gather_codes(codes, input)? {
                let (tree, root) = decode(&code)?;
                match format {
                    TreeFormat::Json => println!(
                        "{}",
                        json!({
                            "tree": serde_json::to_value(&tree).expect("trees serialise"),
                            "root_vertex": root.vertex.to_string(),
                            "root_edge": root.edge.to_string(),
                        })
                    ),
                    TreeFormat::Text => println!("{}", canonical_code(&tree)),
                    TreeFormat::Dot => print!("{}", tree.to_dot("T")),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariant { codes, input } => {
            for code in gather_codes(codes, input)? {
                let bd = breakdown(&code)?;
                println!("{}", serde_json::to_string(&bd).expect("breakdowns serialise"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Move { code, leaf, dir, steps } => {
            let code = lex(&code)?;
            let (tree, _) = decode(&code)?;
            let leaf = parse_vertex(&leaf)?;
            let outcome = move_leaf(
                &tree,
                MovementSpec {
                    leaf,
                    direction: dir.into(),
                    steps,
                },
            )?;
            let mut payload = json!({
                "code": canonical_code(&outcome.tree).to_string(),
                "bypassed": outcome.bypassed_same_color,
                "movement_parity": outcome.movement_parity.to_string(),
            });
            if tree.vertex_count() % 2 == 0 {
                payload["i_before"] = json!(breakdown(&canonical_code(&tree))?.i);
                payload["i_after"] = json!(breakdown(&canonical_code(&outcome.tree))?.i);
            }
            println!("{payload}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { code, leaf, dir } => {
            let (tree, _) = decode(&lex(&code)?)?;
            let leaf = parse_vertex(&leaf)?;
            let trees = orbit(&tree, leaf, dir.into())?;
            let codes: Vec<String> = trees
                .iter()
                .map(|t| canonical_code(t).to_string())
                .collect();
            println!("{}", json!({ "leaf": leaf.to_string(), "orbit": codes }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { n, m } => {
            let report = census::parity_census(n, m, max_trees()?)?;
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { n, m } => {
            let summary = census::movement_graph(n, m, max_trees()?)?;
            println!("{}", serde_json::to_string(&summary).expect("summaries serialise"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { claim, max_vertices } => {
            let reports = verify::run(claim.into(), max_vertices, max_trees()?)?;
            let mut failed = false;
            for report in &reports {
                println!("{}", serde_json::to_string(report).expect("reports serialise"));
                failed |= !report.passed();
            }
            if failed {
                let first = reports
                    .iter()
                    .filter(|r| !r.passed())
                    .flat_map(|r| r.failures.first())
                    .next()
                    .cloned()
                    .unwrap_or_default();
                eprintln!("{}", json!({ "error": "verification failed", "counterexample": first }));
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Random { n, m, seed, format } => {
            let tree = census::sample_random(n, m, seed, max_trees()?)?;
            match format {
                TreeFormat::Json => println!("{}", tree.to_json()),
                TreeFormat::Text => println!("{}", canonical_code(&tree)),
                TreeFormat::Dot => print!("{}", tree.to_dot("T")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { codes, input, out } => {
            let mut payload = String::new();
            for (k, code) in gather_codes(codes, input)?.iter().enumerate() {
                let (tree, _) = decode(code)?;
                payload.push_str(&tree.to_dot(&format!("T{k}")));
            }
            emit(out, &payload)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
