//! The `pathseq` command line.
//!
//! Exit status: 0 on success, 1 for a negative answer (no match, collisions
//! found, verification mismatch), 2 for usage, input or size-guard errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_forms::sequence_of;
use crate::collision::{
    enumerate_labeled_graphs, find_collisions, write_collision_report, CollisionOptions,
};
use crate::error::Error;
use crate::generators::{build, family_grid, BranchSequence, FamilyKind, FamilySpec, GridBounds};
use crate::graph::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph};
use crate::identify::identify;
use crate::oracle::{path_sequence_dfs, path_sequence_dp, PathSequence, DP_MAX_N};

#[derive(Debug, Parser)]
#[command(name = "pathseq", version, about = "Path sequences of graphs")]
struct Cli {
    /// Worker threads for parallel counting (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member and print it.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Print the path sequence of a graph or family member.
    Seq {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = SeqMethod::Dp)]
        method: SeqMethod,
    },
    /// Compare closed forms with the subset DP over a parameter grid.
    Verify {
        #[arg(long)]
        family: FamilyKind,
        /// Bound on every scalar parameter.
        #[arg(long)]
        max: Option<usize>,
        /// Bound on the vertex count.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Recover family parameters from a path sequence.
    Identify {
        #[arg(long)]
        family: FamilyKind,
        /// Comma-separated entries, e.g. 6,6,7,8,4,2.
        #[arg(long)]
        seq: String,
    },
    /// Report groups of non-isomorphic graphs with equal path sequences.
    Collide {
        #[command(flatten)]
        input: InputArgs,
        /// Scan every labeled graph on this many vertices instead of reading input.
        #[arg(long, conflicts_with = "input")]
        enumerate: Option<usize>,
        #[arg(long)]
        connected_only: bool,
        /// Keep isomorphic copies; report any group with two or more members.
        #[arg(long)]
        keep_duplicates: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file (default: standard input).
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    family: Option<FamilyKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    /// Branch multiplicities L_1,L_2,... for starlike families.
    #[arg(long)]
    branches: Option<BranchSequence>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqMethod {
    Dfs,
    Dp,
    Formula,
}

/// A failure with its exit status.
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: 2,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut (dyn Read + Send),
    stdout: &'a mut (dyn Write + Send),
    stderr: &'a mut (dyn Write + Send),
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status. The streams are `Send` so `--jobs` can run the command
/// inside its own worker pool.
pub fn run<I, T>(
    args: I,
    stdin: &mut (dyn Read + Send),
    stdout: &mut (dyn Write + Send),
    stderr: &mut (dyn Write + Send),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut (dyn Write + Send) = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return status;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    let outcome = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut io)),
            Err(e) => Err(usage(format!("cannot start {jobs} workers: {e}"))),
        },
        None => dispatch(cli.command, &mut io),
    };
    match outcome {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.status
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Gen { family, format } => cmd_gen(&family, format, io),
        Command::Seq {
            input,
            family,
            method,
        } => cmd_seq(&input, &family, method, io),
        Command::Verify { family, max, max_n } => cmd_verify(family, max, max_n, io),
        Command::Identify { family, seq } => cmd_identify(family, &seq, io),
        Command::Collide {
            input,
            enumerate,
            connected_only,
            keep_duplicates,
        } => cmd_collide(&input, enumerate, connected_only, keep_duplicates, io),
    }
}

fn out(io: &mut Io<'_>, text: &str) -> std::result::Result<(), Failure> {
    writeln!(io.stdout, "{text}").map_err(|e| usage(format!("cannot write output: {e}")))
}

fn family_spec(args: &FamilyArgs) -> std::result::Result<FamilySpec, Failure> {
    let kind = args.family.ok_or_else(|| usage("--family is required"))?;
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| usage(format!("--family {kind} needs --{flag}")))
    };
    let branches = || {
        args.branches
            .clone()
            .ok_or_else(|| usage(format!("--family {kind} needs --branches")))
    };
    let spec = match kind {
        FamilyKind::Complete => FamilySpec::Complete {
            n: need(args.n, "n")?,
        },
        FamilyKind::Path => FamilySpec::Path {
            n: need(args.n, "n")?,
        },
        FamilyKind::Cycle => FamilySpec::Cycle {
            n: need(args.n, "n")?,
        },
        FamilyKind::Star => FamilySpec::Star {
            n: need(args.n, "n")?,
        },
        FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite {
            n1: need(args.n1, "n1")?,
            n2: need(args.n2, "n2")?,
        },
        FamilyKind::Kite => FamilySpec::Kite {
            n1: need(args.n1, "n1")?,
            n2: need(args.n2, "n2")?,
        },
        FamilyKind::Lollipop => FamilySpec::Lollipop {
            n1: need(args.n1, "n1")?,
            n2: need(args.n2, "n2")?,
        },
        FamilyKind::Starlike => FamilySpec::Starlike {
            branches: branches()?,
        },
        FamilyKind::GeneralizedStarlike => FamilySpec::GeneralizedStarlike {
            n1: need(args.n1, "n1")?,
            branches: branches()?,
        },
    };
    spec.validate()?;
    Ok(spec)
}

fn read_input(input: &InputArgs, io: &mut Io<'_>) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    match &input.input {
        Some(path) => {
            text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            io.stdin
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// graph6 records are one token of printable characters `?`..`~`, which
/// never include digits; an edge list always starts with a number.
fn looks_like_graph6(text: &str) -> bool {
    content_lines(text)
        .next()
        .is_some_and(|(_, l)| l.bytes().all(|b| (63..=126).contains(&b)))
}

fn parse_one_graph(text: &str, format: InputFormat) -> std::result::Result<Graph, Failure> {
    let graph6 = match format {
        InputFormat::Auto => looks_like_graph6(text),
        InputFormat::Graph6 => true,
        InputFormat::EdgeList => false,
    };
    if !graph6 {
        return Ok(parse_edge_list(text)?);
    }
    let mut lines = content_lines(text);
    let (_, first) = lines.next().ok_or_else(|| usage("no graph in input"))?;
    if let Some((line, _)) = lines.next() {
        return Err(usage(format!(
            "expected one graph6 record, found another on line {line}"
        )));
    }
    Ok(parse_graph6(first)?)
}

fn cmd_gen(family: &FamilyArgs, format: GraphFormat, io: &mut Io<'_>) -> Outcome {
    let g = build(&family_spec(family)?)?;
    match format {
        GraphFormat::Graph6 => out(io, &write_graph6(&g)?)?,
        GraphFormat::EdgeList => out(io, write_edge_list(&g).trim_end())?,
    }
    Ok(0)
}

fn cmd_seq(input: &InputArgs, family: &FamilyArgs, method: SeqMethod, io: &mut Io<'_>) -> Outcome {
    if family.family.is_some() && input.input.is_some() {
        return Err(usage("-i and --family are mutually exclusive"));
    }
    let seq = if method == SeqMethod::Formula {
        if family.family.is_none() {
            return Err(usage("--method formula needs family flags, not a graph"));
        }
        sequence_of(&family_spec(family)?)?
    } else {
        let g = match family.family {
            Some(_) => build(&family_spec(family)?)?,
            None => {
                let text = read_input(input, io)?;
                parse_one_graph(&text, input.input_format)?
            }
        };
        match method {
            SeqMethod::Dfs => path_sequence_dfs(&g)?,
            _ => path_sequence_dp(&g)?,
        }
    };
    out(io, &seq.to_string())?;
    Ok(0)
}

fn cmd_verify(
    kind: FamilyKind,
    max: Option<usize>,
    max_n: Option<usize>,
    io: &mut Io<'_>,
) -> Outcome {
    let grid = family_grid(
        kind,
        GridBounds {
            max_param: max,
            max_vertices: max_n,
        },
    )?;
    let mut failures = 0;
    for spec in &grid {
        if spec.vertex_count() > DP_MAX_N {
            return Err(Error::too_large(
                "verify (subset DP oracle)",
                spec.vertex_count(),
                DP_MAX_N,
            )
            .into());
        }
        let formula = sequence_of(spec)?;
        let oracle = path_sequence_dp(&build(spec)?)?;
        if formula != oracle {
            failures += 1;
            out(
                io,
                &format!("FAIL {spec}: formula {formula} oracle {oracle}"),
            )?;
        }
    }
    out(
        io,
        &format!(
            "{} of {} {kind} specs agree",
            grid.len() - failures,
            grid.len()
        ),
    )?;
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_identify(kind: FamilyKind, text: &str, io: &mut Io<'_>) -> Outcome {
    let seq: PathSequence = text.parse()?;
    let result = identify(kind, &seq)?;
    match result.survivors.as_slice() {
        [] => {
            out(io, "no match")?;
            Ok(1)
        }
        [only] => {
            out(io, &only.to_string())?;
            Ok(0)
        }
        several => {
            for spec in several {
                out(io, &spec.to_string())?;
            }
            let _ = writeln!(
                io.stderr,
                "warning: {} candidates share this sequence",
                several.len()
            );
            Ok(0)
        }
    }
}

fn cmd_collide(
    input: &InputArgs,
    enumerate: Option<usize>,
    connected_only: bool,
    keep_duplicates: bool,
    io: &mut Io<'_>,
) -> Outcome {
    let options = CollisionOptions {
        connected_only,
        dedupe_isomorphic: !keep_duplicates,
    };
    let scan = match enumerate {
        Some(n) => find_collisions(enumerate_labeled_graphs(n)?, options),
        None => {
            if input.input_format == InputFormat::EdgeList {
                return Err(usage("collide reads graph6 records, one per line"));
            }
            let text = read_input(input, io)?;
            let graphs = content_lines(&text)
                .map(|(line, record)| {
                    parse_graph6(record).map_err(|e| usage(format!("line {line}: {e}")))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            find_collisions(graphs, options)
        }
    };
    for skipped in &scan.skipped {
        let _ = writeln!(
            io.stderr,
            "skipped graph {}: {}",
            skipped.index, skipped.reason
        );
    }
    if let Err(e) = write_collision_report(&scan.records, io.stdout) {
        return Err(usage(format!("{e} (report is incomplete)")));
    }
    Ok(if scan.records.is_empty() { 0 } else { 1 })
}
