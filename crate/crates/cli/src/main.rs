use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cayley_core::algebra::{axiom_report, closure, parse_table, serialize_table};
use cayley_core::build::{cayley_graph, default_labeling};
use cayley_core::classify::{classify_all_with_cap, ClassVerdict, ClassificationReport};
use cayley_core::graph::{accessible_subgraph, parse_graph, serialize_graph};
use cayley_core::props::{
    is_1_propagating_vertex, is_chain_propagating_vertex, is_in_simple, is_locally_commutative,
    is_loop_propagating, is_out_simple, is_propagating_vertex, structural_report, StructuralReport,
};
use cayley_core::synth::{chain_operation, edge_operation, path_operation, DEFAULT_SEARCH_CAP};
use cayley_core::{ClosureMode, Error, GeneratorSet, Graph, Labeling, MagmaTable, Token};

#[derive(Parser)]
#[command(name = "cayley", version, about = "Cayley graph recognition and synthesis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Path,
    Chain,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report and per-vertex predicates of a graph.
    Check {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide every algebraic class for a graph.
    Classify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Maximum number of partial injections visited per semigroup class.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP, value_parser = clap::value_parser!(u64).range(1..))]
        search_cap: u64,
    },
    /// Synthesize an operation table from a graph anchored at a vertex.
    Synth {
        input: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the generalized Cayley graph of a table.
    Build {
        input: PathBuf,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        generators: Vec<String>,
        /// Generator names as `g=label`; defaults to the generator itself.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        labels: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build, re-synthesize at the identity, and compare on the closure.
    Roundtrip {
        input: PathBuf,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        generators: Vec<String>,
    },
}

enum Failure {
    Precondition(String),
    Parse(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Precondition(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Precondition(m) | Failure::Parse(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        match err {
            Error::Syntax { .. }
            | Error::ReservedPrefix { .. }
            | Error::ReservedToken(_)
            | Error::InvalidToken(_)
            | Error::EmptyGraph
            | Error::RaggedRow { .. }
            | Error::NotClosed { .. }
            | Error::InvalidTable(_) => Failure::Parse(err.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_table(path: &Path) -> Result<MagmaTable, Failure> {
    parse_table(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn emit(text: String, output: Option<&Path>) -> CmdResult {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(set: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    set.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn structural_lines(s: &StructuralReport) -> String {
    let flags = [
        ("deterministic", s.deterministic),
        ("co_deterministic", s.co_deterministic),
        ("simple", s.simple),
        ("source_complete", s.source_complete),
        ("target_complete", s.target_complete),
        ("connected", s.connected),
        ("strongly_connected", s.strongly_connected),
    ];
    let sets = [
        ("out_simple_vertices", &s.out_simple_vertices),
        ("in_simple_vertices", &s.in_simple_vertices),
        ("source_complete_vertices", &s.source_complete_vertices),
        ("target_complete_vertices", &s.target_complete_vertices),
        ("roots", &s.roots),
        ("co_roots", &s.co_roots),
        ("one_roots", &s.one_roots),
        ("one_coroots", &s.one_coroots),
    ];
    let mut out = String::new();
    for (k, v) in flags {
        writeln!(out, "{k}={}", yes_no(v)).unwrap();
    }
    for (k, v) in sets {
        writeln!(out, "{k}={}", join(v)).unwrap();
    }
    out
}

/// A predicate value, or the reason it does not apply.
enum Flag {
    Value(bool),
    NotApplicable(&'static str),
}

impl Flag {
    fn of(result: cayley_core::Result<bool>) -> Flag {
        match result {
            Ok(b) => Flag::Value(b),
            Err(Error::NotDeterministic) => Flag::NotApplicable("not deterministic"),
            Err(Error::NotCoDeterministic) => Flag::NotApplicable("not co-deterministic"),
            Err(e) => panic!("unexpected predicate error: {e}"),
        }
    }

    fn text(&self) -> String {
        match self {
            Flag::Value(b) => yes_no(*b).to_string(),
            Flag::NotApplicable(reason) => format!("n/a: {reason}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Flag::Value(b) => json!(b),
            Flag::NotApplicable(reason) => json!(format!("n/a: {reason}")),
        }
    }
}

fn vertex_flags(g: &Graph, v: &Token) -> Vec<(&'static str, Flag)> {
    vec![
        ("out_simple", Flag::of(is_out_simple(g, v))),
        ("in_simple", Flag::of(is_in_simple(g, v))),
        ("locally_commutative", Flag::of(is_locally_commutative(g, v))),
        ("loop_propagating", Flag::of(is_loop_propagating(g, v))),
        ("one_propagating", Flag::of(is_1_propagating_vertex(g, v))),
        ("propagating", Flag::of(is_propagating_vertex(g, v))),
        ("chain_propagating", Flag::of(is_chain_propagating_vertex(g, v))),
    ]
}

fn cmd_check(input: &Path, format: Format) -> CmdResult {
    let g = read_graph(input)?;
    let s = structural_report(&g);
    match format {
        Format::Text => {
            let mut out = structural_lines(&s);
            for v in g.vertices() {
                for (name, flag) in vertex_flags(&g, v) {
                    writeln!(out, "vertex {v}: {name}={}", flag.text()).unwrap();
                }
            }
            Ok(out)
        }
        Format::Json => {
            let vertices: serde_json::Map<String, Value> = g
                .vertices()
                .iter()
                .map(|v| {
                    let flags: serde_json::Map<String, Value> = vertex_flags(&g, v)
                        .into_iter()
                        .map(|(k, f)| (k.to_string(), f.json()))
                        .collect();
                    (v.to_string(), Value::Object(flags))
                })
                .collect();
            let report = json!({ "structural": s, "vertices": vertices });
            Ok(format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
        }
    }
}

fn verdict_line(v: &ClassVerdict) -> String {
    if v.undecided {
        return format!("{}: UNKNOWN ({})", v.class, v.reason.as_deref().unwrap_or(""));
    }
    if !v.holds {
        return format!("{}: NO ({})", v.class, v.reason.as_deref().unwrap_or(""));
    }
    let w = v.witness.as_ref();
    let mut parts = Vec::new();
    if let Some(r) = w.and_then(|w| w.vertex.as_ref()) {
        parts.push(format!("root {r}"));
    }
    if let Some(i) = w.and_then(|w| w.injection.as_ref()) {
        parts.push(format!(
            "injection {}",
            join(i.map().iter().map(|(a, v)| format!("{a}={v}")))
        ));
    }
    if !v.details.is_empty() {
        parts.push(join(v.details.iter().map(|(k, f)| format!("{k}={}", yes_no(*f)))));
    }
    format!("{}: YES ({})", v.class, parts.join("; "))
}

fn classify_text(report: &ClassificationReport) -> String {
    let mut out = structural_lines(&report.structural);
    for v in &report.verdicts {
        writeln!(out, "{}", verdict_line(v)).unwrap();
    }
    out
}

fn cmd_classify(input: &Path, format: Format, cap: u64) -> CmdResult {
    let g = read_graph(input)?;
    let report = classify_all_with_cap(&g, cap)?;
    Ok(match format {
        Format::Text => classify_text(&report),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
    })
}

fn token(s: &str) -> Result<Token, Failure> {
    Token::new(s).map_err(|e| Failure::Parse(e.to_string()))
}

fn cmd_synth(input: &Path, vertex: &str, mode: Mode, output: Option<&Path>) -> CmdResult {
    let g = read_graph(input)?;
    let r = token(vertex)?;
    let table = match mode {
        Mode::Edge => edge_operation(&g, &r),
        Mode::Path => path_operation(&g, &r),
        Mode::Chain => chain_operation(&g, &r),
    }?;
    emit(serialize_table(&table), output)
}

fn generator_set(names: &[String]) -> Result<GeneratorSet, Failure> {
    let tokens = names.iter().map(|s| token(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(GeneratorSet::new(tokens)?)
}

fn labeling(q: &GeneratorSet, pairs: &[String]) -> Result<Labeling, Failure> {
    if pairs.is_empty() {
        return Ok(default_labeling(q));
    }
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (g, a) = pair
            .split_once('=')
            .ok_or_else(|| Failure::Parse(format!("label `{pair}` is not of the form g=a")))?;
        map.insert(token(g)?, token(a)?);
    }
    Ok(Labeling::new(map)?)
}

fn cmd_build(input: &Path, generators: &[String], labels: &[String], output: Option<&Path>) -> CmdResult {
    let t = read_table(input)?;
    let q = generator_set(generators)?;
    let lab = labeling(&q, labels)?;
    let g = cayley_graph(&t, &q, &lab)?;
    emit(serialize_graph(&g), output)
}

fn cmd_roundtrip(input: &Path, generators: &[String]) -> CmdResult {
    let t = read_table(input)?;
    let q = generator_set(generators)?;
    let g = cayley_graph(&t, &q, &default_labeling(&q))?;
    let rep = axiom_report(&t);
    let (anchor, support, rebuilt) = if rep.is_monoid() {
        let e = rep.identity.clone().unwrap();
        let support = closure(&t, &q, ClosureMode::Monoid)?;
        let sub = accessible_subgraph(&g, &[e.clone()].into())?;
        (e.clone(), support, path_operation(&sub, &e)?)
    } else if let (Some(e), true) = (rep.left_identities.first(), q.len() == t.size()) {
        (e.clone(), t.carrier_set(), edge_operation(&g, e)?)
    } else {
        return Err(Failure::Precondition(
            "table is neither a monoid nor a magma with a left identity generated by all its elements"
                .into(),
        ));
    };
    let expected = t.restrict(&support)?;
    let equal = expected == rebuilt;
    let text = format!(
        "anchor={anchor}\nclosure={}\nequal={}\n",
        join(&support),
        yes_no(equal)
    );
    if equal {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Precondition("re-synthesized table differs on the closure".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { input, format } => cmd_check(input, *format),
        Command::Classify {
            input,
            format,
            search_cap,
        } => cmd_classify(input, *format, *search_cap),
        Command::Synth {
            input,
            vertex,
            mode,
            output,
        } => cmd_synth(input, vertex, *mode, output.as_deref()),
        Command::Build {
            input,
            generators,
            labels,
            output,
        } => cmd_build(input, generators, labels, output.as_deref()),
        Command::Roundtrip { input, generators } => cmd_roundtrip(input, generators),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
