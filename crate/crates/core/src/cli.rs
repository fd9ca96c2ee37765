//! Command-line front end and the text formats it reads and writes.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! colours r b
//! vertices 3
//! edge 0 1 r
//! edge 1 2 b
//! ```
//!
//! `colours` and `vertices` each appear once, before any `edge` line.
//! Repeated edge lines are parallel edges.
//!
//! Source instances for `generate` use `vertices n`, `edge u v`, an
//! optional `k K` budget (vertex cover) and `part v ...` lines (independent
//! set).
//!
//! Reports are `key: value` lines. Exit status: 0 for yes or all checks
//! passing, 1 for no or a failed check, 2 for errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::dichotomy::{classify, classify_vdel_with};
use crate::ecgraph::{Colour, ColouredGraph, Target};
use crate::error::{Error, Result};
use crate::fptsolve::{solve, Certificate, ProblemKind, Solution, SolveOptions};
use crate::gadgets::{
    gen_mis_switch, gen_vc_edel_h2b_rb, gen_vc_edel_h2rb_rb, gen_vc_switch_h2b_rdash,
    verify_gadget_properties, GadgetFamily, MisInstance, ReducedInstance, VcInstance,
};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Meaningful lines of a text file: comments stripped, blanks skipped,
/// numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number(line: usize, word: &str, what: &str) -> Result<usize> {
    word.parse().map_err(|_| {
        parse_error(
            line,
            format!("{what} must be a non-negative integer, got {word:?}"),
        )
    })
}

/// Parse the graph file format.
pub fn parse_graph(text: &str) -> Result<ColouredGraph> {
    let mut palette: Option<BTreeSet<Colour>> = None;
    let mut g: Option<ColouredGraph> = None;
    for (line, words) in lines(text) {
        match words[0] {
            "colours" => {
                if palette.is_some() {
                    return Err(parse_error(line, "repeated colours line"));
                }
                let mut set = BTreeSet::new();
                for w in &words[1..] {
                    let c = Colour::new(w).map_err(|e| parse_error(line, e.to_string()))?;
                    if !set.insert(c) {
                        return Err(parse_error(line, format!("colour {w} declared twice")));
                    }
                }
                palette = Some(set);
            }
            "vertices" => {
                if g.is_some() {
                    return Err(parse_error(line, "repeated vertices line"));
                }
                if words.len() != 2 {
                    return Err(parse_error(line, "expected: vertices <n>"));
                }
                g = Some(ColouredGraph::new(number(line, words[1], "vertex count")?));
            }
            "edge" => {
                let (Some(palette), Some(g)) = (&palette, &mut g) else {
                    return Err(parse_error(
                        line,
                        "edge before the colours and vertices lines",
                    ));
                };
                if words.len() != 4 {
                    return Err(parse_error(line, "expected: edge <u> <v> <colour>"));
                }
                let u = number(line, words[1], "endpoint")?;
                let v = number(line, words[2], "endpoint")?;
                if u >= g.n() || v >= g.n() {
                    return Err(parse_error(
                        line,
                        format!("endpoint out of range 0..{}", g.n()),
                    ));
                }
                let c = Colour::new(words[3]).map_err(|e| parse_error(line, e.to_string()))?;
                if !palette.contains(&c) {
                    return Err(parse_error(line, format!("colour {c} not declared")));
                }
                g.add_edge(u, v, c).expect("checked range");
            }
            other => return Err(parse_error(line, format!("unknown keyword {other:?}"))),
        }
    }
    if palette.is_none() {
        return Err(parse_error(0, "missing colours line"));
    }
    g.ok_or_else(|| parse_error(0, "missing vertices line"))
}

/// Print in the graph file format. The palette is `r b` when the edges use
/// no other colour, else the colours in use.
pub fn print_graph(g: &ColouredGraph) -> String {
    let used = g.colours();
    let palette: Vec<String> = if used.iter().all(Colour::is_red_or_blue) {
        vec!["r".into(), "b".into()]
    } else {
        used.iter().map(|c| c.name().to_string()).collect()
    };
    let mut s = format!("colours {}\nvertices {}\n", palette.join(" "), g.n());
    for e in g.edges() {
        writeln!(s, "edge {} {} {}", e.u, e.v, e.colour).expect("string write");
    }
    s
}

/// A source instance for the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: Option<usize>,
    pub parts: Vec<Vec<usize>>,
}

pub fn parse_source(text: &str) -> Result<SourceInstance> {
    let mut src = SourceInstance::default();
    let mut seen_n = false;
    for (line, words) in lines(text) {
        match (words[0], words.len()) {
            ("vertices", 2) if !seen_n => {
                src.n = number(line, words[1], "vertex count")?;
                seen_n = true;
            }
            ("edge", 3) if seen_n => {
                let u = number(line, words[1], "endpoint")?;
                let v = number(line, words[2], "endpoint")?;
                src.edges.push((u, v));
            }
            ("k", 2) => src.k = Some(number(line, words[1], "budget")?),
            ("part", _) if seen_n => {
                let part = words[1..]
                    .iter()
                    .map(|w| number(line, w, "vertex"))
                    .collect::<Result<Vec<_>>>()?;
                src.parts.push(part);
            }
            _ => {
                return Err(parse_error(
                    line,
                    format!("unexpected line starting with {:?}", words[0]),
                ))
            }
        }
    }
    if !seen_n {
        return Err(parse_error(0, "missing vertices line"));
    }
    Ok(src)
}

/// The graph file of a generated instance, with its metadata and the origin
/// of every vertex as comments.
pub fn print_reduced(name: &str, r: &ReducedInstance) -> String {
    let mut s = format!(
        "# reduction: {name}\n# problem: {}\n# target: {}\n# budget: {}\n",
        r.problem,
        r.target.label(),
        r.budget
    );
    for (v, origin) in r.provenance.iter().enumerate() {
        writeln!(s, "# vertex {v}: {origin}").expect("string write");
    }
    s.push_str(&print_graph(&r.instance));
    s
}

#[derive(Parser, Debug)]
#[command(
    name = "ecmod",
    version,
    about = "Modification problems on edge-coloured graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether at most k modifications give a homomorphism to the target.
    Solve(SolveArgs),
    /// `solve --force-xp`.
    Oracle(SolveArgs),
    /// Complexity of a (problem, target) pair.
    Classify(ClassifyArgs),
    /// Build a hardness-reduction instance from a source instance.
    Generate(GenerateArgs),
    /// Check the gadget properties over ranges of parameters.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct TargetArgs {
    /// Target name, e.g. H2b_r,b.
    #[arg(long, allow_hyphen_values = true)]
    pub target: Option<String>,
    /// Graph file holding the target.
    #[arg(long)]
    pub target_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long)]
    pub problem: ProblemKind,
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long)]
    pub k: usize,
    /// Print the certificate and the homomorphism.
    #[arg(long)]
    pub certificate: bool,
    /// Exactly k modifications.
    #[arg(long, alias = "exact-k")]
    pub strict: bool,
    /// Use the exhaustive solver.
    #[arg(long)]
    pub force_xp: bool,
    /// Graph file, `-` for standard input.
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub problem: ProblemKind,
    #[command(flatten)]
    pub target: TargetArgs,
    /// Ambient colour set for vertex deletion, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ambient: Option<Vec<String>>,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// vc-edel-h2b_rb, vc-edel-h2rb_rb, vc-switch-h2b_rdash or mis-switch.
    pub reduction: String,
    /// Source instance file, `-` for standard input.
    pub input: PathBuf,
    /// Budget for vertex cover sources; overrides a `k` line.
    #[arg(long)]
    pub k: Option<usize>,
    /// Gadget family for mis-switch: r, b or -.
    #[arg(long, allow_hyphen_values = true, default_value = "r")]
    pub x: GadgetFamily,
    /// Girth parameter for mis-switch.
    #[arg(long, default_value_t = 3)]
    pub q: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub family: GadgetFamily,
    /// A value or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    pub q: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range)]
    pub size: RangeInclusive<usize>,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let bound = |w: &str| {
        w.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad bound {w:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(bound(a)?..=bound(b.trim_start_matches('='))?),
        None => {
            let v = bound(s)?;
            Ok(v..=v)
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load_target(args: &TargetArgs) -> Result<Target> {
    match (&args.target, &args.target_file) {
        (Some(name), _) => Target::from_name(name),
        (None, Some(path)) => Ok(Target::new(&parse_graph(&read_input(path)?)?)),
        (None, None) => Err(Error::Argument("a target is required".into())),
    }
}

fn target_lines(out: &mut String, h: &Target) {
    writeln!(out, "target: {}", h.label()).expect("string write");
    if let Some(m) = h.core_match() {
        writeln!(
            out,
            "canonical: {} colours_swapped={} vertices_swapped={}",
            m.core.as_str(),
            m.colours_swapped,
            m.vertices_swapped
        )
        .expect("string write");
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Report of a solve run.
pub fn solve_report(
    g: &ColouredGraph,
    h: &Target,
    k: usize,
    s: &Solution,
    certificate: bool,
) -> String {
    let mut out = format!("problem: {}\n", s.problem);
    target_lines(&mut out, h);
    let w = &mut out;
    writeln!(w, "k: {k}").expect("string write");
    writeln!(w, "answer: {}", if s.answer { "yes" } else { "no" }).expect("string write");
    writeln!(w, "method: {}", s.method).expect("string write");
    if s.fallback {
        writeln!(w, "fallback: true").expect("string write");
    }
    if s.answer {
        writeln!(w, "budget_used: {}", s.budget_used).expect("string write");
    }
    if let Some(o) = &s.obstruction {
        writeln!(w, "obstruction: {} vertices {}", o.kind, join(&o.vertices))
            .expect("string write");
    }
    if certificate {
        if let Some(c) = &s.certificate {
            let key = match c {
                Certificate::DeletedVertices(_) => "deleted_vertices",
                Certificate::DeletedEdges(_) => "deleted_edges",
                Certificate::Switched(_) => "switched",
            };
            writeln!(w, "{key}: {}", join(c.items())).expect("string write");
            if let Certificate::DeletedEdges(items) = c {
                let edges = items.iter().map(|&i| {
                    let e = g.edge(i);
                    format!("{}-{}:{}", e.u, e.v, e.colour)
                });
                writeln!(w, "deleted_edge_list: {}", join(edges)).expect("string write");
            }
        }
        if let Some(hom) = &s.homomorphism {
            let pairs = hom.iter().enumerate().map(|(v, img)| match img {
                Some(t) => format!("{v}->{t}"),
                None => format!("{v}->deleted"),
            });
            writeln!(w, "homomorphism: {}", join(pairs)).expect("string write");
        }
    }
    out
}

/// Generate a reduction instance by name.
pub fn generate(
    name: &str,
    src: &SourceInstance,
    k: Option<usize>,
    x: GadgetFamily,
    q: usize,
) -> Result<ReducedInstance> {
    let vc = || -> Result<VcInstance> {
        let k = k
            .or(src.k)
            .ok_or_else(|| Error::Argument("vertex cover source needs a budget".into()))?;
        VcInstance::new(src.n, &src.edges, k)
    };
    match name {
        "vc-edel-h2b_rb" => Ok(gen_vc_edel_h2b_rb(&vc()?)),
        "vc-edel-h2rb_rb" => Ok(gen_vc_edel_h2rb_rb(&vc()?)),
        "vc-switch-h2b_rdash" => Ok(gen_vc_switch_h2b_rdash(&vc()?)),
        "mis-switch" => {
            let mis = MisInstance::new(src.n, &src.edges, src.parts.clone())?;
            gen_mis_switch(&mis, x, q)
        }
        _ => Err(Error::Argument(format!("unknown reduction {name:?}"))),
    }
}

fn execute(cli: Cli, out: &mut String) -> Result<i32> {
    match cli.command {
        Command::Solve(args) => run_solve(args, false, out),
        Command::Oracle(args) => run_solve(args, true, out),
        Command::Classify(args) => {
            let h = load_target(&args.target)?;
            let c = match (&args.ambient, args.problem) {
                (Some(names), ProblemKind::Vdel) => {
                    let set = names
                        .iter()
                        .map(|n| Colour::new(n))
                        .collect::<Result<BTreeSet<_>>>()?;
                    classify_vdel_with(&h, Some(&set))
                }
                (Some(_), _) => {
                    return Err(Error::Argument("--ambient applies to vdel only".into()))
                }
                (None, p) => classify(p, &h)?,
            };
            writeln!(out, "problem: {}", c.problem).expect("string write");
            target_lines(out, &h);
            writeln!(out, "classical: {}", c.classical).expect("string write");
            writeln!(out, "parameterized: {}", c.parameterized).expect("string write");
            writeln!(out, "verdict: {}, {}", c.classical, c.parameterized).expect("string write");
            writeln!(out, "source: {}", c.source).expect("string write");
            if let Some(note) = &c.note {
                writeln!(out, "note: {note}").expect("string write");
            }
            Ok(0)
        }
        Command::Generate(args) => {
            let src = parse_source(&read_input(&args.input)?)?;
            let r = generate(&args.reduction, &src, args.k, args.x, args.q)?;
            out.push_str(&print_reduced(&args.reduction, &r));
            Ok(0)
        }
        Command::Verify(args) => {
            let mut ok = true;
            for q in args.q.clone() {
                for size in args.size.clone() {
                    let report = verify_gadget_properties(args.family, q, size)?;
                    ok &= report.all_passed();
                    out.push_str(&report.to_string());
                }
            }
            writeln!(out, "result: {}", if ok { "pass" } else { "fail" }).expect("string write");
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_solve(args: SolveArgs, force_xp: bool, out: &mut String) -> Result<i32> {
    let h = load_target(&args.target)?;
    let g = parse_graph(&read_input(&args.input)?)?;
    let opts = SolveOptions {
        force_xp: force_xp || args.force_xp,
        strict: args.strict,
        ..SolveOptions::default()
    };
    let s = solve(args.problem, &g, &h, args.k, &opts)?;
    out.push_str(&solve_report(&g, &h, args.k, &s, args.certificate));
    Ok(if s.answer { 0 } else { 1 })
}

/// Run the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let mut report = String::new();
    match execute(cli, &mut report) {
        Ok(code) => {
            let _ = out.write_all(report.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
