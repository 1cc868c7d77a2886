//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or domain error, 2 strict-mode discrepancy,
//! 3 size guard exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::completion::{zeta, CompletionResult, Limits};
use crate::error::Error;
use crate::families::{Family, FamilySpec};
use crate::graph::Graph;
use crate::io::{read_graph, write_graph, GraphFormat};
use crate::partition::{completion_partition, lucky_sum_product, max_partition_oracle};
use crate::verify::{rows_to_csv, rows_to_json, verify_range, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_STRICT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    Json,
}

impl From<InputFormat> for GraphFormat {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::EdgeList => GraphFormat::EdgeList,
            InputFormat::Json => GraphFormat::Json,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "chromcomp", version, about = "Exact chromatic completion numbers")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Vertices in input and output files are numbered from 1.
    #[arg(long, global = true)]
    pub one_based: bool,
    /// Lift the default order guard of 24 vertices (up to 64).
    #[arg(long, global = true)]
    pub force: bool,
    /// Give up after this many seconds and report the best value found so far.
    #[arg(long, global = true, value_name = "SECONDS")]
    pub timeout: Option<f64>,
    /// Worker threads for the solver; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ζ for a graph file.
    Zeta(ZetaArgs),
    /// Generate a family member and evaluate its formula and/or ζ.
    Family(FamilyArgs),
    /// Compare printed formulas with the solver over a parameter range.
    Verify(VerifyArgs),
    /// Completion partition and ℓ-completion sum-product of n.
    Partition(PartitionArgs),
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    pub input: PathBuf,
    /// Input format; guessed from the content when omitted.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
    /// Write the completion edges to this file as an edge list.
    #[arg(long, value_name = "PATH")]
    pub witness: Option<PathBuf>,
    /// Report every optimal canonical colouring.
    #[arg(long)]
    pub all_optima: bool,
}

#[derive(Debug, Args, Clone)]
pub struct FamilySelect {
    /// One of: cycle, path, sunlet, wheel, sun, helm, complete, multipartite, nested-join.
    pub family: String,
    /// Part sizes for `multipartite`, e.g. 2,2,1.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    /// Base family for `nested-join`.
    #[arg(long, default_value = "cycle")]
    pub base: String,
    /// Number of joined vertices for `nested-join`.
    #[arg(long, default_value_t = 1)]
    pub depth: usize,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub select: FamilySelect,
    /// Family parameter (base parameter for `nested-join`; ignored for `multipartite`).
    pub n: Option<usize>,
    /// Run the solver.
    #[arg(long)]
    pub zeta: bool,
    /// Evaluate the printed closed form.
    #[arg(long)]
    pub formula: bool,
    /// Print the generated graph.
    #[arg(long)]
    pub emit: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub select: FamilySelect,
    /// Inclusive parameter range: `5`, `3..11`, `3..=11` or `3-11`.
    pub range: String,
    /// Write the report here instead of standard output.
    #[arg(long, short, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Exit 2 if any row is a mismatch or non-integral.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    pub n: u64,
    pub l: u64,
    /// Also run the exhaustive maximum.
    #[arg(long)]
    pub oracle: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => EXIT_INPUT,
            };
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Zeta(a) => run_zeta(cli, a, out),
        Command::Family(a) => run_family(cli, a, out),
        Command::Verify(a) => run_verify(cli, a, out, err),
        Command::Partition(a) => run_partition(cli, a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn limits(cli: &Cli) -> std::result::Result<Limits, Failure> {
    let mut limits = Limits::default().with_workers(cli.workers);
    if cli.force {
        limits = limits.forced();
    }
    if let Some(secs) = cli.timeout {
        let t = Duration::try_from_secs_f64(secs)
            .map_err(|_| input_failure(format!("invalid timeout {secs}")))?;
        limits = limits.with_timeout(t);
    }
    Ok(limits)
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| input_failure(format!("write failed: {e}")))
}

fn shifted_pairs<'a>(pairs: impl Iterator<Item = &'a (usize, usize)>, shift: usize) -> Vec<[usize; 2]> {
    pairs.map(|&(u, v)| [u + shift, v + shift]).collect()
}

fn shifted_classes(classes: Vec<Vec<usize>>, shift: usize) -> Vec<Vec<usize>> {
    classes
        .into_iter()
        .map(|c| c.into_iter().map(|v| v + shift).collect())
        .collect()
}

fn compact(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn result_json(r: &CompletionResult, shift: usize) -> Value {
    let mut v = json!({
        "zeta": r.zeta,
        "exact": r.exact,
        "chi": r.chi,
        "classes": shifted_classes(r.witness.classes(), shift),
        "completion_edges": shifted_pairs(r.completion_edges.iter(), shift),
        "explored": r.explored,
    });
    if !r.optima.is_empty() {
        v["optima"] = r
            .optima
            .iter()
            .map(|c| json!({ "classes": shifted_classes(c.classes(), shift) }))
            .collect();
    }
    v
}

fn result_text(r: &CompletionResult, shift: usize) -> String {
    let mut s = format!(
        "zeta={}\nexact={}\nchi={}\nclasses={}\ncompletion_edges={}\nexplored={}\n",
        r.zeta,
        r.exact,
        r.chi,
        compact(&shifted_classes(r.witness.classes(), shift)),
        compact(&shifted_pairs(r.completion_edges.iter(), shift)),
        r.explored
    );
    for (i, c) in r.optima.iter().enumerate() {
        s.push_str(&format!(
            "optimum[{i}]={}\n",
            compact(&shifted_classes(c.classes(), shift))
        ));
    }
    s
}

fn run_zeta(cli: &Cli, args: &ZetaArgs, out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| input_failure(format!("{}: {e}", args.input.display())))?;
    let format = args
        .input_format
        .map(GraphFormat::from)
        .unwrap_or_else(|| GraphFormat::sniff(&text));
    let g = read_graph(&text, format, cli.one_based)?;
    let mut limits = limits(cli)?;
    limits.collect_all = args.all_optima;
    let r = zeta(&g, &limits)?;
    let shift = usize::from(cli.one_based);

    if let Some(path) = &args.witness {
        let added = Graph::new(g.order(), r.completion_edges.iter().copied())?;
        fs::write(path, write_graph(&added, GraphFormat::EdgeList, cli.one_based))
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
    }
    let body = match cli.format {
        OutputFormat::Text => result_text(&r, shift),
        OutputFormat::Json => format!("{}\n", compact(&result_json(&r, shift))),
    };
    emit(out, &body)?;
    Ok(EXIT_OK)
}

fn select_spec(select: &FamilySelect, n: Option<usize>) -> std::result::Result<FamilySpec, Failure> {
    let family: Family = select.family.parse()?;
    let need_n = || n.ok_or_else(|| input_failure(format!("family '{family}' needs a parameter n")));
    Ok(match family {
        Family::Multipartite => {
            if select.parts.is_empty() {
                return Err(input_failure("multipartite needs --parts"));
            }
            FamilySpec::Multipartite(select.parts.clone())
        }
        Family::NestedJoin => {
            let base: Family = select.base.parse()?;
            FamilySpec::NestedJoin {
                base: Box::new(FamilySpec::simple(base, need_n()?)?),
                depth: select.depth,
            }
        }
        simple => FamilySpec::simple(simple, need_n()?)?,
    })
}

fn run_family(cli: &Cli, args: &FamilyArgs, out: &mut dyn Write) -> Outcome {
    let spec = select_spec(&args.select, args.n)?;
    let g = spec.build()?;
    let (want_formula, want_zeta) = if args.formula || args.zeta || args.emit {
        (args.formula, args.zeta)
    } else {
        (true, true)
    };
    let formula = if want_formula {
        spec.formula().transpose()?
    } else {
        None
    };
    let solved = if want_zeta {
        Some(zeta(&g, &limits(cli)?)?)
    } else {
        None
    };
    let oracle = solved.as_ref().filter(|r| r.exact).map(|r| r.zeta);
    let status = (want_formula && want_zeta).then(|| Status::classify(formula.as_ref(), oracle));
    let shift = usize::from(cli.one_based);

    match cli.format {
        OutputFormat::Json => {
            let mut v = json!({
                "family": spec.family().name(),
                "instance": spec.to_string(),
                "n": spec.parameter(),
                "order": g.order(),
                "size": g.size(),
            });
            if want_formula {
                v["formula"] = formula.map(|f| f.to_string()).into();
                v["formula_integral"] = formula.map(|f| f.is_integral()).into();
            }
            if let Some(r) = &solved {
                v["zeta"] = r.zeta.into();
                v["exact"] = r.exact.into();
                v["classes"] = json!(shifted_classes(r.witness.classes(), shift));
            }
            if let Some(s) = status {
                v["status"] = s.as_str().into();
            }
            if let Some(note) = spec.domain_note() {
                v["note"] = note.into();
            }
            if args.emit {
                v["graph"] = serde_json::from_str(&write_graph(&g, GraphFormat::Json, cli.one_based))
                    .expect("graph json");
            }
            emit(out, &format!("{}\n", compact(&v)))?;
        }
        OutputFormat::Text => {
            // With --emit the graph comes first and the summary lines become comments.
            let prefix = if args.emit { "# " } else { "" };
            let mut lines = vec![
                format!("instance={spec}"),
                format!("order={} size={}", g.order(), g.size()),
            ];
            if want_formula {
                match formula {
                    Some(f) if f.is_integral() => lines.push(format!("formula={f}")),
                    Some(f) => lines.push(format!("formula={f} (non-integral)")),
                    None => lines.push("formula=none".into()),
                }
            }
            if let Some(r) = &solved {
                lines.push(format!("zeta={}", r.zeta));
                if !r.exact {
                    lines.push("exact=false".into());
                }
                lines.push(format!(
                    "classes={}",
                    compact(&shifted_classes(r.witness.classes(), shift))
                ));
            }
            if let Some(s) = status {
                lines.push(format!("status={s}"));
            }
            if let Some(note) = spec.domain_note() {
                lines.push(format!("note={note}"));
            }
            let mut body = if args.emit {
                write_graph(&g, GraphFormat::EdgeList, cli.one_based)
            } else {
                String::new()
            };
            for l in lines {
                body.push_str(prefix);
                body.push_str(&l);
                body.push('\n');
            }
            emit(out, &body)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `5`, `3..11`, `3..=11` or `3-11` as an inclusive range.
pub fn parse_range(s: &str) -> Option<std::ops::RangeInclusive<usize>> {
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some(a..=b)
}

fn run_verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let range = parse_range(&args.range)
        .ok_or_else(|| input_failure(format!("invalid range '{}'", args.range)))?;
    let family: Family = args.select.family.parse()?;
    if family == Family::Multipartite {
        return Err(input_failure(
            "multipartite has no scalar parameter to sweep; use `family multipartite --parts`",
        ));
    }
    let limits = limits(cli)?;
    let rows = verify_range(range, &limits, |n| select_spec(&args.select, Some(n)).map_err(|f| Error::Domain(f.message)))?;
    let report = match cli.format {
        OutputFormat::Text => rows_to_csv(&rows),
        OutputFormat::Json => rows_to_json(&rows),
    };
    match &args.output {
        Some(path) => fs::write(path, &report)
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?,
        None => emit(out, &report)?,
    }
    let discrepancies = rows.iter().filter(|r| r.status.is_discrepancy()).count();
    let _ = writeln!(err, "{} rows, {} discrepancies", rows.len(), discrepancies);
    Ok(if args.strict && discrepancies > 0 {
        EXIT_STRICT
    } else {
        EXIT_OK
    })
}

fn run_partition(cli: &Cli, args: &PartitionArgs, out: &mut dyn Write) -> Outcome {
    let partition = completion_partition(args.n, args.l)?;
    let value = lucky_sum_product(args.n, args.l)?;
    let oracle = if args.oracle {
        Some(max_partition_oracle(args.n, args.l)?)
    } else {
        None
    };
    let agree = oracle
        .as_ref()
        .map(|(max, argmax)| *max == value && argmax.contains(&partition));
    let body = match cli.format {
        OutputFormat::Json => {
            let mut v = json!({
                "n": args.n,
                "l": args.l,
                "completion_partition": partition.parts(),
                "sum_product": value,
            });
            if let Some((max, argmax)) = &oracle {
                v["oracle_max"] = (*max).into();
                v["oracle_argmax"] = argmax.iter().map(|p| json!(p.parts())).collect();
                v["agree"] = agree.into();
            }
            format!("{}\n", compact(&v))
        }
        OutputFormat::Text => {
            let mut s = format!("completion_partition={partition}\nsum_product={value}\n");
            if let Some((max, argmax)) = &oracle {
                let list: Vec<String> = argmax.iter().map(ToString::to_string).collect();
                s.push_str(&format!(
                    "oracle_max={max}\noracle_argmax={}\nagree={}\n",
                    list.join(" "),
                    agree.unwrap_or(false)
                ));
            }
            s
        }
    };
    emit(out, &body)?;
    Ok(EXIT_OK)
}
