//! `hamspec`: check sufficient conditions for Hamiltonian cycles and paths,
//! reproduce the reference `q(G)` table and run exhaustive soundness checks.

mod analyze;
mod input;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hamspec::conditions::Tolerances;
use hamspec::family::{make_family, FamilyId};
use hamspec::spectral::{DEFAULT_CMP_TOL, DEFAULT_TOL};
use hamspec::verify::{select, soundness_with, table1_report, tightness_search, Caps, Mode, TABLE1_TOL};
use hamspec::write_graph6;

use analyze::{analyze, oracle_result, ORACLE_MAX};
use input::{read_records, InputFormat};

const EXIT_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "hamspec", version, about = "Spectral and extremal sufficient conditions for Hamiltonicity")]
struct Cli {
    /// Residual tolerance for power iteration.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Width of the boundary band around spectral thresholds.
    #[arg(long = "cmp-tol", global = true, default_value_t = DEFAULT_CMP_TOL)]
    cmp_tol: f64,
    /// Omit timings so repeated runs give identical output.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ReadArgs {
    /// Input file; stdin when omitted.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input: InputFormat,
    /// Stop at the first malformed record.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every applicable condition on each input graph.
    Analyze(ReadArgs),
    /// Recompute the reference signless Laplacian table.
    Table1 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively check conditions against the exact oracle.
    Verify {
        /// Condition id, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = Caps::default().min_n)]
        min_n: usize,
        #[arg(long, default_value_t = Caps::default().max_n)]
        max_n: usize,
        /// Largest `p·q` for bipartite shapes.
        #[arg(long, default_value_t = Caps::default().max_pq)]
        max_pq: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Also report this many near misses per condition.
        #[arg(long)]
        near_misses: Option<usize>,
        /// Write one JSON report per condition into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the canonical instance of a named family.
    Family {
        #[arg(value_enum, ignore_case = true)]
        name: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        leaves: Option<usize>,
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Decide Hamiltonicity and traceability exactly.
    Oracle(ReadArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "K")]
    Complete,
    #[value(name = "Kpq")]
    CompleteBipartite,
    #[value(name = "C")]
    Cycle,
    Star,
    #[value(name = "Kn1PlusEdge")]
    Kn1PlusEdge,
    #[value(name = "Kn1PlusVertex")]
    Kn1PlusVertex,
    #[value(name = "Knn1PlusEdge")]
    Knn1PlusEdge,
    #[value(name = "Kpn2Plus4e")]
    Kpn2Plus4e,
    #[value(name = "Knn1Plus2e")]
    Knn1Plus2e,
    #[value(name = "NC")]
    Nc,
    #[value(name = "NP")]
    Np,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn read_input(file: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match file {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", path.display()) })?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure { code: EXIT_PARSE, message: format!("stdin: {e}") })?;
        }
    }
    Ok(text)
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn run_records(args: &ReadArgs, out: &mut impl Write, mut emit: impl FnMut(&mut dyn Write, input::Record)) -> Result<u8, Failure> {
    let text = read_input(args.file.as_deref())?;
    let failures = read_records(&text, args.input, args.strict, |r| match r {
        Ok(rec) => emit(out, rec),
        Err(e) => eprintln!("line {}: {}", e.line, e.message),
    });
    Ok(if failures > 0 { EXIT_PARSE } else { 0 })
}

fn cmd_analyze(args: &ReadArgs, tol: &Tolerances) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let format = args.format;
    run_records(args, &mut out, |out, rec| {
        let record = analyze(rec.id, rec.line, &rec.graph, tol);
        let _ = match format {
            Format::Text => write!(out, "{}", record.to_text()),
            Format::Json => serde_json::to_writer(&mut *out, &record)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(out)),
        };
    })
}

#[derive(Serialize)]
struct OracleRecord {
    id: String,
    line: usize,
    n: usize,
    #[serde(flatten)]
    result: Option<analyze::OracleResult>,
}

fn cmd_oracle(args: &ReadArgs) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let format = args.format;
    run_records(args, &mut out, |out, rec| {
        let result = oracle_result(&rec.graph);
        let _ = match format {
            Format::Json => {
                let r = OracleRecord { id: rec.id, line: rec.line, n: rec.graph.n(), result };
                serde_json::to_writer(&mut *out, &r).map_err(io::Error::from).and_then(|_| writeln!(out))
            }
            Format::Text => match result {
                Some(o) => {
                    let walk = |w: &Option<Vec<usize>>| {
                        w.as_ref().map_or("none".to_string(), |v| {
                            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                        })
                    };
                    writeln!(out, "{}: hamiltonian={} cycle: {}", rec.id, o.hamiltonian, walk(&o.cycle))
                        .and_then(|_| writeln!(out, "{}: traceable={} path: {}", rec.id, o.traceable, walk(&o.path)))
                }
                None => writeln!(out, "{}: skipped, n = {} > {ORACLE_MAX}", rec.id, rec.graph.n()),
            },
        };
    })
}

fn cmd_table1(format: Format) -> Result<u8, Failure> {
    let report = table1_report(TABLE1_TOL);
    let mut out = io::stdout().lock();
    let _ = match format {
        Format::Text => write!(out, "{}", report.to_text()),
        Format::Json => json_line(&mut out, &report),
    };
    Ok(if report.pass { 0 } else { EXIT_FAILED })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorem: &str,
    caps: Caps,
    jobs: Option<usize>,
    near_misses: Option<usize>,
    out_dir: Option<&Path>,
    format: Format,
    deterministic: bool,
    tol: &Tolerances,
) -> Result<u8, Failure> {
    let conditions = select(theorem).map_err(|e| usage(format!("{e}; try `all` or one of: {}", ids())))?;
    caps.validate().map_err(|e| usage(e.to_string()))?;
    if caps.min_n == 0 || caps.min_n > caps.max_n {
        return Err(usage(format!("--min-n must lie in 1..={}", caps.max_n)));
    }
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| usage(e.to_string()))?;
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure { code: EXIT_FAILED, message: format!("{}: {e}", dir.display()) })?;
    }
    let mut out = io::stdout().lock();
    let mut all_pass = true;
    for c in conditions {
        let t = Instant::now();
        let report = soundness_with(c, caps, Mode::Parallel, tol).map_err(|e| usage(e.to_string()))?;
        let elapsed = t.elapsed();
        all_pass &= report.passed();
        let tight = near_misses.map(|k| tightness_search(c, caps, k)).transpose().map_err(|e| usage(e.to_string()))?;
        if let Some(dir) = out_dir {
            let path = dir.join(format!("{}.json", c.id()));
            let body = serde_json::to_string_pretty(&report).expect("report serializes");
            std::fs::write(&path, body + "\n")
                .map_err(|e| Failure { code: EXIT_FAILED, message: format!("{}: {e}", path.display()) })?;
        }
        let _ = match format {
            Format::Text => {
                let mut s = report.to_text();
                if !deterministic {
                    s = s.replacen('\n', &format!(" ({:.2}s)\n", elapsed.as_secs_f64()), 1);
                }
                if let Some(t) = &tight {
                    s.push_str(&t.to_text());
                }
                write!(out, "{s}")
            }
            Format::Json => {
                #[derive(Serialize)]
                struct Entry<'a> {
                    report: &'a hamspec::verify::SoundnessReport,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    tightness: Option<&'a hamspec::verify::TightnessReport>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    seconds: Option<f64>,
                }
                let seconds = (!deterministic).then(|| elapsed.as_secs_f64());
                json_line(&mut out, &Entry { report: &report, tightness: tight.as_ref(), seconds })
            }
        };
    }
    Ok(if all_pass { 0 } else { EXIT_FAILED })
}

fn ids() -> String {
    hamspec::conditions::Condition::ALL.iter().map(|c| c.id()).collect::<Vec<_>>().join(", ")
}

fn need(value: Option<usize>, flag: &str, name: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("family {name} requires --{flag}")))
}

fn family_id(name: FamilyName, n: Option<usize>, p: Option<usize>, q: Option<usize>, leaves: Option<usize>, index: Option<usize>) -> Result<FamilyId, Failure> {
    let label = name.to_possible_value().expect("no skipped variants").get_name().to_string();
    let n_ = || need(n, "n", &label);
    Ok(match name {
        FamilyName::Complete => FamilyId::CompleteK { n: n_()? },
        FamilyName::CompleteBipartite => {
            FamilyId::CompleteBipartite { p: need(p, "p", &label)?, q: need(q, "q", &label)? }
        }
        FamilyName::Cycle => FamilyId::Cycle { n: n_()? },
        FamilyName::Star => FamilyId::Star { leaves: need(leaves, "leaves", &label)? },
        FamilyName::Kn1PlusEdge => FamilyId::Kn1PlusEdge { n: n_()? },
        FamilyName::Kn1PlusVertex => FamilyId::Kn1PlusVertex { n: n_()? },
        FamilyName::Knn1PlusEdge => FamilyId::Knn1PlusEdge { n: n_()? },
        FamilyName::Kpn2Plus4e => {
            let n = n_()?;
            FamilyId::Kpn2Plus4e { n, p: p.unwrap_or(n) }
        }
        FamilyName::Knn1Plus2e => FamilyId::Knn1Plus2e { n: n_()? },
        FamilyName::Nc => FamilyId::NcMember { index: need(index, "index", &label)? },
        FamilyName::Np => FamilyId::NpMember { index: need(index, "index", &label)? },
    })
}

fn cmd_family(id: FamilyId, format: GraphFormat) -> Result<u8, Failure> {
    let fam = make_family(id).map_err(|e| usage(e.to_string()))?;
    let g = fam.graph();
    let mut out = io::stdout().lock();
    let _ = match format {
        GraphFormat::Graph6 => writeln!(out, "{}", write_graph6(&g)),
        GraphFormat::Edges => {
            let mut s = format!("{} {}\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            write!(out, "{s}")
        }
        GraphFormat::Json => {
            #[derive(Serialize)]
            struct FamilyOut {
                name: String,
                id: FamilyId,
                graph6: String,
                n: usize,
                m: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                sides: Option<(usize, usize)>,
                edges: Vec<(usize, usize)>,
            }
            let sides = fam.bipartite().map(|b| (b.p(), b.q()));
            let body = FamilyOut {
                name: id.to_string(),
                id,
                graph6: write_graph6(&g),
                n: g.n(),
                m: g.edge_count(),
                sides,
                edges: g.edges(),
            };
            json_line(&mut out, &body)
        }
    };
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if !(cli.tol > 0.0) || !(cli.cmp_tol >= 0.0) {
        return Err(usage("--tol must be positive and --cmp-tol nonnegative"));
    }
    let tol = Tolerances { spectral: cli.tol, compare: cli.cmp_tol };
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args, &tol),
        Command::Oracle(args) => cmd_oracle(&args),
        Command::Table1 { format } => cmd_table1(format),
        Command::Verify { theorem, min_n, max_n, max_pq, jobs, near_misses, out, format } => cmd_verify(
            &theorem,
            Caps { min_n, max_n, max_pq },
            jobs,
            near_misses,
            out.as_deref(),
            format,
            cli.deterministic,
            &tol,
        ),
        Command::Family { name, n, p, q, leaves, index, format } => {
            cmd_family(family_id(name, n, p, q, leaves, index)?, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hamspec: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
