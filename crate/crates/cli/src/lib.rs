//! Command-line front-end. [`run_with`] holds all the logic so tests can
//! drive it without spawning a process.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pathcontract::oracle::oracle_path_contraction;
use pathcontract::{
    compute_gamma, enumerate_small_connected, p5_witness, solve_2dcs, solve_3dcs, solve_with_threads, Constants,
    Fraction, Graph, Subroutine, VertexSet, WitnessStructure,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pathcontract",
    version,
    about = "Contract a graph to the longest possible path"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time per stage.
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads for the solver.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Longest path the graph contracts to, with a witness.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        alpha: Option<Fraction>,
        #[arg(long)]
        beta: Option<Fraction>,
        #[arg(long)]
        gamma: Option<Fraction>,
        /// Override the derived 1 - beta/2 - gamma/2.
        #[arg(long)]
        epsilon: Option<Fraction>,
    },
    /// Same answer by exhaustive two-coloring (small graphs only).
    Oracle { graph: PathBuf },
    /// Run one subroutine: soepc, bpc, tdcpc or nsoepc.
    Sub {
        name: Subroutine,
        graph: PathBuf,
        #[arg(long)]
        param: Fraction,
    },
    /// Dump the nice-solution table for all rho-small connected sets.
    Gamma {
        graph: PathBuf,
        #[arg(long)]
        rho: Fraction,
    },
    /// List connected sets with closed neighborhood at most rho*n.
    Enum {
        graph: PathBuf,
        #[arg(long)]
        rho: Fraction,
    },
    /// Split into two connected parts holding z1 and z2.
    Dcs2 {
        graph: PathBuf,
        #[arg(long)]
        z1: VertexList,
        #[arg(long)]
        z2: VertexList,
    },
    /// Split into (V1, U, V2) with U separating V1 from V2; empty sides are guessed.
    Dcs3 {
        graph: PathBuf,
        #[arg(long, default_value = "")]
        z1: VertexList,
        #[arg(long, default_value = "")]
        z2: VertexList,
    },
    /// Whether the graph contracts to the path on five vertices.
    P5 { graph: PathBuf },
    /// Check a witness (JSON list of bags, or a `solve --json` report).
    Verify { graph: PathBuf, witness: PathBuf },
}

/// Comma-separated vertex list; the empty string is the empty list.
#[derive(Clone, Debug)]
struct VertexList(Vec<usize>);

impl std::str::FromStr for VertexList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(VertexList(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex `{t}`")))
            .collect::<Result<_, _>>()
            .map(VertexList)
    }
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    text.parse().map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn vertex_set(g: &Graph, vs: &[usize]) -> Result<VertexSet, Failure> {
    if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
        return Err(usage(format!("vertex {v} out of range for n={}", g.n())));
    }
    Ok(vs.iter().copied().collect())
}

fn bags(w: &WitnessStructure) -> Vec<Vec<usize>> {
    w.parts().iter().map(|p| p.to_vec()).collect()
}

fn bags_text(w: &WitnessStructure) -> String {
    w.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SetEntry {
    set: Vec<usize>,
    gamma: usize,
}

struct Ctx<'a, W: Write> {
    json: bool,
    timing: bool,
    threads: usize,
    out: &'a mut W,
}

impl<W: Write> Ctx<'_, W> {
    fn emit(&mut self, value: &Value, text: &str) -> Result<(), Failure> {
        let res = if self.json {
            writeln!(self.out, "{value}")
        } else {
            write!(self.out, "{text}")
        };
        res.map_err(|e| Failure {
            code: EXIT_USAGE,
            msg: format!("write failed: {e}"),
        })
    }
}

fn execute<W: Write>(cmd: Command, ctx: &mut Ctx<'_, W>) -> Result<i32, Failure> {
    match cmd {
        Command::Solve {
            graph,
            alpha,
            beta,
            gamma,
            epsilon,
        } => {
            let g = read_graph(&graph)?;
            let d = Constants::default();
            let mut c = Constants::new(
                alpha.unwrap_or(d.alpha()),
                beta.unwrap_or(d.beta()),
                gamma.unwrap_or(d.gamma()),
            )
            .map_err(|e| usage(e.to_string()))?;
            if let Some(eps) = epsilon {
                c = c.with_epsilon(eps);
            }
            let report = solve_with_threads(&g, &c, ctx.threads).map_err(|e| usage(e.to_string()))?;
            let subs: BTreeMap<&str, Option<usize>> = Subroutine::ALL
                .iter()
                .map(|r| (r.name(), report.per_subroutine.get(r).copied()))
                .collect();
            let mut value = json!({ "t": report.t, "witness": bags(&report.witness), "subroutines": subs });
            let mut text = format!("t = {}\nwitness: {}\n", report.t, bags_text(&report.witness));
            for (name, t) in &subs {
                match t {
                    Some(t) => text.push_str(&format!("{name}: {t}\n")),
                    None => text.push_str(&format!("{name}: skipped\n")),
                }
            }
            if ctx.timing {
                let mut ms: BTreeMap<&str, f64> = report
                    .elapsed
                    .iter()
                    .map(|(r, d)| (r.name(), d.as_secs_f64() * 1e3))
                    .collect();
                ms.insert("total", report.total.as_secs_f64() * 1e3);
                for (name, v) in &ms {
                    text.push_str(&format!("time {name}: {v:.3} ms\n"));
                }
                value["timing_ms"] = json!(ms);
            }
            ctx.emit(&value, &text)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { graph } => {
            let g = read_graph(&graph)?;
            if g.n() > 40 {
                return Err(usage("oracle is limited to 40 vertices"));
            }
            let (t, w) = oracle_path_contraction(&g).map_err(|e| usage(e.to_string()))?;
            ctx.emit(
                &json!({ "t": t, "witness": bags(&w) }),
                &format!("t = {t}\nwitness: {}\n", bags_text(&w)),
            )?;
            Ok(EXIT_OK)
        }
        Command::Sub { name, graph, param } => {
            let g = read_graph(&graph)?;
            if g.n() < 2 || !g.is_connected() {
                return Err(usage("subroutines need a connected graph with at least two vertices"));
            }
            let r = name.run(&g, param);
            let w = r.witness.as_ref().map(bags);
            let text = match &r.witness {
                Some(w) => format!("{name}({param}) t = {}\nwitness: {}\n", r.t, bags_text(w)),
                None => format!("{name}({param}) t = {}\n", r.t),
            };
            ctx.emit(
                &json!({ "subroutine": name.name(), "param": param.to_string(), "t": r.t, "witness": w }),
                &text,
            )?;
            Ok(EXIT_OK)
        }
        Command::Gamma { graph, rho } => {
            let g = read_graph(&graph)?;
            let table = compute_gamma(&g, rho);
            let entries: Vec<SetEntry> = table
                .iter()
                .map(|(s, e)| SetEntry {
                    set: s.to_vec(),
                    gamma: e.gamma,
                })
                .collect();
            let text: String = table.iter().map(|(s, e)| format!("{s} {}\n", e.gamma)).collect();
            ctx.emit(&json!(entries), &text)?;
            Ok(EXIT_OK)
        }
        Command::Enum { graph, rho } => {
            let g = read_graph(&graph)?;
            let sets = enumerate_small_connected(&g, rho);
            let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
            let text: String = sets.iter().map(|s| format!("{s}\n")).collect();
            ctx.emit(&json!(lists), &text)?;
            Ok(EXIT_OK)
        }
        Command::Dcs2 { graph, z1, z2 } => {
            let g = read_graph(&graph)?;
            let (z1, z2) = (vertex_set(&g, &z1.0)?, vertex_set(&g, &z2.0)?);
            match solve_2dcs(&g, z1, z2).map_err(|e| usage(e.to_string()))? {
                Some(b) => {
                    let value = json!({ "answer": "yes", "v1": b.v1.to_vec(), "v2": b.v2.to_vec() });
                    ctx.emit(&value, &format!("yes\nV1 = {}\nV2 = {}\n", b.v1, b.v2))?;
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.emit(&json!({ "answer": "no" }), "no\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Dcs3 { graph, z1, z2 } => {
            let g = read_graph(&graph)?;
            let (z1, z2) = (vertex_set(&g, &z1.0)?, vertex_set(&g, &z2.0)?);
            match solve_3dcs(&g, z1, z2).map_err(|e| usage(e.to_string()))? {
                Some(t) => {
                    let value = json!({ "answer": "yes", "v1": t.v1.to_vec(), "u": t.u.to_vec(), "v2": t.v2.to_vec() });
                    ctx.emit(&value, &format!("yes\nV1 = {}\nU = {}\nV2 = {}\n", t.v1, t.u, t.v2))?;
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.emit(&json!({ "answer": "no" }), "no\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::P5 { graph } => {
            let g = read_graph(&graph)?;
            match p5_witness(&g) {
                Some(w) => {
                    ctx.emit(
                        &json!({ "answer": "yes", "witness": bags(&w) }),
                        &format!("yes\nwitness: {}\n", bags_text(&w)),
                    )?;
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.emit(&json!({ "answer": "no" }), "no\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { graph, witness } => {
            let g = read_graph(&graph)?;
            let w = read_witness(&witness, &g)?;
            match w.check(&g) {
                Ok(()) => {
                    ctx.emit(
                        &json!({ "valid": true, "t": w.t() }),
                        &format!("valid, t = {}\n", w.t()),
                    )?;
                    Ok(EXIT_OK)
                }
                Err(v) => {
                    let value = json!({ "valid": false, "reason": v.code(), "detail": v.to_string() });
                    ctx.emit(&value, &format!("invalid: {v}\n"))?;
                    Ok(EXIT_NO)
                }
            }
        }
    }
}

fn read_witness(path: &Path, g: &Graph) -> Result<WitnessStructure, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let list = match &value {
        Value::Object(map) => map.get("witness").cloned().unwrap_or(Value::Null),
        other => other.clone(),
    };
    let raw: Vec<Vec<usize>> = serde_json::from_value(list)
        .map_err(|_| usage(format!("{}: expected a list of vertex lists", path.display())))?;
    let parts = raw.iter().map(|b| vertex_set(g, b)).collect::<Result<Vec<_>, _>>()?;
    Ok(WitnessStructure::new(parts))
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, S, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        timing: cli.timing,
        threads: cli.threads.max(1),
        out,
    };
    match execute(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

pub fn run(argv: Vec<String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
