//! Argument handling and command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hocolim_core::hocolim::Method;
use hocolim_core::Budget;
use serde_json::json;

use crate::docs::Env;
use crate::eval::{Context, EvalError, Evaluator, Value, EXIT_USAGE};
use crate::report::{envelope, value_json};
use crate::suites::{run_suite, SUITES};
use crate::syntax::{self, check_bound, Expr, ExprKind};

#[derive(Parser, Debug)]
#[command(name = "hocolim", version, about = "Homotopy colimits of finite diagrams of truncated simplicial sets")]
struct Cli {
    /// Truncation level N: simplices are kept up to dimension N.
    #[arg(long, global = true, default_value_t = 3)]
    truncation: usize,
    /// Cap on enumeration steps and on the size of any level.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    /// Homotopy colimit construction used when an expression does not pick one.
    #[arg(long, global = true, default_value = "srep", value_parser = parse_method)]
    method: Method,
    /// Accept a cosimplicial input that is not a resolution (the result is marked tainted).
    #[arg(long, global = true)]
    force: bool,
    /// Leave out timestamps and timings so that reruns give identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Manifest listing the document files to load.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: hocolim_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print its result document.
    Eval { expr: String },
    /// Parse an expression and print it in canonical form.
    Parse { expr: String },
    /// Homology of a simplicial set expression.
    Homology { expr: String },
    /// Homotopy colimit of a diagram expression.
    Hocolim { expr: String },
    /// Canonical homotopy colimit of X over a category of simplicial sets.
    CanonicalHocolim {
        category: String,
        x: String,
        /// Depth of the resolution direction (defaults to the truncation).
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Whether a map expression induces isomorphisms on homology.
    CheckWe { expr: String },
    /// Run the reduction criterion on a built-in instance: relabelling, replacement or negative.
    HocoredCheck { instance: String },
    /// Run property suites (comma-separated): appendix, section4, section5, section8.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Load a document file and print it back in canonical form.
    Fmt { file: PathBuf },
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

fn usage(stderr: String) -> Output {
    Output { stdout: String::new(), stderr, exit_code: EXIT_USAGE }
}

fn call(op: &str, args: Vec<Expr>) -> Expr {
    Expr::new(ExprKind::Call { op: op.into(), method: None, args })
}

pub fn run(args: &[String]) -> Output {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Output { stdout: text, stderr: String::new(), exit_code: 0 } } else { usage(text) };
        }
    };
    let ctx = Context {
        truncation: cli.truncation,
        budget: Budget::new(cli.budget),
        method: cli.method,
        force: cli.force,
        deterministic: cli.deterministic,
        depth: None,
    };
    let env = match &cli.manifest {
        Some(path) => match Env::load_manifest(path, ctx.budget) {
            Ok(env) => env,
            Err(e) => return usage(format!("error: {e}\n")),
        },
        None => Env::default(),
    };
    let parse = |text: &str| -> Result<Expr, Output> { syntax::parse(text).map_err(|d| usage(format!("{d}\n"))) };
    let (name, expr, ctx) = match cli.command {
        Command::Parse { expr } => {
            return match parse(&expr) {
                Ok(e) => Output { stdout: format!("{}\n", syntax::print(&e)), stderr: String::new(), exit_code: 0 },
                Err(o) => o,
            };
        }
        Command::Fmt { file } => {
            // a file listed in the manifest is printed from the loaded set,
            // so that it may refer to documents in earlier files
            let canonical = |p: &std::path::Path| p.canonicalize().ok();
            if let Some((_, names)) = env.files.iter().find(|(p, _)| canonical(p).is_some() && canonical(p) == canonical(&file)) {
                return Output { stdout: env.save(names), stderr: String::new(), exit_code: 0 };
            }
            let mut alone = Env::default();
            return match alone.load_file(&file, ctx.budget) {
                Ok(names) => Output { stdout: alone.save(&names), stderr: String::new(), exit_code: 0 },
                Err(e) => usage(format!("error: {e}\n")),
            };
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = suite.split(',').map(str::trim).collect();
            if let Some(bad) = names.iter().find(|s| !SUITES.contains(s)) {
                return usage(format!("error: unknown suite `{bad}` (expected one of {})\n", SUITES.join(", ")));
            }
            let t = Instant::now();
            let reports: Vec<_> = names.iter().map(|s| run_suite(s, &env, ctx).expect("known suite")).collect();
            let exit_code = if reports.iter().all(|r| r.exit_code == 0) { 0 } else { 1 };
            let result = if reports.len() == 1 { reports[0].json.clone() } else { json!({ "kind": "suites", "suites": reports.iter().map(|r| r.json.clone()).collect::<Vec<_>>() }) };
            let j = envelope("verify", json!(suite), &ctx, result, exit_code, t.elapsed().as_millis());
            return Output { stdout: format!("{}\n", serde_json::to_string_pretty(&j).unwrap()), stderr: String::new(), exit_code };
        }
        Command::Eval { expr } => match parse(&expr) {
            Ok(e) => ("eval", e, ctx),
            Err(o) => return o,
        },
        Command::Homology { expr } => match parse(&expr) {
            Ok(e) => ("homology", call("homology", vec![e]), ctx),
            Err(o) => return o,
        },
        Command::Hocolim { expr } => match parse(&expr) {
            Ok(e) => ("hocolim", call("hocolim", vec![e]), ctx),
            Err(o) => return o,
        },
        Command::CanonicalHocolim { category, x, depth } => match (parse(&category), parse(&x)) {
            (Ok(c), Ok(x)) => ("canonical-hocolim", call("canonical_hocolim", vec![c, x]), Context { depth, ..ctx }),
            (Err(o), _) | (_, Err(o)) => return o,
        },
        Command::CheckWe { expr } => match parse(&expr) {
            Ok(e) => ("check-we", call("check_we", vec![e]), ctx),
            Err(o) => return o,
        },
        Command::HocoredCheck { instance } => ("hocored-check", call("hocored_check", vec![Expr::new(ExprKind::Str(instance))]), ctx),
    };
    evaluate(name, &expr, &env, ctx)
}

/// Evaluates `expr` and renders the report envelope.
pub fn evaluate(command: &str, expr: &Expr, env: &Env, ctx: Context) -> Output {
    if let Err(d) = check_bound(expr, &|s| env.get(s).is_some()) {
        return usage(format!("{d}\n"));
    }
    let t = Instant::now();
    let input = json!(syntax::print(expr));
    match Evaluator::new(env, ctx).eval(expr) {
        Ok(v) => {
            let exit_code = match &v {
                Value::Report(r) => r.exit_code,
                _ => 0,
            };
            let j = envelope(command, input, &ctx, value_json(&v), exit_code, t.elapsed().as_millis());
            Output { stdout: format!("{}\n", serde_json::to_string_pretty(&j).unwrap()), stderr: String::new(), exit_code }
        }
        Err(EvalError { diagnostic, exit_code }) => {
            let j = envelope(command, input, &ctx, json!({ "kind": "error", "code": diagnostic.code.as_str(), "message": diagnostic.to_string() }), exit_code, t.elapsed().as_millis());
            Output { stdout: format!("{}\n", serde_json::to_string_pretty(&j).unwrap()), stderr: format!("{diagnostic}\n"), exit_code }
        }
    }
}
