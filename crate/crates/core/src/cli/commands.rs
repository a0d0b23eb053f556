//! Argument parsing, command dispatch and reporting.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{ExtIndex, Monomial};
use crate::brackets::{bracket_closed, bracket_pipeline, hh_basis, KoszulCochain};
use crate::chainmaps::{dq_element, phi, psi, EnvElem, LiftEngine};
use crate::complexes::{Bar, Chain, ChainBasis, Koszul};
use crate::group_ext::{bracket_skew_closed, bracket_skew_pipeline, hh_skew_basis, reynolds, SkewKoszulCochain};
use crate::scalar::Scalar;

use super::config::Config;
use super::expr::{parse_cocycle, parse_polynomial, parse_skew_cocycle, print_cocycle, print_skew_cocycle};
use super::verify::{run_suite, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qsym", about = "Hochschild cohomology and brackets of quantum symmetric algebras")]
struct Cli {
    /// JSON configuration file; defaults to N = 2 with symbolic q.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity checks over the configured bounds.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// List the Hochschild cohomology basis in degree m.
    Basis {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        cap: u32,
    },
    /// Bracket two cocycles.
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Evaluate a comparison map on a basis element, by closed form and by lifting.
    Lift {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        degree: usize,
        /// `dx(1,3)` for phi; `x1|x2^2` for psi.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Apply the quantum difference quotient.
    Dq {
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        mono: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Pipeline,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Phi,
    Psi,
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

struct Report {
    code: i32,
    status: &'static str,
    result: Vec<Value>,
    checks: Map<String, Value>,
    text: Vec<String>,
}

impl Report {
    fn ok() -> Self {
        Report {
            code: EXIT_OK,
            status: "ok",
            result: Vec::new(),
            checks: Map::new(),
            text: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool) {
        self.checks.insert(name.into(), json!(if pass { "pass" } else { "fail" }));
        self.text.push(format!("{name}: {}", if pass { "pass" } else { "FAIL" }));
        if !pass {
            self.code = EXIT_FAIL;
            self.status = "fail";
        }
    }

    fn render(self, as_json: bool) -> Outcome {
        let stdout = if as_json {
            let v = json!({"status": self.status, "result": self.result, "checks": Value::Object(self.checks)});
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        } else {
            let mut s = self.text.join("\n");
            s.push('\n');
            s
        };
        Outcome { code: self.code, stdout }
    }
}

fn error(msg: String, as_json: bool) -> Outcome {
    let stdout = if as_json {
        serde_json::to_string_pretty(&json!({"status": "error", "error": msg})).expect("serializable") + "\n"
    } else {
        format!("error: {msg}\n")
    };
    Outcome { code: EXIT_USAGE, stdout }
}

fn exps(m: &Monomial) -> Vec<u32> {
    (1..=m.n()).map(|i| m.exp(i)).collect()
}

fn cochain_json(x: &KoszulCochain) -> Vec<Value> {
    x.terms()
        .map(|((a, b), c)| json!({"coeff": c.to_string(), "monomial": exps(a), "group": [], "dx": b.indices()}))
        .collect()
}

fn skew_json(x: &SkewKoszulCochain) -> Vec<Value> {
    x.terms()
        .map(|((a, g, b), c)| json!({"coeff": c.to_string(), "monomial": exps(a), "group": g.exps(), "dx": b.indices()}))
        .collect()
}

fn chain_json<B: ChainBasis>(x: &Chain<B>, middle: impl Fn(&B) -> Value) -> Vec<Value> {
    x.terms()
        .map(|((u, b, v), c)| json!({"coeff": c.to_string(), "left": exps(u), "middle": middle(b), "right": exps(v)}))
        .collect()
}

fn env_json(x: &EnvElem) -> Vec<Value> {
    x.terms()
        .map(|((a, b), c)| json!({"coeff": c.to_string(), "left": exps(a), "right": exps(b)}))
        .collect()
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, String> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("config {}: {e}", p.display()))?;
            Config::from_json(&text)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome {
                code,
                stdout: e.render().to_string(),
            };
        }
    };
    let as_json = cli.json;
    let cfg = match load_config(&cli.config) {
        Ok(c) => c,
        Err(e) => return error(e, as_json),
    };
    let workers = match std::env::var("QSYM_WORKERS") {
        Err(_) => None,
        Ok(v) => match v.parse::<usize>() {
            Ok(k) if k > 0 => Some(k),
            _ => return error(format!("QSYM_WORKERS must be a positive integer, got '{v}'"), as_json),
        },
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = workers {
        builder = builder.num_threads(k);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return error(format!("worker pool: {e}"), as_json),
    };
    match pool.install(|| dispatch(&cfg, cli.command)) {
        Ok(r) => r.render(as_json),
        Err(e) => error(e, as_json),
    }
}

fn dispatch(cfg: &Config, command: Command) -> Result<Report, String> {
    match command {
        Command::Verify { suite } => Ok(verify(cfg, suite)),
        Command::Basis { m, cap } => basis(cfg, m, cap),
        Command::Bracket { alpha, beta, method } => bracket(cfg, &alpha, &beta, method),
        Command::Lift { map, degree, input } => lift(cfg, map, degree, &input),
        Command::Dq { i, mono } => dq_cmd(cfg, i, &mono),
    }
}

fn verify(cfg: &Config, suite: Suite) -> Report {
    use rayon::prelude::*;
    let members = suite.members();
    let results: Vec<(Suite, SuiteReport)> = members.par_iter().map(|&s| (s, run_suite(cfg, s))).collect();
    let mut r = Report::ok();
    for (s, rep) in results {
        r.text.push(match &rep.counterexample {
            None => format!("{}: pass ({} cases)", s.name(), rep.cases),
            Some(c) => format!("{}: FAIL ({} cases): {c}", s.name(), rep.cases),
        });
        if !rep.passed() {
            r.code = EXIT_FAIL;
            r.status = "fail";
        }
        r.checks.insert(s.name().into(), serde_json::to_value(&rep).expect("serializable"));
    }
    r
}

fn basis(cfg: &Config, m: usize, cap: u32) -> Result<Report, String> {
    let mut r = Report::ok();
    if cfg.has_group {
        let b = hh_skew_basis(&cfg.ctx, &cfg.action, m, cap).map_err(|e| e.to_string())?;
        for x in &b {
            r.result.extend(skew_json(x));
            r.text.push(print_skew_cocycle(x));
        }
    } else {
        for x in hh_basis(&cfg.ctx, m, cap) {
            r.result.extend(cochain_json(&x));
            r.text.push(print_cocycle(&x));
        }
    }
    Ok(r)
}

fn bracket(cfg: &Config, alpha: &str, beta: &str, method: Method) -> Result<Report, String> {
    let ctx = &cfg.ctx;
    let mut r = Report::ok();
    if let Some(group) = cfg.group() {
        let a = parse_skew_cocycle(cfg.env(), group, alpha).map_err(|e| format!("--alpha: {e}"))?;
        let b = parse_skew_cocycle(cfg.env(), group, beta).map_err(|e| format!("--beta: {e}"))?;
        let pipeline = || {
            let (ra, rb) = (reynolds(ctx, &cfg.action, &a), reynolds(ctx, &cfg.action, &b));
            bracket_skew_pipeline(ctx, &cfg.action, &ra, &rb).map_err(|e| e.to_string())
        };
        let closed = || bracket_skew_closed(ctx, &cfg.action, &a, &b).map_err(|e| e.to_string());
        let value = match method {
            Method::Closed => closed()?,
            Method::Pipeline => pipeline()?,
            Method::Both => {
                let (c, p) = (closed()?, pipeline()?);
                r.check("equal", c == p);
                c
            }
        };
        r.result = skew_json(&value);
        r.text.insert(0, print_skew_cocycle(&value));
    } else {
        let a = parse_cocycle(cfg.env(), alpha).map_err(|e| format!("--alpha: {e}"))?;
        let b = parse_cocycle(cfg.env(), beta).map_err(|e| format!("--beta: {e}"))?;
        let value = match method {
            Method::Closed => bracket_closed(ctx, &a, &b),
            Method::Pipeline => bracket_pipeline(ctx, &a, &b),
            Method::Both => {
                let c = bracket_closed(ctx, &a, &b);
                r.check("equal", c == bracket_pipeline(ctx, &a, &b));
                c
            }
        };
        r.result = cochain_json(&value);
        r.text.insert(0, print_cocycle(&value));
    }
    Ok(r)
}

fn lift(cfg: &Config, map: MapKind, degree: usize, input: &str) -> Result<Report, String> {
    let ctx = &cfg.ctx;
    let mut r = Report::ok();
    match map {
        MapKind::Phi => {
            let body = input.trim();
            let body = body.strip_prefix("dx(").and_then(|b| b.strip_suffix(')')).unwrap_or(body);
            let mut idx = Vec::new();
            for part in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let i: usize = part.parse().map_err(|_| format!("--input: bad index '{part}'"))?;
                ctx.check_index(i).map_err(|e| format!("--input: {e}"))?;
                idx.push(i);
            }
            let j = ExtIndex::from_indices(&idx);
            if j.len() != idx.len() || idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err("--input: indices must be strictly increasing".into());
            }
            if j.len() != degree {
                return Err(format!("--input has degree {}, expected {degree}", j.len()));
            }
            let closed = phi(ctx, j);
            let mut engine = LiftEngine::new(Koszul::new(ctx), Bar::new(ctx));
            let lifted = engine.lift(degree as i32, &j).map_err(|e| e.to_string())?;
            r.check("lift_engine", lifted == closed);
            r.result = chain_json(&closed, |w| json!(w.iter().map(exps).collect::<Vec<_>>()));
            r.text.insert(0, closed.to_string());
        }
        MapKind::Psi => {
            let mut word = Vec::new();
            let mut coeff = Scalar::one();
            for part in input.split('|') {
                let p = parse_polynomial(cfg.env(), part).map_err(|e| format!("--input: {e}"))?;
                let mut terms = p.terms();
                let (m, c) = match (terms.next(), terms.next()) {
                    (Some(t), None) => t,
                    _ => return Err(format!("--input: '{part}' must be a single monomial")),
                };
                if m.is_one() {
                    return Err(format!("--input: '{part}' is constant, which is zero in the normalized bar complex"));
                }
                coeff = coeff.mul(c);
                word.push(m.clone());
            }
            if word.len() != degree {
                return Err(format!("--input has {} entries, expected {degree}", word.len()));
            }
            let closed = psi(ctx, &word).scale(&coeff);
            let mut engine = LiftEngine::new(Bar::new(ctx), Koszul::new(ctx));
            let lifted = engine.lift(degree as i32, &word).map_err(|e| e.to_string())?.scale(&coeff);
            r.check("lift_engine", lifted == closed);
            r.result = chain_json(&closed, |j| json!(j.indices()));
            r.text.insert(0, closed.to_string());
        }
    }
    Ok(r)
}

fn dq_cmd(cfg: &Config, i: usize, mono: &str) -> Result<Report, String> {
    cfg.ctx.check_index(i).map_err(|e| format!("--i: {e}"))?;
    let f = parse_polynomial(cfg.env(), mono).map_err(|e| format!("--mono: {e}"))?;
    let v = dq_element(&cfg.ctx, i, &f);
    let mut r = Report::ok();
    r.result = env_json(&v);
    let parts: Vec<String> = v.terms().map(|((a, b), c)| format!("({c}) * {a} (x) {b}")).collect();
    r.text.push(if parts.is_empty() { "0".into() } else { parts.join(" + ") });
    Ok(r)
}
