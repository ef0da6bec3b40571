//! Command-line front end. Every subcommand reads JSON from a path or
//! stdin and writes canonical JSON to stdout, so commands compose as pipes.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cobordism::{CobordismFan, Side};
use crate::construct::{self, Block, WeightSpec};
use crate::error::{Error, Result};
use crate::factorize::{self, FactorizationTrace};
use crate::json;

const DEFAULT_MAX_RANK: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "cobordize", version, about = "Toric birational cobordisms and their factorization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Lower,
    Upper,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Lower => Side::Lower,
            SideArg::Upper => Side::Upper,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RandomKind {
    Polygons,
    Polytopes3,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a cobordism fan.
    Construct {
        /// Weighted block `a1,a2:b1,b2:r`; repeat to glue a chain of blocks.
        #[arg(long, value_name = "A:B:R", conflicts_with_all = ["polytopes", "linear"])]
        weights: Vec<String>,
        /// Glue each chained block below the previous one instead of above.
        #[arg(long, requires = "weights")]
        below: bool,
        /// Slab cobordism between the normal fans of two polytopes.
        #[arg(long, num_args = 2, value_names = ["P.json", "Q.json"], conflicts_with = "linear")]
        polytopes: Option<Vec<PathBuf>>,
        /// Linear action on projective space with these integer weights.
        #[arg(long, value_name = "W0,W1,...", allow_hyphen_values = true)]
        linear: Option<String>,
        #[arg(long, hide = true, value_enum, requires = "seed")]
        random: Option<RandomKind>,
        #[arg(long, hide = true)]
        seed: Option<u64>,
    },
    /// Lower or upper boundary subfan.
    Boundary {
        #[arg(long, value_enum)]
        side: SideArg,
        input: Option<PathBuf>,
    },
    /// Quotient fan of a boundary.
    Quotient {
        #[arg(long, value_enum, default_value = "lower")]
        side: SideArg,
        input: Option<PathBuf>,
    },
    /// Fixed components with their cones.
    Components { input: Option<PathBuf> },
    /// Collapse order of the fixed components.
    Order {
        /// Write the predecessor graph in DOT format here (`-` for stdout).
        #[arg(long, value_name = "OUT.dot")]
        dot: Option<PathBuf>,
        input: Option<PathBuf>,
    },
    /// Factor the induced birational map into elementary moves.
    Factor {
        /// Run from the upper boundary to the lower one.
        #[arg(long)]
        reverse: bool,
        /// Append the input cobordism after the trace, for `verify` on a pipe.
        #[arg(long)]
        with_cobordism: bool,
        input: Option<PathBuf>,
    },
    /// Check a trace against a cobordism. With no paths, reads the trace
    /// and then the cobordism from stdin.
    Verify { trace: Option<PathBuf>, cobordism: Option<PathBuf> },
    /// The move of a cobordism with a single fixed component.
    Classify { input: Option<PathBuf> },
}

fn max_rank() -> usize {
    std::env::var("COBORDIZE_MAX_RANK").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_RANK)
}

fn check_rank(rank: usize) -> Result<()> {
    let limit = max_rank();
    if rank > limit {
        return Err(Error::InvalidInput(format!("ambient rank {rank} exceeds COBORDIZE_MAX_RANK={limit}")));
    }
    Ok(())
}

/// Lazily read stdin, shared by all inputs that default to it.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    docs: Option<std::vec::IntoIter<Value>>,
}

impl Inputs<'_> {
    fn next_stdin(&mut self) -> Result<Value> {
        if self.docs.is_none() {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
            let docs: Vec<Value> = serde_json::Deserializer::from_str(&text)
                .into_iter::<Value>()
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Json(e.to_string()))?;
            self.docs = Some(docs.into_iter());
        }
        self.docs.as_mut().and_then(Iterator::next).ok_or_else(|| Error::Json("expected another JSON document on stdin".into()))
    }

    fn value(&mut self, path: Option<&PathBuf>) -> Result<Value> {
        match path {
            Some(p) if p.as_os_str() != "-" => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?;
                json::parse(&text)
            }
            _ => self.next_stdin(),
        }
    }

    fn cobordism(&mut self, path: Option<&PathBuf>) -> Result<CobordismFan> {
        let v = self.value(path)?;
        if let Some(r) = v.get("ambient_rank").and_then(Value::as_u64) {
            check_rank(r as usize)?;
        }
        json::cobordism_from_json(&v)
    }
}

/// Errors from malformed input rather than from the mathematics.
fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::Json(_) | Error::InvalidInput(_))
}

fn error_json(e: &Error) -> Value {
    let detail = match e {
        Error::ReplayMismatch { step, detail } => json!({ "step": step, "message": detail }),
        Error::NonCollapsible { cycle } => json!({ "cycle": cycle, "message": e.to_string() }),
        _ => json!(e.to_string()),
    };
    json!({ "error": e.code(), "detail": detail })
}

fn trace_check(b: &CobordismFan, t: &FactorizationTrace) -> Result<Value> {
    let report = factorize::verify_trace(b, t);
    match report.failures.first() {
        None => Ok(json!({ "passed": true, "moves": t.moves.len() })),
        Some(f) => Err(Error::ReplayMismatch { step: f.step.unwrap_or(0), detail: f.detail.clone() }),
    }
}

fn construct_cmd(
    weights: &[String],
    below: bool,
    polytopes: Option<&[PathBuf]>,
    linear: Option<&str>,
    random: Option<(RandomKind, u64)>,
    inputs: &mut Inputs,
) -> Result<CobordismFan> {
    if let Some((kind, seed)) = random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = match kind {
            RandomKind::Polygons => (construct::random_polygon(&mut rng), construct::random_polygon(&mut rng)),
            RandomKind::Polytopes3 => (construct::random_simple_polytope3(&mut rng), construct::random_simple_polytope3(&mut rng)),
        };
        return construct::from_polytopes(&p, &q);
    }
    if let Some(paths) = polytopes {
        let p = json::polytope_from_json(&inputs.value(Some(&paths[0]))?)?;
        let q = json::polytope_from_json(&inputs.value(Some(&paths[1]))?)?;
        check_rank(p.ambient_rank() + 1)?;
        return construct::from_polytopes(&p, &q);
    }
    if let Some(ws) = linear {
        let w: Vec<i64> = ws
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| Error::InvalidInput(format!("bad weight {x:?}: {e}"))))
            .collect::<Result<_>>()?;
        check_rank(w.len().saturating_sub(1))?;
        return construct::linear_action(&w);
    }
    let specs: Vec<WeightSpec> = weights.iter().map(|s| WeightSpec::parse(s)).collect::<Result<_>>()?;
    match specs.as_slice() {
        [] => Err(Error::InvalidInput("construct needs --weights, --polytopes or --linear".into())),
        [w] => {
            check_rank(w.rank())?;
            construct::from_weights(w)
        }
        _ => {
            check_rank(specs[0].rank())?;
            let blocks: Vec<Block> =
                specs.into_iter().enumerate().map(|(i, weights)| Block { weights, reversed: below && i > 0 }).collect();
            construct::from_weight_sequence(&blocks)
        }
    }
}

fn execute(cmd: Command, inputs: &mut Inputs, out: &mut dyn Write) -> Result<()> {
    let emit = |out: &mut dyn Write, v: &Value| -> Result<()> {
        out.write_all(json::render(v).as_bytes()).map_err(|e| Error::InvalidInput(format!("writing output: {e}")))
    };
    match cmd {
        Command::Construct { weights, below, polytopes, linear, random, seed } => {
            let b = construct_cmd(&weights, below, polytopes.as_deref(), linear.as_deref(), random.zip(seed), inputs)?;
            emit(out, &json::cobordism_to_json(&b))
        }
        Command::Boundary { side, input } => {
            let b = inputs.cobordism(input.as_ref())?;
            emit(out, &json::fan_to_json(&b.boundary(side.into())?))
        }
        Command::Quotient { side, input } => {
            let b = inputs.cobordism(input.as_ref())?;
            emit(out, &json::fan_to_json(&b.quotient_fan(&b.boundary(side.into())?)?))
        }
        Command::Components { input } => {
            let b = inputs.cobordism(input.as_ref())?;
            emit(out, &json::components_to_json(&b))
        }
        Command::Order { dot, input } => {
            let b = inputs.cobordism(input.as_ref())?;
            match dot {
                Some(p) if p.as_os_str() == "-" => {
                    out.write_all(b.predecessor_dot().as_bytes()).map_err(|e| Error::InvalidInput(e.to_string()))?;
                    return Ok(());
                }
                Some(p) => std::fs::write(&p, b.predecessor_dot()).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?,
                None => {}
            }
            emit(out, &json!({ "order": b.collapse_order()? }))
        }
        Command::Factor { reverse, with_cobordism, input } => {
            let b = inputs.cobordism(input.as_ref())?;
            let t = if reverse { factorize::factor_reversed(&b)? } else { factorize::factor(&b)? };
            emit(out, &json::trace_to_json(&t))?;
            if with_cobordism {
                // The reversed trace starts from the flipped cobordism.
                let source = if reverse { b.reversed()? } else { b };
                emit(out, &json::cobordism_to_json(&source))?;
            }
            Ok(())
        }
        Command::Verify { trace, cobordism } => {
            let t = json::trace_from_json(&inputs.value(trace.as_ref())?)?;
            let b = inputs.cobordism(cobordism.as_ref())?;
            emit(out, &trace_check(&b, &t)?)
        }
        Command::Classify { input } => {
            let b = inputs.cobordism(input.as_ref())?;
            let [f0] = b.fixed_components() else {
                return Err(Error::NonElementary(format!("{} fixed components", b.fixed_components().len())));
            };
            emit(out, &json::move_to_json(&factorize::classify(&b, f0)?))
        }
    }
}

/// Runs the command line `args` (including the program name); returns the
/// process exit code: 0 on success, 1 on a domain error, 2 on a usage or
/// parse error.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut inputs = Inputs { stdin, docs: None };
    match execute(cli.command, &mut inputs, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = stderr.write_all(json::render(&error_json(&e)).as_bytes());
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let args: Vec<String> = std::iter::once("cobordize").chain(args.iter().copied()).map(String::from).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn kinds(trace: &str) -> Vec<String> {
        let v = json::parse(trace).unwrap();
        v["moves"].as_array().unwrap().iter().map(|m| m["kind"].as_str().unwrap().to_string()).collect()
    }

    #[test]
    fn atiyah_pipeline_is_one_flip() {
        let (code, cob, _) = call(&["construct", "--weights", "1,1:1,1:0"], "");
        assert_eq!(code, 0);
        let (code, trace, _) = call(&["factor"], &cob);
        assert_eq!(code, 0);
        assert_eq!(kinds(&trace), vec!["flip"]);
    }

    #[test]
    fn trivial_weights_give_identity() {
        let (_, cob, _) = call(&["construct", "--weights", "1:1:0"], "");
        let (_, trace, _) = call(&["factor"], &cob);
        assert_eq!(kinds(&trace), vec!["identity"]);
    }

    #[test]
    fn streams_compose_without_files() {
        let (_, cob, _) = call(&["construct", "--weights", "2,3:1:1"], "");
        let (_, both, _) = call(&["factor", "--with-cobordism"], &cob);
        let (code, out, err) = call(&["verify"], &both);
        assert_eq!((code, err.as_str()), (0, ""));
        assert_eq!(json::parse(&out).unwrap()["passed"], json!(true));
        let (_, both, _) = call(&["factor", "--reverse", "--with-cobordism"], &cob);
        assert_eq!(call(&["verify"], &both).0, 0);
    }

    #[test]
    fn tampered_trace_reports_the_step() {
        let (_, cob, _) = call(&["construct", "--weights", "1,1:1,1:0"], "");
        let (_, trace, _) = call(&["factor"], &cob);
        let tampered = trace.replace("\"flip\"", "\"blowup\"");
        let (code, _, err) = call(&["verify"], &format!("{tampered}{cob}"));
        assert_eq!(code, 1);
        let e = json::parse(&err).unwrap();
        assert_eq!(e["error"], json!("replay_mismatch"));
        assert_eq!(e["detail"]["step"], json!(0));
    }

    #[test]
    fn inspection_commands() {
        let (_, cob, _) = call(&["construct", "--weights", "1,1:1:0", "--weights", "1:1,1:0"], "");
        let (code, comps, _) = call(&["components"], &cob);
        assert_eq!(code, 0);
        assert_eq!(json::parse(&comps).unwrap()["components"].as_array().unwrap().len(), 2);
        let (code, order, _) = call(&["order"], &cob);
        assert_eq!(code, 0);
        let order = json::parse(&order).unwrap()["order"].clone();
        assert!(order == json!([0, 1]) || order == json!([1, 0]));
        let (_, dot, _) = call(&["order", "--dot", "-"], &cob);
        assert!(dot.starts_with("digraph"));
        let (code, lower, _) = call(&["boundary", "--side", "lower"], &cob);
        assert_eq!(code, 0);
        assert!(json::fan_from_json(&json::parse(&lower).unwrap()).is_ok());
        let (code, q, _) = call(&["quotient", "--side", "upper"], &cob);
        assert_eq!(code, 0);
        assert_eq!(json::parse(&q).unwrap()["ambient_rank"], json!(2));
        let (code, _, err) = call(&["classify"], &cob);
        assert_eq!(code, 1);
        assert_eq!(json::parse(&err).unwrap()["error"], json!("non_elementary"));
        let (_, single, _) = call(&["construct", "--weights", "1,1:1,1:0"], "");
        let (code, mv, _) = call(&["classify"], &single);
        assert_eq!(code, 0);
        assert_eq!(json::parse(&mv).unwrap()["kind"], json!("flip"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
        assert_eq!(call(&["factor"], "{not json").0, 2);
        assert_eq!(call(&["construct", "--weights", "1:x:0"], "").0, 2);
        // A fan whose v0 lies in the interior of a cone is not a cobordism.
        let bad = r#"{"ambient_rank":2,"max_cones":[[0,1]],"rays":[[0,1],[1,0]],"v0":[1,1]}"#;
        let (code, _, err) = call(&["factor"], bad);
        assert_eq!(code, 1);
        assert!(json::parse(&err).unwrap()["error"].is_string());
    }

    #[test]
    fn rank_guard() {
        let (code, _, err) = call(&["construct", "--weights", "1,1,1,1:1,1,1:0"], "");
        assert_eq!(code, 2);
        assert!(err.contains("COBORDIZE_MAX_RANK"));
    }

    #[test]
    fn hidden_seeded_fixtures_are_deterministic() {
        let a = call(&["construct", "--random", "polygons", "--seed", "3"], "");
        let b = call(&["construct", "--random", "polygons", "--seed", "3"], "");
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
    }
}
