//! The `centlat` command line.
//!
//! Exit codes: 0 verified or true, 1 checked and false, 2 internal
//! inconsistency, 64 usage or parse error, 74 I/O error. Results go to
//! standard output, diagnostics to standard error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::expr::{
    eval_group_expr, parse_group_expr, EvalContext, EvalError, Evaluated, GroupExpr,
};
use crate::formats::{lattice_to_dot, to_json_pretty, GroupRef, HomJson, LatticeJson, TableJson};
use crate::group::{Element, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::homs::{
    crh_central_kernel_criterion, group_isomorphic, is_centralizer_respecting, CrhVerdict,
    CriterionVerdict, HomError,
};
use crate::lattice::{CentralizerLattice, LatticeError};
use crate::suites::{run_suite, SuiteError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(
    name = "centlat",
    version,
    about = "Centralizer lattices of small finite groups"
)]
struct Cli {
    /// Largest group order any command will build.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the centralizer lattice as JSON (default) or DOT.
    Lattice {
        expr: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check whether a quotient projection is centralizer-respecting.
    CheckCrh { expr: String },
    /// Search for a group isomorphism.
    Iso { first: String, second: String },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Exponent for the corollary suite (groups of order 2^n).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Print a group's multiplication table, or with --hom a quotient's
    /// projection.
    Export {
        expr: String,
        #[arg(long)]
        hom: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Figure3,
    Corollary,
    TheoremcSweep,
    FunctorLaws,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Figure3 => "figure3",
            Suite::Corollary => "corollary",
            Suite::TheoremcSweep => "theoremc-sweep",
            Suite::FunctorLaws => "functor-laws",
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        let code = match e {
            EvalError::Io { .. } => EXIT_IO,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INCONSISTENT,
        message: e.to_string(),
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::Group(_) | LatticeError::NodeCapExceeded { .. } => Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            },
            e => internal(e),
        }
    }
}

impl From<HomError> for Failure {
    fn from(e: HomError) -> Self {
        match e {
            HomError::Group(_) => Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            },
            e => internal(e),
        }
    }
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Usage(_) | SuiteError::Group(_) => Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            },
            SuiteError::Eval(e) => e.into(),
            e => internal(e),
        }
    }
}

struct Session {
    ctx: EvalContext,
}

impl Session {
    fn eval(&self, text: &str) -> Result<(GroupExpr, Evaluated), Failure> {
        let expr = parse_group_expr(text).map_err(EvalError::from)?;
        let ev = eval_group_expr(&expr, &self.ctx)?;
        Ok((expr, ev))
    }
}

fn labels(g: &FiniteGroup, elems: impl IntoIterator<Item = Element>) -> Vec<String> {
    elems.into_iter().map(|e| g.label(e)).collect()
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let session = Session {
        ctx: EvalContext {
            cap: cli.cap,
            base_dir: None,
        },
    };
    let cap = cli.cap;
    let mut emit = |text: String| -> Result<(), Failure> {
        out.write_all(text.as_bytes())
            .and_then(|_| out.write_all(b"\n"))
            .map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("cannot write output: {e}"),
            })
    };
    match cli.command {
        Command::Lattice { expr, dot, .. } => {
            let (_, ev) = session.eval(&expr)?;
            let l = CentralizerLattice::build(&ev.group, cap)?;
            if dot {
                emit(lattice_to_dot(&l).trim_end().to_string())?;
            } else {
                emit(to_json_pretty(&LatticeJson::from_lattice(&l)))?;
            }
            Ok(EXIT_OK)
        }
        Command::CheckCrh { expr } => {
            let (parsed, ev) = session.eval(&expr)?;
            let Some(h) = ev.projection else {
                return Err(Failure {
                    code: EXIT_USAGE,
                    message: "check-crh needs a quotient(...) expression".into(),
                });
            };
            let g = h.source().clone();
            let kernel = h.kernel();
            let central = g.is_central(&kernel);
            let definition = is_centralizer_respecting(&h, cap)?;
            let holds = definition.holds();
            let definition_json = match &definition {
                CrhVerdict::Respecting => json!({ "holds": true }),
                CrhVerdict::Violated(w) => json!({
                    "holds": false,
                    "witness": {
                        "subgroup": labels(&g, w.subgroup.iter()),
                        "image_of_centralizer": labels(&ev.group, w.image_of_centralizer.iter().copied()),
                        "centralizer_of_image": labels(&ev.group, w.centralizer_of_image.iter().copied()),
                    }
                }),
            };
            let mut inconsistent = false;
            let criterion_json = if central {
                let criterion = crh_central_kernel_criterion(&h)?;
                inconsistent = criterion.holds() != holds;
                match criterion {
                    CriterionVerdict::NoKernelCommutators => json!({ "holds": true }),
                    CriterionVerdict::KernelCommutator(w) => json!({
                        "holds": false,
                        "witness": {
                            "x": g.label(w.x),
                            "y": g.label(w.y),
                            "commutator": g.label(w.commutator),
                        }
                    }),
                }
            } else {
                Value::Null
            };
            emit(to_json_pretty(&json!({
                "expr": parsed.to_string(),
                "kernel": labels(&g, kernel.iter()),
                "kernel_central": central,
                "definition": definition_json,
                "criterion": criterion_json,
                "crh": holds,
                "consistent": !inconsistent,
            })))?;
            Ok(if inconsistent {
                EXIT_INCONSISTENT
            } else if holds {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Iso { first, second } => {
            let (ea, a) = session.eval(&first)?;
            let (eb, b) = session.eval(&second)?;
            match group_isomorphic(&a.group, &b.group, cap)? {
                Some(h) => {
                    let doc = HomJson::new(
                        GroupRef::Expr(ea.to_string()),
                        GroupRef::Expr(eb.to_string()),
                        &h,
                    );
                    emit(to_json_pretty(&doc))?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(to_json_pretty(&json!({ "isomorphic": false })))?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Verify { suite, n } => {
            if n.is_some() && !matches!(suite, Suite::Corollary) {
                return Err(Failure {
                    code: EXIT_USAGE,
                    message: "--n only applies to the corollary suite".into(),
                });
            }
            let report = run_suite(suite.name(), n, cap)?;
            emit(to_json_pretty(&report))?;
            Ok(if report.inconsistent {
                EXIT_INCONSISTENT
            } else if report.pass {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Export { expr, hom } => {
            let (parsed, ev) = session.eval(&expr)?;
            if !hom {
                emit(to_json_pretty(&TableJson::from_group(&ev.group)))?;
                return Ok(EXIT_OK);
            }
            let (GroupExpr::Quotient(inner, _), Some(h)) = (&parsed, &ev.projection) else {
                return Err(Failure {
                    code: EXIT_USAGE,
                    message: "export --hom needs a quotient(...) expression".into(),
                });
            };
            let doc = HomJson::new(
                GroupRef::Expr(inner.to_string()),
                GroupRef::Expr(parsed.to_string()),
                h,
            );
            emit(to_json_pretty(&doc))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line given by `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "centlat: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("centlat").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn lattice_json_node_counts() {
        let (code, out, _) = run_args(&["lattice", "cyclic(12)", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 1);

        let (code, out, _) = run_args(&["lattice", "semidirect(4,4,3)"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn lattice_dot() {
        let (code, out, _) = run_args(&["lattice", "quaternion(8)", "--dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("graph centralizer_lattice {"));
        assert_eq!(out.matches("[label=").count(), 5);
    }

    #[test]
    fn check_crh_verdicts() {
        let (code, out, _) = run_args(&["check-crh", "quotient(cover_dq(3), [x^2*y^2])"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_args(&["check-crh", "quotient(dihedral(8), [x^2])"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["criterion"]["witness"]["commutator"], "x^2");
        assert_eq!(v["definition"]["holds"], false);
        let (code, _, _) = run_args(&["check-crh", "quotient(dihedral(8), [])"]);
        assert_eq!(code, 0);
        let (code, _, err) = run_args(&["check-crh", "dihedral(8)"]);
        assert_eq!(code, 64);
        assert!(err.contains("quotient"));
    }

    #[test]
    fn usage_and_parse_errors() {
        assert_eq!(run_args(&["lattice", "dihedral("]).0, 64);
        assert_eq!(run_args(&["verify", "corollary", "--n", "2"]).0, 64);
        assert_eq!(run_args(&["verify", "corollary"]).0, 64);
        assert_eq!(run_args(&["verify", "nonsense"]).0, 64);
        assert_eq!(run_args(&["lattice", "cyclic(300)"]).0, 64);
        assert_eq!(run_args(&["--cap", "400", "lattice", "cyclic(300)"]).0, 0);
        assert_eq!(run_args(&["lattice", "table(\"/nonexistent.json\")"]).0, 74);
        assert_eq!(run_args(&[]).0, 64);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn iso_results() {
        let (code, out, _) =
            run_args(&["iso", "quotient(cover_dq(3), [x^2*y^2])", "quaternion(8)"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["map"].as_array().unwrap().len(), 8);
        let (code, out, _) = run_args(&["iso", "dihedral(8)", "quaternion(8)"]);
        assert_eq!(code, 1);
        assert_eq!(out.trim(), "{\n  \"isomorphic\": false\n}");
    }

    #[test]
    fn export_table_and_hom() {
        let (code, out, _) = run_args(&["export", "cyclic(3)"]);
        assert_eq!(code, 0);
        let g = crate::formats::parse_table_json(&out).unwrap();
        assert_eq!(g.order(), 3);
        let (code, out, _) = run_args(&["export", "quotient(cyclic(4), [x^2])", "--hom"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["source"], "cyclic(4)");
        assert_eq!(v["map"].as_array().unwrap().len(), 4);
        assert_eq!(run_args(&["export", "cyclic(4)", "--hom"]).0, 64);
    }

    #[test]
    fn verify_figure3() {
        let (code, out, _) = run_args(&["verify", "figure3"]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["suite"], "figure3");
        assert_eq!(v["pass"], true);
    }
}
