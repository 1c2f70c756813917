//! The `lpc` command line: checking, cut elimination, duality, proof
//! search, interpretation and model verification over the text formats.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use lpc_cutelim::{eliminate_all_traced, elaborate_dual};
use lpc_kernel::{check, parse_derivations, print_derivation, Derivation, KernelError, Policy};
use lpc_models::{instance_build, Params};
use lpc_search::{enumerate_provable, search, SearchBudget};
use lpc_semantics::{check_laws, Interpreter, Scope, SemError};
use lpc_syntax::{parse_prop, parse_sequent, Side, SyntaxError};
use thiserror::Error;

/// Exit status for a verdict that went the wrong way.
pub const VERDICT_FAILED: u8 = 1;
/// Exit status for bad usage or unreadable input.
pub const USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Semantics(#[from] SemError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    /// One tab-separated record per line.
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Parser)]
#[command(name = "lpc", version, about = "Proof kernel, cut elimination and model checker for LPC linear logic")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every derivation in a script.
    Check {
        /// A file, `-` for stdin, or inline script text.
        input: String,
        /// Reject cuts.
        #[arg(long)]
        no_cut: bool,
    },
    /// Eliminate all cuts.
    Elim {
        input: String,
        /// Print the elimination trace of every cut.
        #[arg(long)]
        trace: bool,
        /// Write the cut-free derivations here instead of stdout.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Dualise a proposition, or move a formula across a derivation's turnstile.
    Dual {
        input: String,
        /// Proposition to move; the input is then a derivation.
        #[arg(long = "move")]
        formula: Option<String>,
        /// Side the moved proposition currently sits on.
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        from: SideArg,
    },
    /// Search for a cut-free derivation of a sequent.
    Search {
        goal: String,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        contractions: usize,
        #[arg(long, default_value_t = 2_000_000)]
        nodes: usize,
    },
    /// Interpret each derivation in a model.
    Interp {
        input: String,
        #[arg(long)]
        model: String,
        /// Instance parameters, `key=value,...`.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Check every law family of a model instance.
    VerifyModel {
        #[arg(long)]
        model: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Only families whose name contains this.
        #[arg(long)]
        laws: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Print searched derivations of every sequent up to a size.
    Corpus {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        contractions: usize,
    },
}

/// Read a path, stdin for `-`, or take the argument as inline text when
/// no such file exists and it looks like an s-expression.
fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "stdin".into(), source })?;
        return Ok(s);
    }
    if input.trim_start().starts_with('(') && !Path::new(input).exists() {
        return Ok(input.to_string());
    }
    fs::read_to_string(input).map_err(|source| CliError::Io { path: input.into(), source })
}

fn derivations(input: &str) -> Result<Vec<Derivation>, CliError> {
    let ds = parse_derivations(&read_input(input)?)?;
    if ds.is_empty() {
        return Err(CliError::Usage(format!("{input} holds no derivations")));
    }
    Ok(ds)
}

fn write(out: &mut dyn Write, text: &str) {
    // A closed pipe is not worth a panic.
    let _ = out.write_all(text.as_bytes());
}

/// Run one parsed command, returning the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let structured = cli.format == Format::Structured;
    match &cli.command {
        Command::Check { input, no_cut } => {
            let policy = if *no_cut { Policy::CUT_FREE } else { Policy::WITH_CUT };
            let mut status = 0;
            for (i, d) in derivations(input)?.iter().enumerate() {
                let r = check(d, policy);
                if !r.is_ok() {
                    status = VERDICT_FAILED;
                }
                if structured {
                    write(out, &r.records().lines().map(|l| format!("{i}\t{l}\n")).collect::<String>());
                } else {
                    write(out, &format!("{r}\n"));
                }
            }
            Ok(status)
        }
        Command::Elim { input, trace, emit } => {
            let mut status = 0;
            let mut emitted = String::new();
            for (i, d) in derivations(input)?.iter().enumerate() {
                match eliminate_all_traced(d) {
                    Ok((e, traces)) => {
                        emitted.push_str(&print_derivation(&e));
                        if *trace {
                            for (k, t) in traces.iter().enumerate() {
                                let body: String = t.to_string().lines().map(|l| format!("; {i}.{k}\t{l}\n")).collect();
                                write(out, &body);
                            }
                        }
                    }
                    Err(e) => {
                        status = VERDICT_FAILED;
                        write(out, &format!("; derivation {i}: {e}\n"));
                    }
                }
            }
            match emit {
                Some(path) => fs::write(path, &emitted).map_err(|source| CliError::Io { path: path.clone(), source })?,
                None => write(out, &emitted),
            }
            Ok(status)
        }
        Command::Dual { input, formula, from } => match formula {
            None => {
                let x = parse_prop(&read_input(input)?)?;
                write(out, &format!("{}\n", x.dual()));
                Ok(0)
            }
            Some(f) => {
                let x = parse_prop(f)?;
                let side = match from {
                    SideArg::Left => Side::Left,
                    SideArg::Right => Side::Right,
                };
                let mut status = 0;
                for d in derivations(input)? {
                    match elaborate_dual(&d, side, &x) {
                        Ok(e) => write(out, &print_derivation(&e)),
                        Err(e) => {
                            status = VERDICT_FAILED;
                            write(out, &format!("; {e}\n"));
                        }
                    }
                }
                Ok(status)
            }
        },
        Command::Search { goal, depth, contractions, nodes } => {
            if *nodes == 0 {
                return Err(CliError::Usage("--nodes must be positive".into()));
            }
            let goal = parse_sequent(&read_input(goal)?)?;
            let budget = SearchBudget { depth: *depth, contractions: *contractions, nodes: *nodes };
            match search(&goal, budget).map_err(|e| CliError::Usage(e.to_string()))? {
                Some(d) => {
                    write(out, &print_derivation(&d));
                    Ok(0)
                }
                None => {
                    write(out, "exhausted\n");
                    Ok(VERDICT_FAILED)
                }
            }
        }
        Command::Interp { input, model, params } => {
            let m = instance_build(model, &Params::parse(params)?)?;
            let it = Interpreter::new(m.as_ref());
            let mut status = 0;
            for (i, d) in derivations(input)?.iter().enumerate() {
                match it.derivation(d) {
                    Ok(f) if structured => {
                        write(out, &format!("{i}\tdom\t{}\n{i}\tcod\t{}\n", f.dom, f.cod));
                        for r in 0..f.mat.rows() {
                            for c in (0..f.mat.cols()).filter(|&c| f.mat.get(r, c) != 0) {
                                write(out, &format!("{i}\tentry\t{}\t{}\t{}\n", f.cod.elem(r), f.dom.elem(c), f.mat.get(r, c)));
                            }
                        }
                    }
                    Ok(f) => write(out, &format!("{}\n{f}", d.conclusion)),
                    Err(e) => {
                        status = VERDICT_FAILED;
                        write(out, &format!("{}: {e}\n", d.conclusion));
                    }
                }
            }
            Ok(status)
        }
        Command::VerifyModel { model, max_size, laws, seed, params } => {
            let mut p = Params::parse(params)?;
            if let Some(n) = max_size {
                p = p.set("max_size", *n);
            }
            let m = instance_build(model, &p)?;
            let report = check_laws(m.as_ref(), &Scope { seed: *seed, filter: laws.clone(), ..Scope::default() });
            if report.families.is_empty() {
                return Err(CliError::Usage(format!("no law family matches {:?}", laws.as_deref().unwrap_or(""))));
            }
            write(out, &report.to_string());
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            write(out, &format!("{}\ttotal\t{verdict}\tfamilies={}\n", report.model, report.families.len()));
            Ok(if report.passed() { 0 } else { VERDICT_FAILED })
        }
        Command::Corpus { size, depth, contractions } => {
            for (s, d) in enumerate_provable(*size, SearchBudget::new(*depth, *contractions)) {
                write(out, &format!("; {s}\n{}", print_derivation(&d)));
            }
            Ok(0)
        }
    }
}
