//! Command-line front end: `check`, `prove` and `table`.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use pnd_core::engine::{check_script, Report};
use pnd_core::parser::parse_metaprop;
use pnd_core::prover::{decide, metaprop_to_prop, tautology, truth_table, Prop, Verdict};
use pnd_core::stdlib::{self, TheoryFile};
use pnd_core::{Diagnostic, MetaProp, SourceFile, TheoryContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pnd",
    version,
    about = "Natural deduction proof checker for propositional logic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check theory scripts against the base theory.
    Check {
        /// Also load the classical theory.
        #[arg(long)]
        classical: bool,
        /// Start from an empty context.
        #[arg(long)]
        no_base: bool,
        /// Print each certified theorem.
        #[arg(long)]
        trace: bool,
        /// Script files; `-` reads standard input.
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Decide a formula intuitionistically, or classically with `--classical`.
    Prove {
        #[arg(long)]
        classical: bool,
        /// Hypotheses separated by `;`.
        #[arg(long)]
        hyps: Option<String>,
        /// Print the derivation.
        #[arg(long)]
        trace: bool,
        goal: String,
    },
    /// Print the truth table of a formula.
    Table { goal: String },
}

/// Runs the tool and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            classical,
            no_base,
            trace,
            files,
        } => check(classical, no_base, trace, &files, stdin, out, err),
        Command::Prove {
            classical,
            hyps,
            trace,
            goal,
        } => prove(classical, hyps.as_deref(), trace, &goal, out, err),
        Command::Table { goal } => table(&goal, out, err),
    };
    result.unwrap_or(EXIT_USAGE)
}

fn trace_report(report: &Report, ctx: &TheoryContext, out: &mut dyn Write) -> std::io::Result<()> {
    for thm in &report.theorems {
        if thm.name().is_empty() {
            writeln!(out, "ok: \"{}\"", ctx.pretty(thm.statement()))?;
        } else {
            writeln!(out, "ok: {}", thm.name())?;
        }
    }
    Ok(())
}

fn check(
    classical: bool,
    no_base: bool,
    trace: bool,
    files: &[String],
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut ctx = TheoryContext::new();
    let mut certified = 0;
    let mut bundled = Vec::new();
    if !no_base {
        bundled.push(TheoryFile::Base);
    }
    if classical {
        bundled.push(TheoryFile::Classical);
    }
    for theory in bundled {
        match theory.load(&mut ctx) {
            Ok(report) => {
                certified += report.theorems.len();
                if trace {
                    trace_report(&report, &ctx, out)?;
                }
            }
            Err(d) => {
                writeln!(
                    err,
                    "{}",
                    d.render(&SourceFile::new(theory.file_name(), theory.text()))
                )?;
                return Ok(EXIT_FAIL);
            }
        }
    }
    for name in files {
        let text = if name == "-" {
            let mut s = String::new();
            if let Err(e) = stdin.read_to_string(&mut s) {
                writeln!(err, "<stdin>: error: {e}")?;
                return Ok(EXIT_USAGE);
            }
            s
        } else {
            match fs::read_to_string(name) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "{name}: error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            }
        };
        let display = if name == "-" {
            "<stdin>"
        } else {
            name.as_str()
        };
        match check_script(&mut ctx, &text) {
            Ok(report) => {
                certified += report.theorems.len();
                if trace {
                    trace_report(&report, &ctx, out)?;
                }
            }
            Err(d) => {
                writeln!(err, "{}", d.render(&SourceFile::new(display, text)))?;
                return Ok(EXIT_FAIL);
            }
        }
    }
    if trace {
        writeln!(out, "{certified} theorems certified")?;
    }
    Ok(EXIT_OK)
}

fn parse_goal(text: &str, ctx: &TheoryContext, label: &str) -> Result<MetaProp, String> {
    parse_metaprop(text, ctx.signature())
        .map_err(|d: Diagnostic| d.render(&SourceFile::new(label, text)))
}

fn to_prop(p: &MetaProp, ctx: &TheoryContext, label: &str) -> Result<Prop, String> {
    metaprop_to_prop(p, ctx).map_err(|e| format!("{label}: error: {e}"))
}

fn prove(
    classical: bool,
    hyps: Option<&str>,
    trace: bool,
    goal: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let ctx = stdlib::base_context();
    let parsed = (|| {
        let mut left = Vec::new();
        for h in hyps
            .unwrap_or("")
            .split(';')
            .map(str::trim)
            .filter(|h| !h.is_empty())
        {
            left.push(to_prop(&parse_goal(h, &ctx, "<hyp>")?, &ctx, "<hyp>")?);
        }
        let goal = parse_goal(goal, &ctx, "<goal>")?;
        let (premises, concl) = goal.premises_and_conclusion();
        for p in &premises {
            left.push(to_prop(p, &ctx, "<goal>")?);
        }
        let right = to_prop(&MetaProp::Judg(concl), &ctx, "<goal>")?;
        Ok::<_, String>((left, right))
    })();
    let (left, right) = match parsed {
        Ok(v) => v,
        Err(msg) => {
            writeln!(err, "{msg}")?;
            return Ok(EXIT_USAGE);
        }
    };
    if classical {
        let whole = left
            .iter()
            .rev()
            .fold(right, |acc, h| Prop::imp(h.clone(), acc));
        return match tautology(&whole) {
            Ok(true) => {
                writeln!(out, "valid")?;
                Ok(EXIT_OK)
            }
            Ok(false) => {
                writeln!(out, "invalid")?;
                Ok(EXIT_FAIL)
            }
            Err(e) => {
                writeln!(err, "<goal>: error: {e}")?;
                Ok(EXIT_USAGE)
            }
        };
    }
    match decide(&left, &right) {
        Verdict::Provable(d) => {
            writeln!(out, "provable")?;
            if trace {
                write!(out, "{}", d.render())?;
            }
            Ok(EXIT_OK)
        }
        Verdict::Unprovable => {
            writeln!(out, "unprovable")?;
            Ok(EXIT_FAIL)
        }
    }
}

fn table(goal: &str, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let ctx = stdlib::base_context();
    let prop = match parse_goal(goal, &ctx, "<goal>").and_then(|g| to_prop(&g, &ctx, "<goal>")) {
        Ok(p) => p,
        Err(msg) => {
            writeln!(err, "{msg}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let (atoms, rows) = match truth_table(&prop) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "<goal>: error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let widths: Vec<usize> = atoms.iter().map(|a| a.chars().count()).collect();
    let header: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    writeln!(out, "{} | {}", header.join(" "), goal.trim())?;
    for (vals, value) in &rows {
        let cells: Vec<String> = vals
            .iter()
            .zip(&widths)
            .map(|(v, w)| format!("{:<w$}", if *v { "T" } else { "F" }, w = *w))
            .collect();
        writeln!(
            out,
            "{} | {}",
            cells.join(" "),
            if *value { "T" } else { "F" }
        )?;
    }
    let valid = rows.iter().all(|(_, v)| *v);
    writeln!(out, "{}", if valid { "valid" } else { "invalid" })?;
    Ok(if valid { EXIT_OK } else { EXIT_FAIL })
}
