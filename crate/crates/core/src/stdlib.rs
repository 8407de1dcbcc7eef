//! Bundled theories.

use crate::diag::Diagnostic;
use crate::engine::{check_script, Report};
use crate::kernel::TheoryContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoryFile {
    Base,
    Classical,
    Examples,
    ClassicalExamples,
    Exercises,
}

impl TheoryFile {
    pub const ALL: [TheoryFile; 5] = [
        TheoryFile::Base,
        TheoryFile::Classical,
        TheoryFile::Examples,
        TheoryFile::ClassicalExamples,
        TheoryFile::Exercises,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            TheoryFile::Base => "base.pnd",
            TheoryFile::Classical => "classical.pnd",
            TheoryFile::Examples => "examples.pnd",
            TheoryFile::ClassicalExamples => "classical_examples.pnd",
            TheoryFile::Exercises => "exercises.pnd",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            TheoryFile::Base => include_str!("../theories/base.pnd"),
            TheoryFile::Classical => include_str!("../theories/classical.pnd"),
            TheoryFile::Examples => include_str!("../theories/examples.pnd"),
            TheoryFile::ClassicalExamples => include_str!("../theories/classical_examples.pnd"),
            TheoryFile::Exercises => include_str!("../theories/exercises.pnd"),
        }
    }

    pub fn load(self, ctx: &mut TheoryContext) -> Result<Report, Diagnostic> {
        check_script(ctx, self.text())
    }
}

pub fn load_base(ctx: &mut TheoryContext) -> Result<Report, Diagnostic> {
    TheoryFile::Base.load(ctx)
}

pub fn load_classical(ctx: &mut TheoryContext) -> Result<Report, Diagnostic> {
    TheoryFile::Classical.load(ctx)
}

pub fn load_examples(ctx: &mut TheoryContext) -> Result<Report, Diagnostic> {
    TheoryFile::Examples.load(ctx)
}

/// A fresh context with the base theory loaded.
pub fn base_context() -> TheoryContext {
    let mut ctx = TheoryContext::new();
    load_base(&mut ctx).expect("bundled base theory checks");
    ctx
}

/// Base plus the classical extension.
pub fn classical_context() -> TheoryContext {
    let mut ctx = base_context();
    load_classical(&mut ctx).expect("bundled classical theory checks");
    ctx
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provability {
    Intuitionistic,
    Classical,
    Invalid,
}

/// An exercise statement with its expected status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exercise {
    pub statement: String,
    pub expected: Provability,
}

/// The manifest embedded in `exercises.pnd`.
pub fn exercises() -> Vec<Exercise> {
    TheoryFile::Exercises
        .text()
        .lines()
        .filter_map(|line| {
            let (tag, rest) = line.trim().split_once(':')?;
            let expected = match tag {
                "intuitionistic" => Provability::Intuitionistic,
                "classical" => Provability::Classical,
                "invalid" => Provability::Invalid,
                _ => return None,
            };
            let statement = rest
                .trim()
                .strip_prefix('"')?
                .strip_suffix('"')?
                .to_string();
            Some(Exercise {
                statement,
                expected,
            })
        })
        .collect()
}
