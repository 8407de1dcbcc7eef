//! A small logical-framework proof assistant for propositional natural
//! deduction, with a trusted kernel, a structured proof language, and an
//! independent decision procedure.

pub mod diag;
pub mod engine;
pub mod kernel;
pub mod lexer;
pub mod parser;
pub mod prover;
pub mod stdlib;
pub mod syntax;

pub use diag::{Diagnostic, SourceFile, Span, Spanned};
pub use kernel::{Goal, KernelError, Theorem, TheoryContext};
pub use syntax::{ConstDecl, Fixity, Formula, MetaProp, Mixfix, Signature, Substitution};
