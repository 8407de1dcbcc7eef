//! Front end: formula parsing against a dynamic operator table, and the
//! theory script grammar.

pub mod inner;
pub mod script;

pub use crate::lexer::tokenize;
pub use inner::{parse_formula, parse_formula_at, parse_metaprop, parse_metaprop_at};
pub use script::{
    parse_script, Attr, AxiomRule, Axiomatization, DefinitionItem, FactRef, GoalItem, GoalKind,
    Item, ItemKind, Method, MethodKind, MethodStyle, ProofStep, StepKind,
};
