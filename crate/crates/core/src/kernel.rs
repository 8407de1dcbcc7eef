//! The trusted core.
//!
//! Every [`Theorem`] is built in this module: axioms via
//! [`TheoryContext::register_axiom`], definitional equations via
//! [`TheoryContext::register_definition`], and proved statements via
//! [`TheoryContext::export`], which demands a [`Discharged`] token that only
//! the proof engine hands out after a proof closed with no remaining goals.
//! Rule application is one-sided first-order matching of rule schematics
//! against ground goals and facts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::parser::Attr;
use crate::syntax::{ConstDecl, Formula, MetaProp, Signature, SignatureError, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Axiom,
    Proved,
}

/// A certified meta-proposition. Rules and proved theorems share this type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem {
    name: String,
    statement: MetaProp,
    origin: Origin,
}

impl Theorem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn statement(&self) -> &MetaProp {
        &self.statement
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }
}

/// `head(params) == body`, with params as schematic names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefEq {
    pub name: String,
    pub head: String,
    pub params: Vec<String>,
    pub body: Formula,
}

impl DefEq {
    fn instantiate(&self, args: &[Formula]) -> Formula {
        let s: Substitution = self
            .params
            .iter()
            .cloned()
            .zip(args.iter().cloned())
            .collect();
        s.apply_formula(&self.body)
    }
}

/// An open proof obligation; stands for `hyps1 ==> ... ==> hypsn ==> concl`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Goal {
    pub hyps: Vec<MetaProp>,
    pub concl: Formula,
}

impl Goal {
    pub fn new(hyps: Vec<MetaProp>, concl: Formula) -> Goal {
        Goal { hyps, concl }
    }

    pub fn from_prop(p: &MetaProp) -> Goal {
        let (hyps, concl) = p.premises_and_conclusion();
        Goal { hyps, concl }
    }

    pub fn to_prop(&self) -> MetaProp {
        MetaProp::from_parts(self.hyps.clone(), self.concl.clone())
    }

    // A rule premise, instantiated, becomes a goal under the current hypotheses.
    fn residual(&self, premise: &MetaProp) -> Goal {
        let (extra, concl) = premise.premises_and_conclusion();
        let mut hyps = self.hyps.clone();
        hyps.extend(extra);
        Goal { hyps, concl }
    }
}

/// Proof that a statement was established by a completed proof. Only the
/// proof engine creates these.
#[derive(Debug)]
pub struct Discharged {
    statement: MetaProp,
}

impl Discharged {
    pub(crate) fn new(statement: MetaProp) -> Discharged {
        Discharged { statement }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("`{0}` is already defined")]
    DuplicateName(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("ill-formed statement: {0}")]
    IllFormed(String),
    #[error("the left-hand side of a definition must be `{0}` applied to distinct variables")]
    DefinitionLhs(String),
    #[error("definition of `{head}` mentions `{var}`, which is not a parameter")]
    DefinitionVariable { head: String, var: String },
    #[error("definition of `{0}` is circular")]
    CyclicDefinition(String),
    #[error("statement must not contain schematic variables")]
    NotGround,
    #[error("the proof established a different statement")]
    EvidenceMismatch,
}

/// Why a rule did not apply to a goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleFailure {
    ConclusionMismatch,
    PremiseMismatch(usize),
    TooManyFacts { facts: usize, premises: usize },
    NoFacts,
    Unbound(Vec<String>),
}

impl fmt::Display for RuleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleFailure::ConclusionMismatch => write!(f, "conclusion does not match the goal"),
            RuleFailure::PremiseMismatch(i) => {
                write!(f, "premise {} does not match chained fact {}", i + 1, i + 1)
            }
            RuleFailure::TooManyFacts { facts, premises } => {
                write!(f, "{facts} chained facts but only {premises} premises")
            }
            RuleFailure::NoFacts => write!(f, "no chained facts to eliminate"),
            RuleFailure::Unbound(vs) => write!(
                f,
                "variables {} are not determined by the goal",
                vs.join(", ")
            ),
        }
    }
}

fn match_formula(pat: &Formula, target: &Formula, s: &mut Substitution) -> bool {
    match (pat, target) {
        (Formula::Schematic(x), _) => match s.get(x) {
            Some(bound) => bound == target,
            None => {
                s.insert(x.clone(), target.clone());
                true
            }
        },
        (Formula::Atom(a), Formula::Atom(b)) => a == b,
        (Formula::App(h1, a1), Formula::App(h2, a2)) => {
            h1 == h2
                && a1.len() == a2.len()
                && a1.iter().zip(a2).all(|(p, t)| match_formula(p, t, s))
        }
        _ => false,
    }
}

fn match_into(pattern: &MetaProp, target: &MetaProp, s: &mut Substitution) -> bool {
    match (pattern, target) {
        (MetaProp::Judg(p), MetaProp::Judg(t)) => match_formula(p, t, s),
        (MetaProp::MetaImp(p1, c1), MetaProp::MetaImp(p2, c2)) => {
            match_into(p1, p2, s) && match_into(c1, c2, s)
        }
        _ => false,
    }
}

/// One-sided matching: on success, instantiating `pattern` with the result
/// yields `target`, and the result extends `seed`.
pub fn match_prop(
    pattern: &MetaProp,
    target: &MetaProp,
    seed: Substitution,
) -> Option<Substitution> {
    let mut s = seed;
    if !match_into(pattern, target, &mut s) {
        return None;
    }
    debug_assert_eq!(&s.apply(pattern), target);
    Some(s)
}

pub fn match_formula_with(
    pattern: &Formula,
    target: &Formula,
    seed: Substitution,
) -> Option<Substitution> {
    let mut s = seed;
    match_formula(pattern, target, &mut s).then_some(s)
}

fn unbound(statement: &MetaProp, s: &Substitution) -> Result<(), RuleFailure> {
    let missing: Vec<String> = statement
        .schematics()
        .into_iter()
        .filter(|x| !s.contains(x))
        .collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(RuleFailure::Unbound(missing))
    }
}

/// Backward step: match the rule's conclusion against the goal; every
/// premise becomes a new goal.
pub fn apply_rule_intro(rule: &Theorem, goal: &Goal) -> Result<Vec<Goal>, RuleFailure> {
    let (premises, concl) = rule.statement.premises_and_conclusion();
    let s = match_formula_with(&concl, &goal.concl, Substitution::new())
        .ok_or(RuleFailure::ConclusionMismatch)?;
    unbound(&rule.statement, &s)?;
    Ok(premises
        .iter()
        .map(|p| goal.residual(&s.apply(p)))
        .collect())
}

/// Elimination step: the chained facts instantiate the leading premises in
/// order, the conclusion is matched against the goal, and the remaining
/// premises become new goals.
pub fn apply_rule_elim(
    rule: &Theorem,
    chained: &[MetaProp],
    goal: &Goal,
) -> Result<Vec<Goal>, RuleFailure> {
    if chained.is_empty() {
        return Err(RuleFailure::NoFacts);
    }
    let (premises, concl) = rule.statement.premises_and_conclusion();
    if chained.len() > premises.len() {
        return Err(RuleFailure::TooManyFacts {
            facts: chained.len(),
            premises: premises.len(),
        });
    }
    let mut s = Substitution::new();
    for (i, (p, fact)) in premises.iter().zip(chained).enumerate() {
        s = match_prop(p, fact, s).ok_or(RuleFailure::PremiseMismatch(i))?;
    }
    let s = match_formula_with(&concl, &goal.concl, s).ok_or(RuleFailure::ConclusionMismatch)?;
    unbound(&rule.statement, &s)?;
    Ok(premises[chained.len()..]
        .iter()
        .map(|p| goal.residual(&s.apply(p)))
        .collect())
}

const CLOSURE_DEPTH: usize = 4;

/// True when the goal's conclusion is a hypothesis or a given fact. A fact
/// `P1 ==> ... ==> c` also closes a goal with conclusion `c` if each `Pi`
/// closes in turn (nesting bounded).
pub fn close_by_assumption(goal: &Goal, facts: &[MetaProp]) -> bool {
    closes(goal, facts, CLOSURE_DEPTH)
}

fn closes(goal: &Goal, facts: &[MetaProp], depth: usize) -> bool {
    goal.hyps.iter().chain(facts).any(|fact| {
        let (premises, concl) = fact.premises_and_conclusion();
        concl == goal.concl
            && (premises.is_empty()
                || (depth > 0
                    && premises
                        .iter()
                        .all(|p| closes(&goal.residual(p), facts, depth - 1))))
    })
}

pub fn unfold_formula(defs: &[&DefEq], f: &Formula) -> Formula {
    match f {
        Formula::App(head, args) => {
            let args: Vec<Formula> = args.iter().map(|a| unfold_formula(defs, a)).collect();
            match defs.iter().find(|d| &d.head == head) {
                Some(d) => unfold_formula(defs, &d.instantiate(&args)),
                None => Formula::App(head.clone(), args),
            }
        }
        _ => f.clone(),
    }
}

/// Rewrites every listed defined constant by its body, innermost first.
pub fn unfold(defs: &[&DefEq], p: &MetaProp) -> MetaProp {
    p.map_formulas(&mut |f| unfold_formula(defs, f))
}

/// Declared connectives, definitions, and the named theorem tables.
#[derive(Clone, Debug, Default)]
pub struct TheoryContext {
    sig: Signature,
    theorems: IndexMap<String, Theorem>,
    anonymous: Vec<Theorem>,
    defs: IndexMap<String, DefEq>,
    intro: Vec<String>,
    elim: Vec<String>,
}

impl TheoryContext {
    pub fn new() -> TheoryContext {
        TheoryContext::default()
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn declare(&mut self, decl: ConstDecl) -> Result<(), KernelError> {
        Ok(self.sig.declare(decl)?)
    }

    pub fn theorem(&self, name: &str) -> Option<&Theorem> {
        self.theorems.get(name)
    }

    pub fn theorems(&self) -> impl Iterator<Item = &Theorem> {
        self.theorems.values()
    }

    /// Named theorems and axioms, then anonymous theorems.
    pub fn all_theorems(&self) -> impl Iterator<Item = &Theorem> {
        self.theorems.values().chain(&self.anonymous)
    }

    pub fn definition(&self, name: &str) -> Option<&DefEq> {
        self.defs.get(name)
    }

    pub fn definitions(&self) -> impl Iterator<Item = &DefEq> {
        self.defs.values()
    }

    pub fn intro_rules(&self) -> impl Iterator<Item = &Theorem> {
        self.intro.iter().map(|n| &self.theorems[n])
    }

    pub fn elim_rules(&self) -> impl Iterator<Item = &Theorem> {
        self.elim.iter().map(|n| &self.theorems[n])
    }

    /// Pretty-prints, falling back to the raw form for undeclared constants.
    pub fn pretty(&self, p: &MetaProp) -> String {
        self.sig.pretty(p).unwrap_or_else(|_| p.to_string())
    }

    pub fn pretty_formula(&self, f: &Formula) -> String {
        self.sig.pretty_formula(f).unwrap_or_else(|_| f.to_string())
    }

    /// Unfolds every definition in the context.
    pub fn unfold_all(&self, p: &MetaProp) -> MetaProp {
        let defs: Vec<&DefEq> = self.defs.values().collect();
        unfold(&defs, p)
    }

    pub fn check_fresh(&self, name: &str) -> Result<(), KernelError> {
        if self.theorems.contains_key(name) || self.defs.contains_key(name) {
            Err(KernelError::DuplicateName(name.to_string()))
        } else {
            Ok(())
        }
    }

    pub fn well_formed(&self, p: &MetaProp) -> Result<(), KernelError> {
        fn go(sig: &Signature, f: &Formula) -> Result<(), KernelError> {
            match f {
                Formula::App(h, args) => {
                    let d = sig.get(h).ok_or_else(|| {
                        KernelError::IllFormed(format!("undeclared constant `{h}`"))
                    })?;
                    if d.arity != args.len() {
                        return Err(KernelError::IllFormed(format!(
                            "`{h}` applied to {} arguments, expected {}",
                            args.len(),
                            d.arity
                        )));
                    }
                    args.iter().try_for_each(|a| go(sig, a))
                }
                _ => Ok(()),
            }
        }
        p.formulas().into_iter().try_for_each(|f| go(&self.sig, f))
    }

    fn register(&mut self, thm: Theorem, attrs: &[Attr]) {
        for a in attrs {
            let table = match a {
                Attr::Intro => &mut self.intro,
                Attr::Elim => &mut self.elim,
            };
            if !table.contains(&thm.name) {
                table.push(thm.name.clone());
            }
        }
        self.theorems.insert(thm.name.clone(), thm);
    }

    /// Adds a rule on trust. Its atoms become schematic variables.
    pub fn register_axiom(
        &mut self,
        name: &str,
        attrs: &[Attr],
        statement: &MetaProp,
    ) -> Result<&Theorem, KernelError> {
        self.check_fresh(name)?;
        self.well_formed(statement)?;
        let thm = Theorem {
            name: name.to_string(),
            statement: statement.generalize(),
            origin: Origin::Axiom,
        };
        self.register(thm, attrs);
        Ok(&self.theorems[name])
    }

    /// Declares `decl` and records `lhs == rhs` under the name `HEAD_def`.
    pub fn register_definition(
        &mut self,
        decl: ConstDecl,
        lhs: &Formula,
        rhs: &Formula,
    ) -> Result<&DefEq, KernelError> {
        let head = decl.name.clone();
        let name = format!("{head}_def");
        self.check_fresh(&name)?;
        let params = match lhs {
            Formula::App(h, args) if *h == head && args.len() == decl.arity => {
                let mut params = Vec::new();
                for a in args {
                    match a {
                        Formula::Atom(x) if !params.contains(x) => params.push(x.clone()),
                        _ => return Err(KernelError::DefinitionLhs(head)),
                    }
                }
                params
            }
            _ => return Err(KernelError::DefinitionLhs(head)),
        };
        let rhs_prop = MetaProp::Judg(rhs.clone());
        if let Some(var) = rhs_prop.atoms().into_iter().find(|v| !params.contains(v)) {
            return Err(KernelError::DefinitionVariable { head, var });
        }
        let body = rhs.generalize();
        if self.depends_on(&body, &head) {
            return Err(KernelError::CyclicDefinition(head));
        }
        self.sig.declare(decl)?;
        self.well_formed(&MetaProp::Judg(body.clone()))?;
        let def = DefEq {
            name: name.clone(),
            head,
            params,
            body,
        };
        self.defs.insert(name.clone(), def);
        Ok(&self.defs[&name])
    }

    // Whether `body` reaches `head` through the definition graph.
    fn depends_on(&self, body: &Formula, head: &str) -> bool {
        let by_head: BTreeMap<&str, &DefEq> =
            self.defs.values().map(|d| (d.head.as_str(), d)).collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![body.clone()];
        while let Some(f) = stack.pop() {
            let mut heads = BTreeSet::new();
            f.collect_heads(&mut heads);
            for h in heads {
                if h == head {
                    return true;
                }
                if seen.insert(h.clone()) {
                    if let Some(d) = by_head.get(h.as_str()) {
                        stack.push(d.body.clone());
                    }
                }
            }
        }
        false
    }

    /// Registers a proved statement, generalizing its atoms to schematics.
    /// Anonymous theorems are certified but not added to the name table.
    pub fn export(
        &mut self,
        name: Option<&str>,
        attrs: &[Attr],
        statement: &MetaProp,
        evidence: Discharged,
    ) -> Result<Theorem, KernelError> {
        if &evidence.statement != statement {
            return Err(KernelError::EvidenceMismatch);
        }
        if !statement.is_ground() {
            return Err(KernelError::NotGround);
        }
        self.well_formed(statement)?;
        let thm = Theorem {
            name: name.unwrap_or("").to_string(),
            statement: statement.generalize(),
            origin: Origin::Proved,
        };
        match name {
            Some(n) => {
                self.check_fresh(n)?;
                self.register(thm.clone(), attrs);
            }
            None => self.anonymous.push(thm.clone()),
        }
        Ok(thm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::inner::parse_metaprop;
    use crate::syntax::{Fixity, Mixfix};

    fn ctx() -> TheoryContext {
        let mut c = TheoryContext::new();
        for (name, arity, fx, sym) in [
            ("Imp", 2, Fixity::Infixr(3), "-->"),
            ("Dis", 2, Fixity::Infixr(4), "\\/"),
            ("Con", 2, Fixity::Infixr(5), "/\\"),
            ("Falsity", 0, Fixity::Nullary, "F"),
        ] {
            c.declare(ConstDecl {
                name: name.into(),
                arity,
                mixfix: Some(Mixfix::new(fx, sym)),
            })
            .unwrap();
        }
        let rules: [(&str, &[Attr], &str); 9] = [
            ("Imp_I", &[Attr::Intro], "(p ==> q) ==> p --> q"),
            ("Imp_E", &[Attr::Elim], "p --> q ==> p ==> q"),
            (
                "Dis_E",
                &[Attr::Elim],
                "p \\/ q ==> (p ==> r) ==> (q ==> r) ==> r",
            ),
            ("Dis_I1", &[Attr::Intro], "p ==> p \\/ q"),
            ("Dis_I2", &[Attr::Intro], "q ==> p \\/ q"),
            ("Con_I", &[Attr::Intro], "p ==> q ==> p /\\ q"),
            ("Con_E1", &[Attr::Elim], "p /\\ q ==> p"),
            ("Con_E2", &[Attr::Elim], "p /\\ q ==> q"),
            ("Falsity_E", &[Attr::Elim], "F ==> q"),
        ];
        for (name, attrs, text) in rules {
            let st = parse_metaprop(text, c.signature()).unwrap();
            c.register_axiom(name, attrs, &st).unwrap();
        }
        c
    }

    fn mp(c: &TheoryContext, text: &str) -> MetaProp {
        parse_metaprop(text, c.signature()).unwrap()
    }

    fn goal(c: &TheoryContext, text: &str) -> Goal {
        Goal::from_prop(&mp(c, text))
    }

    #[test]
    fn match_binds_major_premise() {
        let c = ctx();
        let imp_e = c.theorem("Imp_E").unwrap();
        let (prems, _) = imp_e.statement().premises_and_conclusion();
        let s = match_prop(&prems[0], &mp(&c, "(a \\/ b) --> c"), Substitution::new()).unwrap();
        assert_eq!(s.get("p"), Some(mp(&c, "a \\/ b").conclusion()));
        assert_eq!(s.get("q"), Some(&Formula::atom("c")));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn match_failures() {
        let c = ctx();
        let dis = mp(&c, "p \\/ q").generalize();
        assert!(match_prop(&dis, &mp(&c, "a /\\ b"), Substitution::new()).is_none());
        let same = mp(&c, "p \\/ p").generalize();
        let s = match_prop(&same, &mp(&c, "a \\/ a"), Substitution::new()).unwrap();
        assert_eq!(s.get("p"), Some(&Formula::atom("a")));
        assert!(match_prop(&same, &mp(&c, "a \\/ b"), Substitution::new()).is_none());
    }

    #[test]
    fn intro_rules_reduce_goals() {
        let c = ctx();
        let g = apply_rule_intro(c.theorem("Imp_I").unwrap(), &goal(&c, "F --> F")).unwrap();
        assert_eq!(g, vec![goal(&c, "F ==> F")]);
        let g = apply_rule_intro(c.theorem("Dis_I1").unwrap(), &goal(&c, "a \\/ b")).unwrap();
        assert_eq!(g, vec![goal(&c, "a")]);
        let g = apply_rule_intro(c.theorem("Con_I").unwrap(), &goal(&c, "a /\\ b")).unwrap();
        assert_eq!(g, vec![goal(&c, "a"), goal(&c, "b")]);
        // Dis_E as an intro leaves p and q undetermined
        let e = apply_rule_intro(c.theorem("Dis_E").unwrap(), &goal(&c, "c")).unwrap_err();
        assert!(
            matches!(e, RuleFailure::Unbound(v) if v == vec!["p".to_string(), "q".to_string()])
        );
    }

    #[test]
    fn intro_keeps_hypotheses() {
        let c = ctx();
        let g = apply_rule_intro(c.theorem("Imp_I").unwrap(), &goal(&c, "x ==> a --> b")).unwrap();
        assert_eq!(g, vec![goal(&c, "x ==> a ==> b")]);
    }

    #[test]
    fn elim_rules_consume_facts() {
        let c = ctx();
        let facts = [mp(&c, "p --> F"), mp(&c, "p")];
        let g = apply_rule_elim(c.theorem("Imp_E").unwrap(), &facts, &goal(&c, "F")).unwrap();
        assert!(g.is_empty());
        let g = apply_rule_elim(
            c.theorem("Falsity_E").unwrap(),
            &[mp(&c, "F")],
            &goal(&c, "q"),
        )
        .unwrap();
        assert!(g.is_empty());
        let g = apply_rule_elim(
            c.theorem("Dis_E").unwrap(),
            &[mp(&c, "a \\/ b")],
            &goal(&c, "c"),
        )
        .unwrap();
        assert_eq!(g, vec![goal(&c, "a ==> c"), goal(&c, "b ==> c")]);
        let e = apply_rule_elim(
            c.theorem("Falsity_E").unwrap(),
            &[mp(&c, "F"), mp(&c, "F")],
            &goal(&c, "q"),
        );
        assert!(matches!(e, Err(RuleFailure::TooManyFacts { .. })));
        let e = apply_rule_elim(
            c.theorem("Imp_E").unwrap(),
            &[mp(&c, "p --> q"), mp(&c, "r")],
            &goal(&c, "q"),
        );
        assert_eq!(e, Err(RuleFailure::PremiseMismatch(1)));
    }

    #[test]
    fn assumption_closure() {
        let c = ctx();
        assert!(close_by_assumption(&goal(&c, "F ==> F"), &[]));
        assert!(close_by_assumption(&goal(&c, "p"), &[mp(&c, "p")]));
        assert!(!close_by_assumption(&goal(&c, "p"), &[]));
        // a hypothetical fact whose premise is itself available
        assert!(close_by_assumption(
            &goal(&c, "p ==> q"),
            &[mp(&c, "p ==> q")]
        ));
        assert!(close_by_assumption(
            &goal(&c, "p"),
            &[mp(&c, "q ==> p"), mp(&c, "q")]
        ));
        assert!(!close_by_assumption(
            &goal(&c, "q"),
            &[mp(&c, "p --> q"), mp(&c, "p")]
        ));
        // self-feeding fact terminates
        assert!(!close_by_assumption(&goal(&c, "q"), &[mp(&c, "q ==> q")]));
    }

    fn with_defs() -> TheoryContext {
        let mut c = ctx();
        let defs = [
            (
                "Truth",
                0,
                Mixfix::new(Fixity::Nullary, "T"),
                "T",
                "F --> F",
            ),
            (
                "Neg",
                1,
                Mixfix::new(Fixity::Prefix(6), "~"),
                "~ p",
                "p --> F",
            ),
            (
                "Iff",
                2,
                Mixfix::new(Fixity::Infixr(2), "<->"),
                "p <-> q",
                "(p --> q) /\\ (q --> p)",
            ),
        ];
        for (name, arity, mx, lhs, rhs) in defs {
            let decl = ConstDecl {
                name: name.into(),
                arity,
                mixfix: Some(mx),
            };
            let mut sig = c.signature().clone();
            sig.declare(decl.clone()).unwrap();
            let l = crate::parser::parse_formula(lhs, &sig).unwrap();
            let r = crate::parser::parse_formula(rhs, &sig).unwrap();
            c.register_definition(decl, &l, &r).unwrap();
        }
        c
    }

    #[test]
    fn unfolding_definitions() {
        let c = with_defs();
        let truth = [c.definition("Truth_def").unwrap()];
        assert_eq!(unfold(&truth, &mp(&c, "T")), mp(&c, "F --> F"));
        let neg = [c.definition("Neg_def").unwrap()];
        assert_eq!(
            unfold(&neg, &mp(&c, "~p ==> p ==> q")),
            mp(&c, "(p --> F) ==> p ==> q")
        );
        let iff = [c.definition("Iff_def").unwrap()];
        assert_eq!(
            unfold(&iff, &mp(&c, "p <-> q")),
            mp(&c, "(p --> q) /\\ (q --> p)")
        );
        // nested and idempotent
        let all = c.unfold_all(&mp(&c, "~T <-> ~ ~p"));
        assert_eq!(c.unfold_all(&all), all);
        assert!(all
            .heads()
            .iter()
            .all(|h| !["Truth", "Neg", "Iff"].contains(&h.as_str())));
    }

    #[test]
    fn definitions_are_checked() {
        let mut c = with_defs();
        let decl = ConstDecl {
            name: "Loop".into(),
            arity: 1,
            mixfix: None,
        };
        let mut sig = c.signature().clone();
        sig.declare(decl.clone()).unwrap();
        let l = crate::parser::parse_formula("Loop(p)", &sig).unwrap();
        let r = crate::parser::parse_formula("Loop(p) --> p", &sig).unwrap();
        assert_eq!(
            c.register_definition(decl.clone(), &l, &r),
            Err(KernelError::CyclicDefinition("Loop".into()))
        );
        let r = crate::parser::parse_formula("q --> p", &sig).unwrap();
        assert!(matches!(
            c.register_definition(decl.clone(), &l, &r),
            Err(KernelError::DefinitionVariable { .. })
        ));
        let l2 = crate::parser::parse_formula("Loop(F)", &sig).unwrap();
        assert!(matches!(
            c.register_definition(decl, &l2, &r),
            Err(KernelError::DefinitionLhs(_))
        ));
        assert!(!c.signature().contains("Loop"));
    }

    #[test]
    fn axioms_generalize_and_register() {
        let mut c = with_defs();
        let lem = mp(&c, "p \\/ ~p");
        let thm = c.register_axiom("LEM", &[], &lem).unwrap();
        assert_eq!(thm.origin(), Origin::Axiom);
        assert_eq!(thm.statement(), &lem.generalize());
        assert_eq!(
            c.register_axiom("LEM", &[], &lem).unwrap_err(),
            KernelError::DuplicateName("LEM".into())
        );
        assert!(!c.intro_rules().any(|t| t.name() == "LEM"));
    }

    #[test]
    fn export_requires_matching_evidence() {
        let mut c = ctx();
        let st = mp(&c, "p ==> p");
        let e = c.export(
            Some("id"),
            &[Attr::Intro],
            &st,
            Discharged::new(mp(&c, "q ==> q")),
        );
        assert_eq!(e.unwrap_err(), KernelError::EvidenceMismatch);
        let thm = c
            .export(Some("id"), &[Attr::Intro], &st, Discharged::new(st.clone()))
            .unwrap();
        assert_eq!(thm.statement(), &st.generalize());
        assert!(c.intro_rules().any(|t| t.name() == "id"));
        let dup = c.export(Some("id"), &[], &st, Discharged::new(st.clone()));
        assert_eq!(dup.unwrap_err(), KernelError::DuplicateName("id".into()));
    }
}
