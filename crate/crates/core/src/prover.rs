//! Decision procedures used as oracles: a contraction-free intuitionistic
//! sequent prover (G4ip) with replayable derivations, and a truth-table
//! checker for classical validity.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::TheoryContext;
use crate::syntax::{Formula, MetaProp};

pub const MAX_TABLE_ATOMS: usize = 20;

/// A formula over the core connectives only.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prop {
    Atom(Arc<str>),
    Bot,
    Imp(Arc<Prop>, Arc<Prop>),
    And(Arc<Prop>, Arc<Prop>),
    Or(Arc<Prop>, Arc<Prop>),
}

impl Prop {
    pub fn atom(name: &str) -> Prop {
        Prop::Atom(name.into())
    }

    pub fn imp(a: Prop, b: Prop) -> Prop {
        Prop::Imp(Arc::new(a), Arc::new(b))
    }

    pub fn and(a: Prop, b: Prop) -> Prop {
        Prop::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Prop, b: Prop) -> Prop {
        Prop::Or(Arc::new(a), Arc::new(b))
    }

    pub fn negation(a: Prop) -> Prop {
        Prop::imp(a, Prop::Bot)
    }

    pub fn size(&self) -> usize {
        match self {
            Prop::Atom(_) | Prop::Bot => 1,
            Prop::Imp(a, b) | Prop::And(a, b) | Prop::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Prop::Atom(a) => {
                out.insert(a.clone());
            }
            Prop::Bot => {}
            Prop::Imp(a, b) | Prop::And(a, b) | Prop::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn eval(&self, value: &dyn Fn(&str) -> bool) -> bool {
        match self {
            Prop::Atom(a) => value(a),
            Prop::Bot => false,
            Prop::Imp(a, b) => !a.eval(value) || b.eval(value),
            Prop::And(a, b) => a.eval(value) && b.eval(value),
            Prop::Or(a, b) => a.eval(value) || b.eval(value),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Prop::Imp(..) => 3,
            Prop::Or(..) => 4,
            Prop::And(..) => 5,
            Prop::Atom(_) | Prop::Bot => u8::MAX,
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, sym) = match self {
            Prop::Atom(a) => return write!(f, "{a}"),
            Prop::Bot => return write!(f, "F"),
            Prop::Imp(a, b) => (a, b, "-->"),
            Prop::Or(a, b) => (a, b, "\\/"),
            Prop::And(a, b) => (a, b, "/\\"),
        };
        // all three connectives associate to the right
        if a.prec() <= self.prec() {
            write!(f, "({a})")?;
        } else {
            write!(f, "{a}")?;
        }
        write!(f, " {sym} ")?;
        if b.prec() < self.prec() {
            write!(f, "({b})")
        } else {
            write!(f, "{b}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("constant `{0}` has no meaning for the decision procedures")]
    UnknownConstant(String),
    #[error("{0} distinct atoms exceed the truth-table limit of {MAX_TABLE_ATOMS}")]
    TooManyAtoms(usize),
}

/// Unfolds definitions and maps the core constants to [`Prop`]. Schematic
/// variables are read as atoms.
pub fn to_prop(f: &Formula, ctx: &TheoryContext) -> Result<Prop, ProverError> {
    core_prop(
        &ctx.unfold_all(&MetaProp::Judg(f.clone()))
            .conclusion()
            .clone(),
    )
}

fn core_prop(f: &Formula) -> Result<Prop, ProverError> {
    Ok(match f {
        Formula::Atom(a) | Formula::Schematic(a) => Prop::atom(a),
        Formula::App(h, args) => match (h.as_str(), args.as_slice()) {
            ("Falsity", []) => Prop::Bot,
            ("Imp", [a, b]) => Prop::imp(core_prop(a)?, core_prop(b)?),
            ("Dis", [a, b]) => Prop::or(core_prop(a)?, core_prop(b)?),
            ("Con", [a, b]) => Prop::and(core_prop(a)?, core_prop(b)?),
            _ => return Err(ProverError::UnknownConstant(h.clone())),
        },
    })
}

/// Reads `==>` as implication.
pub fn metaprop_to_prop(p: &MetaProp, ctx: &TheoryContext) -> Result<Prop, ProverError> {
    match p {
        MetaProp::Judg(f) => to_prop(f, ctx),
        MetaProp::MetaImp(a, b) => Ok(Prop::imp(
            metaprop_to_prop(a, ctx)?,
            metaprop_to_prop(b, ctx)?,
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub left: Vec<Prop>,
    pub right: Prop,
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self.left.iter().map(|p| p.to_string()).collect();
        if left.is_empty() {
            write!(f, "|- {}", self.right)
        } else {
            write!(f, "{} |- {}", left.join(", "), self.right)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Ax,
    LBot,
    RImp,
    RAnd,
    ROr1,
    ROr2,
    LAnd,
    LOr,
    LImpAtom,
    LImpAnd,
    LImpOr,
    LImpImp,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Ax => "Ax",
            Rule::LBot => "L-F",
            Rule::RImp => "R-->",
            Rule::RAnd => "R/\\",
            Rule::ROr1 => "R\\/1",
            Rule::ROr2 => "R\\/2",
            Rule::LAnd => "L/\\",
            Rule::LOr => "L\\/",
            Rule::LImpAtom => "L0-->",
            Rule::LImpAnd => "L/\\-->",
            Rule::LImpOr => "L\\/-->",
            Rule::LImpImp => "L-->-->",
        }
    }
}

/// A G4ip proof tree. Left rules record the index of their principal formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub rule: Rule,
    pub principal: Option<usize>,
    pub sequent: Sequent,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        out.push_str(&format!(
            "{}{}: {}\n",
            "  ".repeat(depth),
            self.rule.name(),
            self.sequent
        ));
        for p in &self.premises {
            p.render_into(depth + 1, out);
        }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// Re-validates every inference of the tree.
    pub fn replay(&self) -> Result<(), String> {
        if !valid_inference(self) {
            return Err(format!(
                "invalid {} step at {}",
                self.rule.name(),
                self.sequent
            ));
        }
        self.premises.iter().try_for_each(Derivation::replay)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Provable(Derivation),
    Unprovable,
}

impl Verdict {
    pub fn is_provable(&self) -> bool {
        matches!(self, Verdict::Provable(_))
    }
}

fn without(left: &[Prop], i: usize) -> Vec<Prop> {
    let mut v = left.to_vec();
    v.remove(i);
    v
}

fn with(mut left: Vec<Prop>, extra: impl IntoIterator<Item = Prop>) -> Vec<Prop> {
    left.extend(extra);
    left
}

fn same_multiset(a: &[Prop], b: &[Prop]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

// Checks a node against its children, independently of the search.
fn valid_inference(d: &Derivation) -> bool {
    let s = &d.sequent;
    let kids: Vec<&Sequent> = d.premises.iter().map(|p| &p.sequent).collect();
    let principal = d.principal.and_then(|i| s.left.get(i));
    let rest = d.principal.map(|i| {
        if i < s.left.len() {
            without(&s.left, i)
        } else {
            Vec::new()
        }
    });
    let premise = |k: usize, left: &[Prop], right: &Prop| {
        kids.len() > k && same_multiset(&kids[k].left, left) && &kids[k].right == right
    };
    match (d.rule, principal, rest) {
        (Rule::Ax, Some(p @ Prop::Atom(_)), _) => kids.is_empty() && p == &s.right,
        (Rule::LBot, Some(Prop::Bot), _) => kids.is_empty(),
        (Rule::RImp, None, _) => match &s.right {
            Prop::Imp(a, b) => {
                kids.len() == 1 && premise(0, &with(s.left.clone(), [(**a).clone()]), b)
            }
            _ => false,
        },
        (Rule::RAnd, None, _) => match &s.right {
            Prop::And(a, b) => kids.len() == 2 && premise(0, &s.left, a) && premise(1, &s.left, b),
            _ => false,
        },
        (Rule::ROr1 | Rule::ROr2, None, _) => match &s.right {
            Prop::Or(a, b) => {
                let chosen = if d.rule == Rule::ROr1 { a } else { b };
                kids.len() == 1 && premise(0, &s.left, chosen)
            }
            _ => false,
        },
        (Rule::LAnd, Some(Prop::And(a, b)), Some(rest)) => {
            kids.len() == 1 && premise(0, &with(rest, [(**a).clone(), (**b).clone()]), &s.right)
        }
        (Rule::LOr, Some(Prop::Or(a, b)), Some(rest)) => {
            kids.len() == 2
                && premise(0, &with(rest.clone(), [(**a).clone()]), &s.right)
                && premise(1, &with(rest, [(**b).clone()]), &s.right)
        }
        (Rule::LImpAtom, Some(Prop::Imp(a, b)), Some(rest)) => {
            matches!(**a, Prop::Atom(_))
                && rest.contains(a)
                && kids.len() == 1
                && premise(0, &with(rest, [(**b).clone()]), &s.right)
        }
        (Rule::LImpAnd, Some(Prop::Imp(a, b)), Some(rest)) => match &**a {
            Prop::And(c, e) => {
                let curried = Prop::imp((**c).clone(), Prop::imp((**e).clone(), (**b).clone()));
                kids.len() == 1 && premise(0, &with(rest, [curried]), &s.right)
            }
            _ => false,
        },
        (Rule::LImpOr, Some(Prop::Imp(a, b)), Some(rest)) => match &**a {
            Prop::Or(c, e) => {
                let split = [
                    Prop::imp((**c).clone(), (**b).clone()),
                    Prop::imp((**e).clone(), (**b).clone()),
                ];
                kids.len() == 1 && premise(0, &with(rest, split), &s.right)
            }
            _ => false,
        },
        (Rule::LImpImp, Some(Prop::Imp(a, b)), Some(rest)) => match &**a {
            Prop::Imp(_, e) => {
                kids.len() == 2
                    && premise(
                        0,
                        &with(rest.clone(), [Prop::imp((**e).clone(), (**b).clone())]),
                        a,
                    )
                    && premise(1, &with(rest, [(**b).clone()]), &s.right)
            }
            _ => false,
        },
        _ => false,
    }
}

fn node(
    rule: Rule,
    principal: Option<usize>,
    left: &[Prop],
    right: &Prop,
    premises: Vec<Derivation>,
) -> Derivation {
    Derivation {
        rule,
        principal,
        sequent: Sequent {
            left: left.to_vec(),
            right: right.clone(),
        },
        premises,
    }
}

/// Decides `left |- right` intuitionistically.
pub fn prove_sequent(left: &[Prop], right: &Prop) -> Option<Derivation> {
    // axioms
    if let Some(i) = left.iter().position(|p| p == &Prop::Bot) {
        return Some(node(Rule::LBot, Some(i), left, right, Vec::new()));
    }
    if let Prop::Atom(_) = right {
        if let Some(i) = left.iter().position(|p| p == right) {
            return Some(node(Rule::Ax, Some(i), left, right, Vec::new()));
        }
    }
    // invertible right rules
    match right {
        Prop::Imp(a, b) => {
            let d = prove_sequent(&with(left.to_vec(), [(**a).clone()]), b)?;
            return Some(node(Rule::RImp, None, left, right, vec![d]));
        }
        Prop::And(a, b) => {
            let d1 = prove_sequent(left, a)?;
            let d2 = prove_sequent(left, b)?;
            return Some(node(Rule::RAnd, None, left, right, vec![d1, d2]));
        }
        _ => {}
    }
    // invertible left rules, leftmost first
    for (i, p) in left.iter().enumerate() {
        let rest = || without(left, i);
        match p {
            Prop::And(a, b) => {
                let d = prove_sequent(&with(rest(), [(**a).clone(), (**b).clone()]), right)?;
                return Some(node(Rule::LAnd, Some(i), left, right, vec![d]));
            }
            Prop::Or(a, b) => {
                let d1 = prove_sequent(&with(rest(), [(**a).clone()]), right)?;
                let d2 = prove_sequent(&with(rest(), [(**b).clone()]), right)?;
                return Some(node(Rule::LOr, Some(i), left, right, vec![d1, d2]));
            }
            Prop::Imp(a, b) => match &**a {
                Prop::Atom(_) if left.iter().enumerate().any(|(j, q)| j != i && q == &**a) => {
                    let d = prove_sequent(&with(rest(), [(**b).clone()]), right)?;
                    return Some(node(Rule::LImpAtom, Some(i), left, right, vec![d]));
                }
                Prop::And(c, e) => {
                    let curried = Prop::imp((**c).clone(), Prop::imp((**e).clone(), (**b).clone()));
                    let d = prove_sequent(&with(rest(), [curried]), right)?;
                    return Some(node(Rule::LImpAnd, Some(i), left, right, vec![d]));
                }
                Prop::Or(c, e) => {
                    let split = [
                        Prop::imp((**c).clone(), (**b).clone()),
                        Prop::imp((**e).clone(), (**b).clone()),
                    ];
                    let d = prove_sequent(&with(rest(), split), right)?;
                    return Some(node(Rule::LImpOr, Some(i), left, right, vec![d]));
                }
                _ => {}
            },
            _ => {}
        }
    }
    // choice points
    for (i, p) in left.iter().enumerate() {
        if let Prop::Imp(a, b) = p {
            if let Prop::Imp(_, e) = &**a {
                let rest = without(left, i);
                let Some(d1) = prove_sequent(
                    &with(rest.clone(), [Prop::imp((**e).clone(), (**b).clone())]),
                    a,
                ) else {
                    continue;
                };
                if let Some(d2) = prove_sequent(&with(rest, [(**b).clone()]), right) {
                    return Some(node(Rule::LImpImp, Some(i), left, right, vec![d1, d2]));
                }
            }
        }
    }
    if let Prop::Or(a, b) = right {
        if let Some(d) = prove_sequent(left, a) {
            return Some(node(Rule::ROr1, None, left, right, vec![d]));
        }
        if let Some(d) = prove_sequent(left, b) {
            return Some(node(Rule::ROr2, None, left, right, vec![d]));
        }
    }
    None
}

pub fn decide(hyps: &[Prop], goal: &Prop) -> Verdict {
    match prove_sequent(hyps, goal) {
        Some(d) => Verdict::Provable(d),
        None => Verdict::Unprovable,
    }
}

/// G4ip on formulas of a theory, after unfolding definitions.
pub fn g4ip(hyps: &[Formula], goal: &Formula, ctx: &TheoryContext) -> Result<Verdict, ProverError> {
    let left = hyps
        .iter()
        .map(|h| to_prop(h, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(decide(&left, &to_prop(goal, ctx)?))
}

/// Atoms in order, then one row per valuation with the formula's value.
pub type Table = (Vec<Arc<str>>, Vec<(Vec<bool>, bool)>);

pub fn truth_table(p: &Prop) -> Result<Table, ProverError> {
    let atoms: Vec<Arc<str>> = p.atoms().into_iter().collect();
    if atoms.len() > MAX_TABLE_ATOMS {
        return Err(ProverError::TooManyAtoms(atoms.len()));
    }
    let n = atoms.len();
    let rows = (0..1u32 << n)
        .map(|mask| {
            // bit set means false, so the all-true row comes first
            let vals: Vec<bool> = (0..n).map(|i| mask & (1 << (n - 1 - i)) == 0).collect();
            let value = p.eval(&|a: &str| vals[atoms.iter().position(|x| &**x == a).unwrap()]);
            (vals, value)
        })
        .collect();
    Ok((atoms, rows))
}

pub fn tautology(p: &Prop) -> Result<bool, ProverError> {
    let atoms: Vec<Arc<str>> = p.atoms().into_iter().collect();
    if atoms.len() > MAX_TABLE_ATOMS {
        return Err(ProverError::TooManyAtoms(atoms.len()));
    }
    Ok((0..1u32 << atoms.len()).all(|mask| {
        p.eval(&|a: &str| mask & (1 << atoms.iter().position(|x| &**x == a).unwrap()) != 0)
    }))
}

/// Classical validity of a meta-proposition, reading `==>` as implication.
pub fn truth_table_valid(p: &MetaProp, ctx: &TheoryContext) -> Result<bool, ProverError> {
    tautology(&metaprop_to_prop(p, ctx)?)
}

/// Every formula over `atoms`, falsity and the three binary connectives with
/// at most `max_size` nodes, by increasing size.
pub fn enumerate_formulas(atoms: &[&str], max_size: usize) -> Vec<Prop> {
    let mut by_size: Vec<Vec<Prop>> = vec![Vec::new(); max_size + 1];
    if max_size >= 1 {
        by_size[1] = atoms
            .iter()
            .map(|a| Prop::atom(a))
            .chain([Prop::Bot])
            .collect();
    }
    for n in 3..=max_size {
        let mut level = Vec::new();
        for make in [Prop::imp as fn(Prop, Prop) -> Prop, Prop::or, Prop::and] {
            for k in 1..n - 1 {
                for a in &by_size[k] {
                    for b in &by_size[n - 1 - k] {
                        level.push(make(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size[n] = level;
    }
    by_size.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn p() -> Prop {
        Prop::atom("p")
    }
    fn q() -> Prop {
        Prop::atom("q")
    }

    fn provable(goal: &Prop) -> bool {
        match decide(&[], goal) {
            Verdict::Provable(d) => {
                d.replay().unwrap();
                true
            }
            Verdict::Unprovable => false,
        }
    }

    #[test]
    fn sample_verdicts() {
        let peirce = Prop::imp(Prop::imp(Prop::imp(p(), q()), p()), p());
        assert!(!provable(&peirce));
        assert!(tautology(&peirce).unwrap());
        assert!(provable(&Prop::imp(p(), p())));
        assert!(provable(&Prop::imp(Prop::Bot, Prop::atom("a"))));
        let lem = Prop::or(p(), Prop::negation(p()));
        assert!(!provable(&lem));
        assert!(provable(&Prop::negation(Prop::negation(lem.clone()))));
        assert!(tautology(&lem).unwrap());
        assert!(!tautology(&p()).unwrap());
    }

    #[test]
    fn hypotheses_are_used() {
        assert!(decide(&[Prop::imp(p(), q()), p()], &q()).is_provable());
        assert!(!decide(&[Prop::imp(p(), q())], &q()).is_provable());
    }

    #[test]
    fn derivations_render_as_trees() {
        let Verdict::Provable(d) = decide(&[], &Prop::imp(p(), p())) else {
            panic!()
        };
        assert_eq!(d.render(), "R-->: |- p --> p\n  Ax: p |- p\n");
    }

    #[test]
    fn tampered_derivation_fails_replay() {
        let Verdict::Provable(mut d) = decide(&[], &Prop::imp(p(), p())) else {
            panic!()
        };
        d.premises[0].sequent.left.clear();
        assert!(d.replay().is_err());
    }

    #[test]
    fn display_is_minimal_and_reparsable_shape() {
        let f = Prop::imp(
            Prop::imp(p(), q()),
            Prop::or(p(), Prop::and(q(), Prop::Bot)),
        );
        assert_eq!(f.to_string(), "(p --> q) --> p \\/ q /\\ F");
        assert_eq!(
            Prop::and(Prop::and(p(), q()), p()).to_string(),
            "(p /\\ q) /\\ p"
        );
    }

    #[test]
    fn truth_table_rows_start_with_true() {
        let (atoms, rows) = truth_table(&Prop::imp(Prop::and(p(), q()), p())).unwrap();
        assert_eq!(atoms.len(), 2);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].0, vec![true, true]);
        assert_eq!(rows[3].0, vec![false, false]);
        assert!(rows.iter().all(|r| r.1));
    }

    #[test]
    fn too_many_atoms_refused() {
        let big = (0..21)
            .map(|i| Prop::atom(&format!("a{i}")))
            .reduce(Prop::and)
            .unwrap();
        assert_eq!(tautology(&big), Err(ProverError::TooManyAtoms(21)));
    }

    // Counts well-formed prefix-notation strings of exact length n.
    fn brute_force_count(leaves: usize, n: usize) -> usize {
        fn well_formed(word: &[u8]) -> bool {
            let mut need = 1i32;
            for (i, &c) in word.iter().enumerate() {
                if need == 0 {
                    return false;
                }
                need += if c == 0 { 1 } else { -1 };
                if need == 0 && i + 1 != word.len() {
                    return false;
                }
            }
            need == 0
        }
        let symbols = 3 + leaves; // three binary operators then leaves
        let mut count = 0;
        let total = symbols.pow(n as u32);
        for mut code in 0..total {
            let mut word = Vec::with_capacity(n);
            for _ in 0..n {
                let s = code % symbols;
                code /= symbols;
                word.push(if s < 3 { 0 } else { 1 });
            }
            if well_formed(&word) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_counts_match_brute_force() {
        let one = enumerate_formulas(&["p"], 3);
        assert_eq!(one.len(), 14);
        assert_eq!(enumerate_formulas(&["p"], 1), vec![p(), Prop::Bot]);
        assert_eq!(enumerate_formulas(&["p"], 2).len(), 2);
        for (atoms, max) in [(vec!["p"], 5), (vec!["p", "q"], 5)] {
            let all = enumerate_formulas(&atoms, max);
            for n in 1..=max {
                let got = all.iter().filter(|f| f.size() == n).count();
                assert_eq!(got, brute_force_count(atoms.len() + 1, n), "size {n}");
            }
            let distinct: HashSet<&Prop> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    fn arb_prop() -> impl Strategy<Value = Prop> {
        let leaf = prop_oneof![Just(p()), Just(q()), Just(Prop::atom("r")), Just(Prop::Bot)];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Prop::imp(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Prop::and(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Prop::or(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn provable_implies_tautology(f in arb_prop()) {
            if let Verdict::Provable(d) = decide(&[], &f) {
                prop_assert!(d.replay().is_ok());
                prop_assert!(tautology(&f).unwrap());
            }
        }

        #[test]
        fn glivenko(f in arb_prop()) {
            prop_assert_eq!(tautology(&f).unwrap(), provable(&Prop::negation(Prop::negation(f))));
        }

        #[test]
        fn hypotheses_match_implication(a in arb_prop(), b in arb_prop()) {
            prop_assert_eq!(decide(std::slice::from_ref(&a), &b).is_provable(), provable(&Prop::imp(a, b)));
        }
    }
}
