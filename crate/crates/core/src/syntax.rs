//! Object formulas, meta-propositions, substitutions and the signature
//! of declared connectives.
//!
//! Nothing in here knows about proofs. The signature is a dynamic table:
//! every connective, including implication, enters it through a
//! declaration in a theory script.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

/// An object-level propositional formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// A fixed propositional variable.
    Atom(String),
    /// A rule variable, instantiable by any formula.
    Schematic(String),
    /// A declared connective applied to exactly `arity` arguments.
    App(String, Vec<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn app(head: &str, args: Vec<Formula>) -> Formula {
        Formula::App(head.to_string(), args)
    }

    pub fn constant(head: &str) -> Formula {
        Formula::App(head.to_string(), Vec::new())
    }

    /// Number of atom, schematic and connective nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Schematic(_) => 1,
            Formula::App(_, args) => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Schematic(_) => false,
            Formula::App(_, args) => args.iter().all(Formula::is_ground),
        }
    }

    pub fn mentions(&self, head: &str) -> bool {
        match self {
            Formula::App(h, args) => h == head || args.iter().any(|a| a.mentions(head)),
            _ => false,
        }
    }

    pub(crate) fn collect_vars(
        &self,
        atoms: &mut BTreeSet<String>,
        schematics: &mut BTreeSet<String>,
    ) {
        match self {
            Formula::Atom(x) => {
                atoms.insert(x.clone());
            }
            Formula::Schematic(x) => {
                schematics.insert(x.clone());
            }
            Formula::App(_, args) => args.iter().for_each(|a| a.collect_vars(atoms, schematics)),
        }
    }

    pub(crate) fn collect_heads(&self, out: &mut BTreeSet<String>) {
        if let Formula::App(h, args) = self {
            out.insert(h.clone());
            args.iter().for_each(|a| a.collect_heads(out));
        }
    }

    /// Rewrites every atom into the schematic of the same name.
    pub fn generalize(&self) -> Formula {
        match self {
            Formula::Atom(x) => Formula::Schematic(x.clone()),
            Formula::Schematic(_) => self.clone(),
            Formula::App(h, args) => {
                Formula::App(h.clone(), args.iter().map(Formula::generalize).collect())
            }
        }
    }

    /// Rewrites every schematic into the atom of the same name.
    pub fn fix(&self) -> Formula {
        match self {
            Formula::Schematic(x) => Formula::Atom(x.clone()),
            Formula::Atom(_) => self.clone(),
            Formula::App(h, args) => {
                Formula::App(h.clone(), args.iter().map(Formula::fix).collect())
            }
        }
    }
}

/// A meta-level proposition: a truth judgment or a meta-implication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaProp {
    Judg(Formula),
    MetaImp(Box<MetaProp>, Box<MetaProp>),
}

impl MetaProp {
    pub fn judg(f: Formula) -> MetaProp {
        MetaProp::Judg(f)
    }

    pub fn imp(premise: MetaProp, conclusion: MetaProp) -> MetaProp {
        MetaProp::MetaImp(Box::new(premise), Box::new(conclusion))
    }

    /// Folds `P1 ==> ... ==> Pn ==> concl` back together.
    pub fn from_parts(premises: Vec<MetaProp>, concl: Formula) -> MetaProp {
        premises
            .into_iter()
            .rev()
            .fold(MetaProp::Judg(concl), |acc, p| MetaProp::imp(p, acc))
    }

    /// Splits off the right-nested premises and the final judgment.
    pub fn premises_and_conclusion(&self) -> (Vec<MetaProp>, Formula) {
        let mut premises = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                MetaProp::Judg(f) => return (premises, f.clone()),
                MetaProp::MetaImp(p, c) => {
                    premises.push((**p).clone());
                    cur = c;
                }
            }
        }
    }

    pub fn conclusion(&self) -> &Formula {
        match self {
            MetaProp::Judg(f) => f,
            MetaProp::MetaImp(_, c) => c.conclusion(),
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            MetaProp::Judg(f) => f.is_ground(),
            MetaProp::MetaImp(p, c) => p.is_ground() && c.is_ground(),
        }
    }

    pub fn map_formulas(&self, f: &mut impl FnMut(&Formula) -> Formula) -> MetaProp {
        match self {
            MetaProp::Judg(x) => MetaProp::Judg(f(x)),
            MetaProp::MetaImp(p, c) => MetaProp::imp(p.map_formulas(f), c.map_formulas(f)),
        }
    }

    pub fn formulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(p: &'a MetaProp, out: &mut Vec<&'a Formula>) {
            match p {
                MetaProp::Judg(f) => out.push(f),
                MetaProp::MetaImp(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let (mut atoms, mut schematics) = (BTreeSet::new(), BTreeSet::new());
        for f in self.formulas() {
            f.collect_vars(&mut atoms, &mut schematics);
        }
        atoms
    }

    pub fn schematics(&self) -> BTreeSet<String> {
        let (mut atoms, mut schematics) = (BTreeSet::new(), BTreeSet::new());
        for f in self.formulas() {
            f.collect_vars(&mut atoms, &mut schematics);
        }
        schematics
    }

    pub fn heads(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            f.collect_heads(&mut out);
        }
        out
    }

    pub fn generalize(&self) -> MetaProp {
        self.map_formulas(&mut Formula::generalize)
    }

    pub fn fix(&self) -> MetaProp {
        self.map_formulas(&mut Formula::fix)
    }
}

/// A finite map from schematic names to formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<String, Formula>);

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.0.get(name)
    }

    pub fn insert(&mut self, name: impl Into<String>, f: Formula) -> Option<Formula> {
        self.0.insert(name.into(), f)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Formula)> {
        self.0.iter()
    }

    pub fn apply_formula(&self, f: &Formula) -> Formula {
        match f {
            Formula::Schematic(x) => self.0.get(x).cloned().unwrap_or_else(|| f.clone()),
            Formula::Atom(_) => f.clone(),
            Formula::App(h, args) => Formula::App(
                h.clone(),
                args.iter().map(|a| self.apply_formula(a)).collect(),
            ),
        }
    }

    pub fn apply(&self, p: &MetaProp) -> MetaProp {
        p.map_formulas(&mut |f| self.apply_formula(f))
    }
}

impl FromIterator<(String, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (String, Formula)>>(iter: I) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

pub fn apply_subst(s: &Substitution, p: &MetaProp) -> MetaProp {
    s.apply(p)
}

/// How a connective is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixity {
    Infixr(u8),
    Infixl(u8),
    Prefix(u8),
    Nullary,
}

impl Fixity {
    fn arity(self) -> usize {
        match self {
            Fixity::Infixr(_) | Fixity::Infixl(_) => 2,
            Fixity::Prefix(_) => 1,
            Fixity::Nullary => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mixfix {
    pub fixity: Fixity,
    pub symbol: String,
}

impl Mixfix {
    pub fn new(fixity: Fixity, symbol: &str) -> Mixfix {
        Mixfix {
            fixity,
            symbol: symbol.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstDecl {
    pub name: String,
    pub arity: usize,
    pub mixfix: Option<Mixfix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("constant `{0}` is already declared")]
    DuplicateConstant(String),
    #[error("notation `{0}` is already in use")]
    DuplicateSymbol(String),
    #[error("notation `{symbol}` needs arity {expected}, but `{name}` has arity {found}")]
    FixityArity {
        name: String,
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("constant name `{0}` must start with an uppercase letter")]
    BadConstantName(String),
    #[error("`{0}` is not a usable notation symbol")]
    BadSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrettyError {
    #[error("cannot print undeclared constant `{0}`")]
    Undeclared(String),
    #[error("constant `{name}` applied to {found} arguments, expected {expected}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
}

/// Reserved tokens of the inner syntax that no notation may claim.
pub(crate) const RESERVED_SYMBOLS: &[&str] = &["==>", "==", "(", ")", ","];

/// The table of declared constants together with their notation.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    consts: IndexMap<String, ConstDecl>,
    symbols: IndexMap<String, String>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn declare(&mut self, decl: ConstDecl) -> Result<(), SignatureError> {
        if !decl.name.chars().next().is_some_and(|c| c.is_uppercase()) {
            return Err(SignatureError::BadConstantName(decl.name));
        }
        if self.consts.contains_key(&decl.name) {
            return Err(SignatureError::DuplicateConstant(decl.name));
        }
        if let Some(mx) = &decl.mixfix {
            let sym = &mx.symbol;
            if sym.is_empty()
                || sym.chars().any(char::is_whitespace)
                || RESERVED_SYMBOLS.contains(&sym.as_str())
                || sym.chars().next().is_some_and(|c| c.is_lowercase())
            {
                return Err(SignatureError::BadSymbol(sym.clone()));
            }
            if self.symbols.contains_key(sym) || self.consts.contains_key(sym) {
                return Err(SignatureError::DuplicateSymbol(sym.clone()));
            }
            if mx.fixity.arity() != decl.arity {
                return Err(SignatureError::FixityArity {
                    name: decl.name,
                    symbol: sym.clone(),
                    expected: mx.fixity.arity(),
                    found: decl.arity,
                });
            }
        }
        if self.symbols.contains_key(&decl.name) {
            return Err(SignatureError::DuplicateSymbol(decl.name));
        }
        if let Some(mx) = &decl.mixfix {
            self.symbols.insert(mx.symbol.clone(), decl.name.clone());
        }
        self.consts.insert(decl.name.clone(), decl);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&ConstDecl> {
        self.consts.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.consts.contains_key(name)
    }

    /// The constant a notation symbol stands for.
    pub fn by_symbol(&self, symbol: &str) -> Option<&ConstDecl> {
        self.symbols.get(symbol).and_then(|n| self.consts.get(n))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.keys().map(String::as_str)
    }

    pub fn constants(&self) -> impl Iterator<Item = &ConstDecl> {
        self.consts.values()
    }

    pub fn pretty_formula(&self, f: &Formula) -> Result<String, PrettyError> {
        let mut out = String::new();
        self.fmt_formula(f, 0, None, &mut out)?;
        Ok(out)
    }

    /// Renders with declared notation and as few parentheses as re-parsing allows.
    pub fn pretty(&self, p: &MetaProp) -> Result<String, PrettyError> {
        let mut out = String::new();
        self.fmt_meta(p, &mut out)?;
        Ok(out)
    }

    fn fmt_meta(&self, p: &MetaProp, out: &mut String) -> Result<(), PrettyError> {
        match p {
            MetaProp::Judg(f) => self.fmt_formula(f, 0, None, out),
            MetaProp::MetaImp(prem, concl) => {
                if matches!(**prem, MetaProp::MetaImp(..)) {
                    out.push('(');
                    self.fmt_meta(prem, out)?;
                    out.push(')');
                } else {
                    self.fmt_meta(prem, out)?;
                }
                out.push_str(" ==> ");
                self.fmt_meta(concl, out)
            }
        }
    }

    fn binding(&self, f: &Formula) -> Option<Fixity> {
        match f {
            Formula::App(h, args) if !args.is_empty() => self
                .consts
                .get(h)
                .and_then(|d| d.mixfix.as_ref())
                .map(|m| m.fixity),
            _ => None,
        }
    }

    // `min` is the weakest binding accepted without parentheses; `followed` is the
    // precedence of the infix operator printed right after this subterm, if any.
    fn fmt_formula(
        &self,
        f: &Formula,
        min: u8,
        followed: Option<u8>,
        out: &mut String,
    ) -> Result<(), PrettyError> {
        let (head, args) = match f {
            Formula::Atom(x) | Formula::Schematic(x) => {
                out.push_str(x);
                return Ok(());
            }
            Formula::App(h, args) => (h, args),
        };
        let decl = self
            .consts
            .get(head)
            .ok_or_else(|| PrettyError::Undeclared(head.clone()))?;
        if decl.arity != args.len() {
            return Err(PrettyError::Arity {
                name: head.clone(),
                expected: decl.arity,
                found: args.len(),
            });
        }
        let Some(mx) = &decl.mixfix else {
            out.push_str(head);
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    self.fmt_formula(a, 0, None, out)?;
                }
                out.push(')');
            }
            return Ok(());
        };
        match mx.fixity {
            Fixity::Nullary => out.push_str(&mx.symbol),
            Fixity::Prefix(prec) => {
                let paren = prec < min || followed.is_some_and(|q| q >= prec);
                if paren {
                    out.push('(');
                }
                out.push_str(&mx.symbol);
                if needs_space(&mx.symbol, &args[0], self) {
                    out.push(' ');
                }
                self.fmt_formula(&args[0], prec, if paren { None } else { followed }, out)?;
                if paren {
                    out.push(')');
                }
            }
            Fixity::Infixr(prec) | Fixity::Infixl(prec) => {
                let paren = prec < min;
                let outer_follow = if paren { None } else { followed };
                if paren {
                    out.push('(');
                }
                let (l, r) = (&args[0], &args[1]);
                let left_paren = match self.binding(l) {
                    Some(Fixity::Infixr(q)) => q <= prec,
                    Some(Fixity::Infixl(q)) => {
                        q < prec || (q == prec && !matches!(mx.fixity, Fixity::Infixl(_)))
                    }
                    _ => false,
                };
                self.fmt_child(l, left_paren, Some(prec), out)?;
                out.push(' ');
                out.push_str(&mx.symbol);
                out.push(' ');
                let right_paren = match self.binding(r) {
                    Some(Fixity::Infixr(q)) => {
                        q < prec || (q == prec && !matches!(mx.fixity, Fixity::Infixr(_)))
                    }
                    Some(Fixity::Infixl(q)) => q <= prec,
                    _ => false,
                };
                self.fmt_child(
                    r,
                    right_paren,
                    if right_paren { None } else { outer_follow },
                    out,
                )?;
                if paren {
                    out.push(')');
                }
            }
        }
        Ok(())
    }

    fn fmt_child(
        &self,
        f: &Formula,
        paren: bool,
        followed: Option<u8>,
        out: &mut String,
    ) -> Result<(), PrettyError> {
        if paren {
            out.push('(');
            self.fmt_formula(f, 0, None, out)?;
            out.push(')');
            Ok(())
        } else {
            self.fmt_formula(f, 0, followed, out)
        }
    }
}

// A prefix symbol made of letters must be separated from an identifier argument.
fn needs_space(symbol: &str, arg: &Formula, sig: &Signature) -> bool {
    let sym_word = symbol
        .chars()
        .last()
        .is_some_and(|c| c.is_alphanumeric() || c == '_');
    if !sym_word {
        return false;
    }
    match arg {
        Formula::Atom(_) | Formula::Schematic(_) => true,
        Formula::App(h, _) => match sig.consts.get(h).and_then(|d| d.mixfix.as_ref()) {
            Some(mx) => mx
                .symbol
                .chars()
                .next()
                .is_some_and(|c| c.is_alphanumeric() || c == '_'),
            None => true,
        },
    }
}

impl fmt::Display for Formula {
    /// Signature-free fallback rendering, used in debug output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(x) => write!(f, "{x}"),
            Formula::Schematic(x) => write!(f, "?{x}"),
            Formula::App(h, args) if args.is_empty() => write!(f, "{h}"),
            Formula::App(h, args) => {
                write!(f, "{h}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for MetaProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetaProp::Judg(x) => write!(f, "{x}"),
            MetaProp::MetaImp(p, c) if matches!(**p, MetaProp::MetaImp(..)) => {
                write!(f, "({p}) ==> {c}")
            }
            MetaProp::MetaImp(p, c) => write!(f, "{p} ==> {c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        let mut s = Signature::new();
        s.declare(ConstDecl {
            name: "Imp".into(),
            arity: 2,
            mixfix: Some(Mixfix::new(Fixity::Infixr(3), "-->")),
        })
        .unwrap();
        s.declare(ConstDecl {
            name: "Falsity".into(),
            arity: 0,
            mixfix: Some(Mixfix::new(Fixity::Nullary, "F")),
        })
        .unwrap();
        s
    }

    fn imp(a: Formula, b: Formula) -> Formula {
        Formula::app("Imp", vec![a, b])
    }

    fn a(x: &str) -> Formula {
        Formula::atom(x)
    }

    fn sch(x: &str) -> Formula {
        Formula::Schematic(x.into())
    }

    #[test]
    fn premises_of_bare_judgment() {
        assert_eq!(
            MetaProp::judg(a("a")).premises_and_conclusion(),
            (vec![], a("a"))
        );
    }

    #[test]
    fn premises_of_one_step() {
        let p = MetaProp::imp(MetaProp::judg(a("p")), MetaProp::judg(a("q")));
        assert_eq!(
            p.premises_and_conclusion(),
            (vec![MetaProp::judg(a("p"))], a("q"))
        );
    }

    #[test]
    fn premises_of_modus_ponens() {
        let mp = MetaProp::from_parts(
            vec![
                MetaProp::judg(imp(sch("p"), sch("q"))),
                MetaProp::judg(sch("p")),
            ],
            sch("q"),
        );
        let (prems, concl) = mp.premises_and_conclusion();
        assert_eq!(
            prems,
            vec![
                MetaProp::judg(imp(sch("p"), sch("q"))),
                MetaProp::judg(sch("p"))
            ]
        );
        assert_eq!(concl, sch("q"));
    }

    #[test]
    fn subst_instantiates_imp_intro_for_truth() {
        let imp_i = MetaProp::imp(
            MetaProp::imp(MetaProp::judg(sch("p")), MetaProp::judg(sch("q"))),
            MetaProp::judg(imp(sch("p"), sch("q"))),
        );
        let bot = Formula::constant("Falsity");
        let s: Substitution = [
            ("p".to_string(), bot.clone()),
            ("q".to_string(), bot.clone()),
        ]
        .into_iter()
        .collect();
        let expected = MetaProp::imp(
            MetaProp::imp(MetaProp::judg(bot.clone()), MetaProp::judg(bot.clone())),
            MetaProp::judg(imp(bot.clone(), bot)),
        );
        assert_eq!(s.apply(&imp_i), expected);
        assert_eq!(
            sig().pretty(&s.apply(&imp_i)).unwrap(),
            "(F ==> F) ==> F --> F"
        );
        assert_eq!(Substitution::new().apply(&imp_i), imp_i);
    }

    #[test]
    fn pretty_right_nesting_needs_no_parens() {
        let s = sig();
        let f = imp(a("a"), imp(a("b"), a("c")));
        assert_eq!(s.pretty(&MetaProp::judg(f)).unwrap(), "a --> b --> c");
        let g = imp(imp(a("a"), a("b")), a("c"));
        assert_eq!(s.pretty(&MetaProp::judg(g)).unwrap(), "(a --> b) --> c");
    }

    #[test]
    fn pretty_rejects_undeclared() {
        let f = Formula::app("Dis", vec![a("a"), a("b")]);
        assert_eq!(
            sig().pretty_formula(&f),
            Err(PrettyError::Undeclared("Dis".into()))
        );
    }

    #[test]
    fn declare_rejects_duplicates_and_bad_arity() {
        let mut s = sig();
        let dup = ConstDecl {
            name: "Imp".into(),
            arity: 2,
            mixfix: None,
        };
        assert!(matches!(
            s.declare(dup),
            Err(SignatureError::DuplicateConstant(_))
        ));
        let sym = ConstDecl {
            name: "Imp2".into(),
            arity: 2,
            mixfix: Some(Mixfix::new(Fixity::Infixr(3), "-->")),
        };
        assert!(matches!(
            s.declare(sym),
            Err(SignatureError::DuplicateSymbol(_))
        ));
        let bad = ConstDecl {
            name: "Neg".into(),
            arity: 2,
            mixfix: Some(Mixfix::new(Fixity::Prefix(6), "~")),
        };
        assert!(matches!(
            s.declare(bad),
            Err(SignatureError::FixityArity { .. })
        ));
    }

    #[test]
    fn generalize_then_fix_is_identity_on_ground() {
        let p = MetaProp::imp(MetaProp::judg(a("p")), MetaProp::judg(imp(a("p"), a("q"))));
        let g = p.generalize();
        assert!(!g.is_ground());
        assert_eq!(g.fix(), p);
    }
}
