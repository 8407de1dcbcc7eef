//! Theory scripts: axiomatizations, definitions and goals with their
//! structured proofs.

use crate::diag::{Diagnostic, Span, Spanned};
use crate::lexer::{tokenize, Keyword, Lexeme, Punct, Token};
use crate::parser::inner::{parse_equation_at, parse_metaprop_at};
use crate::syntax::{ConstDecl, Fixity, Formula, MetaProp, Mixfix, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attr {
    Intro,
    Elim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoalKind {
    Theorem,
    Proposition,
    Lemma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomRule {
    pub name: Spanned<String>,
    pub attrs: Vec<Attr>,
    pub statement: Spanned<MetaProp>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiomatization {
    pub decls: Vec<Spanned<ConstDecl>>,
    pub rules: Vec<AxiomRule>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionItem {
    pub decl: Spanned<ConstDecl>,
    pub lhs: Formula,
    pub rhs: Formula,
    pub equation_span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoalItem {
    pub kind: GoalKind,
    pub name: Option<Spanned<String>>,
    pub attrs: Vec<Attr>,
    pub statement: Spanned<MetaProp>,
    pub proof: Vec<ProofStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItemKind {
    Axiomatization(Axiomatization),
    Definition(DefinitionItem),
    Goal(GoalItem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub kind: ItemKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodKind {
    This,
    Standard,
    Rule(String),
}

/// How a method was written, which decides how it can be rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodStyle {
    /// `.`
    Dot,
    /// `..`
    DotDot,
    /// `this`, `standard` or `(rule NAME)` spelled out.
    Written,
    /// The method implied by a bare `proof`.
    Implicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Method {
    pub kind: MethodKind,
    pub style: MethodStyle,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactRef {
    Name(String),
    This,
    Literal(MetaProp),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    Unfolding(Vec<Spanned<String>>),
    /// `proof -` carries no method.
    ProofOpen(Option<Method>),
    Terminal(Method),
    Assume(Vec<Spanned<MetaProp>>),
    Then,
    From(Vec<Spanned<FactRef>>),
    With(Vec<Spanned<FactRef>>),
    Have {
        label: Option<String>,
        statement: Spanned<MetaProp>,
        body: Vec<ProofStep>,
    },
    Show {
        statement: Spanned<MetaProp>,
        body: Vec<ProofStep>,
    },
    Next,
    Qed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub kind: StepKind,
    pub span: Span,
}

/// Parses a whole script. Declarations extend a private copy of `sig` as
/// they are read, so later statements may use the new notation.
pub fn parse_script(text: &str, sig: &Signature) -> Result<Vec<Item>, Diagnostic> {
    let toks = tokenize(text)?;
    let mut p = ScriptParser {
        toks,
        pos: 0,
        sig: sig.clone(),
        text_len: text.len(),
    };
    let mut items = Vec::new();
    while p.peek().is_some() {
        items.push(p.item()?);
    }
    Ok(items)
}

struct ScriptParser {
    toks: Vec<Lexeme>,
    pos: usize,
    sig: Signature,
    text_len: usize,
}

impl ScriptParser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|l| &l.token)
    }

    fn peek_at(&self, n: usize) -> Option<&Token> {
        self.toks.get(self.pos + n).map(|l| &l.token)
    }

    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map_or(Span::point(self.text_len), |l| l.span)
    }

    fn prev_span(&self) -> Span {
        self.toks[self.pos - 1].span
    }

    fn error<T>(&self, expected: &str) -> Result<T, Diagnostic> {
        let found = self
            .peek()
            .map_or_else(|| "end of file".to_string(), |t| t.to_string());
        Err(Diagnostic::new(
            self.span(),
            format!("expected {expected}, found {found}"),
        ))
    }

    fn eat_kw(&mut self, kw: Keyword) -> bool {
        if self.peek() == Some(&Token::Keyword(kw)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_punct(&mut self, p: Punct) -> bool {
        if self.peek() == Some(&Token::Punct(p)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_kw(&mut self, kw: Keyword) -> Result<(), Diagnostic> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            self.error(&format!("`{}`", kw.as_str()))
        }
    }

    fn expect_punct(&mut self, p: Punct) -> Result<(), Diagnostic> {
        if self.eat_punct(p) {
            Ok(())
        } else {
            self.error(&format!("`{}`", p.as_str()))
        }
    }

    fn name(&mut self) -> Result<Spanned<String>, Diagnostic> {
        match self.peek() {
            Some(Token::Ident(n)) => {
                let n = Spanned::new(n.clone(), self.span());
                self.pos += 1;
                Ok(n)
            }
            _ => self.error("a name"),
        }
    }

    fn nat(&mut self) -> Result<u32, Diagnostic> {
        match self.peek() {
            Some(Token::Nat(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.error("a number"),
        }
    }

    fn precedence(&mut self) -> Result<u8, Diagnostic> {
        let span = self.span();
        let n = self.nat()?;
        u8::try_from(n).map_err(|_| Diagnostic::new(span, "precedence must be at most 255"))
    }

    /// Returns the raw string and the offset of its content.
    fn string(&mut self) -> Result<(String, usize, Span), Diagnostic> {
        match self.peek() {
            Some(Token::Str(s)) => {
                let l = &self.toks[self.pos];
                let out = (s.clone(), l.content_start, l.span);
                self.pos += 1;
                Ok(out)
            }
            _ => self.error("a quoted statement"),
        }
    }

    fn metaprop(&mut self) -> Result<Spanned<MetaProp>, Diagnostic> {
        let (s, base, span) = self.string()?;
        Ok(Spanned::new(parse_metaprop_at(&s, base, &self.sig)?, span))
    }

    fn attrs(&mut self) -> Result<Vec<Attr>, Diagnostic> {
        let mut attrs = Vec::new();
        if !self.eat_punct(Punct::LBracket) {
            return Ok(attrs);
        }
        loop {
            if self.eat_kw(Keyword::Intro) {
                attrs.push(Attr::Intro);
            } else if self.eat_kw(Keyword::Elim) {
                attrs.push(Attr::Elim);
            } else {
                return self.error("`intro` or `elim`");
            }
            if !self.eat_punct(Punct::Comma) {
                break;
            }
        }
        self.expect_punct(Punct::RBracket)?;
        Ok(attrs)
    }

    fn item(&mut self) -> Result<Item, Diagnostic> {
        let start = self.span();
        let kind = match self.peek() {
            Some(Token::Keyword(Keyword::Axiomatization)) => {
                self.pos += 1;
                ItemKind::Axiomatization(self.axiomatization()?)
            }
            Some(Token::Keyword(Keyword::Definition)) => {
                self.pos += 1;
                ItemKind::Definition(self.definition()?)
            }
            Some(Token::Keyword(
                k @ (Keyword::Theorem | Keyword::Proposition | Keyword::Lemma),
            )) => {
                let kind = match k {
                    Keyword::Theorem => GoalKind::Theorem,
                    Keyword::Proposition => GoalKind::Proposition,
                    _ => GoalKind::Lemma,
                };
                self.pos += 1;
                ItemKind::Goal(self.goal(kind)?)
            }
            _ => {
                return self
                    .error("`axiomatization`, `definition`, `theorem`, `proposition` or `lemma`")
            }
        };
        Ok(Item {
            kind,
            span: start.to(self.prev_span()),
        })
    }

    fn decl(&mut self) -> Result<Spanned<ConstDecl>, Diagnostic> {
        let name = self.name()?;
        self.expect_punct(Punct::ColonColon)?;
        let arity = self.nat()? as usize;
        let mut mixfix = None;
        if self.eat_punct(Punct::LParen) {
            let fixity = if self.eat_kw(Keyword::Infixr) {
                Some(Fixity::Infixr as fn(u8) -> Fixity)
            } else if self.eat_kw(Keyword::Infixl) {
                Some(Fixity::Infixl as fn(u8) -> Fixity)
            } else if self.eat_kw(Keyword::Prefix) {
                Some(Fixity::Prefix as fn(u8) -> Fixity)
            } else {
                None
            };
            let (symbol, _, _) = self.string()?;
            let fixity = match fixity {
                Some(make) => make(self.precedence()?),
                None => Fixity::Nullary,
            };
            self.expect_punct(Punct::RParen)?;
            mixfix = Some(Mixfix {
                fixity,
                symbol: symbol.trim().to_string(),
            });
        }
        let span = name.span.to(self.prev_span());
        let decl = ConstDecl {
            name: name.node,
            arity,
            mixfix,
        };
        self.sig
            .declare(decl.clone())
            .map_err(|e| Diagnostic::new(span, e.to_string()))?;
        Ok(Spanned::new(decl, span))
    }

    fn axiomatization(&mut self) -> Result<Axiomatization, Diagnostic> {
        let mut decls = Vec::new();
        if matches!(self.peek(), Some(Token::Ident(_))) {
            decls.push(self.decl()?);
            while self.eat_kw(Keyword::And) {
                decls.push(self.decl()?);
            }
        }
        let mut rules = Vec::new();
        if self.eat_kw(Keyword::Where) {
            loop {
                let name = self.name()?;
                let attrs = self.attrs()?;
                self.expect_punct(Punct::Colon)?;
                let statement = self.metaprop()?;
                rules.push(AxiomRule {
                    name,
                    attrs,
                    statement,
                });
                if !self.eat_kw(Keyword::And) {
                    break;
                }
            }
        }
        if decls.is_empty() && rules.is_empty() {
            return self.error("a constant declaration or `where`");
        }
        Ok(Axiomatization { decls, rules })
    }

    fn definition(&mut self) -> Result<DefinitionItem, Diagnostic> {
        let decl = self.decl()?;
        self.expect_kw(Keyword::Where)?;
        let (s, base, span) = self.string()?;
        let (lhs, rhs) = parse_equation_at(&s, base, &self.sig)?;
        Ok(DefinitionItem {
            decl,
            lhs,
            rhs,
            equation_span: span,
        })
    }

    fn goal(&mut self, kind: GoalKind) -> Result<GoalItem, Diagnostic> {
        let name = if matches!(self.peek(), Some(Token::Ident(_))) {
            Some(self.name()?)
        } else {
            None
        };
        let attrs = self.attrs()?;
        if name.is_some() || !attrs.is_empty() {
            self.expect_punct(Punct::Colon)?;
        } else {
            self.eat_punct(Punct::Colon);
        }
        let statement = self.metaprop()?;
        let proof = self.body()?;
        Ok(GoalItem {
            kind,
            name,
            attrs,
            statement,
            proof,
        })
    }

    fn method(&mut self) -> Result<Method, Diagnostic> {
        let start = self.span();
        let kind = if self.eat_kw(Keyword::This) {
            MethodKind::This
        } else if self.eat_kw(Keyword::Standard) {
            MethodKind::Standard
        } else if self.eat_punct(Punct::LParen) {
            self.expect_kw(Keyword::Rule)?;
            let name = self.name()?;
            self.expect_punct(Punct::RParen)?;
            MethodKind::Rule(name.node)
        } else {
            return self.error("a proof method (`this`, `standard` or `(rule NAME)`)");
        };
        Ok(Method {
            kind,
            style: MethodStyle::Written,
            span: start.to(self.prev_span()),
        })
    }

    fn starts_method(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Keyword(Keyword::This | Keyword::Standard))
        ) || (self.peek() == Some(&Token::Punct(Punct::LParen))
            && self.peek_at(1) == Some(&Token::Keyword(Keyword::Rule)))
    }

    fn body(&mut self) -> Result<Vec<ProofStep>, Diagnostic> {
        let mut steps = Vec::new();
        let start = self.span();
        if self.eat_kw(Keyword::Unfolding) {
            let mut names = vec![self.name()?];
            while matches!(self.peek(), Some(Token::Ident(_))) {
                names.push(self.name()?);
            }
            steps.push(ProofStep {
                kind: StepKind::Unfolding(names),
                span: start.to(self.prev_span()),
            });
        }
        let start = self.span();
        if self.eat_punct(Punct::Dot) {
            let method = Method {
                kind: MethodKind::This,
                style: MethodStyle::Dot,
                span: start,
            };
            steps.push(ProofStep {
                kind: StepKind::Terminal(method),
                span: start,
            });
        } else if self.eat_punct(Punct::DotDot) {
            let method = Method {
                kind: MethodKind::Standard,
                style: MethodStyle::DotDot,
                span: start,
            };
            steps.push(ProofStep {
                kind: StepKind::Terminal(method),
                span: start,
            });
        } else if self.eat_kw(Keyword::By) {
            let method = self.method()?;
            steps.push(ProofStep {
                kind: StepKind::Terminal(method),
                span: start.to(self.prev_span()),
            });
        } else if self.eat_kw(Keyword::Proof) {
            let method = if self.eat_punct(Punct::Dash) {
                None
            } else if self.starts_method() {
                Some(self.method()?)
            } else {
                let at = Span::point(start.end);
                Some(Method {
                    kind: MethodKind::Standard,
                    style: MethodStyle::Implicit,
                    span: at,
                })
            };
            steps.push(ProofStep {
                kind: StepKind::ProofOpen(method),
                span: start.to(self.prev_span()),
            });
            loop {
                let start = self.span();
                if self.eat_kw(Keyword::Qed) {
                    steps.push(ProofStep {
                        kind: StepKind::Qed,
                        span: start,
                    });
                    break;
                }
                self.step(&mut steps)?;
            }
        } else {
            return self.error("a proof (`.`, `..`, `by`, or `proof`)");
        }
        Ok(steps)
    }

    fn fact_refs(&mut self) -> Result<Vec<Spanned<FactRef>>, Diagnostic> {
        let mut refs = Vec::new();
        loop {
            let span = self.span();
            let fact = match self.peek().cloned() {
                Some(Token::Ident(n)) => {
                    self.pos += 1;
                    FactRef::Name(n)
                }
                Some(Token::Keyword(Keyword::This)) => {
                    self.pos += 1;
                    FactRef::This
                }
                Some(Token::Str(s)) | Some(Token::FactLit(s)) => {
                    let base = self.toks[self.pos].content_start;
                    self.pos += 1;
                    FactRef::Literal(parse_metaprop_at(&s, base, &self.sig)?)
                }
                _ if refs.is_empty() => return self.error("a fact reference"),
                _ => break,
            };
            refs.push(Spanned::new(fact, span));
            self.eat_kw(Keyword::And);
        }
        Ok(refs)
    }

    fn step(&mut self, steps: &mut Vec<ProofStep>) -> Result<(), Diagnostic> {
        let start = self.span();
        let kind = match self.peek() {
            Some(Token::Keyword(Keyword::Assume)) => {
                self.pos += 1;
                let mut props = vec![self.metaprop()?];
                while self.eat_kw(Keyword::And) {
                    props.push(self.metaprop()?);
                }
                StepKind::Assume(props)
            }
            Some(Token::Keyword(Keyword::Next)) => {
                self.pos += 1;
                StepKind::Next
            }
            Some(Token::Keyword(Keyword::Then | Keyword::From | Keyword::With)) => {
                let kind = match self.peek() {
                    Some(Token::Keyword(Keyword::Then)) => {
                        self.pos += 1;
                        StepKind::Then
                    }
                    Some(Token::Keyword(Keyword::From)) => {
                        self.pos += 1;
                        StepKind::From(self.fact_refs()?)
                    }
                    _ => {
                        self.pos += 1;
                        StepKind::With(self.fact_refs()?)
                    }
                };
                steps.push(ProofStep {
                    kind,
                    span: start.to(self.prev_span()),
                });
                if !matches!(
                    self.peek(),
                    Some(Token::Keyword(Keyword::Have | Keyword::Show))
                ) {
                    return self.error("`have` or `show` after a chaining command");
                }
                return self.step(steps);
            }
            Some(Token::Keyword(Keyword::Have)) => {
                self.pos += 1;
                let label = if matches!(self.peek(), Some(Token::Ident(_)))
                    && self.peek_at(1) == Some(&Token::Punct(Punct::Colon))
                {
                    let n = self.name()?;
                    self.pos += 1;
                    Some(n.node)
                } else {
                    None
                };
                let statement = self.metaprop()?;
                let body = self.body()?;
                StepKind::Have {
                    label,
                    statement,
                    body,
                }
            }
            Some(Token::Keyword(Keyword::Show)) => {
                self.pos += 1;
                let statement = self.metaprop()?;
                let body = self.body()?;
                StepKind::Show { statement, body }
            }
            _ => return self.error("a proof command or `qed`"),
        };
        // Have/Show spans cover only the command head and statement.
        let span = match &kind {
            StepKind::Have { statement, .. } | StepKind::Show { statement, .. } => {
                start.to(statement.span)
            }
            _ => start.to(self.prev_span()),
        };
        steps.push(ProofStep { kind, span });
        Ok(())
    }
}
