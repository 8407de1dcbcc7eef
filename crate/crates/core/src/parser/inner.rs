//! Precedence-climbing parser for formulas and meta-propositions.
//!
//! The operator table is whatever the signature currently declares, so
//! notation introduced by a script is usable by the very next statement.

use crate::diag::{Diagnostic, Span};
use crate::syntax::{Fixity, Formula, MetaProp, Signature, RESERVED_SYMBOLS};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Sym(String),
    MetaImp,
    DefEq,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Sym(s) => format!("`{s}`"),
            Tok::MetaImp => "`==>`".into(),
            Tok::DefEq => "`==`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

const ALIASES: &[(char, &str)] = &[
    ('⟶', "-->"),
    ('→', "-->"),
    ('∨', "\\/"),
    ('∧', "/\\"),
    ('¬', "~"),
    ('↔', "<->"),
    ('⟷', "<->"),
    ('⊥', "F"),
    ('⊤', "T"),
    ('⟹', "==>"),
    ('≡', "=="),
];

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn classify(text: &str, sig: &Signature) -> Tok {
    match text {
        "==>" => Tok::MetaImp,
        "==" => Tok::DefEq,
        "(" => Tok::LParen,
        ")" => Tok::RParen,
        "," => Tok::Comma,
        _ if sig.by_symbol(text).is_some() => Tok::Sym(text.to_string()),
        _ => Tok::Ident(text.to_string()),
    }
}

fn lex(text: &str, base: usize, sig: &Signature) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let mut out = Vec::new();
    let mut pos = 0;
    let symbols: Vec<&str> = sig
        .symbols()
        .filter(|s| !s.chars().next().is_some_and(is_word_char))
        .chain(RESERVED_SYMBOLS.iter().copied())
        .collect();
    while let Some(c) = text[pos..].chars().next() {
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        let start = pos;
        let tok_text: &str = if is_word_char(c) {
            let len = text[pos..]
                .find(|c: char| !is_word_char(c))
                .unwrap_or(text.len() - pos);
            pos += len;
            &text[start..pos]
        } else if let Some((_, alias)) = ALIASES.iter().find(|(a, _)| *a == c) {
            pos += c.len_utf8();
            alias
        } else {
            let best = symbols
                .iter()
                .filter(|s| text[pos..].starts_with(**s))
                .max_by_key(|s| s.len());
            match best {
                Some(s) => {
                    pos += s.len();
                    s
                }
                None => {
                    let span = Span::new(base + start, base + start + c.len_utf8());
                    return Err(Diagnostic::new(span, format!("unknown symbol `{c}`")));
                }
            }
        };
        let tok = classify(tok_text, sig);
        if let Tok::Sym(s) | Tok::Ident(s) = &tok {
            if !is_word_char(s.chars().next().unwrap()) && sig.by_symbol(s).is_none() {
                let span = Span::new(base + start, base + pos);
                return Err(Diagnostic::new(span, format!("unknown symbol `{s}`")));
            }
        }
        out.push((tok, Span::new(base + start, base + pos)));
    }
    Ok(out)
}

struct Parser<'s> {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    sig: &'s Signature,
    end: Span,
}

impl<'s> Parser<'s> {
    fn new(text: &str, base: usize, sig: &'s Signature) -> Result<Parser<'s>, Diagnostic> {
        Ok(Parser {
            toks: lex(text, base, sig)?,
            pos: 0,
            sig,
            end: Span::point(base + text.len()),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map_or(self.end, |(_, s)| *s)
    }

    fn prev_span(&self) -> Span {
        self.pos
            .checked_sub(1)
            .and_then(|i| self.toks.get(i))
            .map_or(self.end, |(_, s)| *s)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), Diagnostic> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(Diagnostic::new(
                self.span(),
                format!("expected {}, found {}", tok.describe(), t.describe()),
            )),
            None => Err(Diagnostic::new(
                self.end,
                format!("expected {}, found end of formula", tok.describe()),
            )),
        }
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Sym(s)) if self.sig.by_symbol(s).is_some_and(|d| d.arity != 2) => {
                Err(Diagnostic::new(
                    self.span(),
                    format!("`{s}` cannot follow a complete formula"),
                ))
            }
            Some(t) => Err(Diagnostic::new(
                self.span(),
                format!("unexpected {}", t.describe()),
            )),
        }
    }

    fn infix(&self) -> Option<(String, Fixity)> {
        match self.peek() {
            Some(Tok::Sym(s)) => {
                let d = self.sig.by_symbol(s)?;
                let fx = d.mixfix.as_ref()?.fixity;
                matches!(fx, Fixity::Infixr(_) | Fixity::Infixl(_)).then(|| (d.name.clone(), fx))
            }
            _ => None,
        }
    }

    fn expr(&mut self, min: u8) -> Result<Formula, Diagnostic> {
        let mut lhs = self.prefix()?;
        while let Some((name, fx)) = self.infix() {
            let (prec, next_min) = match fx {
                Fixity::Infixr(p) => (p, p),
                Fixity::Infixl(p) => (p, p.saturating_add(1)),
                _ => unreachable!(),
            };
            if prec < min {
                break;
            }
            self.pos += 1;
            let rhs = self.expr(next_min)?;
            lhs = Formula::App(name, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Formula, Diagnostic> {
        let span = self.span();
        let Some(tok) = self.peek().cloned() else {
            let msg = if self.pos == 0 {
                "empty formula"
            } else {
                "dangling operator: formula ends here"
            };
            return Err(Diagnostic::new(self.prev_span().to(span), msg));
        };
        match tok {
            Tok::Sym(s) => {
                let d = self
                    .sig
                    .by_symbol(&s)
                    .expect("lexer only emits declared symbols")
                    .clone();
                self.pos += 1;
                match d.mixfix.as_ref().map(|m| m.fixity) {
                    Some(Fixity::Nullary) => Ok(Formula::App(d.name, vec![])),
                    Some(Fixity::Prefix(p)) => {
                        let arg = self.expr(p)?;
                        Ok(Formula::App(d.name, vec![arg]))
                    }
                    _ => Err(Diagnostic::new(
                        span,
                        format!("dangling operator `{s}`: missing left operand"),
                    )),
                }
            }
            Tok::Ident(x) => {
                self.pos += 1;
                let first = x.chars().next().unwrap();
                if first.is_lowercase() {
                    return Ok(Formula::Atom(x));
                }
                let Some(d) = self.sig.get(&x) else {
                    return Err(Diagnostic::new(span, format!("unknown constant `{x}`")));
                };
                let arity = d.arity;
                let mut args = Vec::new();
                if self.peek() == Some(&Tok::LParen) && arity > 0 {
                    self.pos += 1;
                    loop {
                        args.push(self.expr(0)?);
                        if self.peek() == Some(&Tok::Comma) {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::RParen)?;
                }
                if args.len() != arity {
                    return Err(Diagnostic::new(
                        span.to(self.prev_span()),
                        format!("`{x}` expects {arity} argument(s), found {}", args.len()),
                    ));
                }
                Ok(Formula::App(x, args))
            }
            Tok::LParen => {
                self.pos += 1;
                let f = self.expr(0)?;
                if self.peek() == Some(&Tok::MetaImp) {
                    return Err(Diagnostic::new(
                        self.span(),
                        "`==>` cannot appear inside an object formula",
                    ));
                }
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            t => Err(Diagnostic::new(
                span,
                format!("expected a formula, found {}", t.describe()),
            )),
        }
    }

    // True when the parenthesised group starting here holds a top-level `==>`.
    fn group_is_meta(&self) -> bool {
        let mut depth = 0usize;
        for (t, _) in &self.toks[self.pos..] {
            match t {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                Tok::MetaImp if depth == 1 => return true,
                _ => {}
            }
        }
        false
    }

    fn meta(&mut self) -> Result<MetaProp, Diagnostic> {
        if self.peek() == Some(&Tok::LParen) && self.group_is_meta() {
            self.pos += 1;
            let inner = self.meta()?;
            self.expect(Tok::RParen)?;
            return match self.peek() {
                Some(Tok::MetaImp) => {
                    self.pos += 1;
                    Ok(MetaProp::imp(inner, self.meta()?))
                }
                None | Some(Tok::RParen) => Ok(inner),
                Some(t) => Err(Diagnostic::new(
                    self.span(),
                    format!(
                        "a meta-level group cannot be an operand of {}",
                        t.describe()
                    ),
                )),
            };
        }
        let f = self.expr(0)?;
        if self.peek() == Some(&Tok::MetaImp) {
            self.pos += 1;
            Ok(MetaProp::imp(MetaProp::Judg(f), self.meta()?))
        } else {
            Ok(MetaProp::Judg(f))
        }
    }
}

/// Parses an object formula; spans are offset by `base`.
pub fn parse_formula_at(text: &str, base: usize, sig: &Signature) -> Result<Formula, Diagnostic> {
    let mut p = Parser::new(text, base, sig)?;
    let f = p.expr(0)?;
    if p.peek() == Some(&Tok::MetaImp) {
        return Err(Diagnostic::new(
            p.span(),
            "expected an object formula, found `==>`",
        ));
    }
    p.finish()?;
    Ok(f)
}

pub fn parse_metaprop_at(text: &str, base: usize, sig: &Signature) -> Result<MetaProp, Diagnostic> {
    let mut p = Parser::new(text, base, sig)?;
    let m = p.meta()?;
    p.finish()?;
    Ok(m)
}

pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, Diagnostic> {
    parse_formula_at(text, 0, sig)
}

pub fn parse_metaprop(text: &str, sig: &Signature) -> Result<MetaProp, Diagnostic> {
    parse_metaprop_at(text, 0, sig)
}

/// Parses `lhs == rhs` as used by definitions.
pub fn parse_equation_at(
    text: &str,
    base: usize,
    sig: &Signature,
) -> Result<(Formula, Formula), Diagnostic> {
    let mut p = Parser::new(text, base, sig)?;
    let lhs = p.expr(0)?;
    p.expect(Tok::DefEq)?;
    let rhs = p.expr(0)?;
    p.finish()?;
    Ok((lhs, rhs))
}
