//! Tokenizer for the outer (command) syntax of theory scripts.
//!
//! Formula text lives inside quoted strings and is tokenized separately
//! by the formula parser, against the current signature.

use std::fmt;

use crate::diag::{Diagnostic, Span};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Keyword {
    Axiomatization,
    Definition,
    Theorem,
    Proposition,
    Lemma,
    Where,
    And,
    Unfolding,
    Proof,
    Qed,
    Assume,
    Then,
    From,
    With,
    Have,
    Show,
    Next,
    By,
    This,
    Standard,
    Rule,
    Intro,
    Elim,
    Infixr,
    Infixl,
    Prefix,
}

impl Keyword {
    const ALL: &'static [(&'static str, Keyword)] = &[
        ("axiomatization", Keyword::Axiomatization),
        ("definition", Keyword::Definition),
        ("theorem", Keyword::Theorem),
        ("proposition", Keyword::Proposition),
        ("lemma", Keyword::Lemma),
        ("where", Keyword::Where),
        ("and", Keyword::And),
        ("unfolding", Keyword::Unfolding),
        ("proof", Keyword::Proof),
        ("qed", Keyword::Qed),
        ("assume", Keyword::Assume),
        ("then", Keyword::Then),
        ("from", Keyword::From),
        ("with", Keyword::With),
        ("have", Keyword::Have),
        ("show", Keyword::Show),
        ("next", Keyword::Next),
        ("by", Keyword::By),
        ("this", Keyword::This),
        ("standard", Keyword::Standard),
        ("rule", Keyword::Rule),
        ("intro", Keyword::Intro),
        ("elim", Keyword::Elim),
        ("infixr", Keyword::Infixr),
        ("infixl", Keyword::Infixl),
        ("prefix", Keyword::Prefix),
    ];

    pub fn from_word(w: &str) -> Option<Keyword> {
        Keyword::ALL.iter().find(|(s, _)| *s == w).map(|(_, k)| *k)
    }

    pub fn as_str(self) -> &'static str {
        Keyword::ALL
            .iter()
            .find(|(_, k)| *k == self)
            .map(|(s, _)| *s)
            .unwrap()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Punct {
    ColonColon,
    Colon,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    DotDot,
    Dash,
}

impl Punct {
    pub fn as_str(self) -> &'static str {
        match self {
            Punct::ColonColon => "::",
            Punct::Colon => ":",
            Punct::LParen => "(",
            Punct::RParen => ")",
            Punct::LBracket => "[",
            Punct::RBracket => "]",
            Punct::Comma => ",",
            Punct::Dot => ".",
            Punct::DotDot => "..",
            Punct::Dash => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Keyword(Keyword),
    /// `"..."` or a cartouche; holds inner-syntax text.
    Str(String),
    /// A backquoted literal fact reference.
    FactLit(String),
    Nat(u32),
    Punct(Punct),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::Keyword(k) => write!(f, "keyword `{}`", k.as_str()),
            Token::Str(s) => write!(f, "string \"{s}\""),
            Token::FactLit(s) => write!(f, "fact `{s}`"),
            Token::Nat(n) => write!(f, "number {n}"),
            Token::Punct(p) => write!(f, "`{}`", p.as_str()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lexeme {
    pub token: Token,
    pub span: Span,
    /// Byte offset where string or fact-literal content begins.
    pub content_start: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Lexeme>, Diagnostic> {
    Lexer { text, pos: 0 }.run()
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn run(mut self) -> Result<Vec<Lexeme>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia()?;
            let Some(c) = self.peek() else { return Ok(out) };
            let start = self.pos;
            let lexeme = if c.is_alphabetic() || c == '_' {
                let word = self.take_while(|c| c.is_alphanumeric() || c == '_' || c == '\'');
                let token = Keyword::from_word(word)
                    .map_or_else(|| Token::Ident(word.to_string()), Token::Keyword);
                Lexeme {
                    token,
                    span: Span::new(start, self.pos),
                    content_start: start,
                }
            } else if c.is_ascii_digit() {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n = digits.parse().map_err(|_| {
                    Diagnostic::new(Span::new(start, self.pos), "number literal is too large")
                })?;
                Lexeme {
                    token: Token::Nat(n),
                    span: Span::new(start, self.pos),
                    content_start: start,
                }
            } else if c == '"' {
                self.delimited(start, '"', '"', Token::Str, "string")?
            } else if c == '‹' {
                self.delimited(start, '‹', '›', Token::Str, "cartouche")?
            } else if c == '`' {
                self.delimited(start, '`', '`', Token::FactLit, "fact literal")?
            } else {
                let punct = [
                    Punct::ColonColon,
                    Punct::DotDot,
                    Punct::Colon,
                    Punct::LParen,
                    Punct::RParen,
                    Punct::LBracket,
                    Punct::RBracket,
                    Punct::Comma,
                    Punct::Dot,
                    Punct::Dash,
                ]
                .into_iter()
                .find(|p| self.rest().starts_with(p.as_str()))
                .ok_or_else(|| {
                    Diagnostic::new(
                        Span::new(start, start + c.len_utf8()),
                        format!("unexpected character `{c}`"),
                    )
                })?;
                self.pos += punct.as_str().len();
                Lexeme {
                    token: Token::Punct(punct),
                    span: Span::new(start, self.pos),
                    content_start: start,
                }
            };
            out.push(lexeme);
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn delimited(
        &mut self,
        start: usize,
        open: char,
        close: char,
        make: fn(String) -> Token,
        what: &str,
    ) -> Result<Lexeme, Diagnostic> {
        self.pos += open.len_utf8();
        let content_start = self.pos;
        match self.rest().find(close) {
            Some(len) => {
                let content = self.text[content_start..content_start + len].to_string();
                self.pos = content_start + len + close.len_utf8();
                Ok(Lexeme {
                    token: make(content),
                    span: Span::new(start, self.pos),
                    content_start,
                })
            }
            None => Err(Diagnostic::new(
                Span::new(start, self.text.len()),
                format!("unterminated {what}"),
            )),
        }
    }

    fn skip_trivia(&mut self) -> Result<(), Diagnostic> {
        loop {
            let before = self.pos;
            self.take_while(char::is_whitespace);
            if self.rest().starts_with("(*") {
                let start = self.pos;
                let mut depth = 0usize;
                loop {
                    if self.rest().starts_with("(*") {
                        depth += 1;
                        self.pos += 2;
                    } else if self.rest().starts_with("*)") {
                        depth -= 1;
                        self.pos += 2;
                        if depth == 0 {
                            break;
                        }
                    } else if let Some(c) = self.peek() {
                        self.pos += c.len_utf8();
                    } else {
                        return Err(Diagnostic::new(
                            Span::new(start, self.pos),
                            "unterminated comment",
                        ));
                    }
                }
            }
            if self.pos == before {
                return Ok(());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<Token> {
        tokenize(text)
            .unwrap()
            .into_iter()
            .map(|l| l.token)
            .collect()
    }

    #[test]
    fn outer_words_and_strings() {
        assert_eq!(
            kinds(r#"assume "p" and "q""#),
            vec![
                Token::Keyword(Keyword::Assume),
                Token::Str("p".into()),
                Token::Keyword(Keyword::And),
                Token::Str("q".into())
            ]
        );
    }

    #[test]
    fn comments_are_skipped_and_nest() {
        assert_eq!(kinds("(* note *) qed"), vec![Token::Keyword(Keyword::Qed)]);
        assert_eq!(
            kinds("(* a (* b *) c *)qed"),
            vec![Token::Keyword(Keyword::Qed)]
        );
    }

    #[test]
    fn punctuation_prefers_longest() {
        assert_eq!(
            kinds("Imp :: 2 .. . -"),
            vec![
                Token::Ident("Imp".into()),
                Token::Punct(Punct::ColonColon),
                Token::Nat(2),
                Token::Punct(Punct::DotDot),
                Token::Punct(Punct::Dot),
                Token::Punct(Punct::Dash)
            ]
        );
    }

    #[test]
    fn unterminated_things_report_spans() {
        let e = tokenize("show \"p").unwrap_err();
        assert_eq!(e.span, Span::new(5, 7));
        assert!(e.message.contains("unterminated string"));
        let e = tokenize("qed (* open").unwrap_err();
        assert!(e.message.contains("unterminated comment"));
        assert_eq!(e.span.start, 4);
    }

    #[test]
    fn string_content_offset() {
        let lx = tokenize("  ‹p --> q› `a`").unwrap();
        assert_eq!(lx[0].token, Token::Str("p --> q".into()));
        assert_eq!(lx[0].content_start, 2 + '‹'.len_utf8());
        assert_eq!(lx[1].token, Token::FactLit("a".into()));
    }

    #[test]
    fn stray_character_is_an_error() {
        assert!(tokenize("theorem ! x")
            .unwrap_err()
            .message
            .contains("unexpected character"));
    }
}
