//! Source spans and rendered diagnostics.

use std::fmt;

/// Byte range `[start, end)` into a source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn point(at: usize) -> Span {
        Span { start: at, end: at }
    }

    pub fn to(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T> Spanned<T> {
    pub fn new(node: T, span: Span) -> Spanned<T> {
        Spanned { node, span }
    }
}

/// A named source text with a line index.
#[derive(Clone, Debug)]
pub struct SourceFile {
    pub name: String,
    pub text: String,
    line_starts: Vec<usize>,
}

impl SourceFile {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> SourceFile {
        let text = text.into();
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        SourceFile {
            name: name.into(),
            text,
            line_starts,
        }
    }

    /// 1-based line and column (in characters) of a byte offset.
    pub fn line_col(&self, offset: usize) -> (usize, usize) {
        let offset = offset.min(self.text.len());
        let line = match self.line_starts.binary_search(&offset) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let start = self.line_starts[line];
        let col = self.text[start..offset].chars().count();
        (line + 1, col + 1)
    }
}

/// An error tied to a source location, optionally with the proof context at
/// the point of failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub span: Span,
    pub message: String,
    pub goal: Option<String>,
    pub chained: Vec<String>,
}

impl Diagnostic {
    pub fn new(span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            span,
            message: message.into(),
            goal: None,
            chained: Vec::new(),
        }
    }

    pub fn with_goal(mut self, goal: String, chained: Vec<String>) -> Diagnostic {
        self.goal = Some(goal);
        self.chained = chained;
        self
    }

    /// `FILE:LINE:COL: error: MESSAGE`, followed by `goal:` and `chained:`
    /// lines when a goal was open.
    pub fn render(&self, file: &SourceFile) -> String {
        let (line, col) = file.line_col(self.span.start);
        let mut out = format!("{}:{}:{}: error: {}", file.name, line, col, self.message);
        if let Some(goal) = &self.goal {
            out.push_str("\n  goal: ");
            out.push_str(goal);
            out.push_str("\n  chained: ");
            if self.chained.is_empty() {
                out.push_str("(none)");
            } else {
                out.push_str(&self.chained.join("; "));
            }
        }
        out
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}..{}: {}",
            self.span.start, self.span.end, self.message
        )
    }
}

impl std::error::Error for Diagnostic {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_col_counts_from_one() {
        let f = SourceFile::new("t.pnd", "ab\ncd\n\nx");
        assert_eq!(f.line_col(0), (1, 1));
        assert_eq!(f.line_col(1), (1, 2));
        assert_eq!(f.line_col(3), (2, 1));
        assert_eq!(f.line_col(7), (4, 1));
    }

    #[test]
    fn render_with_goal() {
        let f = SourceFile::new("t.pnd", "qed");
        let d = Diagnostic::new(Span::new(0, 3), "open goal").with_goal("p".into(), vec![]);
        assert_eq!(
            d.render(&f),
            "t.pnd:1:1: error: open goal\n  goal: p\n  chained: (none)"
        );
    }
}
