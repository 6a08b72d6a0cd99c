//! Minimal s-expression reader and printer.
//!
//! Every file format of the workbench (formulas, bases, ground terms,
//! designs, cut-nets, behaviours, sequents) is a sequence of
//! s-expressions. Atoms are runs of non-space characters other than
//! parentheses and `;`; a `;` starts a comment running to the end of the
//! line. Double-quoted atoms may contain spaces and parentheses.

use std::fmt;

use thiserror::Error;

/// Line/column position (both 1-based) of the first character of a node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug)]
pub enum Sexp {
    Atom(String, Pos),
    List(Vec<Sexp>, Pos),
}

/// A syntax or shape error in some text input, with its position.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

impl Sexp {
    pub fn atom(s: impl Into<String>) -> Sexp {
        Sexp::Atom(s.into(), Pos::default())
    }

    pub fn list(items: Vec<Sexp>) -> Sexp {
        Sexp::List(items, Pos::default())
    }

    /// Builds `(head items...)`.
    pub fn tagged(head: &str, items: impl IntoIterator<Item = Sexp>) -> Sexp {
        let mut v = vec![Sexp::atom(head)];
        v.extend(items);
        Sexp::list(v)
    }

    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p) => *p,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            Sexp::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(v, _) => Some(v),
            Sexp::Atom(..) => None,
        }
    }

    pub fn expect_atom(&self, what: &str) -> ParseResult<&str> {
        self.as_atom()
            .ok_or_else(|| ParseError::new(self.pos(), format!("expected {what}, found a list")))
    }

    pub fn expect_list(&self, what: &str) -> ParseResult<&[Sexp]> {
        self.as_list()
            .ok_or_else(|| ParseError::new(self.pos(), format!("expected {what}, found an atom")))
    }

    /// For `(head args...)` returns `(head, args)`.
    pub fn head(&self) -> Option<(&str, &[Sexp])> {
        let items = self.as_list()?;
        let (first, rest) = items.split_first()?;
        Some((first.as_atom()?, rest))
    }

    pub fn expect_head(&self, what: &str) -> ParseResult<(&str, &[Sexp])> {
        self.head()
            .ok_or_else(|| ParseError::new(self.pos(), format!("expected {what}")))
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos(), message)
    }
}

/// Structural equality, ignoring positions.
impl PartialEq for Sexp {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Sexp::Atom(a, _), Sexp::Atom(b, _)) => a == b,
            (Sexp::List(a, _), Sexp::List(b, _)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Sexp {}

fn needs_quotes(s: &str) -> bool {
    s.is_empty() || s.chars().any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ';' | '"'))
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(s, _) if needs_quotes(s) => write!(f, "\"{}\"", s.replace('"', "\\\"")),
            Sexp::Atom(s, _) => f.write_str(s),
            Sexp::List(items, _) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Renders with line breaks so that no line grows much past `width`.
pub fn pretty(sexp: &Sexp, width: usize) -> String {
    let mut out = String::new();
    pretty_into(sexp, width, 0, &mut out);
    out
}

fn pretty_into(sexp: &Sexp, width: usize, indent: usize, out: &mut String) {
    let flat = sexp.to_string();
    let items = match sexp {
        Sexp::List(items, _) if indent + flat.chars().count() > width && items.len() > 2 => items,
        _ => {
            out.push_str(&flat);
            return;
        }
    };
    out.push('(');
    // Keep the head and its first argument on the opening line.
    let mut head_len = 0;
    for item in &items[..2] {
        if head_len > 0 {
            out.push(' ');
        }
        let s = item.to_string();
        head_len += s.chars().count() + 1;
        out.push_str(&s);
    }
    let child_indent = indent + 2;
    for item in &items[2..] {
        out.push('\n');
        out.push_str(&" ".repeat(child_indent));
        pretty_into(item, width, child_indent, out);
    }
    out.push(')');
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Reader<'_> {
    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> ParseResult<Option<Sexp>> {
        self.skip_trivia();
        let start = self.pos();
        let Some(&c) = self.chars.peek() else {
            return Ok(None);
        };
        match c {
            '(' => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(ParseError::new(start, "unclosed parenthesis")),
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Sexp::List(items, start)));
                        }
                        Some(_) => {
                            if let Some(item) = self.read()? {
                                items.push(item);
                            }
                        }
                    }
                }
            }
            ')' => Err(ParseError::new(start, "unexpected `)`")),
            '"' => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(ParseError::new(start, "unterminated string")),
                        Some('"') => return Ok(Some(Sexp::Atom(s, start))),
                        Some('\\') => match self.bump() {
                            Some(c) => s.push(c),
                            None => return Err(ParseError::new(start, "unterminated string")),
                        },
                        Some(c) => s.push(c),
                    }
                }
            }
            _ => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | ';' | '"') {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(Some(Sexp::Atom(s, start)))
            }
        }
    }
}

/// Reads every top-level s-expression in `src`.
pub fn parse_all(src: &str) -> ParseResult<Vec<Sexp>> {
    let mut reader = Reader { chars: src.chars().peekable(), line: 1, column: 1 };
    let mut out = Vec::new();
    while let Some(s) = reader.read()? {
        out.push(s);
    }
    Ok(out)
}

/// Reads exactly one s-expression.
pub fn parse_one(src: &str) -> ParseResult<Sexp> {
    let mut all = parse_all(src)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(ParseError::new(Pos { line: 1, column: 1 }, "empty input")),
        _ => Err(ParseError::new(all[1].pos(), "expected a single s-expression")),
    }
}

/// Checks the argument count of a `(head args...)` form.
pub fn arity(form: &Sexp, head: &str, args: &[Sexp], n: usize) -> ParseResult<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(form.error(format!("`{head}` takes {n} argument(s), found {}", args.len())))
    }
}

pub fn parse_u32(s: &Sexp) -> ParseResult<u32> {
    let a = s.expect_atom("a natural number")?;
    a.parse().map_err(|_| s.error(format!("`{a}` is not a natural number")))
}
