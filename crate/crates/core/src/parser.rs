//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! iff     := imp ( "<->" iff )?
//! imp     := or ( "->" imp )?
//! or      := and ( "|" and )*
//! and     := unary ( "&" unary )*
//! unary   := "!" unary | postfix
//! postfix := primary "^"*
//! primary := ATOM | "(" iff ")"
//! ATOM    := [A-Za-z_][A-Za-z0-9_-]*
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use crate::error::ParseError;
use crate::formula::{expand_circ, Formula};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    Circ,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("atom `{name}`"),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Circ => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

fn tokenize(text: &str) -> Result<(Vec<(Tok, Pos)>, Pos), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let (mut line, mut column) = (1, 1);
    let err = |line, column, msg: String| ParseError::new(msg, line, column);

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        let mut advance = 1;
        match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '!' => toks.push((Tok::Not, pos)),
            '&' => toks.push((Tok::And, pos)),
            '|' => toks.push((Tok::Or, pos)),
            '^' => toks.push((Tok::Circ, pos)),
            '(' => toks.push((Tok::LParen, pos)),
            ')' => toks.push((Tok::RParen, pos)),
            '-' if chars.get(i + 1) == Some(&'>') => {
                toks.push((Tok::Implies, pos));
                advance = 2;
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                toks.push((Tok::Iff, pos));
                advance = 3;
            }
            c if is_ident_start(c) => {
                let start = i;
                let mut j = i + 1;
                // a `-` directly followed by `>` is an arrow, not part of the name
                while j < chars.len() && is_ident_char(chars[j]) {
                    if chars[j] == '-' && chars.get(j + 1) == Some(&'>') {
                        break;
                    }
                    j += 1;
                }
                let name: String = chars[start..j].iter().collect();
                toks.push((Tok::Ident(name), pos));
                advance = j - i;
            }
            other => return Err(err(line, column, format!("unexpected character `{other}`"))),
        }
        i += advance;
        column += advance;
    }
    Ok((toks, Pos { line, column }))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    idx: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        let pos = self.pos();
        let found = match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".to_string(),
        };
        ParseError::new(format!("expected {expected}, found {found}"), pos.line, pos.column)
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let left = self.imp()?;
        if self.eat(&Tok::Iff) {
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        if self.eat(&Tok::Implies) {
            let right = self.imp()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        let mut f = self.primary()?;
        while self.eat(&Tok::Circ) {
            f = expand_circ(&f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                Ok(Formula::Atom(name))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error("an atom, `!` or `(`")),
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Formula, ParseError> {
    let (toks, end) = tokenize(text)?;
    let mut parser = Parser { toks, idx: 0, end };
    let f = parser.iff()?;
    if parser.idx < parser.toks.len() {
        return Err(parser.error("end of input"));
    }
    Ok(f)
}
