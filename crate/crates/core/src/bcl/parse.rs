//! Concrete syntax for formulas.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*          left associative
//! imp     := or ("->" imp)?            right associative
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | "[" atoms "]" unary | "<" atoms ">" unary | prim
//! prim    := IDENT | "t(1)" | "t(0)" | "t(?)" | "true" | "false" | "(" formula ")"
//! atoms   := [ IDENT ("," IDENT)* ]
//! ```
//!
//! The printer emits every binary connective in parentheses and re-sugars
//! the abbreviations, so `parse(print(f)) == f` on core formulas.

use std::fmt;

use thiserror::Error;

use crate::bcl::formula::Formula;
use crate::signature::{AtomSet, Outcome, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
    UnknownAtom(String),
    MalformedOutcome,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
            ParseErrorKind::UnknownAtom(name) => write!(f, "unknown atom `{name}`"),
            ParseErrorKind::MalformedOutcome => {
                f.write_str("malformed outcome atom, expected t(1), t(0) or t(?)")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Decision(Outcome),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Lt,
    Gt,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Decision(x) => write!(f, "t({x})"),
            Tok::Not => f.write_str("~"),
            Tok::And => f.write_str("&"),
            Tok::Or => f.write_str("|"),
            Tok::Implies => f.write_str("->"),
            Tok::Iff => f.write_str("<->"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::LBracket => f.write_str("["),
            Tok::RBracket => f.write_str("]"),
            Tok::Lt => f.write_str("<"),
            Tok::Gt => f.write_str(">"),
            Tok::Comma => f.write_str(","),
        }
    }
}

fn err(column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { column, kind }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let at = |j: usize| chars.get(j).copied();
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, width) = match c {
            '~' => (Tok::Not, 1),
            '&' => (Tok::And, 1),
            '|' => (Tok::Or, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '[' => (Tok::LBracket, 1),
            ']' => (Tok::RBracket, 1),
            ',' => (Tok::Comma, 1),
            '>' => (Tok::Gt, 1),
            '-' if at(i + 1) == Some('>') => (Tok::Implies, 2),
            '<' if at(i + 1) == Some('-') && at(i + 2) == Some('>') => (Tok::Iff, 3),
            '<' => (Tok::Lt, 1),
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                let mut end = i;
                while end < chars.len() && (chars[end].is_alphanumeric() || chars[end] == '_') {
                    end += 1;
                }
                let word: String = chars[start..end].iter().collect();
                if word == "t" && at(end) == Some('(') {
                    let value = at(end + 1).and_then(Outcome::from_symbol);
                    match (value, at(end + 2)) {
                        (Some(x), Some(')')) => (Tok::Decision(x), end + 3 - start),
                        _ => return Err(err(col, ParseErrorKind::MalformedOutcome)),
                    }
                } else {
                    let width = end - start;
                    (Tok::Ident(word), width)
                }
            }
            other => return Err(err(col, ParseErrorKind::UnexpectedChar(other))),
        };
        toks.push((col, tok));
        i += width;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_column: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_column)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(t) => err(
                self.column(),
                ParseErrorKind::UnexpectedToken {
                    found: t.to_string(),
                    expected,
                },
            ),
            None => err(self.column(), ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.imp()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat(&Tok::LBracket) {
            let w = self.atoms(Tok::RBracket, "`]` or an atom")?;
            return Ok(Formula::boxed(w, self.unary()?));
        }
        if self.eat(&Tok::Lt) {
            let w = self.atoms(Tok::Gt, "`>` or an atom")?;
            return Ok(Formula::diamond(w, self.unary()?));
        }
        self.prim()
    }

    fn atoms(&mut self, close: Tok, expected: &'static str) -> Result<AtomSet, ParseError> {
        let mut set = AtomSet::EMPTY;
        if self.eat(&close) {
            return Ok(set);
        }
        loop {
            set = set.with(self.atom_name()?);
            if self.eat(&close) {
                return Ok(set);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.unexpected(expected));
            }
        }
    }

    fn atom_name(&mut self) -> Result<usize, ParseError> {
        let column = self.column();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.sig
                    .lookup(&name)
                    .ok_or_else(|| err(column, ParseErrorKind::UnknownAtom(name)))
            }
            _ => Err(self.unexpected("an atom")),
        }
    }

    fn prim(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Decision(x)) => {
                self.pos += 1;
                Ok(Formula::t(x))
            }
            Some(Tok::Ident(word)) if word == "true" => {
                self.pos += 1;
                Ok(Formula::top())
            }
            Some(Tok::Ident(word)) if word == "false" => {
                self.pos += 1;
                Ok(Formula::bottom())
            }
            Some(Tok::Ident(_)) => self.atom_name().map(Formula::atom),
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.iff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
        sig,
    };
    let f = parser.iff()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(f)
}

fn implication_parts(f: &Formula) -> Option<(&Formula, &Formula)> {
    if let Formula::Not(inner) = f {
        if let Formula::And(a, b) = inner.as_ref() {
            if let Formula::Not(b) = b.as_ref() {
                return Some((a, b));
            }
        }
    }
    None
}

fn disjunction_parts(f: &Formula) -> Option<(&Formula, &Formula)> {
    let (a, b) = implication_parts(f)?;
    match a {
        Formula::Not(a) => Some((a, b)),
        _ => None,
    }
}

fn equivalence_parts(f: &Formula) -> Option<(&Formula, &Formula)> {
    if let Formula::And(x, y) = f {
        let (a, b) = implication_parts(x)?;
        let (b2, a2) = implication_parts(y)?;
        if a == a2 && b == b2 {
            return Some((a, b));
        }
    }
    None
}

fn write_atoms(out: &mut String, sig: &Signature, w: AtomSet) {
    out.push_str(&sig.names_of(w).join(","));
}

fn write_formula(out: &mut String, sig: &Signature, f: &Formula) {
    if f.is_top() {
        out.push_str("true");
        return;
    }
    if let Formula::Not(inner) = f {
        if inner.is_top() {
            out.push_str("false");
            return;
        }
    }
    if let Some((a, b)) = disjunction_parts(f) {
        out.push('(');
        write_formula(out, sig, a);
        out.push_str(" | ");
        write_formula(out, sig, b);
        out.push(')');
        return;
    }
    if let Some((a, b)) = implication_parts(f) {
        out.push('(');
        write_formula(out, sig, a);
        out.push_str(" -> ");
        write_formula(out, sig, b);
        out.push(')');
        return;
    }
    if let Some((a, b)) = equivalence_parts(f) {
        out.push('(');
        write_formula(out, sig, a);
        out.push_str(" <-> ");
        write_formula(out, sig, b);
        out.push(')');
        return;
    }
    match f {
        Formula::Atom(i) => out.push_str(sig.name(*i)),
        Formula::Decision(x) => {
            out.push_str("t(");
            out.push(x.symbol());
            out.push(')');
        }
        Formula::Not(inner) => {
            if let Formula::Modal(w, body) = inner.as_ref() {
                if let Formula::Not(body) = body.as_ref() {
                    out.push('<');
                    write_atoms(out, sig, *w);
                    out.push('>');
                    write_formula(out, sig, body);
                    return;
                }
            }
            out.push('~');
            write_formula(out, sig, inner);
        }
        Formula::Modal(w, body) => {
            out.push('[');
            write_atoms(out, sig, *w);
            out.push(']');
            write_formula(out, sig, body);
        }
        Formula::And(..) => {
            let mut parts = Vec::new();
            let mut cur = f;
            while let Formula::And(a, b) = cur {
                parts.push(b.as_ref());
                if equivalence_parts(a).is_some() || a.is_top() {
                    cur = a;
                    break;
                }
                cur = a;
            }
            parts.push(cur);
            parts.reverse();
            out.push('(');
            for (i, part) in parts.into_iter().enumerate() {
                if i > 0 {
                    out.push_str(" & ");
                }
                write_formula(out, sig, part);
            }
            out.push(')');
        }
    }
}

pub fn print_formula(f: &Formula, sig: &Signature) -> String {
    let mut out = String::new();
    write_formula(&mut out, sig, f);
    out
}
