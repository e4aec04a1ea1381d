// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Modal formulas over the core basis `false`, `->` and `[]`.
//!
//! The other connectives are concrete syntax only: the parser desugars them
//! and the printer puts them back where the core tree has the right shape.
//!
//! Precedence, tightest first: `~ [] <>`, `&`, `|`, `->` (right
//! associative), `<->` (left associative).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(u32),
    Bot,
    Imp(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Formula {
        Formula::Var(i)
    }

    pub fn bot() -> Formula {
        Formula::Bot
    }

    pub fn top() -> Formula {
        Formula::imp(Formula::Bot, Formula::Bot)
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn nec(a: Formula) -> Formula {
        Formula::Box(Box::new(a))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::imp(a, Formula::not(b)))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::imp(Formula::not(a), b)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn diamond(a: Formula) -> Formula {
        Formula::not(Formula::nec(Formula::not(a)))
    }

    /// Indices of the variables occurring in the formula, ascending.
    pub fn variables(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Var(i) => {
                out.insert(*i);
            }
            Formula::Bot => {}
            Formula::Imp(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
            Formula::Box(a) => a.collect_variables(out),
        }
    }

    /// Number of nodes in the core tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot => 1,
            Formula::Imp(a, b) => 1 + a.size() + b.size(),
            Formula::Box(a) => 1 + a.size(),
        }
    }

    /// Maximum nesting of `[]`.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot => 0,
            Formula::Imp(a, b) => a.modal_depth().max(b.modal_depth()),
            Formula::Box(a) => 1 + a.modal_depth(),
        }
    }

    /// Simultaneous uniform substitution. Variables missing from `sigma`
    /// are left in place.
    pub fn substitute(&self, sigma: &BTreeMap<u32, Formula>) -> Formula {
        match self {
            Formula::Var(i) => sigma.get(i).cloned().unwrap_or(Formula::Var(*i)),
            Formula::Bot => Formula::Bot,
            Formula::Imp(a, b) => Formula::imp(a.substitute(sigma), b.substitute(sigma)),
            Formula::Box(a) => Formula::nec(a.substitute(sigma)),
        }
    }
}

pub fn substitute(f: &Formula, sigma: &BTreeMap<u32, Formula>) -> Formula {
    f.substitute(sigma)
}

// Printing.

const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;

/// The concrete shape a core node is printed as.
enum Shape<'a> {
    Atom(String),
    Not(&'a Formula),
    Box(&'a Formula),
    Diamond(&'a Formula),
    And(&'a Formula, &'a Formula),
    Or(&'a Formula, &'a Formula),
    Imp(&'a Formula, &'a Formula),
    Iff(&'a Formula, &'a Formula),
}

fn negated(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Imp(a, b) if **b == Formula::Bot => Some(a),
        _ => None,
    }
}

fn shape(f: &Formula) -> Shape<'_> {
    match f {
        Formula::Var(i) => Shape::Atom(format!("p{i}")),
        Formula::Bot => Shape::Atom("false".into()),
        Formula::Box(a) => Shape::Box(a),
        Formula::Imp(a, b) => {
            if **a == Formula::Bot && **b == Formula::Bot {
                return Shape::Atom("true".into());
            }
            if let Some(inner) = negated(f) {
                // a & b  ==  ~(a -> ~b)
                if let Formula::Imp(x, y) = inner {
                    if let Some(y) = negated(y) {
                        // a <-> b  ==  (a -> b) & (b -> a)
                        if let (Formula::Imp(p, q), Formula::Imp(r, s)) = (&**x, y) {
                            if p == s && q == r {
                                return Shape::Iff(p, q);
                            }
                        }
                        return Shape::And(x, y);
                    }
                }
                // <>a  ==  ~[]~a
                if let Formula::Box(boxed) = inner {
                    if let Some(a) = negated(boxed) {
                        return Shape::Diamond(a);
                    }
                }
                return Shape::Not(inner);
            }
            // a | b  ==  ~a -> b, when the left side prints as a plain negation
            if let Shape::Not(x) = shape(a) {
                return Shape::Or(x, b);
            }
            Shape::Imp(a, b)
        }
    }
}

fn precedence(s: &Shape<'_>) -> u8 {
    match s {
        Shape::Atom(_) | Shape::Not(_) | Shape::Box(_) | Shape::Diamond(_) => PREC_UNARY,
        Shape::And(..) => PREC_AND,
        Shape::Or(..) => PREC_OR,
        Shape::Imp(..) => PREC_IMP,
        Shape::Iff(..) => PREC_IFF,
    }
}

fn write_at(out: &mut String, f: &Formula, min: u8) {
    let s = shape(f);
    let paren = precedence(&s) < min;
    if paren {
        out.push('(');
    }
    match s {
        Shape::Atom(text) => out.push_str(&text),
        Shape::Not(a) => {
            out.push('~');
            write_at(out, a, PREC_UNARY);
        }
        Shape::Box(a) => {
            out.push_str("[]");
            write_at(out, a, PREC_UNARY);
        }
        Shape::Diamond(a) => {
            out.push_str("<>");
            write_at(out, a, PREC_UNARY);
        }
        Shape::And(a, b) => {
            write_at(out, a, PREC_AND);
            out.push_str(" & ");
            write_at(out, b, PREC_UNARY);
        }
        Shape::Or(a, b) => {
            write_at(out, a, PREC_OR);
            out.push_str(" | ");
            write_at(out, b, PREC_AND);
        }
        Shape::Imp(a, b) => {
            write_at(out, a, PREC_OR);
            out.push_str(" -> ");
            write_at(out, b, PREC_IMP);
        }
        Shape::Iff(a, b) => {
            write_at(out, a, PREC_IFF);
            out.push_str(" <-> ");
            write_at(out, b, PREC_IMP);
        }
    }
    if paren {
        out.push(')');
    }
}

pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_at(&mut out, f, PREC_IFF);
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

// Parsing.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(u32),
    False,
    True,
    Not,
    Nec,
    Pos,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
}

fn describe(tok: &Token) -> String {
    match tok {
        Token::Var(i) => format!("`p{i}`"),
        Token::False => "`false`".into(),
        Token::True => "`true`".into(),
        Token::Not => "`~`".into(),
        Token::Nec => "`[]`".into(),
        Token::Pos => "`<>`".into(),
        Token::And => "`&`".into(),
        Token::Or => "`|`".into(),
        Token::Imp => "`->`".into(),
        Token::Iff => "`<->`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: String| Error::Syntax { pos, msg };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let (tok, len) = if rest.starts_with("<->") {
            (Token::Iff, 3)
        } else if rest.starts_with("->") {
            (Token::Imp, 2)
        } else if rest.starts_with("[]") {
            (Token::Nec, 2)
        } else if rest.starts_with("<>") {
            (Token::Pos, 2)
        } else if rest.starts_with("false") {
            (Token::False, 5)
        } else if rest.starts_with("true") {
            (Token::True, 4)
        } else {
            match c {
                b'~' => (Token::Not, 1),
                b'&' => (Token::And, 1),
                b'|' => (Token::Or, 1),
                b'(' => (Token::LParen, 1),
                b')' => (Token::RParen, 1),
                b'p' => {
                    let digits = rest[1..].bytes().take_while(u8::is_ascii_digit).count();
                    if digits == 0 {
                        return Err(err(i, "expected digits after `p`".into()));
                    }
                    let index = rest[1..1 + digits]
                        .parse::<u32>()
                        .map_err(|_| err(i, "variable index too large".into()))?;
                    (Token::Var(index), 1 + digits)
                }
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(err(i, format!("unexpected character `{ch}`")));
                }
            }
        };
        // keywords and variables must not run into identifier characters
        if matches!(tok, Token::False | Token::True | Token::Var(_)) {
            if let Some(next) = bytes.get(i + len) {
                if next.is_ascii_alphanumeric() || *next == b'_' {
                    return Err(err(i, "malformed atom".into()));
                }
            }
        }
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let found = match self.peek() {
            Some(t) => describe(t),
            None => "end of input".into(),
        };
        Error::Syntax {
            pos: self.pos(),
            msg: format!("expected {wanted}, found {found}"),
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut left = self.imp()?;
        while self.eat(&Token::Iff) {
            let right = self.imp()?;
            left = Formula::iff(left, right);
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula> {
        let left = self.or()?;
        if self.eat(&Token::Imp) {
            let right = self.imp()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut left = self.and()?;
        while self.eat(&Token::Or) {
            let right = self.and()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while self.eat(&Token::And) {
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Token::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat(&Token::Nec) {
            return Ok(Formula::nec(self.unary()?));
        }
        if self.eat(&Token::Pos) {
            return Ok(Formula::diamond(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let f = match self.peek() {
            Some(Token::False) => Formula::Bot,
            Some(Token::True) => Formula::top(),
            Some(Token::Var(i)) => Formula::Var(*i),
            Some(Token::LParen) => {
                self.at += 1;
                let inner = self.iff()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                return Ok(inner);
            }
            _ => return Err(self.unexpected("a formula")),
        };
        self.at += 1;
        Ok(f)
    }
}

/// Parses one formula and desugars it to the core basis.
pub fn parse(text: &str) -> Result<Formula> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        at: 0,
        end: text.len(),
    };
    let f = parser.iff()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("end of input"));
    }
    Ok(f)
}

/// Parses an axiom file: one formula per line, blank lines and lines
/// starting with `#` skipped. Error positions are offsets into the file.
pub fn parse_axioms(text: &str) -> Result<Vec<Formula>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            out.push(
                parse(line.trim_end_matches(['\n', '\r'])).map_err(|e| match e {
                    Error::Syntax { pos, msg } => Error::Syntax {
                        pos: offset + pos,
                        msg,
                    },
                    other => other,
                })?,
            );
        }
        offset += line.len();
    }
    Ok(out)
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}

/// Well-known one-variable axioms, as printed in the literature.
pub mod axioms {
    use super::{parse, Formula};

    pub const T: &str = "[]p0 -> p0";
    pub const FOUR: &str = "[]p0 -> [][]p0";
    pub const B: &str = "p0 -> []<>p0";
    pub const FIVE: &str = "<>p0 -> []<>p0";
    pub const D: &str = "[]p0 -> <>p0";
    pub const GRZ: &str = "[]([](p0 -> []p0) -> p0) -> p0";
    pub const DUMMETT: &str = "[]([](p0 -> []p0) -> []p0) -> (<>[]p0 -> []p0)";
    pub const MCKINSEY: &str = "[]<>p0 -> <>[]p0";
    pub const K: &str = "[](p0 -> p1) -> ([]p0 -> []p1)";

    pub fn get(text: &str) -> Formula {
        parse(text).expect("built-in axiom parses")
    }
}
