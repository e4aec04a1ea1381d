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

//! First-order formulas over one binary relation `R` and monadic predicates
//! `P0, P1, ..` (one per propositional variable), without equality.
//!
//! A model doubles as a first-order structure: worlds are the domain, `R`
//! is accessibility and `Pi` holds at the worlds in `V(p_i)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::frame::{self, Frame, Model};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FoFormula {
    /// `x R y`.
    R(u32, u32),
    /// `Pi(x)`.
    P(u32, u32),
    Bottom,
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Imp(Box<FoFormula>, Box<FoFormula>),
    Forall(u32, Box<FoFormula>),
    Exists(u32, Box<FoFormula>),
}

impl FoFormula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: FoFormula) -> FoFormula {
        FoFormula::Not(Box::new(a))
    }

    pub fn and(a: FoFormula, b: FoFormula) -> FoFormula {
        FoFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: FoFormula, b: FoFormula) -> FoFormula {
        FoFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: FoFormula, b: FoFormula) -> FoFormula {
        FoFormula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(x: u32, body: FoFormula) -> FoFormula {
        FoFormula::Forall(x, Box::new(body))
    }

    pub fn exists(x: u32, body: FoFormula) -> FoFormula {
        FoFormula::Exists(x, Box::new(body))
    }

    pub fn free_variables(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<u32>, out: &mut BTreeSet<u32>) {
        let mut note = |x: u32, bound: &Vec<u32>| {
            if !bound.contains(&x) {
                out.insert(x);
            }
        };
        match self {
            FoFormula::R(x, y) => {
                note(*x, bound);
                note(*y, bound);
            }
            FoFormula::P(_, x) => note(*x, bound),
            FoFormula::Bottom => {}
            FoFormula::Not(a) => a.collect_free(bound, out),
            FoFormula::And(a, b) | FoFormula::Or(a, b) | FoFormula::Imp(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FoFormula::Forall(x, a) | FoFormula::Exists(x, a) => {
                bound.push(*x);
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }
}

/// The standard translation of `f` with free variable `v{x}`. A box at
/// variable `v{k}` quantifies over `v{k+1}`, so variable indices track
/// modal depth.
pub fn standard_translation(f: &Formula, x: u32) -> FoFormula {
    match f {
        Formula::Var(i) => FoFormula::P(*i, x),
        Formula::Bot => FoFormula::Bottom,
        Formula::Imp(a, b) => {
            FoFormula::imp(standard_translation(a, x), standard_translation(b, x))
        }
        Formula::Box(a) => {
            let y = x + 1;
            FoFormula::forall(
                y,
                FoFormula::imp(FoFormula::R(x, y), standard_translation(a, y)),
            )
        }
    }
}

/// Rewrites `a -> false` as negation and pushes negations inward through
/// implications, conjunctions, disjunctions and quantifiers, so that
/// desugared diamonds come out as `exists y (x R y & ..)`.
pub fn simplify(f: &FoFormula) -> FoFormula {
    match f {
        FoFormula::R(..) | FoFormula::P(..) | FoFormula::Bottom => f.clone(),
        FoFormula::Not(a) => negate(simplify(a)),
        FoFormula::Imp(a, b) if **b == FoFormula::Bottom => negate(simplify(a)),
        FoFormula::Imp(a, b) => FoFormula::imp(simplify(a), simplify(b)),
        FoFormula::And(a, b) => FoFormula::and(simplify(a), simplify(b)),
        FoFormula::Or(a, b) => FoFormula::or(simplify(a), simplify(b)),
        FoFormula::Forall(x, a) => FoFormula::forall(*x, simplify(a)),
        FoFormula::Exists(x, a) => FoFormula::exists(*x, simplify(a)),
    }
}

fn negate(f: FoFormula) -> FoFormula {
    match f {
        FoFormula::Not(a) => *a,
        FoFormula::Imp(a, b) => FoFormula::and(*a, negate(*b)),
        FoFormula::And(a, b) => FoFormula::imp(*a, negate(*b)),
        FoFormula::Or(a, b) => FoFormula::and(negate(*a), negate(*b)),
        FoFormula::Forall(x, a) => FoFormula::exists(x, negate(*a)),
        FoFormula::Exists(x, a) => FoFormula::forall(x, negate(*a)),
        atom => FoFormula::not(atom),
    }
}

/// Tarskian satisfaction in `m` under `env`; quantifiers range over all
/// worlds.
pub fn fo_satisfies(m: &Model, f: &FoFormula, env: &BTreeMap<u32, usize>) -> Result<bool> {
    for x in f.free_variables() {
        match env.get(&x) {
            None => return Err(Error::UnboundVariable(x)),
            Some(&w) => m.frame.check_world(w)?,
        }
    }
    let width = env
        .keys()
        .chain(bound_variables(f).iter())
        .max()
        .map_or(0, |x| *x as usize + 1);
    let mut slots = vec![0usize; width];
    for (&x, &w) in env {
        slots[x as usize] = w;
    }
    Ok(sat(m, f, &mut slots))
}

fn bound_variables(f: &FoFormula) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    fn walk(f: &FoFormula, out: &mut BTreeSet<u32>) {
        match f {
            FoFormula::R(..) | FoFormula::P(..) | FoFormula::Bottom => {}
            FoFormula::Not(a) => walk(a, out),
            FoFormula::And(a, b) | FoFormula::Or(a, b) | FoFormula::Imp(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            FoFormula::Forall(x, a) | FoFormula::Exists(x, a) => {
                out.insert(*x);
                walk(a, out);
            }
        }
    }
    walk(f, &mut out);
    out
}

fn sat(m: &Model, f: &FoFormula, env: &mut Vec<usize>) -> bool {
    match f {
        FoFormula::R(x, y) => m.frame.related(env[*x as usize], env[*y as usize]),
        FoFormula::P(p, x) => bits::contains(m.value(*p), env[*x as usize]),
        FoFormula::Bottom => false,
        FoFormula::Not(a) => !sat(m, a, env),
        FoFormula::And(a, b) => sat(m, a, env) && sat(m, b, env),
        FoFormula::Or(a, b) => sat(m, a, env) || sat(m, b, env),
        FoFormula::Imp(a, b) => !sat(m, a, env) || sat(m, b, env),
        FoFormula::Forall(x, a) | FoFormula::Exists(x, a) => {
            let universal = matches!(f, FoFormula::Forall(..));
            let slot = *x as usize;
            let saved = env[slot];
            let mut result = universal;
            for w in 0..m.frame.len() {
                env[slot] = w;
                if sat(m, a, env) != universal {
                    result = !universal;
                    break;
                }
            }
            env[slot] = saved;
            result
        }
    }
}

/// Whether a sentence holds in a frame (predicates read as empty).
pub fn frame_satisfies(fr: &Frame, s: &FoFormula) -> Result<bool> {
    let m = Model::new(fr.clone(), BTreeMap::new())?;
    fo_satisfies(&m, s, &BTreeMap::new())
}

/// Whether modal truth at `a` agrees with first-order satisfaction of the
/// standard translation at `a`.
pub fn check_translation_equivalence(m: &Model, a: usize, f: &Formula) -> Result<bool> {
    let modal = frame::truth(m, a, f)?;
    let x = 0;
    let fo = fo_satisfies(m, &standard_translation(f, x), &BTreeMap::from([(x, a)]))?;
    Ok(modal == fo)
}

/// Outcome of the quasi-modal recognizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiModal {
    /// The first offending subformula and why, when not quasi-modal.
    pub violation: Option<String>,
}

impl QuasiModal {
    pub fn is_quasi_modal(&self) -> bool {
        self.violation.is_none()
    }
}

/// Recognizes sentences of the form `forall x ρ`, with `ρ` built from
/// atoms by `&`, `|` and the bounded forms `forall z (y R z -> τ)` and
/// `exists z (y R z & τ)` with `y ≠ z`. A bare `exists z (y R z)` counts
/// as the latter with `τ` true.
pub fn is_quasi_modal(s: &FoFormula) -> Result<QuasiModal> {
    let free = s.free_variables();
    if !free.is_empty() {
        return Err(Error::OpenFormula(free.into_iter().collect()));
    }
    let violation = match s {
        FoFormula::Forall(_, rho) => check_rho(rho).err(),
        other => Some(format!(
            "`{other}` does not start with a universal quantifier"
        )),
    };
    Ok(QuasiModal { violation })
}

fn check_rho(f: &FoFormula) -> std::result::Result<(), String> {
    match f {
        FoFormula::R(..) | FoFormula::P(..) | FoFormula::Bottom => Ok(()),
        FoFormula::And(a, b) | FoFormula::Or(a, b) => {
            check_rho(a)?;
            check_rho(b)
        }
        FoFormula::Not(_) => Err(format!("negation in `{f}`")),
        FoFormula::Imp(..) => Err(format!("implication outside a bounded universal in `{f}`")),
        FoFormula::Forall(z, body) => match &**body {
            FoFormula::Imp(guard, tau) => {
                check_guard(f, *z, guard)?;
                check_rho(tau)
            }
            _ => Err(format!(
                "universal over v{z} is not of the form `forall v{z} (y R v{z} -> ..)` in `{f}`"
            )),
        },
        FoFormula::Exists(z, body) => match &**body {
            // `exists z (y R z)` is the bounded form with a trivially true body
            guard @ FoFormula::R(..) => check_guard(f, *z, guard),
            FoFormula::And(guard, tau) => {
                check_guard(f, *z, guard)?;
                check_rho(tau)
            }
            _ => Err(format!(
                "existential over v{z} is not of the form `exists v{z} (y R v{z} & ..)` in `{f}`"
            )),
        },
    }
}

fn check_guard(whole: &FoFormula, z: u32, guard: &FoFormula) -> std::result::Result<(), String> {
    match guard {
        FoFormula::R(y, w) if *w == z && *y != z => Ok(()),
        FoFormula::R(y, w) if *w == z => Err(format!(
            "guard `v{y} R v{w}` relates the bound variable to itself in `{whole}`"
        )),
        FoFormula::R(y, _) if *y == z => Err(format!(
            "bound variable v{z} occurs in the first slot of the guard in `{whole}`"
        )),
        _ => Err(format!(
            "quantifier over v{z} is not guarded by `y R v{z}` in `{whole}`"
        )),
    }
}

// Printing.

const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;

fn prec(f: &FoFormula) -> u8 {
    match f {
        FoFormula::Imp(..) => PREC_IMP,
        FoFormula::Or(..) => PREC_OR,
        FoFormula::And(..) => PREC_AND,
        _ => PREC_UNARY,
    }
}

fn write_fo(out: &mut String, f: &FoFormula, min: u8) {
    let paren = prec(f) < min;
    if paren {
        out.push('(');
    }
    match f {
        FoFormula::R(x, y) => out.push_str(&format!("v{x} R v{y}")),
        FoFormula::P(p, x) => out.push_str(&format!("P{p}(v{x})")),
        FoFormula::Bottom => out.push_str("false"),
        FoFormula::Not(a) => {
            out.push('~');
            write_fo(out, a, PREC_UNARY);
        }
        FoFormula::And(a, b) => {
            write_fo(out, a, PREC_AND);
            out.push_str(" & ");
            write_fo(out, b, PREC_UNARY);
        }
        FoFormula::Or(a, b) => {
            write_fo(out, a, PREC_OR);
            out.push_str(" | ");
            write_fo(out, b, PREC_AND);
        }
        FoFormula::Imp(a, b) => {
            write_fo(out, a, PREC_OR);
            out.push_str(" -> ");
            write_fo(out, b, PREC_IMP);
        }
        FoFormula::Forall(x, a) | FoFormula::Exists(x, a) => {
            out.push_str(if matches!(f, FoFormula::Forall(..)) {
                "forall"
            } else {
                "exists"
            });
            out.push_str(&format!(" v{x} "));
            let bare = matches!(
                **a,
                FoFormula::Not(_) | FoFormula::Forall(..) | FoFormula::Exists(..)
            );
            if bare {
                write_fo(out, a, PREC_UNARY);
            } else {
                out.push('(');
                write_fo(out, a, PREC_IMP);
                out.push(')');
            }
        }
    }
    if paren {
        out.push(')');
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_fo(&mut out, self, PREC_IMP);
        f.write_str(&out)
    }
}

// Parsing.

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Pred(u32),
    Forall,
    Exists,
    Rel,
    False,
    True,
    Not,
    And,
    Or,
    Imp,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[i..end];
            let tok = match word {
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                "R" => Tok::Rel,
                "false" => Tok::False,
                "true" => Tok::True,
                _ if word.len() > 1
                    && word.starts_with('P')
                    && word[1..].bytes().all(|b| b.is_ascii_digit()) =>
                {
                    Tok::Pred(word[1..].parse().map_err(|_| Error::Syntax {
                        pos: i,
                        msg: "predicate index too large".into(),
                    })?)
                }
                _ => Tok::Ident(word.to_string()),
            };
            out.push((i, tok));
            continue;
        }
        chars.next();
        let tok = match c {
            '~' => Tok::Not,
            '&' => Tok::And,
            '|' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '-' if chars.peek().map(|p| p.1) == Some('>') => {
                chars.next();
                Tok::Imp
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((i, tok));
    }
    Ok(out)
}

struct FoParser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    names: BTreeMap<String, u32>,
}

impl FoParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn fail(&self, wanted: &str) -> Error {
        let pos = self.toks.get(self.at).map_or(self.end, |(p, _)| *p);
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(t) => format!("{t:?}"),
        };
        Error::Syntax {
            pos,
            msg: format!("expected {wanted}, found {found}"),
        }
    }

    fn var(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let x = self.names[name];
                self.at += 1;
                Ok(x)
            }
            _ => Err(self.fail("a variable")),
        }
    }

    fn imp(&mut self) -> Result<FoFormula> {
        let left = self.or()?;
        if self.eat(&Tok::Imp) {
            return Ok(FoFormula::imp(left, self.imp()?));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<FoFormula> {
        let mut left = self.and()?;
        while self.eat(&Tok::Or) {
            left = FoFormula::or(left, self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<FoFormula> {
        let mut left = self.unary()?;
        while self.eat(&Tok::And) {
            left = FoFormula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<FoFormula> {
        if self.eat(&Tok::Not) {
            return Ok(FoFormula::not(self.unary()?));
        }
        if self.eat(&Tok::Forall) {
            let x = self.var()?;
            return Ok(FoFormula::forall(x, self.unary()?));
        }
        if self.eat(&Tok::Exists) {
            let x = self.var()?;
            return Ok(FoFormula::exists(x, self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FoFormula> {
        match self.peek().cloned() {
            Some(Tok::False) => {
                self.at += 1;
                Ok(FoFormula::Bottom)
            }
            Some(Tok::True) => {
                self.at += 1;
                Ok(FoFormula::not(FoFormula::Bottom))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.imp()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.fail("`)`"));
                }
                Ok(inner)
            }
            Some(Tok::Pred(p)) => {
                self.at += 1;
                if !self.eat(&Tok::LParen) {
                    return Err(self.fail("`(`"));
                }
                let x = self.var()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.fail("`)`"));
                }
                Ok(FoFormula::P(p, x))
            }
            Some(Tok::Ident(_)) => {
                let x = self.var()?;
                if !self.eat(&Tok::Rel) {
                    return Err(self.fail("`R`"));
                }
                let y = self.var()?;
                Ok(FoFormula::R(x, y))
            }
            _ => Err(self.fail("a formula")),
        }
    }
}

/// Parses first-order concrete syntax. A variable named `v<k>` gets index
/// `k`; every other name gets a fresh index above those, in order of first
/// appearance.
pub fn parse_fo(text: &str) -> Result<FoFormula> {
    let toks = lex(text)?;
    let numbered = |name: &str| -> Option<u32> {
        name.strip_prefix('v')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse().ok())
    };
    let mut names = BTreeMap::new();
    let mut next = 0u32;
    for (_, t) in &toks {
        if let Tok::Ident(name) = t {
            if let Some(k) = numbered(name) {
                names.insert(name.clone(), k);
                next = next.max(k + 1);
            }
        }
    }
    for (_, t) in &toks {
        if let Tok::Ident(name) = t {
            if !names.contains_key(name) {
                names.insert(name.clone(), next);
                next += 1;
            }
        }
    }
    let mut p = FoParser {
        toks,
        at: 0,
        end: text.len(),
        names,
    };
    let f = p.imp()?;
    if p.peek().is_some() {
        return Err(p.fail("end of input"));
    }
    Ok(f)
}
