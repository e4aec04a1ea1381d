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

//! Closure analysis and bounded definability search for classes of finite
//! frames.
//!
//! A modally definable class is closed under disjoint unions, images of
//! bounded morphisms and generated subframes (and its complement under
//! ultrafilter extensions, which is vacuous for finite frames). Everything
//! here is relative to a size bound: frames are enumerated up to
//! isomorphism, so bounds above [`MAX_ENUMERATED_WORLDS`] are refused.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::firstorder::{frame_satisfies, FoFormula};
use crate::formula::Formula;
use crate::frame::{self, Frame};
use crate::limits::Limits;

/// Frames up to this size are enumerated exhaustively.
pub const MAX_ENUMERATED_WORLDS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameClass {
    /// The listed frames and everything isomorphic to them.
    Explicit(Vec<Frame>),
    /// The frames with at most `bound` worlds satisfying a sentence.
    Fo { sentence: FoFormula, bound: usize },
}

impl FrameClass {
    pub fn explicit(frames: Vec<Frame>, limits: &Limits) -> Result<FrameClass> {
        if let Some(fr) = frames.iter().find(|f| f.len() > limits.max_worlds) {
            return Err(Error::CapExceeded {
                what: "class member",
                size: fr.len(),
                unit: "worlds",
                cap: limits.max_worlds,
            });
        }
        Ok(FrameClass::Explicit(frames))
    }

    pub fn fo(sentence: FoFormula, bound: usize, limits: &Limits) -> Result<FrameClass> {
        let free = sentence.free_variables();
        if !free.is_empty() {
            return Err(Error::OpenFormula(free.into_iter().collect()));
        }
        if bound > limits.max_worlds {
            return Err(Error::CapExceeded {
                what: "class bound",
                size: bound,
                unit: "worlds",
                cap: limits.max_worlds,
            });
        }
        Ok(FrameClass::Fo { sentence, bound })
    }

    pub fn contains(&self, fr: &Frame) -> Result<bool> {
        match self {
            FrameClass::Explicit(frames) => {
                Ok(frames.iter().any(|m| frame::is_isomorphic(m, fr).is_some()))
            }
            FrameClass::Fo { sentence, bound } => {
                if fr.len() > *bound {
                    return Ok(false);
                }
                frame_satisfies(fr, sentence)
            }
        }
    }
}

fn check_bound(bound: usize, limits: &Limits) -> Result<()> {
    let cap = MAX_ENUMERATED_WORLDS.min(limits.max_worlds);
    if bound > cap {
        return Err(Error::CapExceeded {
            what: "enumeration bound",
            size: bound,
            unit: "worlds",
            cap,
        });
    }
    Ok(())
}

/// Membership over the universe of frames up to `bound`, memoized by
/// canonical code.
struct Universe {
    frames: Vec<Frame>,
    member: Vec<bool>,
    index: HashMap<(usize, u64), usize>,
}

impl Universe {
    fn new(c: &FrameClass, bound: usize) -> Result<Universe> {
        let frames = frame::frames_up_to_iso(bound);
        let member = frames
            .iter()
            .map(|f| c.contains(f))
            .collect::<Result<Vec<_>>>()?;
        let index = frames
            .iter()
            .enumerate()
            .map(|(i, f)| ((f.len(), frame::adjacency_code(f)), i))
            .collect();
        Ok(Universe {
            frames,
            member,
            index,
        })
    }

    fn lookup(&self, fr: &Frame) -> usize {
        self.index[&(fr.len(), frame::canonical_code(fr))]
    }

    fn is_member(&self, fr: &Frame) -> bool {
        self.member[self.lookup(fr)]
    }

    fn members(&self) -> impl Iterator<Item = &Frame> {
        self.frames
            .iter()
            .zip(&self.member)
            .filter(|(_, m)| **m)
            .map(|(f, _)| f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A generated subframe of a member is not a member.
    Subframe { member: Frame, subframe: Frame },
    /// A surjective bounded-morphic image of a member is not a member.
    Image {
        member: Frame,
        image: Frame,
        map: Vec<usize>,
    },
    /// The disjoint union of two members is not a member.
    Union { left: Frame, right: Frame },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub bound: usize,
    /// Members of the class within the bound, up to isomorphism.
    pub members: usize,
    pub violations: Vec<Violation>,
}

impl ClosureReport {
    pub fn closed_under_subframes(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Subframe { .. }))
    }

    pub fn closed_under_images(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Image { .. }))
    }

    pub fn closed_under_unions(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Union { .. }))
    }

    pub fn closed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, within `size_bound`, that the members of `c` are closed under
/// generated subframes, surjective bounded-morphic images and binary
/// disjoint unions. Each violation carries its witnesses; at most one per
/// member and operation is reported.
pub fn closure_report(c: &FrameClass, size_bound: usize, limits: &Limits) -> Result<ClosureReport> {
    check_bound(size_bound, limits)?;
    let universe = Universe::new(c, size_bound)?;
    let members: Vec<&Frame> = universe.members().collect();
    let mut violations = Vec::new();

    for &m in &members {
        for set in frame::inner_sets(m) {
            let sub = m.restrict(set)?.frame;
            if !universe.is_member(&sub) {
                violations.push(Violation::Subframe {
                    member: m.clone(),
                    subframe: sub,
                });
                break;
            }
        }
    }

    for &m in &members {
        for t in universe.frames.iter().filter(|t| t.len() <= m.len()) {
            if universe.is_member(t) {
                continue;
            }
            if let Some(g) = frame::find_bounded_morphisms(m, t, true, limits)?
                .into_iter()
                .next()
            {
                violations.push(Violation::Image {
                    member: m.clone(),
                    image: t.clone(),
                    map: g.map().to_vec(),
                });
                break;
            }
        }
    }

    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            if a.len() + b.len() > size_bound {
                continue;
            }
            let u = frame::disjoint_union(&[a.clone(), b.clone()])?.frame;
            if !universe.is_member(&u) {
                violations.push(Violation::Union {
                    left: a.clone(),
                    right: b.clone(),
                });
            }
        }
    }

    Ok(ClosureReport {
        bound: size_bound,
        members: members.len(),
        violations,
    })
}

/// Every core formula of exactly `size` nodes over `p0..p(vars-1)` with
/// modal depth at most `depth`, sorted lexicographically by preorder
/// constructor sequence under the order `false < p0 < p1 < .. < [] < ->`.
pub struct FormulaEnumerator {
    vars: u32,
    memo: HashMap<(usize, usize), Vec<Formula>>,
}

impl FormulaEnumerator {
    pub fn new(vars: u32) -> FormulaEnumerator {
        FormulaEnumerator {
            vars,
            memo: HashMap::new(),
        }
    }

    pub fn of_size(&mut self, size: usize, depth: usize) -> Vec<Formula> {
        let mut out = self.build(size, depth).clone();
        out.sort_by_cached_key(|f| preorder(f, self.vars));
        out
    }

    fn build(&mut self, size: usize, depth: usize) -> &Vec<Formula> {
        if !self.memo.contains_key(&(size, depth)) {
            let mut out = Vec::new();
            if size == 1 {
                out.push(Formula::Bot);
                out.extend((0..self.vars).map(Formula::Var));
            } else if size >= 2 {
                if depth > 0 {
                    let inner = self.build(size - 1, depth - 1).clone();
                    out.extend(inner.into_iter().map(Formula::nec));
                }
                for left_size in 1..size - 1 {
                    let lefts = self.build(left_size, depth).clone();
                    let rights = self.build(size - 1 - left_size, depth).clone();
                    for a in &lefts {
                        for b in &rights {
                            out.push(Formula::imp(a.clone(), b.clone()));
                        }
                    }
                }
            }
            self.memo.insert((size, depth), out);
        }
        &self.memo[&(size, depth)]
    }
}

fn preorder(f: &Formula, vars: u32) -> Vec<u32> {
    let mut out = Vec::new();
    fn walk(f: &Formula, vars: u32, out: &mut Vec<u32>) {
        match f {
            Formula::Bot => out.push(0),
            Formula::Var(i) => out.push(1 + i),
            Formula::Box(a) => {
                out.push(1 + vars);
                walk(a, vars, out);
            }
            Formula::Imp(a, b) => {
                out.push(2 + vars);
                walk(a, vars, out);
                walk(b, vars, out);
            }
        }
    }
    walk(f, vars, &mut out);
    out
}

/// Whether `f` is valid on exactly the member frames of the universe.
fn separates(f: &Formula, frames: &[Frame], member: &[bool], limits: &Limits) -> Result<bool> {
    // members first: most candidates die on a member quickly
    for pass in [true, false] {
        for (fr, &m) in frames.iter().zip(member) {
            if m == pass && frame::frame_valid(fr, f, limits)?.is_valid() != m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The least formula (by size, then [`FormulaEnumerator`] order) with at
/// most `var_count` variables and modal depth at most `formula_depth` that
/// is valid in exactly the members of `c` among all frames up to
/// `universe_bound` worlds. `None` when no formula of up to
/// `limits.max_formula_size` nodes does it; an error when more than
/// `limits.max_candidates` candidates would be needed to find out.
pub fn search_defining_formula(
    c: &FrameClass,
    universe_bound: usize,
    formula_depth: usize,
    var_count: u32,
    limits: &Limits,
) -> Result<Option<Formula>> {
    check_bound(universe_bound, limits)?;
    let universe = Universe::new(c, universe_bound)?;
    let mut enumerator = FormulaEnumerator::new(var_count);
    let mut tried: u64 = 0;
    for size in 1..=limits.max_formula_size {
        for f in enumerator.of_size(size, formula_depth) {
            tried += 1;
            if tried > limits.max_candidates {
                return Err(Error::BudgetExceeded {
                    budget: limits.max_candidates,
                });
            }
            if separates(&f, &universe.frames, &universe.member, limits)? {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::firstorder::parse_fo;
    use crate::formula::parse;

    fn lim() -> Limits {
        Limits::default()
    }

    fn fo_class(text: &str, bound: usize) -> FrameClass {
        FrameClass::fo(parse_fo(text).unwrap(), bound, &lim()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let single = FrameClass::explicit(vec![Frame::reflexive_point()], &lim()).unwrap();
        let r = closure_report(&single, 2, &lim()).unwrap();
        assert!(!r.closed_under_unions());
        assert!(r.closed_under_subframes() && r.closed_under_images());
        assert_eq!(
            r.violations,
            vec![Violation::Union {
                left: Frame::reflexive_point(),
                right: Frame::reflexive_point()
            }]
        );

        let reflexive = fo_class("forall x (x R x)", 3);
        assert!(closure_report(&reflexive, 3, &lim()).unwrap().closed());

        let everything = fo_class("forall x (x R x | ~(x R x))", 2);
        let r = closure_report(&everything, 2, &lim()).unwrap();
        assert!(r.closed());
        assert_eq!(r.members, 12);
    }

    #[test]
    fn closure_finds_subframe_and_image_failures() {
        // {0 -> 0, 1} has a reflexive world; the subframe generated by 1 does not
        let some_loop = fo_class("exists x (x R x)", 2);
        let r = closure_report(&some_loop, 2, &lim()).unwrap();
        assert!(!r.closed_under_subframes());

        // the two-cycle maps onto the reflexive point
        let irreflexive = fo_class("forall x ~(x R x)", 2);
        let r = closure_report(&irreflexive, 2, &lim()).unwrap();
        assert!(!r.closed_under_images());
        assert!(r.closed_under_subframes() && r.closed_under_unions());
        assert!(r.violations.contains(&Violation::Image {
            member: Frame::new(2, &[(0, 1), (1, 0)]).unwrap(),
            image: Frame::reflexive_point(),
            map: vec![0, 0],
        }));
    }

    #[test]
    fn enumerator_order() {
        let mut e = FormulaEnumerator::new(1);
        assert_eq!(e.of_size(1, 1), vec![Formula::Bot, Formula::Var(0)]);
        assert_eq!(
            e.of_size(2, 1),
            vec![Formula::nec(Formula::Bot), Formula::nec(Formula::Var(0))]
        );
        assert!(e.of_size(2, 0).is_empty());
        let three = e.of_size(3, 0);
        assert_eq!(three.len(), 4);
        assert_eq!(three[0], parse("false -> false").unwrap());
        assert_eq!(three[3], parse("p0 -> p0").unwrap());
    }

    #[test]
    fn search_examples() {
        let reflexive = fo_class("forall x (x R x)", 3);
        assert_eq!(
            search_defining_formula(&reflexive, 3, 1, 1, &lim()).unwrap(),
            Some(parse("[]p0 -> p0").unwrap())
        );
        let transitive = fo_class("forall x forall y forall z (x R y & y R z -> x R z)", 3);
        assert_eq!(
            search_defining_formula(&transitive, 3, 2, 1, &lim()).unwrap(),
            Some(parse("[]p0 -> [][]p0").unwrap())
        );
        let single = FrameClass::explicit(vec![Frame::reflexive_point()], &lim()).unwrap();
        assert_eq!(
            search_defining_formula(&single, 2, 1, 1, &lim()).unwrap(),
            None
        );
        let tiny = Limits {
            max_candidates: 3,
            ..Limits::default()
        };
        assert!(matches!(
            search_defining_formula(&reflexive, 3, 1, 1, &tiny),
            Err(Error::BudgetExceeded { budget: 3 })
        ));
        assert!(matches!(
            search_defining_formula(&reflexive, 5, 1, 1, &lim()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
