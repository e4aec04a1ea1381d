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

mod common;

use modalkit::definability::{closure_report, search_defining_formula, FrameClass};
use modalkit::firstorder::parse_fo;
use modalkit::frame::frames_up_to_iso;
use modalkit::Limits;

use common::*;

fn fo(text: &str, bound: usize) -> FrameClass {
    FrameClass::fo(parse_fo(text).unwrap(), bound, &Limits::default()).unwrap()
}

#[test]
fn found_formulas_separate_the_class() {
    let l = Limits::default();
    let classes = [
        ("forall x (x R x)", 1),
        ("forall x forall y forall z (x R y & y R z -> x R z)", 2),
        ("forall x exists y (x R y)", 1),
        ("forall x forall y (x R y -> y R y)", 2),
        ("forall x forall y ~(x R y)", 1),
    ];
    for (text, depth) in classes {
        let c = fo(text, 3);
        let f = search_defining_formula(&c, 3, depth, 1, &l)
            .unwrap()
            .unwrap_or_else(|| panic!("nothing found for {text}"));
        for fr in frames_up_to(3) {
            assert_eq!(
                naive_valid(&fr, &f),
                c.contains(&fr).unwrap(),
                "{text}: {f} on {fr}"
            );
        }
    }
}

#[test]
fn closure_violations_rule_out_a_definition() {
    let l = Limits::default();
    let classes = vec![
        FrameClass::explicit(vec![f1()], &l).unwrap(),
        fo("exists x (x R x)", 2),
        fo("forall x ~(x R x)", 2),
        fo("forall x forall y (x R y)", 2),
        fo("exists x exists y ~(x R y)", 2),
    ];
    for c in classes {
        let report = closure_report(&c, 2, &l).unwrap();
        assert!(!report.closed(), "{c:?}");
        assert_eq!(
            search_defining_formula(&c, 2, 2, 1, &l).unwrap(),
            None,
            "{c:?}"
        );
    }
}

#[test]
fn closure_members_are_counted_up_to_iso() {
    let l = Limits::default();
    let everything = fo("forall x (x R x | ~(x R x))", 3);
    let r = closure_report(&everything, 3, &l).unwrap();
    assert!(r.closed());
    assert_eq!(r.members, frames_up_to_iso(3).len());
    let reflexive = closure_report(&fo("forall x (x R x)", 3), 3, &l).unwrap();
    assert!(reflexive.closed());
    let expected = frames_up_to_iso(3)
        .iter()
        .filter(|f| (0..f.len()).all(|a| f.related(a, a)))
        .count();
    assert_eq!(reflexive.members, expected);
}
