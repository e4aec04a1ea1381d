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

use std::collections::{BTreeMap, BTreeSet};

use modalkit::firstorder::{
    check_translation_equivalence, fo_satisfies, frame_satisfies, is_quasi_modal, parse_fo,
    simplify, standard_translation, FoFormula,
};
use modalkit::frame::{disjoint_union, find_bounded_morphisms, generated_subframe, inner_sets};
use modalkit::{Frame, Limits, Model};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn random_model(rng: &mut ChaCha8Rng, vars: u32) -> Model {
    let fr = random_frame(rng, 1..=4);
    let val = (0..vars)
        .map(|v| (v, rng.gen_range(0..1u64 << fr.len())))
        .collect();
    Model::new(fr, val).unwrap()
}

fn naive_val(m: &Model) -> BTreeMap<u32, Vec<bool>> {
    m.valuation()
        .iter()
        .map(|(&v, &set)| (v, (0..m.frame.len()).map(|w| set >> w & 1 == 1).collect()))
        .collect()
}

#[test]
fn translation_agrees_with_naive_truth() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..2000 {
        let m = random_model(&mut rng, 2);
        let f = random_formula(&mut rng, 2, 3, 7);
        let w = rng.gen_range(0..m.frame.len());
        let st = standard_translation(&f, 0);
        let expected = naive_truth(&matrix(&m.frame), &naive_val(&m), w, &f);
        let env = BTreeMap::from([(0, w)]);
        assert_eq!(fo_satisfies(&m, &st, &env).unwrap(), expected, "{f}");
        assert_eq!(
            fo_satisfies(&m, &simplify(&st), &env).unwrap(),
            expected,
            "{f}"
        );
        assert!(check_translation_equivalence(&m, w, &f).unwrap());
    }
}

#[test]
fn translation_is_open_in_exactly_its_variable() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let f = random_formula(&mut rng, 2, 3, 7);
        let x = rng.gen_range(0..4);
        let free = standard_translation(&f, x).free_variables();
        // a formula without variables or boxes translates to a sentence
        let mentions_x = !f.variables().is_empty() || f.modal_depth() > 0;
        assert_eq!(
            free,
            if mentions_x {
                BTreeSet::from([x])
            } else {
                BTreeSet::new()
            },
            "{f}"
        );
    }
}

#[test]
fn spec_examples() {
    assert!(!frame_satisfies(&f2(), &parse_fo("forall x exists y (x R y)").unwrap()).unwrap());
    let m = Model::new(f2(), BTreeMap::from([(0, 0b10)])).unwrap();
    let s = parse_fo("forall y (x R y -> P0(y))").unwrap();
    let x = *s.free_variables().iter().next().unwrap();
    assert!(fo_satisfies(&m, &s, &BTreeMap::from([(x, 0)])).unwrap());
    assert!(check_translation_equivalence(&m, 0, &modalkit::parse("[]p0").unwrap()).unwrap());
}

#[test]
fn quasi_modal_golden_set() {
    for (text, expected) in QUASI_MODAL_GOLDEN {
        let q = is_quasi_modal(&parse_fo(text).unwrap()).unwrap();
        assert_eq!(q.is_quasi_modal(), expected, "{text}: {:?}", q.violation);
    }
}

/// A random relational `ρ` over the variables in `scope`.
fn random_rho(rng: &mut ChaCha8Rng, scope: &mut Vec<u32>, depth: usize) -> FoFormula {
    let pick = |rng: &mut ChaCha8Rng, scope: &[u32]| scope[rng.gen_range(0..scope.len())];
    if depth == 0 || rng.gen_bool(0.3) {
        return FoFormula::R(pick(rng, scope), pick(rng, scope));
    }
    match rng.gen_range(0..4) {
        0 => FoFormula::and(
            random_rho(rng, scope, depth - 1),
            random_rho(rng, scope, depth - 1),
        ),
        1 => FoFormula::or(
            random_rho(rng, scope, depth - 1),
            random_rho(rng, scope, depth - 1),
        ),
        q => {
            let y = pick(rng, scope);
            let z = scope.len() as u32;
            scope.push(z);
            let tau = random_rho(rng, scope, depth - 1);
            scope.pop();
            let guard = FoFormula::R(y, z);
            if q == 2 {
                FoFormula::forall(z, FoFormula::imp(guard, tau))
            } else {
                FoFormula::exists(z, FoFormula::and(guard, tau))
            }
        }
    }
}

fn holds(fr: &Frame, s: &FoFormula) -> bool {
    frame_satisfies(fr, s).unwrap()
}

#[test]
fn quasi_modal_sentences_are_preserved() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let l = Limits::default();
    let mut sentences: Vec<FoFormula> = QUASI_MODAL_GOLDEN
        .iter()
        .filter(|(_, qm)| *qm)
        .map(|(t, _)| parse_fo(t).unwrap())
        .collect();
    for _ in 0..40 {
        sentences.push(FoFormula::forall(0, random_rho(&mut rng, &mut vec![0], 3)));
    }
    let frames: Vec<Frame> = (0..60).map(|_| random_frame(&mut rng, 1..=4)).collect();
    let targets = modalkit::frame::frames_up_to_iso(3);
    for s in &sentences {
        assert!(is_quasi_modal(s).unwrap().is_quasi_modal(), "{s}");
        for fr in &frames {
            let here = holds(fr, s);
            if here {
                for set in inner_sets(fr) {
                    assert!(
                        holds(&generated_subframe(fr, set).unwrap().frame, s),
                        "{s} {fr}"
                    );
                }
                for t in targets.iter().filter(|t| t.len() <= fr.len()) {
                    if !find_bounded_morphisms(fr, t, true, &l).unwrap().is_empty() {
                        assert!(holds(t, s), "{s} {fr} onto {t}");
                    }
                }
            }
            let other = &frames[rng.gen_range(0..frames.len())];
            let u = disjoint_union(&[fr.clone(), other.clone()]).unwrap().frame;
            assert_eq!(holds(&u, s), here && holds(other, s), "{s} {fr} + {other}");
        }
    }
}
