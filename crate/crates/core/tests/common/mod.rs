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

//! Independent oracles and fixtures shared by the integration tests and the
//! acceptance harness. Nothing here calls the library code it is used to
//! check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use modalkit::algebra::ModalAlgebra;
use modalkit::bits::Bits;
use modalkit::{parse, Formula, Frame};
use proptest::prelude::*;
use rand::Rng;

/// Relation as a boolean matrix.
pub fn matrix(fr: &Frame) -> Vec<Vec<bool>> {
    let n = fr.len();
    let mut r = vec![vec![false; n]; n];
    for (a, b) in fr.edges() {
        r[a][b] = true;
    }
    r
}

pub fn frame_from_matrix(r: &[Vec<bool>]) -> Frame {
    let edges: Vec<(usize, usize)> = (0..r.len())
        .flat_map(|a| (0..r.len()).filter(move |&b| r[a][b]).map(move |b| (a, b)))
        .collect();
    Frame::new(r.len(), &edges).unwrap()
}

/// Every frame on exactly `n` worlds, relation bit `a*n+b` meaning `a R b`.
pub fn frames_of_size(n: usize) -> Vec<Frame> {
    (0u64..1 << (n * n))
        .map(|code| {
            let edges: Vec<(usize, usize)> = (0..n * n)
                .filter(|i| code >> i & 1 == 1)
                .map(|i| (i / n, i % n))
                .collect();
            Frame::new(n, &edges).unwrap()
        })
        .collect()
}

/// Every frame with 1 to `n` worlds.
pub fn frames_up_to(n: usize) -> Vec<Frame> {
    (1..=n).flat_map(frames_of_size).collect()
}

pub fn f1() -> Frame {
    Frame::new(1, &[(0, 0)]).unwrap()
}

pub fn f2() -> Frame {
    Frame::new(2, &[(0, 1)]).unwrap()
}

pub fn universal2() -> Frame {
    Frame::new(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
}

/// Truth by direct recursion over the relation matrix.
pub fn naive_truth(r: &[Vec<bool>], val: &BTreeMap<u32, Vec<bool>>, w: usize, f: &Formula) -> bool {
    match f {
        Formula::Var(i) => val.get(i).is_some_and(|v| v[w]),
        Formula::Bot => false,
        Formula::Imp(a, b) => !naive_truth(r, val, w, a) || naive_truth(r, val, w, b),
        Formula::Box(a) => (0..r.len()).all(|u| !r[w][u] || naive_truth(r, val, u, a)),
    }
}

/// Frame validity by trying every valuation of the formula's variables.
pub fn naive_valid(fr: &Frame, f: &Formula) -> bool {
    let r = matrix(fr);
    let n = fr.len();
    let vars: Vec<u32> = f.variables().into_iter().collect();
    let total = 1u64 << (n * vars.len());
    (0..total).all(|code| {
        let val: BTreeMap<u32, Vec<bool>> = vars
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, (0..n).map(|w| code >> (k * n + w) & 1 == 1).collect()))
            .collect();
        (0..n).all(|w| naive_truth(&r, &val, w, f))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every permutation.
pub fn brute_isomorphic(a: &Frame, b: &Frame) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (ra, rb) = (matrix(a), matrix(b));
    permutations(a.len())
        .iter()
        .any(|p| (0..a.len()).all(|x| (0..a.len()).all(|y| ra[x][y] == rb[p[x]][p[y]])))
}

/// Forth and back checked edge by edge.
pub fn brute_is_bounded_morphism(map: &[usize], src: &Frame, tgt: &Frame) -> bool {
    let (rs, rt) = (matrix(src), matrix(tgt));
    let forth = (0..src.len()).all(|a| (0..src.len()).all(|b| !rs[a][b] || rt[map[a]][map[b]]));
    let back = (0..src.len()).all(|a| {
        (0..tgt.len()).all(|v| !rt[map[a]][v] || (0..src.len()).any(|b| rs[a][b] && map[b] == v))
    });
    forth && back
}

/// Every bounded morphism, by trying every map in lexicographic order.
pub fn brute_morphisms(src: &Frame, tgt: &Frame, surjective_only: bool) -> Vec<Vec<usize>> {
    let (n, m) = (src.len(), tgt.len());
    let mut out = Vec::new();
    let mut map = vec![0; n];
    loop {
        let onto = (0..m).all(|v| map.contains(&v));
        if (!surjective_only || onto) && brute_is_bounded_morphism(&map, src, tgt) {
            out.push(map.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
        }
    }
}

/// Smallest set of elements containing `gens`, 0 and the top, closed under
/// complement, union and the diamond.
pub fn element_closure(alg: &ModalAlgebra, gens: &[Bits]) -> BTreeSet<Bits> {
    let top = alg.top();
    let mut set: BTreeSet<Bits> = [0, top].into_iter().chain(gens.iter().copied()).collect();
    loop {
        let items: Vec<Bits> = set.iter().copied().collect();
        let mut next = set.clone();
        for &a in &items {
            next.insert(top & !a);
            next.insert(alg.m(a));
            for &b in &items {
                next.insert(a | b);
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Every algebra with 1 to `k` atoms: all diamond tables.
pub fn algebras_up_to(k: usize) -> Vec<ModalAlgebra> {
    let mut out = Vec::new();
    for atoms in 1..=k {
        let rows = 1u64 << atoms;
        let total = rows.pow(atoms as u32);
        for code in 0..total {
            let table: Vec<Bits> = (0..atoms)
                .map(|b| (code / rows.pow(b as u32)) % rows)
                .collect();
            out.push(ModalAlgebra::new(table).unwrap());
        }
    }
    out
}

pub fn random_frame<R: Rng>(rng: &mut R, sizes: std::ops::RangeInclusive<usize>) -> Frame {
    let n = rng.gen_range(sizes);
    let r: Vec<Vec<bool>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(0.4)).collect())
        .collect();
    frame_from_matrix(&r)
}

/// Random formula over `vars` variables with modal depth at most `depth`,
/// using the derived connectives too.
pub fn random_formula<R: Rng>(rng: &mut R, vars: u32, depth: usize, budget: usize) -> Formula {
    if budget == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..6) {
            0 => Formula::bot(),
            1 => Formula::top(),
            _ => Formula::var(rng.gen_range(0..vars)),
        };
    }
    let sub = |rng: &mut R, d| random_formula(rng, vars, d, budget - 1);
    let boxed = depth > 0;
    match rng.gen_range(0..if boxed { 7 } else { 5 }) {
        0 => Formula::not(sub(rng, depth)),
        1 => Formula::and(sub(rng, depth), sub(rng, depth)),
        2 => Formula::or(sub(rng, depth), sub(rng, depth)),
        3 => Formula::imp(sub(rng, depth), sub(rng, depth)),
        4 => Formula::iff(sub(rng, depth), sub(rng, depth)),
        5 => Formula::nec(sub(rng, depth - 1)),
        _ => Formula::diamond(sub(rng, depth - 1)),
    }
}

/// Fifty formulas: the named axioms and a spread of shapes over at most
/// two variables.
pub const CORPUS: [&str; 50] = [
    "[]p0 -> p0",
    "[]p0 -> [][]p0",
    "p0 -> []<>p0",
    "<>p0 -> []<>p0",
    "[]p0 -> <>p0",
    "[]([](p0 -> []p0) -> p0) -> p0",
    "[]([](p0 -> []p0) -> []p0) -> (<>[]p0 -> []p0)",
    "[]<>p0 -> <>[]p0",
    "[](p0 -> p1) -> ([]p0 -> []p1)",
    "[]([]p0 -> p0) -> []p0",
    "<>[]p0 -> []<>p0",
    "[]([]p0 -> p1) | []([]p1 -> p0)",
    "[][]p0 -> []p0",
    "<>true",
    "[]false",
    "[]p0 <-> p0",
    "p0 -> []p0",
    "<>p0 -> []p0",
    "<><>p0 -> <>p0",
    "[]p0 | []~p0",
    "[]([]p0 -> p0)",
    "<>[]p0 -> p0",
    "[]<>p0 -> <>p0",
    "[]p0 -> [][][]p0",
    "<>p0 & <>p1 -> <>(p0 & p1)",
    "[](p0 | p1) -> []p0 | []p1",
    "p0",
    "true",
    "false",
    "p0 | ~p0",
    "[]true",
    "<>p0 -> p0",
    "p0 -> <>p0",
    "[]p0 -> []<>p0",
    "<>[]p0 -> <>p0",
    "[](p0 & []p0 -> p1) | [](p1 & []p1 -> p0)",
    "[]<>p0 -> []p0",
    "<>(p0 -> []p0)",
    "[][]p0 -> [][][]p0",
    "[](p0 <-> []p0)",
    "<>p0 -> <><>p0",
    "[]p0 & []p1 -> [](p0 & p1)",
    "[](<>p0 -> p0)",
    "<>[]<>p0 -> []<>p0",
    "[]([]p0 -> p0) -> ([]p0 -> p0)",
    "p0 & <>p1 -> <>(p1 & <>p0)",
    "<>p0 & <>~p0 -> [](p0 -> p1)",
    "[]p0 -> <>[]p0",
    "~[]false -> <>true",
    "[](p0 -> p1) | [](p1 -> p0)",
];

pub fn corpus() -> Vec<Formula> {
    CORPUS.iter().map(|s| parse(s).unwrap()).collect()
}

/// Twelve sentences with their quasi-modal verdicts.
pub const QUASI_MODAL_GOLDEN: [(&str, bool); 12] = [
    ("forall x (x R x)", true),
    ("forall x forall y (x R y -> y R x)", true),
    ("forall x exists y (y R x)", false),
    ("forall x exists y (x R y)", true),
    (
        "forall x forall y (x R y -> forall z (y R z -> x R z))",
        true,
    ),
    ("forall x forall y forall z (x R y & y R z -> x R z)", false),
    ("exists x (x R x)", false),
    ("forall x ~(x R x)", false),
    ("forall x (x R x | exists y (x R y & y R x))", true),
    (
        "forall x exists y (x R y & forall z (y R z -> z R y))",
        true,
    ),
    ("forall x forall y (x R y -> x R x)", true),
    ("forall x forall y (y R y -> x R y)", false),
];

/// Core formulas over `p0..p(vars-1)`.
pub fn arb_formula(vars: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::Bot), (0..vars).prop_map(Formula::Var)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::nec),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

/// Frames with 1 to `max` worlds.
pub fn arb_frame(max: usize) -> impl Strategy<Value = Frame> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |cells| {
            let r: Vec<Vec<bool>> = cells.chunks(n).map(<[bool]>::to_vec).collect();
            frame_from_matrix(&r)
        })
    })
}

/// A substitution for `p0..p(vars-1)`, each variable mapped with even odds.
pub fn arb_substitution(vars: u32) -> impl Strategy<Value = BTreeMap<u32, Formula>> {
    proptest::collection::btree_map(0..vars, arb_formula(vars), 0..=vars as usize)
}

/// `m(a)` straight from the diamond table.
pub fn diamond_of(alg: &ModalAlgebra, a: Bits) -> Bits {
    let table = alg.diamond_table();
    (0..table.len())
        .filter(|b| a >> b & 1 == 1)
        .fold(0, |acc, b| acc | table[b])
}

/// Whether the set map `a ↦ {q : map[q] ∈ a}` commutes with the diamond on
/// every element. Preimage maps always preserve the Boolean operations.
pub fn brute_is_homomorphism(src: &ModalAlgebra, tgt: &ModalAlgebra, map: &[usize]) -> bool {
    let theta = |a: Bits| {
        (0..map.len())
            .filter(|&q| a >> map[q] & 1 == 1)
            .fold(0, |acc, q| acc | 1 << q)
    };
    (0..1u64 << src.atoms()).all(|a| theta(diamond_of(src, a)) == diamond_of(tgt, theta(a)))
}

/// Every dual atom map `tgt atoms → src atoms`, lexicographically.
pub fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    (0..(to as u64).pow(from as u32))
        .map(|mut code| {
            let mut m = vec![0; from];
            for slot in m.iter_mut().rev() {
                *slot = (code % to as u64) as usize;
                code /= to as u64;
            }
            m
        })
        .collect()
}

/// The product of `Cm(F)` over every frame `F` of `frames` and every
/// assignment of `n` generators into it, with the generator elements.
/// Built from the relation matrices alone.
pub fn brute_generator_product(frames: &[Frame], n: usize) -> (ModalAlgebra, Vec<Bits>) {
    let mut table: Vec<Bits> = Vec::new();
    let mut gens = vec![0u64; n];
    for fr in frames {
        let r = matrix(fr);
        let k = fr.len();
        for code in 0u64..1 << (k * n) {
            let offset = table.len();
            for b in 0..k {
                let preds = r.iter().enumerate().filter(|(_, row)| row[b]);
                table.push(preds.fold(0, |acc, (a, _)| acc | 1 << (a + offset)));
            }
            for (j, g) in gens.iter_mut().enumerate() {
                *g |= ((code >> (j * k)) & ((1 << k) - 1)) << offset;
            }
        }
    }
    (ModalAlgebra::new(table).unwrap(), gens)
}

/// Number of elements of the `n`-generated free algebra of the variety
/// generated by `frames`, by closing the generators inside the product.
pub fn brute_free_size(frames: &[Frame], n: usize) -> usize {
    let (product, gens) = brute_generator_product(frames, n);
    element_closure(&product, &gens).len()
}
