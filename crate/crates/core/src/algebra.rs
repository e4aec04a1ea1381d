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

//! Finite modal algebras and their duality with finite frames.
//!
//! A finite Boolean algebra is the powerset of its atoms, so an element is a
//! set of atoms. The operator is stored through its additive dual `m` on
//! atoms; `l(a) = ¬m(¬a)`. Ultrafilters of a finite Boolean algebra are the
//! principal filters at atoms and are identified with those atoms.

use std::collections::BTreeMap;

use crate::bits::{self, Bits, MAX_BITS};
use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::Formula;
use crate::frame::{self, BoundedMorphism, Frame};
use crate::limits::Limits;

/// Values assigned to formula variables, as elements of an algebra.
pub type Assignment = BTreeMap<u32, Bits>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModalAlgebra {
    diamond: Vec<Bits>,
}

impl ModalAlgebra {
    /// `diamond[b]` is `m({b})`, the atoms below the diamond of atom `b`.
    pub fn new(diamond: Vec<Bits>) -> Result<ModalAlgebra> {
        let k = diamond.len();
        if k == 0 {
            return Err(Error::InvalidAlgebra(
                "an algebra needs at least one atom".into(),
            ));
        }
        if k > MAX_BITS {
            return Err(Error::InvalidAlgebra(format!(
                "{k} atoms exceeds the representable {MAX_BITS}"
            )));
        }
        let mask = bits::full(k);
        if let Some((b, d)) = diamond.iter().enumerate().find(|(_, d)| **d & !mask != 0) {
            let bad = bits::iter(d & !mask).next().unwrap_or(0);
            return Err(Error::InvalidAlgebra(format!(
                "diamond of atom {b} lists atom {bad} of {k}"
            )));
        }
        Ok(ModalAlgebra { diamond })
    }

    pub fn atoms(&self) -> usize {
        self.diamond.len()
    }

    pub fn diamond_table(&self) -> &[Bits] {
        &self.diamond
    }

    pub fn top(&self) -> Bits {
        bits::full(self.atoms())
    }

    pub fn complement(&self, a: Bits) -> Bits {
        !a & self.top()
    }

    /// `m(a)`: union of the atom diamonds over the atoms of `a`.
    pub fn m(&self, a: Bits) -> Bits {
        bits::iter(a).fold(0, |acc, b| acc | self.diamond[b])
    }

    /// The box operator.
    pub fn l(&self, a: Bits) -> Bits {
        self.complement(self.m(self.complement(a)))
    }

    /// Number of elements, `2^k`, when it fits.
    pub fn size(&self) -> Option<u64> {
        1u64.checked_shl(self.atoms() as u32)
    }

    /// Every element, ascending. Callers bound `atoms()` first.
    pub fn elements(&self) -> impl Iterator<Item = Bits> {
        assert!(
            self.atoms() < 64,
            "element enumeration needs fewer than 64 atoms"
        );
        0..1u64 << self.atoms()
    }

    /// The term function of `f` at an assignment of its variables.
    pub fn evaluate(&self, f: &Formula, assignment: &Assignment) -> Bits {
        let prog = Program::compile(f);
        let slots: Vec<Bits> = prog
            .vars
            .iter()
            .map(|v| assignment.get(v).copied().unwrap_or(0))
            .collect();
        prog.eval(&slots, self.top(), |a| self.l(a))
    }
}

/// The complex algebra: all subsets of the worlds with `l_R`. The atom
/// diamond of world `b` is its predecessor set.
pub fn cm(fr: &Frame) -> ModalAlgebra {
    ModalAlgebra {
        diamond: (0..fr.len()).map(|b| fr.predecessors(b)).collect(),
    }
}

/// The canonical frame: ultrafilters (atoms) with `p R q` iff `p ∈ m({q})`.
pub fn cf(alg: &ModalAlgebra) -> Frame {
    let k = alg.atoms();
    let succ = (0..k)
        .map(|p| {
            (0..k)
                .filter(|&q| bits::contains(alg.diamond[q], p))
                .fold(0, |acc, q| acc | bits::singleton(q))
        })
        .collect();
    Frame::from_successors(succ).expect("atom count already validated")
}

/// The canonical frame relation read off the ultrafilter definition:
/// `F R G` iff `{a : l(a) ∈ F} ⊆ G`, with `F` and `G` the principal
/// ultrafilters at two atoms. Quantifies over every element, so it is only
/// used to cross-check [`cf`].
pub fn cf_by_ultrafilters(alg: &ModalAlgebra, limits: &Limits) -> Result<Frame> {
    let k = alg.atoms();
    limits.check_power(
        || format!("elements of an algebra with {k} atoms"),
        2,
        k as u64,
    )?;
    let lifted: Vec<(Bits, Bits)> = alg.elements().map(|a| (a, alg.l(a))).collect();
    let succ = (0..k)
        .map(|p| {
            (0..k)
                .filter(|&q| {
                    lifted
                        .iter()
                        .filter(|(_, la)| bits::contains(*la, p))
                        .all(|(a, _)| bits::contains(*a, q))
                })
                .fold(0, |acc, q| acc | bits::singleton(q))
        })
        .collect();
    Frame::from_successors(succ)
}

/// The canonical embedding algebra `Cm(Cf(alg))`.
pub fn em(alg: &ModalAlgebra) -> ModalAlgebra {
    cm(&cf(alg))
}

/// Isomorphism of finite modal algebras, decided on their canonical frames.
/// Returns the atom bijection.
pub fn algebras_isomorphic(a: &ModalAlgebra, b: &ModalAlgebra) -> Option<Vec<usize>> {
    frame::is_isomorphic(&cf(a), &cf(b))
}

/// The first falsifying assignment of `f` in `alg`, or `None` when the
/// equation `f = 1` holds. Assignments are tried in the same lexicographic
/// order as valuations in [`frame::frame_valid`].
pub fn algebra_validates(
    alg: &ModalAlgebra,
    f: &Formula,
    limits: &Limits,
) -> Result<Option<Assignment>> {
    if alg.atoms() > limits.max_atoms {
        return Err(Error::CapExceeded {
            what: "algebra",
            size: alg.atoms(),
            unit: "atoms",
            cap: limits.max_atoms,
        });
    }
    let prog = Program::compile(f);
    let k = alg.atoms();
    let v = prog.vars.len();
    let total = limits.check_power(
        || format!("assignments of {f} in {k} atoms"),
        2,
        (k * v) as u64,
    )?;
    let top = alg.top();
    let mut slots = vec![0; v];
    for code in 0..total {
        for (j, slot) in slots.iter_mut().enumerate() {
            *slot = (code >> ((v - 1 - j) * k)) & top;
        }
        if prog.eval(&slots, top, |a| alg.l(a)) != top {
            return Ok(Some(
                prog.vars
                    .iter()
                    .copied()
                    .zip(slots.iter().copied())
                    .collect(),
            ));
        }
    }
    Ok(None)
}

/// A homomorphism `source → target`, stored as its dual map on atoms:
/// `dual_atom_map[q]` is the source atom whose principal ultrafilter is the
/// preimage of the ultrafilter at target atom `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: ModalAlgebra,
    target: ModalAlgebra,
    dual_atom_map: Vec<usize>,
}

fn check_dual_map(source: &ModalAlgebra, target: &ModalAlgebra, map: &[usize]) -> Result<()> {
    if map.len() != target.atoms() {
        return Err(Error::MalformedMap(format!(
            "dual atom map has {} entries for a target with {} atoms",
            map.len(),
            target.atoms()
        )));
    }
    if let Some((q, &p)) = map.iter().enumerate().find(|(_, &p)| p >= source.atoms()) {
        return Err(Error::MalformedMap(format!(
            "target atom {q} maps to {p}, but the source has {} atoms",
            source.atoms()
        )));
    }
    Ok(())
}

/// `θ(a) = {q : map[q] ∈ a}`.
fn induced(map: &[usize], a: Bits) -> Bits {
    map.iter()
        .enumerate()
        .filter(|(_, &p)| bits::contains(a, p))
        .fold(0, |acc, (q, _)| acc | bits::singleton(q))
}

/// Structural test: the dual map is a bounded morphism `Cf(target) →
/// Cf(source)`.
pub fn is_homomorphism(
    source: &ModalAlgebra,
    target: &ModalAlgebra,
    map: &[usize],
) -> Result<bool> {
    check_dual_map(source, target, map)?;
    frame::is_bounded_morphism(map, &cf(target), &cf(source))
}

/// Element-level test: the induced map preserves top, complement and
/// pairwise meets, and commutes with `l`, checked on every element (and
/// every pair) of the source.
pub fn is_homomorphism_exhaustive(
    source: &ModalAlgebra,
    target: &ModalAlgebra,
    map: &[usize],
    limits: &Limits,
) -> Result<bool> {
    check_dual_map(source, target, map)?;
    let k = source.atoms();
    limits.check_power(
        || format!("element pairs of an algebra with {k} atoms"),
        2,
        2 * k as u64,
    )?;
    let theta = |a| induced(map, a);
    if theta(source.top()) != target.top() {
        return Ok(false);
    }
    for a in source.elements() {
        if theta(source.complement(a)) != target.complement(theta(a)) {
            return Ok(false);
        }
        if theta(source.l(a)) != target.l(theta(a)) {
            return Ok(false);
        }
        for b in source.elements() {
            if theta(a & b) != theta(a) & theta(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl Homomorphism {
    pub fn new(
        source: ModalAlgebra,
        target: ModalAlgebra,
        dual_atom_map: Vec<usize>,
    ) -> Result<Homomorphism> {
        if !is_homomorphism(&source, &target, &dual_atom_map)? {
            let why = match BoundedMorphism::new(cf(&target), cf(&source), dual_atom_map) {
                Err(Error::InvalidMorphism(why)) => why,
                _ => "does not commute with the operator".into(),
            };
            return Err(Error::InvalidHomomorphism(format!(
                "dual map on atoms: {why}"
            )));
        }
        Ok(Homomorphism {
            source,
            target,
            dual_atom_map,
        })
    }

    pub fn identity(alg: &ModalAlgebra) -> Homomorphism {
        Homomorphism {
            source: alg.clone(),
            target: alg.clone(),
            dual_atom_map: (0..alg.atoms()).collect(),
        }
    }

    pub fn source(&self) -> &ModalAlgebra {
        &self.source
    }

    pub fn target(&self) -> &ModalAlgebra {
        &self.target
    }

    pub fn dual_atom_map(&self) -> &[usize] {
        &self.dual_atom_map
    }

    /// The element map `θ`.
    pub fn apply(&self, a: Bits) -> Bits {
        induced(&self.dual_atom_map, a)
    }

    /// Injective iff every source atom is hit by the dual map.
    pub fn is_injective(&self) -> bool {
        let hit = self
            .dual_atom_map
            .iter()
            .fold(0, |acc, &p| acc | bits::singleton(p));
        hit == self.source.top()
    }

    /// Surjective iff the dual map is injective.
    pub fn is_surjective(&self) -> bool {
        let hit = self
            .dual_atom_map
            .iter()
            .fold(0, |acc, &p| acc | bits::singleton(p));
        bits::count(hit) == self.dual_atom_map.len()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.target != other.source {
            return Err(Error::MalformedMap(
                "composition of homomorphisms with mismatched algebras".into(),
            ));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            dual_atom_map: other
                .dual_atom_map
                .iter()
                .map(|&q| self.dual_atom_map[q])
                .collect(),
        })
    }
}

/// The Jónsson–Tarski embedding `a ↦ {F : a ∈ F}` into `Em(alg)`. Since
/// `Cf(alg)` has the atoms of `alg` as its worlds, `a` goes to the set of
/// atoms below it.
pub fn jt_embedding(alg: &ModalAlgebra) -> Homomorphism {
    Homomorphism {
        source: alg.clone(),
        target: em(alg),
        dual_atom_map: (0..alg.atoms()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub algebra: ModalAlgebra,
    pub projections: Vec<Homomorphism>,
    /// First atom of each factor's block.
    pub offsets: Vec<usize>,
}

/// Atoms of the product are the disjoint union of the factors' atoms and
/// the operator acts blockwise.
pub fn direct_product(algs: &[ModalAlgebra], limits: &Limits) -> Result<Product> {
    if algs.is_empty() {
        return Err(Error::Empty("list of algebras"));
    }
    let total: usize = algs.iter().map(ModalAlgebra::atoms).sum();
    if total > limits.max_atoms || total > MAX_BITS {
        return Err(Error::CapExceeded {
            what: "direct product",
            size: total,
            unit: "atoms",
            cap: limits.max_atoms.min(MAX_BITS),
        });
    }
    let mut diamond = Vec::with_capacity(total);
    let mut offsets = Vec::with_capacity(algs.len());
    for a in algs {
        let offset = diamond.len();
        offsets.push(offset);
        diamond.extend(a.diamond.iter().map(|d| d << offset));
    }
    let algebra = ModalAlgebra { diamond };
    let projections = algs
        .iter()
        .zip(&offsets)
        .map(|(a, &offset)| Homomorphism {
            source: algebra.clone(),
            target: a.clone(),
            dual_atom_map: (offset..offset + a.atoms()).collect(),
        })
        .collect();
    Ok(Product {
        algebra,
        projections,
        offsets,
    })
}

/// `alg^I` for `|I| = count`.
pub fn direct_power(alg: &ModalAlgebra, count: usize, limits: &Limits) -> Result<Product> {
    direct_product(&vec![alg.clone(); count], limits)
}

/// The homomorphism `Cm(F') → Cm(F)` taking a set to its preimage under `g`.
pub fn dual_of_bounded_morphism(g: &BoundedMorphism) -> Homomorphism {
    Homomorphism {
        source: cm(g.target()),
        target: cm(g.source()),
        dual_atom_map: g.map().to_vec(),
    }
}

/// The bounded morphism `Cf(A') → Cf(A)` taking an ultrafilter to its
/// preimage; on atoms this is the stored dual map itself.
pub fn dual_of_homomorphism(h: &Homomorphism) -> BoundedMorphism {
    BoundedMorphism::new(cf(&h.target), cf(&h.source), h.dual_atom_map.clone())
        .expect("homomorphisms are validated on construction")
}

/// Every homomorphism from `source` to `target`, found as the bounded
/// morphisms between the canonical frames.
pub fn find_homomorphisms(
    source: &ModalAlgebra,
    target: &ModalAlgebra,
    limits: &Limits,
) -> Result<Vec<Homomorphism>> {
    let found = frame::find_bounded_morphisms(&cf(target), &cf(source), false, limits)?;
    Ok(found
        .into_iter()
        .map(|g| Homomorphism {
            source: source.clone(),
            target: target.clone(),
            dual_atom_map: g.map().to_vec(),
        })
        .collect())
}

/// One block of `Cf(A^I)`: the image of `Cf(A^U)` for the principal
/// ultrafilter `U` at `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerBlock {
    pub index: usize,
    /// The block's worlds in `Cf(A^I)`.
    pub worlds: Bits,
    pub subframe: frame::Subframe,
    /// Isomorphism from the block subframe onto `Cf(A)`.
    pub iso: Vec<usize>,
}

/// Splits `Cf(A^I)` into the inner subframes `Im φ_U`, one per ultrafilter
/// on `I`. A world `F` belongs to the block of `U = {J : χ_J ∈ F}`, where
/// `χ_J` is the characteristic element of `J ⊆ I`.
pub fn decompose_cf_of_power(
    alg: &ModalAlgebra,
    i_count: usize,
    limits: &Limits,
) -> Result<Vec<PowerBlock>> {
    if i_count == 0 {
        return Err(Error::Empty("index set"));
    }
    let subsets = limits.check_power(
        || format!("subsets of an index set of size {i_count}"),
        2,
        i_count as u64,
    )?;
    let power = direct_power(alg, i_count, limits)?;
    let big = cf(&power.algebra);
    let k = alg.atoms();
    let chi = |j: Bits| -> Bits {
        bits::iter(j).fold(0, |acc, i| acc | (bits::full(k) << power.offsets[i]))
    };

    let mut members: Vec<Bits> = vec![0; i_count];
    for world in 0..big.len() {
        let family: Vec<Bits> = (0..subsets)
            .filter(|&j| bits::contains(chi(j), world))
            .collect();
        // the family must be the principal ultrafilter at some index
        let index = (0..i_count)
            .find(|&i| {
                family.len() as u64 == subsets / 2 && family.iter().all(|j| bits::contains(*j, i))
            })
            .ok_or_else(|| {
                Error::Unsupported(format!(
                    "world {world} does not determine a principal ultrafilter"
                ))
            })?;
        members[index] |= bits::singleton(world);
    }

    let mut blocks = Vec::with_capacity(i_count);
    for (index, worlds) in members.into_iter().enumerate() {
        // φ_U is the dual of the projection onto factor `index`
        let phi = dual_of_homomorphism(&power.projections[index]);
        debug_assert_eq!(phi.image_set(), worlds);
        let subframe = big.restrict(worlds)?;
        let mut iso = vec![0; subframe.worlds.len()];
        for (q, &w) in phi.map().iter().enumerate() {
            let local = subframe
                .worlds
                .iter()
                .position(|&x| x == w)
                .expect("image lies in the block");
            iso[local] = q;
        }
        blocks.push(PowerBlock {
            index,
            worlds,
            subframe,
            iso,
        });
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{axioms, parse};

    fn f2() -> Frame {
        Frame::new(2, &[(0, 1)]).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cm_examples() {
        assert_eq!(cm(&Frame::reflexive_point()).diamond_table(), &[0b1]);
        assert_eq!(cm(&f2()).diamond_table(), &[0b00, 0b01]);
        assert_eq!(
            cm(&Frame::universal(2).unwrap()).diamond_table(),
            &[0b11, 0b11]
        );
    }

    #[test]
    fn cf_examples() {
        assert!(frame::is_isomorphic(&cf(&cm(&f2())), &f2()).is_some());
        assert_eq!(
            cf(&ModalAlgebra::new(vec![0b1]).unwrap()),
            Frame::reflexive_point()
        );
        assert_eq!(
            cf(&ModalAlgebra::new(vec![0, 0]).unwrap()),
            Frame::new(2, &[]).unwrap()
        );
    }

    #[test]
    fn cf_matches_ultrafilter_definition() {
        for table in 0..1u64 << 9 {
            let alg =
                ModalAlgebra::new((0..3).map(|b| (table >> (3 * b)) & 0b111).collect()).unwrap();
            assert_eq!(cf(&alg), cf_by_ultrafilters(&alg, &lim()).unwrap());
        }
    }

    #[test]
    fn em_examples() {
        for fr in [Frame::reflexive_point(), f2()] {
            let a = cm(&fr);
            assert!(algebras_isomorphic(&em(&a), &a).is_some());
            assert_eq!(em(&a).atoms(), a.atoms());
        }
    }

    #[test]
    fn rejects_bad_algebras() {
        assert!(ModalAlgebra::new(vec![]).is_err());
        assert!(ModalAlgebra::new(vec![0b10]).is_err());
    }

    #[test]
    fn operator_is_normal() {
        let a = cm(&Frame::new(3, &[(0, 1), (1, 2), (2, 2)]).unwrap());
        assert_eq!(a.l(a.top()), a.top());
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.l(x & y), a.l(x) & a.l(y));
            }
        }
    }

    #[test]
    fn jt_examples() {
        let a = cm(&Frame::reflexive_point());
        let h = jt_embedding(&a);
        assert_eq!(h.apply(0), 0);
        assert_eq!(h.apply(1), 1);
        let b = cm(&f2());
        let h = jt_embedding(&b);
        let images: std::collections::BTreeSet<Bits> = b.elements().map(|x| h.apply(x)).collect();
        assert_eq!(images.len(), 4);
        for x in b.elements() {
            assert_eq!(h.apply(b.l(x)), h.target().l(h.apply(x)));
        }
        assert!(is_homomorphism(h.source(), h.target(), h.dual_atom_map()).unwrap());
    }

    #[test]
    fn algebra_validity_examples() {
        let a = cm(&Frame::reflexive_point());
        assert_eq!(
            algebra_validates(&a, &parse("[]p0 <-> p0").unwrap(), &lim()).unwrap(),
            None
        );
        assert_eq!(
            algebra_validates(&a, &parse("p0 -> p0").unwrap(), &lim()).unwrap(),
            None
        );
        let b = cm(&f2());
        assert_eq!(
            algebra_validates(&b, &axioms::get(axioms::T), &lim()).unwrap(),
            Some(BTreeMap::from([(0, 0)]))
        );
    }

    #[test]
    fn product_examples() {
        let a = cm(&Frame::reflexive_point());
        let p = direct_product(&[a.clone(), a.clone()], &lim()).unwrap();
        assert_eq!(p.algebra.diamond_table(), &[0b01, 0b10]);
        assert_eq!(p.projections.len(), 2);
        for pr in &p.projections {
            assert!(is_homomorphism(pr.source(), pr.target(), pr.dual_atom_map()).unwrap());
            assert!(pr.is_surjective());
        }
        assert_eq!(direct_power(&a, 3, &lim()).unwrap().algebra.atoms(), 3);
        let tight = Limits {
            max_atoms: 2,
            ..Limits::default()
        };
        assert!(matches!(
            direct_power(&a, 3, &tight),
            Err(Error::CapExceeded { .. })
        ));
        assert!(direct_product(&[], &lim()).is_err());
    }

    #[test]
    fn dual_of_morphism_examples() {
        let f1 = Frame::reflexive_point();
        let two = frame::disjoint_union(&[f1.clone(), f1.clone()])
            .unwrap()
            .frame;
        let g = BoundedMorphism::new(two, f1, vec![0, 0]).unwrap();
        let theta = dual_of_bounded_morphism(&g);
        assert_eq!(theta.apply(0), 0);
        assert_eq!(theta.apply(1), 0b11);
        assert!(theta.is_injective());
        assert!(!theta.is_surjective());
        assert!(is_homomorphism(theta.source(), theta.target(), theta.dual_atom_map()).unwrap());

        let id = dual_of_bounded_morphism(&BoundedMorphism::identity(&f2()));
        assert_eq!(id, Homomorphism::identity(&cm(&f2())));
    }

    #[test]
    fn dual_of_homomorphism_examples() {
        let b = cm(&f2());
        let g = dual_of_homomorphism(&jt_embedding(&b));
        assert_eq!(g.map(), &[0, 1]);
        assert!(frame::is_isomorphism(g.source(), &f2(), g.map()));

        let p = direct_power(&b, 2, &lim()).unwrap();
        let inj = dual_of_homomorphism(&p.projections[1]);
        assert!(inj.is_injective());
        assert_eq!(inj.map(), &[2, 3]);

        let id = dual_of_homomorphism(&Homomorphism::identity(&b));
        assert_eq!(id, BoundedMorphism::identity(&f2()));
    }

    #[test]
    fn homomorphism_checks() {
        let b = cm(&f2());
        let e = cm(&Frame::irreflexive_point());
        // world 0 of F2 has a successor, the lone irreflexive world has none
        assert!(!is_homomorphism(&b, &e, &[0]).unwrap());
        assert!(!is_homomorphism_exhaustive(&b, &e, &[0], &lim()).unwrap());
        assert!(matches!(
            Homomorphism::new(b.clone(), e.clone(), vec![0]),
            Err(Error::InvalidHomomorphism(_))
        ));
        assert!(is_homomorphism(&b, &e, &[1]).unwrap());
        assert!(matches!(
            is_homomorphism(&b, &e, &[2]),
            Err(Error::MalformedMap(_))
        ));
        assert!(matches!(
            is_homomorphism(&b, &e, &[0, 0]),
            Err(Error::MalformedMap(_))
        ));
        let id = Homomorphism::identity(&b);
        assert!(is_homomorphism_exhaustive(&b, &b, id.dual_atom_map(), &lim()).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let a = cm(&Frame::reflexive_point());
        let blocks = decompose_cf_of_power(&a, 2, &lim()).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert_eq!(b.subframe.frame, Frame::reflexive_point());
        }
        assert_eq!(
            cf(&direct_power(&a, 2, &lim()).unwrap().algebra).edges(),
            vec![(0, 0), (1, 1)]
        );

        let b = cm(&f2());
        let blocks = decompose_cf_of_power(&b, 2, &lim()).unwrap();
        assert_eq!(
            blocks.iter().map(|b| b.worlds).collect::<Vec<_>>(),
            vec![0b0011, 0b1100]
        );
        for blk in &blocks {
            assert!(frame::is_isomorphism(&blk.subframe.frame, &f2(), &blk.iso));
        }

        let single = decompose_cf_of_power(&b, 1, &lim()).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].subframe.frame, cf(&b));
        assert!(decompose_cf_of_power(&b, 0, &lim()).is_err());
    }
}
