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

//! Finite Kripke frames and models.
//!
//! Worlds are `0..n` and the accessibility relation is stored as one
//! successor set per world. Besides truth and validity this module has the
//! constructions that preserve modal validity: generated subframes, images
//! of bounded morphisms, disjoint unions and ultraproducts (principal only,
//! which is all a finite index set admits).

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::{self, Bits, MAX_BITS};
use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::Formula;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    succ: Vec<Bits>,
}

impl Frame {
    /// Builds a frame on `worlds` worlds from a list of `(source, target)`
    /// pairs.
    pub fn new(worlds: usize, edges: &[(usize, usize)]) -> Result<Frame> {
        check_world_count(worlds)?;
        let mut succ = vec![0; worlds];
        for &(a, b) in edges {
            for w in [a, b] {
                if w >= worlds {
                    return Err(Error::WorldOutOfRange { world: w, worlds });
                }
            }
            succ[a] |= bits::singleton(b);
        }
        Ok(Frame { succ })
    }

    pub fn from_successors(succ: Vec<Bits>) -> Result<Frame> {
        check_world_count(succ.len())?;
        let mask = bits::full(succ.len());
        if let Some(bad) = succ.iter().find(|s| **s & !mask != 0) {
            let world = bits::iter(bad & !mask).next().unwrap_or(0);
            return Err(Error::WorldOutOfRange {
                world,
                worlds: succ.len(),
            });
        }
        Ok(Frame { succ })
    }

    /// The one-world frame with a loop.
    pub fn reflexive_point() -> Frame {
        Frame { succ: vec![1] }
    }

    /// The one-world frame without a loop.
    pub fn irreflexive_point() -> Frame {
        Frame { succ: vec![0] }
    }

    /// `n` worlds, every pair related.
    pub fn universal(n: usize) -> Result<Frame> {
        check_world_count(n)?;
        Ok(Frame {
            succ: vec![bits::full(n); n],
        })
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    /// Frames always have at least one world.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn all(&self) -> Bits {
        bits::full(self.len())
    }

    pub fn successors(&self, a: usize) -> Bits {
        self.succ[a]
    }

    pub fn successor_sets(&self) -> &[Bits] {
        &self.succ
    }

    pub fn predecessors(&self, b: usize) -> Bits {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, s)| bits::contains(**s, b))
            .fold(0, |acc, (a, _)| acc | bits::singleton(a))
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        bits::contains(self.succ[a], b)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, s)| bits::iter(*s).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(|s| bits::count(*s)).sum()
    }

    /// `l_R(Y)`: the worlds all of whose successors lie in `y`.
    pub fn nec(&self, y: Bits) -> Bits {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, s)| **s & !y == 0)
            .fold(0, |acc, (a, _)| acc | bits::singleton(a))
    }

    /// Worlds with at least one successor in `y`.
    pub fn pos(&self, y: Bits) -> Bits {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, s)| **s & y != 0)
            .fold(0, |acc, (a, _)| acc | bits::singleton(a))
    }

    /// Smallest superset of `seeds` closed under successors.
    pub fn closure(&self, seeds: Bits) -> Bits {
        let mut reached = seeds;
        let mut frontier = seeds;
        while frontier != 0 {
            let next = bits::iter(frontier).fold(0, |acc, a| acc | self.succ[a]);
            frontier = next & !reached;
            reached |= next;
        }
        reached
    }

    /// Whether `set` is closed under successors.
    pub fn is_inner(&self, set: Bits) -> bool {
        bits::iter(set).all(|a| self.succ[a] & !set == 0)
    }

    /// The subframe on `set` with the restricted relation; worlds keep their
    /// relative order.
    pub fn restrict(&self, set: Bits) -> Result<Subframe> {
        if set == 0 {
            return Err(Error::Empty("world set"));
        }
        let worlds = bits::to_vec(set);
        let succ = worlds
            .iter()
            .map(|&a| {
                worlds
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| self.related(a, b))
                    .fold(0, |acc, (i, _)| acc | bits::singleton(i))
            })
            .collect();
        Ok(Subframe {
            frame: Frame { succ },
            worlds,
        })
    }

    /// Relabels worlds: world `a` of `self` becomes world `perm[a]`.
    pub fn permute(&self, perm: &[usize]) -> Frame {
        let mut succ = vec![0; self.len()];
        for (a, s) in self.succ.iter().enumerate() {
            succ[perm[a]] = bits::iter(*s).fold(0, |acc, b| acc | bits::singleton(perm[b]));
        }
        Frame { succ }
    }

    pub fn check_world(&self, a: usize) -> Result<()> {
        if a < self.len() {
            Ok(())
        } else {
            Err(Error::WorldOutOfRange {
                world: a,
                worlds: self.len(),
            })
        }
    }
}

fn check_world_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidFrame(
            "a frame needs at least one world".into(),
        ));
    }
    if n > MAX_BITS {
        return Err(Error::InvalidFrame(format!(
            "{n} worlds exceeds the representable {MAX_BITS}"
        )));
    }
    Ok(())
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} worlds {{", self.len())?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    valuation: BTreeMap<u32, Bits>,
}

impl Model {
    pub fn new(frame: Frame, valuation: BTreeMap<u32, Bits>) -> Result<Model> {
        let mask = frame.all();
        for set in valuation.values() {
            if set & !mask != 0 {
                let world = bits::iter(set & !mask).next().unwrap_or(0);
                return Err(Error::WorldOutOfRange {
                    world,
                    worlds: frame.len(),
                });
            }
        }
        Ok(Model { frame, valuation })
    }

    /// `V(p_i)`; unlisted variables are empty.
    pub fn value(&self, var: u32) -> Bits {
        self.valuation.get(&var).copied().unwrap_or(0)
    }

    pub fn valuation(&self) -> &BTreeMap<u32, Bits> {
        &self.valuation
    }

    /// The set of worlds at which `f` is true.
    pub fn extension(&self, f: &Formula) -> Bits {
        let prog = Program::compile(f);
        let slots: Vec<Bits> = prog.vars.iter().map(|v| self.value(*v)).collect();
        prog.eval(&slots, self.frame.all(), |y| self.frame.nec(y))
    }
}

/// `M, a |= f`.
pub fn truth(m: &Model, a: usize, f: &Formula) -> Result<bool> {
    m.frame.check_world(a)?;
    Ok(bits::contains(m.extension(f), a))
}

/// A falsifying valuation (of the formula's own variables) and world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub valuation: BTreeMap<u32, Bits>,
    pub world: usize,
}

impl Countermodel {
    /// The valuation as JSON text, e.g. `{"p0": [1]}`.
    pub fn valuation_json(&self) -> String {
        let entries: Vec<String> = self
            .valuation
            .iter()
            .map(|(v, set)| {
                let worlds: Vec<String> = bits::iter(*set).map(|w| w.to_string()).collect();
                format!("\"p{v}\": [{}]", worlds.join(", "))
            })
            .collect();
        format!("{{{}}}", entries.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Countermodel),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn countermodel(&self) -> Option<&Countermodel> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(c) => Some(c),
        }
    }
}

/// Decides `fr |= f` by running through every valuation of the variables
/// of `f`.
///
/// Valuations are visited in lexicographic order of `(V(p_first), ..,
/// V(p_last))`, each set read as a binary number, so the reported
/// countermodel is the least falsifying valuation together with the least
/// world it fails at.
pub fn frame_valid(fr: &Frame, f: &Formula, limits: &Limits) -> Result<Verdict> {
    if fr.len() > limits.max_worlds {
        return Err(Error::CapExceeded {
            what: "frame",
            size: fr.len(),
            unit: "worlds",
            cap: limits.max_worlds,
        });
    }
    let prog = Program::compile(f);
    let n = fr.len();
    let v = prog.vars.len();
    let total = limits.check_power(
        || format!("valuations of {f} on {n} worlds"),
        2,
        (n * v) as u64,
    )?;
    let all = fr.all();
    let mut slots = vec![0; v];
    for code in 0..total {
        for (j, slot) in slots.iter_mut().enumerate() {
            *slot = (code >> ((v - 1 - j) * n)) & all;
        }
        let ext = prog.eval(&slots, all, |y| fr.nec(y));
        if ext != all {
            let world = (!ext & all).trailing_zeros() as usize;
            let valuation = prog
                .vars
                .iter()
                .copied()
                .zip(slots.iter().copied())
                .collect();
            return Ok(Verdict::Invalid(Countermodel { valuation, world }));
        }
    }
    Ok(Verdict::Valid)
}

/// Whether `fr` validates every formula in `axioms`.
pub fn validates(fr: &Frame, axioms: &[Formula], limits: &Limits) -> Result<bool> {
    for ax in axioms {
        if !frame_valid(fr, ax, limits)?.is_valid() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A frame carved out of a larger one. `worlds[i]` is the index in the
/// parent of world `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subframe {
    pub frame: Frame,
    pub worlds: Vec<usize>,
}

/// The subframe generated by `seeds`.
pub fn generated_subframe(fr: &Frame, seeds: Bits) -> Result<Subframe> {
    if seeds == 0 {
        return Err(Error::Empty("seed set"));
    }
    if seeds & !fr.all() != 0 {
        let world = bits::iter(seeds & !fr.all()).next().unwrap_or(0);
        return Err(Error::WorldOutOfRange {
            world,
            worlds: fr.len(),
        });
    }
    fr.restrict(fr.closure(seeds))
}

/// Every successor-closed nonempty world set of `fr`, ascending.
pub fn inner_sets(fr: &Frame) -> Vec<Bits> {
    // Inner sets are exactly unions of point-generated sets.
    let generated: Vec<Bits> = (0..fr.len())
        .map(|a| fr.closure(bits::singleton(a)))
        .collect();
    let mut sets = std::collections::BTreeSet::new();
    let mut frontier = vec![0u64];
    sets.insert(0);
    while let Some(s) = frontier.pop() {
        for g in &generated {
            let t = s | g;
            if sets.insert(t) {
                frontier.push(t);
            }
        }
    }
    sets.remove(&0);
    sets.into_iter().collect()
}

fn check_map(map: &[usize], src: &Frame, tgt: &Frame) -> Result<()> {
    if map.len() != src.len() {
        return Err(Error::MalformedMap(format!(
            "map has {} entries for a source with {} worlds",
            map.len(),
            src.len()
        )));
    }
    if let Some((a, &b)) = map.iter().enumerate().find(|(_, &b)| b >= tgt.len()) {
        return Err(Error::MalformedMap(format!(
            "world {a} maps to {b}, but the target has {} worlds",
            tgt.len()
        )));
    }
    Ok(())
}

fn image_of(map: &[usize], set: Bits) -> Bits {
    bits::iter(set).fold(0, |acc, a| acc | bits::singleton(map[a]))
}

/// Forth: `aRb` implies `f(a) R' f(b)`. Back: `f(a) R' c` implies `c = f(b)`
/// for some `b` with `aRb`. Together they say `f[R(a)] = R'(f(a))`.
pub fn is_bounded_morphism(map: &[usize], src: &Frame, tgt: &Frame) -> Result<bool> {
    check_map(map, src, tgt)?;
    Ok((0..src.len()).all(|a| image_of(map, src.successors(a)) == tgt.successors(map[a])))
}

/// Describes the first failing condition, if any.
fn morphism_failure(map: &[usize], src: &Frame, tgt: &Frame) -> Option<String> {
    for a in 0..src.len() {
        let img = image_of(map, src.successors(a));
        let want = tgt.successors(map[a]);
        if let Some(b) = bits::iter(src.successors(a)).find(|&b| !tgt.related(map[a], map[b])) {
            return Some(format!(
                "forth fails: {a} R {b} but not {} R' {}",
                map[a], map[b]
            ));
        }
        if let Some(c) = bits::iter(want & !img).next() {
            return Some(format!(
                "back fails at {a}: {} R' {c} has no preimage successor",
                map[a]
            ));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedMorphism {
    source: Frame,
    target: Frame,
    map: Vec<usize>,
}

impl BoundedMorphism {
    pub fn new(source: Frame, target: Frame, map: Vec<usize>) -> Result<BoundedMorphism> {
        check_map(&map, &source, &target)?;
        if let Some(why) = morphism_failure(&map, &source, &target) {
            return Err(Error::InvalidMorphism(why));
        }
        Ok(BoundedMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(fr: &Frame) -> BoundedMorphism {
        BoundedMorphism {
            source: fr.clone(),
            target: fr.clone(),
            map: (0..fr.len()).collect(),
        }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn image_set(&self) -> Bits {
        image_of(&self.map, self.source.all())
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set() == self.target.all()
    }

    pub fn is_injective(&self) -> bool {
        bits::count(self.image_set()) == self.source.len()
    }

    /// `f(F)`: the image, an inner subframe of the target.
    pub fn image(&self) -> Subframe {
        self.target
            .restrict(self.image_set())
            .expect("frames are nonempty")
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &BoundedMorphism) -> Result<BoundedMorphism> {
        if self.target != other.source {
            return Err(Error::MalformedMap(
                "composition of morphisms with mismatched frames".into(),
            ));
        }
        Ok(BoundedMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.map[a]).collect(),
        })
    }
}

/// Every bounded morphism from `src` to `tgt`, in lexicographic order of
/// the map arrays.
pub fn find_bounded_morphisms(
    src: &Frame,
    tgt: &Frame,
    surjective_only: bool,
    limits: &Limits,
) -> Result<Vec<BoundedMorphism>> {
    limits.check_power(
        || format!("maps from {} worlds to {} worlds", src.len(), tgt.len()),
        tgt.len() as u64,
        src.len() as u64,
    )?;
    let mut found = Vec::new();
    let mut map = Vec::with_capacity(src.len());
    search_morphisms(src, tgt, &mut map, &mut |m| {
        if !surjective_only || image_of(m, src.all()) == tgt.all() {
            found.push(BoundedMorphism {
                source: src.clone(),
                target: tgt.clone(),
                map: m.to_vec(),
            });
        }
    });
    Ok(found)
}

fn search_morphisms(
    src: &Frame,
    tgt: &Frame,
    map: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let a = map.len();
    if a == src.len() {
        emit(map);
        return;
    }
    // Worlds with no successors must land on worlds with no successors,
    // and vice versa.
    let needs_succ = src.successors(a) != 0;
    for t in 0..tgt.len() {
        if (tgt.successors(t) != 0) != needs_succ {
            continue;
        }
        map.push(t);
        if partial_ok(src, tgt, map) {
            search_morphisms(src, tgt, map, emit);
        }
        map.pop();
    }
}

/// Checks forth on every assigned pair, and back on every assigned world
/// whose successors are all assigned.
fn partial_ok(src: &Frame, tgt: &Frame, map: &[usize]) -> bool {
    let a = map.len() - 1;
    let assigned = bits::full(map.len());
    for u in 0..map.len() {
        if src.related(u, a) && !tgt.related(map[u], map[a]) {
            return false;
        }
        if src.related(a, u) && !tgt.related(map[a], map[u]) {
            return false;
        }
    }
    for u in 0..map.len() {
        let s = src.successors(u);
        if s & !assigned == 0 && image_of(map, s) != tgt.successors(map[u]) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointUnion {
    pub frame: Frame,
    /// `injections[i][a]` is the union world holding world `a` of frame `i`.
    pub injections: Vec<Vec<usize>>,
}

pub fn disjoint_union(frames: &[Frame]) -> Result<DisjointUnion> {
    if frames.is_empty() {
        return Err(Error::Empty("list of frames"));
    }
    let total: usize = frames.iter().map(Frame::len).sum();
    check_world_count(total)?;
    let mut succ = Vec::with_capacity(total);
    let mut injections = Vec::with_capacity(frames.len());
    let mut offset = 0;
    for fr in frames {
        succ.extend(fr.succ.iter().map(|s| s << offset));
        injections.push((offset..offset + fr.len()).collect());
        offset += fr.len();
    }
    Ok(DisjointUnion {
        frame: Frame { succ },
        injections,
    })
}

/// Which ultrafilter on the index set to divide by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UltrafilterChoice {
    /// `{J : j ∈ J}`.
    Principal(usize),
    /// Only exists on infinite index sets.
    NonPrincipal,
}

/// A principal ultrafilter on `{0, .., size-1}`, as a membership test on
/// index subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ultrafilter {
    size: usize,
    at: usize,
}

impl Ultrafilter {
    pub fn new(size: usize, choice: UltrafilterChoice) -> Result<Ultrafilter> {
        match choice {
            UltrafilterChoice::NonPrincipal => Err(Error::Unsupported(
                "every ultrafilter on a finite index set is principal".into(),
            )),
            UltrafilterChoice::Principal(at) if at < size && size <= MAX_BITS => {
                Ok(Ultrafilter { size, at })
            }
            UltrafilterChoice::Principal(at) => Err(Error::MalformedMap(format!(
                "principal index {at} outside an index set of size {size}"
            ))),
        }
    }

    pub fn contains(&self, set: Bits) -> bool {
        bits::contains(set, self.at)
    }

    pub fn principal_index(&self) -> usize {
        self.at
    }

    fn agree(&self, pred: impl Fn(usize) -> bool) -> bool {
        self.contains(
            (0..self.size)
                .filter(|&i| pred(i))
                .fold(0, |acc, i| acc | bits::singleton(i)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ultraproduct {
    pub model: Model,
    /// The least tuple of each equivalence class, in class order.
    pub representatives: Vec<Vec<usize>>,
    /// Isomorphism onto the principal factor: class `c` goes to
    /// `representatives[c][j]`.
    pub iso: Vec<usize>,
}

/// Ultraproduct of models, built as a quotient of the full Cartesian
/// product. Only principal ultrafilters are accepted.
pub fn ultraproduct_models(
    models: &[Model],
    choice: UltrafilterChoice,
    limits: &Limits,
) -> Result<Ultraproduct> {
    if models.is_empty() {
        return Err(Error::Empty("list of models"));
    }
    let uf = Ultrafilter::new(models.len(), choice)?;
    let mut tuples: u64 = 1;
    for m in models {
        tuples = tuples
            .checked_mul(m.frame.len() as u64)
            .filter(|t| *t <= limits.max_search)
            .ok_or_else(|| Error::SearchSpaceExceeded {
                what: format!("Cartesian product of {} frames", models.len()),
                cap: limits.max_search,
            })?;
    }

    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut tuple = vec![0usize; models.len()];
    for _ in 0..tuples {
        let known = reps.iter().any(|r| uf.agree(|i| r[i] == tuple[i]));
        if !known {
            reps.push(tuple.clone());
        }
        // odometer, last coordinate fastest
        for i in (0..tuple.len()).rev() {
            tuple[i] += 1;
            if tuple[i] < models[i].frame.len() {
                break;
            }
            tuple[i] = 0;
        }
    }

    let succ: Vec<Bits> = reps
        .iter()
        .map(|f| {
            reps.iter()
                .enumerate()
                .filter(|(_, g)| uf.agree(|i| models[i].frame.related(f[i], g[i])))
                .fold(0, |acc, (c, _)| acc | bits::singleton(c))
        })
        .collect();
    let frame = Frame::from_successors(succ)?;
    let vars: std::collections::BTreeSet<u32> = models
        .iter()
        .flat_map(|m| m.valuation.keys().copied())
        .collect();
    let valuation = vars
        .into_iter()
        .map(|p| {
            let set = reps
                .iter()
                .enumerate()
                .filter(|(_, f)| uf.agree(|i| bits::contains(models[i].value(p), f[i])))
                .fold(0, |acc, (c, _)| acc | bits::singleton(c));
            (p, set)
        })
        .collect();
    let iso = reps.iter().map(|r| r[uf.principal_index()]).collect();
    Ok(Ultraproduct {
        model: Model::new(frame, valuation)?,
        representatives: reps,
        iso,
    })
}

/// Ultraproduct of frames modulo the principal ultrafilter at `choice`.
pub fn ultraproduct_principal(
    frames: &[Frame],
    choice: UltrafilterChoice,
    limits: &Limits,
) -> Result<Ultraproduct> {
    let models: Vec<Model> = frames
        .iter()
        .map(|f| Model {
            frame: f.clone(),
            valuation: BTreeMap::new(),
        })
        .collect();
    ultraproduct_models(&models, choice, limits)
}

/// `Cf(Cm(fr))` together with its isomorphism onto `fr`. The world of the
/// extension at index `p` is the principal ultrafilter generated by `{p}`.
pub fn ultrafilter_extension(fr: &Frame) -> (Frame, Vec<usize>) {
    let ext = crate::algebra::cf(&crate::algebra::cm(fr));
    let iso: Vec<usize> = (0..ext.len()).collect();
    debug_assert!(is_isomorphism(&ext, fr, &iso));
    (ext, iso)
}

/// Whether `map` is a bijection from `a` onto `b` preserving and
/// reflecting the relation.
pub fn is_isomorphism(a: &Frame, b: &Frame, map: &[usize]) -> bool {
    a.len() == b.len()
        && map.len() == a.len()
        && map.iter().all(|&x| x < b.len())
        && bits::count(image_of(map, a.all())) == a.len()
        && (0..a.len()).all(|u| image_of(map, a.successors(u)) == b.successors(map[u]))
}

type Signature = (u32, u32, bool);

fn signature(fr: &Frame, a: usize) -> Signature {
    (
        fr.successors(a).count_ones(),
        fr.predecessors(a).count_ones(),
        fr.related(a, a),
    )
}

/// An isomorphism from `a` onto `b`, if there is one. Backtracking over
/// worlds of `a` in order, pruned by out-degree, in-degree and loops.
pub fn is_isomorphic(a: &Frame, b: &Frame) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edge_count() != b.edge_count() {
        return None;
    }
    let sig_a: Vec<Signature> = (0..a.len()).map(|u| signature(a, u)).collect();
    let sig_b: Vec<Signature> = (0..b.len()).map(|u| signature(b, u)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = Vec::with_capacity(a.len());
    if iso_search(a, b, &sig_a, &sig_b, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn iso_search(
    a: &Frame,
    b: &Frame,
    sig_a: &[Signature],
    sig_b: &[Signature],
    map: &mut Vec<usize>,
    used: Bits,
) -> bool {
    let u = map.len();
    if u == a.len() {
        return true;
    }
    for t in 0..b.len() {
        if bits::contains(used, t) || sig_a[u] != sig_b[t] {
            continue;
        }
        let consistent = (0..u).all(|w| {
            a.related(u, w) == b.related(t, map[w]) && a.related(w, u) == b.related(map[w], t)
        });
        if consistent {
            map.push(t);
            if iso_search(a, b, sig_a, sig_b, map, used | bits::singleton(t)) {
                return true;
            }
            map.pop();
        }
    }
    false
}

/// Every frame on `n` worlds, in order of the relation read as an
/// `n*n`-bit number with world 0's row least significant.
pub fn all_frames(n: usize) -> impl Iterator<Item = Frame> {
    assert!(
        (1..=8).contains(&n),
        "enumerating all frames is only feasible for tiny n"
    );
    let row = bits::full(n);
    (0..1u64 << (n * n)).map(move |code| Frame {
        succ: (0..n).map(|a| (code >> (a * n)) & row).collect(),
    })
}

/// The frame's relation as an `n*n`-bit number, world 0's row least
/// significant.
pub fn adjacency_code(fr: &Frame) -> u64 {
    let n = fr.len();
    fr.succ
        .iter()
        .enumerate()
        .fold(0, |acc, (a, s)| acc | s << (a * n))
}

/// Least adjacency code over all relabelings; two frames are isomorphic
/// iff their canonical codes agree. Only sensible for a handful of worlds.
pub fn canonical_code(fr: &Frame) -> u64 {
    let n = fr.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permutations(&mut perm, 0, &mut |p| {
        best = best.min(adjacency_code(&fr.permute(p)));
    });
    best
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// One representative per isomorphism class of frames with `1..=max` worlds,
/// the representative being the frame with the least code.
pub fn frames_up_to_iso(max: usize) -> Vec<Frame> {
    let mut out = Vec::new();
    for n in 1..=max {
        let mut seen = std::collections::BTreeSet::new();
        for fr in all_frames(n) {
            let code = canonical_code(&fr);
            if code == adjacency_code(&fr) && seen.insert(code) {
                out.push(fr);
            }
        }
    }
    out
}
