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

//! Free algebras of varieties generated by finitely many finite frames.
//!
//! The variety generated by `Cm(F_1), .., Cm(F_m)` has as its `n`-generated
//! free algebra the subalgebra of
//!
//! ```text
//!     Π_{i, α} Cm(F_i)      (α ranging over assignments of n elements of Cm(F_i))
//! ```
//!
//! generated by the `n` coordinate elements `g_j = (α(j))_{i, α}`. Its
//! canonical frame is the level-`n` analogue of the canonical frame of the
//! logic of the frames: worlds correspond to the maximal consistent sets of
//! formulas in `p0 .. p(n-1)`.

use crate::algebra::{self, ModalAlgebra};
use crate::bits::{self, Bits};
use crate::error::{Error, Result};
use crate::formula::{render, Formula};
use crate::frame::{self, Countermodel, Frame};
use crate::limits::Limits;

/// A variety presented by generator frames, together with axioms that are
/// required to hold in all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyPresentation {
    generator_frames: Vec<Frame>,
    axioms: Vec<Formula>,
}

impl VarietyPresentation {
    /// Rejects presentations whose axioms fail in some generator frame.
    pub fn new(
        generator_frames: Vec<Frame>,
        axioms: Vec<Formula>,
        limits: &Limits,
    ) -> Result<VarietyPresentation> {
        if generator_frames.is_empty() {
            return Err(Error::Empty("list of generator frames"));
        }
        for ax in &axioms {
            for (i, fr) in generator_frames.iter().enumerate() {
                if !frame::frame_valid(fr, ax, limits)?.is_valid() {
                    return Err(Error::UnsoundAxiom {
                        axiom: render(ax),
                        frame: i,
                    });
                }
            }
        }
        Ok(VarietyPresentation {
            generator_frames,
            axioms,
        })
    }

    pub fn generator_frames(&self) -> &[Frame] {
        &self.generator_frames
    }

    pub fn axioms(&self) -> &[Formula] {
        &self.axioms
    }
}

/// One factor of the ambient product: generator frame `frame` with the
/// generators sent to `assignment`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Coordinate {
    pub frame: usize,
    pub assignment: Vec<Bits>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAlgebra {
    pub algebra: ModalAlgebra,
    /// The free generators, as elements of `algebra`.
    pub generators: Vec<Bits>,
    /// The factors of the product the algebra was cut out of.
    pub coordinates: Vec<Coordinate>,
    /// The ambient product and, for each free atom, the product atoms it
    /// is made of.
    pub product: ModalAlgebra,
    pub atom_blocks: Vec<Bits>,
}

impl FreeAlgebra {
    /// Embeds an element of the free algebra into the ambient product.
    pub fn to_product(&self, a: Bits) -> Bits {
        bits::iter(a).fold(0, |acc, i| acc | self.atom_blocks[i])
    }
}

/// Builds the product of all `(frame, assignment)` coordinates and the
/// coordinate elements of the `n` generators in it.
pub fn generator_product(
    pres: &VarietyPresentation,
    n: usize,
    limits: &Limits,
) -> Result<(ModalAlgebra, Vec<Bits>, Vec<Coordinate>)> {
    if n > limits.max_generators {
        return Err(Error::CapExceeded {
            what: "free algebra",
            size: n,
            unit: "generators",
            cap: limits.max_generators,
        });
    }
    let mut factors = Vec::new();
    let mut coordinates = Vec::new();
    let mut total_atoms = 0usize;
    for (i, fr) in pres.generator_frames.iter().enumerate() {
        let k = fr.len();
        let count = limits.check_power(
            || format!("assignments of {n} generators into {k} worlds"),
            2,
            (k * n) as u64,
        )?;
        total_atoms = total_atoms.saturating_add((count as usize).saturating_mul(k));
        if total_atoms > limits.max_atoms {
            return Err(Error::CapExceeded {
                what: "generator product",
                size: total_atoms,
                unit: "atoms",
                cap: limits.max_atoms,
            });
        }
        let cm = algebra::cm(fr);
        for code in 0..count {
            let assignment = (0..n)
                .map(|j| (code >> ((n - 1 - j) * k)) & bits::full(k))
                .collect();
            factors.push(cm.clone());
            coordinates.push(Coordinate {
                frame: i,
                assignment,
            });
        }
    }
    let product = algebra::direct_product(&factors, limits)?;
    let generators = (0..n)
        .map(|j| {
            coordinates
                .iter()
                .zip(&product.offsets)
                .fold(0, |acc, (c, &off)| acc | (c.assignment[j] << off))
        })
        .collect();
    Ok((product.algebra, generators, coordinates))
}

/// Atoms of the subalgebra of `alg` generated by `gens`: the coarsest
/// partition of `alg`'s atoms that separates the generators and whose
/// blocks have diamonds that are unions of blocks. Blocks come out sorted
/// by their least atom.
pub fn generated_atoms(alg: &ModalAlgebra, gens: &[Bits]) -> Vec<Bits> {
    let mut blocks = vec![alg.top()];
    let split = |blocks: &mut Vec<Bits>, by: Bits| {
        let mut changed = false;
        let mut next = Vec::with_capacity(blocks.len() + 1);
        for &b in blocks.iter() {
            let (inside, outside) = (b & by, b & !by);
            if inside != 0 && outside != 0 {
                next.push(inside);
                next.push(outside);
                changed = true;
            } else {
                next.push(b);
            }
        }
        *blocks = next;
        changed
    };
    for &g in gens {
        split(&mut blocks, g);
    }
    loop {
        let mut changed = false;
        let diamonds: Vec<Bits> = blocks.iter().map(|&b| alg.m(b)).collect();
        for d in diamonds {
            changed |= split(&mut blocks, d);
        }
        if !changed {
            break;
        }
    }
    blocks.sort_by_key(|b| b.trailing_zeros());
    blocks
}

/// The `n`-generated free algebra of the variety of `pres`.
pub fn free_algebra(pres: &VarietyPresentation, n: usize, limits: &Limits) -> Result<FreeAlgebra> {
    let (product, gens, coordinates) = generator_product(pres, n, limits)?;
    let blocks = generated_atoms(&product, &gens);
    let local = |element: Bits| -> Bits {
        blocks
            .iter()
            .enumerate()
            .filter(|(_, &b)| b & element != 0)
            .fold(0, |acc, (i, _)| acc | bits::singleton(i))
    };
    let diamond = blocks.iter().map(|&b| local(product.m(b))).collect();
    let algebra = ModalAlgebra::new(diamond)?;
    let generators = gens.iter().map(|&g| local(g)).collect();
    Ok(FreeAlgebra {
        algebra,
        generators,
        coordinates,
        product,
        atom_blocks: blocks,
    })
}

/// `Cf` of the `n`-generated free algebra.
pub fn canonical_frame_level_n(
    pres: &VarietyPresentation,
    n: usize,
    limits: &Limits,
) -> Result<Frame> {
    Ok(algebra::cf(&free_algebra(pres, n, limits)?.algebra))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Formula,
    pub countermodel: Option<Countermodel>,
}

impl AxiomVerdict {
    pub fn is_valid(&self) -> bool {
        self.countermodel.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicityReport {
    pub generators: usize,
    pub atoms: usize,
    /// `2^atoms`.
    pub size: u64,
    pub frame: Frame,
    pub verdicts: Vec<AxiomVerdict>,
}

impl CanonicityReport {
    /// Whether the level-`n` canonical frame validates every axiom.
    pub fn canonical(&self) -> bool {
        self.verdicts.iter().all(AxiomVerdict::is_valid)
    }
}

fn verdicts(fr: &Frame, axioms: &[Formula], limits: &Limits) -> Result<Vec<AxiomVerdict>> {
    axioms
        .iter()
        .map(|ax| {
            Ok(AxiomVerdict {
                axiom: ax.clone(),
                countermodel: frame::frame_valid(fr, ax, limits)?.countermodel().cloned(),
            })
        })
        .collect()
}

/// Checks every axiom on the level-`n` canonical frame.
pub fn canonicity_report(
    pres: &VarietyPresentation,
    n: usize,
    limits: &Limits,
) -> Result<CanonicityReport> {
    let free = free_algebra(pres, n, limits)?;
    let fr = algebra::cf(&free.algebra);
    let atoms = free.algebra.atoms();
    Ok(CanonicityReport {
        generators: n,
        atoms,
        size: 1u64 << atoms,
        verdicts: verdicts(&fr, &pres.axioms, limits)?,
        frame: fr,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerProbe {
    pub generators: usize,
    pub i_count: usize,
    /// `Cf(A^I)`.
    pub power_frame: Frame,
    /// `i_count` disjoint copies of `Cf(A)`.
    pub union_frame: Frame,
    /// Isomorphism from `power_frame` onto `union_frame`, when found.
    pub iso: Option<Vec<usize>>,
    pub power_verdicts: Vec<AxiomVerdict>,
    pub union_verdicts: Vec<AxiomVerdict>,
}

impl PowerProbe {
    pub fn isomorphic(&self) -> bool {
        self.iso.is_some()
    }
}

/// Compares `Cf(A^I)` with the disjoint union of `|I|` copies of `Cf(A)`
/// for `A` the `n`-generated free algebra. Over a finite index set every
/// ultrafilter is principal, so the two always agree.
pub fn power_commutation_probe(
    pres: &VarietyPresentation,
    n: usize,
    i_count: usize,
    limits: &Limits,
) -> Result<PowerProbe> {
    if i_count == 0 {
        return Err(Error::Empty("index set"));
    }
    let free = free_algebra(pres, n, limits)?;
    let power = algebra::direct_power(&free.algebra, i_count, limits)?;
    let power_frame = algebra::cf(&power.algebra);
    let base = algebra::cf(&free.algebra);
    let union_frame = frame::disjoint_union(&vec![base; i_count])?.frame;
    let iso = frame::is_isomorphic(&power_frame, &union_frame);
    Ok(PowerProbe {
        generators: n,
        i_count,
        power_verdicts: verdicts(&power_frame, &pres.axioms, limits)?,
        union_verdicts: verdicts(&union_frame, &pres.axioms, limits)?,
        power_frame,
        union_frame,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{axioms, parse};

    fn lim() -> Limits {
        Limits::default()
    }

    fn pres(frames: Vec<Frame>, axs: &[&str]) -> VarietyPresentation {
        VarietyPresentation::new(
            frames,
            axs.iter().map(|a| parse(a).unwrap()).collect(),
            &lim(),
        )
        .unwrap()
    }

    #[test]
    fn free_algebra_sizes() {
        let p = pres(vec![Frame::reflexive_point()], &[]);
        let sizes: Vec<u64> = (0..=2)
            .map(|n| free_algebra(&p, n, &lim()).unwrap().algebra.size().unwrap())
            .collect();
        assert_eq!(sizes, vec![2, 4, 16]);
        let one = free_algebra(&p, 1, &lim()).unwrap();
        assert_eq!(one.generators.len(), 1);
        assert_eq!(one.coordinates.len(), 2);
    }

    #[test]
    fn level_n_frames() {
        let p = pres(vec![Frame::reflexive_point()], &[]);
        assert_eq!(
            canonical_frame_level_n(&p, 1, &lim()).unwrap(),
            Frame::new(2, &[(0, 0), (1, 1)]).unwrap()
        );
        assert_eq!(
            canonical_frame_level_n(&p, 0, &lim()).unwrap(),
            Frame::reflexive_point()
        );
        let u = pres(vec![Frame::universal(2).unwrap()], &[]);
        assert_eq!(
            canonical_frame_level_n(&u, 0, &lim()).unwrap(),
            Frame::reflexive_point()
        );
    }

    #[test]
    fn reports() {
        let s5 = pres(
            vec![Frame::universal(2).unwrap()],
            &[axioms::T, axioms::FOUR, axioms::B],
        );
        let r = canonicity_report(&s5, 1, &lim()).unwrap();
        assert!(r.canonical());
        assert_eq!(r.verdicts.len(), 3);
        assert_eq!(r.frame.len(), r.atoms);

        let triv = pres(vec![Frame::reflexive_point()], &["[]p0 <-> p0"]);
        assert!(canonicity_report(&triv, 1, &lim()).unwrap().canonical());

        let f2 = Frame::new(2, &[(0, 1)]).unwrap();
        match VarietyPresentation::new(vec![f2], vec![axioms::get(axioms::T)], &lim()) {
            Err(Error::UnsoundAxiom { axiom, frame }) => {
                assert_eq!(axiom, "[]p0 -> p0");
                assert_eq!(frame, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn probes() {
        let p = pres(vec![Frame::reflexive_point()], &["[]p0 <-> p0"]);
        let probe = power_commutation_probe(&p, 1, 2, &lim()).unwrap();
        assert!(probe.isomorphic());
        assert!(probe
            .power_verdicts
            .iter()
            .chain(&probe.union_verdicts)
            .all(AxiomVerdict::is_valid));

        let f2 = pres(vec![Frame::new(2, &[(0, 1)]).unwrap()], &["[][]false"]);
        assert!(power_commutation_probe(&f2, 1, 2, &lim())
            .unwrap()
            .isomorphic());
        assert!(power_commutation_probe(&f2, 1, 1, &lim())
            .unwrap()
            .isomorphic());
    }

    #[test]
    fn caps() {
        let p = pres(vec![Frame::universal(3).unwrap()], &[]);
        assert!(matches!(
            free_algebra(&p, 2, &lim()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            free_algebra(&p, 4, &lim()),
            Err(Error::CapExceeded {
                unit: "generators",
                ..
            })
        ));
    }
}
