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

//! JSON file formats.
//!
//! ```text
//! frame         {"worlds": 2, "rel": [[0, 1]]}
//! model         {"worlds": 2, "rel": [[0, 1]], "val": {"p0": [1]}}
//! frame class   {"frames": [...]}  or  {"fo": "forall x (x R x)", "bound": 3}
//! algebra       {"atoms": 2, "diamond": [[], [0]]}
//! homomorphism  {"dual_atom_map": [0, 0]}
//! presentation  {"frames": [...], "axioms_file": "ax.txt"}
//! ```
//!
//! Indices are 0-based. An axioms file holds one formula per line; `#`
//! starts a comment line. A presentation's `axioms_file` is resolved
//! against the directory of the presentation file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{Homomorphism, ModalAlgebra};
use crate::bits::{self, Bits};
use crate::definability::FrameClass;
use crate::error::{Error, Result};
use crate::firstorder::parse_fo;
use crate::formula::{parse_axioms, Formula};
use crate::frame::{Frame, Model};
use crate::limits::Limits;
use crate::variety::VarietyPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameJson {
    pub worlds: usize,
    pub rel: Vec<[usize; 2]>,
}

impl FrameJson {
    pub fn from_frame(fr: &Frame) -> FrameJson {
        FrameJson {
            worlds: fr.len(),
            rel: fr.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_frame(&self) -> Result<Frame> {
        let edges: Vec<(usize, usize)> = self.rel.iter().map(|&[a, b]| (a, b)).collect();
        Frame::new(self.worlds, &edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelJson {
    pub worlds: usize,
    pub rel: Vec<[usize; 2]>,
    #[serde(default)]
    pub val: BTreeMap<String, Vec<usize>>,
}

impl ModelJson {
    pub fn from_model(m: &Model) -> ModelJson {
        let FrameJson { worlds, rel } = FrameJson::from_frame(&m.frame);
        ModelJson {
            worlds,
            rel,
            val: valuation_json(m.valuation()),
        }
    }

    pub fn to_model(&self) -> Result<Model> {
        let frame = FrameJson {
            worlds: self.worlds,
            rel: self.rel.clone(),
        }
        .to_frame()?;
        let mut valuation = BTreeMap::new();
        for (name, worlds) in &self.val {
            let mut set: Bits = 0;
            for &w in worlds {
                frame.check_world(w)?;
                set |= bits::singleton(w);
            }
            valuation.insert(variable_index(name)?, set);
        }
        Model::new(frame, valuation)
    }
}

/// `{"p0": [1]}` for a valuation or assignment.
pub fn valuation_json(v: &BTreeMap<u32, Bits>) -> BTreeMap<String, Vec<usize>> {
    v.iter()
        .map(|(k, set)| (format!("p{k}"), bits::to_vec(*set)))
        .collect()
}

fn variable_index(name: &str) -> Result<u32> {
    name.strip_prefix('p')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::MalformedMap(format!("valuation key {name:?} is not p<k>")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassJson {
    Frames { frames: Vec<FrameJson> },
    Fo { fo: String, bound: usize },
}

impl ClassJson {
    pub fn to_class(&self, limits: &Limits) -> Result<FrameClass> {
        match self {
            ClassJson::Frames { frames } => FrameClass::explicit(
                frames
                    .iter()
                    .map(FrameJson::to_frame)
                    .collect::<Result<_>>()?,
                limits,
            ),
            ClassJson::Fo { fo, bound } => FrameClass::fo(parse_fo(fo)?, *bound, limits),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub atoms: usize,
    pub diamond: Vec<Vec<usize>>,
}

impl AlgebraJson {
    pub fn from_algebra(alg: &ModalAlgebra) -> AlgebraJson {
        AlgebraJson {
            atoms: alg.atoms(),
            diamond: alg
                .diamond_table()
                .iter()
                .map(|&d| bits::to_vec(d))
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<ModalAlgebra> {
        if self.diamond.len() != self.atoms {
            return Err(Error::InvalidAlgebra(format!(
                "{} atoms but {} diamond entries",
                self.atoms,
                self.diamond.len()
            )));
        }
        let mut table = Vec::with_capacity(self.atoms);
        for (b, row) in self.diamond.iter().enumerate() {
            let mut set: Bits = 0;
            for &a in row {
                if a >= self.atoms {
                    return Err(Error::InvalidAlgebra(format!(
                        "diamond[{b}] names atom {a} of {}",
                        self.atoms
                    )));
                }
                set |= bits::singleton(a);
            }
            table.push(set);
        }
        ModalAlgebra::new(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomomorphismJson {
    pub dual_atom_map: Vec<usize>,
}

impl HomomorphismJson {
    pub fn to_homomorphism(
        &self,
        source: ModalAlgebra,
        target: ModalAlgebra,
    ) -> Result<Homomorphism> {
        Homomorphism::new(source, target, self.dual_atom_map.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub frames: Vec<FrameJson>,
    pub axioms_file: PathBuf,
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&read_text(path)?)?)
}

pub fn read_frame(path: &Path) -> Result<Frame> {
    read_json::<FrameJson>(path)?.to_frame()
}

pub fn read_model(path: &Path) -> Result<Model> {
    read_json::<ModelJson>(path)?.to_model()
}

pub fn read_algebra(path: &Path) -> Result<ModalAlgebra> {
    read_json::<AlgebraJson>(path)?.to_algebra()
}

pub fn read_homomorphism(
    path: &Path,
    source: ModalAlgebra,
    target: ModalAlgebra,
) -> Result<Homomorphism> {
    read_json::<HomomorphismJson>(path)?.to_homomorphism(source, target)
}

pub fn read_class(path: &Path, limits: &Limits) -> Result<FrameClass> {
    read_json::<ClassJson>(path)?.to_class(limits)
}

pub fn read_axioms(path: &Path) -> Result<Vec<Formula>> {
    parse_axioms(&read_text(path)?)
}

pub fn read_presentation(path: &Path, limits: &Limits) -> Result<VarietyPresentation> {
    let p: PresentationJson = read_json(path)?;
    let frames = p
        .frames
        .iter()
        .map(FrameJson::to_frame)
        .collect::<Result<Vec<_>>>()?;
    let axioms_path = path.parent().unwrap_or(Path::new("")).join(&p.axioms_file);
    VarietyPresentation::new(frames, read_axioms(&axioms_path)?, limits)
}

pub fn read_limits(path: &Path) -> Result<Limits> {
    toml::from_str(&read_text(path)?)
        .map_err(|e| Error::MalformedMap(format!("{}: {}", path.display(), e.message())))
}
