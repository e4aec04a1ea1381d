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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("world {world} out of range for a frame with {worlds} worlds")]
    WorldOutOfRange { world: usize, worlds: usize },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("search space of {what} exceeds the configured cap of {cap}")]
    SearchSpaceExceeded { what: String, cap: u64 },

    #[error("{what} has {size} {unit}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        unit: &'static str,
        cap: usize,
    },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("malformed map: {0}")]
    MalformedMap(String),

    #[error("not a bounded morphism: {0}")]
    InvalidMorphism(String),

    #[error("not a modal algebra homomorphism: {0}")]
    InvalidHomomorphism(String),

    #[error("unsupported at finite scale: {0}")]
    Unsupported(String),

    #[error("axiom `{axiom}` is not valid in generator frame {frame}")]
    UnsoundAxiom { axiom: String, frame: usize },

    #[error("unbound first-order variable v{0}")]
    UnboundVariable(u32),

    #[error("not a sentence: free variables {0:?}")]
    OpenFormula(Vec<u32>),

    #[error("enumeration budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
