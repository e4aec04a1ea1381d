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

//! A finite-model workbench for the duality between Kripke frames and modal
//! algebras.
//!
//! Everything here is finite and decided by exhaustive search, so each
//! construction can be checked against brute force on small instances:
//!
//! - [`formula`]: modal formulas, their concrete syntax and substitution.
//! - [`frame`]: frames, models, truth, validity and the validity-preserving
//!   frame constructions.
//! - [`algebra`]: modal algebras, `Cm`, `Cf`, `Em`, the Jónsson–Tarski
//!   embedding, dual morphisms and direct powers.
//! - `variety`: free algebras of varieties generated by finite frames and
//!   their canonical frames.
//! - `firstorder`: the standard translation, a first-order evaluator and the
//!   quasi-modal sentence recognizer.
//! - `definability`: closure checks and bounded search for defining formulas
//!   over finite frame classes.
//! - [`io`]: the JSON file formats.
//! - `cli`: the `modalkit` command line.

pub mod algebra;
pub mod bits;
pub mod cli;
pub mod definability;
pub mod error;
mod eval;
pub mod firstorder;
pub mod formula;
pub mod frame;
pub mod io;
pub mod limits;
pub mod variety;

pub use algebra::ModalAlgebra;
pub use error::{Error, Result};
pub use formula::{parse, render, Formula};
pub use frame::{Frame, Model};
pub use limits::Limits;
