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

//! Flattened formula evaluation over any powerset-like carrier.
//!
//! A formula is compiled once into postfix form with its variables mapped
//! to dense slots; evaluating it under an assignment is then a tight loop
//! over `u64` sets. Frames pass `l_R`, algebras pass their derived `l`.

use crate::bits::Bits;
use crate::formula::Formula;

#[derive(Debug, Clone, Copy)]
enum Op {
    Slot(usize),
    Bot,
    Imp,
    Box,
}

#[derive(Debug, Clone)]
pub(crate) struct Program {
    ops: Vec<Op>,
    /// Variable index held by each slot, ascending.
    pub vars: Vec<u32>,
}

impl Program {
    pub fn compile(f: &Formula) -> Program {
        let vars: Vec<u32> = f.variables().into_iter().collect();
        let mut ops = Vec::with_capacity(f.size());
        emit(f, &vars, &mut ops);
        Program { ops, vars }
    }

    pub fn eval(&self, slots: &[Bits], top: Bits, nec: impl Fn(Bits) -> Bits) -> Bits {
        let mut stack: Vec<Bits> = Vec::with_capacity(16);
        for op in &self.ops {
            match *op {
                Op::Slot(s) => stack.push(slots[s]),
                Op::Bot => stack.push(0),
                Op::Imp => {
                    let b = stack.pop().expect("well-formed program");
                    let a = stack.pop().expect("well-formed program");
                    stack.push((!a | b) & top);
                }
                Op::Box => {
                    let a = stack.pop().expect("well-formed program");
                    stack.push(nec(a));
                }
            }
        }
        stack.pop().expect("well-formed program")
    }
}

fn emit(f: &Formula, vars: &[u32], ops: &mut Vec<Op>) {
    match f {
        Formula::Var(i) => ops.push(Op::Slot(vars.binary_search(i).expect("collected variable"))),
        Formula::Bot => ops.push(Op::Bot),
        Formula::Imp(a, b) => {
            emit(a, vars, ops);
            emit(b, vars, ops);
            ops.push(Op::Imp);
        }
        Formula::Box(a) => {
            emit(a, vars, ops);
            ops.push(Op::Box);
        }
    }
}
