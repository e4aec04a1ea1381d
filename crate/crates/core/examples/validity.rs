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

//! Frame validity with countermodels, and the axioms that hold on a few
//! small frames.

use modalkit::formula::axioms;
use modalkit::frame::{frame_valid, Model, Verdict};
use modalkit::{parse, Frame, Limits};

fn main() -> modalkit::Result<()> {
    let limits = Limits::default();
    let chain = Frame::new(2, &[(0, 1)])?;
    let reflexive = Frame::reflexive_point();
    let cluster = Frame::universal(2)?;

    let named = [
        ("T", axioms::T),
        ("4", axioms::FOUR),
        ("B", axioms::B),
        ("5", axioms::FIVE),
        ("D", axioms::D),
        ("Grz", axioms::GRZ),
        ("McKinsey", axioms::MCKINSEY),
    ];
    for fr in [&chain, &reflexive, &cluster] {
        println!("{fr}");
        for (name, text) in named {
            let f = parse(text)?;
            match frame_valid(fr, &f, &limits)? {
                Verdict::Valid => println!("  {name:<9} valid"),
                Verdict::Invalid(c) => println!(
                    "  {name:<9} fails at world {} under {}",
                    c.world,
                    c.valuation_json()
                ),
            }
        }
    }

    // truth in one model, as opposed to validity
    let m = Model::new(chain, [(0, 0b10)].into())?;
    let f = parse("[]p0")?;
    println!(
        "V(p0) = {{1}}: []p0 holds at {:?}",
        modalkit::bits::to_vec(m.extension(&f))
    );
    Ok(())
}
