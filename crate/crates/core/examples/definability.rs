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

//! Closure checks and a brute-force search for defining formulas over
//! small frames.

use modalkit::definability::{closure_report, search_defining_formula, FrameClass, Violation};
use modalkit::firstorder::parse_fo;
use modalkit::{Frame, Limits};

fn main() -> modalkit::Result<()> {
    let limits = Limits::default();
    let classes = [
        (
            "reflexive",
            FrameClass::fo(parse_fo("forall x (x R x)")?, 3, &limits)?,
            1,
        ),
        (
            "transitive",
            FrameClass::fo(
                parse_fo("forall x forall y forall z (x R y & y R z -> x R z)")?,
                3,
                &limits,
            )?,
            2,
        ),
        (
            "serial",
            FrameClass::fo(parse_fo("forall x exists y (x R y)")?, 3, &limits)?,
            1,
        ),
        (
            "irreflexive",
            FrameClass::fo(parse_fo("forall x ~(x R x)")?, 3, &limits)?,
            2,
        ),
        (
            "one point",
            FrameClass::explicit(vec![Frame::reflexive_point()], &limits)?,
            1,
        ),
    ];
    for (name, class, depth) in classes {
        let report = closure_report(&class, 3, &limits)?;
        println!(
            "{name}: {} members up to 3 worlds, closed: {}",
            report.members,
            report.closed()
        );
        if let Some(v) = report.violations.first() {
            match v {
                Violation::Subframe { member, subframe } => {
                    println!("  subframe {subframe} of {member}")
                }
                Violation::Image { member, image, .. } => println!("  image {image} of {member}"),
                Violation::Union { left, right } => println!("  union of {left} and {right}"),
            }
        }
        match search_defining_formula(&class, 3, depth, 1, &limits)? {
            Some(f) => println!("  defined by {f}"),
            None => println!("  no defining formula within the search budget"),
        }
    }
    Ok(())
}
