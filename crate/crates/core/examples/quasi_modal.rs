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

//! Recognizing quasi-modal sentences and watching them survive the frame
//! constructions.

use modalkit::firstorder::{frame_satisfies, is_quasi_modal, parse_fo};
use modalkit::frame::{disjoint_union, generated_subframe};
use modalkit::{bits, Frame};

fn main() -> modalkit::Result<()> {
    for text in [
        "forall x (x R x)",
        "forall x forall y (x R y -> y R x)",
        "forall x exists y (y R x)",
        "forall x forall y (x R y -> forall z (y R z -> x R z))",
        "forall x forall y forall z (x R y & y R z -> x R z)",
    ] {
        let q = is_quasi_modal(&parse_fo(text)?)?;
        match q.violation {
            None => println!("quasi-modal      {text}"),
            Some(why) => println!("not quasi-modal  {text}\n                 {why}"),
        }
    }

    let symmetric = parse_fo("forall x forall y (x R y -> y R x)")?;
    let fr = Frame::new(3, &[(0, 1), (1, 0), (2, 2)])?;
    let sub = generated_subframe(&fr, bits::singleton(2))?.frame;
    let union = disjoint_union(&[fr.clone(), sub.clone()])?.frame;
    for (name, g) in [("F", &fr), ("subframe", &sub), ("F + subframe", &union)] {
        println!(
            "{name:<13} {g}  symmetric: {}",
            frame_satisfies(g, &symmetric)?
        );
    }
    Ok(())
}
