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

//! The standard translation into first-order logic over `R` and unary
//! predicates, checked against modal truth.

use std::collections::BTreeMap;

use modalkit::firstorder::{
    check_translation_equivalence, fo_satisfies, simplify, standard_translation,
};
use modalkit::{parse, Frame, Model};

fn main() -> modalkit::Result<()> {
    let m = Model::new(
        Frame::new(3, &[(0, 1), (0, 2), (1, 2)])?,
        [(0, 0b100), (1, 0b010)].into(),
    )?;
    for text in [
        "[]p0",
        "<>p1",
        "[]<>p0 -> <>[]p0",
        "[](p0 -> p1) -> ([]p0 -> []p1)",
    ] {
        let f = parse(text)?;
        let st = simplify(&standard_translation(&f, 0));
        println!("{text}\n  {st}");
        for w in 0..m.frame.len() {
            let fo = fo_satisfies(&m, &st, &BTreeMap::from([(0, w)]))?;
            assert!(check_translation_equivalence(&m, w, &f)?);
            println!("  world {w}: {fo}");
        }
    }
    Ok(())
}
