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

//! `Cf(A^I)` splits into `|I|` inner copies of `Cf(A)`.

use modalkit::algebra::{cf, cm, decompose_cf_of_power, direct_power};
use modalkit::frame::{disjoint_union, is_isomorphic};
use modalkit::{bits, Frame, Limits};

fn main() -> modalkit::Result<()> {
    let limits = Limits::default();
    let alg = cm(&Frame::new(2, &[(0, 1), (1, 1)])?);
    for i_count in 1..=3 {
        let power = cf(&direct_power(&alg, i_count, &limits)?.algebra);
        println!("|I| = {i_count}: cf(A^I) = {power}");
        let blocks = decompose_cf_of_power(&alg, i_count, &limits)?;
        for b in &blocks {
            println!(
                "  U at {}: worlds {:?} ~ cf(A) via {:?}",
                b.index,
                bits::to_vec(b.worlds),
                b.iso
            );
        }
        let parts: Vec<Frame> = blocks.into_iter().map(|b| b.subframe.frame).collect();
        let union = disjoint_union(&parts)?.frame;
        println!(
            "  union of blocks isomorphic: {}",
            is_isomorphic(&union, &power).is_some()
        );
    }
    Ok(())
}
