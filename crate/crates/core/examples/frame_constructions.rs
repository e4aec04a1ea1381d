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

//! Generated subframes, bounded morphisms, disjoint unions and principal
//! ultraproducts, with validity carried along.

use modalkit::frame::{
    disjoint_union, find_bounded_morphisms, frame_valid, generated_subframe, ultrafilter_extension,
    ultraproduct_principal, UltrafilterChoice,
};
use modalkit::{bits, parse, Frame, Limits};

fn main() -> modalkit::Result<()> {
    let limits = Limits::default();
    let four = parse("[]p0 -> [][]p0")?;
    let valid = |fr: &Frame| frame_valid(fr, &four, &limits).map(|v| v.is_valid());

    let fr = Frame::new(4, &[(0, 1), (0, 2), (1, 2), (3, 3)])?;
    println!("F          {fr}   4 valid: {}", valid(&fr)?);

    let sub = generated_subframe(&fr, bits::singleton(1))?;
    println!(
        "F from 1   {} on worlds {:?}   4 valid: {}",
        sub.frame,
        sub.worlds,
        valid(&sub.frame)?
    );

    let point = Frame::reflexive_point();
    let onto = find_bounded_morphisms(&fr, &point, true, &limits)?;
    println!("F onto a reflexive point: {} morphisms", onto.len());
    let cluster = Frame::universal(2)?;
    for g in find_bounded_morphisms(&cluster, &point, false, &limits)? {
        println!(
            "cluster -> point via {:?}, image {}",
            g.map(),
            g.image().frame
        );
    }

    let u = disjoint_union(&[fr.clone(), point.clone()])?;
    println!("F + point  {}   4 valid: {}", u.frame, valid(&u.frame)?);

    let up = ultraproduct_principal(
        &[point, fr.clone()],
        UltrafilterChoice::Principal(1),
        &limits,
    )?;
    println!(
        "ultraproduct at 1   {}  onto factor via {:?}",
        up.model.frame, up.iso
    );
    let (ue, iso) = ultrafilter_extension(&fr);
    println!("ue(F)      {ue}  via {iso:?}");
    Ok(())
}
