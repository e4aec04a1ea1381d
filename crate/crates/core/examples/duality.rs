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

//! Complex algebras, canonical frames and the round trips between them.

use modalkit::algebra::{cf, cm, em, jt_embedding, ModalAlgebra};
use modalkit::frame::is_isomorphic;
use modalkit::Frame;

fn main() -> modalkit::Result<()> {
    let fr = Frame::new(3, &[(0, 1), (1, 2), (2, 2)])?;
    let alg = cm(&fr);
    println!("frame        {fr}");
    println!("cm diamond   {:?}", alg.diamond_table());
    for a in alg.elements() {
        println!(
            "  m({a:03b}) = {:03b}   l({a:03b}) = {:03b}",
            alg.m(a),
            alg.l(a)
        );
    }

    let back = cf(&alg);
    println!("cf(cm(F))    {back}  iso {:?}", is_isomorphic(&back, &fr));

    // an algebra given directly by its diamond on atoms
    let a = ModalAlgebra::new(vec![0b01, 0b11])?;
    let jt = jt_embedding(&a);
    println!("cf(A)        {}", cf(&a));
    println!("em(A) == A   {}", em(&a) == a);
    println!(
        "embedding    injective {} surjective {}",
        jt.is_injective(),
        jt.is_surjective()
    );
    Ok(())
}
