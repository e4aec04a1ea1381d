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

//! Free algebras of finitely generated varieties, their canonical frames
//! and the finite power probe.

use modalkit::formula::axioms;
use modalkit::variety::{
    canonicity_report, free_algebra, power_commutation_probe, VarietyPresentation,
};
use modalkit::{bits, Frame, Limits};

fn main() -> modalkit::Result<()> {
    let limits = Limits::default();
    let s5 = vec![
        axioms::get(axioms::T),
        axioms::get(axioms::FOUR),
        axioms::get(axioms::B),
    ];
    let pres = VarietyPresentation::new(vec![Frame::universal(2)?], s5, &limits)?;

    // two generators over the cluster would need a 32-atom product
    for n in 0..=1 {
        let free = free_algebra(&pres, n, &limits)?;
        let gens: Vec<Vec<usize>> = free.generators.iter().map(|&g| bits::to_vec(g)).collect();
        println!(
            "{n} generators: {} atoms from {} coordinates, generators {gens:?}",
            free.algebra.atoms(),
            free.coordinates.len(),
        );
    }
    let point = VarietyPresentation::new(vec![Frame::reflexive_point()], vec![], &limits)?;
    let free = free_algebra(&point, 2, &limits)?;
    println!(
        "reflexive point, 2 generators: {} elements",
        1u64 << free.algebra.atoms()
    );

    let report = canonicity_report(&pres, 1, &limits)?;
    println!("level-1 canonical frame {}", report.frame);
    for v in &report.verdicts {
        println!(
            "  {:<24} {}",
            v.axiom.to_string(),
            if v.is_valid() { "valid" } else { "fails" }
        );
    }

    let probe = power_commutation_probe(&pres, 1, 2, &limits)?;
    println!("cf(A^2) {}", probe.power_frame);
    println!("cf(A) + cf(A) {}", probe.union_frame);
    println!("isomorphic: {}", probe.isomorphic());
    Ok(())
}
