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

use serde::Deserialize;

/// Caps on the exhaustive searches. Every brute-force operation checks the
/// size of its search space against these before starting.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest frame accepted by validity checking and frame enumeration.
    pub max_worlds: usize,
    /// Largest algebra (in atoms) built by products and free algebras.
    pub max_atoms: usize,
    /// Largest number of cases any enumeration may visit: valuations,
    /// assignments, candidate maps or ultraproduct tuples.
    pub max_search: u64,
    /// Largest generator count accepted by free algebra construction.
    pub max_generators: usize,
    /// Largest number of candidate formulas tried by definability search.
    pub max_candidates: u64,
    /// Largest formula (in core nodes) definability search enumerates.
    pub max_formula_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_worlds: 16,
            max_atoms: 24,
            max_search: 1 << 24,
            max_generators: 3,
            max_candidates: 1 << 20,
            max_formula_size: 8,
        }
    }
}

impl Limits {
    /// Checks that `base^exp` cases fit under `max_search`.
    pub(crate) fn check_power(
        &self,
        what: impl FnOnce() -> String,
        base: u64,
        exp: u64,
    ) -> crate::Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..exp {
            total = match total.checked_mul(base) {
                Some(t) if t <= self.max_search => t,
                _ => {
                    return Err(crate::Error::SearchSpaceExceeded {
                        what: what(),
                        cap: self.max_search,
                    })
                }
            };
        }
        if total > self.max_search {
            return Err(crate::Error::SearchSpaceExceeded {
                what: what(),
                cap: self.max_search,
            });
        }
        Ok(total)
    }
}
