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

//! Subsets of a small universe packed into a machine word.
//!
//! Worlds of a frame and atoms of a modal algebra are both indexed from 0
//! and a set of them is a `u64`. Every constructor in the crate keeps the
//! universe at or below [`MAX_BITS`].

pub type Bits = u64;

pub const MAX_BITS: usize = 64;

/// The set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> Bits {
    debug_assert!(n <= MAX_BITS);
    if n == MAX_BITS {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn singleton(i: usize) -> Bits {
    1u64 << i
}

#[inline]
pub fn contains(set: Bits, i: usize) -> bool {
    set >> i & 1 == 1
}

#[inline]
pub fn count(set: Bits) -> usize {
    set.count_ones() as usize
}

/// Members in increasing order.
pub fn iter(mut set: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Bits {
    indices.into_iter().fold(0, |acc, i| acc | singleton(i))
}

pub fn to_vec(set: Bits) -> Vec<usize> {
    iter(set).collect()
}
