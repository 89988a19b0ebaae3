//! The two exponential counting strategies kept as benchmark baselines.
//!
//! The naive strategy rebuilds each Motzkin level from coset surjection
//! checks (see [`crate::motzkin::grow_level`]) and reads off
//! `|phi^{-1}(n)|` as the difference of consecutive level sizes. The
//! recursive strategy grows `B_n` from `B_{n-1}` by forming the sums
//! `u * (1+i)^n + b` over the four units and every known element, then
//! discarding duplicates. The closed form in [`crate::counting`] replaces
//! both.

use crate::gaussian::{GaussInt, UNITS};
use crate::region::push_orbit;

/// Practical ceiling for the naive strategy; each level multiplies the work
/// by roughly four.
pub const NAIVE_CAP: u32 = 8;

/// Practical ceiling for the recursive strategy; level 20 already holds
/// about 29 million elements.
pub const RECURSIVE_CAP: u32 = 20;

/// Incremental recursive construction of the sets `B_n`.
pub struct RecursiveBuilder {
    level: u32,
    elements: Vec<GaussInt>,
    next_power: GaussInt,
}

impl Default for RecursiveBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl RecursiveBuilder {
    /// Starts at level 0 with `{0, +-1, +-i}`.
    pub fn new() -> RecursiveBuilder {
        let mut elements = vec![GaussInt::ZERO];
        push_orbit(1, 0, &mut elements);
        elements.sort_unstable();
        RecursiveBuilder {
            level: 0,
            elements,
            next_power: GaussInt::ONE_PLUS_I,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// The current level's elements, sorted by `(re, im)`.
    pub fn elements(&self) -> &[GaussInt] {
        &self.elements
    }

    /// Advances one level and returns how many elements were new, which is
    /// `|phi^{-1}(level)|` for the level just built.
    pub fn advance(&mut self) -> usize {
        let mut sums = Vec::with_capacity(4 * self.elements.len());
        for u in UNITS {
            let digit = u * self.next_power;
            sums.extend(self.elements.iter().map(|&b| b + digit));
        }
        sums.sort_unstable();
        sums.dedup();

        let mut merged = Vec::with_capacity(self.elements.len() + sums.len());
        let mut added = 0usize;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.elements.len() || j < sums.len() {
            match (self.elements.get(i), sums.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    merged.push(a);
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a < b => {
                    merged.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    merged.push(b);
                    added += 1;
                    j += 1;
                }
                (Some(&a), None) => {
                    merged.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    merged.push(b);
                    added += 1;
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.elements = merged;
        self.level += 1;
        self.next_power = self.next_power * GaussInt::ONE_PLUS_I;
        added
    }
}
