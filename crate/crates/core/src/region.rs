//! The nested octagonal sets `Oct_n`, `S_n`, `D_n`, `B_n` and the pre-image
//! sets of `phi`.
//!
//! With `w` the weight sequence,
//!
//! * `Oct_n` is the octagon `|x|,|y| <= w_n - 2`, `|x|+|y| <= w_{n+1} - 3`,
//! * `S_n` removes 0 and the points with both coordinates even,
//! * `D_n` removes 0 and the points with even coordinate sum,
//! * `B_n` is the set of values of `(1+i)`-ary expansions with `n+1` digits;
//!   its nonzero part decomposes as the disjoint union of `2^j * S_{n-2j}`
//!   over `0 <= j <= floor(n/2)`, which is how membership is decided here.

use crate::error::{check_cap, CapExceeded};
use crate::gaussian::GaussInt;
use crate::phi::w;

/// Which of the four nested set families a query refers to.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum RegionKind {
    Oct,
    S,
    D,
    B,
}

/// One concrete set: a family and a level.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct RegionQuery {
    pub kind: RegionKind,
    pub level: u32,
}

impl RegionQuery {
    pub fn new(kind: RegionKind, level: u32) -> RegionQuery {
        RegionQuery { kind, level }
    }
}

/// A fully enumerated region, sorted by `(re, im)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionSet {
    pub query: RegionQuery,
    pub elements: Vec<GaussInt>,
}

/// Default refusal level for enumerations; `|B_30|` already has around 10^9
/// elements.
pub const DEFAULT_ENUM_CAP: u32 = 30;

// Exact up to level 199; beyond that every representable point is inside,
// and the exact weight would eventually overflow.
fn weight_bound(level: u32) -> u128 {
    if level < 200 {
        w(level)
    } else {
        u128::MAX
    }
}

fn in_octagon(level: u32, a: u64, b: u64) -> bool {
    let (a, b) = (a as u128, b as u128);
    a <= weight_bound(level) - 2
        && b <= weight_bound(level) - 2
        && a + b <= weight_bound(level.saturating_add(1)) - 3
}

/// Membership test for any of the four families, in constant time.
pub fn in_region(q: RegionQuery, x: GaussInt) -> bool {
    let a = x.re.unsigned_abs();
    let b = x.im.unsigned_abs();
    match q.kind {
        RegionKind::Oct => in_octagon(q.level, a, b),
        RegionKind::S => !x.is_zero() && in_octagon(q.level, a, b) && (a | b) & 1 == 1,
        RegionKind::D => !x.is_zero() && in_octagon(q.level, a, b) && (a ^ b) & 1 == 1,
        RegionKind::B => {
            if x.is_zero() {
                return true;
            }
            let j = x.two_adic_val();
            j <= q.level / 2
                && in_region(
                    RegionQuery::new(RegionKind::S, q.level - 2 * j),
                    x.div_pow2_exact(j),
                )
        }
    }
}

/// Splits a nonzero member of `B_n` as `2^j * s` with `s` in `S_{n-2j}`.
///
/// The union is disjoint, so `j` is unique (it is the 2-adic valuation).
/// Returns `None` when `x` is not in `B_n`. Panics when `x` is zero.
pub fn decompose(x: GaussInt, level: u32) -> Option<(u32, GaussInt)> {
    assert!(!x.is_zero(), "decompose is undefined at 0");
    let j = x.two_adic_val();
    if j > level / 2 {
        return None;
    }
    let reduced = x.div_pow2_exact(j);
    if in_region(RegionQuery::new(RegionKind::S, level - 2 * j), reduced) {
        Some((j, reduced))
    } else {
        None
    }
}

/// Pushes the orbit of a canonical-octant point (`re >= im >= 0`) under
/// units and conjugation, without duplicates on the axes and diagonal.
pub(crate) fn push_orbit(re: i64, im: i64, out: &mut Vec<GaussInt>) {
    debug_assert!(re >= im && im >= 0);
    if re == 0 {
        out.push(GaussInt::ZERO);
    } else if im == 0 {
        out.extend([
            GaussInt::new(re, 0),
            GaussInt::new(-re, 0),
            GaussInt::new(0, re),
            GaussInt::new(0, -re),
        ]);
    } else if re == im {
        out.extend([
            GaussInt::new(re, re),
            GaussInt::new(re, -re),
            GaussInt::new(-re, re),
            GaussInt::new(-re, -re),
        ]);
    } else {
        out.extend([
            GaussInt::new(re, im),
            GaussInt::new(re, -im),
            GaussInt::new(-re, im),
            GaussInt::new(-re, -im),
            GaussInt::new(im, re),
            GaussInt::new(im, -re),
            GaussInt::new(-im, re),
            GaussInt::new(-im, -re),
        ]);
    }
}

/// Enumerates a region by scanning the canonical octant and expanding each
/// hit through the eight symmetries.
///
/// Refuses levels above `cap`.
pub fn enumerate_region(q: RegionQuery, cap: u32) -> Result<RegionSet, CapExceeded> {
    check_cap(q.level, cap)?;
    let coord_bound: i64 = (w(q.level) - 2)
        .try_into()
        .expect("level too large to enumerate");
    let sum_bound: i64 = (w(q.level + 1) - 3)
        .try_into()
        .expect("level too large to enumerate");
    let mut elements = Vec::new();
    for re in 0..=coord_bound {
        for im in 0..=re.min(sum_bound - re) {
            if in_region(q, GaussInt::new(re, im)) {
                push_orbit(re, im, &mut elements);
            }
        }
    }
    elements.sort_unstable();
    Ok(RegionSet { query: q, elements })
}

/// `phi^{-1}(n)` as the set difference `B_n \ B_{n-1}`, sorted.
///
/// `phi^{-1}(0)` is taken to be all of `B_0 = {0, +-1, +-i}`.
pub fn preimage(n: u32, cap: u32) -> Result<Vec<GaussInt>, CapExceeded> {
    check_cap(n, cap)?;
    let bn = enumerate_region(RegionQuery::new(RegionKind::B, n), cap)?;
    if n == 0 {
        return Ok(bn.elements);
    }
    let prev = enumerate_region(RegionQuery::new(RegionKind::B, n - 1), cap)?;
    Ok(sorted_difference(&bn.elements, &prev.elements))
}

/// `phi^{-1}(n)` built directly from its disjoint-union description:
/// for each `j`, the points with `2^j` exactly dividing both coordinates,
/// `|a|,|b| <= w_n - 2^{j+1}`, `|a|+|b| <= w_{n+1} - 3*2^j`, that violate the
/// same bounds one level down; for even `n = 2k` the four points
/// `+-2^k, +-2^k i` are added separately.
///
/// Must agree with [`preimage`]; the equality is asserted in tests.
pub fn preimage_direct(n: u32, cap: u32) -> Result<Vec<GaussInt>, CapExceeded> {
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(enumerate_region(RegionQuery::new(RegionKind::B, 0), cap)?.elements);
    }
    let k = n / 2;
    let j_max = if n.is_multiple_of(2) { k - 1 } else { k };
    let coord_bound: i64 = (w(n) - 2).try_into().expect("level too large to enumerate");
    let sum_bound: i64 = (w(n + 1) - 3)
        .try_into()
        .expect("level too large to enumerate");

    let mut elements = Vec::new();
    if n.is_multiple_of(2) {
        push_orbit(1i64 << k, 0, &mut elements);
    }
    for re in 1..=coord_bound {
        for im in 0..=re.min(sum_bound - re) {
            let x = GaussInt::new(re, im);
            let j = x.two_adic_val();
            if j > j_max {
                continue;
            }
            let (a, b) = (re as u128, im as u128);
            let pow = 1u128 << j;
            let inside = a <= w(n) - 2 * pow && a + b <= w(n + 1) - 3 * pow;
            let new_at_n = a > w(n - 1) - 2 * pow || a + b > w(n) - 3 * pow;
            if inside && new_at_n {
                push_orbit(re, im, &mut elements);
            }
        }
    }
    elements.sort_unstable();
    Ok(elements)
}

fn sorted_difference(a: &[GaussInt], b: &[GaussInt]) -> Vec<GaussInt> {
    let mut out = Vec::with_capacity(a.len().saturating_sub(b.len()));
    let mut it = b.iter().peekable();
    for &x in a {
        while it.peek().is_some_and(|&&y| y < x) {
            it.next();
        }
        if it.peek() != Some(&&x) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi::phi;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    fn q(kind: RegionKind, level: u32) -> RegionQuery {
        RegionQuery::new(kind, level)
    }

    #[test]
    fn membership_examples() {
        assert!(in_region(q(RegionKind::B, 2), g(4, 1)));
        assert!(!in_region(q(RegionKind::S, 2), GaussInt::ZERO));
        assert!(in_region(q(RegionKind::B, 4), g(4, 0)));
        assert!(!in_region(q(RegionKind::B, 3), g(4, 0)));
        assert!(in_region(q(RegionKind::Oct, 2), g(4, 1)));
        assert!(in_region(q(RegionKind::B, 0), GaussInt::ZERO));
    }

    #[test]
    fn membership_is_total_at_extreme_inputs() {
        let min = GaussInt::new(i64::MIN, 0);
        for kind in [RegionKind::Oct, RegionKind::S, RegionKind::D, RegionKind::B] {
            for level in [0, 124, 130, 1000, u32::MAX] {
                in_region(q(kind, level), min);
            }
        }
        // i64::MIN = -2^63, so its 2-adic valuation 63 exceeds any floor(n/2)
        // reachable before the saturated regime, yet huge levels admit it.
        assert!(!in_region(q(RegionKind::B, 124), min));
        assert!(in_region(q(RegionKind::B, 126), min));
        assert!(in_region(q(RegionKind::Oct, 126), min));
    }

    #[test]
    fn enumerate_small_sets() {
        let s0 = enumerate_region(q(RegionKind::S, 0), 30).unwrap();
        assert_eq!(s0.elements, vec![g(-1, 0), g(0, -1), g(0, 1), g(1, 0)]);
        assert_eq!(
            enumerate_region(q(RegionKind::B, 2), 30)
                .unwrap()
                .elements
                .len(),
            49
        );
        assert_eq!(
            enumerate_region(q(RegionKind::S, 2), 30)
                .unwrap()
                .elements
                .len(),
            44
        );
    }

    #[test]
    fn enumerate_respects_cap() {
        let err = enumerate_region(q(RegionKind::B, 9), 8).unwrap_err();
        assert_eq!(err, CapExceeded { level: 9, cap: 8 });
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(g(4, 0), 4), Some((2, g(1, 0))));
        assert_eq!(decompose(g(4, 1), 2), Some((0, g(4, 1))));
        assert_eq!(decompose(g(3, 3), 1), None);
    }

    #[test]
    #[should_panic(expected = "undefined at 0")]
    fn decompose_rejects_zero() {
        decompose(GaussInt::ZERO, 3);
    }

    #[test]
    fn preimage_level_one_is_the_twelve_new_elements() {
        let got = preimage(1, 30).unwrap();
        let mut expected = Vec::new();
        for (re, im) in [(1, 1), (2, 1)] {
            push_orbit(re, im, &mut expected);
        }
        expected.sort_unstable();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn preimage_sizes_match_published_counts() {
        assert_eq!(preimage(8, 30).unwrap().len(), 3364);
        assert_eq!(preimage(9, 30).unwrap().len(), 6852);
    }

    #[test]
    fn preimage_matches_direct_construction() {
        for n in 0..=10 {
            assert_eq!(
                preimage(n, 30).unwrap(),
                preimage_direct(n, 30).unwrap(),
                "pre-image constructions disagree at n = {n}"
            );
        }
    }

    #[test]
    fn phi_agrees_with_least_containing_level() {
        for re in -40..=40i64 {
            for im in -40..=40i64 {
                let x = g(re, im);
                if x.is_zero() {
                    continue;
                }
                let min_level = (0..).find(|&n| in_region(q(RegionKind::B, n), x)).unwrap();
                assert_eq!(phi(x), min_level, "at {x}");
            }
        }
    }

    #[test]
    fn regions_are_nested_and_form_a_chain() {
        for n in 0..=6 {
            let bound = (w(n + 1) - 2) as i64;
            for re in -bound..=bound {
                for im in -bound..=bound {
                    let x = g(re, im);
                    for kind in [RegionKind::Oct, RegionKind::S, RegionKind::D, RegionKind::B] {
                        if in_region(q(kind, n), x) {
                            assert!(
                                in_region(q(kind, n + 1), x),
                                "nesting fails: {kind:?} {n} {x}"
                            );
                        }
                    }
                    if in_region(q(RegionKind::D, n), x) {
                        assert!(in_region(q(RegionKind::S, n), x));
                    }
                    if in_region(q(RegionKind::S, n), x) {
                        assert!(in_region(q(RegionKind::B, n), x));
                    }
                    if in_region(q(RegionKind::B, n), x) {
                        assert!(in_region(q(RegionKind::Oct, n), x));
                    }
                }
            }
        }
    }

    #[test]
    fn membership_is_symmetry_invariant() {
        for n in 0..=5 {
            for kind in [RegionKind::Oct, RegionKind::S, RegionKind::D, RegionKind::B] {
                let set = enumerate_region(q(kind, n), 30).unwrap();
                for &x in &set.elements {
                    for y in crate::phi::phi_orbit(x) {
                        assert!(in_region(q(kind, n), y), "{kind:?} {n} {x} -> {y}");
                    }
                }
            }
        }
    }
}
