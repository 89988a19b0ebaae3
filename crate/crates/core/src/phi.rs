//! The weight sequence `w_n` and the closed formula for the minimal
//! Euclidean function on `Z[i]`.
//!
//! The weights are `w_{2k} = 3*2^k` and `w_{2k+1} = 4*2^k`. For a nonzero
//! `a + bi` with `2^j` exactly dividing both coordinates, let `a' = |a|/2^j`
//! and `b' = |b|/2^j`, and let `n` be the least index with
//! `max(a', b') + 2 <= w_n`. Then
//!
//! ```text
//! phi(a + bi) = n + 2j       if a' + b' + 3 <= w_{n+1}
//!             = n + 2j + 1   otherwise.
//! ```
//!
//! For comparison, the minimal Euclidean function on the plain integers is
//! `floor(log2 |x|)`: one less than the binary length. The role the binary
//! digits play there is played here by `(1+i)`-ary digits, with `w_n`
//! measuring how far the `n`-digit values reach along the axes.

use crate::gaussian::{GaussInt, UNITS};

/// The weight `w_n`: `3 * 2^k` for `n = 2k`, `4 * 2^k` for `n = 2k + 1`.
pub fn w(n: u32) -> u128 {
    let k = n / 2;
    let base: u128 = if n.is_multiple_of(2) { 3 } else { 4 };
    base.checked_shl(k).expect("weight w_n overflows u128")
}

/// The least `n` with `m <= w_n`.
///
/// Panics when `m < 3`; `w_0 = 3` is the smallest weight and every caller
/// passes `max(a', b') + 2 >= 3`.
pub fn least_level(m: u128) -> u32 {
    assert!(m >= 3, "least_level requires m >= 3, got {m}");
    let mut n = 0;
    while w(n) < m {
        n += 1;
    }
    n
}

/// The minimal Euclidean function on `Z[i]`, evaluated by closed formula.
///
/// Panics when `x` is zero; the function is defined on `Z[i] \ 0`.
pub fn phi(x: GaussInt) -> u32 {
    assert!(!x.is_zero(), "phi is undefined at 0");
    let j = x.two_adic_val();
    let a = (x.re.unsigned_abs() >> j) as u128;
    let b = (x.im.unsigned_abs() >> j) as u128;
    let n = least_level(a.max(b) + 2);
    if a + b + 3 <= w(n + 1) {
        n + 2 * j
    } else {
        n + 2 * j + 1
    }
}

/// One failed weight identity, reported by [`check_weight_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    /// The identity text, in weight-sequence notation.
    pub identity: &'static str,
    pub n: u32,
    /// Set for the identities quantified over `l`.
    pub l: Option<u32>,
}

/// Checks the weight-sequence identities the region geometry relies on, for
/// every `2 <= n <= n_max` and `0 <= l <= n`. Returns the empty vector when
/// all of them hold.
pub fn check_weight_identities(n_max: u32) -> Vec<IdentityViolation> {
    assert!(n_max >= 2, "check_weight_identities requires n_max >= 2");
    let mut violations = Vec::new();
    let mut fail = |identity: &'static str, n: u32, l: Option<u32>| {
        violations.push(IdentityViolation { identity, n, l });
    };
    for n in 2..=n_max {
        let gap = w(n + 1) - w(n);
        if w(n + 2) != 2 * w(n) {
            fail("w_{n+2} = 2 w_n", n, None);
        }
        if 2 * gap > w(n) {
            fail("2(w_{n+1} - w_n) <= w_n", n, None);
        }
        if 3 * gap > w(n + 1) {
            fail("3(w_{n+1} - w_n) <= w_{n+1}", n, None);
        }
        for l in 0..=n {
            let pow = 1u128.checked_shl(l).expect("2^l overflows u128");
            if 2 * pow < w(n) && l > n / 2 {
                fail("2^{l+1} < w_n  =>  l <= floor(n/2)", n, Some(l));
            }
            if 2 * pow <= w(n) && pow > gap {
                fail("2^{l+1} <= w_n  =>  2^l <= w_{n+1} - w_n", n, Some(l));
            }
            if gap <= pow && n.div_ceil(2) > l {
                fail("w_{n+1} - w_n <= 2^l  =>  floor((n+1)/2) <= l", n, Some(l));
            }
            if l <= n / 2 {
                if !(w(n) - pow).is_multiple_of(pow) {
                    fail("l <= floor(n/2)  =>  2^l | (w_n - 2^l)", n, Some(l));
                }
                if pow > gap {
                    fail("l <= floor(n/2)  =>  2^l <= w_{n+1} - w_n", n, Some(l));
                }
                if gap + pow > w(n) {
                    fail(
                        "l <= floor(n/2)  =>  w_{n+1} - w_n + 2^l <= w_n",
                        n,
                        Some(l),
                    );
                }
            }
        }
    }
    violations
}

/// `phi` is invariant under multiplication by units and under conjugation;
/// exposed for reuse by tests and the verifier.
pub fn phi_orbit(x: GaussInt) -> impl Iterator<Item = GaussInt> {
    UNITS.into_iter().flat_map(move |u| [u * x, u * x.conj()])
}
