//! Closed-form cardinalities of `S_n`, `B_n`, and the pre-image sets of
//! `phi`.
//!
//! All counts are exact `u128` values; the leading terms grow like `4^(n/2)`,
//! which leaves 64-bit integers around `n = 62`.

use std::io::{self, Write};

use crate::phi::w;

/// One row of the summary table.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CountRow {
    pub n: u32,
    pub s_size: u128,
    pub b_size: u128,
    pub preimage_size: u128,
}

fn pow4(k: u32) -> u128 {
    1u128.checked_shl(2 * k).expect("count overflows u128")
}

fn pow2(k: u32) -> u128 {
    1u128.checked_shl(k).expect("count overflows u128")
}

/// `|S_n|`, evaluated through both published forms.
///
/// For `n >= 1` the quadratic form
/// `3(w_n - 2)^2 + 2(w_n - 2) - 6(w_n - w_{n-1})(w_n - w_{n-1} - 1)`
/// and the parity closed form (`42*4^k - 34*2^k + 8` at `n = 2k+1`,
/// `21*4^k - 24*2^k + 8` at `n = 2k`) are both computed and must agree, so a
/// transcription slip in either one trips an assertion.
pub fn s_size(n: u32) -> u128 {
    if n == 0 {
        return 4;
    }
    let side = w(n) - 2;
    let gap = w(n) - w(n - 1);
    let quadratic = 3 * side * side + 2 * side - 6 * gap * (gap - 1);
    let k = n / 2;
    let closed = if n % 2 == 1 {
        42 * pow4(k) + 8 - 34 * pow2(k)
    } else {
        21 * pow4(k) + 8 - 24 * pow2(k)
    };
    assert_eq!(quadratic, closed, "the two |S_n| forms disagree at n = {n}");
    closed
}

/// `|B_n|`, the number of Gaussian integers expressible with `n + 1` digits.
pub fn b_size(n: u32) -> u128 {
    match n {
        0 => 5,
        n if n % 2 == 0 => {
            let k = n / 2;
            28 * pow4(k) + 8 * k as u128 + 25 - 48 * pow2(k)
        }
        n => {
            let k = n / 2;
            14 * pow4(k + 1) + 8 * k as u128 + 29 - 34 * pow2(k + 1)
        }
    }
}

/// `|phi^{-1}(n)|`; `n = 0` counts all of `B_0`, matching the table
/// convention.
pub fn preimage_size(n: u32) -> u128 {
    match n {
        0 => 5,
        1 => 12,
        n if n % 2 == 0 => {
            let k = n / 2;
            14 * pow4(k) + 4 - 14 * pow2(k)
        }
        n => {
            let k = n / 2;
            28 * pow4(k) + 4 - 20 * pow2(k)
        }
    }
}

/// The rows `0..=n_max` of the summary table.
pub fn table(n_max: u32) -> Vec<CountRow> {
    (0..=n_max)
        .map(|n| CountRow {
            n,
            s_size: s_size(n),
            b_size: b_size(n),
            preimage_size: preimage_size(n),
        })
        .collect()
}

/// Writes rows as CSV with the header `n,s_size,b_size,preimage_size`.
pub fn write_csv<W: Write>(rows: &[CountRow], mut out: W) -> io::Result<()> {
    writeln!(out, "n,s_size,b_size,preimage_size")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{}",
            row.n, row.s_size, row.b_size, row.preimage_size
        )?;
    }
    Ok(())
}
