//! Minimal `(1+i)`-ary digit expansions.
//!
//! Every Gaussian integer is a finite sum `sum_j v_j (1+i)^j` with digits
//! `v_j` in `{0, +1, -1, +i, -i}`, and the least number of digits needed for
//! a nonzero `x` is exactly `phi(x) + 1`. The constructor here is greedy:
//! when the residual is divisible by `1+i` the digit is forced to zero,
//! otherwise the first unit (in the fixed order `+1, -1, +i, -i`) whose
//! quotient stays inside the right `B` set is taken, which makes the output
//! canonical. Minimal expansions are not unique in general, so the fixed
//! order is what keeps outputs reproducible.

use std::fmt;
use std::str::FromStr;

use crate::gaussian::GaussInt;
use crate::phi::phi;
use crate::region::{in_region, RegionKind, RegionQuery};

/// One expansion digit.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Digit {
    Zero,
    One,
    NegOne,
    I,
    NegI,
}

impl Digit {
    /// The nonzero digits, in canonical tie-break order.
    pub const UNITS: [Digit; 4] = [Digit::One, Digit::NegOne, Digit::I, Digit::NegI];

    pub fn value(self) -> GaussInt {
        match self {
            Digit::Zero => GaussInt::ZERO,
            Digit::One => GaussInt::ONE,
            Digit::NegOne => GaussInt::new(-1, 0),
            Digit::I => GaussInt::I,
            Digit::NegI => GaussInt::new(0, -1),
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Digit::Zero => "0",
            Digit::One => "1",
            Digit::NegOne => "-1",
            Digit::I => "i",
            Digit::NegI => "-i",
        })
    }
}

/// Error for unparseable digit text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDigitError(String);

impl fmt::Display for ParseDigitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid digit {:?}, expected one of 0, 1, -1, i, -i",
            self.0
        )
    }
}

impl std::error::Error for ParseDigitError {}

impl FromStr for Digit {
    type Err = ParseDigitError;
    fn from_str(s: &str) -> Result<Digit, ParseDigitError> {
        match s.trim() {
            "0" => Ok(Digit::Zero),
            "1" => Ok(Digit::One),
            "-1" => Ok(Digit::NegOne),
            "i" => Ok(Digit::I),
            "-i" => Ok(Digit::NegI),
            other => Err(ParseDigitError(other.to_owned())),
        }
    }
}

/// A finite digit sequence, little-endian: `digits[j]` multiplies `(1+i)^j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Expansion {
    digits: Vec<Digit>,
}

impl Expansion {
    pub fn new(digits: Vec<Digit>) -> Expansion {
        Expansion { digits }
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The represented Gaussian integer, `sum_j digits[j] * (1+i)^j`.
    pub fn evaluate(&self) -> GaussInt {
        let mut sum = GaussInt::ZERO;
        let mut power = GaussInt::ONE;
        for &d in &self.digits {
            sum = sum + d.value() * power;
            power = power * GaussInt::ONE_PLUS_I;
        }
        sum
    }
}

// Comma-separated digits, index 0 first: `0,0,0,0,-1`. The empty expansion
// renders as the empty string and represents 0.
impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, d) in self.digits.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for Expansion {
    type Err = ParseDigitError;
    fn from_str(s: &str) -> Result<Expansion, ParseDigitError> {
        if s.trim().is_empty() {
            return Ok(Expansion::default());
        }
        let digits = s
            .split(',')
            .map(Digit::from_str)
            .collect::<Result<_, _>>()?;
        Ok(Expansion { digits })
    }
}

fn unit_digit(x: GaussInt) -> Digit {
    Digit::UNITS
        .into_iter()
        .find(|d| d.value() == x)
        .expect("residual of a minimal expansion must end in a unit")
}

/// A minimal expansion of `x`: exactly `phi(x) + 1` digits, last digit
/// nonzero, canonical under the fixed digit order.
///
/// Panics when `x` is zero, and aborts loudly if no digit can be chosen at
/// some step, which would contradict the decomposition of the `B` sets.
pub fn expand_min(x: GaussInt) -> Expansion {
    assert!(!x.is_zero(), "expansion is undefined at 0");
    let n = phi(x);
    let mut digits = Vec::with_capacity(n as usize + 1);
    let mut residual = x;
    for remaining in (0..=n).rev() {
        if remaining == 0 {
            digits.push(unit_digit(residual));
            break;
        }
        if let Some(q) = residual.div_exact(GaussInt::ONE_PLUS_I) {
            digits.push(Digit::Zero);
            residual = q;
            continue;
        }
        let inner = RegionQuery::new(RegionKind::B, remaining - 1);
        let chosen = Digit::UNITS.into_iter().find_map(|d| {
            let q = (residual - d.value())
                .div_exact(GaussInt::ONE_PLUS_I)
                .expect("residual - unit is always divisible by 1+i here");
            in_region(inner, q).then_some((d, q))
        });
        match chosen {
            Some((d, q)) => {
                digits.push(d);
                residual = q;
            }
            None => unreachable!("no viable digit for {residual} with {remaining} digits left"),
        }
    }
    Expansion { digits }
}

/// Minimal expansion by exhaustive backtracking over digit strings of length
/// `phi(x) + 1`, kept as a slow debugging fallback for [`expand_min`]. Tries
/// digits in the same canonical order, so the two agree.
pub fn expand_min_backtracking(x: GaussInt) -> Expansion {
    assert!(!x.is_zero(), "expansion is undefined at 0");
    let n = phi(x);
    let mut digits = Vec::with_capacity(n as usize + 1);
    assert!(
        search(x, n, &mut digits),
        "no expansion of {x} with {} digits found",
        n + 1
    );
    Expansion { digits }
}

fn search(residual: GaussInt, remaining: u32, digits: &mut Vec<Digit>) -> bool {
    if remaining == 0 {
        let last = Digit::UNITS.into_iter().find(|d| d.value() == residual);
        if let Some(d) = last {
            digits.push(d);
            return true;
        }
        return false;
    }
    if let Some(q) = residual.div_exact(GaussInt::ONE_PLUS_I) {
        // A digit congruent to the residual mod 1+i is forced; here that is 0.
        digits.push(Digit::Zero);
        if search(q, remaining - 1, digits) {
            return true;
        }
        digits.pop();
        return false;
    }
    for d in Digit::UNITS {
        let q = (residual - d.value())
            .div_exact(GaussInt::ONE_PLUS_I)
            .expect("residual - unit is always divisible by 1+i here");
        digits.push(d);
        if search(q, remaining - 1, digits) {
            return true;
        }
        digits.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{enumerate_region, RegionKind, RegionQuery};

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn evaluate_examples() {
        let e = Expansion::new(vec![Digit::One, Digit::One, Digit::NegI]);
        assert_eq!(e.evaluate(), g(4, 1));
        let mut digits = vec![Digit::Zero; 4];
        digits.push(Digit::NegOne);
        assert_eq!(Expansion::new(digits).evaluate(), g(4, 0));
        assert_eq!(Expansion::default().evaluate(), GaussInt::ZERO);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_min(g(4, 0)).to_string(), "0,0,0,0,-1");
        assert_eq!(expand_min(GaussInt::I).to_string(), "i");
        let e = expand_min(g(4, 1));
        assert_eq!(e.len(), 3);
        assert_eq!(e.evaluate(), g(4, 1));
        assert_eq!(e.to_string(), "1,1,-i");
    }

    #[test]
    #[should_panic(expected = "undefined at 0")]
    fn expand_rejects_zero() {
        expand_min(GaussInt::ZERO);
    }

    #[test]
    fn round_trip_and_minimality_on_b6() {
        let b6 = enumerate_region(RegionQuery::new(RegionKind::B, 6), 30).unwrap();
        for &x in &b6.elements {
            if x.is_zero() {
                continue;
            }
            let e = expand_min(x);
            assert_eq!(e.evaluate(), x, "round trip fails at {x}");
            assert_eq!(e.len() as u32, phi(x) + 1, "length not minimal at {x}");
            assert_ne!(
                *e.digits().last().unwrap(),
                Digit::Zero,
                "trailing zero at {x}"
            );
        }
    }

    #[test]
    fn backtracking_agrees_with_greedy() {
        for re in -12..=12i64 {
            for im in -12..=12i64 {
                let x = g(re, im);
                if x.is_zero() {
                    continue;
                }
                assert_eq!(expand_min(x), expand_min_backtracking(x), "at {x}");
            }
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for x in [g(4, 1), g(-7, 3), g(0, -2), g(1, 1), g(12, -5)] {
            let e = expand_min(x);
            let parsed: Expansion = e.to_string().parse().unwrap();
            assert_eq!(parsed, e);
            assert_eq!(parsed.evaluate(), x);
        }
        assert_eq!("".parse::<Expansion>().unwrap(), Expansion::default());
        assert!(" 1, x".parse::<Expansion>().is_err());
    }
}
