//! Exact arithmetic for the minimal Euclidean function on the Gaussian
//! integers.
//!
//! The crate computes `phi`, the minimal Euclidean function on `Z[i]`, from a
//! closed formula driven by the weight sequence `w_n`, and backs every result
//! with independent machinery:
//!
//! * [`gaussian`] — exact Gaussian-integer arithmetic and symmetry helpers,
//! * [`phi`] — the weight sequence and the closed formula for `phi`,
//! * [`region`] — the nested octagonal sets `Oct_n`, `S_n`, `D_n`, `B_n` and
//!   the pre-image sets of `phi`,
//! * [`expansion`] — minimal `(1+i)`-ary digit expansions,
//! * [`motzkin`] — brute-force Motzkin set construction from coset
//!   surjection checks, the oracle used by `verify-lenstra`,
//! * [`counting`] — closed-form cardinalities of all the sets above,
//! * [`strategies`] — the naive and recursive counting strategies kept
//!   around as benchmark baselines.
//!
//! ```
//! use gaussphi::{expansion, phi, GaussInt};
//!
//! let x = GaussInt::new(4, 1);
//! assert_eq!(phi::phi(x), 2);
//!
//! let e = expansion::expand_min(x);
//! assert_eq!(e.to_string(), "1,1,-i");
//! assert_eq!(e.evaluate(), x);
//! assert_eq!(e.len(), 3); // phi(x) + 1 digits, never fewer
//! ```

pub mod counting;
pub mod error;
pub mod expansion;
pub mod gaussian;
pub mod motzkin;
pub mod phi;
pub mod region;
pub mod strategies;

pub use counting::CountRow;
pub use error::CapExceeded;
pub use expansion::{Digit, Expansion};
pub use gaussian::GaussInt;
pub use motzkin::{CosetDomain, MotzkinLevel};
pub use region::{RegionKind, RegionQuery, RegionSet};
