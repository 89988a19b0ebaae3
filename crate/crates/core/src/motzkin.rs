//! Brute-force construction of the Motzkin sets of `Z[i]`.
//!
//! Level 0 is zero plus the units. Level `n` adds every `beta` such that the
//! previous level hits every residue class of `Z[i]/(beta)`; a surjection
//! from a set of size `N` forces `Nm(beta) <= N`, which bounds the candidate
//! search. The levels are closed under multiplication by units and under
//! conjugation, so only canonical-octant candidates are tested and whole
//! orbits are added at once.
//!
//! Residue classes are labelled through the rank-2 integer lattice spanned by
//! `m` and `i*m`, put in triangular (Hermite) form. That works for every
//! nonzero modulus; the two-squares fundamental domain `S u T` is kept as a
//! cross-check for canonical moduli.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{check_cap, CapExceeded};
use crate::gaussian::{GaussInt, UNITS};
use crate::region::{enumerate_region, push_orbit, RegionKind, RegionQuery};

/// Default refusal level for [`build_levels`]; each level multiplies the
/// work roughly by four.
pub const DEFAULT_ORACLE_CAP: u32 = 8;

/// One Motzkin level: the set of all elements admitted up to `level`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MotzkinLevel {
    pub level: u32,
    /// Sorted by `(re, im)`.
    pub elements: Vec<GaussInt>,
}

/// A fundamental domain for the cosets of a canonical modulus: an `a x a`
/// square next to a `b x b` square, `Nm(m)` points in total.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetDomain {
    pub modulus: GaussInt,
    pub points: Vec<GaussInt>,
}

/// Triangular basis for the lattice `m*Z[i]` viewed in `Z^2`: the lattice is
/// generated by `(p, 0)` and `(q, r)` with `0 <= q < p` and `p * r = Nm(m)`.
#[derive(Copy, Clone, Debug)]
struct LatticeBasis {
    p: i128,
    q: i128,
    r: i128,
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn lattice_basis(m: GaussInt) -> LatticeBasis {
    assert!(!m.is_zero(), "zero modulus has no residue classes");
    let a = m.re as i128;
    let b = m.im as i128;
    let nm = a * a + b * b;
    // The lattice is spanned by (a, b) and (-b, a). Its second coordinates
    // generate gcd(a, b) * Z; pick s*b + t*a = r and triangularize.
    let (r, s, t) = extended_gcd(b, a);
    let p = nm / r;
    let q = (s * a - t * b).rem_euclid(p);
    LatticeBasis { p, q, r }
}

fn reduce(basis: LatticeBasis, x: GaussInt) -> GaussInt {
    let (xr, xi) = (x.re as i128, x.im as i128);
    let k = xi.div_euclid(basis.r);
    let im = xi - k * basis.r;
    // k*q can exceed i128 for moduli whose labels would not fit a GaussInt
    // anyway; stay checked so that case is loud.
    let re = k
        .checked_mul(basis.q)
        .and_then(|kq| xr.checked_sub(kq))
        .expect("residue label overflow: re")
        .rem_euclid(basis.p);
    GaussInt::new(
        re.try_into().expect("residue label overflow: re"),
        im.try_into().expect("residue label overflow: im"),
    )
}

/// A canonical representative of `x + m*Z[i]`: two inputs map to the same
/// label exactly when `m` divides their difference.
///
/// Panics when `m` is zero.
pub fn canonical_residue(x: GaussInt, m: GaussInt) -> GaussInt {
    reduce(lattice_basis(m), x)
}

/// The two-squares fundamental domain for a canonical modulus
/// (`re > im >= 0`): `{x+yi: 0 <= x,y < a}` union
/// `{x+yi: 0 <= x < b, -b <= y < 0}`, sorted.
///
/// Panics for non-canonical moduli; reduce through
/// [`GaussInt::canonical_octant`] first. Diagonal moduli (`re == im`) have no
/// two-squares domain and are served by [`canonical_residue`] alone.
pub fn coset_domain(m: GaussInt) -> CosetDomain {
    assert!(
        m.re > m.im && m.im >= 0,
        "coset_domain requires a canonical modulus with re > im >= 0, got {m}"
    );
    let (a, b) = (m.re, m.im);
    let mut points = Vec::with_capacity(usize::try_from(m.norm()).unwrap_or(usize::MAX));
    for x in 0..a {
        for y in 0..a {
            points.push(GaussInt::new(x, y));
        }
    }
    for x in 0..b {
        for y in -b..0 {
            points.push(GaussInt::new(x, y));
        }
    }
    points.sort_unstable();
    CosetDomain { modulus: m, points }
}

/// Does `set` contain a representative of every residue class mod `m`?
///
/// Counts distinct residue labels; `set` surjects exactly when the count
/// reaches `Nm(m)`.
pub fn surjects(set: &[GaussInt], m: GaussInt) -> bool {
    let nm = m.norm();
    if (set.len() as u128) < nm {
        return false;
    }
    let basis = lattice_basis(m);
    let mut seen = HashSet::with_capacity(nm as usize);
    for &x in set {
        seen.insert(reduce(basis, x));
        if seen.len() as u128 == nm {
            return true;
        }
    }
    false
}

/// Surjectivity through the triangle criterion: if every point of
/// `{x+yi: 0 <= x,y, x+y < max(|re|,|im|)}` is congruent mod `m` to some
/// element of `set`, then `set` surjects onto `Z[i]/(m)`.
///
/// A `true` answer implies `surjects(set, m)`; the converse is not
/// guaranteed in general but holds on every domain this crate exercises,
/// which the tests assert.
///
/// Panics unless `1+i` does not divide `m` and `set` is closed under
/// multiplication by units.
pub fn surjects_via_triangle(set: &[GaussInt], m: GaussInt) -> bool {
    assert!(!m.is_zero(), "zero modulus has no residue classes");
    assert!(
        (m.re ^ m.im) & 1 == 1,
        "triangle criterion requires a modulus not divisible by 1+i, got {m}"
    );
    let members: HashSet<GaussInt> = set.iter().copied().collect();
    assert!(
        set.iter().all(|&x| members.contains(&(GaussInt::I * x))),
        "triangle criterion requires a set closed under multiplication by units"
    );
    let basis = lattice_basis(m);
    let covered: HashSet<GaussInt> = set.iter().map(|&x| reduce(basis, x)).collect();
    let t: i64 =
        m.re.unsigned_abs()
            .max(m.im.unsigned_abs())
            .try_into()
            .expect("modulus too large for the triangle check");
    for x in 0..t {
        for y in 0..t - x {
            if !covered.contains(&reduce(basis, GaussInt::new(x, y))) {
                return false;
            }
        }
    }
    true
}

/// Search-space statistics for one naive construction step, mirroring the
/// hand count a pre-Lenstra computation would make.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CandidateStats {
    /// The level being built.
    pub level: u32,
    /// Canonical-octant points with norm at most the previous level's size.
    pub octant_points: u64,
    /// How many of those already sit in the previous level.
    pub already_members: u64,
    /// How many candidates actually get a surjection check.
    pub examined: u64,
    /// Total residue classes across all examined candidates.
    pub cosets_checked: u128,
}

fn level_zero() -> MotzkinLevel {
    let mut elements = vec![GaussInt::ZERO];
    elements.extend(UNITS);
    elements.sort_unstable();
    MotzkinLevel { level: 0, elements }
}

/// Statistics for the step that would build `prev.level + 1`, without
/// running the surjection checks.
pub fn candidate_stats(prev: &MotzkinLevel) -> CandidateStats {
    let (candidates, members) = split_candidates(prev);
    CandidateStats {
        level: prev.level + 1,
        octant_points: (candidates.len() + members.len()) as u64,
        already_members: members.len() as u64,
        examined: candidates.len() as u64,
        cosets_checked: candidates.iter().map(|c| c.norm()).sum(),
    }
}

/// Canonical-octant points of norm `<= |prev|`, split into fresh candidates
/// and points already present (the origin counts as present).
fn split_candidates(prev: &MotzkinLevel) -> (Vec<GaussInt>, Vec<GaussInt>) {
    let bound = prev.elements.len() as u128;
    let present: HashSet<GaussInt> = prev.elements.iter().copied().collect();
    let mut candidates = Vec::new();
    let mut members = Vec::new();
    let mut re = 0i64;
    while (re as u128) * (re as u128) <= bound {
        for im in 0..=re {
            let x = GaussInt::new(re, im);
            if x.norm() > bound {
                break;
            }
            if x.is_zero() || present.contains(&x) {
                members.push(x);
            } else {
                candidates.push(x);
            }
        }
        re += 1;
    }
    (candidates, members)
}

/// Builds `prev.level + 1` from `prev` by checking every fresh candidate for
/// surjectivity, in parallel, and adding accepted orbits wholesale.
pub fn grow_level(prev: &MotzkinLevel) -> (MotzkinLevel, CandidateStats) {
    let (candidates, members) = split_candidates(prev);
    let stats = CandidateStats {
        level: prev.level + 1,
        octant_points: (candidates.len() + members.len()) as u64,
        already_members: members.len() as u64,
        examined: candidates.len() as u64,
        cosets_checked: candidates.iter().map(|c| c.norm()).sum(),
    };
    let accepted: Vec<GaussInt> = candidates
        .into_par_iter()
        .filter(|&beta| surjects(&prev.elements, beta))
        .collect();
    let mut elements = prev.elements.clone();
    for beta in accepted {
        push_orbit(beta.re, beta.im, &mut elements);
    }
    elements.sort_unstable();
    (
        MotzkinLevel {
            level: prev.level + 1,
            elements,
        },
        stats,
    )
}

/// The Motzkin levels `0..=n_max`, built straight from the definition.
///
/// Refuses `n_max` above `cap`.
pub fn build_levels(n_max: u32, cap: u32) -> Result<Vec<MotzkinLevel>, CapExceeded> {
    check_cap(n_max, cap)?;
    let mut levels = vec![level_zero()];
    while levels.len() <= n_max as usize {
        let (next, _) = grow_level(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}

/// Result of comparing one Motzkin level against the region enumeration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelCheck {
    pub level: u32,
    pub oracle_size: usize,
    pub region_size: usize,
    pub matches: bool,
}

/// Compares a Motzkin level with the enumeration of `B` at the same level,
/// element for element.
pub fn check_level_against_region(level: &MotzkinLevel) -> Result<LevelCheck, CapExceeded> {
    let region = enumerate_region(RegionQuery::new(RegionKind::B, level.level), level.level)?;
    Ok(LevelCheck {
        level: level.level,
        oracle_size: level.elements.len(),
        region_size: region.elements.len(),
        matches: level.elements == region.elements,
    })
}

/// Builds the Motzkin levels up to `n_max` and checks each against the
/// region enumeration: the two constructions of `phi^{-1}([0, n])` must
/// agree exactly.
pub fn verify_lenstra(n_max: u32, cap: u32) -> Result<Vec<LevelCheck>, CapExceeded> {
    let levels = build_levels(n_max, cap)?;
    levels.iter().map(check_level_against_region).collect()
}
