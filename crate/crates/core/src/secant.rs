//! Enumerative secant-plane counts and the vanishing consequences they
//! carry into the tautological ring.
//!
//! `A(r, d, g)` counts the `(r-2)`-planes meeting a degree-`d` genus-`g`
//! curve in `P^r` in `2r - 2` points, in the closed form extracted from the
//! relation pipeline; [`castelnuovo_count`] is Castelnuovo's classical
//! formula for the same number, and for `r = 3` Cayley's quadrisecant
//! formula agrees as well. [`verify_secant_count_identity`] checks `A = B`
//! on an integer grid large enough to force the polynomial identity in
//! `Q[d, g]` (both sides have degree at most `2r` in `d` and `r - 1` in
//! `g`).
//!
//! A nonzero count yields a pencil of degree `d - 2r + 2` by projection, a
//! zero count only the generic `d - r + 1`; feeding that degree into the
//! Colombo-van Geemen theorem gives the set of indices with `C_(i) = 0`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::combinatorics::binomial;
use crate::rational::{self, Rational};
use crate::taut::cvg_vanishing_indices;
use crate::{Error, Result};

/// A `g^r_d` on a genus-`g` curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearSystemSignature {
    pub r: u32,
    pub d: u32,
    pub g: u32,
}

impl LinearSystemSignature {
    pub fn new(r: u32, d: u32, g: u32) -> Result<Self> {
        if r < 1 || d < r {
            return Err(Error::InvalidArgument(format!(
                "invalid linear system g^{r}_{d}"
            )));
        }
        Ok(Self { r, d, g })
    }
}

/// The secant-plane count
///
/// ```text
/// A(r, d, g) = sum_{i=0}^{r-1} (-1)^i / (d - 2r + 2)
///     binomial(i+g+r-d-2, i) binomial(d-2r, r-1-i) binomial(d-r+1-i, r-i)
/// ```
///
/// Rejects `d = 2r - 2`, where the prefactor is undefined.
pub fn secant_plane_count(r: i64, d: i64, g: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if d == 2 * r - 2 {
        return Err(Error::InvalidArgument(format!(
            "d = 2r - 2 = {d} divides by zero"
        )));
    }
    let mut acc = Rational::zero();
    for i in 0..r {
        let mut term = rational::from_bigint(
            binomial(i + g + r - d - 2, i)
                * binomial(d - 2 * r, r - 1 - i)
                * binomial(d - r + 1 - i, r - i),
        );
        term /= rational::from_int(d - 2 * r + 2);
        term *= rational::sign(i as u64);
        acc += term;
    }
    Ok(acc)
}

/// Castelnuovo's count of `(2r-2)`-secant `(r-2)`-planes:
///
/// ```text
/// B(r, d, g) = sum_{i=0}^{r-1} (-1)^i / (r - i)
///     binomial(d-r-i+1, r-1-i) binomial(d-r-i, r-1-i) binomial(g, i)
/// ```
pub fn castelnuovo_count(r: i64, d: i64, g: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let mut acc = Rational::zero();
    for i in 0..r {
        let mut term = rational::from_bigint(
            binomial(d - r - i + 1, r - 1 - i) * binomial(d - r - i, r - 1 - i) * binomial(g, i),
        );
        term /= rational::from_int(r - i);
        term *= rational::sign(i as u64);
        acc += term;
    }
    Ok(acc)
}

/// Cayley's quadrisecant count for space curves:
/// `(d-2)(d-3)^2(d-4)/12 - g(d^2 - 7d + 13 - g)/2`.
pub fn cayley_quadrisecants(d: i64, g: i64) -> Rational {
    let first = rational::from_int((d - 2) * (d - 3) * (d - 3) * (d - 4)) / rational::from_int(12);
    let second = rational::from_int(g * (d * d - 7 * d + 13 - g)) / rational::from_int(2);
    first - second
}

/// Checks `A(r, d, g) = B(r, d, g)` exactly on the grid `d in [2r, 5r+6]`,
/// `g in [0, 3r+6]`. The grid has more samples in each variable than either
/// polynomial's degree, so grid equality is the polynomial identity.
pub fn verify_secant_count_identity(r: i64) -> Result<bool> {
    if !(1..=6).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "identity check supports 1 <= r <= 6, got {r}"
        )));
    }
    for d in 2 * r..=5 * r + 6 {
        for g in 0..=3 * r + 6 {
            if secant_plane_count(r, d, g)? != castelnuovo_count(r, d, g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Degree of the pencil the linear system induces by projection:
/// `d - 2r + 2` through `2r - 2` secant points when the count is nonzero,
/// `d - r + 1` from `r - 1` general points otherwise.
pub fn induced_pencil_degree(r: i64, d: i64, g: i64) -> Result<i64> {
    if secant_plane_count(r, d, g)?.is_zero() {
        Ok(d - r + 1)
    } else {
        Ok(d - 2 * r + 2)
    }
}

/// Indices `i <= g - 1` with `C_(i) = 0`, via the induced pencil and
/// Colombo-van Geemen vanishing. When the secant count is nonzero the set
/// starts exactly at `d - 2r + 1`.
pub fn vanishing_report(r: u32, d: u32, g: u32) -> Result<BTreeSet<u32>> {
    let pencil = induced_pencil_degree(r as i64, d as i64, g as i64)?;
    if pencil < 2 {
        return Err(Error::InvalidArgument(format!(
            "induced pencil degree {pencil} is below 2"
        )));
    }
    cvg_vanishing_indices(pencil as u64, g)
}
