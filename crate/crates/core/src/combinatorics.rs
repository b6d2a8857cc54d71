//! Exact integer combinatorics: factorials, generalized binomials,
//! multinomials and Stirling numbers of the second kind.
//!
//! Everything here is a pure function returning a [`BigInt`]. The Stirling
//! recurrence fills a per-invocation table of `a * b` entries — tiny at the
//! `a, b <= 64` scale this crate operates at — so concurrent calls stay
//! trivially deterministic with no shared cache.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Generalized binomial coefficient over any integer top argument:
/// `binomial(n, k) = n (n-1) ... (n-k+1) / k!` for `k >= 0`, and `0` for
/// `k < 0`. Always an integer, also for negative `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut numer = BigInt::one();
    for j in 0..k {
        numer *= n - j;
    }
    // The product of k consecutive integers is divisible by k!.
    numer / factorial(k as u64)
}

/// `n! / (parts_1! ... parts_m!)`, requiring `sum(parts) == n`.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != n {
        return Err(Error::InvalidArgument(format!(
            "multinomial parts sum to {sum}, expected {n}"
        )));
    }
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    Ok(acc)
}

/// Stirling number of the second kind `{a, b}`: the number of partitions of
/// an `a`-set into `b` nonempty blocks, via the recurrence
/// `{a, b} = b {a-1, b} + {a-1, b-1}` with `{0, 0} = 1`.
pub fn stirling2(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    if a == 0 {
        return BigInt::one();
    }
    if b == 0 {
        return BigInt::zero();
    }
    let width = b as usize;
    let mut row = vec![BigInt::zero(); width + 1];
    row[0] = BigInt::one();
    for i in 1..=a {
        let mut next = vec![BigInt::zero(); width + 1];
        let limit = width.min(i as usize);
        for j in 1..=limit {
            next[j] = &row[j] * j + &row[j - 1];
        }
        row = next;
    }
    row.swap_remove(width)
}

/// The alternating sum `G(i) = sum_{j=1}^{i} (-1)^(j-1) (j-1)! {i, j}`,
/// which equals `1` for `i = 1` and vanishes for every `i >= 2`.
pub fn stirling_alternating_sum(i: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 1..=i {
        let term = factorial(j - 1) * stirling2(i, j);
        if (j - 1) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
