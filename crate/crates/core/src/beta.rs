//! The relation coefficients `beta(d, a_1, ..., a_r)` and the summation
//! lemmas controlling their vanishing.
//!
//! `beta` is the alternating nested sum
//!
//! ```text
//! beta(d, a_1, ..., a_r) = sum_{i_1=1}^{d} ... sum_{i_r=1}^{d}
//!     (-1)^(i_1+...+i_r) binomial(d, i_1+...+i_r) i_1^a_1 ... i_r^a_r
//! ```
//!
//! evaluated by direct enumeration with the early exit `i_1+...+i_r <= d`
//! (the binomial kills everything beyond). For arguments summing below
//! `d - r + 1` it vanishes; at the threshold it equals
//! `(-1)^d a_1! ... a_r!`. The brute-force oracles in this module pin down
//! the two lemmas that proof rests on.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::combinatorics::{binomial, factorial, multinomial, stirling2};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Direct evaluation of `beta(d, a_1, ..., a_r)`. Always an integer.
///
/// Requires `d >= 1` and a nonempty exponent tuple; entries may be zero
/// (inside the sum every `i_u >= 1`, so no `0^0` arises).
pub fn beta(d: u64, exponents: &[u64]) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::InvalidArgument("beta requires d >= 1".into()));
    }
    if exponents.is_empty() {
        return Err(Error::InvalidArgument(
            "beta requires at least one exponent".into(),
        ));
    }
    let binom_row: Vec<BigInt> = (0..=d).map(|s| binomial(d as i64, s as i64)).collect();
    let mut acc = BigInt::zero();
    let mut stack_prod = vec![BigInt::one()];
    beta_rec(d, exponents, 0, &binom_row, &mut stack_prod, &mut acc);
    Ok(acc)
}

fn beta_rec(
    d: u64,
    exponents: &[u64],
    sum_so_far: u64,
    binom_row: &[BigInt],
    prod_stack: &mut Vec<BigInt>,
    acc: &mut BigInt,
) {
    let depth = prod_stack.len() - 1;
    if depth == exponents.len() {
        let term = prod_stack.last().unwrap() * &binom_row[sum_so_far as usize];
        if sum_so_far.is_multiple_of(2) {
            *acc += term;
        } else {
            *acc -= term;
        }
        return;
    }
    // Each remaining index contributes at least 1 to the sum.
    let remaining = (exponents.len() - depth - 1) as u64;
    let max_i = d - sum_so_far;
    for i in 1..=max_i.saturating_sub(remaining) {
        let next = prod_stack.last().unwrap() * BigInt::from(i).pow(exponents[depth] as u32);
        prod_stack.push(next);
        beta_rec(d, exponents, sum_so_far + i, binom_row, prod_stack, acc);
        prod_stack.pop();
    }
}

/// Closed form for the single-index case: `beta(d, a) = (-1)^d d! {a, d}`
/// (valid for `a >= 1`).
pub fn beta_r1_stirling(d: u64, a: u64) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "beta_r1_stirling requires d >= 1".into(),
        ));
    }
    let value = factorial(d) * stirling2(a, d);
    Ok(if d.is_multiple_of(2) { value } else { -value })
}

/// Multiplicity factor `gamma(i_1, ..., i_r)`: the product of factorials of
/// the run lengths of equal values in a nondecreasing list of positive
/// integers. This is the generic fiber degree of the addition map over a
/// generalized diagonal.
pub fn gamma_multiplicity(parts: &[u64]) -> Result<BigInt> {
    if parts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument(
            "gamma_multiplicity requires a nondecreasing list".into(),
        ));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidArgument(
            "gamma_multiplicity requires positive entries".into(),
        ));
    }
    let mut acc = BigInt::one();
    let mut idx = 0;
    while idx < parts.len() {
        let mut run = 1u64;
        while idx + (run as usize) < parts.len() && parts[idx + run as usize] == parts[idx] {
            run += 1;
        }
        acc *= factorial(run);
        idx += run as usize;
    }
    Ok(acc)
}

/// Brute-force evaluation of
/// `sum_{0 <= i_1, ..., i_n, i_1+...+i_n <= s} i_1^a_1 ... i_n^a_n`
/// with the convention `0^0 = 1`.
pub fn monomial_sum_oracle(s: u64, exponents: &[u64]) -> BigInt {
    fn rec(s_left: u64, exponents: &[u64], prod: &BigInt, acc: &mut BigInt) {
        match exponents.split_first() {
            None => *acc += prod,
            Some((&a, rest)) => {
                for i in 0..=s_left {
                    let next = prod * BigInt::from(i).pow(a as u32);
                    if next.is_zero() {
                        continue;
                    }
                    rec(s_left - i, rest, &next, acc);
                }
            }
        }
    }
    let mut acc = BigInt::zero();
    rec(s, exponents, &BigInt::one(), &mut acc);
    acc
}

/// Checks by finite differences that `s -> monomial_sum_oracle(s, a)` is a
/// polynomial of degree `D = a_1 + ... + a_n + n` with leading coefficient
/// `a_1! ... a_n! / D!`: the `D`-th forward difference must be the constant
/// `a_1! ... a_n!` and the `(D+1)`-th must vanish, over samples `s = 0..s_max`.
///
/// Requires `s_max >= D + 2` so both difference rows are nonempty.
pub fn monomial_sum_leading_check(exponents: &[u64], s_max: u64) -> Result<bool> {
    let degree = exponents.iter().sum::<u64>() + exponents.len() as u64;
    if s_max < degree + 2 {
        return Err(Error::InvalidArgument(format!(
            "s_max = {s_max} is insufficient, need at least {}",
            degree + 2
        )));
    }
    let mut values: Vec<BigInt> = (0..=s_max)
        .map(|s| monomial_sum_oracle(s, exponents))
        .collect();
    for _ in 0..degree {
        values = forward_differences(&values);
    }
    let expected: BigInt = exponents.iter().map(|&a| factorial(a)).product();
    if values.iter().any(|v| *v != expected) {
        return Ok(false);
    }
    let next = forward_differences(&values);
    Ok(next.iter().all(Zero::is_zero))
}

fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    values.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Verifies exactly, for `a = (a_1, ..., a_r)` with `r >= 2`, the identity
///
/// ```text
/// sum_{b + b_1 + ... + b_{r-1} = a_r}
///     multinomial(a_r; b, b_1, ..., b_{r-1}) (-1)^(b_1+...+b_{r-1})
///     (a_1+b_1)! ... (a_{r-1}+b_{r-1})!
///     / (a_1+...+a_{r-1} + b_1+...+b_{r-1} + r - 1)!
///   = a_1! ... a_r! / (a_1+...+a_r + r - 1)!
/// ```
///
/// The `r = 1` case degenerates (the multinomial is empty) and is rejected.
pub fn sum_int_identity_check(a: &[u64]) -> Result<bool> {
    let r = a.len();
    if r < 2 {
        return Err(Error::InvalidArgument(
            "sum_int_identity_check requires r >= 2".into(),
        ));
    }
    let a_last = a[r - 1];
    let head = &a[..r - 1];
    let head_sum: u64 = head.iter().sum();

    let mut lhs = Rational::zero();
    let mut composition = vec![0u64; r];
    sum_int_rec(a_last, 0, head, head_sum, r, &mut composition, &mut lhs);

    let numer: BigInt = a.iter().map(|&x| factorial(x)).product();
    let denom = factorial(a.iter().sum::<u64>() + r as u64 - 1);
    let rhs = Rational::new(numer, denom);
    Ok(lhs == rhs)
}

fn sum_int_rec(
    total: u64,
    depth: usize,
    head: &[u64],
    head_sum: u64,
    r: usize,
    composition: &mut Vec<u64>,
    acc: &mut Rational,
) {
    if depth == r - 1 {
        composition[r - 1] = total - composition[..r - 1].iter().sum::<u64>();
        // composition = (b, b_1, ..., b_{r-1})
        let b_tail_sum: u64 = composition[1..].iter().sum();
        let numer: BigInt = head
            .iter()
            .zip(&composition[1..])
            .map(|(&ai, &bi)| factorial(ai + bi))
            .product::<BigInt>()
            * multinomial(total, composition).expect("composition sums to total");
        let denom = factorial(head_sum + b_tail_sum + r as u64 - 1);
        let term = Rational::new(numer, denom);
        *acc += term * rational::sign(b_tail_sum);
        return;
    }
    let used: u64 = composition[..depth].iter().sum();
    for v in 0..=(total - used) {
        composition[depth] = v;
        sum_int_rec(total, depth + 1, head, head_sum, r, composition, acc);
    }
}
