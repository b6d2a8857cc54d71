//! Truncated polynomial arithmetic in the Chow ring of `(P^r)^n x (P^r)*`.
//!
//! The ring is `Q[h_1, ..., h_n, h] / (h_1^(r+1), ..., h_n^(r+1), h^(r+1))`
//! where `h_i` is the hyperplane class at point factor `i` and `h` the
//! hyperplane class of the dual factor. Exponent vectors of length `n + 1`
//! index the monomial basis; anything exceeding the per-variable bound `r`
//! is identically zero and never stored.
//!
//! Two routes compute the class of the incidence locus of `n` points lying
//! in a common hyperplane: pushing `prod (h_i + h)` down to the `h^r`
//! coefficient, and the closed-form square-free sum. Their agreement is the
//! content of the hyperplane-class theorem.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// Number of point factors allowed before the dense exponent keys get large.
const MAX_POINTS: usize = 8;

/// Element of `Q[h_1, ..., h_n, h]` modulo `(h_i^(r+1), h^(r+1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    points: usize,
    dim: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedPoly {
    pub fn zero(points: usize, dim: u32) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_POINTS} point factors supported, got {points}"
            )));
        }
        Ok(Self {
            points,
            dim,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(points: usize, dim: u32) -> Result<Self> {
        let mut p = Self::zero(points, dim)?;
        p.add_term(vec![0; points + 1], Rational::one());
        Ok(p)
    }

    /// The class `h_i` (1-based point factor).
    pub fn point_hyperplane(points: usize, dim: u32, i: usize) -> Result<Self> {
        if i == 0 || i > points {
            return Err(Error::InvalidArgument(format!(
                "point factor {i} out of range 1..={points}"
            )));
        }
        let mut exps = vec![0; points + 1];
        exps[i - 1] = 1;
        let mut p = Self::zero(points, dim)?;
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    /// The class `h` of the dual factor.
    pub fn dual_hyperplane(points: usize, dim: u32) -> Result<Self> {
        let mut exps = vec![0; points + 1];
        exps[points] = 1;
        let mut p = Self::zero(points, dim)?;
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Adds a term, silently dropping monomials that overflow the truncation.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Rational) {
        debug_assert_eq!(exponents.len(), self.points + 1);
        if coeff.is_zero() || exponents.iter().any(|&e| e > self.dim) {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.points != other.points || self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!(
                "(n={}, r={}) vs (n={}, r={})",
                self.points, self.dim, other.points, other.dim
            )));
        }
        Ok(())
    }

    /// The coefficient of `h^e`, as a polynomial in `h_1, ..., h_n` alone
    /// (dual exponent zeroed out).
    pub fn dual_coefficient(&self, e: u32) -> Self {
        let mut out = Self {
            points: self.points,
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (exps, c) in &self.terms {
            if exps[self.points] == e {
                let mut stripped = exps.clone();
                stripped[self.points] = 0;
                out.add_term(stripped, c.clone());
            }
        }
        out
    }
}

/// Product in the truncated ring; exponent-overflow terms are discarded.
pub fn truncated_multiply(x: &TruncatedPoly, y: &TruncatedPoly) -> Result<TruncatedPoly> {
    x.check_shape(y)?;
    let mut out = TruncatedPoly::zero(x.points, x.dim)?;
    for (e1, c1) in &x.terms {
        for (e2, c2) in &y.terms {
            let merged: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            out.add_term(merged, c1 * c2);
        }
    }
    Ok(out)
}

/// The incidence-class pushdown: the coefficient of `h^r` in
/// `prod_{i=1}^{n} (h_i + h)`, computed by actually multiplying in the
/// truncated ring. For `r > n` the coefficient is zero.
pub fn incidence_class_pushdown(points: usize, dim: u32) -> Result<TruncatedPoly> {
    let mut product = TruncatedPoly::one(points, dim)?;
    let h = TruncatedPoly::dual_hyperplane(points, dim)?;
    for i in 1..=points {
        let factor = TruncatedPoly::point_hyperplane(points, dim, i)?.checked_add(&h)?;
        product = truncated_multiply(&product, &factor)?;
    }
    Ok(product.dual_coefficient(dim))
}

/// Closed form for the same class:
/// `sum over I subset {1..n}, |I| = n - r, of prod_{a in I} h_a`.
pub fn hyperplane_class_formula(points: usize, dim: u32) -> Result<TruncatedPoly> {
    let mut out = TruncatedPoly::zero(points, dim)?;
    if (dim as usize) > points {
        return Ok(out);
    }
    let size = points - dim as usize;
    for subset in subsets_of_size(points, size) {
        let mut exps = vec![0u32; points + 1];
        for i in subset {
            exps[i] = 1;
        }
        out.add_term(exps, Rational::one());
    }
    Ok(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in start..n {
            prefix.push(i);
            rec(i + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
