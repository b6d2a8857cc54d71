//! The Pontryagin-monomial algebra generated by the graded curve components
//! `C_(0), ..., C_(g-1)` on a Jacobian of genus `g`.
//!
//! A [`TautMonomial`] is a Pontryagin product `C_(a_1) * ... * C_(a_k)`,
//! stored as a sorted multiset of indices; it lives in codimension `g - k`
//! with graded index `a_1 + ... + a_k`. Monomials with more than `g` factors
//! land in negative codimension and are the zero class, and `C_(a)` only
//! exists for `a <= g - 1`; both conventions are enforced structurally.
//!
//! [`generate_relation`] produces, for a curve with a base point free
//! `g^r_d`, the degree-`s` relation
//!
//! ```text
//! sum_{a_1 + ... + a_r = s} beta(d, a_1+1, ..., a_r+1) C_(a_1) * ... * C_(a_r) = 0
//! ```
//!
//! and [`generate_relation_via_pencils`] rebuilds the same class sum along
//! the pushforward route `(i)_* C = sum_a i^(a+2) C_(a)`, providing an
//! independent pipeline to check it against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde_json::{json, Value};

use crate::beta::beta;
use crate::combinatorics::{binomial, factorial};
use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Codimension / graded-index pair of a homogeneous cycle class.
///
/// Negative codimension denotes the zero space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradedLabel {
    pub codim: i64,
    pub index: i64,
}

/// Fourier transform on labels: `(p, i) -> (g - p + i, i)`.
pub fn fourier_label(label: GradedLabel, g: u32) -> GradedLabel {
    GradedLabel {
        codim: g as i64 - label.codim + label.index,
        index: label.index,
    }
}

/// A Pontryagin monomial `C_(a_1) * ... * C_(a_k)` at a fixed genus.
///
/// Indices are kept sorted; the empty monomial is the unit of the
/// Pontryagin product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TautMonomial {
    genus: u32,
    indices: Vec<u32>,
}

impl TautMonomial {
    pub fn new(genus: u32, mut indices: Vec<u32>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidArgument("genus must be positive".into()));
        }
        if indices.len() > genus as usize {
            return Err(Error::InvalidArgument(format!(
                "{} factors exceed genus {genus}: the zero class is not a monomial",
                indices.len()
            )));
        }
        if let Some(&bad) = indices.iter().find(|&&a| a >= genus) {
            return Err(Error::InvalidArgument(format!(
                "index {bad} out of range: components stop at C_({})",
                genus - 1
            )));
        }
        indices.sort_unstable();
        Ok(Self { genus, indices })
    }

    /// The unit monomial (empty product).
    pub fn unit(genus: u32) -> Self {
        Self {
            genus,
            indices: Vec::new(),
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn factor_count(&self) -> usize {
        self.indices.len()
    }

    pub fn index_sum(&self) -> u64 {
        self.indices.iter().map(|&a| a as u64).sum()
    }

    /// `(g - k, sum of indices)`.
    pub fn graded_label(&self) -> GradedLabel {
        GradedLabel {
            codim: self.genus as i64 - self.indices.len() as i64,
            index: self.index_sum() as i64,
        }
    }

    /// Multiset union; `None` when the product has more than `g` factors
    /// and is therefore the zero class.
    pub fn pontryagin(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.genus, other.genus);
        if self.indices.len() + other.indices.len() > self.genus as usize {
            return None;
        }
        let mut indices = Vec::with_capacity(self.indices.len() + other.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        indices.sort_unstable();
        Some(Self {
            genus: self.genus,
            indices,
        })
    }
}

/// A finite rational linear combination of Pontryagin monomials of one genus.
///
/// Zero coefficients are never stored; terms iterate in lexicographic order
/// of their sorted index lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TautPolynomial {
    genus: u32,
    terms: BTreeMap<TautMonomial, Rational>,
}

impl TautPolynomial {
    pub fn zero(genus: u32) -> Self {
        Self {
            genus,
            terms: BTreeMap::new(),
        }
    }

    /// The unit for the Pontryagin product.
    pub fn one(genus: u32) -> Self {
        let mut p = Self::zero(genus);
        p.add_term(TautMonomial::unit(genus), Rational::one())
            .expect("unit monomial is valid");
        p
    }

    pub fn from_terms<I>(genus: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TautMonomial, Rational)>,
    {
        let mut p = Self::zero(genus);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TautMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &TautMonomial) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff * monomial`, dropping the entry if it cancels.
    pub fn add_term(&mut self, monomial: TautMonomial, coeff: Rational) -> Result<()> {
        if monomial.genus() != self.genus {
            return Err(Error::GenusMismatch(self.genus, monomial.genus()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(monomial).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            // Re-borrowing to remove; find the key we just zeroed.
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.genus);
        }
        Self {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// The sub-sum of terms whose graded index is `s`.
    pub fn graded_part(&self, index: u64) -> Self {
        Self {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.index_sum() == index)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The common graded label of all terms, or `None` if the polynomial is
    /// zero or inhomogeneous.
    pub fn homogeneous_label(&self) -> Option<GradedLabel> {
        let mut labels = self.terms.keys().map(TautMonomial::graded_label);
        let first = labels.next()?;
        labels.all(|l| l == first).then_some(first)
    }

    /// If `self == q * other` for a single rational `q`, returns that `q`.
    ///
    /// When both sides are zero the answer is the (degenerate) `Some(0)`;
    /// a nonzero `self` is never a multiple of a zero `other`.
    pub fn as_multiple_of(&self, other: &Self) -> Option<Rational> {
        if self.genus != other.genus {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for ((m1, c1), (m2, c2)) in self.terms.iter().zip(other.terms.iter()) {
            if m1 != m2 {
                return None;
            }
            let q = c1 / c2;
            match &ratio {
                None => ratio = Some(q),
                Some(r) if *r != q => return None,
                _ => {}
            }
        }
        ratio
    }

    /// Canonical JSON form: `{"genus": g, "terms": [{"indices": [...],
    /// "coeff": "p/q"}, ...]}` with terms in lexicographic monomial order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                json!({
                    "indices": m.indices(),
                    "coeff": rational::coeff_string(c),
                })
            })
            .collect();
        json!({ "genus": self.genus, "terms": terms })
    }

    /// Parses the canonical JSON form; unknown keys (such as a `grading`
    /// annotation) are ignored.
    pub fn from_json(value: &Value) -> Result<Self> {
        let genus = value
            .get("genus")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid \"genus\"".into()))?;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing or invalid \"terms\"".into()))?;
        let mut poly = Self::zero(genus as u32);
        for term in terms {
            let indices = term
                .get("indices")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term without \"indices\"".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as u32)
                        .ok_or_else(|| Error::Parse("non-integer index".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            let coeff = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term without \"coeff\"".into()))?;
            poly.add_term(
                TautMonomial::new(genus as u32, indices)?,
                rational::parse_coeff(coeff)?,
            )?;
        }
        Ok(poly)
    }
}

impl fmt::Display for TautMonomial {
    /// Factors grouped as powers: `C(0)^2*C(3)`; the unit prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.indices.len() {
            let a = self.indices[i];
            let mut run = 1;
            while i + run < self.indices.len() && self.indices[i + run] == a {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "C({a})")?;
            } else {
                write!(f, "C({a})^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Display for TautPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_text = if magnitude.is_integer() {
                magnitude.numer().to_string()
            } else {
                format!("{}/{}", magnitude.numer(), magnitude.denom())
            };
            if m.factor_count() == 0 {
                write!(f, "{coeff_text}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff_text}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Bilinear extension of the multiset union of monomials; any product with
/// more than `g` factors is the zero class and is dropped.
pub fn pontryagin_product(x: &TautPolynomial, y: &TautPolynomial) -> Result<TautPolynomial> {
    if x.genus != y.genus {
        return Err(Error::GenusMismatch(x.genus, y.genus));
    }
    let mut out = TautPolynomial::zero(x.genus);
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            if let Some(m) = m1.pontryagin(m2) {
                out.add_term(m, c1 * c2)?;
            }
        }
    }
    Ok(out)
}

/// Rescales a relation to its canonical form: coefficients become coprime
/// integers and the lexicographically-smallest monomial gets a positive
/// coefficient. Zero maps to zero.
pub fn normalize_relation(p: &TautPolynomial) -> TautPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let mut denominator_lcm = BigInt::one();
    for c in p.terms.values() {
        denominator_lcm = denominator_lcm.lcm(c.denom());
    }
    let mut numerator_gcd = BigInt::zero();
    for c in p.terms.values() {
        let scaled = c.numer() * (&denominator_lcm / c.denom());
        numerator_gcd = numerator_gcd.gcd(&scaled);
    }
    let mut factor = Rational::new(denominator_lcm, numerator_gcd);
    let leading = p.terms.values().next().expect("nonzero polynomial");
    if (leading * &factor).is_negative() {
        factor = -factor;
    }
    p.scaled(&factor)
}

/// All ordered tuples of `parts` nonnegative integers summing to `total`.
fn weak_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=total {
            prefix.push(v);
            rec(total - v, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

fn check_relation_params(g: u32, r: u32, d: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidArgument("genus must be at least 2".into()));
    }
    if r == 0 || (r as u64) > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= d, got r = {r}, d = {d}"
        )));
    }
    Ok(())
}

/// The degree-`s` relation of a base point free `g^r_d`, as a normalized
/// homogeneous polynomial with label `(g - r, s)`:
/// `sum beta(d, a_1+1, ..., a_r+1) C_(a_1) * ... * C_(a_r)` over ordered
/// tuples with `a_1 + ... + a_r = s`. Tuples touching an index `>= g`
/// contribute zero and are skipped.
pub fn generate_relation(g: u32, r: u32, d: u64, s: u64) -> Result<TautPolynomial> {
    check_relation_params(g, r, d)?;
    if r > g {
        // Every monomial would have more than g factors: the zero class.
        return Ok(TautPolynomial::zero(g));
    }
    let mut poly = TautPolynomial::zero(g);
    for tuple in weak_compositions(s, r as usize) {
        if tuple.iter().any(|&a| a >= g as u64) {
            continue;
        }
        let shifted: Vec<u64> = tuple.iter().map(|&a| a + 1).collect();
        let coeff = beta(d, &shifted)?;
        if coeff.is_zero() {
            continue;
        }
        let indices: Vec<u32> = tuple.iter().map(|&a| a as u32).collect();
        poly.add_term(TautMonomial::new(g, indices)?, rational::from_bigint(coeff))?;
    }
    Ok(normalize_relation(&poly))
}

/// The same relation rebuilt along the pencil-pushforward pipeline, without
/// normalization: sums `(-1)^(i_1+...+i_r+r) binomial(d, sum i) / (i_1...i_r)`
/// times the expansion of `(i_1)_* C * ... * (i_r)_* C` with
/// `(i)_* C = sum_a i^(a+2) C_(a)`, projected onto graded index `s`.
///
/// The result is a rational multiple of [`generate_relation`] at the same
/// arguments (`(-1)^r` times the raw unnormalized sum).
pub fn generate_relation_via_pencils(g: u32, r: u32, d: u64, s: u64) -> Result<TautPolynomial> {
    check_relation_params(g, r, d)?;
    if r > g {
        return Ok(TautPolynomial::zero(g));
    }
    let mut index_tuples: Vec<Vec<u64>> = Vec::new();
    enumerate_pencil_tuples(d, r as usize, &mut Vec::new(), &mut index_tuples);

    let compositions: Vec<Vec<u64>> = weak_compositions(s, r as usize)
        .into_iter()
        .filter(|t| t.iter().all(|&a| a < g as u64))
        .collect();

    let mut poly = TautPolynomial::zero(g);
    for tuple in &index_tuples {
        let total: u64 = tuple.iter().sum();
        let mut base = rational::from_bigint(binomial(d as i64, total as i64));
        base *= rational::sign(total + r as u64);
        let product: u64 = tuple.iter().product();
        base /= rational::from_int(product as i64);
        for exponents in &compositions {
            let mut power = BigInt::one();
            for (&i, &a) in tuple.iter().zip(exponents) {
                power *= BigInt::from(i).pow(a as u32 + 2);
            }
            let indices: Vec<u32> = exponents.iter().map(|&a| a as u32).collect();
            poly.add_term(
                TautMonomial::new(g, indices)?,
                &base * rational::from_bigint(power),
            )?;
        }
    }
    Ok(poly)
}

fn enumerate_pencil_tuples(d: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if prefix.len() == parts {
        out.push(prefix.clone());
        return;
    }
    let used: u64 = prefix.iter().sum();
    let remaining = (parts - prefix.len() - 1) as u64;
    // binomial(d, sum) vanishes past sum = d, so cap the enumeration there.
    let max = (d - used).saturating_sub(remaining);
    for i in 1..=max {
        prefix.push(i);
        enumerate_pencil_tuples(d, parts, prefix, out);
        prefix.pop();
    }
}

/// Colombo-van Geemen vanishing for a pencil of degree `d_pencil`:
/// `{ i : d_pencil - 1 <= i <= g - 1 }`. Requires `d_pencil >= 2`.
pub fn cvg_vanishing_indices(d_pencil: u64, g: u32) -> Result<BTreeSet<u32>> {
    if d_pencil < 2 {
        return Err(Error::InvalidArgument(format!(
            "pencil degree must be at least 2, got {d_pencil}"
        )));
    }
    let mut out = BTreeSet::new();
    let mut i = d_pencil - 1;
    while i < g as u64 {
        out.insert(i as u32);
        i += 1;
    }
    Ok(out)
}

/// Drops every monomial containing a vanished index, then re-normalizes.
pub fn reduce_mod_vanishing(p: &TautPolynomial, vanished: &BTreeSet<u32>) -> TautPolynomial {
    let mut out = TautPolynomial::zero(p.genus);
    for (m, c) in p.terms() {
        if m.indices().iter().any(|a| vanished.contains(a)) {
            continue;
        }
        out.add_term(m.clone(), c.clone())
            .expect("same genus by construction");
    }
    normalize_relation(&out)
}

/// Polishchuk's monomial rewrite: expresses
/// `C_(0)^(g-1-sum n) * C_(n_1) * ... * C_(n_k)` as a scalar multiple of
/// `C_(0)^(g+k-2-sum n) * C_(sum n - k + 1)`, returning the scalar and the
/// target monomial. All `n_i` must be positive and the factorial and index
/// bookkeeping must stay in range, otherwise the rewrite does not apply.
pub fn polishchuk_rewrite(g: u32, n: &[u32]) -> Result<(Rational, TautMonomial)> {
    if n.is_empty() {
        return Err(Error::RewriteNotApplicable("empty index list".into()));
    }
    if n.contains(&0) {
        return Err(Error::RewriteNotApplicable(
            "zero indices cannot be folded".into(),
        ));
    }
    let k = n.len() as u64;
    let sum: u64 = n.iter().map(|&x| x as u64).sum();
    if (g as u64) < sum + 1 {
        return Err(Error::RewriteNotApplicable(format!(
            "C_(0) power g - 1 - sum(n) = {} - 1 - {sum} is negative",
            g
        )));
    }
    let target_index = sum - k + 1;
    if target_index > g as u64 - 1 {
        return Err(Error::RewriteNotApplicable(format!(
            "target index {target_index} exceeds g - 1 = {}",
            g - 1
        )));
    }
    let source_zero_power = g as u64 - 1 - sum;
    let target_zero_power = source_zero_power + k - 1;
    let mut scalar = Rational::new(
        factorial(source_zero_power) * factorial(sum),
        factorial(target_zero_power) * n.iter().map(|&x| factorial(x as u64)).product::<BigInt>(),
    );
    scalar *= rational::sign(k - 1);

    let mut indices = vec![0u32; target_zero_power as usize];
    indices.push(target_index as u32);
    let target = TautMonomial::new(g, indices)?;
    Ok((scalar, target))
}

/// The scalar in front of `C_(0)^(g+2r-d-3) * C_(d-2r+1)` obtained by
/// folding the first nontrivial relation with Polishchuk rewrites:
///
/// ```text
/// sum_{t=0}^{r-1} (-1)^(r+t) (t+g+r-d-2)! (d-r+1-t)! / ((r-t)! t!)
///     * binomial(d-2r, d-3r+1+t)
/// ```
///
/// Requires `g + r - d - 2 >= 0` and `d >= 2r`. Its vanishing is equivalent
/// to the vanishing of the secant-plane count `A(r, d, g)`.
pub fn monomial_coefficient(r: i64, d: i64, g: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if g + r - d - 2 < 0 {
        return Err(Error::InvalidArgument(format!(
            "g + r - d - 2 = {} must be nonnegative",
            g + r - d - 2
        )));
    }
    if d < 2 * r {
        return Err(Error::InvalidArgument(format!(
            "d = {d} must be at least 2r = {}",
            2 * r
        )));
    }
    let mut acc = Rational::zero();
    for t in 0..r {
        let numer = factorial((t + g + r - d - 2) as u64) * factorial((d - r + 1 - t) as u64);
        let denom = factorial((r - t) as u64) * factorial(t as u64);
        let mut term = Rational::new(numer, denom);
        term *= rational::from_bigint(binomial(d - 2 * r, d - 3 * r + 1 + t));
        term *= rational::sign((r + t) as u64);
        acc += term;
    }
    Ok(acc)
}

/// Number of weak compositions of `m` into `parts` nonnegative parts: the
/// coefficient of `X^m` in `(1 - X)^(-parts)`, i.e.
/// `binomial(m + parts - 1, m)`.
pub fn compositions_count(m: u64, parts: u64) -> BigInt {
    binomial(m as i64 + parts as i64 - 1, m as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(genus: u32, indices: &[u32]) -> TautMonomial {
        TautMonomial::new(genus, indices.to_vec()).unwrap()
    }

    fn poly(genus: u32, terms: &[(&[u32], i64)]) -> TautPolynomial {
        TautPolynomial::from_terms(
            genus,
            terms
                .iter()
                .map(|(ind, c)| (mono(genus, ind), rational::from_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn monomial_validation() {
        assert!(TautMonomial::new(5, vec![0, 2]).is_ok());
        assert!(TautMonomial::new(5, vec![5]).is_err());
        assert!(TautMonomial::new(3, vec![0, 1, 1, 2]).is_err());
        assert_eq!(mono(5, &[2, 0]).indices(), &[0, 2]);
    }

    #[test]
    fn graded_labels() {
        assert_eq!(
            mono(5, &[0, 2]).graded_label(),
            GradedLabel { codim: 3, index: 2 }
        );
        assert_eq!(
            TautMonomial::unit(5).graded_label(),
            GradedLabel { codim: 5, index: 0 }
        );
        assert_eq!(
            mono(8, &[1, 3]).graded_label(),
            GradedLabel { codim: 6, index: 4 }
        );
    }

    #[test]
    fn fourier_label_map() {
        let g = 9;
        let l = GradedLabel {
            codim: g as i64 - 1,
            index: 4,
        };
        assert_eq!(fourier_label(l, g), GradedLabel { codim: 5, index: 4 });
        assert_eq!(
            fourier_label(GradedLabel { codim: 0, index: 0 }, 6),
            GradedLabel { codim: 6, index: 0 }
        );
        // On labels the transform is an involution.
        for p in -3..12i64 {
            for i in 0..8i64 {
                let l = GradedLabel { codim: p, index: i };
                assert_eq!(fourier_label(fourier_label(l, 7), 7), l);
            }
        }
    }

    #[test]
    fn pontryagin_product_examples() {
        let g5 = pontryagin_product(&poly(5, &[(&[0], 1)]), &poly(5, &[(&[2], 1)])).unwrap();
        assert_eq!(g5, poly(5, &[(&[0, 2], 1)]));

        // Four factors exceed genus 3: the zero class.
        let g3 = pontryagin_product(&poly(3, &[(&[0, 1], 1)]), &poly(3, &[(&[1, 2], 1)])).unwrap();
        assert!(g3.is_zero());

        let g7 = pontryagin_product(&poly(7, &[(&[1], 1)]), &poly(7, &[(&[1, 2], 1)])).unwrap();
        assert_eq!(g7, poly(7, &[(&[1, 1, 2], 1)]));
        assert_eq!(
            g7.homogeneous_label(),
            Some(GradedLabel { codim: 4, index: 4 })
        );

        assert!(pontryagin_product(&poly(5, &[(&[0], 1)]), &poly(6, &[(&[0], 1)])).is_err());
    }

    #[test]
    fn product_respects_bigrading() {
        let x = poly(6, &[(&[0, 2], 3), (&[1, 1], 1)]);
        let y = poly(6, &[(&[1], 2)]);
        let xy = pontryagin_product(&x, &y).unwrap();
        let lx = x.homogeneous_label().unwrap();
        let ly = y.homogeneous_label().unwrap();
        let lxy = xy.homogeneous_label().unwrap();
        assert_eq!(lxy.codim, lx.codim + ly.codim - 6);
        assert_eq!(lxy.index, lx.index + ly.index);
    }

    #[test]
    fn normalize_relation_examples() {
        let raw = poly(5, &[(&[0, 2], -12), (&[1, 1], -4)]);
        assert_eq!(
            normalize_relation(&raw),
            poly(5, &[(&[0, 2], 3), (&[1, 1], 1)])
        );

        let zero = TautPolynomial::zero(5);
        assert_eq!(normalize_relation(&zero), zero);

        let single = poly(5, &[(&[1], 5)]);
        assert_eq!(normalize_relation(&single), poly(5, &[(&[1], 1)]));

        // Fractional input becomes a primitive integer vector.
        let frac = TautPolynomial::from_terms(
            5,
            vec![
                (mono(5, &[0, 2]), rational::ratio(-3, 2)),
                (mono(5, &[1, 1]), rational::ratio(-1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(
            normalize_relation(&frac),
            poly(5, &[(&[0, 2], 3), (&[1, 1], 1)])
        );
    }

    #[test]
    fn generate_relation_table_one_rows() {
        assert_eq!(
            generate_relation(5, 2, 5, 2).unwrap(),
            poly(5, &[(&[0, 2], 3), (&[1, 1], 1)])
        );
        assert_eq!(
            generate_relation(7, 2, 6, 3).unwrap(),
            poly(7, &[(&[0, 3], 2), (&[1, 2], 1)])
        );
        assert_eq!(
            generate_relation(8, 2, 7, 4).unwrap(),
            poly(8, &[(&[0, 4], 20), (&[1, 3], 8), (&[2, 2], 3)])
        );
        assert!(generate_relation(6, 2, 5, 1).unwrap().is_zero());
    }

    #[test]
    fn generate_relation_is_homogeneous() {
        for (g, r, d, s) in [(5u32, 2u32, 5u64, 2u64), (8, 2, 7, 4), (7, 3, 8, 3)] {
            let rel = generate_relation(g, r, d, s).unwrap();
            assert_eq!(
                rel.homogeneous_label(),
                Some(GradedLabel {
                    codim: g as i64 - r as i64,
                    index: s as i64
                })
            );
        }
    }

    #[test]
    fn generate_relation_rejects_bad_parameters() {
        assert!(generate_relation(1, 1, 3, 0).is_err());
        assert!(generate_relation(5, 0, 3, 0).is_err());
        assert!(generate_relation(5, 4, 3, 0).is_err());
    }

    #[test]
    fn via_pencils_matches_direct_route() {
        // r = 1: the pipeline reproduces the Stirling form up to the global
        // (-1)^r factor.
        let p = generate_relation_via_pencils(6, 1, 3, 2).unwrap();
        let expected = TautPolynomial::from_terms(
            6,
            vec![(
                mono(6, &[2]),
                -rational::from_bigint(crate::beta::beta_r1_stirling(3, 3).unwrap()),
            )],
        )
        .unwrap();
        assert_eq!(p, expected);

        let direct = generate_relation(5, 2, 5, 2).unwrap();
        let pencil = generate_relation_via_pencils(5, 2, 5, 2).unwrap();
        let ratio = pencil.as_multiple_of(&direct).unwrap();
        assert!(!ratio.is_zero());
        assert_eq!(ratio, rational::from_int(-4));

        let direct = generate_relation(7, 3, 8, 3).unwrap();
        assert_eq!(
            direct,
            poly(7, &[(&[0, 0, 3], 9), (&[0, 1, 2], 9), (&[1, 1, 1], 1)])
        );
        let pencil = generate_relation_via_pencils(7, 3, 8, 3).unwrap();
        assert!(!pencil.as_multiple_of(&direct).unwrap().is_zero());
    }

    #[test]
    fn cvg_vanishing_examples() {
        assert_eq!(
            cvg_vanishing_indices(3, 6).unwrap(),
            BTreeSet::from([2, 3, 4, 5])
        );
        assert!(cvg_vanishing_indices(7, 6).unwrap().is_empty());
        assert!(cvg_vanishing_indices(1, 6).is_err());
        // Upward closure.
        let set = cvg_vanishing_indices(4, 9).unwrap();
        for &i in &set {
            if i < 8 {
                assert!(set.contains(&(i + 1)));
            }
        }
    }

    #[test]
    fn reduce_mod_vanishing_examples() {
        let p = poly(8, &[(&[0, 4], 20), (&[1, 3], 8), (&[2, 2], 3)]);
        let reduced = reduce_mod_vanishing(&p, &cvg_vanishing_indices(5, 8).unwrap());
        assert_eq!(reduced, poly(8, &[(&[1, 3], 8), (&[2, 2], 3)]));

        assert_eq!(reduce_mod_vanishing(&p, &BTreeSet::new()), p);

        let q = poly(5, &[(&[0, 2], 3), (&[1, 1], 1)]);
        let reduced = reduce_mod_vanishing(&q, &BTreeSet::from([2, 3, 4]));
        assert_eq!(reduced, poly(5, &[(&[1, 1], 1)]));
    }

    #[test]
    fn polishchuk_rewrite_examples() {
        // k = 1 is the identity.
        for m in 1..=5u32 {
            let g = 9;
            let (scalar, target) = polishchuk_rewrite(g, &[m]).unwrap();
            assert_eq!(scalar, rational::from_int(1));
            let mut indices = vec![0u32; (g - 1 - m) as usize];
            indices.push(m);
            assert_eq!(target, mono(g, &indices));
        }

        let (scalar, target) = polishchuk_rewrite(8, &[1, 2]).unwrap();
        assert_eq!(scalar, rational::ratio(-3, 5));
        assert_eq!(target, mono(8, &[0, 0, 0, 0, 0, 2]));

        let (scalar, target) = polishchuk_rewrite(6, &[1, 1]).unwrap();
        assert_eq!(scalar, rational::ratio(-1, 2));
        assert_eq!(target, mono(6, &[0, 0, 0, 0, 1]));
    }

    #[test]
    fn polishchuk_rewrite_rejections() {
        assert!(matches!(
            polishchuk_rewrite(6, &[0, 2]),
            Err(Error::RewriteNotApplicable(_))
        ));
        // g - 1 - sum(n) < 0.
        assert!(polishchuk_rewrite(4, &[2, 2]).is_err());
        assert!(polishchuk_rewrite(5, &[]).is_err());
    }

    #[test]
    fn monomial_coefficient_examples() {
        assert_eq!(monomial_coefficient(2, 5, 6).unwrap(), Rational::zero());
        assert_eq!(
            monomial_coefficient(2, 5, 7).unwrap(),
            rational::from_int(-12)
        );
        assert_eq!(
            monomial_coefficient(1, 3, 6).unwrap(),
            rational::from_int(-12)
        );
        assert!(monomial_coefficient(2, 5, 4).is_err());
        assert!(monomial_coefficient(3, 5, 9).is_err());
    }

    #[test]
    fn compositions_count_examples() {
        assert_eq!(compositions_count(0, 4), BigInt::from(1));
        assert_eq!(compositions_count(3, 2), BigInt::from(4));
        assert_eq!(compositions_count(5, 1), BigInt::from(1));
        assert_eq!(compositions_count(2, 0), BigInt::from(0));
        assert_eq!(compositions_count(0, 0), BigInt::from(1));
    }

    #[test]
    fn compositions_count_matches_enumeration() {
        for m in 0..=6u64 {
            for parts in 0..=4usize {
                let listed = weak_compositions(m, parts).len();
                assert_eq!(
                    compositions_count(m, parts as u64),
                    BigInt::from(listed),
                    "count mismatch at (m, parts) = ({m}, {parts})"
                );
            }
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(
            poly(5, &[(&[0, 2], 3), (&[1, 1], 1)]).to_string(),
            "3*C(0)*C(2) + C(1)^2"
        );
        assert_eq!(
            poly(8, &[(&[1, 3], 8), (&[2, 2], -3)]).to_string(),
            "8*C(1)*C(3) - 3*C(2)^2"
        );
        assert_eq!(TautPolynomial::zero(4).to_string(), "0");
        assert_eq!(TautPolynomial::one(4).to_string(), "1");
    }

    #[test]
    fn json_round_trip() {
        let p = generate_relation(8, 2, 7, 4).unwrap();
        let encoded = p.to_json();
        assert_eq!(TautPolynomial::from_json(&encoded).unwrap(), p);
        assert_eq!(encoded["terms"][0]["coeff"].as_str().unwrap(), "20/1");
        let zero = TautPolynomial::zero(6);
        assert_eq!(TautPolynomial::from_json(&zero.to_json()).unwrap(), zero);
    }

    #[test]
    fn as_multiple_handles_zero_and_mismatch() {
        let p = poly(5, &[(&[0, 2], 3), (&[1, 1], 1)]);
        let q = p.scaled(&rational::ratio(-7, 3));
        assert_eq!(q.as_multiple_of(&p).unwrap(), rational::ratio(-7, 3));
        assert_eq!(
            TautPolynomial::zero(5).as_multiple_of(&p),
            Some(Rational::zero())
        );
        assert!(p.as_multiple_of(&TautPolynomial::zero(5)).is_none());
        let other = poly(5, &[(&[0, 2], 3), (&[1, 2], 1)]);
        assert!(other.as_multiple_of(&p).is_none());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = TautPolynomial> {
            let genus = 5u32;
            let term = (proptest::collection::vec(0..genus, 0..=3), -6i64..=6);
            proptest::collection::vec(term, 0..4).prop_map(move |terms| {
                let mut p = TautPolynomial::zero(genus);
                for (indices, c) in terms {
                    p.add_term(
                        TautMonomial::new(genus, indices).unwrap(),
                        rational::from_int(c),
                    )
                    .unwrap();
                }
                p
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn normalize_is_idempotent_and_scale_invariant(
                p in arb_poly(),
                num in -5i64..=5,
                den in 1i64..=5,
            ) {
                prop_assume!(num != 0);
                let normalized = normalize_relation(&p);
                prop_assert_eq!(&normalize_relation(&normalized), &normalized);
                let scaled = p.scaled(&rational::ratio(num, den));
                prop_assert_eq!(normalize_relation(&scaled), normalized);
            }

            #[test]
            fn json_round_trips(p in arb_poly()) {
                prop_assert_eq!(TautPolynomial::from_json(&p.to_json()).unwrap(), p);
            }
        }
    }
}
