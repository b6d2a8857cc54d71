//! Formal diagonal classes on cartesian and symmetric powers of the curve.
//!
//! Classes on the symmetric product `C_n` are sums of coefficiented
//! generalized diagonals `[delta_{i_1,...,i_r} + m*o]` ([`DiagonalClass`]);
//! classes on the cartesian power `C^n` are sums of decorated set
//! partitions ([`DecoratedPartition`]): each block is either a free
//! diagonal factor or pinned to one of the `d` labeled points in the
//! support of a fixed divisor.
//!
//! [`truncated_system_class`] is the class `[G_n]` of the degree-`n`
//! truncated linear system of a `g^r_d` in `C_n`;
//! [`sigma_pullback_class`] is its pullback `sigma_n^* [G_n]` to `C^n`.
//! [`verify_recursion`] checks the recursion expressing the pullback of the
//! hyperplane-incidence class through the diagonal maps `Psi_P`, and
//! [`jacobian_pushdown`] maps symmetric classes onward to the tautological
//! ring, where translates die modulo algebraic equivalence.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::beta::gamma_multiplicity;
use crate::combinatorics::{binomial, factorial};
use crate::rational::{self, Rational};
use crate::taut::{pontryagin_product, TautMonomial, TautPolynomial};
use crate::{Error, Result};

/// A generalized diagonal with a base-point translate:
/// `[delta_{i_1,...,i_r} + m*o]` in `C_n` with `n = i_1 + ... + i_r + m`.
///
/// Multiplicities are positive and stored nondecreasing; the list may be
/// empty (a pure multiple of the base point).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalClass {
    multiplicities: Vec<u32>,
    base_mult: u32,
}

impl DiagonalClass {
    pub fn new(mut multiplicities: Vec<u32>, base_mult: u32) -> Result<Self> {
        if multiplicities.contains(&0) {
            return Err(Error::InvalidArgument(
                "diagonal multiplicities must be positive".into(),
            ));
        }
        multiplicities.sort_unstable();
        Ok(Self {
            multiplicities,
            base_mult,
        })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn base_multiplicity(&self) -> u32 {
        self.base_mult
    }

    /// Degree of the ambient symmetric product.
    pub fn degree(&self) -> u32 {
        self.multiplicities.iter().sum::<u32>() + self.base_mult
    }
}

/// Rational combination of diagonal classes inside one `C_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricClassSum {
    n: u32,
    terms: BTreeMap<DiagonalClass, Rational>,
}

impl SymmetricClassSum {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiagonalClass, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: &DiagonalClass) -> Rational {
        self.terms
            .get(class)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, class: DiagonalClass, coeff: Rational) -> Result<()> {
        if class.degree() != self.n {
            return Err(Error::InvalidArgument(format!(
                "term of degree {} in C_{}",
                class.degree(),
                self.n
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(class).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::new(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }
}

/// Decoration of a partition block: a moving diagonal factor, or all
/// coordinates pinned to the labeled support point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    Free,
    Pinned(u32),
}

/// A set partition of `{1..n}` with decorated blocks, in canonical form:
/// elements sorted within blocks, blocks sorted by least element, and
/// blocks pinned to the same label merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPartition {
    n: usize,
    blocks: Vec<(Vec<usize>, Decoration)>,
}

impl DecoratedPartition {
    pub fn new(n: usize, blocks: Vec<(Vec<usize>, Decoration)>) -> Result<Self> {
        // Merge blocks sharing a pinned label, then canonicalize.
        let mut free: Vec<Vec<usize>> = Vec::new();
        let mut pinned: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (elements, decoration) in blocks {
            if elements.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            match decoration {
                Decoration::Free => free.push(elements),
                Decoration::Pinned(label) => {
                    if label == 0 {
                        return Err(Error::InvalidArgument("labels are 1-based".into()));
                    }
                    pinned.entry(label).or_default().extend(elements);
                }
            }
        }
        let mut canonical: Vec<(Vec<usize>, Decoration)> = Vec::new();
        for mut block in free {
            block.sort_unstable();
            canonical.push((block, Decoration::Free));
        }
        for (label, mut block) in pinned {
            block.sort_unstable();
            canonical.push((block, Decoration::Pinned(label)));
        }
        canonical.sort_by(|a, b| a.0[0].cmp(&b.0[0]));

        let mut seen = vec![false; n];
        for (block, _) in &canonical {
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} out of range 1..={n}"
                    )));
                }
                if seen[e - 1] {
                    return Err(Error::InvalidArgument(format!(
                        "element {e} appears in two blocks"
                    )));
                }
                seen[e - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArgument(format!(
                "element {} is not covered",
                missing + 1
            )));
        }
        Ok(Self {
            n,
            blocks: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(Vec<usize>, Decoration)] {
        &self.blocks
    }

    fn max_label(&self) -> u32 {
        self.blocks
            .iter()
            .filter_map(|(_, d)| match d {
                Decoration::Pinned(l) => Some(*l),
                Decoration::Free => None,
            })
            .max()
            .unwrap_or(0)
    }
}

/// Rational combination of decorated partitions of `{1..n}` with labels
/// drawn from `{1..d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClassSum {
    n: usize,
    labels: u32,
    terms: BTreeMap<DecoratedPartition, Rational>,
}

impl PartitionClassSum {
    pub fn new(n: usize, labels: u32) -> Self {
        Self {
            n,
            labels,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> u32 {
        self.labels
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, class: &DecoratedPartition) -> Rational {
        self.terms
            .get(class)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, class: DecoratedPartition, coeff: Rational) -> Result<()> {
        if class.n() != self.n {
            return Err(Error::InvalidArgument(format!(
                "partition of {} points in a sum over {} points",
                class.n(),
                self.n
            )));
        }
        if class.max_label() > self.labels {
            return Err(Error::InvalidArgument(format!(
                "label {} exceeds alphabet 1..={}",
                class.max_label(),
                self.labels
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(class).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }
}

/// The class `[G_n]` of the truncated linear system of a base point free
/// `g^r_d` in `A^(d-r)(C_n)`:
///
/// ```text
/// [G_n] = sum over 1 <= i_1 <= ... <= i_r, sum i_u <= n, of
///     binomial(d, n - sum i_u) prod_u ((-1)^(i_u - 1) / i_u)
///     [delta_{i_1,...,i_r} + (n - sum i_u) o]
/// ```
pub fn truncated_system_class(d: u64, r: u32, n: u32) -> Result<SymmetricClassSum> {
    if r == 0 || r > n || (n as u64) > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n <= d, got r = {r}, n = {n}, d = {d}"
        )));
    }
    let mut out = SymmetricClassSum::new(n);
    for multiset in nondecreasing_multisets(r as usize, n) {
        let total: u32 = multiset.iter().sum();
        let mut coeff = rational::from_bigint(binomial(d as i64, (n - total) as i64));
        if coeff.is_zero() {
            continue;
        }
        for &i in &multiset {
            coeff *= rational::sign(i as u64 + 1);
            coeff /= rational::from_int(i as i64);
        }
        out.add_term(DiagonalClass::new(multiset, n - total)?, coeff)?;
    }
    Ok(out)
}

/// All nondecreasing tuples of `parts` positive integers with sum at most
/// `cap`.
fn nondecreasing_multisets(parts: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(parts: usize, cap: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == parts {
            out.push(prefix.clone());
            return;
        }
        let used: u32 = prefix.iter().sum();
        let remaining = (parts - prefix.len() - 1) as u32;
        let mut i = min;
        // Each later entry is >= i, so i + remaining * i must fit under cap.
        while used + i * (remaining + 1) <= cap {
            prefix.push(i);
            rec(parts, cap, i, prefix, out);
            prefix.pop();
            i += 1;
        }
    }
    let mut out = Vec::new();
    rec(parts, cap, 1, &mut Vec::new(), &mut out);
    out
}

/// Pushes a symmetric class sum down to the tautological ring of a genus-`g`
/// Jacobian. A diagonal `[delta_{i_1,...,i_r} + m*o]` maps to
/// `(1 / gamma(i)) * prod_u (sum_a i_u^(a+2) C_(a))` under the Pontryagin
/// product; translates disappear modulo algebraic equivalence.
pub fn jacobian_pushdown(sum: &SymmetricClassSum, g: u32) -> Result<TautPolynomial> {
    if g < 2 {
        return Err(Error::InvalidArgument("genus must be at least 2".into()));
    }
    let mut out = TautPolynomial::zero(g);
    for (class, coeff) in sum.terms() {
        let mut product = TautPolynomial::one(g);
        for &i in class.multiplicities() {
            let mut factor = TautPolynomial::zero(g);
            for a in 0..g {
                factor.add_term(
                    TautMonomial::new(g, vec![a])?,
                    rational::from_bigint(BigInt::from(i).pow(a + 2)),
                )?;
            }
            product = pontryagin_product(&product, &factor)?;
        }
        let mults: Vec<u64> = class.multiplicities().iter().map(|&i| i as u64).collect();
        let gamma = gamma_multiplicity(&mults)?;
        let scale = coeff / rational::from_bigint(gamma);
        out = out.checked_add(&product.scaled(&scale))?;
    }
    Ok(out)
}

/// The pullback `sigma_k^* [G_k]` to the cartesian power `C^k`: a sum over
/// choices of `r` disjoint free blocks covering part of `{1..k}`, the rest
/// pinned as singletons to pairwise-distinct support labels, with
/// coefficient `prod_u (-1)^(|I_u| - 1) (|I_u| - 1)!`.
pub fn sigma_pullback_class(d: u32, r: u32, k: u32) -> Result<PartitionClassSum> {
    if r == 0 || r > k || k > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= k <= d, got r = {r}, k = {k}, d = {d}"
        )));
    }
    let mut out = PartitionClassSum::new(k as usize, d);
    let mut free: Vec<Vec<usize>> = Vec::new();
    let mut pinned: Vec<usize> = Vec::new();
    enumerate_pullback_structures(
        1,
        k as usize,
        r as usize,
        d,
        &mut free,
        &mut pinned,
        &mut out,
    )?;
    Ok(out)
}

fn enumerate_pullback_structures(
    element: usize,
    k: usize,
    r: usize,
    d: u32,
    free: &mut Vec<Vec<usize>>,
    pinned: &mut Vec<usize>,
    out: &mut PartitionClassSum,
) -> Result<()> {
    if element > k {
        if free.len() != r {
            return Ok(());
        }
        let mut coeff = Rational::one();
        for block in free.iter() {
            let size = block.len() as u64;
            coeff *= rational::from_bigint(factorial(size - 1)) * rational::sign(size + 1);
        }
        let mut labels = Vec::new();
        emit_label_assignments(free, pinned, d, &coeff, &mut labels, out)?;
        return Ok(());
    }
    // Join an existing free block.
    for j in 0..free.len() {
        free[j].push(element);
        enumerate_pullback_structures(element + 1, k, r, d, free, pinned, out)?;
        free[j].pop();
    }
    // Open a new free block; blocks are created in order of least element,
    // so each unordered family is produced exactly once.
    if free.len() < r {
        free.push(vec![element]);
        enumerate_pullback_structures(element + 1, k, r, d, free, pinned, out)?;
        free.pop();
    }
    // Pin it.
    pinned.push(element);
    enumerate_pullback_structures(element + 1, k, r, d, free, pinned, out)?;
    pinned.pop();
    Ok(())
}

/// Assigns pairwise-distinct labels to the pinned positions (all injective
/// maps into `{1..d}`) and emits one class per assignment.
fn emit_label_assignments(
    free: &[Vec<usize>],
    pinned: &[usize],
    d: u32,
    coeff: &Rational,
    labels: &mut Vec<u32>,
    out: &mut PartitionClassSum,
) -> Result<()> {
    if labels.len() == pinned.len() {
        let mut blocks: Vec<(Vec<usize>, Decoration)> =
            free.iter().map(|b| (b.clone(), Decoration::Free)).collect();
        for (&position, &label) in pinned.iter().zip(labels.iter()) {
            blocks.push((vec![position], Decoration::Pinned(label)));
        }
        let class = DecoratedPartition::new(out.n(), blocks)?;
        out.add_term(class, coeff.clone())?;
        return Ok(());
    }
    for label in 1..=d {
        if labels.contains(&label) {
            continue;
        }
        labels.push(label);
        emit_label_assignments(free, pinned, d, coeff, labels, out)?;
        labels.pop();
    }
    Ok(())
}

/// Pushes a cartesian class sum forward along the addition map
/// `sigma_n: C^n -> C_n`. Free block sizes become the diagonal multiset,
/// weighted by the product of run-length factorials (the generic fiber
/// count); pinned blocks collapse to the base multiplicity, since all
/// translates are algebraically equivalent.
pub fn sigma_pushforward(sum: &PartitionClassSum) -> Result<SymmetricClassSum> {
    let mut out = SymmetricClassSum::new(sum.n() as u32);
    for (class, coeff) in sum.terms() {
        let mut sizes: Vec<u32> = Vec::new();
        let mut base = 0u32;
        for (block, decoration) in class.blocks() {
            match decoration {
                Decoration::Free => sizes.push(block.len() as u32),
                Decoration::Pinned(_) => base += block.len() as u32,
            }
        }
        sizes.sort_unstable();
        let sorted: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
        let multiplicity = rational::from_bigint(gamma_multiplicity(&sorted)?);
        out.add_term(DiagonalClass::new(sizes, base)?, coeff * multiplicity)?;
    }
    Ok(out)
}

/// Pushforward along `Psi_P` for an ordered `k`-partition `P = (A_1, ...,
/// A_k)` of `{1..n}`: each block `B` of a class on `C^k` maps to the union
/// of the `A_j` for `j` in `B`, keeping its decoration.
pub fn psi_pushforward(
    ordered_partition: &[Vec<usize>],
    class: &DecoratedPartition,
) -> Result<DecoratedPartition> {
    let k = ordered_partition.len();
    if k != class.n() {
        return Err(Error::InvalidArgument(format!(
            "ordered partition has {k} blocks but the class lives on C^{}",
            class.n()
        )));
    }
    let n: usize = ordered_partition.iter().map(Vec::len).sum();
    let mut seen = vec![false; n];
    for block in ordered_partition {
        if block.is_empty() {
            return Err(Error::InvalidArgument(
                "ordered partition has an empty block".into(),
            ));
        }
        for &e in block {
            if e == 0 || e > n || seen[e - 1] {
                return Err(Error::InvalidArgument(
                    "ordered partition does not partition {1..n}".into(),
                ));
            }
            seen[e - 1] = true;
        }
    }
    let blocks = class
        .blocks()
        .iter()
        .map(|(block, decoration)| {
            let mut image: Vec<usize> = block
                .iter()
                .flat_map(|&j| ordered_partition[j - 1].iter().copied())
                .collect();
            image.sort_unstable();
            (image, *decoration)
        })
        .collect();
    DecoratedPartition::new(n, blocks)
}

/// The pullback of the hyperplane-incidence class to `C^n`: a sum over
/// increasing position tuples of length `n - r` and arbitrary
/// (repetition-allowed) support labels of the class pinning those positions,
/// everything else a free singleton. Repeated labels merge into larger
/// pinned blocks during canonicalization.
pub fn hyperplane_pullback_class(d: u32, r: u32, n: u32) -> Result<PartitionClassSum> {
    if r == 0 || r > n || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n and d >= 1, got r = {r}, n = {n}, d = {d}"
        )));
    }
    let n = n as usize;
    let m = n - r as usize;
    let mut out = PartitionClassSum::new(n, d);
    for positions in subsets_of_size(n, m) {
        let mut labels = vec![1u32; m];
        loop {
            let mut blocks: Vec<(Vec<usize>, Decoration)> = Vec::with_capacity(n);
            let mut is_pinned = vec![false; n];
            for (pos, &label) in positions.iter().zip(&labels) {
                blocks.push((vec![*pos], Decoration::Pinned(label)));
                is_pinned[*pos - 1] = true;
            }
            for e in 1..=n {
                if !is_pinned[e - 1] {
                    blocks.push((vec![e], Decoration::Free));
                }
            }
            out.add_term(DecoratedPartition::new(n, blocks)?, Rational::one())?;

            // Odometer over label tuples in {1..d}^m.
            let mut carry = true;
            for slot in labels.iter_mut().rev() {
                if *slot < d {
                    *slot += 1;
                    carry = false;
                    break;
                }
                *slot = 1;
            }
            if carry {
                break;
            }
        }
    }
    Ok(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for e in start..=n {
            prefix.push(e);
            rec(e + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Default guard on the recursion verifier; ordered-partition counts grow
/// super-exponentially in `n`.
pub const DEFAULT_RECURSION_LIMIT: u32 = 5;

/// Checks the recursion
///
/// ```text
/// Phi^n* [H] = sum_{k=r}^{n} (1/k!) sum_{P ordered k-partition of {1..n}}
///     Psi_P_* (sigma_k^* [G_k])
/// ```
///
/// exactly, as canonical partition class sums. Guarded at `n <= 5`; see
/// [`verify_recursion_with_limit`] to override.
pub fn verify_recursion(d: u32, r: u32, n: u32) -> Result<bool> {
    verify_recursion_with_limit(d, r, n, DEFAULT_RECURSION_LIMIT)
}

/// As [`verify_recursion`] with an explicit guard on `n`.
pub fn verify_recursion_with_limit(d: u32, r: u32, n: u32, max_n: u32) -> Result<bool> {
    if n > max_n {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the recursion guard {max_n}"
        )));
    }
    if r == 0 || r > n || n > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n <= d, got r = {r}, n = {n}, d = {d}"
        )));
    }
    let lhs = hyperplane_pullback_class(d, r, n)?;
    let mut rhs = PartitionClassSum::new(n as usize, d);
    for k in r..=n {
        let pullback = sigma_pullback_class(d, r, k)?;
        let weight = Rational::new(BigInt::one(), factorial(k as u64));
        for ordered in ordered_partitions(n as usize, k as usize) {
            for (class, coeff) in pullback.terms() {
                let image = psi_pushforward(&ordered, class)?;
                rhs.add_term(image, coeff * &weight)?;
            }
        }
    }
    Ok(lhs == rhs)
}

/// All ordered `k`-partitions of `{1..n}`: surjections `{1..n} -> {1..k}`
/// read off as their ordered fibers.
fn ordered_partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut assignment = vec![0usize; n];
    loop {
        let mut blocks = vec![Vec::new(); k];
        for (e, &j) in assignment.iter().enumerate() {
            blocks[j].push(e + 1);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
        let mut carry = true;
        for slot in assignment.iter_mut().rev() {
            if *slot + 1 < k {
                *slot += 1;
                carry = false;
                break;
            }
            *slot = 0;
        }
        if carry {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taut::generate_relation;

    fn diag(mults: &[u32], base: u32) -> DiagonalClass {
        DiagonalClass::new(mults.to_vec(), base).unwrap()
    }

    #[test]
    fn truncated_system_class_base_case() {
        // n = r: only the all-ones multiset fits.
        let cls = truncated_system_class(4, 2, 2).unwrap();
        assert_eq!(cls.term_count(), 1);
        assert_eq!(cls.coefficient(&diag(&[1, 1], 0)), Rational::one());
    }

    #[test]
    fn truncated_system_class_pencil_degree_three() {
        let cls = truncated_system_class(3, 1, 3).unwrap();
        assert_eq!(cls.coefficient(&diag(&[1], 2)), rational::from_int(3));
        assert_eq!(cls.coefficient(&diag(&[2], 1)), rational::ratio(-3, 2));
        assert_eq!(cls.coefficient(&diag(&[3], 0)), rational::ratio(1, 3));
        assert_eq!(cls.term_count(), 3);
    }

    #[test]
    fn truncated_system_class_net_degree_five() {
        let cls = truncated_system_class(5, 2, 5).unwrap();
        let expected: &[(&[u32], (i64, i64))] = &[
            (&[1, 1], (10, 1)),
            (&[1, 2], (-5, 1)),
            (&[2, 2], (5, 4)),
            (&[1, 3], (5, 3)),
            (&[1, 4], (-1, 4)),
            (&[2, 3], (-1, 6)),
        ];
        assert_eq!(cls.term_count(), expected.len());
        for (mults, (p, q)) in expected {
            let m = diag(mults, 5 - mults.iter().sum::<u32>());
            assert_eq!(cls.coefficient(&m), rational::ratio(*p, *q), "at {mults:?}");
        }
    }

    #[test]
    fn degree_bookkeeping_is_enforced() {
        let mut sum = SymmetricClassSum::new(4);
        assert!(sum.add_term(diag(&[2], 1), Rational::one()).is_err());
        assert!(sum.add_term(diag(&[2, 1], 1), Rational::one()).is_ok());
        assert!(truncated_system_class(3, 1, 4).is_err());
    }

    #[test]
    fn pushdown_of_single_diagonal() {
        // [delta_2] in C_2 maps to sum_a 2^(a+2) C_(a).
        let mut cls = SymmetricClassSum::new(2);
        cls.add_term(diag(&[2], 0), Rational::one()).unwrap();
        let p = jacobian_pushdown(&cls, 4).unwrap();
        for a in 0..4u32 {
            let m = TautMonomial::new(4, vec![a]).unwrap();
            assert_eq!(p.coefficient(&m), rational::from_int(1 << (a + 2)));
        }
    }

    #[test]
    fn pushdown_halves_the_small_diagonal_square() {
        // [delta_{1,1}] carries gamma = 2.
        let mut cls = SymmetricClassSum::new(2);
        cls.add_term(diag(&[1, 1], 0), Rational::one()).unwrap();
        let p = jacobian_pushdown(&cls, 3).unwrap();
        let m = TautMonomial::new(3, vec![0, 0]).unwrap();
        assert_eq!(p.coefficient(&m), rational::ratio(1, 2));
        let m = TautMonomial::new(3, vec![0, 1]).unwrap();
        assert_eq!(p.coefficient(&m), rational::from_int(1));
    }

    #[test]
    fn pushdown_of_system_class_gives_relations() {
        // Graded parts of the pushed-down [G_d] are proportional to the
        // generated relations.
        let g = 5;
        let cls = truncated_system_class(5, 2, 5).unwrap();
        let push = jacobian_pushdown(&cls, g).unwrap();
        for s in 0..=6u64 {
            let part = push.graded_part(s);
            let rel = generate_relation(g, 2, 5, s).unwrap();
            assert_eq!(part.is_zero(), rel.is_zero(), "at s = {s}");
            if !part.is_zero() {
                assert!(part.as_multiple_of(&rel).is_some(), "at s = {s}");
            }
        }
    }

    #[test]
    fn sigma_pullback_base_case() {
        let cls = sigma_pullback_class(5, 3, 3).unwrap();
        assert_eq!(cls.term_count(), 1);
        let all_free = DecoratedPartition::new(
            3,
            vec![
                (vec![1], Decoration::Free),
                (vec![2], Decoration::Free),
                (vec![3], Decoration::Free),
            ],
        )
        .unwrap();
        assert_eq!(cls.coefficient(&all_free), Rational::one());
    }

    #[test]
    fn sigma_pullback_small_enumeration() {
        // (d, r, k) = (3, 1, 2): one doubleton with coefficient -1, plus
        // 3 + 3 pinned-singleton classes with coefficient +1.
        let cls = sigma_pullback_class(3, 1, 2).unwrap();
        assert_eq!(cls.term_count(), 7);
        let doubleton = DecoratedPartition::new(2, vec![(vec![1, 2], Decoration::Free)]).unwrap();
        assert_eq!(cls.coefficient(&doubleton), rational::from_int(-1));
        for label in 1..=3u32 {
            for (free, pinned) in [(1usize, 2usize), (2, 1)] {
                let class = DecoratedPartition::new(
                    2,
                    vec![
                        (vec![free], Decoration::Free),
                        (vec![pinned], Decoration::Pinned(label)),
                    ],
                )
                .unwrap();
                assert_eq!(cls.coefficient(&class), Rational::one());
            }
        }

        assert_eq!(sigma_pullback_class(2, 1, 2).unwrap().term_count(), 5);
    }

    #[test]
    fn pushforward_multiplicities() {
        // Two free blocks of equal size push forward with multiplicity 2.
        let class = DecoratedPartition::new(
            4,
            vec![
                (vec![1, 2], Decoration::Free),
                (vec![3, 4], Decoration::Free),
            ],
        )
        .unwrap();
        let mut sum = PartitionClassSum::new(4, 3);
        sum.add_term(class, Rational::one()).unwrap();
        let image = sigma_pushforward(&sum).unwrap();
        assert_eq!(image.coefficient(&diag(&[2, 2], 0)), rational::from_int(2));

        // Free singletons push forward with multiplicity r!.
        let class = DecoratedPartition::new(
            3,
            vec![
                (vec![1], Decoration::Free),
                (vec![2], Decoration::Free),
                (vec![3], Decoration::Free),
            ],
        )
        .unwrap();
        let mut sum = PartitionClassSum::new(3, 3);
        sum.add_term(class, Rational::one()).unwrap();
        let image = sigma_pushforward(&sum).unwrap();
        assert_eq!(
            image.coefficient(&diag(&[1, 1, 1], 0)),
            rational::from_int(6)
        );
    }

    #[test]
    fn pushforward_pullback_composition() {
        for (d, r, n) in [(3u32, 1u32, 2u32), (4, 1, 3), (4, 2, 3), (5, 2, 4)] {
            let composed = sigma_pushforward(&sigma_pullback_class(d, r, n).unwrap()).unwrap();
            let expected = truncated_system_class(d as u64, r, n)
                .unwrap()
                .scaled(&rational::from_bigint(factorial(n as u64)));
            assert_eq!(composed, expected, "at (d, r, n) = ({d}, {r}, {n})");
        }
    }

    #[test]
    fn psi_pushforward_examples() {
        let class = DecoratedPartition::new(
            2,
            vec![
                (vec![1], Decoration::Free),
                (vec![2], Decoration::Pinned(2)),
            ],
        )
        .unwrap();

        // Identity partition.
        let identity = vec![vec![1], vec![2]];
        assert_eq!(psi_pushforward(&identity, &class).unwrap(), class);

        // P = ({1,2},{3}).
        let p = vec![vec![1, 2], vec![3]];
        let image = psi_pushforward(&p, &class).unwrap();
        let expected = DecoratedPartition::new(
            3,
            vec![
                (vec![1, 2], Decoration::Free),
                (vec![3], Decoration::Pinned(2)),
            ],
        )
        .unwrap();
        assert_eq!(image, expected);

        // Block count mismatch and malformed partitions are rejected.
        assert!(psi_pushforward(&[vec![1]], &class).is_err());
        assert!(psi_pushforward(&[vec![1], vec![1]], &class).is_err());
        assert!(psi_pushforward(&[vec![1], vec![]], &class).is_err());
    }

    #[test]
    fn canonicalization_merges_equal_labels() {
        let raw = vec![
            (vec![2], Decoration::Pinned(1)),
            (vec![1], Decoration::Pinned(1)),
            (vec![3], Decoration::Free),
        ];
        let class = DecoratedPartition::new(3, raw).unwrap();
        assert_eq!(
            class.blocks(),
            &[
                (vec![1, 2], Decoration::Pinned(1)),
                (vec![3], Decoration::Free),
            ]
        );
        // Idempotent: rebuilding from canonical blocks changes nothing.
        let again = DecoratedPartition::new(3, class.blocks().to_vec()).unwrap();
        assert_eq!(again, class);
    }

    #[test]
    fn decorated_partition_validation() {
        assert!(DecoratedPartition::new(2, vec![(vec![1], Decoration::Free)]).is_err());
        assert!(DecoratedPartition::new(
            2,
            vec![(vec![1, 2], Decoration::Free), (vec![2], Decoration::Free)]
        )
        .is_err());
        assert!(DecoratedPartition::new(1, vec![(vec![1], Decoration::Pinned(0))]).is_err());
    }

    #[test]
    fn hyperplane_pullback_examples() {
        // (d, r, n) = (d, 1, 2): 2d pinned-singleton classes.
        let cls = hyperplane_pullback_class(4, 1, 2).unwrap();
        assert_eq!(cls.term_count(), 8);

        // n = r: the all-free class alone.
        let cls = hyperplane_pullback_class(4, 2, 2).unwrap();
        assert_eq!(cls.term_count(), 1);

        // (2, 1, 3): repeated labels merge, so the count drops below
        // binomial(3,2) * 2^2 = 12.
        let cls = hyperplane_pullback_class(2, 1, 3).unwrap();
        let merged = DecoratedPartition::new(
            3,
            vec![
                (vec![1, 2], Decoration::Pinned(1)),
                (vec![3], Decoration::Free),
            ],
        )
        .unwrap();
        assert_eq!(cls.coefficient(&merged), Rational::one());
        assert_eq!(cls.term_count(), 12);
    }

    #[test]
    fn recursion_holds_on_small_cases() {
        assert!(verify_recursion(4, 2, 2).unwrap());
        assert!(verify_recursion(4, 1, 3).unwrap());
        assert!(verify_recursion(5, 2, 4).unwrap());
    }

    #[test]
    fn recursion_guard() {
        assert!(matches!(
            verify_recursion_with_limit(6, 1, 4, 3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(verify_recursion_with_limit(4, 1, 4, 4).unwrap());
    }

    #[test]
    fn ordered_partition_counts() {
        // k! * S(n, k).
        assert_eq!(ordered_partitions(4, 2).len(), 14);
        assert_eq!(ordered_partitions(4, 4).len(), 24);
        assert_eq!(ordered_partitions(3, 1).len(), 1);
        assert_eq!(ordered_partitions(3, 4).len(), 0);
    }
}
