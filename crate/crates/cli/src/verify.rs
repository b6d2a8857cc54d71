//! The verification suites: every identity, table and grid the library
//! claims, each as a self-timing check. The binary's `verify` subcommand
//! and the acceptance test target both run these.

use std::time::{Duration, Instant};

use num_traits::Zero;

use num_bigint::BigInt;
use tautring::beta::{beta, beta_r1_stirling, monomial_sum_leading_check, sum_int_identity_check};
use tautring::chow::{hyperplane_class_formula, incidence_class_pushdown};
use tautring::combinatorics::{factorial, stirling_alternating_sum};
use tautring::rational::{self, Rational};
use tautring::secant::{cayley_quadrisecants, secant_plane_count, verify_secant_count_identity};
use tautring::symmetric::{
    jacobian_pushdown, sigma_pullback_class, sigma_pushforward, truncated_system_class,
    verify_recursion_with_limit, DEFAULT_RECURSION_LIMIT,
};
use tautring::taut::{generate_relation, monomial_coefficient};

use crate::tables::{compute_row, golden_rows, row_passes};

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn status_line(&self) -> String {
        format!(
            "[{}] {:<28} {:>8.2?}  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed,
            self.detail
        )
    }
}

fn run_check(name: &'static str, body: impl FnOnce() -> (bool, String)) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = body();
    CheckOutcome {
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Criterion 1: the twelve transcribed table rows, recomputed and compared
/// through the raw-or-reduced comparator.
pub fn check_tables() -> CheckOutcome {
    run_check("table-reproduction", || {
        let mut failures = Vec::new();
        let rows = golden_rows();
        for golden in &rows {
            match compute_row(golden.genus, golden.r, golden.d) {
                Ok(row) => {
                    if !row_passes(&row, golden) {
                        failures.push(format!(
                            "g={} g^{}_{}: raw {}, reduced {}, pencil {}",
                            golden.genus,
                            golden.r,
                            golden.d,
                            row.raw_relation,
                            row.reduced_relation,
                            row.pencil_degree
                        ));
                    }
                }
                Err(e) => failures.push(format!(
                    "g={} g^{}_{}: {e}",
                    golden.genus, golden.r, golden.d
                )),
            }
        }
        if failures.is_empty() {
            (true, format!("{} rows match", rows.len()))
        } else {
            (false, failures.join("; "))
        }
    })
}

/// Criterion 2: the beta vanishing theorem, exhaustively for r <= 4,
/// d <= 10, over positive exponent tuples with sum at most d - r + 1.
pub fn check_beta_theorem() -> CheckOutcome {
    run_check("beta-vanishing-theorem", || {
        let mut cases = 0usize;
        for r in 1..=4usize {
            for d in r as u64..=10 {
                let threshold = d - r as u64 + 1;
                for tuple in positive_tuples(r, threshold) {
                    cases += 1;
                    let total: u64 = tuple.iter().sum();
                    let value = match beta(d, &tuple) {
                        Ok(v) => v,
                        Err(e) => return (false, format!("beta({d}, {tuple:?}): {e}")),
                    };
                    if total < threshold {
                        if !value.is_zero() {
                            return (false, format!("beta({d}, {tuple:?}) = {value}, expected 0"));
                        }
                    } else {
                        let mut expected: BigInt = tuple.iter().map(|&a| factorial(a)).product();
                        if d % 2 == 1 {
                            expected = -expected;
                        }
                        if value != expected {
                            return (
                                false,
                                format!("beta({d}, {tuple:?}) = {value}, expected {expected}"),
                            );
                        }
                    }
                }
            }
        }
        (true, format!("{cases} tuples"))
    })
}

fn positive_tuples(r: usize, cap: u64) -> Vec<Vec<u64>> {
    fn rec(r: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        let used: u64 = prefix.iter().sum();
        let remaining = (r - prefix.len() - 1) as u64;
        for v in 1..=(cap - used).saturating_sub(remaining) {
            prefix.push(v);
            rec(r, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if cap >= r as u64 {
        rec(r, cap, &mut Vec::new(), &mut out);
    }
    out
}

/// Criterion 3: the single-index Stirling closed form for d <= 10, a <= 14.
pub fn check_beta_r1_stirling() -> CheckOutcome {
    run_check("beta-r1-stirling-form", || {
        let mut cases = 0usize;
        for d in 1..=10u64 {
            for a in 1..=14u64 {
                cases += 1;
                let direct = beta(d, &[a]).unwrap();
                let closed = beta_r1_stirling(d, a).unwrap();
                if direct != closed {
                    return (
                        false,
                        format!("beta({d}, [{a}]) = {direct} but Stirling form gives {closed}"),
                    );
                }
            }
        }
        (true, format!("{cases} pairs"))
    })
}

/// Criterion 4: the alternating Stirling sum vanishes for 2 <= i <= 25.
pub fn check_stirling_alternating() -> CheckOutcome {
    run_check("stirling-alternating-sum", || {
        for i in 2..=25u64 {
            let value = stirling_alternating_sum(i);
            if !value.is_zero() {
                return (false, format!("G({i}) = {value}, expected 0"));
            }
        }
        (true, "G(i) = 0 for 2 <= i <= 25".to_string())
    })
}

/// Criterion 5: the secant-count identity A = B for r <= 6, plus the
/// quadrisecant and plane-node specializations.
pub fn check_secant_identities() -> CheckOutcome {
    run_check("secant-count-identity", || {
        for r in 1..=6i64 {
            match verify_secant_count_identity(r) {
                Ok(true) => {}
                Ok(false) => return (false, format!("A != B at r = {r}")),
                Err(e) => return (false, format!("r = {r}: {e}")),
            }
        }
        for d in 6..=14i64 {
            for g in 0..=12i64 {
                if secant_plane_count(3, d, g).unwrap() != cayley_quadrisecants(d, g) {
                    return (false, format!("A(3,{d},{g}) != Cayley"));
                }
            }
        }
        for d in 4..=12i64 {
            for g in 0..=12i64 {
                let nodes = rational::from_int((d - 1) * (d - 2) / 2 - g);
                if secant_plane_count(2, d, g).unwrap() != nodes {
                    return (false, format!("A(2,{d},{g}) != (d-1)(d-2)/2 - g"));
                }
            }
        }
        (
            true,
            "A = B for r <= 6; Cayley and node forms agree".to_string(),
        )
    })
}

/// Criterion 6: the folded monomial coefficient equals
/// (-1)^r (g+r-d-2)! (d-2r+2)! A(r,d,g).
pub fn check_monomial_coefficient_identity() -> CheckOutcome {
    run_check("monomial-coefficient", || {
        let mut cases = 0usize;
        for r in 1..=4i64 {
            for d in 2 * r + 1..=2 * r + 6 {
                for g in d + 2 - r..=d + 10 {
                    cases += 1;
                    let folded = match monomial_coefficient(r, d, g) {
                        Ok(v) => v,
                        Err(e) => return (false, format!("({r},{d},{g}): {e}")),
                    };
                    let mut expected: Rational = secant_plane_count(r, d, g).unwrap();
                    expected *= rational::from_bigint(
                        factorial((g + r - d - 2) as u64) * factorial((d - 2 * r + 2) as u64),
                    );
                    expected *= rational::sign(r as u64);
                    if folded != expected {
                        return (false, format!("({r},{d},{g}): {folded} != {expected}"));
                    }
                }
            }
        }
        (true, format!("{cases} triples"))
    })
}

/// Criterion 7: incidence pushdown equals the closed hyperplane-class
/// formula for all 0 <= r <= n <= 6.
pub fn check_chow() -> CheckOutcome {
    run_check("hyperplane-class", || {
        for n in 0..=6usize {
            for r in 0..=n as u32 {
                let pushdown = incidence_class_pushdown(n, r).unwrap();
                let formula = hyperplane_class_formula(n, r).unwrap();
                if pushdown != formula {
                    return (false, format!("mismatch at (n, r) = ({n}, {r})"));
                }
            }
        }
        (true, "all (n, r) with n <= 6".to_string())
    })
}

/// Criterion 8: the hyperplane-pullback recursion for r in {1, 2},
/// r <= n <= limit, n <= d <= 6.
pub fn check_recursion(limit: u32) -> CheckOutcome {
    run_check("pullback-recursion", || {
        let mut cases = 0usize;
        let max_n = limit.min(6);
        for r in 1..=2u32 {
            for n in r..=max_n {
                for d in n..=6u32 {
                    cases += 1;
                    match verify_recursion_with_limit(d, r, n, max_n) {
                        Ok(true) => {}
                        Ok(false) => {
                            return (false, format!("recursion fails at (d,r,n)=({d},{r},{n})"))
                        }
                        Err(e) => return (false, format!("(d,r,n)=({d},{r},{n}): {e}")),
                    }
                }
            }
        }
        (true, format!("{cases} cases, n <= {max_n}"))
    })
}

/// Criterion 9: pushforward of the pullback is n! times the system class,
/// for all 1 <= r <= n <= 5, n <= d <= 6.
pub fn check_sigma_multiplicities() -> CheckOutcome {
    run_check("pushforward-multiplicities", || {
        let mut cases = 0usize;
        for n in 1..=5u32 {
            for r in 1..=n {
                for d in n..=6u32 {
                    cases += 1;
                    let composed =
                        sigma_pushforward(&sigma_pullback_class(d, r, n).unwrap()).unwrap();
                    let expected = truncated_system_class(d as u64, r, n)
                        .unwrap()
                        .scaled(&rational::from_bigint(factorial(n as u64)));
                    if composed != expected {
                        return (false, format!("mismatch at (d,r,n)=({d},{r},{n})"));
                    }
                }
            }
        }
        (true, format!("{cases} cases"))
    })
}

/// Criterion 10: the graded parts of the pushed-down system class are
/// rational multiples of the generated relations, vanishing simultaneously,
/// for r <= 3, d <= 8, g <= 10, s <= 6.
pub fn check_pipeline_closure() -> CheckOutcome {
    run_check("pipeline-closure", || {
        let mut cases = 0usize;
        for r in 1..=3u32 {
            for d in r as u64..=8 {
                for g in 2..=10u32 {
                    let system = truncated_system_class(d, r, d as u32).unwrap();
                    let pushed = jacobian_pushdown(&system, g).unwrap();
                    for s in 0..=6u64 {
                        cases += 1;
                        let part = pushed.graded_part(s);
                        let rel = generate_relation(g, r, d, s).unwrap();
                        if part.is_zero() != rel.is_zero() {
                            return (
                                false,
                                format!("vanishing differs at (g,r,d,s)=({g},{r},{d},{s})"),
                            );
                        }
                        if !rel.is_zero() {
                            match part.as_multiple_of(&rel) {
                                Some(q) if !q.is_zero() => {}
                                _ => {
                                    return (
                                        false,
                                        format!("not a multiple at (g,r,d,s)=({g},{r},{d},{s})"),
                                    )
                                }
                            }
                        }
                    }
                }
            }
        }
        (true, format!("{cases} graded parts"))
    })
}

/// Criterion 11: the two summation lemmas, by brute-force oracle.
pub fn check_sum_lemmas() -> CheckOutcome {
    run_check("summation-lemmas", || {
        let mut cases = 0usize;
        for n in 1..=3usize {
            for tuple in exponent_tuples(n, 3) {
                cases += 1;
                let degree: u64 = tuple.iter().sum::<u64>() + n as u64;
                match monomial_sum_leading_check(&tuple, degree + 2) {
                    Ok(true) => {}
                    Ok(false) => return (false, format!("leading term fails at {tuple:?}")),
                    Err(e) => return (false, format!("{tuple:?}: {e}")),
                }
            }
        }
        for r in 2..=4usize {
            for tuple in exponent_tuples(r, 4) {
                cases += 1;
                match sum_int_identity_check(&tuple) {
                    Ok(true) => {}
                    Ok(false) => return (false, format!("sum identity fails at {tuple:?}")),
                    Err(e) => return (false, format!("{tuple:?}: {e}")),
                }
            }
        }
        (true, format!("{cases} tuples"))
    })
}

/// All tuples of length `n` with entries in `0..=max`.
fn exponent_tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=max).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Criterion 12: relations vanish strictly below the threshold
/// s = d - 2r + 1, on the grid of criterion 10.
pub fn check_first_nontrivial_threshold() -> CheckOutcome {
    run_check("first-nontrivial-threshold", || {
        let mut cases = 0usize;
        for r in 1..=3u32 {
            for d in r as u64..=8 {
                let threshold = d as i64 - 2 * r as i64 + 1;
                for g in 2..=10u32 {
                    let mut s = 0i64;
                    while s < threshold {
                        cases += 1;
                        let rel = generate_relation(g, r, d, s as u64).unwrap();
                        if !rel.is_zero() {
                            return (
                                false,
                                format!("nonzero below threshold at (g,r,d,s)=({g},{r},{d},{s})"),
                            );
                        }
                        s += 1;
                    }
                }
            }
        }
        (true, format!("{cases} graded pieces"))
    })
}

/// Named suites exposed by the `verify` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Beta,
    Tables,
    Recursion,
    Chow,
    Identities,
    Pipeline,
}

/// Runs a suite with the given recursion guard, collecting outcomes.
pub fn run_suite(suite: Suite, recursion_limit: u32) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Tables {
        outcomes.push(check_tables());
    }
    if all || suite == Suite::Beta {
        outcomes.push(check_beta_theorem());
        outcomes.push(check_beta_r1_stirling());
        outcomes.push(check_stirling_alternating());
        outcomes.push(check_sum_lemmas());
    }
    if all || suite == Suite::Identities {
        outcomes.push(check_secant_identities());
        outcomes.push(check_monomial_coefficient_identity());
    }
    if all || suite == Suite::Chow {
        outcomes.push(check_chow());
    }
    if all || suite == Suite::Recursion {
        outcomes.push(check_recursion(recursion_limit));
        outcomes.push(check_sigma_multiplicities());
    }
    if all || suite == Suite::Pipeline {
        outcomes.push(check_pipeline_closure());
        outcomes.push(check_first_nontrivial_threshold());
    }
    outcomes
}

/// The recursion guard, honoring the `TAUT_MAX_N` override.
pub fn recursion_limit_from_env() -> u32 {
    std::env::var("TAUT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_RECURSION_LIMIT)
}
