//! Text and JSON rendering of relations.

use serde_json::{json, Value};
use tautring::taut::{GradedLabel, TautPolynomial};

/// Renders a relation as an equation: `3*C(0)*C(2) + C(1)^2 = 0`, or
/// `0 = 0 (trivial)` for the empty relation.
pub fn relation_text(p: &TautPolynomial) -> String {
    if p.is_zero() {
        "0 = 0 (trivial)".to_string()
    } else {
        format!("{p} = 0")
    }
}

/// The stable JSON shape: the polynomial's canonical form plus a `grading`
/// annotation. For a zero polynomial the caller supplies the label of the
/// graded piece the relation was requested in.
pub fn relation_json(p: &TautPolynomial, label: GradedLabel) -> Value {
    let mut value = p.to_json();
    value["grading"] = json!({ "codim": label.codim, "index": label.index });
    value
}
