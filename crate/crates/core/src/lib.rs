//! Exact symbolic computation in the tautological ring of a Jacobian.
//!
//! For a smooth projective curve of genus `g`, the class of the curve inside
//! its Jacobian splits into graded components `C_(0), ..., C_(g-1)` under the
//! Beauville decomposition. When the curve carries a base point free linear
//! system `g^r_d`, these components satisfy linear relations among their
//! Pontryagin products. This crate generates those relations over exact
//! rational arithmetic and verifies the combinatorial identities the whole
//! construction rests on:
//!
//! - [`combinatorics`]: big-integer factorials, generalized binomials,
//!   multinomials and Stirling numbers of the second kind;
//! - [`beta`]: the alternating sums `beta(d, a_1, ..., a_r)` appearing as
//!   relation coefficients, their vanishing threshold and the two summation
//!   lemmas behind it;
//! - [`taut`]: the Pontryagin-monomial algebra `Q[C_(0), ..., C_(g-1)]`,
//!   relation generation, Colombo-van Geemen vanishing and the Polishchuk
//!   monomial rewrite;
//! - [`chow`]: truncated polynomial arithmetic in `CH((P^r)^n x (P^r)*)` and
//!   the hyperplane-incidence class;
//! - [`symmetric`]: formal diagonal classes on the cartesian and symmetric
//!   powers of the curve, the truncated-linear-system class, and the
//!   recursion tying them to the hyperplane class;
//! - [`secant`]: closed-form secant-plane counts (Castelnuovo, Cayley) and
//!   the vanishing consequences they imply.

pub mod beta;
pub mod chow;
pub mod combinatorics;
pub mod error;
pub mod rational;
pub mod secant;
pub mod symmetric;
pub mod taut;

pub use error::{Error, Result};
pub use rational::Rational;
