//! Exact arithmetic in the Eisenstein integers and decision procedures for
//! `x^3 + y^3 = M` over `Q` and over `K = Q(w)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`eisenstein`] and [`kelement`]: the ring `O = Z[w]` and its fraction field.
//! - [`factorization`]: prime classification, splitting and unique factorization.
//! - [`criteria`]: condition (I), Exceptional A and Exceptional B.
//! - [`constructors`]: explicit witnesses and the executable descent.
//! - [`search`]: bounded witness searches and exhaustive corollary checks.
//! - [`classifier`]: cube-class canonicalization and theorem dispatch.
//! - [`tables`], [`verify`] and [`cli`]: table regeneration, self-checks and
//!   the `cubesum` command line.

pub mod arith;
pub mod classifier;
pub mod cli;
pub mod constructors;
pub mod criteria;
pub mod eisenstein;
pub mod error;
pub mod factorization;
pub mod kelement;
pub mod search;
pub mod syntax;
pub mod tables;
pub mod verify;

pub use classifier::{canonicalize, classify, classify_eint, CanonicalM, Pattern, Scope, Status, TheoremTag, Verdict};
pub use eisenstein::{EisensteinInt, Unit};
pub use error::{Error, Result};
pub use factorization::{classify_rational_prime, factor, Factorization, PrimeClass};
pub use kelement::KElement;
pub use search::SearchBudget;

