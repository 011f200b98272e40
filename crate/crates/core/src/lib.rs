//! Exact Hurwitz continued fractions over the Gaussian integers.
//!
//! The crate covers Gaussian arithmetic, continued-fraction folding, the
//! Hurwitz algorithm and its successor rules, the prototype-set automaton,
//! constructive Zaremba certificates, and numbers with prescribed
//! irrationality exponent built by iterated folding. No floating point is
//! used anywhere.

pub mod cf;
pub mod error;
pub mod exact;
pub mod gaussian;
pub mod geometry;
pub mod hcf;
pub mod spectrum;
pub mod successor;
pub mod zaremba;

pub use cf::{
    convergents, evaluate, fold, fold_unit, mirror, mirror_negate, CfSequence, ConvergentTable,
};
pub use error::{Error, Result};
pub use gaussian::{
    gauss_gcd, in_fundamental_domain, nearest_gaussian, GaussianInt, GaussianRational, Unit,
};
pub use hcf::{
    convergent_detector, digit_in_alphabet, error_sandwich, hcf_expand, is_reversible_real,
    HcfExpansion,
};
pub use spectrum::{build_xi, encode_base_b, schedule_from_tau, XiNumber, XiVariant};
pub use successor::{allowed_successors, SuccessorRule};
pub use zaremba::{
    brute_force_min_k, certify, verify_certificate, ZarembaBase, ZarembaCertificate,
};
