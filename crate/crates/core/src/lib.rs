//! Integer polynomial solutions of `m/(n0 + n1*λ) = 1/x(λ) + 1/y(λ) + 1/z(λ)`.
//!
//! When `gcd(n0, n1) = gcd(n1, m) = 1` every such solution has the shape
//! `x = k*n`, `y = n*(s + r*λ)`, `z = (k*l/r)*(s + r*λ)` for positive
//! integers satisfying three divisibility conditions. This crate enumerates
//! those parameters, builds the polynomials, checks them exactly and decides
//! solvability for a residue class with a finite certificate.
//!
//! ```
//! use egyptpoly::{decide, ResidueClass};
//!
//! let rc = ResidueClass::from_i64(5, 7, 9).unwrap();
//! let out = decide(&rc).unwrap();
//! assert!(out.is_solvable());
//! assert_eq!(out.solutions[0].triple.y.to_string(), "7 + 16λ + 9λ^2");
//! ```

pub mod arith;
pub mod base;
pub mod error;
pub mod families;
pub mod qpoly;
pub mod report;
pub mod scan;
pub mod theorem;

pub use arith::{int, Integer, Rational};
pub use base::{enumerate_base_solutions, triples_with_member, BaseTriple};
pub use error::{Error, Result};
pub use families::{
    discriminant_identity, minus_family, plus_family, Branch, DiscriminantReport, FamilySolution, RoleTriple,
};
pub use qpoly::RationalPoly;
pub use scan::{
    audit, audit_condition_i, audit_corollary3, audit_corollary4, scan_residues, scan_selected, AuditReport, Corollary,
    ScanReport, Verdict,
};
pub use theorem::{
    analyze_degrees, condition_iii_holds, construct_solution, decide, enumerate_kl, family_solutions, identity_holds,
    identity_residual, search_condition_iii, solve_condition_ii, verify_identity, DecisionOutcome, DegreeReport,
    KlPair, ParamFamily, ParamSet, PolyTriple, ResidueClass, Status,
};
