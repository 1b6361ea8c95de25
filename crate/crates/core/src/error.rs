use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A scalar parameter fell outside its admissible range.
    #[error("{name} = {value} violates bound {bound}")]
    OutOfRange {
        name: &'static str,
        value: BigInt,
        bound: &'static str,
    },

    /// Two parameters that must be coprime share a factor.
    #[error("gcd({a_name}, {b_name}) = {values}, expected 1")]
    NotCoprime {
        a_name: &'static str,
        b_name: &'static str,
        values: String,
    },

    #[error("extended gcd of (0, 0) is undefined")]
    BothZero,

    #[error("parameter set violates {condition}: {detail}")]
    InvalidParams { condition: &'static str, detail: String },

    #[error("({roles}) does not solve {fraction} = 1/x0 + 1/y0 + 1/z0")]
    InvalidRoleTriple { fraction: String, roles: String },

    #[error("polynomial triple does not satisfy the identity for m = {m}, n = {n0} + {n1}λ")]
    Unverified { m: BigInt, n0: BigInt, n1: BigInt },

    #[error("polynomial parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed. Reaching this is a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: &BigInt, bound: &'static str) -> Self {
        Error::OutOfRange {
            name,
            value: value.clone(),
            bound,
        }
    }
}
