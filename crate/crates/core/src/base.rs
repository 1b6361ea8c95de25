//! Positive-integer solutions of `m/n0 = 1/a + 1/b + 1/c`.
//!
//! This is the λ = 0 slice of the polynomial problem. The enumeration is
//! finite: with `a <= b <= c` the smallest denominator satisfies
//! `n0/m < a <= 3*n0/m`, and once `a` is fixed the remaining two-term
//! problem `1/b + 1/c = P/Q` is solved through the factorization
//! `(P*b - Q)(P*c - Q) = Q^2`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::Signed;
use serde::Serialize;

use crate::arith::{self, Integer};
use crate::error::{Error, Result};

/// An unordered solution stored as `a <= b <= c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BaseTriple {
    #[serde(with = "crate::report::int_str")]
    pub a: Integer,
    #[serde(with = "crate::report::int_str")]
    pub b: Integer,
    #[serde(with = "crate::report::int_str")]
    pub c: Integer,
}

impl BaseTriple {
    /// Sorts the three members into canonical order.
    pub fn new(x: Integer, y: Integer, z: Integer) -> Self {
        let mut v = [x, y, z];
        v.sort();
        let [a, b, c] = v;
        Self { a, b, c }
    }

    pub fn members(&self) -> [&Integer; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn contains(&self, member: &Integer) -> bool {
        self.members().contains(&member)
    }

    /// Exact check of `1/a + 1/b + 1/c = m/n0` by cross-multiplication.
    pub fn solves(&self, m: &Integer, n0: &Integer) -> bool {
        unit_sum_equals(&self.a, &self.b, &self.c, m, n0)
    }
}

impl fmt::Display for BaseTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.a, self.b, self.c)
    }
}

/// `1/x + 1/y + 1/z == m/n0`, all denominators assumed nonzero.
pub(crate) fn unit_sum_equals(x: &Integer, y: &Integer, z: &Integer, m: &Integer, n0: &Integer) -> bool {
    let lhs = n0 * (y * z + x * z + x * y);
    let rhs = m * x * y * z;
    lhs == rhs
}

fn check_positive(name: &'static str, v: &Integer) -> Result<()> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::out_of_range(name, v, ">= 1"))
    }
}

/// All pairs `y <= z` of positive integers with `1/y + 1/z = num/den`.
/// Returns nothing unless `num/den > 0`.
pub fn unit_fraction_pairs(num: &Integer, den: &Integer) -> Vec<(Integer, Integer)> {
    if !num.is_positive() || !den.is_positive() {
        return Vec::new();
    }
    let g = num.gcd(den);
    let (p, q) = (num / &g, den / &g);
    let q_factors = arith::factorize(&q).expect("q >= 1");
    let squared: Vec<_> = q_factors.into_iter().map(|(f, e)| (f, 2 * e)).collect();
    let q2 = &q * &q;
    // d = p*y - q runs over divisors of q^2 with d <= q so that y <= z
    arith::divisors_from_factors(&squared)
        .into_iter()
        .take_while(|d| d <= &q)
        .filter_map(|d| {
            let y = arith::exact_div(&(&d + &q), &p)?;
            let e = &q2 / &d;
            let z = arith::exact_div(&(e + &q), &p)?;
            Some((y, z))
        })
        .collect()
}

/// Every unordered positive solution of `m/n0 = 1/a + 1/b + 1/c`.
pub fn enumerate_base_solutions(m: &Integer, n0: &Integer) -> Result<BTreeSet<BaseTriple>> {
    check_positive("m", m)?;
    check_positive("n0", n0)?;
    let lo: Integer = n0.div_floor(m) + 1;
    let hi = (n0 * Integer::from(3)).div_floor(m);
    let mut firsts = Vec::new();
    let mut a = lo;
    while a <= hi {
        firsts.push(a.clone());
        a += 1;
    }

    let per_first = |a: &Integer| -> Vec<BaseTriple> {
        // m/n0 - 1/a = (m*a - n0) / (n0*a)
        let num = m * a - n0;
        let den = n0 * a;
        unit_fraction_pairs(&num, &den)
            .into_iter()
            .filter(|(b, _)| b >= a)
            .map(|(b, c)| BaseTriple { a: a.clone(), b, c })
            .collect()
    };

    #[cfg(feature = "parallel")]
    let found: Vec<Vec<BaseTriple>> = {
        use rayon::prelude::*;
        firsts.par_iter().map(per_first).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let found: Vec<Vec<BaseTriple>> = firsts.iter().map(per_first).collect();

    Ok(found.into_iter().flatten().collect())
}

/// The base solutions of `m/n0` that use `member` as one of the denominators.
pub fn triples_with_member(m: &Integer, n0: &Integer, member: &Integer) -> Result<BTreeSet<BaseTriple>> {
    check_positive("m", m)?;
    check_positive("n0", n0)?;
    check_positive("member", member)?;
    // m/n0 - 1/member
    let num = m * member - n0;
    let den = n0 * member;
    Ok(unit_fraction_pairs(&num, &den)
        .into_iter()
        .map(|(y, z)| BaseTriple::new(member.clone(), y, z))
        .collect())
}

/// `true` when some unit-fraction triple sums to `m/n0`.
pub fn has_base_solution(m: &Integer, n0: &Integer) -> Result<bool> {
    Ok(!enumerate_base_solutions(m, n0)?.is_empty())
}
