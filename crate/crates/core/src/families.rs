//! The two rational solution families that grow a base solution
//! `(x0, y0, z0)` of `m/n0` into polynomials in λ, plus the discriminant
//! identity that rules out a cubic `y`.
//!
//! With `a = n1/n0`:
//!
//! plus branch
//! ```text
//! x = x0 + x0*a*λ
//! z = z0 + a*y0*z0/(y0 + z0)*λ
//! y = y0 + y0*a*(1 + y0/(y0 + z0))*λ + (y0*a)^2/(y0 + z0)*λ^2
//! ```
//!
//! minus branch
//! ```text
//! x = x0 + (n1/m)*(x0 + z0)/z0*λ
//! z = z0 + (n1/m)*(x0 + z0)/x0*λ
//! y = y0 + (2*y0*a - n1/m)*λ + a*(y0*a - n1/m)*λ^2
//! ```

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{Integer, Rational};
use crate::base::{unit_sum_equals, BaseTriple};
use crate::error::{Error, Result};
use crate::qpoly::RationalPoly;
use crate::theorem::{PolyTriple, ResidueClass};

/// A base solution with each member assigned to a role.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RoleTriple {
    #[serde(with = "crate::report::int_str")]
    pub x0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub y0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub z0: Integer,
}

impl RoleTriple {
    pub fn new(x0: Integer, y0: Integer, z0: Integer) -> Self {
        Self { x0, y0, z0 }
    }

    pub fn from_i64(x0: i64, y0: i64, z0: i64) -> Self {
        Self::new(x0.into(), y0.into(), z0.into())
    }

    /// Rejects anything that is not a positive solution of `m/n0`.
    pub fn check(&self, m: &Integer, n0: &Integer) -> Result<()> {
        let positive = self.x0.is_positive() && self.y0.is_positive() && self.z0.is_positive();
        if positive && unit_sum_equals(&self.x0, &self.y0, &self.z0, m, n0) {
            Ok(())
        } else {
            Err(Error::InvalidRoleTriple {
                fraction: format!("{m}/{n0}"),
                roles: format!("{}, {}, {}", self.x0, self.y0, self.z0),
            })
        }
    }
}

impl fmt::Display for RoleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x0={}, y0={}, z0={})", self.x0, self.y0, self.z0)
    }
}

impl BaseTriple {
    /// The distinct ways to hand the three members to `(x0, y0, z0)`.
    pub fn role_assignments(&self) -> Vec<RoleTriple> {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let m = self.members();
        let mut out: Vec<RoleTriple> = PERMS
            .iter()
            .map(|p| RoleTriple::new(m[p[0]].clone(), m[p[1]].clone(), m[p[2]].clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(Error::Parse(format!(
                "unknown branch {other:?}, expected plus or minus"
            ))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySolution {
    pub branch: Branch,
    #[serde(flatten)]
    pub triple: PolyTriple,
    /// Every coefficient of every polynomial is a positive integer.
    pub integral: bool,
    /// `y` lost its quadratic term, or `x`/`z` their linear one.
    pub degenerate: bool,
}

impl FamilySolution {
    fn new(branch: Branch, triple: PolyTriple) -> Self {
        let integral = triple.is_positive_integral();
        let degenerate =
            !(triple.x.degree() == Some(1) && triple.z.degree() == Some(1) && triple.y.degree() == Some(2));
        Self {
            branch,
            triple,
            integral,
            degenerate,
        }
    }
}

fn q(v: &Integer) -> Rational {
    Rational::from_integer(v.clone())
}

pub fn plus_family(rc: &ResidueClass, rt: &RoleTriple) -> Result<FamilySolution> {
    rt.check(rc.m(), rc.n0())?;
    let a = Rational::new(rc.n1().clone(), rc.n0().clone());
    let (x0, y0, z0) = (q(&rt.x0), q(&rt.y0), q(&rt.z0));
    let yz = &y0 + &z0;

    let x = RationalPoly::linear(x0.clone(), &x0 * &a);
    let z = RationalPoly::linear(z0.clone(), &a * &y0 * &z0 / &yz);
    let y0a = &y0 * &a;
    let y1 = &y0a * (Rational::from_integer(1.into()) + &y0 / &yz);
    let y2 = &y0a * &y0a / &yz;
    let y = RationalPoly::new(vec![y0, y1, y2]);
    Ok(FamilySolution::new(Branch::Plus, PolyTriple::new(x, y, z)))
}

pub fn minus_family(rc: &ResidueClass, rt: &RoleTriple) -> Result<FamilySolution> {
    rt.check(rc.m(), rc.n0())?;
    let a = Rational::new(rc.n1().clone(), rc.n0().clone());
    let b = Rational::new(rc.n1().clone(), rc.m().clone());
    let (x0, y0, z0) = (q(&rt.x0), q(&rt.y0), q(&rt.z0));
    let sigma = &x0 + &z0;

    let z = RationalPoly::linear(z0.clone(), &b * &sigma / &x0);
    let x = RationalPoly::linear(x0.clone(), &b * &sigma / &z0);
    let y0a = &y0 * &a;
    let y1 = Rational::from_integer(2.into()) * &y0a - &b;
    let y2 = &a * (&y0a - &b);
    let y = RationalPoly::new(vec![y0, y1, y2]);
    Ok(FamilySolution::new(Branch::Minus, PolyTriple::new(x, y, z)))
}

pub fn family(rc: &ResidueClass, rt: &RoleTriple, branch: Branch) -> Result<FamilySolution> {
    match branch {
        Branch::Plus => plus_family(rc, rt),
        Branch::Minus => minus_family(rc, rt),
    }
}

/// `n0^2 - (m*x0 - n0)(m*z0 - n0)` against `-m*n0*x0*z0/y0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantReport {
    #[serde(with = "crate::report::int_str")]
    pub xbar0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub zbar0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub lhs: Integer,
    #[serde(with = "crate::report::rat_str")]
    pub rhs: Rational,
}

impl DiscriminantReport {
    /// Both sides agree and the common value is negative.
    pub fn holds(&self) -> bool {
        q(&self.lhs) == self.rhs && self.lhs.is_negative()
    }
}

/// The quantity under the square root when solving for the linear
/// coefficients of a (1, 1, 3) degree pattern. It is always negative, so no
/// real solution of that shape exists.
pub fn discriminant_identity(rc: &ResidueClass, rt: &RoleTriple) -> Result<DiscriminantReport> {
    rt.check(rc.m(), rc.n0())?;
    let (m, n0) = (rc.m(), rc.n0());
    let xbar0 = m * &rt.x0 - n0;
    let zbar0 = m * &rt.z0 - n0;
    let lhs = n0 * n0 - &xbar0 * &zbar0;
    let rhs = -Rational::new(m * n0 * &rt.x0 * &rt.z0, rt.y0.clone());
    debug_assert!(!rhs.is_zero());
    Ok(DiscriminantReport { xbar0, zbar0, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::theorem::{construct_solution, identity_holds, ParamSet};

    fn rc(m: i64, n0: i64, n1: i64) -> ResidueClass {
        ResidueClass::from_i64(m, n0, n1).unwrap()
    }

    fn poly(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn plus_reproduces_golden() {
        let rc = rc(5, 7, 9);
        let sol = plus_family(&rc, &RoleTriple::from_i64(14, 7, 2)).unwrap();
        assert_eq!(sol.triple.x, poly(&[14, 18]));
        assert_eq!(sol.triple.z, poly(&[2, 2]));
        assert_eq!(sol.triple.y, poly(&[7, 16, 9]));
        assert!(sol.integral);
        assert!(!sol.degenerate);
        assert_eq!(
            sol.triple,
            construct_solution(&rc, &ParamSet::from_i64(2, 1, 1, 1)).unwrap()
        );
    }

    #[test]
    fn plus_non_integral() {
        let rc = rc(5, 7, 19);
        let sol = plus_family(&rc, &RoleTriple::from_i64(14, 7, 2)).unwrap();
        assert_eq!(sol.triple.x, poly(&[14, 38]));
        assert_eq!(sol.triple.z, RationalPoly::linear(rat(2, 1), rat(38, 9)));
        assert!(!sol.integral);
        assert!(identity_holds(&rc, &sol.triple));
    }

    #[test]
    fn invalid_role_triple() {
        // 1/2 + 1/4 + 1/4 = 1, not 4/2
        let err = plus_family(&rc(4, 2, 3), &RoleTriple::from_i64(2, 4, 4)).unwrap_err();
        assert!(matches!(err, Error::InvalidRoleTriple { .. }));
        assert!(minus_family(&rc(4, 2, 3), &RoleTriple::from_i64(2, 4, 4)).is_err());
        assert!(discriminant_identity(&rc(4, 2, 3), &RoleTriple::from_i64(2, 4, 4)).is_err());
        assert!(plus_family(&rc(5, 7, 9), &RoleTriple::from_i64(-14, 7, 2)).is_err());
    }

    #[test]
    fn minus_example() {
        let rc = rc(5, 7, 9);
        let sol = minus_family(&rc, &RoleTriple::from_i64(14, 7, 2)).unwrap();
        assert_eq!(sol.triple.z.coeff(1), rat(72, 35));
        assert!(!sol.integral);
        assert!(identity_holds(&rc, &sol.triple));
    }

    #[test]
    fn discriminant_example() {
        let rep = discriminant_identity(&rc(5, 7, 9), &RoleTriple::from_i64(14, 7, 2)).unwrap();
        assert_eq!(rep.xbar0, int(63));
        assert_eq!(rep.zbar0, int(3));
        assert_eq!(rep.lhs, int(-140));
        assert_eq!(rep.rhs, rat(-140, 1));
        assert!(rep.holds());
    }

    #[test]
    fn role_assignments_are_distinct() {
        assert_eq!(BaseTriple::new(int(2), int(7), int(14)).role_assignments().len(), 6);
        assert_eq!(BaseTriple::new(int(1), int(2), int(2)).role_assignments().len(), 3);
        assert_eq!(BaseTriple::new(int(3), int(3), int(3)).role_assignments().len(), 1);
    }

    #[test]
    fn branch_parse() {
        assert_eq!("plus".parse::<Branch>().unwrap(), Branch::Plus);
        assert_eq!("minus".parse::<Branch>().unwrap(), Branch::Minus);
        assert!("other".parse::<Branch>().is_err());
    }
}
