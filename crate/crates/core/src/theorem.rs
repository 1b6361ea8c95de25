//! Parameter conditions, the explicit solution shape, exact verification and
//! the complete decision procedure for one residue class.
//!
//! For a residue class `n(λ) = n0 + n1*λ` with `gcd(n0, n1) = gcd(n1, m) = 1`,
//! an integer polynomial solution exists exactly when there are positive
//! integers `k, l, s, r` with
//!
//! 1. `n1 = l*(m*k - 1)`
//! 2. `s*n1 = k*l + r*n0`
//! 3. `r | s*k*l`
//!
//! and then `x = k*n`, `y = n*(s + r*λ)`, `z = (k*l/r)*(s + r*λ)`.
//!
//! [`decide`] does not walk the infinite `t` family of condition 2. It looks
//! at the finitely many base solutions of `m/n0` with `x0 = k*n0`, which is
//! enough to certify that nothing exists.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, int, Integer, Rational};
use crate::base::{triples_with_member, BaseTriple};
use crate::error::{Error, Result};
use crate::qpoly::RationalPoly;

/// Points at which [`verify_identity`] re-checks the identity numerically.
const SPOT_CHECKS: i64 = 10;

/// The instance `m / (n0 + n1*λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueClass {
    #[serde(with = "crate::report::int_str")]
    m: Integer,
    #[serde(with = "crate::report::int_str")]
    n0: Integer,
    #[serde(with = "crate::report::int_str")]
    n1: Integer,
}

impl ResidueClass {
    pub fn new(m: Integer, n0: Integer, n1: Integer) -> Result<Self> {
        if m < int(4) {
            return Err(Error::out_of_range("m", &m, "m >= 4"));
        }
        if n0 < int(1) {
            return Err(Error::out_of_range("n0", &n0, "n0 >= 1"));
        }
        if n1 < int(2) {
            return Err(Error::out_of_range("n1", &n1, "n1 >= 2"));
        }
        require_coprime("n0", &n0, "n1", &n1)?;
        require_coprime("n1", &n1, "m", &m)?;
        Ok(Self { m, n0, n1 })
    }

    pub fn from_i64(m: i64, n0: i64, n1: i64) -> Result<Self> {
        Self::new(int(m), int(n0), int(n1))
    }

    pub fn m(&self) -> &Integer {
        &self.m
    }

    pub fn n0(&self) -> &Integer {
        &self.n0
    }

    pub fn n1(&self) -> &Integer {
        &self.n1
    }

    /// `n(λ) = n0 + n1*λ`
    pub fn n_poly(&self) -> RationalPoly {
        RationalPoly::from_integers([self.n0.clone(), self.n1.clone()])
    }

    /// The same class with `n0` reduced into `[1, n1)`.
    pub fn canonical(&self) -> Self {
        let n0 = self.n0.mod_floor(&self.n1);
        debug_assert!(!n0.is_zero(), "gcd(n0, n1) = 1 with n1 >= 2");
        Self {
            m: self.m.clone(),
            n0,
            n1: self.n1.clone(),
        }
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/({} + {}λ)", self.m, self.n0, self.n1)
    }
}

pub(crate) fn require_coprime(a_name: &'static str, a: &Integer, b_name: &'static str, b: &Integer) -> Result<()> {
    let g = arith::gcd(a, b);
    if g.is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            a_name,
            b_name,
            values: format!("gcd({a}, {b}) = {g}"),
        })
    }
}

/// A solution `(k, l)` of `n1 = l*(m*k - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KlPair {
    #[serde(with = "crate::report::int_str")]
    pub k: Integer,
    #[serde(with = "crate::report::int_str")]
    pub l: Integer,
}

impl KlPair {
    pub fn new(k: Integer, l: Integer) -> Self {
        Self { k, l }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParamSet {
    #[serde(with = "crate::report::int_str")]
    pub k: Integer,
    #[serde(with = "crate::report::int_str")]
    pub l: Integer,
    #[serde(with = "crate::report::int_str")]
    pub s: Integer,
    #[serde(with = "crate::report::int_str")]
    pub r: Integer,
}

impl ParamSet {
    pub fn new(k: Integer, l: Integer, s: Integer, r: Integer) -> Self {
        Self { k, l, s, r }
    }

    pub fn from_i64(k: i64, l: i64, s: i64, r: i64) -> Self {
        Self::new(int(k), int(l), int(s), int(r))
    }

    /// Checks positivity and all three conditions against `rc`.
    pub fn check(&self, rc: &ResidueClass) -> Result<()> {
        for (name, v) in [("k", &self.k), ("l", &self.l), ("s", &self.s), ("r", &self.r)] {
            if !v.is_positive() {
                return Err(Error::InvalidParams {
                    condition: "positivity",
                    detail: format!("{name} = {v} is not positive"),
                });
            }
        }
        let mk1 = &rc.m * &self.k - 1;
        if rc.n1 != &self.l * &mk1 {
            return Err(Error::InvalidParams {
                condition: "condition i (n1 = l(mk - 1))",
                detail: format!("{} != {}*{}", rc.n1, self.l, mk1),
            });
        }
        let lhs = &self.s * &rc.n1;
        let rhs = &self.k * &self.l + &self.r * &rc.n0;
        if lhs != rhs {
            return Err(Error::InvalidParams {
                condition: "condition ii (s*n1 = k*l + r*n0)",
                detail: format!("{lhs} != {rhs}"),
            });
        }
        if !condition_iii_holds(self) {
            return Err(Error::InvalidParams {
                condition: "condition iii (r | s*k*l)",
                detail: format!("{} does not divide {}", self.r, &self.s * &self.k * &self.l),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, l={}, s={}, r={})", self.k, self.l, self.s, self.r)
    }
}

/// The affine line `s = s0 + n0*t`, `r = r0 + n1*t` of integer solutions of
/// condition ii for a fixed `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParamFamily {
    #[serde(with = "crate::report::int_str")]
    pub k: Integer,
    #[serde(with = "crate::report::int_str")]
    pub l: Integer,
    #[serde(with = "crate::report::int_str")]
    pub s0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub r0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub n0: Integer,
    #[serde(with = "crate::report::int_str")]
    pub n1: Integer,
}

impl ParamFamily {
    /// `(s, r)` at parameter `t`.
    pub fn at(&self, t: &Integer) -> (Integer, Integer) {
        (&self.s0 + &self.n0 * t, &self.r0 + &self.n1 * t)
    }

    /// The `t` at which this family passes through `(s, r)`, if any.
    pub fn index_of(&self, s: &Integer, r: &Integer) -> Option<Integer> {
        let t = arith::exact_div(&(s - &self.s0), &self.n0)?;
        (self.at(&t).1 == *r).then_some(t)
    }

    fn param_set(&self, t: &Integer) -> ParamSet {
        let (s, r) = self.at(t);
        ParamSet::new(self.k.clone(), self.l.clone(), s, r)
    }
}

impl fmt::Display for ParamFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}+{}t, r={}+{}t", self.s0, self.n0, self.r0, self.n1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTriple {
    pub x: RationalPoly,
    pub y: RationalPoly,
    pub z: RationalPoly,
}

impl PolyTriple {
    pub fn new(x: RationalPoly, y: RationalPoly, z: RationalPoly) -> Self {
        Self { x, y, z }
    }

    pub fn polys(&self) -> [&RationalPoly; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn is_positive_integral(&self) -> bool {
        self.polys().iter().all(|p| p.is_positive_integral())
    }

    /// Swaps the roles of `x` and `z`.
    pub fn swap_xz(&self) -> Self {
        Self::new(self.z.clone(), self.y.clone(), self.x.clone())
    }
}

impl fmt::Display for PolyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x = {}, y = {}, z = {}", self.x, self.y, self.z)
    }
}

/// All `(k, l)` with `l*(m*k - 1) = n1`, ordered by `l` ascending.
pub fn enumerate_kl(m: &Integer, n1: &Integer) -> Result<Vec<KlPair>> {
    if m < &int(4) {
        return Err(Error::out_of_range("m", m, "m >= 4"));
    }
    if n1 < &int(2) {
        return Err(Error::out_of_range("n1", n1, "n1 >= 2"));
    }
    require_coprime("n1", n1, "m", m)?;
    // l ascending is the cofactor d = m*k - 1 descending
    Ok(arith::divisors(n1)?
        .into_iter()
        .rev()
        .filter_map(|d| {
            let k = arith::exact_div(&(&d + 1), m)?;
            Some(KlPair::new(k, n1 / &d))
        })
        .collect())
}

fn require_condition_i(rc: &ResidueClass, k: &Integer, l: &Integer) -> Result<()> {
    if !k.is_positive() || !l.is_positive() || &(l * (&rc.m * k - 1)) != rc.n1() {
        return Err(Error::InvalidParams {
            condition: "condition i (n1 = l(mk - 1))",
            detail: format!("k = {k}, l = {l} with m = {}, n1 = {}", rc.m, rc.n1),
        });
    }
    Ok(())
}

/// The condition-ii family for `(k, l)`, normalized so that `1 <= s0 <= n0`.
pub fn solve_condition_ii(rc: &ResidueClass, k: &Integer, l: &Integer) -> Result<ParamFamily> {
    require_condition_i(rc, k, l)?;
    let kl = k * l;
    let s0 = if rc.n0.is_one() {
        Integer::one()
    } else {
        let inv =
            arith::mod_inverse(&rc.n1, &rc.n0).ok_or_else(|| Error::Invariant("n1 invertible modulo n0".into()))?;
        let s = (&kl * inv).mod_floor(&rc.n0);
        if s.is_zero() {
            rc.n0.clone()
        } else {
            s
        }
    };
    let r0 = arith::exact_div(&(&s0 * &rc.n1 - &kl), &rc.n0)
        .ok_or_else(|| Error::Invariant("s0*n1 = k*l (mod n0)".into()))?;
    Ok(ParamFamily {
        k: k.clone(),
        l: l.clone(),
        s0,
        r0,
        n0: rc.n0.clone(),
        n1: rc.n1.clone(),
    })
}

/// Condition iii: `r` divides `s*k*l`.
pub fn condition_iii_holds(ps: &ParamSet) -> bool {
    !ps.r.is_zero() && (&ps.s * &ps.k * &ps.l).is_multiple_of(&ps.r)
}

/// Every parameter set on the family with `0 <= t <= t_max`, positive `s`
/// and `r`, and condition iii satisfied, in increasing `t`.
pub fn family_solutions(fam: &ParamFamily, t_max: i64) -> Result<Vec<ParamSet>> {
    if t_max < 0 {
        return Err(Error::out_of_range("t_max", &int(t_max), "t_max >= 0"));
    }
    let t_max = int(t_max);
    // smallest t with r0 + n1*t >= 1
    let mut t = if fam.r0.is_positive() {
        Integer::zero()
    } else {
        (Integer::one() - &fam.r0).div_ceil(&fam.n1)
    };
    let mut out = Vec::new();
    while t <= t_max {
        let ps = fam.param_set(&t);
        if ps.s.is_positive() && condition_iii_holds(&ps) {
            out.push(ps);
        }
        t += 1;
    }
    Ok(out)
}

/// The first `t` in `[0, t_max]` where the family satisfies condition iii.
/// Finding nothing does not prove that no solution exists.
pub fn search_condition_iii(fam: &ParamFamily, t_max: i64) -> Result<Option<ParamSet>> {
    if t_max < 0 {
        return Err(Error::out_of_range("t_max", &int(t_max), "t_max >= 0"));
    }
    let mut t = if fam.r0.is_positive() {
        Integer::zero()
    } else {
        (Integer::one() - &fam.r0).div_ceil(&fam.n1)
    };
    let t_max = int(t_max);
    while t <= t_max {
        let ps = fam.param_set(&t);
        if ps.s.is_positive() && condition_iii_holds(&ps) {
            return Ok(Some(ps));
        }
        t += 1;
    }
    Ok(None)
}

/// `x = k*n`, `y = n*(s + r*λ)`, `z = (k*l/r)*(s + r*λ)`.
pub fn construct_solution(rc: &ResidueClass, ps: &ParamSet) -> Result<PolyTriple> {
    ps.check(rc)?;
    let n = rc.n_poly();
    let k = Rational::from_integer(ps.k.clone());
    let line = RationalPoly::from_integers([ps.s.clone(), ps.r.clone()]);
    let kl_over_r = Rational::new(&ps.k * &ps.l, ps.r.clone());
    Ok(PolyTriple::new(n.scale(&k), &n * &line, line.scale(&kl_over_r)))
}

/// `m*x*y*z - n*(x*y + x*z + y*z)`; zero exactly when the identity holds.
pub fn identity_residual(rc: &ResidueClass, pt: &PolyTriple) -> RationalPoly {
    let m = Rational::from_integer(rc.m.clone());
    let (x, y, z) = (&pt.x, &pt.y, &pt.z);
    let lhs = (&(x * y) * z).scale(&m);
    let pairs = &(&(x * y) + &(x * z)) + &(y * z);
    &lhs - &(&rc.n_poly() * &pairs)
}

/// The cleared-denominator identity as rational polynomials, with no
/// integrality requirement.
pub fn identity_holds(rc: &ResidueClass, pt: &PolyTriple) -> bool {
    if pt.polys().iter().any(|p| p.is_zero()) {
        return false;
    }
    // With d the common denominator and X = d*x etc. integral, the residual
    // times d^3 is m*X*Y*Z - d*n*(X*Y + X*Z + Y*Z).
    let d = pt
        .polys()
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let scaled =
        |p: &RationalPoly| -> Vec<Integer> { p.coeffs().iter().map(|c| c.numer() * (&d / c.denom())).collect() };
    let (x, y, z) = (scaled(&pt.x), scaled(&pt.y), scaled(&pt.z));
    let (xy, xz, yz) = (int_mul(&x, &y), int_mul(&x, &z), int_mul(&y, &z));
    let lhs: Vec<Integer> = int_mul(&xy, &z).into_iter().map(|c| c * &rc.m).collect();
    let n = [&rc.n0 * &d, &rc.n1 * &d];
    let rhs = int_mul(&n, &int_add(&int_add(&xy, &xz), &yz));
    trimmed(lhs) == trimmed(rhs)
}

fn int_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); (a.len() + b.len()).saturating_sub(1)];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn int_add(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, v) in out.iter_mut().zip(short) {
        *o += v;
    }
    out
}

fn trimmed(mut v: Vec<Integer>) -> Vec<Integer> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn spot_check(rc: &ResidueClass, pt: &PolyTriple) -> bool {
    let m = Rational::from_integer(rc.m.clone());
    let n = rc.n_poly();
    (0..=SPOT_CHECKS).all(|i| {
        let at = Rational::from_integer(int(i));
        let vals: Vec<Rational> = pt.polys().iter().map(|p| p.eval(&at)).collect();
        if vals.iter().any(Zero::is_zero) {
            return false;
        }
        let sum: Rational = vals.iter().map(|v| v.recip()).sum();
        sum == &m / n.eval(&at)
    })
}

/// True iff the triple is an integer polynomial solution: all three
/// polynomials have positive integer coefficients and the identity holds
/// exactly, re-checked by evaluation at λ = 0..=10.
pub fn verify_identity(rc: &ResidueClass, pt: &PolyTriple) -> bool {
    pt.is_positive_integral() && identity_holds(rc, pt) && spot_check(rc, pt)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    /// Degrees of x, y, z in ascending order.
    pub degrees: [usize; 3],
    /// Degree of `m*x*z - n*(x + z)` with `y` taken as the highest-degree
    /// polynomial; `None` if it vanishes.
    pub aux_degree: Option<usize>,
}

impl DegreeReport {
    pub fn is_theorem_pattern(&self) -> bool {
        self.degrees == [1, 1, 2] && self.aux_degree == Some(1)
    }
}

pub fn analyze_degrees(rc: &ResidueClass, pt: &PolyTriple) -> Result<DegreeReport> {
    if !verify_identity(rc, pt) {
        return Err(Error::Unverified {
            m: rc.m.clone(),
            n0: rc.n0.clone(),
            n1: rc.n1.clone(),
        });
    }
    Ok(degree_report(rc, pt))
}

/// Degree report without the verification precondition.
pub fn degree_report(rc: &ResidueClass, pt: &PolyTriple) -> DegreeReport {
    let polys = pt.polys();
    let deg = |p: &RationalPoly| p.degree().unwrap_or(0);
    let mut degrees = [deg(polys[0]), deg(polys[1]), deg(polys[2])];
    degrees.sort_unstable();
    let top = (0..3).max_by_key(|&i| (deg(polys[i]), i == 1)).unwrap_or(1);
    let rest: Vec<&RationalPoly> = (0..3).filter(|&i| i != top).map(|i| polys[i]).collect();
    let (a, b) = (rest[0], rest[1]);
    let m = Rational::from_integer(rc.m.clone());
    let aux = &(a * b).scale(&m) - &(&rc.n_poly() * &(a + b));
    DegreeReport {
        degrees,
        aux_degree: aux.degree(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Solvable,
    Unsolvable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub params: ParamSet,
    #[serde(flatten)]
    pub triple: PolyTriple,
}

/// Where the search for one `(k, l)` stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KlFailure {
    /// No base solution of `m/n0` uses `k*n0` as a denominator.
    NoBaseTripleWithMember,
    /// `k*n0` occurs, but neither remaining member is a multiple of `n0`.
    NoMultipleOfN0,
    /// Every candidate `s` gives a non-integer or nonpositive `r`.
    ConditionIi,
    /// `r` is admissible but `r*z0 != k*l*s` for every candidate.
    ConditionIii,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlRecord {
    #[serde(with = "crate::report::int_str")]
    pub k: Integer,
    #[serde(with = "crate::report::int_str")]
    pub l: Integer,
    /// Display form of the family, e.g. `s=5+7t, r=13+19t`.
    pub family: String,
    #[serde(skip)]
    pub family_params: ParamFamily,
    #[serde(with = "crate::report::int_str")]
    pub x0: Integer,
    pub base_triples_with_x0: usize,
    pub y0_candidates: usize,
    pub condition_ii_passed: usize,
    pub accepted: usize,
    pub failure: Option<KlFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionOutcome {
    pub instance: ResidueClass,
    pub status: Status,
    pub solutions: Vec<Solution>,
    /// Empty when condition i has no solution at all.
    pub kl_pairs: Vec<KlPair>,
    pub evidence: Vec<KlRecord>,
}

impl DecisionOutcome {
    pub fn is_solvable(&self) -> bool {
        self.status == Status::Solvable
    }

    pub fn params(&self) -> impl Iterator<Item = &ParamSet> {
        self.solutions.iter().map(|s| &s.params)
    }
}

/// Decides whether `rc` has an integer polynomial solution and returns all
/// of them.
///
/// Any solution evaluated at λ = 0 is a base solution of `m/n0` with
/// `x0 = k*n0`, `y0 = s*n0` and `z0 = k*l*s/r`. So for each `(k, l)` it
/// suffices to look at the base solutions containing `k*n0`, try every
/// placement of the other two members as `y0` and `z0`, and recover
/// `s = y0/n0` and `r = (s*n1 - k*l)/n0`.
pub fn decide(rc: &ResidueClass) -> Result<DecisionOutcome> {
    let kl_pairs = enumerate_kl(&rc.m, &rc.n1)?;
    let mut solutions: Vec<Solution> = Vec::new();
    let mut evidence = Vec::with_capacity(kl_pairs.len());

    for pair in &kl_pairs {
        let (k, l) = (&pair.k, &pair.l);
        let family = solve_condition_ii(rc, k, l)?;
        let x0 = k * &rc.n0;
        let kl = k * l;
        let triples = triples_with_member(&rc.m, &rc.n0, &x0)?;

        let mut y0_candidates = 0;
        let mut cond_ii = 0;
        let mut accepted = 0;
        for triple in &triples {
            for (y0, z0) in remaining_pairs(triple, &x0) {
                let Some(s) = arith::exact_div(&y0, &rc.n0) else {
                    continue;
                };
                y0_candidates += 1;
                let r = match arith::exact_div(&(&s * &rc.n1 - &kl), &rc.n0) {
                    Some(r) if r.is_positive() => r,
                    _ => continue,
                };
                cond_ii += 1;
                if &r * &z0 != &kl * &s {
                    continue;
                }
                accepted += 1;
                let params = ParamSet::new(k.clone(), l.clone(), s, r);
                let triple = construct_solution(rc, &params)?;
                if !verify_identity(rc, &triple) {
                    return Err(Error::Invariant(format!(
                        "constructed triple for {params} fails verification"
                    )));
                }
                if !degree_report(rc, &triple).is_theorem_pattern() {
                    return Err(Error::Invariant(format!(
                        "solution for {params} does not have degrees (1, 1, 2)"
                    )));
                }
                if !solutions.iter().any(|s| s.triple == triple) {
                    solutions.push(Solution { params, triple });
                }
            }
        }

        let failure = if accepted > 0 {
            None
        } else if triples.is_empty() {
            Some(KlFailure::NoBaseTripleWithMember)
        } else if y0_candidates == 0 {
            Some(KlFailure::NoMultipleOfN0)
        } else if cond_ii == 0 {
            Some(KlFailure::ConditionIi)
        } else {
            Some(KlFailure::ConditionIii)
        };
        evidence.push(KlRecord {
            k: k.clone(),
            l: l.clone(),
            family: family.to_string(),
            family_params: family,
            x0,
            base_triples_with_x0: triples.len(),
            y0_candidates,
            condition_ii_passed: cond_ii,
            accepted,
            failure,
        });
    }

    solutions.sort_by(|a, b| a.params.cmp(&b.params));
    let status = if solutions.is_empty() {
        Status::Unsolvable
    } else {
        Status::Solvable
    };
    Ok(DecisionOutcome {
        instance: rc.clone(),
        status,
        solutions,
        kl_pairs,
        evidence,
    })
}

/// Distinct `(y0, z0)` orderings of the two members left after removing one
/// occurrence of `x0`.
fn remaining_pairs(triple: &BaseTriple, x0: &Integer) -> Vec<(Integer, Integer)> {
    let members = triple.members();
    let Some(pos) = members.iter().position(|v| *v == x0) else {
        return Vec::new();
    };
    let rest: Vec<Integer> = (0..3).filter(|&i| i != pos).map(|i| members[i].clone()).collect();
    let mut out = vec![(rest[0].clone(), rest[1].clone())];
    if rest[0] != rest[1] {
        out.push((rest[1].clone(), rest[0].clone()));
    }
    out
}
