//! Exact integer and rational primitives.
//!
//! Everything here works on arbitrary-precision values. Primality and divisor
//! enumeration use plain trial division, which is adequate for moduli up to
//! a few million.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Shorthand for building an [`Integer`] from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(int(num), int(den))
}

pub fn rat_from_int(v: &Integer) -> Rational {
    Rational::from_integer(v.clone())
}

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Returns `(g, u, v)` with `g = gcd(a, b) >= 0` and `u*a + v*b = g`.
pub fn extended_gcd(a: &Integer, b: &Integer) -> Result<(Integer, Integer, Integer)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if !a.is_zero() && b.is_multiple_of(a) {
        return Ok((a.abs(), a.signum(), Integer::zero()));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_u, mut u) = (Integer::one(), Integer::zero());
    let (mut old_v, mut v) = (Integer::zero(), Integer::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_u = &old_u - &q * &u;
        old_u = std::mem::replace(&mut u, next_u);
        let next_v = &old_v - &q * &v;
        old_v = std::mem::replace(&mut v, next_v);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_u, -old_v))
    } else {
        Ok((old_r, old_u, old_v))
    }
}

/// Inverse of `a` modulo `n` in `[0, n)`, if it exists.
pub fn mod_inverse(a: &Integer, n: &Integer) -> Option<Integer> {
    if !n.is_positive() {
        return None;
    }
    let (g, u, _) = extended_gcd(a, n).ok()?;
    if !g.is_one() {
        return None;
    }
    Some(u.mod_floor(n))
}

/// Prime factorization by trial division as `(prime, exponent)` pairs in
/// ascending prime order. `factorize(1)` is empty.
pub fn factorize(n: &Integer) -> Result<Vec<(Integer, u32)>> {
    if !n.is_positive() {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (Integer::from(p), e))
            .collect());
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = int(2);
    while &d * &d <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&d) {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == int(2) { 1 } else { 2 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    Ok(out)
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of a number given by its factorization, ascending.
pub fn divisors_from_factors(factors: &[(Integer, u32)]) -> Vec<Integer> {
    let mut divs = vec![Integer::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    Ok(divisors_from_factors(&factorize(n)?))
}

/// Deterministic primality by trial division up to the square root.
pub fn is_prime(n: &Integer) -> bool {
    if n < &int(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
        if small % 2 == 0 {
            return false;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                return false;
            }
            d += 2;
        }
        return true;
    }
    matches!(factorize(n).as_deref(), Ok([(_, 1)]))
}

/// Primes in `[2, bound]`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}

/// Whether `a` is a square modulo `n`, by checking every `w` in `[0, n)`.
pub fn is_quadratic_residue(a: &Integer, n: &Integer) -> Result<bool> {
    if n < &int(2) {
        return Err(Error::out_of_range("n", n, "n >= 2"));
    }
    let target = a.mod_floor(n);
    let mut w = Integer::zero();
    while &w < n {
        if (&w * &w).mod_floor(n) == target {
            return Ok(true);
        }
        w += 1;
    }
    Ok(false)
}

/// `Some(q)` when `b` divides `a` exactly.
pub fn exact_div(a: &Integer, b: &Integer) -> Option<Integer> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}
