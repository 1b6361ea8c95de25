//! Independent brute-force oracles shared by the integration tests.
//!
//! These deliberately avoid the library's search code: machine integers,
//! coarse loop bounds, direct cross-multiplication.

#![allow(dead_code)]

/// Every `a <= b <= c` with `1/a + 1/b + 1/c = m/n0`, by a double loop with
/// coarse bounds (`a <= 3*n0`, `b <= 2*n0*a`) and `c` solved exactly.
pub fn naive_base_triples(m: i64, n0: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 1..=3 * n0 {
        for b in a..=2 * n0 * a {
            // m/n0 - 1/a - 1/b = (m*a*b - n0*b - n0*a) / (n0*a*b)
            let num = m * a * b - n0 * b - n0 * a;
            if num <= 0 {
                continue;
            }
            let den = n0 * a * b;
            if den % num == 0 {
                let c = den / num;
                if c >= b {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The admissible residues modulo `n1` by brute force over naive base
/// triples: some `k` with `(m*k - 1) | n1` and a triple holding
/// `x0 = k*n0`, `y0 = s*n0`, `z0` with `r = (s*n1 - k*l)/n0 >= 1` and
/// `r*z0 = k*l*s`.
pub fn naive_admissible(m: i64, n1: i64) -> Vec<i64> {
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (1..n1)
        .filter(|&n0| gcd(n0, n1) == 1)
        .filter(|&n0| {
            let triples = naive_base_triples(m, n0);
            (1..=n1).any(|k| {
                let d = m * k - 1;
                if n1 % d != 0 {
                    return false;
                }
                let l = n1 / d;
                let x0 = k * n0;
                triples.iter().any(|&(a, b, c)| {
                    let t = [a, b, c];
                    (0..3).any(|i| {
                        (0..3).any(|j| {
                            if i == j || t[i] != x0 {
                                return false;
                            }
                            let (y0, z0) = (t[j], t[3 - i - j]);
                            if y0 % n0 != 0 {
                                return false;
                            }
                            let s = y0 / n0;
                            let num = s * n1 - k * l;
                            num > 0 && num % n0 == 0 && (num / n0) * z0 == k * l * s
                        })
                    })
                })
            })
        })
        .collect()
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Smallest prime coprime to `v`, handy as a filler modulus.
pub fn coprime_prime(v: i64) -> i64 {
    (2..)
        .find(|&p: &i64| (2..p).all(|d| p % d != 0) && gcd(p, v) == 1)
        .unwrap()
}
