mod common;

use common::{coprime_prime, gcd, naive_base_triples};
use egyptpoly::arith::{divisors, extended_gcd};
use egyptpoly::families::family;
use egyptpoly::theorem::identity_holds;
use egyptpoly::*;
use num_traits::Signed;
use proptest::prelude::*;

fn triples_i64(m: i64, n0: i64) -> Vec<(i64, i64, i64)> {
    enumerate_base_solutions(&int(m), &int(n0))
        .unwrap()
        .into_iter()
        .map(|t| {
            let f = |v: &Integer| i64::try_from(v).unwrap();
            (f(&t.a), f(&t.b), f(&t.c))
        })
        .collect()
}

#[test]
fn base_enumeration_matches_naive_loop() {
    for m in 1..=8 {
        for n0 in 1..=30 {
            assert_eq!(triples_i64(m, n0), naive_base_triples(m, n0), "m = {m}, n0 = {n0}");
        }
    }
}

#[test]
fn base_triples_are_sound() {
    for m in 4..=8 {
        for n0 in 1..=40 {
            for t in enumerate_base_solutions(&int(m), &int(n0)).unwrap() {
                assert!(t.a <= t.b && t.b <= t.c);
                let sum = Rational::new(int(1), t.a.clone())
                    + Rational::new(int(1), t.b.clone())
                    + Rational::new(int(1), t.c.clone());
                assert_eq!(sum, Rational::new(int(m), int(n0)));
            }
        }
    }
}

#[test]
fn member_filter_matches_full_enumeration() {
    for m in 4..=7 {
        for n0 in 1..=25 {
            let all = enumerate_base_solutions(&int(m), &int(n0)).unwrap();
            let mut candidates: Vec<Integer> = all.iter().flat_map(|t| t.members().map(Clone::clone)).collect();
            candidates.extend((1..=3 * n0 * m).map(int));
            candidates.sort();
            candidates.dedup();
            for member in candidates {
                let filtered: Vec<_> = all.iter().filter(|t| t.contains(&member)).cloned().collect();
                let direct: Vec<_> = triples_with_member(&int(m), &int(n0), &member)
                    .unwrap()
                    .into_iter()
                    .collect();
                assert_eq!(direct, filtered, "m = {m}, n0 = {n0}, member = {member}");
            }
        }
    }
}

/// No integer solution has three linear polynomials. Any such solution
/// specializes at λ = 0 to a base triple, so it suffices to try every base
/// triple with small members as constant terms and every slope up to 30.
/// Slopes failing the cubic coefficient `m*x1*y1*z1 = n1*(x1*y1 + x1*z1 + y1*z1)`
/// are skipped before the full check.
#[test]
fn no_all_linear_integer_solutions() {
    for m in [4i64, 5] {
        for n1 in 2..=12i64 {
            if gcd(m, n1) != 1 {
                continue;
            }
            for n0 in (1..n1).filter(|&n0| gcd(n0, n1) == 1) {
                let rc = ResidueClass::from_i64(m, n0, n1).unwrap();
                for t in enumerate_base_solutions(&int(m), &int(n0)).unwrap() {
                    if t.c > int(30) {
                        continue;
                    }
                    for rt in t.role_assignments() {
                        for x1 in 1..=30i64 {
                            for y1 in 1..=30i64 {
                                for z1 in 1..=30i64 {
                                    if m * x1 * y1 * z1 != n1 * (x1 * y1 + x1 * z1 + y1 * z1) {
                                        continue;
                                    }
                                    let pt = PolyTriple::new(
                                        RationalPoly::from_integers([rt.x0.clone(), int(x1)]),
                                        RationalPoly::from_integers([rt.y0.clone(), int(y1)]),
                                        RationalPoly::from_integers([rt.z0.clone(), int(z1)]),
                                    );
                                    assert!(!verify_identity(&rc, &pt), "{rc}: {pt}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn plus_family_agrees_with_construction() {
    for m in 4..=7i64 {
        for n1 in 2..=40i64 {
            if gcd(m, n1) != 1 {
                continue;
            }
            for n0 in (1..n1).filter(|&n0| gcd(n0, n1) == 1) {
                let rc = ResidueClass::from_i64(m, n0, n1).unwrap();
                for sol in decide(&rc).unwrap().solutions {
                    let p = &sol.params;
                    let rt = RoleTriple::new(&p.k * rc.n0(), &p.s * rc.n0(), &p.k * &p.l * &p.s / &p.r);
                    let fam = plus_family(&rc, &rt).unwrap();
                    assert!(fam.integral);
                    assert_eq!(fam.triple, sol.triple, "{rc} {p}");
                }
            }
        }
    }
}

#[test]
fn swapped_roles_give_the_third_branch() {
    // Exchanging x0 and z0 and then x and z again is still a solution.
    for m in 4..=6i64 {
        for n0 in 1..=15i64 {
            let n1 = coprime_prime(m * n0);
            let rc = ResidueClass::from_i64(m, n0, n1).unwrap();
            for t in enumerate_base_solutions(&int(m), &int(n0)).unwrap() {
                for rt in t.role_assignments() {
                    let swapped = RoleTriple::new(rt.z0.clone(), rt.y0.clone(), rt.x0.clone());
                    let sol = plus_family(&rc, &swapped).unwrap();
                    assert!(identity_holds(&rc, &sol.triple.swap_xz()));
                }
            }
        }
    }
}

#[test]
fn scaled_bases_still_satisfy_identity() {
    // (c*x0, c*y0, c*z0) solves m/(c*n0); stands in for rational bases.
    for c in 2..=4i64 {
        for n0 in 1..=10i64 {
            let n1 = coprime_prime(5 * c * n0);
            let rc = ResidueClass::from_i64(5, c * n0, n1).unwrap();
            for t in enumerate_base_solutions(&int(5), &int(n0)).unwrap() {
                let scaled = BaseTriple::new(&t.a * c, &t.b * c, &t.c * c);
                for rt in scaled.role_assignments() {
                    for branch in [Branch::Plus, Branch::Minus] {
                        let sol = family(&rc, &rt, branch).unwrap();
                        assert!(identity_holds(&rc, &sol.triple), "{rc} {rt} {branch}");
                    }
                }
            }
        }
    }
}

fn coprime_instance() -> impl Strategy<Value = (i64, i64, i64)> {
    (4i64..=8, 2i64..=60, 1i64..=60).prop_filter_map("coprimality", |(m, n1, n0)| {
        let n0 = (n0 % n1).max(1);
        (gcd(m, n1) == 1 && gcd(n0, n1) == 1).then_some((m, n0, n1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn extended_gcd_bezout(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(a != 0 || b != 0);
        let (g, u, v) = extended_gcd(&int(a), &int(b)).unwrap();
        prop_assert_eq!(&u * a + &v * b, g.clone());
        prop_assert_eq!(g, int(gcd(a, b)));
    }

    #[test]
    fn divisors_pair_up(n in 1i64..20_000) {
        let ds = divisors(&int(n)).unwrap();
        prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
        for d in &ds {
            prop_assert!(ds.contains(&(int(n) / d)));
        }
        let brute = (1..=n).filter(|d| n % d == 0).count();
        prop_assert_eq!(ds.len(), brute);
    }

    #[test]
    fn decided_solutions_verify_and_lie_on_families((m, n0, n1) in coprime_instance()) {
        let rc = ResidueClass::from_i64(m, n0, n1).unwrap();
        let out = decide(&rc).unwrap();
        prop_assert_eq!(out.is_solvable(), !out.solutions.is_empty());
        for sol in &out.solutions {
            prop_assert!(verify_identity(&rc, &sol.triple));
            prop_assert!(condition_iii_holds(&sol.params));
            prop_assert!(sol.params.check(&rc).is_ok());
            let fam = solve_condition_ii(&rc, &sol.params.k, &sol.params.l).unwrap();
            let t = fam.index_of(&sol.params.s, &sol.params.r);
            prop_assert!(t.is_some_and(|t| !t.is_negative()));
            let rep = analyze_degrees(&rc, &sol.triple).unwrap();
            prop_assert!(rep.is_theorem_pattern());
        }
    }

    #[test]
    fn both_families_solve_the_rational_identity((m, n0, n1) in coprime_instance()) {
        let rc = ResidueClass::from_i64(m, n0, n1).unwrap();
        for t in enumerate_base_solutions(&int(m), &int(n0)).unwrap() {
            for rt in t.role_assignments() {
                let plus = plus_family(&rc, &rt).unwrap();
                let minus = minus_family(&rc, &rt).unwrap();
                prop_assert!(identity_holds(&rc, &plus.triple));
                prop_assert!(identity_holds(&rc, &minus.triple));
                let mut bumped = minus.triple.clone();
                bumped.y = &bumped.y + &RationalPoly::linear(int(0).into(), Rational::new(int(1), rt.x0.clone()));
                prop_assert!(!identity_holds(&rc, &bumped));
                prop_assert!(!identity_residual(&rc, &bumped).is_zero());
                prop_assert!(!minus.integral);
                prop_assert!(!plus.degenerate && !minus.degenerate);
                let disc = discriminant_identity(&rc, &rt).unwrap();
                prop_assert!(disc.holds());
            }
        }
    }

    #[test]
    fn scan_rows_reproduce_decide((m, _n0, n1) in coprime_instance()) {
        let rep = scan_residues(&int(m), &int(n1)).unwrap();
        prop_assert_eq!(rep.summary.solvable + rep.summary.unsolvable, rep.rows.len());
        prop_assert_eq!(rep.summary.solvable, rep.rows.iter().filter(|r| r.is_solvable()).count());
        for row in &rep.rows {
            prop_assert_eq!(row, &decide(&row.instance).unwrap());
        }
    }
}
