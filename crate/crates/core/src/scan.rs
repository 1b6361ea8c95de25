//! Sweeps over all residues of a modulus, and audits of the prime-modulus
//! consequences of condition i against the complete decision procedure.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::{self, int, Integer};
use crate::error::{Error, Result};
use crate::theorem::{
    decide, enumerate_kl, require_coprime, verify_identity, DecisionOutcome, KlPair, ParamSet, PolyTriple, ResidueClass,
};

pub const DEFAULT_BOUND: u64 = 200;

#[cfg(feature = "parallel")]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub residues: usize,
    pub solvable: usize,
    pub unsolvable: usize,
    #[serde(with = "crate::report::int_vec_str")]
    pub admissible: Vec<Integer>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    #[serde(with = "crate::report::int_str")]
    pub m: Integer,
    #[serde(with = "crate::report::int_str")]
    pub n1: Integer,
    pub rows: Vec<DecisionOutcome>,
    pub summary: ScanSummary,
}

fn check_modulus(m: &Integer, n1: &Integer) -> Result<()> {
    if m < &int(4) {
        return Err(Error::out_of_range("m", m, "m >= 4"));
    }
    if n1 < &int(2) {
        return Err(Error::out_of_range("n1", n1, "n1 >= 2"));
    }
    require_coprime("m", m, "n1", n1)
}

/// Residues in `[1, n1)` coprime to `n1`.
pub fn coprime_residues(n1: &Integer) -> Vec<Integer> {
    let mut out = Vec::new();
    let mut n0 = Integer::one();
    while &n0 < n1 {
        if arith::gcd(&n0, n1).is_one() {
            out.push(n0.clone());
        }
        n0 += 1;
    }
    out
}

/// Runs [`decide`] on every residue coprime to `n1`, in increasing order.
pub fn scan_residues(m: &Integer, n1: &Integer) -> Result<ScanReport> {
    check_modulus(m, n1)?;
    scan_selected(m, n1, &coprime_residues(n1))
}

/// Like [`scan_residues`] but only for the given residues, which must be
/// coprime to `n1`. Rows follow the order given.
pub fn scan_selected(m: &Integer, n1: &Integer, residues: &[Integer]) -> Result<ScanReport> {
    check_modulus(m, n1)?;
    let rows = par_map(residues, |n0| {
        let rc = ResidueClass::new(m.clone(), n0.clone(), n1.clone())?;
        decide(&rc)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let admissible: Vec<Integer> = rows
        .iter()
        .filter(|r| r.is_solvable())
        .map(|r| r.instance.n0().clone())
        .collect();
    let summary = ScanSummary {
        residues: rows.len(),
        solvable: admissible.len(),
        unsolvable: rows.len() - admissible.len(),
        admissible,
    };
    Ok(ScanReport {
        m: m.clone(),
        n1: n1.clone(),
        rows,
        summary,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Corollary {
    /// Prime moduli must be `l*(m*k - 1)`; read literally, `4k - 1`.
    #[serde(rename = "i")]
    ConditionI,
    /// No prime modulus `p = 1 (mod 4)`.
    #[serde(rename = "3")]
    Three,
    /// Nothing for `n = 1 (mod p)`.
    #[serde(rename = "4")]
    Four,
}

impl FromStr for Corollary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "1" | "2" => Ok(Corollary::ConditionI),
            "3" => Ok(Corollary::Three),
            "4" => Ok(Corollary::Four),
            other => Err(Error::Parse(format!("unknown corollary {other:?}, expected i, 3 or 4"))),
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Corollary::ConditionI => "i",
            Corollary::Three => "3",
            Corollary::Four => "4",
        })
    }
}

/// A verified solution backing a reported discrepancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: ResidueClass,
    pub params: ParamSet,
    #[serde(flatten)]
    pub triple: PolyTriple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Discrepancy { witnesses: Vec<Witness> },
}

impl Verdict {
    pub fn is_discrepancy(&self) -> bool {
        matches!(self, Verdict::Discrepancy { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditInstance {
    #[serde(with = "crate::report::int_str")]
    pub p: Integer,
    pub kl_pairs: Vec<KlPair>,
    /// Residue classes handed to `decide` for this prime.
    pub checked: Vec<ResidueClass>,
    #[serde(with = "crate::report::int_vec_str")]
    pub solvable_residues: Vec<Integer>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub corollary: Corollary,
    #[serde(with = "crate::report::int_str")]
    pub m: Integer,
    pub bound: u64,
    pub instances: Vec<AuditInstance>,
    pub discrepancies: usize,
}

impl AuditReport {
    fn new(corollary: Corollary, m: &Integer, bound: u64, instances: Vec<AuditInstance>) -> Self {
        let discrepancies = instances.iter().filter(|i| i.verdict.is_discrepancy()).count();
        Self {
            corollary,
            m: m.clone(),
            bound,
            instances,
            discrepancies,
        }
    }

    pub fn has_discrepancy(&self) -> bool {
        self.discrepancies > 0
    }

    pub fn instance(&self, p: u64) -> Option<&AuditInstance> {
        self.instances.iter().find(|i| i.p == Integer::from(p))
    }
}

fn witnesses(outcomes: &[DecisionOutcome]) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for o in outcomes.iter().filter(|o| o.is_solvable()) {
        for s in &o.solutions {
            if !verify_identity(&o.instance, &s.triple) {
                return Err(Error::Invariant(format!(
                    "witness {} for {} fails verification",
                    s.params, o.instance
                )));
            }
            out.push(Witness {
                instance: o.instance.clone(),
                params: s.params.clone(),
                triple: s.triple.clone(),
            });
        }
    }
    Ok(out)
}

fn verdict_from(outcomes: &[DecisionOutcome], flag: bool) -> Result<Verdict> {
    if flag {
        Ok(Verdict::Discrepancy {
            witnesses: witnesses(outcomes)?,
        })
    } else {
        Ok(Verdict::Consistent)
    }
}

fn primes_coprime_to(m: &Integer, bound: u64) -> Vec<Integer> {
    arith::primes_up_to(bound)
        .into_iter()
        .map(Integer::from)
        .filter(|p| arith::gcd(p, m).is_one())
        .collect()
}

fn check_m(m: &Integer) -> Result<()> {
    if m < &int(4) {
        return Err(Error::out_of_range("m", m, "m >= 4"));
    }
    Ok(())
}

fn check_bound(bound: u64, min: u64, label: &'static str) -> Result<()> {
    if bound < min {
        return Err(Error::out_of_range("bound", &Integer::from(bound), label));
    }
    Ok(())
}

fn scan_instance(m: &Integer, p: &Integer) -> Result<(Vec<KlPair>, ScanReport)> {
    Ok((enumerate_kl(m, p)?, scan_residues(m, p)?))
}

/// For every prime `p <= bound` coprime to `m`: does condition i admit any
/// `(k, l)`, and is any residue modulo `p` solvable?
///
/// A prime with a solvable residue is reported as a discrepancy unless
/// `p = 3 (mod 4)`, which is the literal "n1 = 4k - 1" reading. For
/// `m = 4` the two readings coincide and `p = 1 (mod 4)` must leave
/// condition i empty; anything else is an internal error.
pub fn audit_condition_i(m: &Integer, bound: u64) -> Result<AuditReport> {
    check_m(m)?;
    check_bound(bound, 2, "bound >= 2")?;
    let primes = primes_coprime_to(m, bound);
    let instances = par_map(&primes, |p| -> Result<AuditInstance> {
        let (kl_pairs, scan) = scan_instance(m, p)?;
        let p_mod4 = p.mod_floor(&int(4));
        if m == &int(4) && p_mod4 == int(1) && !kl_pairs.is_empty() {
            return Err(Error::Invariant(format!("enumerate_kl(4, {p}) is nonempty")));
        }
        if kl_pairs.is_empty() && scan.summary.solvable > 0 {
            return Err(Error::Invariant(format!(
                "modulus {p} has no (k, l) yet a solvable residue"
            )));
        }
        let flag = scan.summary.solvable > 0 && p_mod4 != int(3);
        Ok(AuditInstance {
            p: p.clone(),
            kl_pairs,
            checked: scan.rows.iter().map(|r| r.instance.clone()).collect(),
            solvable_residues: scan.summary.admissible.clone(),
            verdict: verdict_from(&scan.rows, flag)?,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::new(Corollary::ConditionI, m, bound, instances))
}

/// Scans every prime modulus `p = 1 (mod 4)` up to `bound` and reports each
/// solvable residue as a discrepancy with its verified solutions.
pub fn audit_corollary3(m: &Integer, bound: u64) -> Result<AuditReport> {
    check_m(m)?;
    check_bound(bound, 5, "bound >= 5")?;
    let primes: Vec<Integer> = primes_coprime_to(m, bound)
        .into_iter()
        .filter(|p| p.mod_floor(&int(4)) == int(1))
        .collect();
    let instances = par_map(&primes, |p| -> Result<AuditInstance> {
        let (kl_pairs, scan) = scan_instance(m, p)?;
        let flag = scan.summary.solvable > 0;
        if flag && m == &int(4) {
            return Err(Error::Invariant(format!("m = 4 has a solvable residue modulo {p}")));
        }
        Ok(AuditInstance {
            p: p.clone(),
            kl_pairs,
            checked: scan.rows.iter().map(|r| r.instance.clone()).collect(),
            solvable_residues: scan.summary.admissible.clone(),
            verdict: verdict_from(&scan.rows, flag)?,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::new(Corollary::Three, m, bound, instances))
}

/// For every prime `p <= bound` coprime to `m`, decides both `n = 1 + p*λ`
/// and `n = (p + 1) + p*λ`.
pub fn audit_corollary4(m: &Integer, bound: u64) -> Result<AuditReport> {
    check_m(m)?;
    check_bound(bound, 2, "bound >= 2")?;
    let primes = primes_coprime_to(m, bound);
    let instances = par_map(&primes, |p| -> Result<AuditInstance> {
        let kl_pairs = enumerate_kl(m, p)?;
        let classes = [
            ResidueClass::new(m.clone(), Integer::one(), p.clone())?,
            ResidueClass::new(m.clone(), p + 1, p.clone())?,
        ];
        let outcomes = classes.iter().map(decide).collect::<Result<Vec<_>>>()?;
        let solvable_residues: Vec<Integer> = outcomes
            .iter()
            .filter(|o| o.is_solvable())
            .map(|o| o.instance.n0().clone())
            .collect();
        let flag = !solvable_residues.is_empty();
        Ok(AuditInstance {
            p: p.clone(),
            kl_pairs,
            checked: classes.to_vec(),
            solvable_residues,
            verdict: verdict_from(&outcomes, flag)?,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::new(Corollary::Four, m, bound, instances))
}

pub fn audit(corollary: Corollary, m: &Integer, bound: u64) -> Result<AuditReport> {
    match corollary {
        Corollary::ConditionI => audit_condition_i(m, bound),
        Corollary::Three => audit_corollary3(m, bound),
        Corollary::Four => audit_corollary4(m, bound),
    }
}

/// Converts a bound given as an arbitrary integer, rejecting negatives.
pub fn bound_from(v: &Integer) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::out_of_range("bound", v, "0 <= bound < 2^64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn scan_five_nine() {
        let rep = scan_residues(&int(5), &int(9)).unwrap();
        assert_eq!(rep.summary.admissible, ints(&[4, 7, 8]));
        assert_eq!(rep.summary.residues, 6);
        assert_eq!(rep.summary.unsolvable, 3);
        let ns: Vec<_> = rep.rows.iter().map(|r| r.instance.n0().clone()).collect();
        assert_eq!(ns, ints(&[1, 2, 4, 5, 7, 8]));
    }

    #[test]
    fn scan_five_nineteen() {
        let rep = scan_residues(&int(5), &int(19)).unwrap();
        let row = rep.rows.iter().find(|r| r.instance.n0() == &int(7)).unwrap();
        assert!(!row.is_solvable());
    }

    #[test]
    fn scan_rejects_shared_factor() {
        assert!(matches!(scan_residues(&int(4), &int(4)), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn scan_selected_rejects_bad_residue() {
        assert!(scan_selected(&int(5), &int(9), &ints(&[3])).is_err());
    }

    #[test]
    fn condition_i_audit_examples() {
        let rep = audit_condition_i(&int(5), 30).unwrap();
        let p19 = rep.instance(19).unwrap();
        assert_eq!(p19.kl_pairs, vec![KlPair::new(int(4), int(1))]);
        let p29 = rep.instance(29).unwrap();
        assert_eq!(p29.kl_pairs, vec![KlPair::new(int(6), int(1))]);
        assert!(rep.instance(5).is_none());
        let rep4 = audit_condition_i(&int(4), 100).unwrap();
        for inst in &rep4.instances {
            if inst.p.mod_floor(&int(4)) == int(1) {
                assert!(inst.kl_pairs.is_empty());
                assert!(inst.solvable_residues.is_empty());
            }
        }
    }

    #[test]
    fn corollary3_examples() {
        assert!(!audit_corollary3(&int(4), 200).unwrap().has_discrepancy());
        let rep = audit_corollary3(&int(5), 13).unwrap();
        assert!(!rep.has_discrepancy());
        assert!(rep.instance(13).unwrap().kl_pairs.is_empty());
        assert!(audit_corollary3(&int(5), 4).is_err());
    }

    #[test]
    fn corollary4_examples() {
        let rep = audit_corollary4(&int(5), 29).unwrap();
        for p in [19, 29] {
            assert!(!rep.instance(p).unwrap().verdict.is_discrepancy(), "p = {p}");
        }
        let rep = audit_corollary4(&int(4), 7).unwrap();
        assert!(!rep.instance(7).unwrap().verdict.is_discrepancy());
        assert!(audit_corollary4(&int(4), 1).is_err());
    }

    #[test]
    fn corollary_parse() {
        assert_eq!("i".parse::<Corollary>().unwrap(), Corollary::ConditionI);
        assert_eq!("3".parse::<Corollary>().unwrap(), Corollary::Three);
        assert_eq!("4".parse::<Corollary>().unwrap(), Corollary::Four);
        assert!("5".parse::<Corollary>().is_err());
    }
}
