//! Output formats shared by the command line and the browser demo.
//!
//! JSON documents carry `"schema_version": 1` and a `"command"` tag. Integers
//! are decimal strings and polynomials are arrays of coefficient strings,
//! constant term first.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::Integer;
use crate::base::BaseTriple;
use crate::error::Error;
use crate::families::{DiscriminantReport, FamilySolution, RoleTriple};
use crate::scan::{AuditReport, ScanReport, Verdict};
use crate::theorem::{DecisionOutcome, KlFailure, ResidueClass, Solution, Status};

pub const SCHEMA_VERSION: u32 = 1;

pub(crate) mod int_str {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }
}

pub(crate) mod int_vec_str {
    use num_bigint::BigInt;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }
}

pub(crate) mod rat_str {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse(format!(
                "unknown format {other:?}, expected json, csv or text"
            ))),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

/// Pretty JSON with the schema envelope.
pub fn to_json<T: Serialize>(command: &str, body: T) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        body,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("report types serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

const SOLUTION_HEADER: [&str; 12] = [
    "m",
    "n0",
    "n1",
    "status",
    "solution",
    "k",
    "l",
    "s",
    "r",
    "poly",
    "degree",
    "coefficient",
];

fn solution_rows(out: &DecisionOutcome) -> Vec<Vec<String>> {
    let rc = &out.instance;
    let prefix = |status: &str| {
        vec![
            rc.m().to_string(),
            rc.n0().to_string(),
            rc.n1().to_string(),
            status.to_string(),
        ]
    };
    if out.solutions.is_empty() {
        let mut row = prefix("unsolvable");
        row.extend(std::iter::repeat_n(String::new(), 8));
        return vec![row];
    }
    let mut rows = Vec::new();
    for (i, sol) in out.solutions.iter().enumerate() {
        let p = &sol.params;
        for (name, poly) in [("x", &sol.triple.x), ("y", &sol.triple.y), ("z", &sol.triple.z)] {
            for (deg, c) in poly.coeffs().iter().enumerate() {
                let mut row = prefix("solvable");
                row.extend([
                    i.to_string(),
                    p.k.to_string(),
                    p.l.to_string(),
                    p.s.to_string(),
                    p.r.to_string(),
                    name.to_string(),
                    deg.to_string(),
                    c.to_string(),
                ]);
                rows.push(row);
            }
        }
    }
    rows
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Solvable => "solvable",
        Status::Unsolvable => "unsolvable",
    }
}

fn failure_text(f: KlFailure) -> &'static str {
    match f {
        KlFailure::NoBaseTripleWithMember => "no base solution of m/n0 uses x0",
        KlFailure::NoMultipleOfN0 => "no other member of a base solution is a multiple of n0",
        KlFailure::ConditionIi => "no candidate s gives a positive integer r",
        KlFailure::ConditionIii => "condition iii fails for every candidate",
    }
}

fn write_solution(out: &mut String, sol: &Solution, indent: &str) {
    let _ = writeln!(out, "{indent}{}", sol.params);
    for (name, poly) in [("x", &sol.triple.x), ("y", &sol.triple.y), ("z", &sol.triple.z)] {
        let _ = writeln!(out, "{indent}  {name} = {poly}");
    }
}

fn decision_text(d: &DecisionOutcome) -> String {
    let mut out = String::new();
    let _ = write!(out, "{}: {}", d.instance, status_word(d.status));
    if d.is_solvable() {
        let n = d.solutions.len();
        let _ = writeln!(out, " ({n} solution{})", if n == 1 { "" } else { "s" });
        for sol in &d.solutions {
            write_solution(&mut out, sol, "  ");
        }
    } else {
        out.push('\n');
        if d.kl_pairs.is_empty() {
            out.push_str("  condition i: no divisor d of n1 with d = -1 (mod m)\n");
        }
        for rec in &d.evidence {
            let why = rec.failure.map(failure_text).unwrap_or("accepted");
            let _ = writeln!(
                out,
                "  (k={}, l={}) family {}, x0 = {}: {}",
                rec.k, rec.l, rec.family, rec.x0, why
            );
        }
    }
    out
}

pub fn render_decision(d: &DecisionOutcome, format: Format) -> String {
    match format {
        Format::Json => to_json("decide", d),
        Format::Csv => csv_text(&SOLUTION_HEADER, solution_rows(d)),
        Format::Text => decision_text(d),
    }
}

pub fn render_scan(rep: &ScanReport, format: Format) -> String {
    match format {
        Format::Json => to_json("scan", rep),
        Format::Csv => csv_text(&SOLUTION_HEADER, rep.rows.iter().flat_map(solution_rows).collect()),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "m = {}, n1 = {}", rep.m, rep.n1);
            for row in &rep.rows {
                let _ = writeln!(out, "  n0 = {}: {}", row.instance.n0(), status_word(row.status));
                for sol in &row.solutions {
                    write_solution(&mut out, sol, "    ");
                }
            }
            let adm: Vec<String> = rep.summary.admissible.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "{} residues, {} solvable, {} unsolvable; admissible: {{{}}}",
                rep.summary.residues,
                rep.summary.solvable,
                rep.summary.unsolvable,
                adm.join(", ")
            );
            out
        }
    }
}

#[derive(Serialize)]
struct BaseDoc<'a> {
    #[serde(with = "int_str")]
    m: &'a Integer,
    #[serde(with = "int_str")]
    n0: &'a Integer,
    count: usize,
    triples: Vec<&'a BaseTriple>,
}

pub fn render_base<'a>(
    m: &Integer,
    n0: &Integer,
    triples: impl IntoIterator<Item = &'a BaseTriple>,
    format: Format,
) -> String {
    let triples: Vec<&BaseTriple> = triples.into_iter().collect();
    match format {
        Format::Json => to_json(
            "base",
            BaseDoc {
                m,
                n0,
                count: triples.len(),
                triples,
            },
        ),
        Format::Csv => csv_text(
            &["a", "b", "c"],
            triples
                .iter()
                .map(|t| vec![t.a.to_string(), t.b.to_string(), t.c.to_string()])
                .collect(),
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{m}/{n0}: {} solution(s)", triples.len());
            for t in triples {
                let _ = writeln!(out, "  1/{} + 1/{} + 1/{}", t.a, t.b, t.c);
            }
            out
        }
    }
}

#[derive(Serialize)]
pub struct FamilyDoc<'a> {
    pub instance: &'a ResidueClass,
    pub roles: &'a RoleTriple,
    #[serde(flatten)]
    pub solution: &'a FamilySolution,
    /// Rational polynomial identity, without integrality.
    pub identity: bool,
    pub discriminant: &'a DiscriminantReport,
}

pub fn render_family(doc: &FamilyDoc<'_>, format: Format) -> String {
    let sol = doc.solution;
    match format {
        Format::Json => to_json("family", doc),
        Format::Csv => {
            let mut rows = Vec::new();
            for (name, poly) in [("x", &sol.triple.x), ("y", &sol.triple.y), ("z", &sol.triple.z)] {
                for (deg, c) in poly.coeffs().iter().enumerate() {
                    rows.push(vec![
                        sol.branch.to_string(),
                        name.to_string(),
                        deg.to_string(),
                        c.to_string(),
                    ]);
                }
            }
            csv_text(&["branch", "poly", "degree", "coefficient"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{} {} branch from {}", doc.instance, sol.branch, doc.roles);
            for (name, poly) in [("x", &sol.triple.x), ("y", &sol.triple.y), ("z", &sol.triple.z)] {
                let _ = writeln!(out, "  {name} = {poly}");
            }
            let _ = writeln!(
                out,
                "  identity: {}, integral: {}, degenerate: {}",
                doc.identity, sol.integral, sol.degenerate
            );
            let d = doc.discriminant;
            let _ = writeln!(
                out,
                "  n0^2 - xbar0*zbar0 = {} = {} (xbar0 = {}, zbar0 = {})",
                d.lhs, d.rhs, d.xbar0, d.zbar0
            );
            out
        }
    }
}

pub fn render_audit(rep: &AuditReport, format: Format) -> String {
    match format {
        Format::Json => to_json("audit", rep),
        Format::Csv => csv_text(
            &[
                "corollary",
                "m",
                "p",
                "kl_pairs",
                "checked",
                "solvable_residues",
                "verdict",
            ],
            rep.instances
                .iter()
                .map(|i| {
                    let kl: Vec<String> = i.kl_pairs.iter().map(|p| format!("{}:{}", p.k, p.l)).collect();
                    let sol: Vec<String> = i.solvable_residues.iter().map(ToString::to_string).collect();
                    vec![
                        rep.corollary.to_string(),
                        rep.m.to_string(),
                        i.p.to_string(),
                        kl.join(" "),
                        i.checked.len().to_string(),
                        sol.join(" "),
                        verdict_word(&i.verdict).to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "audit {}: m = {}, primes <= {}: {} checked, {} discrepanc{}",
                rep.corollary,
                rep.m,
                rep.bound,
                rep.instances.len(),
                rep.discrepancies,
                if rep.discrepancies == 1 { "y" } else { "ies" }
            );
            for i in &rep.instances {
                let kl: Vec<String> = i.kl_pairs.iter().map(|p| format!("(k={}, l={})", p.k, p.l)).collect();
                let _ = writeln!(
                    out,
                    "  p = {}: (k, l) = [{}], {} class(es) checked, {}",
                    i.p,
                    kl.join(", "),
                    i.checked.len(),
                    verdict_word(&i.verdict)
                );
                if let Verdict::Discrepancy { witnesses } = &i.verdict {
                    for w in witnesses {
                        let _ = writeln!(out, "    {} {}: {}", w.instance, w.params, w.triple);
                    }
                }
            }
            out
        }
    }
}

fn verdict_word(v: &Verdict) -> &'static str {
    match v {
        Verdict::Consistent => "consistent",
        Verdict::Discrepancy { .. } => "discrepancy",
    }
}
