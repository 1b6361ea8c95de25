//! Command-line frontend: argument parsing, dispatch and the `verify`
//! subcommand for externally supplied polynomial triples.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use egyptpoly::families::family;
use egyptpoly::report::{self, FamilyDoc, Format};
use egyptpoly::scan::DEFAULT_BOUND;
use egyptpoly::theorem::{degree_report, identity_holds};
use egyptpoly::{
    audit, decide, discriminant_identity, enumerate_base_solutions, identity_residual, scan_residues,
    search_condition_iii, verify_identity, BaseTriple, Branch, Corollary, DecisionOutcome, DegreeReport, ParamSet,
    PolyTriple, RationalPoly, ResidueClass, RoleTriple,
};

/// Default upper end of the `t` range walked by the family search.
pub const DEFAULT_T_MAX: i64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "egyptpoly",
    version,
    about = "Integer polynomial solutions of m/(n0 + n1*λ) = 1/x + 1/y + 1/z"
)]
pub struct Cli {
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    pub format: Format,

    /// Worker threads for scans and audits (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: egyptpoly::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct Instance {
    #[arg(long)]
    pub m: BigInt,
    #[arg(long)]
    pub n0: BigInt,
    #[arg(long)]
    pub n1: BigInt,
}

impl Instance {
    fn residue_class(&self) -> anyhow::Result<ResidueClass> {
        Ok(ResidueClass::new(self.m.clone(), self.n0.clone(), self.n1.clone())?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one residue class and list every solution.
    Decide {
        #[command(flatten)]
        instance: Instance,
        /// Upper end of the t range for the condition-iii family search.
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        t_max: i64,
    },
    /// Decide every residue coprime to a modulus.
    Scan {
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        n1: BigInt,
    },
    /// All unit-fraction triples summing to m/n0.
    Base {
        #[arg(long)]
        m: BigInt,
        #[arg(long)]
        n0: BigInt,
    },
    /// Build the plus or minus rational family from a base triple.
    Family {
        #[command(flatten)]
        instance: Instance,
        /// Base triple A,B,C.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        base: Vec<BigInt>,
        /// Role assignment x0,y0,z0, a permutation of the base triple
        /// (default: the base order).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        roles: Option<Vec<BigInt>>,
        #[arg(long, value_parser = parse_branch)]
        branch: Branch,
    },
    /// Audit a corollary over all primes up to a bound.
    Audit {
        /// i, 3 or 4.
        #[arg(long, value_parser = parse_corollary)]
        corollary: Corollary,
        #[arg(long)]
        m: BigInt,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Check polynomial triples from a JSON file ("-" reads stdin).
    Verify {
        #[arg(long)]
        m: Option<BigInt>,
        #[arg(long)]
        n0: Option<BigInt>,
        #[arg(long)]
        n1: Option<BigInt>,
        #[arg(long)]
        file: PathBuf,
    },
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse().map_err(|e: egyptpoly::Error| e.to_string())
}

fn parse_corollary(s: &str) -> Result<Corollary, String> {
    s.parse().map_err(|e: egyptpoly::Error| e.to_string())
}

/// Process exit status for a completed run. Failures to run at all map to 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    NotVerified = 1,
    Discrepancy = 3,
}

pub const EXIT_PRECONDITION: i32 = 2;

pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<Exit> {
    let (text, exit) = match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .context("building thread pool")?;
            pool.install(|| dispatch(cli))?
        }
        None => dispatch(cli)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(exit)
}

fn dispatch(cli: &Cli) -> anyhow::Result<(String, Exit)> {
    let format = cli.format;
    let (text, exit) = match &cli.command {
        Command::Decide { instance, t_max } => {
            let rc = instance.residue_class()?;
            (render_decide(&rc, *t_max, format)?, Exit::Ok)
        }
        Command::Scan { m, n1 } => {
            let rep = scan_residues(m, n1)?;
            (report::render_scan(&rep, format), Exit::Ok)
        }
        Command::Base { m, n0 } => {
            let triples = enumerate_base_solutions(m, n0)?;
            (report::render_base(m, n0, &triples, format), Exit::Ok)
        }
        Command::Family {
            instance,
            base,
            roles,
            branch,
        } => (
            render_family(instance, base, roles.as_deref(), *branch, format)?,
            Exit::Ok,
        ),
        Command::Audit { corollary, m, bound } => {
            let rep = audit(*corollary, m, *bound)?;
            let exit = if rep.has_discrepancy() {
                Exit::Discrepancy
            } else {
                Exit::Ok
            };
            (report::render_audit(&rep, format), exit)
        }
        Command::Verify { m, n0, n1, file } => {
            let flags = [m.clone(), n0.clone(), n1.clone()];
            let rep = verify_file(&flags, file)?;
            let exit = if rep.verified { Exit::Ok } else { Exit::NotVerified };
            (render_verify(&rep, format), exit)
        }
    };
    Ok((text, exit))
}

#[derive(Serialize)]
struct FamilySearch {
    k: String,
    l: String,
    family: String,
    t_max: i64,
    found: Option<ParamSet>,
}

#[derive(Serialize)]
struct DecideDoc<'a> {
    #[serde(flatten)]
    outcome: &'a DecisionOutcome,
    family_search: Vec<FamilySearch>,
}

fn render_decide(rc: &ResidueClass, t_max: i64, format: Format) -> anyhow::Result<String> {
    let outcome = decide(rc)?;
    let family_search = outcome
        .evidence
        .iter()
        .map(|rec| {
            Ok(FamilySearch {
                k: rec.k.to_string(),
                l: rec.l.to_string(),
                family: rec.family.clone(),
                t_max,
                found: search_condition_iii(&rec.family_params, t_max)?,
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(match format {
        Format::Json => report::to_json(
            "decide",
            DecideDoc {
                outcome: &outcome,
                family_search,
            },
        ),
        Format::Text => {
            let mut text = report::render_decision(&outcome, format);
            for fs in &family_search {
                let found = match &fs.found {
                    Some(ps) => format!("first hit {ps}"),
                    None => "no hit".to_string(),
                };
                text.push_str(&format!(
                    "  family search (k={}, l={}) over t <= {}: {found}\n",
                    fs.k, fs.l, fs.t_max
                ));
            }
            text
        }
        Format::Csv => report::render_decision(&outcome, format),
    })
}

fn render_family(
    instance: &Instance,
    base: &[BigInt],
    roles: Option<&[BigInt]>,
    branch: Branch,
    format: Format,
) -> anyhow::Result<String> {
    let rc = instance.residue_class()?;
    let [a, b, c] = base else {
        bail!("--base: expected three comma-separated integers, got {}", base.len());
    };
    let roles = roles.unwrap_or(base);
    let [x0, y0, z0] = roles else {
        bail!("--roles: expected three comma-separated integers, got {}", roles.len());
    };
    let triple = BaseTriple::new(a.clone(), b.clone(), c.clone());
    if BaseTriple::new(x0.clone(), y0.clone(), z0.clone()) != triple {
        bail!("--roles: {x0},{y0},{z0} is not a permutation of the base triple {triple}");
    }
    let rt = RoleTriple::new(x0.clone(), y0.clone(), z0.clone());
    rt.check(rc.m(), rc.n0())?;
    let solution = family(&rc, &rt, branch)?;
    let disc = discriminant_identity(&rc, &rt)?;
    let doc = FamilyDoc {
        instance: &rc,
        roles: &rt,
        identity: identity_holds(&rc, &solution.triple),
        solution: &solution,
        discriminant: &disc,
    };
    Ok(report::render_family(&doc, format))
}

#[derive(Debug, Serialize)]
pub struct TripleCheck {
    pub index: usize,
    #[serde(flatten)]
    pub triple: PolyTriple,
    pub identity: bool,
    pub integral: bool,
    pub verified: bool,
    /// Degrees of x, y, z in ascending order.
    pub degrees: [usize; 3],
    /// Degree of `m*x*z - n*(x + z)` with `y` the highest-degree polynomial.
    pub aux_degree: Option<usize>,
    /// `m*x*y*z - n*(x*y + x*z + y*z)` when the identity fails.
    pub residual: Option<RationalPoly>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub instance: ResidueClass,
    pub verified: bool,
    pub triples: Vec<TripleCheck>,
}

fn read_source(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn instance_field(doc: &Value, name: &str) -> Option<BigInt> {
    doc.get("instance")?.get(name)?.as_str()?.parse().ok()
}

fn parse_triple(v: &Value, label: &str) -> anyhow::Result<PolyTriple> {
    if !v.is_object() {
        bail!("{label}: expected an object with fields x, y, z");
    }
    let field = |name: &str| -> anyhow::Result<RationalPoly> {
        let raw = v.get(name).ok_or_else(|| anyhow!("{label}: missing field {name}"))?;
        let poly: RationalPoly =
            serde_json::from_value(raw.clone()).map_err(|e| anyhow!("{label}: field {name}: {e}"))?;
        if poly.is_zero() {
            bail!("{label}: field {name}: zero polynomial");
        }
        Ok(poly)
    };
    Ok(PolyTriple::new(field("x")?, field("y")?, field("z")?))
}

/// Reads a file holding either one triple `{"x": [...], "y": [...],
/// "z": [...]}` or a `decide` JSON document, and checks every triple in it.
/// `flags` are `m, n0, n1`; missing ones are taken from the document's
/// `instance` object.
pub fn verify_file(flags: &[Option<BigInt>; 3], path: &Path) -> anyhow::Result<VerifyReport> {
    let text = read_source(path)?;
    verify_text(flags, &text)
}

pub fn verify_text(flags: &[Option<BigInt>; 3], text: &str) -> anyhow::Result<VerifyReport> {
    let doc: Value = serde_json::from_str(text).map_err(|e| anyhow!("invalid JSON: {e}"))?;
    let mut params = Vec::with_capacity(3);
    for (flag, name) in flags.iter().zip(["m", "n0", "n1"]) {
        let v = flag
            .clone()
            .or_else(|| instance_field(&doc, name))
            .ok_or_else(|| anyhow!("missing --{name} and no instance.{name} in the file"))?;
        params.push(v);
    }
    let [m, n0, n1]: [BigInt; 3] = params.try_into().expect("three parameters");
    let rc = ResidueClass::new(m, n0, n1)?;

    let triples: Vec<PolyTriple> = match doc.get("solutions") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| parse_triple(v, &format!("solutions[{i}]")))
            .collect::<anyhow::Result<_>>()?,
        Some(_) => bail!("solutions: expected an array"),
        None => vec![parse_triple(&doc, "triple")?],
    };

    let checks: Vec<TripleCheck> = triples
        .into_iter()
        .enumerate()
        .map(|(index, triple)| check_triple(&rc, index, triple))
        .collect();
    Ok(VerifyReport {
        instance: rc,
        verified: checks.iter().all(|c| c.verified),
        triples: checks,
    })
}

fn check_triple(rc: &ResidueClass, index: usize, triple: PolyTriple) -> TripleCheck {
    let identity = identity_holds(rc, &triple);
    let integral = triple.is_positive_integral();
    let verified = verify_identity(rc, &triple);
    let DegreeReport { degrees, aux_degree } = degree_report(rc, &triple);
    let residual = (!identity).then(|| identity_residual(rc, &triple));
    TripleCheck {
        index,
        triple,
        identity,
        integral,
        verified,
        degrees,
        aux_degree,
        residual,
    }
}

fn render_verify(rep: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => report::to_json("verify", rep),
        Format::Csv => {
            let mut s = String::from("index,identity,integral,verified,degrees\n");
            for c in &rep.triples {
                let d = c.degrees;
                s.push_str(&format!(
                    "{},{},{},{},{} {} {}\n",
                    c.index, c.identity, c.integral, c.verified, d[0], d[1], d[2]
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &rep.triples {
                let d = c.degrees;
                let status = if c.verified {
                    "verified".to_string()
                } else if !c.identity {
                    "identity fails".to_string()
                } else {
                    "identity holds but coefficients are not all positive integers".to_string()
                };
                s.push_str(&format!(
                    "triple {} for {}: {status}, degrees {{{}, {}, {}}}\n",
                    c.index, rep.instance, d[0], d[1], d[2]
                ));
                if let Some(res) = &c.residual {
                    s.push_str(&format!("  residual m*x*y*z - n*(xy + xz + yz) = {res}\n"));
                }
            }
            s.push_str(if rep.verified { "verified\n" } else { "not verified\n" });
            s
        }
    }
}
