//! WebAssembly bindings for the static demo page in `www/`. Every export
//! takes decimal strings and returns the same JSON the CLI prints, or an
//! error message.

use num_bigint::BigInt;
use wasm_bindgen::prelude::*;

use egyptpoly::families::family;
use egyptpoly::report::{self, FamilyDoc};
use egyptpoly::theorem::identity_holds;
use egyptpoly::{decide, discriminant_identity, scan_residues, Branch, ResidueClass, RoleTriple};

/// Largest modulus the scan panel accepts, to keep the page responsive.
pub const MAX_SCAN_MODULUS: u32 = 2000;

fn parse(name: &str, s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{name}: expected an integer, got {s:?}"))
}

fn residue_class(m: &str, n0: &str, n1: &str) -> Result<ResidueClass, String> {
    ResidueClass::new(parse("m", m)?, parse("n0", n0)?, parse("n1", n1)?).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn decide_json(m: &str, n0: &str, n1: &str) -> Result<String, String> {
    let rc = residue_class(m, n0, n1)?;
    let out = decide(&rc).map_err(|e| e.to_string())?;
    Ok(report::to_json("decide", &out))
}

#[wasm_bindgen]
pub fn scan_json(m: &str, n1: &str) -> Result<String, String> {
    let (m, n1) = (parse("m", m)?, parse("n1", n1)?);
    if n1 > BigInt::from(MAX_SCAN_MODULUS) {
        return Err(format!("n1: at most {MAX_SCAN_MODULUS} in the browser"));
    }
    let rep = scan_residues(&m, &n1).map_err(|e| e.to_string())?;
    Ok(report::to_json("scan", &rep))
}

#[wasm_bindgen]
pub fn family_json(m: &str, n0: &str, n1: &str, x0: &str, y0: &str, z0: &str, branch: &str) -> Result<String, String> {
    let rc = residue_class(m, n0, n1)?;
    let rt = RoleTriple::new(parse("x0", x0)?, parse("y0", y0)?, parse("z0", z0)?);
    let branch: Branch = branch.parse().map_err(|e: egyptpoly::Error| e.to_string())?;
    let solution = family(&rc, &rt, branch).map_err(|e| e.to_string())?;
    let disc = discriminant_identity(&rc, &rt).map_err(|e| e.to_string())?;
    let doc = FamilyDoc {
        instance: &rc,
        roles: &rt,
        identity: identity_holds(&rc, &solution.triple),
        solution: &solution,
        discriminant: &disc,
    };
    Ok(report::to_json("family", &doc))
}
