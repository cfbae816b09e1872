//! Rendering of single computations and figure data.

use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::grothendieck::{expand, groth};
use crate::involutions::{FpfInvolution, Involution};
use crate::ortho::{self, binv_plus, gco_by_path, shiftable_data};
use crate::permgroup::Permutation;
use crate::polyring::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Groth,
    Invgroth,
    Ortho,
    Symp,
    Gco,
    Ivex,
    Igrass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

/// Raw command-line inputs; each target reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct Input {
    pub z: Option<String>,
    pub w: Option<String>,
    pub mu: Option<Vec<usize>>,
    pub n: Option<usize>,
}

impl Input {
    fn z(&self) -> Result<Involution> {
        Involution::parse(self.z.as_deref().ok_or_else(|| missing("--z"))?)
    }

    fn w(&self) -> Result<Permutation> {
        Permutation::parse(self.w.as_deref().ok_or_else(|| missing("--w"))?)
    }

    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| missing("--n"))
    }
}

fn missing(flag: &str) -> Error {
    Error::Parse(format!("missing {flag}"))
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn poly_value(p: &MultiPoly) -> serde_json::Value {
    serde_json::to_value(p).expect("serializable")
}

fn expansion_value(e: &crate::grothendieck::GrothExpansion) -> serde_json::Value {
    serde_json::Value::Array(
        e.sorted_terms()
            .into_iter()
            .map(|(w, c)| json!({ "w": w.to_string(), "coeff": poly_value(c) }))
            .collect(),
    )
}

/// `cβ^b` for a single β-monomial, the generic rendering otherwise.
fn beta_text(c: &MultiPoly) -> String {
    match c.as_beta_monomial() {
        Some((g, 0)) => g.to_string(),
        Some((g, b)) => {
            let head = if g.is_one() { String::new() } else { g.to_string() };
            let tail = if b == 1 { String::new() } else { format!("^{b}") };
            format!("{head}β{tail}")
        }
        None => c.to_string(),
    }
}

fn poly_output(label: &str, p: &MultiPoly, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({ "object": label, "poly": poly_value(p) })),
        _ => format!("{p}\n"),
    }
}

/// One computation rendered as text or JSON.
pub fn compute(target: Target, input: &Input, format: Format) -> Result<String> {
    if format == Format::Dot {
        return Err(Error::Parse("dot output is only available for export".into()));
    }
    match target {
        Target::Groth => {
            let w = input.w()?;
            Ok(poly_output(&format!("G[{w}]"), &groth(&w), format))
        }
        Target::Invgroth => {
            let z = input.z()?;
            Ok(poly_output(&format!("Ghat[{z}]"), &ortho::invgroth(&z), format))
        }
        Target::Ortho => {
            let z = input.z()?;
            Ok(poly_output(&format!("GO[{z}]"), &*ortho::ortho_groth(&z)?, format))
        }
        Target::Symp => {
            let z = FpfInvolution::new(input.z()?, input.n()?)?;
            let (p, e) = crate::grothendieck::symp_groth(&z);
            Ok(match format {
                Format::Json => pretty(&json!({
                    "object": format!("GSp[{z}]"),
                    "poly": poly_value(&p),
                    "expansion": expansion_value(&e),
                })),
                _ => format!("{p}\n= {e}\n"),
            })
        }
        Target::Gco => {
            let z = input.z()?;
            let g = gco_by_path(&z)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "z": z.to_string(),
                    "gco": g.coeffs.iter().map(|(w, c)| (w.to_string(), *c)).collect::<std::collections::BTreeMap<_, _>>(),
                    "expansion": expansion_value(&g.expansion),
                })),
                _ => {
                    let width = g.coeffs.keys().map(|w| w.n()).max().unwrap_or(1);
                    let parts: Vec<String> = g
                        .expansion
                        .sorted_terms()
                        .into_iter()
                        .map(|(w, c)| {
                            let digits: Vec<String> = w.one_line_padded(width).iter().map(|d| d.to_string()).collect();
                            let word = digits.join(if width > 9 { "," } else { "" });
                            format!("{word}:{}", beta_text(c))
                        })
                        .collect();
                    format!("{{{}}}\n", parts.join(", "))
                }
            })
        }
        Target::Ivex => {
            let z = input.z()?;
            let terms = ortho::ivex_terms(&z)?;
            let total = ortho::ivex_formula(&z)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "z": z.to_string(),
                    "terms": terms.iter().map(|(s, c, y)| json!({
                        "set": s, "coeff": c.to_text(), "conjugate": y.to_string(),
                    })).collect::<Vec<_>>(),
                    "sum": poly_value(&total),
                })),
                _ => {
                    let mut s = String::new();
                    for (set, c, y) in &terms {
                        writeln!(s, "S={set:?}: ({c}) * Ghat[{y}]").unwrap();
                    }
                    writeln!(s, "sum = {total}").unwrap();
                    s
                }
            })
        }
        Target::Igrass => {
            let mu = input.mu.clone().ok_or_else(|| missing("--mu"))?;
            let n = input.n()?;
            let terms = ortho::igrass_expansion(&mu, n)?;
            Ok(match format {
                Format::Json => pretty(&json!({
                    "mu": mu,
                    "n": n,
                    "terms": terms.iter().map(|t| json!({
                        "lambda": t.lambda, "z": t.z.to_string(), "coeff": t.coefficient().to_text(),
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = String::new();
                    for t in &terms {
                        writeln!(s, "λ={:?}: ({}) * Ghat[{}]", t.lambda, t.coefficient(), t.z).unwrap();
                    }
                    s
                }
            })
        }
    }
}

/// Graphviz source of `B_inv⁺(z)` labelled `w⁻¹:GC^O_z(w)`.
pub fn binv_plus_dot(z: &Involution) -> Result<String> {
    let g = gco_by_path(z)?;
    Ok(binv_plus(z).to_dot(Some(&g.coeffs)))
}

pub fn binv_plus_json(z: &Involution) -> Result<String> {
    let g = gco_by_path(z)?;
    Ok(binv_plus(z).to_json(Some(&g.coeffs)) + "\n")
}

/// Canonical JSON of `𝒢_w` together with its expansion check.
pub fn poly_json(w: &Permutation) -> Result<String> {
    let p = groth(w);
    let e = expand(&p)?;
    Ok(pretty(&json!({ "w": w.to_string(), "poly": poly_value(&p), "expansion": expansion_value(&e) })))
}

pub fn shiftable_json(z: &Involution) -> Result<String> {
    Ok(shiftable_data(z)?.to_json() + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zin(z: &str) -> Input {
        Input { z: Some(z.into()), ..Input::default() }
    }

    #[test]
    fn compute_examples() {
        assert_eq!(compute(Target::Gco, &zin("(1,2)"), Format::Text).unwrap(), "{213:2, 312:β}\n");
        let w = Input { w: Some("132".into()), ..Input::default() };
        assert_eq!(compute(Target::Groth, &w, Format::Text).unwrap(), groth(&Permutation::parse("132").unwrap()).to_string() + "\n");
        assert!(matches!(compute(Target::Ortho, &zin("(9,9)"), Format::Text), Err(Error::Parse(_))));
        assert!(matches!(compute(Target::Ortho, &zin("(1,2)(3,4)"), Format::Text), Err(Error::NotVexillary(_))));
    }

    #[test]
    fn exports_are_deterministic() {
        let z = Involution::parse("(1,4)").unwrap();
        assert_eq!(binv_plus_dot(&z).unwrap(), binv_plus_dot(&z).unwrap());
        let j = poly_json(&Permutation::parse("321").unwrap()).unwrap();
        assert_eq!(j, poly_json(&Permutation::parse("321").unwrap()).unwrap());
        assert!(j.contains("\"w\": \"321\""));
    }
}
