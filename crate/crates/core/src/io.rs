//! Text and JSON formats for ideals and complexes, and JSON result documents.
//!
//! Ideal text format:
//!
//! ```text
//! # comment
//! vars: x, y, z
//! ideal: x^2, x*y,
//!        y^2, y*z, z^2
//! ```
//!
//! Without a `vars:` line the variables are taken in order of first
//! appearance. The machine format is JSON:
//! `{"vars": ["x", "y"], "generators": [[2, 0], [1, 1]]}`.
//!
//! Vertex and variable indices are 1-based in every external format.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::complex::{FaceSpec, LabeledComplex};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::monomial::{default_names, minimalize, IrreducibleIdeal, Monomial, MonomialIdeal};
use crate::resolution::FreeComplex;
use crate::residue::{DualityReport, ResidueCurrent};
use crate::scarf::ScarfPair;

pub const SCHEMA_VERSION: u32 = 1;

/// A parsed ideal with its variable names and any diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub names: Vec<String>,
    pub warnings: Vec<String>,
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    if text.trim_start().starts_with('{') {
        parse_ideal_json(text)
    } else {
        parse_ideal_text(text)
    }
}

struct RawTerm {
    factors: Vec<(String, u32)>,
}

pub fn parse_ideal_text(text: &str) -> Result<ParsedIdeal> {
    let mut declared: Option<Vec<String>> = None;
    let mut terms: Vec<RawTerm> = Vec::new();
    let mut in_ideal = false;
    let mut saw_ideal = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("vars:") {
            if declared.is_some() {
                return Err(Error::parse(line_no, indent + 1, "duplicate `vars:` line"));
            }
            if saw_ideal {
                return Err(Error::parse(line_no, indent + 1, "`vars:` must precede `ideal:`"));
            }
            declared = Some(parse_vars(rest, line_no, indent + 6)?);
            in_ideal = false;
        } else if let Some(rest) = trimmed.strip_prefix("ideal:") {
            if saw_ideal {
                return Err(Error::parse(line_no, indent + 1, "duplicate `ideal:` line"));
            }
            saw_ideal = true;
            in_ideal = true;
            parse_terms(rest, line_no, indent + 7, &mut terms)?;
        } else if in_ideal {
            parse_terms(line, line_no, 1, &mut terms)?;
        } else {
            return Err(Error::parse(line_no, indent + 1, "expected `vars:` or `ideal:`"));
        }
    }
    if !saw_ideal {
        return Err(Error::parse(1, 1, "missing `ideal:` line"));
    }

    let names = match declared {
        Some(names) => {
            for t in &terms {
                for (name, _) in &t.factors {
                    if !names.contains(name) {
                        return Err(Error::UnknownVariable(name.clone()));
                    }
                }
            }
            names
        }
        None => {
            let mut names: Vec<String> = Vec::new();
            for (name, _) in terms.iter().flat_map(|t| &t.factors) {
                if !names.contains(name) {
                    names.push(name.clone());
                }
            }
            names
        }
    };
    let n = names.len();
    let mut gens = Vec::with_capacity(terms.len());
    for t in &terms {
        let mut exps = vec![0u32; n];
        for (name, e) in &t.factors {
            let i = names.iter().position(|v| v == name).expect("names were checked");
            exps[i] = exps[i].checked_add(*e).ok_or(Error::Overflow)?;
        }
        gens.push(Monomial::new(exps));
    }
    finish(n, gens, names)
}

fn finish(n: usize, gens: Vec<Monomial>, names: Vec<String>) -> Result<ParsedIdeal> {
    let minimal = minimalize(&gens)?;
    let mut warnings = Vec::new();
    if minimal.len() != gens.len() {
        warnings.push(format!(
            "input generators were not minimal: {} given, {} minimal generators kept",
            gens.len(),
            minimal.len()
        ));
    }
    Ok(ParsedIdeal { ideal: MonomialIdeal::new(n, &minimal)?, names, warnings })
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn parse_vars(rest: &str, line: usize, col0: usize) -> Result<Vec<String>> {
    let mut names = Vec::new();
    let mut col = col0;
    for piece in rest.split(',') {
        let name = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        let at = col + lead;
        let valid = name.chars().next().is_some_and(is_ident_start) && name.chars().all(is_ident);
        if !valid {
            return Err(Error::parse(line, at, format!("invalid variable name `{name}`")));
        }
        if names.iter().any(|n: &String| n == name) {
            return Err(Error::parse(line, at, format!("variable `{name}` declared twice")));
        }
        names.push(name.to_string());
        col += piece.chars().count() + 1;
    }
    Ok(names)
}

/// Parses a comma-separated run of terms; `col0` is the 1-based column of
/// the first character of `s`.
fn parse_terms(s: &str, line: usize, col0: usize, out: &mut Vec<RawTerm>) -> Result<()> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let col = |i: usize| col0 + i;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == chars.len() {
            return Ok(());
        }
        // One term: `1` or factor (`*` factor)*.
        let mut factors = Vec::new();
        if chars[i] == '1' && chars.get(i + 1).is_none_or(|c| !c.is_ascii_digit()) {
            i += 1;
        } else {
            loop {
                skip_ws(&mut i);
                if i == chars.len() || !is_ident_start(chars[i]) {
                    return Err(Error::parse(line, col(i), "expected a variable name"));
                }
                let start = i;
                while i < chars.len() && is_ident(chars[i]) {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                skip_ws(&mut i);
                let mut exp = 1u32;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    skip_ws(&mut i);
                    let ds = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return Err(Error::parse(line, col(ds), "expected a nonnegative integer exponent"));
                    }
                    let digits: String = chars[ds..i].iter().collect();
                    exp = digits.parse().map_err(|_| Error::parse(line, col(ds), "exponent out of range"))?;
                }
                factors.push((name, exp));
                skip_ws(&mut i);
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                    continue;
                }
                break;
            }
        }
        out.push(RawTerm { factors });
        skip_ws(&mut i);
        if i == chars.len() {
            return Ok(());
        }
        if chars[i] != ',' {
            return Err(Error::parse(line, col(i), format!("unexpected `{}`", chars[i])));
        }
        i += 1;
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealDoc {
    vars: Option<Vec<String>>,
    generators: Vec<Vec<u32>>,
}

pub fn parse_ideal_json(text: &str) -> Result<ParsedIdeal> {
    let doc: IdealDoc = serde_json::from_str(text).map_err(json_error)?;
    let n = match &doc.vars {
        Some(v) => v.len(),
        None => doc.generators.first().map_or(0, Vec::len),
    };
    if let Some(bad) = doc.generators.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch { left: bad.len(), right: n });
    }
    let names = doc.vars.unwrap_or_else(|| default_names(n));
    finish(n, doc.generators.into_iter().map(Monomial::new).collect(), names)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}

/// Text form accepted by [`parse_ideal_text`].
pub fn format_ideal_text(ideal: &MonomialIdeal, names: &[String]) -> String {
    let terms: Vec<String> = ideal.generators().iter().map(|g| g.display_with(names).to_string()).collect();
    format!("vars: {}\nideal: {}\n", names.join(", "), terms.join(", "))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    vertices: Option<Vec<Vec<u32>>>,
    facets: Option<Vec<Vec<usize>>>,
    faces: Option<Vec<FaceDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceDoc {
    id: i64,
    dim: isize,
    vertices: Vec<usize>,
    #[serde(default)]
    boundary: Vec<(i64, i8)>,
}

/// Reads a complex file. Vertex labels default to the ideal's generators
/// in canonical order; vertex indices are 1-based.
///
/// ```json
/// {"facets": [[1, 2], [2, 3]]}
/// {"faces": [{"id": 1, "dim": 0, "vertices": [1]}, ...,
///            {"id": 9, "dim": 1, "vertices": [1, 2], "boundary": [[2, 1], [1, -1]]}]}
/// ```
pub fn parse_complex(text: &str, ideal: &MonomialIdeal) -> Result<LabeledComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    let labels: Vec<Monomial> = match doc.vertices {
        Some(v) => {
            if let Some(bad) = v.iter().find(|l| l.len() != ideal.ambient_dim()) {
                return Err(Error::DimensionMismatch { left: bad.len(), right: ideal.ambient_dim() });
            }
            v.into_iter().map(Monomial::new).collect()
        }
        None => ideal.generators().to_vec(),
    };
    let count = labels.len();
    let to_zero_based = |v: usize| {
        v.checked_sub(1).filter(|&x| x < count).ok_or(Error::VertexOutOfRange { index: v, count })
    };
    match (doc.facets, doc.faces) {
        (Some(facets), None) => {
            let facets = facets
                .into_iter()
                .map(|f| f.into_iter().map(to_zero_based).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            LabeledComplex::simplicial_from_facets(labels, &facets)
        }
        (None, Some(faces)) => {
            let specs = faces
                .into_iter()
                .map(|f| {
                    Ok(FaceSpec {
                        id: f.id,
                        dim: f.dim,
                        vertices: f.vertices.into_iter().map(to_zero_based).collect::<Result<_>>()?,
                        boundary: f.boundary,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            LabeledComplex::polyhedral_from_incidence(labels, &specs)
        }
        _ => Err(Error::parse(1, 1, "complex needs exactly one of `facets` or `faces`")),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    doc
}

pub fn monomial_json(m: &Monomial, names: &[String]) -> Value {
    json!({ "exponents": m.exponents(), "text": m.display_with(names).to_string() })
}

pub fn ideal_json(ideal: &MonomialIdeal, names: &[String]) -> Value {
    json!({
        "vars": names,
        "generators": ideal.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
        "text": ideal.display_with(names).to_string(),
    })
}

pub fn irreducible_json(c: &IrreducibleIdeal, names: &[String]) -> Value {
    json!({
        "exponent": c.exponent().exponents(),
        "support": one_based(&c.support()),
        "text": c.display_with(names).to_string(),
    })
}

pub fn complex_json(x: &LabeledComplex, names: &[String]) -> Value {
    let faces: Vec<Value> = x
        .faces()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(id, f)| {
            json!({
                "id": id,
                "dim": f.dim(),
                "vertices": one_based(f.vertices()),
                "label": monomial_json(f.label(), names),
                "boundary": f.boundary().iter().filter(|(b, _)| *b != 0).map(|&(b, s)| json!([b, s])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let facets: Vec<Vec<usize>> = x.facets().iter().map(|&f| one_based(x.face(f).vertices())).collect();
    json!({
        "dim": x.dim(),
        "simplicial": x.is_simplicial(),
        "f_vector": (0..=x.dim().max(-1) + 1).map(|k| x.graded(k as usize).len()).collect::<Vec<_>>(),
        "facets": facets,
        "faces": faces,
    })
}

pub fn free_complex_json(f: &FreeComplex, names: &[String]) -> Value {
    let differentials: Vec<Value> = (1..=f.length())
        .map(|k| {
            json!({
                "k": k,
                "entries": f.differential(k).iter().map(|e| json!({
                    "row": e.row + 1,
                    "col": e.col + 1,
                    "sign": e.sign,
                    "monomial": monomial_json(&e.monomial, names),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "ranks": f.ranks(),
        "chain_complex": f.verify_chain(),
        "minimal": f.is_minimal(),
        "differentials": differentials,
    })
}

pub fn decomposition_json(d: &Decomposition, names: &[String], verified: bool) -> Value {
    json!({
        "method": d.method().as_str(),
        "components": d.components().iter().map(|c| irreducible_json(c, names)).collect::<Vec<_>>(),
        "verified": verified,
    })
}

pub fn scarf_pairs_json(pairs: &[ScarfPair], names: &[String]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| json!({ "K": one_based(&p.k), "tau": one_based(&p.tau), "label": monomial_json(&p.label, names) }))
            .collect(),
    )
}

pub fn residue_json(r: &ResidueCurrent, names: &[String]) -> Value {
    Value::Array(
        r.entries()
            .iter()
            .map(|e| {
                json!({
                    "K": one_based(&e.k),
                    "tau": one_based(&e.tau),
                    "alpha": e.alpha.exponents(),
                    "annihilator": irreducible_json(&e.annihilator, names),
                    "status": e.status.as_str(),
                    "rule": e.rule.as_str(),
                    "has_smooth_factor": e.has_smooth_factor,
                    "symbol": e.render(names),
                })
            })
            .collect(),
    )
}

pub fn duality_json(report: &DualityReport, names: &[String]) -> Value {
    json!({
        "entries": residue_json(&report.current, names),
        "lower": ideal_json(&report.lower, names),
        "upper": ideal_json(&report.upper, names),
        "verdict": report.verdict.as_str(),
    })
}
