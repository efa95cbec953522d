//! Poset specs, poset files, and serialized decompositions.
//!
//! A poset file is `{"n": <int>, "covers": [[lo, hi], ...]}`. A family
//! literal is one of `chain:n`, `antichain:k`, `star:b1,b2,...`, `comb:n`,
//! `ocomb:n`, `zipper:n`, `ozipper:n`, `t3:c` or `bowtie`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::analysis::IntPolynomial;
use crate::dynamics::{Decomposition, Operator, Orbit};
use crate::error::{Error, Result};
use crate::families;
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset) -> Self {
        PosetFile {
            n: p.len(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        Poset::new(self.n, &covers)
    }
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    serde_json::from_str::<PosetFile>(text)?.to_poset()
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string(&PosetFile::from_poset(p)).expect("plain data serializes")
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer for {what}, got {s:?}")))
}

/// Builds a poset from a family literal. `Ok(None)` if `spec` is not a
/// literal.
pub fn parse_family(spec: &str) -> Result<Option<Poset>> {
    if spec == "bowtie" {
        return Ok(Some(families::bottomed_bowtie()));
    }
    let Some((name, arg)) = spec.split_once(':') else {
        return Ok(None);
    };
    let p = match name {
        "chain" => families::chain(parse_usize(arg, name)?)?,
        "antichain" => families::antichain(parse_usize(arg, name)?)?,
        "star" => {
            let b = arg
                .split(',')
                .map(|t| parse_usize(t, name))
                .collect::<Result<Vec<_>>>()?;
            families::extended_star(&b)?
        }
        "comb" => families::comb(parse_usize(arg, name)?)?,
        "ocomb" => families::open_comb(parse_usize(arg, name)?)?,
        "zipper" => families::zipper(parse_usize(arg, name)?)?,
        "ozipper" => families::open_zipper(parse_usize(arg, name)?)?,
        "t3" => families::three_leaf_tree(parse_usize(arg, name)?)?,
        _ => return Ok(None),
    };
    Ok(Some(p))
}

/// A family literal, or else a path to a poset file.
pub fn load_poset(spec: &str) -> Result<Poset> {
    if let Some(p) = parse_family(spec)? {
        return Ok(p);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::Parse(format!("{spec:?} is neither a family literal nor an existing file")));
    }
    poset_from_json(&std::fs::read_to_string(path)?)
}

/// A JSON array of integer coefficients, constant term first. Entries may
/// be numbers or decimal strings.
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial> {
    let values: Vec<Value> = serde_json::from_str(text)?;
    let coeffs = values
        .iter()
        .map(|v| match v {
            Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().expect("checked"))),
            Value::Number(n) if n.is_u64() => Ok(BigInt::from(n.as_u64().expect("checked"))),
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
            other => Err(Error::Parse(format!("bad coefficient {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

pub fn load_polynomial(path: &Path) -> Result<IntPolynomial> {
    parse_polynomial(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    /// Label vector, or element list for an ideal.
    pub representative: Value,
}

/// Serialized form of a decomposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionSummary {
    pub poset: String,
    pub m: usize,
    pub operator: Operator,
    pub orbits: Vec<OrbitSummary>,
    pub multiset: BTreeMap<String, usize>,
    pub order: String,
}

fn summarize<S: Serialize>(orbits: &[Orbit<S>]) -> Vec<OrbitSummary> {
    orbits
        .iter()
        .map(|o| OrbitSummary {
            size: o.len(),
            representative: representative_value(o.representative()),
        })
        .collect()
}

fn representative_value<S: Serialize>(s: &S) -> Value {
    let v = serde_json::to_value(s).expect("plain data serializes");
    // a labeling serializes as {m, labels}; keep only the labels
    match v {
        Value::Object(mut map) if map.contains_key("labels") => map.remove("labels").expect("checked"),
        other => other,
    }
}

impl DecompositionSummary {
    pub fn new(poset: impl Into<String>, m: usize, operator: Operator, d: &Decomposition) -> Self {
        let orbits = match d {
            Decomposition::Labelings(d) => summarize(d.orbits()),
            Decomposition::Ideals(d) => summarize(d.orbits()),
        };
        DecompositionSummary {
            poset: poset.into(),
            m,
            operator,
            orbits,
            multiset: d.sizes().into_iter().map(|(k, l)| (k.to_string(), l)).collect(),
            order: d.order().to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("size\trepresentative\n");
        for o in &self.orbits {
            let _ = writeln!(out, "{}\t{}", o.size, o.representative);
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut sizes: Vec<(usize, usize)> = self
            .multiset
            .iter()
            .map(|(k, l)| (k.parse().expect("written from usize"), *l))
            .collect();
        sizes.sort_unstable();
        let notation: Vec<String> = sizes.iter().map(|(k, l)| format!("{k}^{l}")).collect();
        let mut out = format!(
            "{} m={} {}: {} orbits, sizes {}, order {}\n",
            self.poset,
            self.m,
            self.operator,
            self.orbits.len(),
            if notation.is_empty() { "∅".into() } else { notation.join(", ") },
            self.order
        );
        for o in &self.orbits {
            let _ = writeln!(out, "  {:>6}  {}", o.size, o.representative);
        }
        out
    }
}
