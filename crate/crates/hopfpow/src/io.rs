//! JSON persistence for algebra data: a fully explicit, canonical,
//! byte-stable format used for caching built instances and exchanging
//! hand-written ones.
//!
//! Layout: `grading_rank` (k), `degrees` (every degree vector carrying basis
//! elements, ascending), `basis` (degree key like `"2,1"` → label list),
//! `product` (`[i, j, [[label, "p/q"], …]]` with `i`, `j` indices into the
//! flattened label list — degrees ascending, then list order), `coproduct`
//! (`[label, [[left, right, "p/q"], …]]`), and `unit` (the degree-0 label).
//! Scalars are reduced fraction strings; the counit is determined by the
//! grading and is not stored.

use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use crate::hopf::{Element, GradedBasis, HopfData, LabelId};
use crate::scalar::{format_rat, parse_rat_checked, Rat};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::path::Path;

#[derive(Serialize, Deserialize)]
struct HopfJson {
    grading_rank: usize,
    degrees: Vec<Vec<u32>>,
    basis: BTreeMap<String, Vec<String>>,
    product: Vec<(usize, usize, Vec<(String, String)>)>,
    coproduct: Vec<(String, Vec<(String, String, String)>)>,
    unit: String,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// Parses a scalar string, recording a normalization warning when the input
/// was not in canonical reduced form.
fn read_scalar(s: &str, at: &str, warnings: &mut Vec<String>) -> Result<Rat> {
    let (value, canonical) =
        parse_rat_checked(s).map_err(|e| schema(at, e.to_string()))?;
    if !canonical {
        warnings.push(format!(
            "{at}: scalar {s:?} normalized to {:?}",
            format_rat(&value)
        ));
    }
    Ok(value)
}

/// Serializes the algebra to the canonical JSON string (sorted keys, reduced
/// scalars, explicit entries for every in-bound product, trailing newline).
pub fn to_json_string(h: &HopfData) -> String {
    let rank = h.basis.grading_rank();
    let degrees: Vec<MultiDegree> = h.basis.dims().keys().cloned().collect();
    let mut basis = BTreeMap::new();
    let mut flat: Vec<LabelId> = Vec::new();
    for d in &degrees {
        let ids = h.basis.of_degree(d);
        basis.insert(
            d.key(),
            ids.iter()
                .map(|&i| h.basis.label(i).to_string())
                .collect::<Vec<_>>(),
        );
        flat.extend(ids.iter().copied());
    }
    let bound = h.bound();
    let mut product = Vec::new();
    for (pi, &a) in flat.iter().enumerate() {
        for (pj, &b) in flat.iter().enumerate() {
            let total = h
                .basis
                .degree(a)
                .add(h.basis.degree(b))
                .expect("uniform rank");
            if total.max_parts() > bound {
                continue;
            }
            let terms: Vec<(String, String)> = h
                .product_of(a, b)
                .terms()
                .map(|(id, c)| (h.basis.label(id).to_string(), format_rat(c)))
                .collect();
            product.push((pi, pj, terms));
        }
    }
    let mut coproduct = Vec::new();
    for &id in &flat {
        let terms: Vec<(String, String, String)> = h
            .coproduct_of(id)
            .iter()
            .map(|(l, r, c)| {
                (
                    h.basis.label(*l).to_string(),
                    h.basis.label(*r).to_string(),
                    format_rat(c),
                )
            })
            .collect();
        coproduct.push((h.basis.label(id).to_string(), terms));
    }
    let json = HopfJson {
        grading_rank: rank,
        degrees: degrees.iter().map(|d| d.parts().to_vec()).collect(),
        basis,
        product,
        coproduct,
        unit: h.basis.label(h.unit).to_string(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("serializable");
    s.push('\n');
    s
}

/// Parses and validates the JSON format; returns the algebra and any
/// normalization warnings.
pub fn from_json_str(name: &str, text: &str) -> Result<(HopfData, Vec<String>)> {
    let json: HopfJson = serde_json::from_str(text)?;
    if json.grading_rank == 0 {
        return Err(schema("grading_rank", "must be at least 1"));
    }
    let mut warnings = Vec::new();

    // Degree keys and basis labels.
    let mut degree_list: Vec<(MultiDegree, &Vec<String>)> = Vec::new();
    for (key, labels) in &json.basis {
        let degree = MultiDegree::parse_key(key)
            .map_err(|e| schema(format!("basis[{key:?}]"), e.to_string()))?;
        if degree.rank() != json.grading_rank {
            return Err(schema(
                format!("basis[{key:?}]"),
                format!(
                    "degree has rank {}, expected grading_rank {}",
                    degree.rank(),
                    json.grading_rank
                ),
            ));
        }
        if labels.is_empty() {
            return Err(schema(format!("basis[{key:?}]"), "empty label list"));
        }
        degree_list.push((degree, labels));
    }
    degree_list.sort_by(|a, b| a.0.cmp(&b.0));
    let declared: Vec<Vec<u32>> = degree_list
        .iter()
        .map(|(d, _)| d.parts().to_vec())
        .collect();
    if declared != json.degrees {
        return Err(schema(
            "degrees",
            "list does not match the basis keys in ascending order",
        ));
    }
    let mut basis = GradedBasis::new();
    for (degree, labels) in &degree_list {
        for label in *labels {
            basis
                .add(label.clone(), degree.clone())
                .map_err(|e| schema(format!("basis[{:?}]", degree.key()), e.to_string()))?;
        }
    }
    let zero = MultiDegree::zero(json.grading_rank);
    if basis.of_degree(&zero).len() != 1 {
        return Err(schema(
            "basis",
            format!(
                "degree 0 must be one-dimensional, found dimension {}",
                basis.of_degree(&zero).len()
            ),
        ));
    }
    let unit_id = basis
        .id_of(&json.unit)
        .ok_or_else(|| schema("unit", format!("unknown label {:?}", json.unit)))?;
    if basis.degree(unit_id) != &zero {
        return Err(schema("unit", "label is not in degree 0"));
    }

    // Flattened index order: degrees ascending, list order within.
    let mut flat: Vec<LabelId> = Vec::new();
    for (degree, _) in &degree_list {
        flat.extend(basis.of_degree(degree));
    }

    let mut product = HashMap::new();
    for (n, (i, j, terms)) in json.product.iter().enumerate() {
        let at = format!("product[{n}]");
        let (&a, &b) = match (flat.get(*i), flat.get(*j)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(schema(
                    at,
                    format!("index ({i}, {j}) out of range for {} labels", flat.len()),
                ))
            }
        };
        let mut elem = Element::zero();
        for (label, scalar) in terms {
            let id = basis
                .id_of(label)
                .ok_or_else(|| schema(at.clone(), format!("unknown label {label:?}")))?;
            elem.add_term(id, read_scalar(scalar, &at, &mut warnings)?);
        }
        if product.insert((a, b), elem).is_some() {
            return Err(schema(at, format!("duplicate pair ({i}, {j})")));
        }
    }

    let mut coproduct = vec![Vec::new(); basis.len()];
    let mut seen = vec![false; basis.len()];
    for (n, (label, terms)) in json.coproduct.iter().enumerate() {
        let at = format!("coproduct[{n}]");
        let id = basis
            .id_of(label)
            .ok_or_else(|| schema(at.clone(), format!("unknown label {label:?}")))?;
        if seen[id] {
            return Err(schema(at, format!("duplicate label {label:?}")));
        }
        seen[id] = true;
        let mut entries = Vec::new();
        for (l, r, scalar) in terms {
            let li = basis
                .id_of(l)
                .ok_or_else(|| schema(at.clone(), format!("unknown left label {l:?}")))?;
            let ri = basis
                .id_of(r)
                .ok_or_else(|| schema(at.clone(), format!("unknown right label {r:?}")))?;
            entries.push((li, ri, read_scalar(scalar, &at, &mut warnings)?));
        }
        coproduct[id] = entries;
    }

    let h = HopfData::assemble(name, basis, product, coproduct)
        .map_err(|e| schema("(structure)", e.to_string()))?;
    Ok((h, warnings))
}

fn with_path(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    ))
}

/// Writes the canonical JSON to disk, creating parent directories.
pub fn save_hopf(h: &HopfData, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| with_path(path, e))?;
        }
    }
    std::fs::write(path, to_json_string(h)).map_err(|e| with_path(path, e))
}

/// Reads and validates an algebra file; the second component lists
/// normalization warnings.
pub fn load_hopf(path: &Path) -> Result<(HopfData, Vec<String>)> {
    let text = std::fs::read_to_string(path).map_err(|e| with_path(path, e))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "loaded".into());
    from_json_str(&stem, &text)
}
