//! JSON documents for simplicial sets, complexes and categories.
//!
//! ```json
//! {"kind": "sset", "name": "...", "truncation": 3, "body": {"simplices": [[{"label": "v"}], ...]}}
//! ```
//!
//! A face is written `[[i, j, ...], index]`: the degeneracy word and the
//! position of the nondegenerate simplex in its level. Serialization is
//! canonical: keys sorted, two-space indentation, trailing newline.

use std::collections::HashMap;

use serde_json::{Map, Value, json};
use thiserror::Error;

use crate::complexes::{AbstractComplex, ComplexError, OrientedComplex, validate_complex};
use crate::fincat::{CategoryError, FinCategory, Morphism};
use crate::sset::{DegeneracyWord, FiniteSSet, Simplex, SimplexKey, SimplexRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("dangling reference at {path}: {message}")]
    Dangling { path: String, message: String },
}

fn schema(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn dangling(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Dangling {
        path: path.to_string(),
        message: message.into(),
    }
}

/// A complex as written: vertex labels and simplices as label lists, not yet
/// checked for face closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexBody {
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<String>>,
    /// Pairs `a <= b`; only for oriented complexes.
    pub order: Option<Vec<(String, String)>>,
}

impl ComplexBody {
    pub fn from_complex(k: &AbstractComplex) -> Self {
        Self {
            vertices: k.vertices().to_vec(),
            simplices: k.labelled_simplices(),
            order: None,
        }
    }

    pub fn from_oriented(k: &OrientedComplex) -> Self {
        let labels = k.complex().vertices();
        Self {
            order: Some(
                k.relations()
                    .into_iter()
                    .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
                    .collect(),
            ),
            ..Self::from_complex(k.complex())
        }
    }

    pub fn complex(&self) -> Result<AbstractComplex, ComplexError> {
        validate_complex(&self.vertices, &self.simplices)
    }

    /// The complex with its vertex order; the listing order if none is given.
    pub fn oriented(&self) -> Result<OrientedComplex, ComplexError> {
        let complex = self.complex()?;
        match &self.order {
            None => Ok(OrientedComplex::with_listing_order(complex)),
            Some(pairs) => {
                let pos = |l: &String| self.vertices.iter().position(|v| v == l).expect("checked at parse");
                let relations: Vec<(usize, usize)> = pairs.iter().map(|(a, b)| (pos(a), pos(b))).collect();
                OrientedComplex::new(complex, &relations)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    SSet(FiniteSSet),
    Complex(ComplexBody),
    OrientedComplex(ComplexBody),
    Category(FinCategory),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::SSet(_) => "sset",
            Object::Complex(_) => "complex",
            Object::OrientedComplex(_) => "oriented_complex",
            Object::Category(_) => "category",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectDocument {
    pub name: String,
    pub object: Object,
}

impl ObjectDocument {
    pub fn sset(name: impl Into<String>, k: FiniteSSet) -> Self {
        Self {
            name: name.into(),
            object: Object::SSet(k),
        }
    }
}

pub fn parse_document(text: &str) -> Result<ObjectDocument, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = as_object(&value, "$")?;
    known_keys(top, "$", &["body", "kind", "name", "truncation"])?;
    let kind = as_str(field(top, "$", "kind")?, "$.kind")?;
    let name = match top.get("name") {
        None => String::new(),
        Some(v) => as_str(v, "$.name")?.to_string(),
    };
    let body = as_object(field(top, "$", "body")?, "$.body")?;
    let object = match kind {
        "sset" => {
            let t = as_int(field(top, "$", "truncation")?, "$.truncation")?;
            let truncation = match t {
                -1 => None,
                t if t >= 0 => Some(t as usize),
                _ => return Err(schema("$.truncation", "must be -1 or nonnegative")),
            };
            Object::SSet(parse_sset(body, truncation)?)
        }
        "complex" | "oriented_complex" => {
            if top.contains_key("truncation") {
                return Err(schema("$.truncation", "only sset documents carry a truncation"));
            }
            let body = parse_complex(body, kind == "oriented_complex")?;
            if kind == "complex" {
                Object::Complex(body)
            } else {
                Object::OrientedComplex(body)
            }
        }
        "category" => {
            if top.contains_key("truncation") {
                return Err(schema("$.truncation", "only sset documents carry a truncation"));
            }
            Object::Category(parse_category(body)?)
        }
        other => return Err(schema("$.kind", format!("unknown kind {other:?}"))),
    };
    Ok(ObjectDocument { name, object })
}

pub fn serialize_document(doc: &ObjectDocument) -> String {
    let mut top = Map::new();
    top.insert("kind".into(), json!(doc.object.kind()));
    top.insert("name".into(), json!(doc.name));
    let body = match &doc.object {
        Object::SSet(k) => {
            top.insert("truncation".into(), json!(k.truncation_num()));
            sset_body(k)
        }
        Object::Complex(c) | Object::OrientedComplex(c) => complex_body(c),
        Object::Category(c) => category_body(c),
    };
    top.insert("body".into(), body);
    let mut out = serde_json::to_string_pretty(&Value::Object(top)).expect("values serialize");
    out.push('\n');
    out
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, DocumentError> {
    obj.get(key).ok_or_else(|| schema(path, format!("missing field {key:?}")))
}

fn known_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), DocumentError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(path, format!("unexpected field {k:?}"))),
        None => Ok(()),
    }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, DocumentError> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, DocumentError> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str, DocumentError> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn as_int(v: &Value, path: &str) -> Result<i64, DocumentError> {
    v.as_i64().ok_or_else(|| schema(path, "expected an integer"))
}

fn as_index(v: &Value, path: &str) -> Result<usize, DocumentError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

fn as_labels(v: &Value, path: &str) -> Result<Vec<String>, DocumentError> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_str(x, &format!("{path}[{i}]")).map(str::to_string))
        .collect()
}

fn parse_sset(body: &Map<String, Value>, truncation: Option<usize>) -> Result<FiniteSSet, DocumentError> {
    known_keys(body, "$.body", &["simplices"])?;
    let levels_json = as_array(field(body, "$.body", "simplices")?, "$.body.simplices")?;
    let mut levels: Vec<Vec<Simplex>> = Vec::with_capacity(levels_json.len());
    for (dim, level) in levels_json.iter().enumerate() {
        let lpath = format!("$.body.simplices[{dim}]");
        let mut out = Vec::new();
        for (index, s) in as_array(level, &lpath)?.iter().enumerate() {
            let spath = format!("{lpath}[{index}]");
            let s = as_object(s, &spath)?;
            known_keys(s, &spath, &["faces", "label"])?;
            let label = match s.get("label") {
                None | Some(Value::Null) => None,
                Some(v) => Some(as_str(v, &format!("{spath}.label"))?.to_string()),
            };
            let faces_json = match s.get("faces") {
                None => &Vec::new(),
                Some(v) => as_array(v, &format!("{spath}.faces"))?,
            };
            let expected = if dim == 0 { 0 } else { dim + 1 };
            if faces_json.len() != expected {
                return Err(schema(&spath, format!("a {dim}-simplex needs {expected} faces")));
            }
            let mut faces = Vec::with_capacity(expected);
            for (i, f) in faces_json.iter().enumerate() {
                let fpath = format!("{spath}.faces[{i}]");
                let pair = as_array(f, &fpath)?;
                if pair.len() != 2 {
                    return Err(schema(&fpath, "a face is [word, index]"));
                }
                let word: Vec<usize> = as_array(&pair[0], &format!("{fpath}[0]"))?
                    .iter()
                    .enumerate()
                    .map(|(j, x)| as_index(x, &format!("{fpath}[0][{j}]")))
                    .collect::<Result<_, _>>()?;
                let target = as_index(&pair[1], &format!("{fpath}[1]"))?;
                let base = (dim - 1)
                    .checked_sub(word.len())
                    .ok_or_else(|| schema(&fpath, "degeneracy word longer than the face dimension"))?;
                let word = DegeneracyWord::new(word, base).map_err(|e| schema(&fpath, e.to_string()))?;
                let count = levels.get(base).map_or(0, Vec::len);
                if target >= count {
                    return Err(dangling(&fpath, format!("no simplex {target} in dimension {base}")));
                }
                faces.push(SimplexRef::new(word, SimplexKey::new(base, target)));
            }
            out.push(Simplex::new(label, faces));
        }
        levels.push(out);
    }
    FiniteSSet::from_levels(truncation, levels).map_err(|e| schema("$.body.simplices", e.to_string()))
}

fn sset_body(k: &FiniteSSet) -> Value {
    let levels: Vec<Value> = k
        .levels()
        .iter()
        .enumerate()
        .map(|(dim, level)| {
            Value::Array(
                level
                    .iter()
                    .map(|s| {
                        let mut m = Map::new();
                        if dim > 0 {
                            let faces = s.faces.iter().map(|f| json!([f.word.indices(), f.key.index])).collect();
                            m.insert("faces".into(), Value::Array(faces));
                        }
                        if let Some(l) = &s.label {
                            m.insert("label".into(), json!(l));
                        }
                        Value::Object(m)
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "simplices": levels })
}

fn parse_complex(body: &Map<String, Value>, oriented: bool) -> Result<ComplexBody, DocumentError> {
    let allowed: &[&str] = if oriented { &["order", "simplices", "vertices"] } else { &["simplices", "vertices"] };
    known_keys(body, "$.body", allowed)?;
    let vertices = as_labels(field(body, "$.body", "vertices")?, "$.body.vertices")?;
    let known = |l: &str, path: &str| {
        if vertices.iter().any(|v| v == l) {
            Ok(())
        } else {
            Err(dangling(path, format!("unknown vertex {l:?}")))
        }
    };
    let mut simplices = Vec::new();
    for (i, s) in as_array(field(body, "$.body", "simplices")?, "$.body.simplices")?.iter().enumerate() {
        let path = format!("$.body.simplices[{i}]");
        let labels = as_labels(s, &path)?;
        for (j, l) in labels.iter().enumerate() {
            known(l, &format!("{path}[{j}]"))?;
        }
        simplices.push(labels);
    }
    let order = match body.get("order") {
        None => None,
        Some(v) => {
            let mut pairs = Vec::new();
            for (i, p) in as_array(v, "$.body.order")?.iter().enumerate() {
                let path = format!("$.body.order[{i}]");
                let pair = as_labels(p, &path)?;
                if pair.len() != 2 {
                    return Err(schema(&path, "an order relation is [smaller, larger]"));
                }
                known(&pair[0], &format!("{path}[0]"))?;
                known(&pair[1], &format!("{path}[1]"))?;
                pairs.push((pair[0].clone(), pair[1].clone()));
            }
            Some(pairs)
        }
    };
    Ok(ComplexBody {
        vertices,
        simplices,
        order,
    })
}

fn complex_body(c: &ComplexBody) -> Value {
    let mut m = Map::new();
    m.insert("vertices".into(), json!(c.vertices));
    m.insert("simplices".into(), json!(c.simplices));
    if let Some(order) = &c.order {
        let pairs: Vec<Value> = order.iter().map(|(a, b)| json!([a, b])).collect();
        m.insert("order".into(), Value::Array(pairs));
    }
    Value::Object(m)
}

fn parse_category(body: &Map<String, Value>) -> Result<FinCategory, DocumentError> {
    known_keys(body, "$.body", &["compositions", "identities", "morphisms", "objects"])?;
    let objects = as_labels(field(body, "$.body", "objects")?, "$.body.objects")?;
    let object_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let mut morphisms = Vec::new();
    for (i, m) in as_array(field(body, "$.body", "morphisms")?, "$.body.morphisms")?.iter().enumerate() {
        let path = format!("$.body.morphisms[{i}]");
        let m = as_object(m, &path)?;
        known_keys(m, &path, &["dst", "name", "src"])?;
        let end = |key: &str| -> Result<usize, DocumentError> {
            let p = format!("{path}.{key}");
            let label = as_str(field(m, &path, key)?, &p)?;
            object_index
                .get(label)
                .copied()
                .ok_or_else(|| dangling(&p, format!("unknown object {label:?}")))
        };
        morphisms.push(Morphism {
            name: as_str(field(m, &path, "name")?, &format!("{path}.name"))?.to_string(),
            src: end("src")?,
            dst: end("dst")?,
        });
    }
    let identities = match body.get("identities") {
        None => None,
        Some(v) => {
            let names = as_labels(v, "$.body.identities")?;
            Some(names)
        }
    };
    // implied identities are appended after the listed morphisms
    let mut names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
    if identities.is_none() {
        names.extend(objects.iter().map(|o| format!("id_{o}")));
    }
    let mut morphism_index: HashMap<&str, usize> = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if morphism_index.insert(n.as_str(), i).is_some() {
            return Err(schema("$.body.morphisms", format!("duplicate morphism name {n:?}")));
        }
    }
    let lookup = |name: &str, path: &str| {
        morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| dangling(path, format!("unknown morphism {name:?}")))
    };
    let identities = match identities {
        None => None,
        Some(list) => Some(
            list.iter()
                .enumerate()
                .map(|(i, n)| lookup(n, &format!("$.body.identities[{i}]")))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let mut compositions = Vec::new();
    if let Some(v) = body.get("compositions") {
        for (i, c) in as_array(v, "$.body.compositions")?.iter().enumerate() {
            let path = format!("$.body.compositions[{i}]");
            let triple = as_labels(c, &path)?;
            if triple.len() != 3 {
                return Err(schema(&path, "a composition is [f, g, g∘f]"));
            }
            let ids: Vec<usize> = triple
                .iter()
                .enumerate()
                .map(|(j, n)| lookup(n, &format!("{path}[{j}]")))
                .collect::<Result<_, _>>()?;
            compositions.push((ids[0], ids[1], ids[2]));
        }
    }
    FinCategory::new(objects.clone(), morphisms, identities, &compositions).map_err(|e| match e {
        CategoryError::UnknownObject(_) | CategoryError::UnknownMorphism(_) => dangling("$.body", e.to_string()),
        _ => schema("$.body", e.to_string()),
    })
}

fn category_body(c: &FinCategory) -> Value {
    let name = |m: usize| c.morphisms()[m].name.clone();
    let objects = c.objects();
    let morphisms: Vec<Value> = c
        .morphisms()
        .iter()
        .map(|m| json!({"dst": objects[m.dst], "name": m.name, "src": objects[m.src]}))
        .collect();
    // unit composites that hold are implied and left out
    let compositions: Vec<Value> = c
        .compositions()
        .into_iter()
        .filter(|&(f, g, gf)| !((c.is_identity(f) && gf == g) || (c.is_identity(g) && gf == f)))
        .map(|(f, g, gf)| json!([name(f), name(g), name(gf)]))
        .collect();
    let identities: Vec<String> = c.identities().iter().map(|&m| name(m)).collect();
    json!({
        "compositions": compositions,
        "identities": identities,
        "morphisms": morphisms,
        "objects": objects,
    })
}

/// A face-closed set of nondegenerate simplices, written
/// `{"members": [[dim, index], ...]}`.
pub fn parse_subset(text: &str) -> Result<Vec<SimplexKey>, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = as_object(&value, "$")?;
    known_keys(top, "$", &["members"])?;
    as_array(field(top, "$", "members")?, "$.members")?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = format!("$.members[{i}]");
            let pair = as_array(p, &path)?;
            if pair.len() != 2 {
                return Err(schema(&path, "a member is [dim, index]"));
            }
            Ok(SimplexKey::new(
                as_index(&pair[0], &format!("{path}[0]"))?,
                as_index(&pair[1], &format!("{path}[1]"))?,
            ))
        })
        .collect()
}

pub fn serialize_subset(keys: &[SimplexKey]) -> String {
    let members: Vec<Value> = keys.iter().map(|k| json!([k.dim, k.index])).collect();
    let mut out = serde_json::to_string_pretty(&json!({ "members": members })).expect("values serialize");
    out.push('\n');
    out
}
