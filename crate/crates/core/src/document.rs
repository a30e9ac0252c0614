//! JSON documents.
//!
//! Every document is an object with a `kind`, a `backend` tag, optional free-form
//! `metadata` and the fields of its kind. Objects are explicit label arrays and
//! morphisms are backend payloads between them. Parse errors are
//! [`Error::Schema`] messages that start with the path of the offending field.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{Map, Value};

use crate::comod::{Comodule, Comonoid};
use crate::constructors::{Bialgebra, Component, FinCat, HopfGroupCoalgebraData};
use crate::context::{Backend, BackendTag, FdVect, FinSet, Label, Morphism, Object, Opposite};
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, ExactMatrix, Rational};
use crate::qcat::{QuantumFunctor, QuantumNatTransformation};
use crate::quantum::{composable_pairs, QuantumCategory, QuantumGraph};

pub const KINDS: [&str; 9] = [
    "comonoid",
    "comodule",
    "quantum-graph",
    "quantum-category",
    "functor",
    "natural",
    "fincat",
    "bialgebra",
    "hopf-group-coalgebra",
];

/// A quantum category as written: the graph, the basis of `H`, `ν₂` and `ν₀`.
/// The basis of `H` is recomputed by [`CategoryData::build`] and must match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryData<B: Backend> {
    pub name: Option<String>,
    pub graph: QuantumGraph<B>,
    pub pairs: Object,
    pub nu2: Morphism<B>,
    pub nu0: Morphism<B>,
}

impl<B: Backend> CategoryData<B> {
    pub fn from_category(name: Option<String>, q: &QuantumCategory<B>) -> Self {
        CategoryData {
            name,
            graph: q.graph().clone(),
            pairs: q.h().carrier().clone(),
            nu2: q.nu2().clone(),
            nu0: q.nu0().clone(),
        }
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    /// Validates the graph, recomputes `H` and compares its basis with the written one.
    pub fn build(&self) -> Result<QuantumCategory<B>> {
        self.graph.validate()?;
        let pairs = composable_pairs(&self.graph)?;
        let computed = pairs.h().carrier();
        if computed.labels() != self.pairs.labels() {
            return Err(Error::Schema(format!(
                "pairs: the written basis {:?} differs from the computed basis {:?}",
                self.pairs, computed
            )));
        }
        let relabel = |m: &Morphism<B>| Morphism::new(computed.clone(), m.target().clone(), m.payload().clone());
        QuantumCategory::from_pairs(self.graph.clone(), pairs.clone(), relabel(&self.nu2)?, self.nu0.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData<B: Backend> {
    pub name: Option<String>,
    pub source: CategoryData<B>,
    pub target: CategoryData<B>,
    pub f: Morphism<B>,
    pub phi: Morphism<B>,
}

impl<B: Backend> FunctorData<B> {
    pub fn from_functor(
        name: Option<String>,
        source: Option<String>,
        target: Option<String>,
        functor: &QuantumFunctor<B>,
    ) -> Self {
        FunctorData {
            name,
            source: CategoryData::from_category(source, &functor.source),
            target: CategoryData::from_category(target, &functor.target),
            f: functor.f.clone(),
            phi: functor.phi.clone(),
        }
    }

    pub fn build(&self) -> Result<QuantumFunctor<B>> {
        Ok(QuantumFunctor {
            source: self.source.build()?,
            target: self.target.build()?,
            f: self.f.clone(),
            phi: self.phi.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalData<B: Backend> {
    pub name: Option<String>,
    pub source: FunctorData<B>,
    pub target: FunctorData<B>,
    pub tau: Morphism<B>,
}

impl<B: Backend> NaturalData<B> {
    pub fn build(&self) -> Result<QuantumNatTransformation<B>> {
        Ok(QuantumNatTransformation {
            source: self.source.build()?,
            target: self.target.build()?,
            tau: self.tau.clone(),
        })
    }
}

/// The kinds that live in a particular backend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backed<B: Backend> {
    Comonoid(Comonoid<B>),
    Comodule(Comodule<B>),
    Graph(QuantumGraph<B>),
    Category(CategoryData<B>),
    Functor(FunctorData<B>),
    Natural(NaturalData<B>),
}

impl<B: Backend> Backed<B> {
    pub fn kind(&self) -> &'static str {
        match self {
            Backed::Comonoid(_) => "comonoid",
            Backed::Comodule(_) => "comodule",
            Backed::Graph(_) => "quantum-graph",
            Backed::Category(_) => "quantum-category",
            Backed::Functor(_) => "functor",
            Backed::Natural(_) => "natural",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    FinSet(Backed<FinSet>),
    FdVect(Backed<FdVect>),
    OpFinSet(Backed<Opposite<FinSet>>),
    OpFdVect(Backed<Opposite<FdVect>>),
    /// A finite category; the backend is where `from-cat` builds its quantum category.
    FinCat {
        backend: BackendTag,
        category: FinCat,
    },
    /// Matrices in the basis of the carrier; always tagged `fdvect`.
    Bialgebra(Bialgebra),
    HopfGroupCoalgebra(HopfGroupCoalgebraData),
}

/// Backends with a [`Body`] variant.
pub trait Documented: Backend {
    fn wrap(backed: Backed<Self>) -> Body;

    fn unwrap(body: &Body) -> Option<&Backed<Self>>;
}

macro_rules! documented {
    ($backend:ty, $variant:ident) => {
        impl Documented for $backend {
            fn wrap(backed: Backed<Self>) -> Body {
                Body::$variant(backed)
            }

            fn unwrap(body: &Body) -> Option<&Backed<Self>> {
                match body {
                    Body::$variant(b) => Some(b),
                    _ => None,
                }
            }
        }
    };
}

documented!(FinSet, FinSet);
documented!(FdVect, FdVect);
documented!(Opposite<FinSet>, OpFinSet);
documented!(Opposite<FdVect>, OpFdVect);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub metadata: Map<String, Value>,
    pub body: Body,
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document { metadata: Map::new(), body }
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            Body::FinSet(b) => b.kind(),
            Body::FdVect(b) => b.kind(),
            Body::OpFinSet(b) => b.kind(),
            Body::OpFdVect(b) => b.kind(),
            Body::FinCat { .. } => "fincat",
            Body::Bialgebra(_) => "bialgebra",
            Body::HopfGroupCoalgebra(_) => "hopf-group-coalgebra",
        }
    }

    pub fn backend(&self) -> BackendTag {
        match &self.body {
            Body::FinSet(_) => FinSet::tag(),
            Body::FdVect(_) | Body::Bialgebra(_) | Body::HopfGroupCoalgebra(_) => FdVect::tag(),
            Body::OpFinSet(_) => Opposite::<FinSet>::tag(),
            Body::OpFdVect(_) => Opposite::<FdVect>::tag(),
            Body::FinCat { backend, .. } => backend.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("kind".into(), self.kind().into());
        out.insert("backend".into(), self.backend().to_string().into());
        if !self.metadata.is_empty() {
            out.insert("metadata".into(), Value::Object(self.metadata.clone()));
        }
        let fields = match &self.body {
            Body::FinSet(b) => write_backed(b),
            Body::FdVect(b) => write_backed(b),
            Body::OpFinSet(b) => write_backed(b),
            Body::OpFdVect(b) => write_backed(b),
            Body::FinCat { category, .. } => write_fincat(category),
            Body::Bialgebra(b) => write_bialgebra(b),
            Body::HopfGroupCoalgebra(h) => write_hopf(h),
        };
        out.extend(fields);
        Value::Object(out)
    }

    /// Indented JSON with arrays of scalars kept on one line, plus a trailing newline.
    pub fn to_string_pretty(&self) -> String {
        let mut out = String::new();
        pretty(&self.to_json(), 0, &mut out);
        out.push('\n');
        out
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let root = as_map(value, "document")?;
        let kind = string(field(root, "", "kind")?, "kind")?;
        if !KINDS.contains(&kind) {
            return Err(schema("kind", format!("unknown kind '{kind}', expected one of {}", KINDS.join(", "))));
        }
        let tag_text = string(field(root, "", "backend")?, "backend")?;
        let tag =
            BackendTag::parse(tag_text).ok_or_else(|| schema("backend", format!("unknown backend '{tag_text}'")))?;
        let metadata = match root.get("metadata") {
            None => Map::new(),
            Some(v) => as_map(v, "metadata")?.clone(),
        };
        let body = match kind {
            "fincat" => {
                if !matches!(tag, BackendTag::FinSet | BackendTag::FdVect) {
                    return Err(schema("backend", "a fincat document targets finset or fdvect"));
                }
                allow(root, "", &["objects", "morphisms", "dom", "cod", "ids", "comp"])?;
                Body::FinCat { backend: tag, category: read_fincat(root)? }
            }
            "bialgebra" => {
                require_fdvect(&tag)?;
                allow(root, "", &["carrier", "multiplication", "unit", "comultiplication", "counit"])?;
                Body::Bialgebra(read_bialgebra(root)?)
            }
            "hopf-group-coalgebra" => {
                require_fdvect(&tag)?;
                allow(root, "", &["elements", "table", "components", "coproducts", "counit"])?;
                Body::HopfGroupCoalgebra(read_hopf(root)?)
            }
            _ => match &tag {
                BackendTag::FinSet => Body::FinSet(read_backed(kind, root)?),
                BackendTag::FdVect => Body::FdVect(read_backed(kind, root)?),
                BackendTag::Opposite(inner) => match **inner {
                    BackendTag::FinSet => Body::OpFinSet(read_backed(kind, root)?),
                    BackendTag::FdVect => Body::OpFdVect(read_backed(kind, root)?),
                    _ => return Err(schema("backend", format!("unsupported backend '{tag}'"))),
                },
            },
        };
        Ok(Document { metadata, body })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Schema(format!("document: invalid JSON: {e}")))?;
        Self::from_json(&value)
    }
}

fn pretty(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    let scalar = |x: &Value| !matches!(x, Value::Array(_) | Value::Object(_));
    match v {
        Value::Array(items) if items.iter().all(scalar) => {
            let inline: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", inline.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                pretty(item, depth + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(depth + 1), Value::String(key.clone())));
                pretty(item, depth + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn require_fdvect(tag: &BackendTag) -> Result<()> {
    if *tag != BackendTag::FdVect {
        return Err(schema("backend", "this kind is written with fdvect matrices"));
    }
    Ok(())
}

fn schema(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Schema(format!("{path}: {msg}"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

/// Prefixes an error with the field it came from.
fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Schema(msg) if msg.starts_with(path) && !path.is_empty() => Error::Schema(msg),
        Error::Schema(msg) => schema(path, msg),
        other => schema(path, other),
    }
}

fn as_map<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn field<'a>(m: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| schema(&join(path, key), "missing field"))
}

fn allow(m: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<()> {
    const COMMON: [&str; 3] = ["kind", "backend", "metadata"];
    match m.keys().find(|k| !keys.contains(&k.as_str()) && !(path.is_empty() && COMMON.contains(&k.as_str()))) {
        Some(k) => Err(schema(&join(path, k), "unknown field")),
        None => Ok(()),
    }
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn strings(v: &Value, path: &str) -> Result<Vec<String>> {
    let items = v.as_array().ok_or_else(|| schema(path, "expected an array of strings"))?;
    items.iter().enumerate().map(|(k, x)| string(x, &format!("{path}[{k}]")).map(str::to_string)).collect()
}

fn optional_name(m: &Map<String, Value>, path: &str) -> Result<Option<String>> {
    m.get("name").map(|v| string(v, &join(path, "name")).map(str::to_string)).transpose()
}

fn write_name(out: &mut Map<String, Value>, name: &Option<String>) {
    if let Some(name) = name {
        out.insert("name".into(), name.clone().into());
    }
}

fn read_object(m: &Map<String, Value>, path: &str, key: &str) -> Result<Object> {
    let path = join(path, key);
    let value = m.get(key).ok_or_else(|| schema(&path, "missing field"))?;
    let labels = strings(value, &path)?;
    Object::new(labels.iter().map(|s| Label::parse(s)).collect()).map_err(|e| at(&path, e))
}

fn write_object(x: &Object) -> Value {
    Value::Array(x.labels().iter().map(|l| Value::String(l.to_string())).collect())
}

fn read_morphism<B: Backend>(
    m: &Map<String, Value>,
    path: &str,
    key: &str,
    source: &Object,
    target: &Object,
) -> Result<Morphism<B>> {
    let path = join(path, key);
    let value = m.get(key).ok_or_else(|| schema(&path, "missing field"))?;
    let payload = B::payload_from_json(value, source, target).map_err(|e| at(&path, e))?;
    Morphism::new(source.clone(), target.clone(), payload).map_err(|e| at(&path, e))
}

fn write_morphism<B: Backend>(f: &Morphism<B>) -> Value {
    B::payload_to_json(f.payload(), f.source(), f.target())
}

fn sub<'a>(m: &'a Map<String, Value>, path: &str, key: &str) -> Result<(&'a Map<String, Value>, String)> {
    let path = join(path, key);
    let v = m.get(key).ok_or_else(|| schema(&path, "missing field"))?;
    Ok((as_map(v, &path)?, path))
}

fn read_comonoid<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<Comonoid<B>> {
    allow(m, path, &["carrier", "delta", "epsilon"])?;
    let carrier = read_object(m, path, "carrier")?;
    let delta = read_morphism(m, path, "delta", &carrier, &carrier.tensor(&carrier))?;
    let epsilon = read_morphism(m, path, "epsilon", &carrier, &Object::unit())?;
    Ok(Comonoid::new_unchecked(delta, epsilon))
}

fn write_comonoid<B: Backend>(c: &Comonoid<B>) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("carrier".into(), write_object(c.carrier()));
    out.insert("delta".into(), write_morphism(c.delta()));
    out.insert("epsilon".into(), write_morphism(c.epsilon()));
    out
}

fn read_comodule<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<Comodule<B>> {
    allow(m, path, &["left", "right", "carrier", "coaction"])?;
    let (l, lp) = sub(m, path, "left")?;
    let (r, rp) = sub(m, path, "right")?;
    let (left, right) = (read_comonoid::<B>(l, &lp)?, read_comonoid::<B>(r, &rp)?);
    let carrier = read_object(m, path, "carrier")?;
    let target = Object::tensor_all(&[left.carrier(), &carrier, right.carrier()]);
    let coaction = read_morphism(m, path, "coaction", &carrier, &target)?;
    Ok(Comodule::new_unchecked(left, right, coaction))
}

fn write_comodule<B: Backend>(c: &Comodule<B>) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("left".into(), Value::Object(write_comonoid(c.left())));
    out.insert("right".into(), Value::Object(write_comonoid(c.right())));
    out.insert("carrier".into(), write_object(c.carrier()));
    out.insert("coaction".into(), write_morphism(c.coaction()));
    out
}

const GRAPH_FIELDS: [&str; 4] = ["objects", "arrows", "source", "target"];

fn read_graph<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<QuantumGraph<B>> {
    let (o, op) = sub(m, path, "objects")?;
    let (a, ap) = sub(m, path, "arrows")?;
    let (c, a) = (read_comonoid::<B>(o, &op)?, read_comonoid::<B>(a, &ap)?);
    let s = read_morphism(m, path, "source", a.carrier(), c.carrier())?;
    let t = read_morphism(m, path, "target", a.carrier(), c.carrier())?;
    Ok(QuantumGraph::new_unchecked(c, a, s, t))
}

fn write_graph<B: Backend>(g: &QuantumGraph<B>) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("objects".into(), Value::Object(write_comonoid(g.c())));
    out.insert("arrows".into(), Value::Object(write_comonoid(g.a())));
    out.insert("source".into(), write_morphism(g.s()));
    out.insert("target".into(), write_morphism(g.t()));
    out
}

fn read_category<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<CategoryData<B>> {
    let mut keys = GRAPH_FIELDS.to_vec();
    keys.extend(["name", "pairs", "composition", "unit"]);
    allow(m, path, &keys)?;
    let graph = read_graph::<B>(m, path)?;
    let pairs = read_object(m, path, "pairs")?;
    let nu2 = read_morphism(m, path, "composition", &pairs, graph.a().carrier())?;
    let nu0 = read_morphism(m, path, "unit", graph.c().carrier(), graph.a().carrier())?;
    Ok(CategoryData { name: optional_name(m, path)?, graph, pairs, nu2, nu0 })
}

fn write_category<B: Backend>(q: &CategoryData<B>) -> Map<String, Value> {
    let mut out = Map::new();
    write_name(&mut out, &q.name);
    out.extend(write_graph(&q.graph));
    out.insert("pairs".into(), write_object(&q.pairs));
    out.insert("composition".into(), write_morphism(&q.nu2));
    out.insert("unit".into(), write_morphism(&q.nu0));
    out
}

fn read_functor<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<FunctorData<B>> {
    allow(m, path, &["name", "source", "target", "objects", "arrows"])?;
    let (s, sp) = sub(m, path, "source")?;
    let (t, tp) = sub(m, path, "target")?;
    let (source, target) = (read_category::<B>(s, &sp)?, read_category::<B>(t, &tp)?);
    let f = read_morphism(m, path, "objects", source.graph.c().carrier(), target.graph.c().carrier())?;
    let phi = read_morphism(m, path, "arrows", source.graph.a().carrier(), target.graph.a().carrier())?;
    Ok(FunctorData { name: optional_name(m, path)?, source, target, f, phi })
}

fn write_functor<B: Backend>(f: &FunctorData<B>) -> Map<String, Value> {
    let mut out = Map::new();
    write_name(&mut out, &f.name);
    out.insert("source".into(), Value::Object(write_category(&f.source)));
    out.insert("target".into(), Value::Object(write_category(&f.target)));
    out.insert("objects".into(), write_morphism(&f.f));
    out.insert("arrows".into(), write_morphism(&f.phi));
    out
}

fn read_natural<B: Backend>(m: &Map<String, Value>, path: &str) -> Result<NaturalData<B>> {
    allow(m, path, &["name", "source", "target", "component"])?;
    let (s, sp) = sub(m, path, "source")?;
    let (t, tp) = sub(m, path, "target")?;
    let (source, target) = (read_functor::<B>(s, &sp)?, read_functor::<B>(t, &tp)?);
    let tau =
        read_morphism(m, path, "component", source.source.graph.a().carrier(), source.target.graph.a().carrier())?;
    Ok(NaturalData { name: optional_name(m, path)?, source, target, tau })
}

fn write_natural<B: Backend>(n: &NaturalData<B>) -> Map<String, Value> {
    let mut out = Map::new();
    write_name(&mut out, &n.name);
    out.insert("source".into(), Value::Object(write_functor(&n.source)));
    out.insert("target".into(), Value::Object(write_functor(&n.target)));
    out.insert("component".into(), write_morphism(&n.tau));
    out
}

fn read_backed<B: Backend>(kind: &str, root: &Map<String, Value>) -> Result<Backed<B>> {
    Ok(match kind {
        "comonoid" => Backed::Comonoid(read_comonoid(root, "")?),
        "comodule" => Backed::Comodule(read_comodule(root, "")?),
        "quantum-graph" => {
            allow(root, "", &GRAPH_FIELDS)?;
            Backed::Graph(read_graph(root, "")?)
        }
        "quantum-category" => Backed::Category(read_category(root, "")?),
        "functor" => Backed::Functor(read_functor(root, "")?),
        "natural" => Backed::Natural(read_natural(root, "")?),
        other => unreachable!("kind {other} has no backend payload"),
    })
}

fn write_backed<B: Backend>(b: &Backed<B>) -> Map<String, Value> {
    match b {
        Backed::Comonoid(c) => write_comonoid(c),
        Backed::Comodule(c) => write_comodule(c),
        Backed::Graph(g) => write_graph(g),
        Backed::Category(q) => write_category(q),
        Backed::Functor(f) => write_functor(f),
        Backed::Natural(n) => write_natural(n),
    }
}

fn index_of(names: &[String], name: &str, path: &str, what: &str) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| schema(path, format!("unknown {what} '{name}'")))
}

fn distinct(names: &[String], path: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    match names.iter().find(|n| !seen.insert(n.as_str())) {
        Some(n) => Err(schema(path, format!("duplicate name '{n}'"))),
        None => Ok(()),
    }
}

fn read_names(m: &Map<String, Value>, key: &str, names: &[String], what: &str) -> Result<Vec<usize>> {
    let items = strings(field(m, "", key)?, key)?;
    items.iter().enumerate().map(|(k, n)| index_of(names, n, &format!("{key}[{k}]"), what)).collect()
}

/// The category is not validated here; see [`FinCat::validate`].
fn read_fincat(m: &Map<String, Value>) -> Result<FinCat> {
    let objects = strings(field(m, "", "objects")?, "objects")?;
    let morphisms = strings(field(m, "", "morphisms")?, "morphisms")?;
    distinct(&objects, "objects")?;
    distinct(&morphisms, "morphisms")?;
    let dom = read_names(m, "dom", &objects, "object")?;
    let cod = read_names(m, "cod", &objects, "object")?;
    let ids = read_names(m, "ids", &morphisms, "morphism")?;
    let rows = field(m, "", "comp")?
        .as_array()
        .ok_or_else(|| schema("comp", "expected an array of [f, g, f then g] triples"))?;
    let mut comp = BTreeMap::new();
    for (k, row) in rows.iter().enumerate() {
        let path = format!("comp[{k}]");
        let triple = strings(row, &path)?;
        let [f, g, h] = triple.as_slice() else {
            return Err(schema(&path, "expected three morphism names"));
        };
        let (f, g, h) = (
            index_of(&morphisms, f, &path, "morphism")?,
            index_of(&morphisms, g, &path, "morphism")?,
            index_of(&morphisms, h, &path, "morphism")?,
        );
        if comp.insert((f, g), h).is_some() {
            return Err(schema(&path, "composite given twice"));
        }
    }
    Ok(FinCat { objects, morphisms, dom, cod, ids, comp })
}

fn write_fincat(c: &FinCat) -> Map<String, Value> {
    let names =
        |list: &[String], idx: &[usize]| Value::Array(idx.iter().map(|&i| Value::String(list[i].clone())).collect());
    let mut out = Map::new();
    out.insert("objects".into(), c.objects.clone().into());
    out.insert("morphisms".into(), c.morphisms.clone().into());
    out.insert("dom".into(), names(&c.objects, &c.dom));
    out.insert("cod".into(), names(&c.objects, &c.cod));
    out.insert("ids".into(), names(&c.morphisms, &c.ids));
    let comp = c.comp.iter().map(|(&(f, g), &h)| names(&c.morphisms, &[f, g, h])).collect();
    out.insert("comp".into(), Value::Array(comp));
    out
}

/// A rectangular matrix of rational literals of any shape. `cols` is used for an empty row list.
fn read_matrix(v: &Value, path: &str, cols: usize) -> Result<ExactMatrix> {
    let rows = v.as_array().ok_or_else(|| schema(path, "expected an array of rows"))?;
    let mut parsed: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let row_path = format!("{path}[{r}]");
        let entries = row.as_array().ok_or_else(|| schema(&row_path, "expected an array of rational literals"))?;
        let values = entries
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let entry_path = format!("{row_path}[{c}]");
                match x {
                    Value::String(s) => parse_rational(s).map_err(|e| schema(&entry_path, e)),
                    Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or_default().into())),
                    _ => Err(schema(&entry_path, "expected a rational literal such as \"3/2\"")),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = parsed.first() {
            if first.len() != values.len() {
                return Err(schema(
                    &row_path,
                    format!("ragged matrix: row has {} entries, row 0 has {}", values.len(), first.len()),
                ));
            }
        }
        parsed.push(values);
    }
    let width = parsed.first().map_or(cols, Vec::len);
    ExactMatrix::from_rows(parsed, width).map_err(|e| schema(path, e))
}

fn read_sized(m: &Map<String, Value>, path: &str, key: &str, rows: usize, cols: usize) -> Result<ExactMatrix> {
    let path = join(path, key);
    let v = m.get(key).ok_or_else(|| schema(&path, "missing field"))?;
    let matrix = read_matrix(v, &path, cols)?;
    if (matrix.rows(), matrix.cols()) != (rows, cols) {
        return Err(schema(&path, format!("matrix is {}x{}, expected {rows}x{cols}", matrix.rows(), matrix.cols())));
    }
    Ok(matrix)
}

fn write_matrix(m: &ExactMatrix) -> Value {
    crate::context::matrix_to_json(m)
}

fn read_bialgebra(m: &Map<String, Value>) -> Result<Bialgebra> {
    let carrier = read_object(m, "", "carrier")?;
    let n = carrier.dim();
    Bialgebra::new(
        carrier,
        read_sized(m, "", "multiplication", n, n * n)?,
        read_sized(m, "", "unit", n, 1)?,
        read_sized(m, "", "comultiplication", n * n, n)?,
        read_sized(m, "", "counit", 1, n)?,
    )
}

fn write_bialgebra(b: &Bialgebra) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("carrier".into(), write_object(&b.carrier));
    out.insert("multiplication".into(), write_matrix(&b.mult));
    out.insert("unit".into(), write_matrix(&b.unit));
    out.insert("comultiplication".into(), write_matrix(&b.comult));
    out.insert("counit".into(), write_matrix(&b.counit));
    out
}

/// Shapes and laws are left to [`HopfGroupCoalgebraData::validate`].
fn read_hopf(m: &Map<String, Value>) -> Result<HopfGroupCoalgebraData> {
    let elements = strings(field(m, "", "elements")?, "elements")?;
    distinct(&elements, "elements")?;
    let rows = field(m, "", "table")?.as_array().ok_or_else(|| schema("table", "expected rows of element names"))?;
    let table = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let path = format!("table[{r}]");
            let names = strings(row, &path)?;
            names.iter().enumerate().map(|(c, n)| index_of(&elements, n, &format!("{path}[{c}]"), "element")).collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    let items = field(m, "", "components")?.as_array().ok_or_else(|| schema("components", "expected an array"))?;
    if items.len() != elements.len() {
        return Err(schema("components", format!("expected {} components, one per element", elements.len())));
    }
    let mut components = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let path = format!("components[{k}]");
        let c = as_map(item, &path)?;
        allow(c, &path, &["element", "carrier", "multiplication", "unit"])?;
        let element = string(field(c, &path, "element")?, &join(&path, "element"))?;
        if element != elements[k] {
            return Err(schema(&join(&path, "element"), format!("expected '{}' in element order", elements[k])));
        }
        let carrier = read_object(c, &path, "carrier")?;
        let d = carrier.dim();
        let mult = read_matrix(field(c, &path, "multiplication")?, &join(&path, "multiplication"), d * d)?;
        let unit = read_matrix(field(c, &path, "unit")?, &join(&path, "unit"), 1)?;
        components.push(Component { carrier, mult, unit });
    }
    let items = field(m, "", "coproducts")?.as_array().ok_or_else(|| schema("coproducts", "expected an array"))?;
    let mut coproducts = BTreeMap::new();
    for (k, item) in items.iter().enumerate() {
        let path = format!("coproducts[{k}]");
        let c = as_map(item, &path)?;
        allow(c, &path, &["left", "right", "matrix"])?;
        let g = index_of(&elements, string(field(c, &path, "left")?, &path)?, &join(&path, "left"), "element")?;
        let h = index_of(&elements, string(field(c, &path, "right")?, &path)?, &join(&path, "right"), "element")?;
        let cols = table.get(g).and_then(|row| row.get(h)).map_or(0, |&gh| components[gh].carrier.dim());
        let matrix = read_matrix(field(c, &path, "matrix")?, &join(&path, "matrix"), cols)?;
        if coproducts.insert((g, h), matrix).is_some() {
            return Err(schema(&path, "coproduct given twice"));
        }
    }
    let counit = read_matrix(field(m, "", "counit")?, "counit", 0)?;
    Ok(HopfGroupCoalgebraData { elements, table, components, coproducts, counit })
}

fn write_hopf(h: &HopfGroupCoalgebraData) -> Map<String, Value> {
    let name = |g: usize| Value::String(h.elements[g].clone());
    let mut out = Map::new();
    out.insert("elements".into(), h.elements.clone().into());
    out.insert(
        "table".into(),
        Value::Array(h.table.iter().map(|row| Value::Array(row.iter().map(|&x| name(x)).collect())).collect()),
    );
    let components = h
        .components
        .iter()
        .enumerate()
        .map(|(g, c)| {
            let mut m = Map::new();
            m.insert("element".into(), name(g));
            m.insert("carrier".into(), write_object(&c.carrier));
            m.insert("multiplication".into(), write_matrix(&c.mult));
            m.insert("unit".into(), write_matrix(&c.unit));
            Value::Object(m)
        })
        .collect();
    out.insert("components".into(), Value::Array(components));
    let coproducts = h
        .coproducts
        .iter()
        .map(|(&(g, k), matrix)| {
            let mut m = Map::new();
            m.insert("left".into(), name(g));
            m.insert("right".into(), name(k));
            m.insert("matrix".into(), write_matrix(matrix));
            Value::Object(m)
        })
        .collect();
    out.insert("coproducts".into(), Value::Array(coproducts));
    out.insert("counit".into(), write_matrix(&h.counit));
    out
}
