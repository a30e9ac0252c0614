use clap::ValueEnum;
use qcat_core::constructors::{from_bialgebra, from_hopf_group_coalgebra, from_small_category, linearize};
use qcat_core::context::{BackendTag, FdVect, FinSet, FromFunction, Opposite};
use qcat_core::document::{Backed, Body, CategoryData, Document, Documented};
use qcat_core::quantum::{check_axioms, tensor_quantum_categories, QuantumCategory};
use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Constructor {
    FromCat,
    FromBialgebra,
    FromHopfGc,
    Linearize,
    Tensor,
}

impl Constructor {
    fn name(self) -> &'static str {
        match self {
            Constructor::FromCat => "from-cat",
            Constructor::FromBialgebra => "from-bialgebra",
            Constructor::FromHopfGc => "from-hopf-gc",
            Constructor::Linearize => "linearize",
            Constructor::Tensor => "tensor",
        }
    }
}

/// Dimensions of `C`, `A` and `H` and the axiom verdict.
fn describe<B: Documented>(q: &QuantumCategory<B>, constructor: Constructor, name: Option<String>) -> Document {
    let mut metadata = Map::new();
    metadata.insert("constructor".into(), constructor.name().into());
    metadata.insert(
        "dimensions".into(),
        json!({
            "objects": q.c().carrier().dim(),
            "arrows": q.a().carrier().dim(),
            "pairs": q.h().carrier().dim(),
        }),
    );
    let verdict = check_axioms(q).first_failure().unwrap_or_else(|| "pass".into());
    metadata.insert("axioms".into(), verdict.into());
    Document { metadata, body: B::wrap(Backed::Category(CategoryData::from_category(name, q))) }
}

fn category<B: Documented>(doc: &Document, which: &str) -> Result<QuantumCategory<B>, CliError> {
    match B::unwrap(&doc.body) {
        Some(Backed::Category(data)) => Ok(data.build()?),
        _ => Err(CliError::Malformed(format!(
            "{which}: expected a quantum-category document over {}, got a {} over {}",
            B::tag(),
            doc.kind(),
            doc.backend()
        ))),
    }
}

fn from_cat<B: Documented + FromFunction>(
    cat: &qcat_core::constructors::FinCat,
    name: Option<String>,
) -> Result<Document, CliError> {
    let q = from_small_category::<B>(cat)?;
    Ok(describe(&q, Constructor::FromCat, name))
}

fn tensor<B: Documented>(docs: &[Document], name: Option<String>) -> Result<Document, CliError> {
    let first = category::<B>(&docs[0], "first input")?;
    let second = match docs.get(1) {
        Some(doc) => category::<B>(doc, "second input")?,
        None => first.clone(),
    };
    Ok(describe(&tensor_quantum_categories(&first, &second)?, Constructor::Tensor, name))
}

pub fn construct(constructor: Constructor, docs: &[Document], name: Option<String>) -> Result<Document, CliError> {
    let inputs = if constructor == Constructor::Tensor { 1..=2 } else { 1..=1 };
    if !inputs.contains(&docs.len()) {
        return Err(CliError::Malformed(format!(
            "{} takes {} input document(s) and an output path",
            constructor.name(),
            if constructor == Constructor::Tensor { "one or two" } else { "one" }
        )));
    }
    let doc = &docs[0];
    let wrong_kind = |expected: &str| {
        CliError::Malformed(format!("{}: expected a {expected} document, got a {}", constructor.name(), doc.kind()))
    };
    match constructor {
        Constructor::FromCat => {
            let Body::FinCat { backend, category } = &doc.body else {
                return Err(wrong_kind("fincat"));
            };
            category.validate()?;
            match backend {
                BackendTag::FdVect => from_cat::<FdVect>(category, name),
                _ => from_cat::<FinSet>(category, name),
            }
        }
        Constructor::FromBialgebra => {
            let Body::Bialgebra(b) = &doc.body else {
                return Err(wrong_kind("bialgebra"));
            };
            let verdict = from_bialgebra(b);
            let q = verdict.category.ok_or_else(|| {
                CliError::Failed(verdict.report.first_failure().unwrap_or_else(|| "not a quantum graph".into()))
            })?;
            Ok(describe(&q, constructor, name))
        }
        Constructor::FromHopfGc => {
            let Body::HopfGroupCoalgebra(h) = &doc.body else {
                return Err(wrong_kind("hopf-group-coalgebra"));
            };
            let out = from_hopf_group_coalgebra(h)?;
            let q = out.verdict.category.ok_or_else(|| {
                CliError::Failed(out.verdict.report.first_failure().unwrap_or_else(|| "not a quantum graph".into()))
            })?;
            let mut described = describe(&q, constructor, name);
            let group = Document::new(Body::FinCat { backend: BackendTag::FinSet, category: out.group }).to_json();
            let group: Map<String, Value> = group
                .as_object()
                .expect("documents are objects")
                .iter()
                .filter(|(k, _)| !matches!(k.as_str(), "kind" | "backend"))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            described.metadata.insert("group".into(), Value::Object(group));
            Ok(described)
        }
        Constructor::Linearize => {
            let q = category::<FinSet>(doc, "input")?;
            Ok(describe(&linearize(&q)?, constructor, name))
        }
        Constructor::Tensor => match &doc.body {
            Body::FinSet(_) => tensor::<FinSet>(docs, name),
            Body::FdVect(_) => tensor::<FdVect>(docs, name),
            Body::OpFinSet(_) => tensor::<Opposite<FinSet>>(docs, name),
            Body::OpFdVect(_) => tensor::<Opposite<FdVect>>(docs, name),
            _ => Err(wrong_kind("quantum-category")),
        },
    }
}

/// One line for stdout.
pub fn summary(doc: &Document) -> String {
    let dims = &doc.metadata["dimensions"];
    format!(
        "{} over {}: |C| = {}, |A| = {}, |H| = {}, axioms: {}",
        doc.kind(),
        doc.backend(),
        dims["objects"],
        dims["arrows"],
        dims["pairs"],
        doc.metadata["axioms"].as_str().unwrap_or_default()
    )
}
