use qcat_core::document::{Backed, Body, Document, Documented, FunctorData};
use qcat_core::qcat::compose_functors;

use crate::CliError;

fn functor<B: Documented>(doc: &Document, which: &str) -> Result<FunctorData<B>, CliError> {
    match B::unwrap(&doc.body) {
        Some(Backed::Functor(f)) => Ok(f.clone()),
        _ => Err(CliError::Malformed(format!(
            "{which}: expected a functor document over {}, got a {} over {}",
            B::tag(),
            doc.kind(),
            doc.backend()
        ))),
    }
}

fn compose_in<B: Documented>(first: &Document, second: &Document, name: Option<String>) -> Result<Document, CliError> {
    let (f, g) = (functor::<B>(first, "first")?, functor::<B>(second, "second")?);
    let (ff, gg) = (f.build()?, g.build()?);
    if ff.target != gg.source {
        return Err(CliError::Failed(format!(
            "cannot compose: the first functor ends at '{}' but the second starts at '{}'",
            f.target.display_name(),
            g.source.display_name()
        )));
    }
    let composite = compose_functors(&ff, &gg)?;
    let data = FunctorData { name, source: f.source, target: g.target, f: composite.f, phi: composite.phi };
    Ok(Document::new(B::wrap(Backed::Functor(data))))
}

/// `G ∘ F` as a document; the endpoints keep the names written in `F` and `G`.
pub fn compose(first: &Document, second: &Document, name: Option<String>) -> Result<Document, CliError> {
    match &first.body {
        Body::FinSet(_) => compose_in::<qcat_core::context::FinSet>(first, second, name),
        Body::FdVect(_) => compose_in::<qcat_core::context::FdVect>(first, second, name),
        Body::OpFinSet(_) => {
            compose_in::<qcat_core::context::Opposite<qcat_core::context::FinSet>>(first, second, name)
        }
        Body::OpFdVect(_) => {
            compose_in::<qcat_core::context::Opposite<qcat_core::context::FdVect>>(first, second, name)
        }
        _ => Err(CliError::Malformed(format!("first: expected a functor document, got a {}", first.kind()))),
    }
}
