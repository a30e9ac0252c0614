//! Maps into cofree comodules are determined by their corestrictions.
//!
//! Two situations are covered. For a right `D`-comodule `N` the comodule
//! `e ⊗ N : C ⊗ C° ⇸ D` has carrier `C ⊗ N` and is cofree on the left, so a
//! comodule map `β: M → C ⊗ N` is recovered from `α = (ε ⊗ 1)β`. For
//! `N: C° ⊗ C ⇸ D`, maps `β: M → n ⊗_{C°⊗C} N` are likewise recovered from
//! `α = (ε ⊗ 1)iβ`. In both cases `α` can be extended in two ways, one per
//! tensor factor of the base, and a valid `α` is one for which they agree.

use super::cotensor::{cotensor, Cotensor};
use super::monoidale::{bidual_counit, bidual_unit};
use super::{id, tensor_comodules, Comodule, ComoduleMap, Comonoid};
use crate::context::{Backend, Morphism};
use crate::error::{Error, Result};

/// The cofree comodule `e ⊗ N : C ⊗ C° ⇸ D` on a comodule `N: I ⇸ D`.
pub fn bidual_cofree_target<B: Backend>(c: &Comonoid<B>, n: &Comodule<B>) -> Result<Comodule<B>> {
    if !n.left().carrier().is_unit() {
        return Err(Error::EndpointMismatch("the cofree target needs a comodule out of the unit".into()));
    }
    Ok(tensor_comodules(&bidual_counit(c)?, n))
}

/// `α = (ε ⊗ 1)β` for a comodule map `β` into `e ⊗ N`.
pub fn corestrict<B: Backend>(c: &Comonoid<B>, n: &Comodule<B>, beta: &ComoduleMap<B>) -> Result<Morphism<B>> {
    beta.map().then(&c.epsilon().tensor(&id(n.carrier())))
}

/// The two reconstructions `(1 ⊗ α)(1 ⊗ ε ⊗ 1)δ_l` and `(1 ⊗ α)(ε ⊗ 1 ⊗ 1)δ_l`.
fn reconstructions<B: Backend>(
    c: &Comonoid<B>,
    delta_l: &Morphism<B>,
    alpha: &Morphism<B>,
) -> Result<(Morphism<B>, Morphism<B>)> {
    let one_c = id::<B>(c.carrier());
    let one_m = id::<B>(alpha.source());
    let first = delta_l.then(&Morphism::tensor_all(&[&one_c, c.epsilon(), &one_m]))?;
    let second = delta_l.then(&Morphism::tensor_all(&[c.epsilon(), &one_c, &one_m]))?;
    let lift = one_c.tensor(alpha);
    Ok((first.then(&lift)?, second.then(&lift)?))
}

fn agree<B: Backend>(clause: &str, a: &Morphism<B>, b: &Morphism<B>) -> Result<()> {
    match a.difference(b)? {
        None => Ok(()),
        Some(witness) => Err(Error::SideConditionFailed { clause: clause.into(), witness }),
    }
}

fn colinear<B: Backend>(source: &Comodule<B>, target: &Comodule<B>, map: Morphism<B>) -> Result<ComoduleMap<B>> {
    ComoduleMap::new(source.clone(), target.clone(), map).map_err(|e| match e {
        Error::LawViolation { witness, .. } => {
            Error::SideConditionFailed { clause: "the map is not colinear".into(), witness }
        }
        other => other,
    })
}

/// Extends `α: M → N` (with `M: C ⊗ C° ⇸ D`, `N: I ⇸ D`) to the comodule map
/// `β = (1 ⊗ α)δ_l : M → e ⊗ N`, after checking that both reconstructions agree.
pub fn extend<B: Backend>(
    c: &Comonoid<B>,
    m: &Comodule<B>,
    n: &Comodule<B>,
    alpha: &Morphism<B>,
) -> Result<ComoduleMap<B>> {
    let target = bidual_cofree_target(c, n)?;
    if m.left() != target.left() || m.right() != target.right() {
        return Err(Error::EndpointMismatch("the source must be a comodule C ⊗ C° ⇸ D".into()));
    }
    let (first, second) = reconstructions(c, &m.delta_l(), alpha)?;
    agree("the two cofree reconstructions differ", &first, &second)?;
    colinear(m, &target, first)
}

/// `α = (ε ⊗ 1)iβ` for a comodule map `β: M → n ⊗ N`.
pub fn corestrict_along_unit<B: Backend>(
    c: &Comonoid<B>,
    target: &Cotensor<B>,
    beta: &ComoduleMap<B>,
) -> Result<Morphism<B>> {
    let n = &target.factors.1;
    beta.map().then(&target.inclusion)?.then(&c.epsilon().tensor(&id(n.carrier())))
}

/// Extends `α: M → N` (with `M: I ⇸ D`, `N: C° ⊗ C ⇸ D`) to a comodule map
/// `M → n ⊗_{C°⊗C} N`. Returns the map and the cotensor it lands in.
pub fn extend_along_unit<B: Backend>(
    c: &Comonoid<B>,
    m: &Comodule<B>,
    n: &Comodule<B>,
    alpha: &Morphism<B>,
) -> Result<(ComoduleMap<B>, Cotensor<B>)> {
    let target = cotensor(&bidual_unit(c)?, n)?;
    let (first, second) = reconstructions(c, &alpha.then(&n.delta_l())?, &id(n.carrier()))?;
    agree("the two cofree reconstructions differ", &first, &second)?;
    let beta = target.factor(&first).map_err(|e| match e {
        Error::DoesNotEqualize { witness } => {
            Error::SideConditionFailed { clause: "the reconstruction does not land in the cotensor".into(), witness }
        }
        other => other,
    })?;
    let map = colinear(m, &target.comodule, beta)?;
    Ok((map, target))
}
