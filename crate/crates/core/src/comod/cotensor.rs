use super::{id, identity_comodule, Comodule, ComoduleMap};
use crate::context::{
    coreflexive_equalizer, factor_through_equalizer, factor_through_mono, require_equal, Backend, Equalizer, Morphism,
    Object,
};
use crate::error::{Error, Result};

/// `M ⊗_D N` for `M: C ⇸ D`, `N: D ⇸ E`, with its inclusion into `M ⊗ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotensor<B: Backend> {
    pub comodule: Comodule<B>,
    pub inclusion: Morphism<B>,
    pub equalizer: Equalizer<B>,
    pub factors: (Comodule<B>, Comodule<B>),
}

impl<B: Backend> Cotensor<B> {
    pub fn carrier(&self) -> &Object {
        self.comodule.carrier()
    }

    /// Corestriction of `h: X → M ⊗ N` to the cotensor, if it equalizes the defining pair.
    pub fn factor(&self, h: &Morphism<B>) -> Result<Morphism<B>> {
        factor_through_equalizer(&self.equalizer, h)
    }
}

/// Cotensor product: the equalizer of `δ_r ⊗ 1` and `1 ⊗ δ_l` with the outer
/// coactions induced by factorization.
pub fn cotensor<B: Backend>(m: &Comodule<B>, n: &Comodule<B>) -> Result<Cotensor<B>> {
    if m.right() != n.left() {
        return Err(Error::EndpointMismatch(
            "the right comonoid of the first comodule is not the left comonoid of the second".into(),
        ));
    }
    let (mc, nc) = (m.carrier(), n.carrier());
    let first = m.delta_r().tensor(&id(nc));
    let second = id::<B>(mc).tensor(&n.delta_l());
    let equalizer = coreflexive_equalizer(&first, &second)?;
    let inclusion = equalizer.inclusion.clone();
    let joint = m.delta_l().tensor(&n.delta_r());
    let restricted = inclusion.then(&joint)?;
    let frame = Morphism::tensor_all(&[&id(m.left().carrier()), &inclusion, &id(n.right().carrier())]);
    let coaction = factor_through_mono(&frame, &restricted).map_err(|e| match e {
        Error::NotInImage { witness, .. } => {
            Error::CoactionDoesNotRestrict { object: "the cotensor product".into(), witness }
        }
        other => other,
    })?;
    let comodule = Comodule::new(m.left().clone(), n.right().clone(), coaction)?;
    Ok(Cotensor { comodule, inclusion, equalizer, factors: (m.clone(), n.clone()) })
}

/// `f ⊗_D g`: the map between cotensor carriers induced by `f ⊗ g`.
pub fn cotensor_map<B: Backend>(
    source: &Cotensor<B>,
    target: &Cotensor<B>,
    f: &Morphism<B>,
    g: &Morphism<B>,
) -> Result<Morphism<B>> {
    let h = source.inclusion.then(&f.tensor(g))?;
    target.factor(&h)
}

/// A cotensor unitor together with its computed inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unitor<B: Backend> {
    pub cotensor: Cotensor<B>,
    /// `C ⊗_C M → M` (or `M ⊗_D D → M`).
    pub forward: ComoduleMap<B>,
    pub inverse: ComoduleMap<B>,
}

fn check_inverse<B: Backend>(forward: &Morphism<B>, inverse: &Morphism<B>) -> Result<()> {
    for (name, composite, expected) in [
        ("forward then inverse", forward.then(inverse)?, forward.source()),
        ("inverse then forward", inverse.then(forward)?, inverse.source()),
    ] {
        if let Some(w) = composite.difference(&Morphism::identity(expected))? {
            return Err(Error::ComparisonNotInvertible(format!("{name} is not the identity at {w}")));
        }
    }
    Ok(())
}

/// `C ⊗_C M ≅ M` via `(ε ⊗ 1)i`, inverse the corestricted left coaction.
pub fn left_unitor<B: Backend>(m: &Comodule<B>) -> Result<Unitor<B>> {
    let cot = cotensor(&identity_comodule(m.left()), m)?;
    let forward = cot.inclusion.then(&m.left().epsilon().tensor(&id(m.carrier())))?;
    let inverse = cot.factor(&m.delta_l())?;
    check_inverse(&forward, &inverse)?;
    Ok(Unitor {
        forward: ComoduleMap::new(cot.comodule.clone(), m.clone(), forward)?,
        inverse: ComoduleMap::new(m.clone(), cot.comodule.clone(), inverse)?,
        cotensor: cot,
    })
}

/// `M ⊗_D D ≅ M` via `(1 ⊗ ε)i`, inverse the corestricted right coaction.
pub fn right_unitor<B: Backend>(m: &Comodule<B>) -> Result<Unitor<B>> {
    let cot = cotensor(m, &identity_comodule(m.right()))?;
    let forward = cot.inclusion.then(&id::<B>(m.carrier()).tensor(m.right().epsilon()))?;
    let inverse = cot.factor(&m.delta_r())?;
    check_inverse(&forward, &inverse)?;
    Ok(Unitor {
        forward: ComoduleMap::new(cot.comodule.clone(), m.clone(), forward)?,
        inverse: ComoduleMap::new(m.clone(), cot.comodule.clone(), inverse)?,
        cotensor: cot,
    })
}

/// The comparison `(M ⊗ N) ⊗ L ≅ M ⊗ (N ⊗ L)` of iterated cotensors, both viewed
/// as subobjects of `M ⊗ N ⊗ L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Associator<B: Backend> {
    pub left_inner: Cotensor<B>,
    pub left_outer: Cotensor<B>,
    pub right_inner: Cotensor<B>,
    pub right_outer: Cotensor<B>,
    pub forward: ComoduleMap<B>,
    pub backward: ComoduleMap<B>,
}

impl<B: Backend> Associator<B> {
    /// Inclusion of `(M ⊗ N) ⊗ L` into `M ⊗ N ⊗ L`.
    pub fn left_inclusion(&self) -> Morphism<B> {
        let l = self.left_outer.factors.1.carrier();
        self.left_outer.inclusion.then(&self.left_inner.inclusion.tensor(&id(l))).expect("nested inclusions compose")
    }

    /// Inclusion of `M ⊗ (N ⊗ L)` into `M ⊗ N ⊗ L`.
    pub fn right_inclusion(&self) -> Morphism<B> {
        let m = self.right_outer.factors.0.carrier();
        self.right_outer
            .inclusion
            .then(&id::<B>(m).tensor(&self.right_inner.inclusion))
            .expect("nested inclusions compose")
    }
}

pub fn associator<B: Backend>(m: &Comodule<B>, n: &Comodule<B>, l: &Comodule<B>) -> Result<Associator<B>> {
    let left_inner = cotensor(m, n)?;
    let left_outer = cotensor(&left_inner.comodule, l)?;
    let right_inner = cotensor(n, l)?;
    let right_outer = cotensor(m, &right_inner.comodule)?;
    let mut assoc = Associator {
        forward: ComoduleMap::identity(&left_outer.comodule),
        backward: ComoduleMap::identity(&right_outer.comodule),
        left_inner,
        left_outer,
        right_inner,
        right_outer,
    };
    let (li, ri) = (assoc.left_inclusion(), assoc.right_inclusion());
    let forward = factor_through_mono(&ri, &li).map_err(|e| Error::ComparisonNotInvertible(e.to_string()))?;
    let backward = factor_through_mono(&li, &ri).map_err(|e| Error::ComparisonNotInvertible(e.to_string()))?;
    check_inverse(&forward, &backward)?;
    require_equal("associator", &forward.then(&ri)?, &li)?;
    assoc.forward = ComoduleMap::new(assoc.left_outer.comodule.clone(), assoc.right_outer.comodule.clone(), forward)?;
    assoc.backward = ComoduleMap::new(assoc.right_outer.comodule.clone(), assoc.left_outer.comodule.clone(), backward)?;
    Ok(assoc)
}
