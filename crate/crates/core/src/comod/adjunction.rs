use super::cotensor::{associator, cotensor, cotensor_map, left_unitor, right_unitor, Cotensor};
use super::{id, identity_comodule, Comodule, ComoduleMap, ComonoidMap};
use crate::context::{require_equal, Backend, Morphism};
use crate::error::Result;

/// The adjoint pair induced by a comonoid map `f: C → D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarAdjunction<B: Backend> {
    pub map: ComonoidMap<B>,
    /// `f*: C ⇸ D`, carrier `C`, coaction `(1 ⊗ 1 ⊗ f)δ₃`.
    pub upper: Comodule<B>,
    /// `f_*: D ⇸ C`, carrier `C`, coaction `(f ⊗ 1 ⊗ 1)δ₃`.
    pub lower: Comodule<B>,
    /// `1_C ⇒ C ⊗_D C` induced by `δ`.
    pub unit: ComoduleMap<B>,
    pub unit_cotensor: Cotensor<B>,
    /// `C ⊗_C C ≅ C → D`.
    pub counit: ComoduleMap<B>,
    pub counit_cotensor: Cotensor<B>,
}

pub fn star_adjunction<B: Backend>(f: &ComonoidMap<B>) -> Result<StarAdjunction<B>> {
    let (c, d) = (f.source(), f.target());
    let one = id::<B>(c.carrier());
    let delta3 = c.delta3();
    let upper = Comodule::new(c.clone(), d.clone(), delta3.then(&Morphism::tensor_all(&[&one, &one, f.map()]))?)?;
    let lower = Comodule::new(d.clone(), c.clone(), delta3.then(&Morphism::tensor_all(&[f.map(), &one, &one]))?)?;
    let unit_cotensor = cotensor(&upper, &lower)?;
    let unit_map = unit_cotensor.factor(c.delta())?;
    let unit = ComoduleMap::new(identity_comodule(c), unit_cotensor.comodule.clone(), unit_map)?;
    let counit_cotensor = cotensor(&lower, &upper)?;
    let counit_map = counit_cotensor.inclusion.then(&c.epsilon().tensor(&one))?.then(f.map())?;
    let counit = ComoduleMap::new(counit_cotensor.comodule.clone(), identity_comodule(d), counit_map)?;
    Ok(StarAdjunction { map: f.clone(), upper, lower, unit, unit_cotensor, counit, counit_cotensor })
}

impl<B: Backend> StarAdjunction<B> {
    /// `f* ≅ 1 ⊗ f* → (f* ⊗ f_*) ⊗ f* ≅ f* ⊗ (f_* ⊗ f*) → f* ⊗ 1 ≅ f*`.
    pub fn upper_triangle(&self) -> Result<Morphism<B>> {
        let (l, r) = (&self.upper, &self.lower);
        let lam = left_unitor(l)?;
        let assoc = associator(l, r, l)?;
        let rho = right_unitor(l)?;
        let step1 = cotensor_map(&lam.cotensor, &assoc.left_outer, self.unit.map(), &id(l.carrier()))?;
        let step3 = cotensor_map(&assoc.right_outer, &rho.cotensor, &id(l.carrier()), self.counit.map())?;
        lam.inverse.map().then(&step1)?.then(assoc.forward.map())?.then(&step3)?.then(rho.forward.map())
    }

    /// `f_* ≅ f_* ⊗ 1 → f_* ⊗ (f* ⊗ f_*) ≅ (f_* ⊗ f*) ⊗ f_* → 1 ⊗ f_* ≅ f_*`.
    pub fn lower_triangle(&self) -> Result<Morphism<B>> {
        let (l, r) = (&self.upper, &self.lower);
        let rho = right_unitor(r)?;
        let assoc = associator(r, l, r)?;
        let lam = left_unitor(r)?;
        let step1 = cotensor_map(&rho.cotensor, &assoc.right_outer, &id(r.carrier()), self.unit.map())?;
        let step3 = cotensor_map(&assoc.left_outer, &lam.cotensor, self.counit.map(), &id(r.carrier()))?;
        rho.inverse.map().then(&step1)?.then(assoc.backward.map())?.then(&step3)?.then(lam.forward.map())
    }

    /// Both triangle identities, bit-exactly.
    pub fn check_triangles(&self) -> Result<()> {
        let one = id::<B>(self.upper.carrier());
        require_equal("first triangle identity", &self.upper_triangle()?, &one)?;
        require_equal("second triangle identity", &self.lower_triangle()?, &one)
    }
}
