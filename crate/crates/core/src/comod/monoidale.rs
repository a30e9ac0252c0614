use super::{id, Comodule, Comonoid};
use crate::context::{braiding, permutation, Backend, Morphism};
use crate::error::Result;

/// The biduality comodules of a comonoid `C` and the monoidale `C° ⊗ C` they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoidale<B: Backend> {
    pub comonoid: Comonoid<B>,
    pub opposite: Comonoid<B>,
    /// `e: C ⊗ C° ⇸ I`, carrier `C`, coaction `(1 ⊗ c)δ₃`.
    pub e: Comodule<B>,
    /// `n: I ⇸ C° ⊗ C`, carrier `C`, coaction `(c ⊗ 1)δ₃`.
    pub n: Comodule<B>,
    /// `p = 1 ⊗ e ⊗ 1: C° ⊗ C ⊗ C° ⊗ C ⇸ C° ⊗ C`, carrier `C ⊗ C ⊗ C`.
    pub p: Comodule<B>,
    /// `j = n`, coaction `c₂₁₃δ₃`.
    pub j: Comodule<B>,
}

impl<B: Backend> Monoidale<B> {
    /// The comonoid `C° ⊗ C`.
    pub fn base(&self) -> Comonoid<B> {
        self.opposite.tensor(&self.comonoid)
    }
}

pub fn bidual_monoidale<B: Backend>(c: &Comonoid<B>) -> Result<Monoidale<B>> {
    let x = c.carrier();
    let op = c.opposite();
    let unit = Comonoid::unit();
    let delta3 = c.delta3();

    let e = bidual_counit(c)?;
    let n = bidual_unit(c)?;
    let base = op.tensor(c);

    let j_coaction = delta3.then(&permutation(&[x, x, x], &[1, 0, 2])?)?;
    let j = Comodule::new(unit, base.clone(), j_coaction)?;

    let nine = [x; 9];
    let p_coaction =
        Morphism::tensor_all(&[&delta3, &delta3, &delta3]).then(&permutation(&nine, &[2, 3, 5, 6, 1, 4, 7, 0, 8])?)?;
    let p = Comodule::new(base.tensor(&base), base, p_coaction)?;

    Ok(Monoidale { comonoid: c.clone(), opposite: op, e, n, p, j })
}

/// `e: C ⊗ C° ⇸ I` with coaction `(1 ⊗ c)δ₃`.
pub fn bidual_counit<B: Backend>(c: &Comonoid<B>) -> Result<Comodule<B>> {
    let x = c.carrier();
    let coaction = c.delta3().then(&id::<B>(x).tensor(&braiding(x, x)))?;
    Comodule::new(c.tensor(&c.opposite()), Comonoid::unit(), coaction)
}

/// `n: I ⇸ C° ⊗ C` with coaction `(c ⊗ 1)δ₃`.
pub fn bidual_unit<B: Backend>(c: &Comonoid<B>) -> Result<Comodule<B>> {
    let x = c.carrier();
    let coaction = c.delta3().then(&braiding::<B>(x, x).tensor(&id(x)))?;
    Comodule::new(Comonoid::unit(), c.opposite().tensor(c), coaction)
}
