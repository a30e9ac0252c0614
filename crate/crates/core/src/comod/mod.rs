//! Comonoids, comodules and their maps: the cells of the bicategory of comodules.
//!
//! A comodule `M: C ⇸ D` stores the single joint coaction `M → C ⊗ M ⊗ D`;
//! the one-sided coactions are derived views.

use crate::context::{permutation, require_equal, Backend, FromFunction, Morphism, Object};
use crate::error::{Error, Result};

mod adjunction;
mod cofree;
mod cotensor;
mod monoidale;

pub use adjunction::{star_adjunction, StarAdjunction};
pub use cofree::{bidual_cofree_target, corestrict, corestrict_along_unit, extend, extend_along_unit};
pub use cotensor::{associator, cotensor, cotensor_map, left_unitor, right_unitor, Associator, Cotensor, Unitor};
pub use monoidale::{bidual_counit, bidual_monoidale, bidual_unit, Monoidale};

fn id<B: Backend>(x: &Object) -> Morphism<B> {
    Morphism::identity(x)
}

/// `C = (C, δ, ε)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comonoid<B: Backend> {
    carrier: Object,
    delta: Morphism<B>,
    epsilon: Morphism<B>,
}

impl<B: Backend> Comonoid<B> {
    /// Checked constructor.
    pub fn new(delta: Morphism<B>, epsilon: Morphism<B>) -> Result<Self> {
        let c = Self::new_unchecked(delta, epsilon);
        c.validate()?;
        Ok(c)
    }

    /// Builds the comonoid without checking the laws; see [`Comonoid::validate`].
    pub fn new_unchecked(delta: Morphism<B>, epsilon: Morphism<B>) -> Self {
        Comonoid { carrier: delta.source().clone(), delta, epsilon }
    }

    /// The monoidal unit with its trivial structure.
    pub fn unit() -> Self {
        let i = Object::unit();
        Comonoid { carrier: i.clone(), delta: id(&i), epsilon: id(&i) }
    }

    pub fn carrier(&self) -> &Object {
        &self.carrier
    }

    pub fn delta(&self) -> &Morphism<B> {
        &self.delta
    }

    pub fn epsilon(&self) -> &Morphism<B> {
        &self.epsilon
    }

    /// `δ₃ = (δ ⊗ 1)δ : C → C ⊗ C ⊗ C`.
    pub fn delta3(&self) -> Morphism<B> {
        self.delta.then(&self.delta.tensor(&id(&self.carrier))).expect("comultiplication lands in C ⊗ C")
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.carrier;
        let cc = c.tensor(c);
        if self.delta.source() != c || self.delta.target() != &cc {
            return Err(Error::ShapeMismatch("comultiplication must be C -> C ⊗ C".into()));
        }
        if self.epsilon.source() != c || !self.epsilon.target().is_unit() {
            return Err(Error::ShapeMismatch("counit must be C -> I".into()));
        }
        let one = id::<B>(c);
        let left = self.delta.then(&self.delta.tensor(&one))?;
        let right = self.delta.then(&one.tensor(&self.delta))?;
        require_equal("coassociativity", &left, &right)?;
        require_equal("left counit law", &self.delta.then(&self.epsilon.tensor(&one))?, &one)?;
        require_equal("right counit law", &self.delta.then(&one.tensor(&self.epsilon))?, &one)?;
        Ok(())
    }

    /// `C° = (C, cδ, ε)`.
    pub fn opposite(&self) -> Self {
        let c = &self.carrier;
        let swap = crate::context::braiding(c, c);
        Comonoid {
            carrier: c.clone(),
            delta: self.delta.then(&swap).expect("braiding of C ⊗ C"),
            epsilon: self.epsilon.clone(),
        }
    }

    /// `C ⊗ C'` with comultiplication `(1 ⊗ c ⊗ 1)(δ ⊗ δ')` and counit `ε ⊗ ε'`.
    pub fn tensor(&self, other: &Comonoid<B>) -> Self {
        let (c, d) = (&self.carrier, &other.carrier);
        let middle = permutation(&[c, c, d, d], &[0, 2, 1, 3]).expect("four-factor shuffle");
        let delta = self.delta.tensor(&other.delta).then(&middle).expect("shapes agree");
        Comonoid { carrier: c.tensor(d), delta, epsilon: self.epsilon.tensor(&other.epsilon) }
    }

    pub fn is_cocommutative(&self) -> bool {
        self.opposite() == *self
    }
}

impl<B: FromFunction> Comonoid<B> {
    /// The set (or free space on a basis) with diagonal comultiplication.
    pub fn diagonal(x: &Object) -> Self {
        let n = x.dim();
        let delta = crate::context::function(x, &x.tensor(x), &(0..n).map(|i| i * n + i).collect::<Vec<_>>())
            .expect("diagonal table is in range");
        let epsilon = crate::context::function(x, &Object::unit(), &vec![0; n]).expect("constant table");
        Comonoid { carrier: x.clone(), delta, epsilon }
    }
}

/// Checks the comonoid laws.
pub fn validate_comonoid<B: Backend>(c: &Comonoid<B>) -> Result<()> {
    c.validate()
}

pub fn identity_comodule<B: Backend>(c: &Comonoid<B>) -> Comodule<B> {
    Comodule { left: c.clone(), right: c.clone(), carrier: c.carrier.clone(), coaction: c.delta3() }
}

pub fn opposite_comonoid<B: Backend>(c: &Comonoid<B>) -> Comonoid<B> {
    c.opposite()
}

pub fn tensor_comonoids<B: Backend>(c: &Comonoid<B>, d: &Comonoid<B>) -> Comonoid<B> {
    c.tensor(d)
}

/// A comonoid morphism `f: C → D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComonoidMap<B: Backend> {
    source: Comonoid<B>,
    target: Comonoid<B>,
    map: Morphism<B>,
}

impl<B: Backend> ComonoidMap<B> {
    pub fn new(source: Comonoid<B>, target: Comonoid<B>, map: Morphism<B>) -> Result<Self> {
        let f = Self::new_unchecked(source, target, map);
        f.validate()?;
        Ok(f)
    }

    pub fn new_unchecked(source: Comonoid<B>, target: Comonoid<B>, map: Morphism<B>) -> Self {
        ComonoidMap { source, target, map }
    }

    pub fn identity(c: &Comonoid<B>) -> Self {
        ComonoidMap { source: c.clone(), target: c.clone(), map: id(c.carrier()) }
    }

    pub fn source(&self) -> &Comonoid<B> {
        &self.source
    }

    pub fn target(&self) -> &Comonoid<B> {
        &self.target
    }

    pub fn map(&self) -> &Morphism<B> {
        &self.map
    }

    pub fn validate(&self) -> Result<()> {
        let f = &self.map;
        if f.source() != self.source.carrier() || f.target() != self.target.carrier() {
            return Err(Error::ShapeMismatch("comonoid map endpoints do not match the carriers".into()));
        }
        require_equal("comultiplicativity", &f.then(self.target.delta())?, &self.source.delta().then(&f.tensor(f))?)?;
        require_equal("counitality", &f.then(self.target.epsilon())?, self.source.epsilon())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ComonoidMap<B>) -> Result<ComonoidMap<B>> {
        if self.target != g.source {
            return Err(Error::EndpointMismatch("comonoid maps are not composable".into()));
        }
        Ok(ComonoidMap { source: self.source.clone(), target: g.target.clone(), map: self.map.then(&g.map)? })
    }
}

/// A comodule `M: C ⇸ D` with joint coaction `M → C ⊗ M ⊗ D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule<B: Backend> {
    left: Comonoid<B>,
    right: Comonoid<B>,
    carrier: Object,
    coaction: Morphism<B>,
}

impl<B: Backend> Comodule<B> {
    pub fn new(left: Comonoid<B>, right: Comonoid<B>, coaction: Morphism<B>) -> Result<Self> {
        let m = Self::new_unchecked(left, right, coaction);
        m.validate()?;
        Ok(m)
    }

    pub fn new_unchecked(left: Comonoid<B>, right: Comonoid<B>, coaction: Morphism<B>) -> Self {
        Comodule { left, right, carrier: coaction.source().clone(), coaction }
    }

    /// A plain object as a comodule `I ⇸ I`.
    pub fn trivial(x: &Object) -> Self {
        Comodule { left: Comonoid::unit(), right: Comonoid::unit(), carrier: x.clone(), coaction: id(x) }
    }

    pub fn left(&self) -> &Comonoid<B> {
        &self.left
    }

    pub fn right(&self) -> &Comonoid<B> {
        &self.right
    }

    pub fn carrier(&self) -> &Object {
        &self.carrier
    }

    pub fn coaction(&self) -> &Morphism<B> {
        &self.coaction
    }

    /// `δ_l = (1 ⊗ 1 ⊗ ε)δ : M → C ⊗ M`.
    pub fn delta_l(&self) -> Morphism<B> {
        let cm = id::<B>(&self.left.carrier.tensor(&self.carrier));
        self.coaction.then(&cm.tensor(self.right.epsilon())).expect("coaction shape")
    }

    /// `δ_r = (ε ⊗ 1 ⊗ 1)δ : M → M ⊗ D`.
    pub fn delta_r(&self) -> Morphism<B> {
        let md = id::<B>(&self.carrier.tensor(&self.right.carrier));
        self.coaction.then(&self.left.epsilon().tensor(&md)).expect("coaction shape")
    }

    pub fn validate(&self) -> Result<()> {
        let (c, d, m) = (self.left.carrier(), self.right.carrier(), &self.carrier);
        let expected = Object::tensor_all(&[c, m, d]);
        if self.coaction.source() != m || self.coaction.target() != &expected {
            return Err(Error::ShapeMismatch("coaction must be M -> C ⊗ M ⊗ D".into()));
        }
        let one_m = id::<B>(m);
        let counit = Morphism::tensor_all(&[self.left.epsilon(), &one_m, self.right.epsilon()]);
        require_equal("comodule counit law", &self.coaction.then(&counit)?, &one_m)?;
        let outer = Morphism::tensor_all(&[self.left.delta(), &one_m, self.right.delta()]);
        let inner = Morphism::tensor_all(&[&id(c), &self.coaction, &id(d)]);
        require_equal("comodule coassociativity", &self.coaction.then(&outer)?, &self.coaction.then(&inner)?)
    }

    /// Same comodule with the carrier re-expressed through an isomorphism `p: M → M'`.
    pub fn transport(&self, p: &Morphism<B>) -> Result<Self> {
        let inverse = crate::context::invert(p)?;
        let frame = Morphism::tensor_all(&[&id(self.left.carrier()), p, &id(self.right.carrier())]);
        let coaction = inverse.then(&self.coaction)?.then(&frame)?;
        Ok(Comodule::new_unchecked(self.left.clone(), self.right.clone(), coaction))
    }
}

pub fn validate_comodule<B: Backend>(m: &Comodule<B>) -> Result<()> {
    m.validate()
}

/// `M ⊗ N : C ⊗ C' ⇸ D ⊗ D'` with coaction `c₁₄₂₅₃₆(δ ⊗ δ)`.
pub fn tensor_comodules<B: Backend>(m: &Comodule<B>, n: &Comodule<B>) -> Comodule<B> {
    let factors = [m.left.carrier(), m.carrier(), m.right.carrier(), n.left.carrier(), n.carrier(), n.right.carrier()];
    let shuffle = permutation(&factors, &[0, 3, 1, 4, 2, 5]).expect("six-factor shuffle");
    let coaction = m.coaction.tensor(&n.coaction).then(&shuffle).expect("shapes agree");
    Comodule::new_unchecked(m.left.tensor(&n.left), m.right.tensor(&n.right), coaction)
}

/// A coaction-respecting map between comodules with the same endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleMap<B: Backend> {
    source: Comodule<B>,
    target: Comodule<B>,
    map: Morphism<B>,
}

impl<B: Backend> ComoduleMap<B> {
    pub fn new(source: Comodule<B>, target: Comodule<B>, map: Morphism<B>) -> Result<Self> {
        let f = Self::new_unchecked(source, target, map);
        f.validate()?;
        Ok(f)
    }

    pub fn new_unchecked(source: Comodule<B>, target: Comodule<B>, map: Morphism<B>) -> Self {
        ComoduleMap { source, target, map }
    }

    pub fn identity(m: &Comodule<B>) -> Self {
        ComoduleMap { source: m.clone(), target: m.clone(), map: id(m.carrier()) }
    }

    pub fn source(&self) -> &Comodule<B> {
        &self.source
    }

    pub fn target(&self) -> &Comodule<B> {
        &self.target
    }

    pub fn map(&self) -> &Morphism<B> {
        &self.map
    }

    pub fn validate(&self) -> Result<()> {
        if self.source.left != self.target.left || self.source.right != self.target.right {
            return Err(Error::EndpointMismatch("comodule map between comodules with different comonoids".into()));
        }
        if self.map.source() != self.source.carrier() || self.map.target() != self.target.carrier() {
            return Err(Error::ShapeMismatch("comodule map endpoints do not match the carriers".into()));
        }
        let frame =
            Morphism::tensor_all(&[&id(self.source.left.carrier()), &self.map, &id(self.source.right.carrier())]);
        require_equal(
            "coaction compatibility",
            &self.map.then(self.target.coaction())?,
            &self.source.coaction().then(&frame)?,
        )
    }

    pub fn then(&self, g: &ComoduleMap<B>) -> Result<ComoduleMap<B>> {
        if self.target != g.source {
            return Err(Error::EndpointMismatch("comodule maps are not composable".into()));
        }
        Ok(ComoduleMap { source: self.source.clone(), target: g.target.clone(), map: self.map.then(&g.map)? })
    }
}

pub fn validate_comodule_map<B: Backend>(f: &ComoduleMap<B>) -> Result<()> {
    f.validate()
}
