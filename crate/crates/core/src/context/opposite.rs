use std::marker::PhantomData;

use serde_json::Value;

use super::{Backend, BackendTag, Coequalizer, Equalizer, Morphism, Object, Witness};
use crate::error::Result;

/// The opposite of a backend. A morphism `X → Y` stores the underlying map `Y → X`;
/// the tensor is unchanged, equalizers are underlying coequalizers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Opposite<B>(PhantomData<B>);

impl<B: Backend> Morphism<Opposite<B>> {
    /// The underlying map, pointing the other way.
    pub fn unop(&self) -> Morphism<B> {
        Morphism::new_unchecked(self.target.clone(), self.source.clone(), self.payload.clone())
    }
}

impl<B: Backend> Morphism<B> {
    /// The same map viewed in the opposite backend, pointing the other way.
    pub fn op(&self) -> Morphism<Opposite<B>> {
        Morphism::new_unchecked(self.target.clone(), self.source.clone(), self.payload.clone())
    }
}

fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; perm.len()];
    for (k, &p) in perm.iter().enumerate() {
        inverse[p] = k;
    }
    inverse
}

impl<B: Backend> Backend for Opposite<B> {
    type Payload = B::Payload;

    fn tag() -> BackendTag {
        BackendTag::Opposite(Box::new(B::tag()))
    }

    fn check_payload(payload: &B::Payload, source_dim: usize, target_dim: usize) -> Result<()> {
        B::check_payload(payload, target_dim, source_dim)
    }

    fn identity(dim: usize) -> B::Payload {
        B::identity(dim)
    }

    fn compose(g: &B::Payload, f: &B::Payload, [a, b, c]: [usize; 3]) -> B::Payload {
        B::compose(f, g, [c, b, a])
    }

    fn tensor(f: &B::Payload, (fs, ft): (usize, usize), g: &B::Payload, (gs, gt): (usize, usize)) -> B::Payload {
        B::tensor(f, (ft, fs), g, (gt, gs))
    }

    fn permutation(perm: &[usize], dims: &[usize]) -> B::Payload {
        let permuted: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        B::permutation(&invert_permutation(perm), &permuted)
    }

    fn equalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Equalizer<Self>> {
        let co = B::coequalizer(&f.unop(), &g.unop())?;
        Ok(Equalizer { object: co.object, inclusion: co.projection.op(), pair: (f.clone(), g.clone()) })
    }

    fn coequalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Coequalizer<Self>> {
        let eq = B::equalizer(&f.unop(), &g.unop())?;
        Ok(Coequalizer { object: eq.object, projection: eq.inclusion.op(), pair: (f.clone(), g.clone()) })
    }

    fn factor_through_mono(mono: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        Ok(B::factor_through_epi(&mono.unop(), &h.unop())?.op())
    }

    fn factor_through_epi(epi: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        Ok(B::factor_through_mono(&epi.unop(), &h.unop())?.op())
    }

    fn difference(f: &Morphism<Self>, g: &Morphism<Self>) -> Option<Witness> {
        B::difference(&f.unop(), &g.unop())
    }

    fn render(payload: &B::Payload) -> String {
        format!("op {}", B::render(payload))
    }

    fn payload_to_json(payload: &B::Payload, source: &Object, target: &Object) -> Value {
        B::payload_to_json(payload, target, source)
    }

    fn payload_from_json(value: &Value, source: &Object, target: &Object) -> Result<B::Payload> {
        B::payload_from_json(value, target, source)
    }
}
