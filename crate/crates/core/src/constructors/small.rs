//! Small categories as quantum categories over finite sets or their linearization.

use std::collections::BTreeMap;

use super::fincat::FinCat;
use crate::comod::Comonoid;
use crate::context::{factor_through_mono, function, function_table, FdVect, FinSet, FromFunction, Morphism, Object};
use crate::error::{Error, Result};
use crate::qcat::{QuantumFunctor, QuantumNatTransformation};
use crate::quantum::{composable_pairs, QuantumCategory, QuantumGraph};

fn table<B: FromFunction>(m: &Morphism<B>, what: &str) -> Result<Vec<usize>> {
    function_table(m).ok_or_else(|| Error::ShapeMismatch(format!("{what} is not induced by a function")))
}

/// The quantum category of `cat` without checking the axioms. Useful as a
/// starting point for mutated structure maps.
pub fn from_small_category_unchecked<B: FromFunction>(cat: &FinCat) -> Result<QuantumCategory<B>> {
    cat.validate()?;
    let objects = Object::from_atoms(&cat.objects).map_err(|e| Error::InvalidCategory(e.to_string()))?;
    let arrows = Object::from_atoms(&cat.morphisms).map_err(|e| Error::InvalidCategory(e.to_string()))?;
    let graph = QuantumGraph::new(
        Comonoid::diagonal(&objects),
        Comonoid::diagonal(&arrows),
        function(&arrows, &objects, &cat.dom)?,
        function(&arrows, &objects, &cat.cod)?,
    )?;
    let pairs = composable_pairs(&graph)?;
    let n = cat.morphism_count();
    let composites = table(pairs.inclusion(), "the inclusion of composable pairs")?
        .into_iter()
        .map(|xy| {
            cat.compose(xy / n, xy % n).ok_or_else(|| Error::InvalidCategory(format!("pair {xy} is not composable")))
        })
        .collect::<Result<Vec<_>>>()?;
    let nu2 = function(pairs.h().carrier(), &arrows, &composites)?;
    let nu0 = function(&objects, &arrows, &cat.ids)?;
    QuantumCategory::from_pairs(graph, pairs, nu2, nu0)
}

/// Objects and arrows become diagonal comonoids, `s = dom`, `t = cod`,
/// `ν₂(x, y)` is "x then y" and `ν₀` picks identities.
pub fn from_small_category<B: FromFunction>(cat: &FinCat) -> Result<QuantumCategory<B>> {
    let q = from_small_category_unchecked(cat)?;
    q.require_valid()?;
    Ok(q)
}

/// Reads a quantum category over finite sets back as a category.
pub fn to_small_category(q: &QuantumCategory<FinSet>) -> Result<FinCat> {
    q.require_valid()?;
    let names = |x: &Object| x.labels().iter().map(ToString::to_string).collect::<Vec<_>>();
    let n = q.a().carrier().dim();
    let nu2 = &q.nu2().payload().0;
    let comp: BTreeMap<(usize, usize), usize> =
        q.inclusion().payload().0.iter().zip(nu2).map(|(&xy, &z)| ((xy / n, xy % n), z)).collect();
    FinCat::new(
        names(q.c().carrier()),
        names(q.a().carrier()),
        q.s().payload().0.clone(),
        q.t().payload().0.clone(),
        q.nu0().payload().0.clone(),
        comp,
    )
}

fn lin(m: &Morphism<FinSet>) -> Morphism<FdVect> {
    function(m.source(), m.target(), &m.payload().0).expect("a function table is well formed")
}

fn lin_comonoid(c: &Comonoid<FinSet>) -> Comonoid<FdVect> {
    Comonoid::new_unchecked(lin(c.delta()), lin(c.epsilon()))
}

/// The free linearization: every carrier gets its elements as basis and every
/// map its 0/1 matrix. Composition is transported along the comparison of
/// the two objects of composable pairs. Axioms are not asserted.
pub fn linearize(q: &QuantumCategory<FinSet>) -> Result<QuantumCategory<FdVect>> {
    let graph = QuantumGraph::new(lin_comonoid(q.c()), lin_comonoid(q.a()), lin(q.s()), lin(q.t()))?;
    let pairs = composable_pairs(&graph)?;
    let comparison = factor_through_mono(&lin(q.inclusion()), pairs.inclusion())?;
    let nu2 = comparison.then(&lin(q.nu2()))?;
    QuantumCategory::from_pairs(graph, pairs, nu2, lin(q.nu0()))
}

/// An ordinary functor between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub source: FinCat,
    pub target: FinCat,
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl FinFunctor {
    pub fn identity(cat: &FinCat) -> Self {
        FinFunctor {
            source: cat.clone(),
            target: cat.clone(),
            objects: (0..cat.object_count()).collect(),
            morphisms: (0..cat.morphism_count()).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (c, d) = (&self.source, &self.target);
        let bad = |msg: String| Err(Error::InvalidCategory(format!("not a functor: {msg}")));
        if self.objects.len() != c.object_count() || self.morphisms.len() != c.morphism_count() {
            return bad("tables have the wrong length".into());
        }
        if self.objects.iter().any(|&y| y >= d.object_count())
            || self.morphisms.iter().any(|&y| y >= d.morphism_count())
        {
            return bad("tables leave the target".into());
        }
        for a in 0..c.morphism_count() {
            let fa = self.morphisms[a];
            if d.dom[fa] != self.objects[c.dom[a]] || d.cod[fa] != self.objects[c.cod[a]] {
                return bad(format!("{} changes endpoints", c.morphisms[a]));
            }
        }
        for x in 0..c.object_count() {
            if self.morphisms[c.ids[x]] != d.ids[self.objects[x]] {
                return bad(format!("identity of {} is not preserved", c.objects[x]));
            }
        }
        for (&(f, g), &fg) in &c.comp {
            if d.compose(self.morphisms[f], self.morphisms[g]) != Some(self.morphisms[fg]) {
                return bad(format!("{} then {} is not preserved", c.morphisms[f], c.morphisms[g]));
            }
        }
        Ok(())
    }

    /// "self then next".
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor> {
        if self.target != next.source {
            return Err(Error::EndpointMismatch("functors are not composable".into()));
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            objects: self.objects.iter().map(|&x| next.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&a| next.morphisms[a]).collect(),
        })
    }

    /// `(f, φ)` given by the object and arrow tables.
    pub fn lift<B: FromFunction>(&self) -> Result<QuantumFunctor<B>> {
        let source = from_small_category::<B>(&self.source)?;
        let target = from_small_category::<B>(&self.target)?;
        self.lift_between(&source, &target)
    }

    /// Like [`FinFunctor::lift`] with the two quantum categories already built.
    pub fn lift_between<B: FromFunction>(
        &self,
        source: &QuantumCategory<B>,
        target: &QuantumCategory<B>,
    ) -> Result<QuantumFunctor<B>> {
        Ok(QuantumFunctor {
            f: function(source.c().carrier(), target.c().carrier(), &self.objects)?,
            phi: function(source.a().carrier(), target.a().carrier(), &self.morphisms)?,
            source: source.clone(),
            target: target.clone(),
        })
    }
}

/// Every functor `c → d`.
pub fn all_functors(c: &FinCat, d: &FinCat) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let mut objects = vec![0; c.object_count()];
    loop {
        let choices: Vec<Vec<usize>> = (0..c.morphism_count())
            .map(|a| {
                (0..d.morphism_count())
                    .filter(|&b| d.dom[b] == objects[c.dom[a]] && d.cod[b] == objects[c.cod[a]])
                    .collect()
            })
            .collect();
        let mut pick = vec![0; choices.len()];
        if choices.iter().all(|options| !options.is_empty()) {
            loop {
                let candidate = FinFunctor {
                    source: c.clone(),
                    target: d.clone(),
                    objects: objects.clone(),
                    morphisms: pick.iter().zip(&choices).map(|(&k, options)| options[k]).collect(),
                };
                if candidate.validate().is_ok() {
                    out.push(candidate);
                }
                if !advance(&mut pick, |k| choices[k].len()) {
                    break;
                }
            }
        }
        if d.object_count() == 0 || !advance(&mut objects, |_| d.object_count()) {
            break;
        }
    }
    if c.object_count() > 0 && d.object_count() == 0 {
        out.clear();
    }
    out
}

fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < radix(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}

/// An ordinary natural transformation `α: F ⇒ G`, one arrow per source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinNatural {
    pub source: FinFunctor,
    pub target: FinFunctor,
    pub components: Vec<usize>,
}

impl FinNatural {
    pub fn validate(&self) -> Result<()> {
        let (ff, gg) = (&self.source, &self.target);
        let (c, d) = (&ff.source, &ff.target);
        let bad = |msg: String| Err(Error::InvalidCategory(format!("not natural: {msg}")));
        if gg.source != *c || gg.target != *d || self.components.len() != c.object_count() {
            return bad("functors or components do not match".into());
        }
        for x in 0..c.object_count() {
            let alpha = self.components[x];
            if alpha >= d.morphism_count() || d.dom[alpha] != ff.objects[x] || d.cod[alpha] != gg.objects[x] {
                return bad(format!("component at {} has the wrong endpoints", c.objects[x]));
            }
        }
        for a in 0..c.morphism_count() {
            let lower = d.compose(ff.morphisms[a], self.components[c.cod[a]]);
            let upper = d.compose(self.components[c.dom[a]], gg.morphisms[a]);
            if lower != upper {
                return bad(format!("square at {} does not commute", c.morphisms[a]));
            }
        }
        Ok(())
    }

    /// `τ(a: x → y) = F(a)` then `α_y`.
    pub fn tau_table(&self) -> Vec<usize> {
        let (c, d) = (&self.source.source, &self.source.target);
        (0..c.morphism_count())
            .map(|a| {
                d.compose(self.source.morphisms[a], self.components[c.cod[a]])
                    .expect("components have matching endpoints")
            })
            .collect()
    }

    pub fn lift<B: FromFunction>(&self) -> Result<QuantumNatTransformation<B>> {
        let source = self.source.lift::<B>()?;
        let target = self.target.lift_between(&source.source, &source.target)?;
        let tau = function(source.source.a().carrier(), source.target.a().carrier(), &self.tau_table())?;
        Ok(QuantumNatTransformation { source, target, tau })
    }
}

/// Every natural transformation `F ⇒ G`.
pub fn all_naturals(ff: &FinFunctor, gg: &FinFunctor) -> Vec<FinNatural> {
    let (c, d) = (&ff.source, &ff.target);
    let choices: Vec<Vec<usize>> = (0..c.object_count())
        .map(|x| (0..d.morphism_count()).filter(|&b| d.dom[b] == ff.objects[x] && d.cod[b] == gg.objects[x]).collect())
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0; choices.len()];
    loop {
        let candidate = FinNatural {
            source: ff.clone(),
            target: gg.clone(),
            components: pick.iter().zip(&choices).map(|(&k, options)| options[k]).collect(),
        };
        if candidate.validate().is_ok() {
            out.push(candidate);
        }
        if !advance(&mut pick, |k| choices[k].len()) {
            break;
        }
    }
    out
}
