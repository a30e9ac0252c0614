//! Backends for a symmetric monoidal category with coreflexive equalizers.
//!
//! Objects are finite ordered bases of labels. Tensor products are strict:
//! the basis of `X ⊗ Y` is the list of concatenated label tuples in
//! left-major order and the unit is the one-element basis holding the empty
//! tuple, so associators and unitors are identities on the data.
//!
//! Three realizations are provided: [`FinSet`] (morphisms are function
//! tables), [`FdVect`] (exact rational matrices) and the formal [`Opposite`]
//! of any backend.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod fdvect;
mod finset;
mod opposite;

pub use fdvect::{matrix_from_json, matrix_to_json, FdVect};
pub use finset::{FinSet, Table};
pub use opposite::Opposite;

/// A basis element: a tuple of atomic names. Tensor products concatenate tuples.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Label(Vec<String>);

impl Label {
    pub fn atom(name: impl Into<String>) -> Self {
        Label(vec![name.into()])
    }

    /// The single basis element of the unit object.
    pub fn unit() -> Self {
        Label(Vec::new())
    }

    pub fn from_parts(parts: Vec<String>) -> Self {
        Label(parts)
    }

    pub fn parts(&self) -> &[String] {
        &self.0
    }

    pub fn concat(&self, other: &Label) -> Label {
        let mut parts = self.0.clone();
        parts.extend(other.0.iter().cloned());
        Label(parts)
    }

    /// Inverse of `Display`: `"()"` is the unit, otherwise parts are separated by `⊗`.
    pub fn parse(text: &str) -> Label {
        if text == "()" {
            Label::unit()
        } else {
            Label(text.split('⊗').map(str::to_string).collect())
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", self.0.join("⊗"))
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An object of a backend: an ordered basis of distinct labels.
///
/// The basis is stored as a tensor product of blocks and labels are
/// concatenated on demand, so large tensor powers stay cheap.
#[derive(Clone)]
pub struct Object {
    blocks: Arc<[Arc<[Label]>]>,
    dim: usize,
}

impl Object {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut sorted: Vec<&Label> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ShapeMismatch(format!("duplicate basis label '{}'", w[0])));
        }
        Ok(Self::block(labels))
    }

    fn block(labels: Vec<Label>) -> Self {
        if labels.len() == 1 && labels[0].parts().is_empty() {
            return Object::unit();
        }
        let dim = labels.len();
        Object { blocks: vec![Arc::from(labels)].into(), dim }
    }

    /// Object whose basis is the given atomic names.
    pub fn from_atoms<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::new(names.iter().map(|n| Label::atom(n.as_ref())).collect())
    }

    /// The monoidal unit: one basis element, the empty tuple.
    pub fn unit() -> Self {
        Object { blocks: Vec::new().into(), dim: 1 }
    }

    pub fn empty() -> Self {
        Self::block(Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All labels in order.
    pub fn labels(&self) -> Vec<Label> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }

    pub fn label(&self, index: usize) -> Label {
        assert!(index < self.dim, "basis index {index} out of range for dimension {}", self.dim);
        let mut digits = vec![0; self.blocks.len()];
        let mut rest = index;
        for (k, block) in self.blocks.iter().enumerate().rev() {
            digits[k] = rest % block.len();
            rest /= block.len();
        }
        let parts = self.blocks.iter().zip(digits).flat_map(|(b, d)| b[d].parts().iter().cloned()).collect();
        Label::from_parts(parts)
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        fn search(blocks: &[Arc<[Label]>], parts: &[String]) -> Option<usize> {
            let Some((first, rest)) = blocks.split_first() else {
                return parts.is_empty().then_some(0);
            };
            let stride: usize = rest.iter().map(|b| b.len()).product();
            first.iter().enumerate().find_map(|(i, l)| {
                let p = l.parts();
                if parts.len() >= p.len() && &parts[..p.len()] == p {
                    search(rest, &parts[p.len()..]).map(|j| i * stride + j)
                } else {
                    None
                }
            })
        }
        search(&self.blocks, label.parts())
    }

    pub fn is_unit(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn tensor(&self, other: &Object) -> Object {
        let blocks: Vec<Arc<[Label]>> = self.blocks.iter().chain(other.blocks.iter()).cloned().collect();
        Object { blocks: blocks.into(), dim: self.dim * other.dim }
    }

    /// Left-bracketed tensor of a list of objects; the unit for an empty list.
    pub fn tensor_all(objects: &[&Object]) -> Object {
        objects.iter().fold(Object::unit(), |acc, x| acc.tensor(x))
    }

    /// Sub-basis at the given indices.
    pub(crate) fn select(&self, indices: &[usize]) -> Object {
        Self::block(indices.iter().map(|&i| self.label(i)).collect())
    }
}

impl PartialEq for Object {
    fn eq(&self, other: &Object) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if Arc::ptr_eq(&self.blocks, &other.blocks) || self.blocks == other.blocks {
            return true;
        }
        (0..self.dim).all(|i| self.label(i) == other.label(i))
    }
}

impl Eq for Object {}

impl std::hash::Hash for Object {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
    }
}

impl fmt::Debug for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 16;
        let mut list = f.debug_list();
        list.entries((0..self.dim.min(SHOWN)).map(|i| self.label(i)));
        if self.dim > SHOWN {
            list.entry(&format_args!("… {} elements", self.dim));
        }
        list.finish()
    }
}

/// A basis element (or set element) at which two parallel maps differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub label: String,
}

impl Witness {
    pub fn new(index: usize, label: impl fmt::Display) -> Self {
        Witness { index, label: label.to_string() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basis element {} '{}'", self.index, self.label)
    }
}

/// Serialized backend name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BackendTag {
    FinSet,
    FdVect,
    Opposite(Box<BackendTag>),
}

impl fmt::Display for BackendTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendTag::FinSet => write!(f, "finset"),
            BackendTag::FdVect => write!(f, "fdvect"),
            BackendTag::Opposite(inner) => write!(f, "op({inner})"),
        }
    }
}

impl BackendTag {
    pub fn parse(text: &str) -> Option<BackendTag> {
        let text = text.trim();
        match text {
            "finset" => Some(BackendTag::FinSet),
            "fdvect" => Some(BackendTag::FdVect),
            _ => text
                .strip_prefix("op(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(BackendTag::parse)
                .map(|inner| BackendTag::Opposite(Box::new(inner))),
        }
    }
}

/// A realization of the ambient symmetric monoidal category.
///
/// Backends are zero-sized type tags; all data lives in [`Object`]s and in the
/// payloads of [`Morphism`]s.
pub trait Backend: Copy + Clone + Default + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Payload: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn tag() -> BackendTag;

    /// Verifies that a payload describes a map between objects of the given dimensions.
    fn check_payload(payload: &Self::Payload, source_dim: usize, target_dim: usize) -> Result<()>;

    fn identity(dim: usize) -> Self::Payload;

    /// `g ∘ f` for `f: a → b`, `g: b → c`, with `dims = [a, b, c]`.
    fn compose(g: &Self::Payload, f: &Self::Payload, dims: [usize; 3]) -> Self::Payload;

    /// `f ⊗ g`; each `(source, target)` pair gives the dimensions of its factor.
    fn tensor(f: &Self::Payload, f_dims: (usize, usize), g: &Self::Payload, g_dims: (usize, usize)) -> Self::Payload;

    /// The symmetry `X_0 ⊗ … ⊗ X_{n-1} → X_{perm[0]} ⊗ … ⊗ X_{perm[n-1]}`.
    fn permutation(perm: &[usize], dims: &[usize]) -> Self::Payload;

    fn equalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Equalizer<Self>>;

    fn coequalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Coequalizer<Self>>;

    /// The unique `u` with `mono ∘ u = h`.
    fn factor_through_mono(mono: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>>;

    /// The unique `u` with `u ∘ epi = h`.
    fn factor_through_epi(epi: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>>;

    /// First basis element at which two parallel maps differ. For opposite
    /// backends the element belongs to the underlying domain, i.e. the target.
    fn difference(f: &Morphism<Self>, g: &Morphism<Self>) -> Option<Witness>;

    /// Human-readable rendering used in reports.
    fn render(payload: &Self::Payload) -> String;

    fn payload_to_json(payload: &Self::Payload, source: &Object, target: &Object) -> serde_json::Value;

    fn payload_from_json(value: &serde_json::Value, source: &Object, target: &Object) -> Result<Self::Payload>;
}

/// A morphism of a backend together with its endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<B: Backend> {
    source: Object,
    target: Object,
    payload: B::Payload,
}

impl<B: Backend> fmt::Debug for Morphism<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}: {}", self.source, self.target, B::render(&self.payload))
    }
}

impl<B: Backend> Morphism<B> {
    pub fn new(source: Object, target: Object, payload: B::Payload) -> Result<Self> {
        B::check_payload(&payload, source.dim(), target.dim())?;
        Ok(Morphism { source, target, payload })
    }

    pub(crate) fn new_unchecked(source: Object, target: Object, payload: B::Payload) -> Self {
        Morphism { source, target, payload }
    }

    pub fn identity(x: &Object) -> Self {
        Morphism { source: x.clone(), target: x.clone(), payload: B::identity(x.dim()) }
    }

    pub fn source(&self) -> &Object {
        &self.source
    }

    pub fn target(&self) -> &Object {
        &self.target
    }

    pub fn payload(&self) -> &B::Payload {
        &self.payload
    }

    pub fn into_payload(self) -> B::Payload {
        self.payload
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism<B>) -> Result<Morphism<B>> {
        if self.target != next.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: target {:?} is not source {:?}",
                self.target, next.source
            )));
        }
        let payload =
            B::compose(&next.payload, &self.payload, [self.source.dim(), self.target.dim(), next.target.dim()]);
        Ok(Morphism { source: self.source.clone(), target: next.target.clone(), payload })
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism<B>) -> Result<Morphism<B>> {
        f.then(self)
    }

    pub fn tensor(&self, other: &Morphism<B>) -> Morphism<B> {
        let payload = B::tensor(
            &self.payload,
            (self.source.dim(), self.target.dim()),
            &other.payload,
            (other.source.dim(), other.target.dim()),
        );
        Morphism { source: self.source.tensor(&other.source), target: self.target.tensor(&other.target), payload }
    }

    /// Left-bracketed tensor of several maps.
    pub fn tensor_all(maps: &[&Morphism<B>]) -> Morphism<B> {
        maps.iter().fold(Morphism::identity(&Object::unit()), |acc, m| acc.tensor(m))
    }

    pub fn is_parallel(&self, other: &Morphism<B>) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// `None` when equal, otherwise the first basis element where they differ.
    pub fn difference(&self, other: &Morphism<B>) -> Result<Option<Witness>> {
        if !self.is_parallel(other) {
            return Err(Error::ShapeMismatch(format!(
                "maps are not parallel: {:?} -> {:?} vs {:?} -> {:?}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(B::difference(self, other))
    }

    pub fn render(&self) -> String {
        B::render(&self.payload)
    }
}

/// Backends receiving finite sets: a function table becomes a morphism.
pub trait FromFunction: Backend {
    fn function_payload(table: &[usize], target_dim: usize) -> Self::Payload;

    /// The table of a payload that is induced by a function, if it is one.
    fn as_function(payload: &Self::Payload, source_dim: usize) -> Option<Vec<usize>>;
}

impl FromFunction for FinSet {
    fn function_payload(table: &[usize], _target_dim: usize) -> Table {
        Table(table.to_vec())
    }

    fn as_function(payload: &Table, _source_dim: usize) -> Option<Vec<usize>> {
        Some(payload.0.clone())
    }
}

impl FromFunction for FdVect {
    fn function_payload(table: &[usize], target_dim: usize) -> crate::linalg::ExactMatrix {
        let mut m = crate::linalg::ExactMatrix::zeros(target_dim, table.len());
        for (x, &y) in table.iter().enumerate() {
            m.set(y, x, crate::linalg::rat(1));
        }
        m
    }

    fn as_function(payload: &crate::linalg::ExactMatrix, source_dim: usize) -> Option<Vec<usize>> {
        (0..source_dim)
            .map(|x| match payload.column_entries(x) {
                [(y, v)] if *v == crate::linalg::rat(1) => Some(*y),
                _ => None,
            })
            .collect()
    }
}

/// The morphism induced by a function between the bases.
pub fn function<B: FromFunction>(source: &Object, target: &Object, table: &[usize]) -> Result<Morphism<B>> {
    if table.len() != source.dim() || table.iter().any(|&y| y >= target.dim()) {
        return Err(Error::ShapeMismatch(format!(
            "function table of length {} does not describe a map {} -> {}",
            table.len(),
            source.dim(),
            target.dim()
        )));
    }
    Ok(Morphism::new_unchecked(source.clone(), target.clone(), B::function_payload(table, target.dim())))
}

/// Reads a morphism back as a function table; `None` if it is not induced by one.
pub fn function_table<B: FromFunction>(m: &Morphism<B>) -> Option<Vec<usize>> {
    B::as_function(m.payload(), m.source().dim())
}

/// Equalizer of a parallel pair: the subobject and its inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equalizer<B: Backend> {
    pub object: Object,
    pub inclusion: Morphism<B>,
    pub pair: (Morphism<B>, Morphism<B>),
}

/// Coequalizer of a parallel pair: the quotient and its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequalizer<B: Backend> {
    pub object: Object,
    pub projection: Morphism<B>,
    pub pair: (Morphism<B>, Morphism<B>),
}

/// `f ⊗ g`.
pub fn tensor<B: Backend>(f: &Morphism<B>, g: &Morphism<B>) -> Morphism<B> {
    f.tensor(g)
}

/// The symmetry `x ⊗ y → y ⊗ x`.
pub fn braiding<B: Backend>(x: &Object, y: &Object) -> Morphism<B> {
    permutation(&[x, y], &[1, 0]).expect("two-factor swap is a permutation")
}

/// Inverse of the braiding `x ⊗ y → y ⊗ x`, i.e. a map `y ⊗ x → x ⊗ y`.
pub fn braiding_inverse<B: Backend>(x: &Object, y: &Object) -> Morphism<B> {
    // both backends are symmetric
    braiding(y, x)
}

/// The braiding isomorphism placing factor `perm[k]` in position `k`.
pub fn permutation<B: Backend>(factors: &[&Object], perm: &[usize]) -> Result<Morphism<B>> {
    crate::linalg::check_permutation(perm)?;
    if perm.len() != factors.len() {
        return Err(Error::ShapeMismatch(format!(
            "permutation of length {} applied to {} factors",
            perm.len(),
            factors.len()
        )));
    }
    let dims: Vec<usize> = factors.iter().map(|x| x.dim()).collect();
    let source = Object::tensor_all(factors);
    let permuted: Vec<&Object> = perm.iter().map(|&p| factors[p]).collect();
    let target = Object::tensor_all(&permuted);
    Ok(Morphism::new_unchecked(source, target, B::permutation(perm, &dims)))
}

/// Equalizer of a coreflexive pair. Coreflexivity is trusted here; use
/// [`coreflexive_equalizer_checked`] to verify a candidate retraction.
pub fn coreflexive_equalizer<B: Backend>(f: &Morphism<B>, g: &Morphism<B>) -> Result<Equalizer<B>> {
    if !f.is_parallel(g) {
        return Err(Error::ShapeMismatch("equalizer of a non-parallel pair".into()));
    }
    B::equalizer(f, g)
}

/// Equalizer of a pair together with a common retraction `r` (`r ∘ f = 1 = r ∘ g`).
pub fn coreflexive_equalizer_checked<B: Backend>(
    f: &Morphism<B>,
    g: &Morphism<B>,
    retraction: &Morphism<B>,
) -> Result<Equalizer<B>> {
    let id = Morphism::identity(f.source());
    for (name, m) in [("first", f), ("second", g)] {
        let composite = m.then(retraction)?;
        if let Some(w) = composite.difference(&id)? {
            return Err(Error::NotCoreflexive(format!("retraction fails on the {name} map at {w}")));
        }
    }
    coreflexive_equalizer(f, g)
}

/// Corestriction of `h` along the inclusion of `eq`, after checking that `h`
/// equalizes the defining pair.
pub fn factor_through_equalizer<B: Backend>(eq: &Equalizer<B>, h: &Morphism<B>) -> Result<Morphism<B>> {
    let (f, g) = &eq.pair;
    let fh = h.then(f)?;
    let gh = h.then(g)?;
    if let Some(witness) = fh.difference(&gh)? {
        return Err(Error::DoesNotEqualize { witness });
    }
    B::factor_through_mono(&eq.inclusion, h)
}

/// `u` with `mono ∘ u = h`.
pub fn factor_through_mono<B: Backend>(mono: &Morphism<B>, h: &Morphism<B>) -> Result<Morphism<B>> {
    if mono.target() != h.target() {
        return Err(Error::ShapeMismatch("factorization through a mono with a different target".into()));
    }
    B::factor_through_mono(mono, h)
}

/// Two-sided inverse of an isomorphism, or `ComparisonNotInvertible`.
pub fn invert<B: Backend>(iso: &Morphism<B>) -> Result<Morphism<B>> {
    let id_target = Morphism::identity(iso.target());
    let inverse = B::factor_through_mono(iso, &id_target).map_err(|e| Error::ComparisonNotInvertible(e.to_string()))?;
    let back = iso.then(&inverse)?;
    if let Some(w) = back.difference(&Morphism::identity(iso.source()))? {
        return Err(Error::ComparisonNotInvertible(format!("left inverse fails at {w}")));
    }
    Ok(inverse)
}

/// `Ok(())` when the maps agree, otherwise a `LawViolation` naming `law`.
pub fn require_equal<B: Backend>(law: &str, lhs: &Morphism<B>, rhs: &Morphism<B>) -> Result<()> {
    match lhs.difference(rhs)? {
        None => Ok(()),
        Some(witness) => Err(Error::LawViolation { law: law.to_string(), witness }),
    }
}
