use serde_json::Value;

use super::{Backend, BackendTag, Coequalizer, Equalizer, Label, Morphism, Object, Witness};
use crate::error::{Error, Result};
use crate::linalg::permuted_index;

/// Finite sets and functions; the tensor is the cartesian product.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FinSet;

/// A function `{0..n} → {0..m}` stored as its table of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table(pub Vec<usize>);

impl Table {
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }
}

impl Backend for FinSet {
    type Payload = Table;

    fn tag() -> BackendTag {
        BackendTag::FinSet
    }

    fn check_payload(payload: &Table, source_dim: usize, target_dim: usize) -> Result<()> {
        if payload.0.len() != source_dim {
            return Err(Error::ShapeMismatch(format!(
                "function table has {} entries for a domain of size {source_dim}",
                payload.0.len()
            )));
        }
        if let Some((x, &y)) = payload.0.iter().enumerate().find(|(_, &y)| y >= target_dim) {
            return Err(Error::ShapeMismatch(format!(
                "function sends element {x} to {y}, outside a codomain of size {target_dim}"
            )));
        }
        Ok(())
    }

    fn identity(dim: usize) -> Table {
        Table((0..dim).collect())
    }

    fn compose(g: &Table, f: &Table, _dims: [usize; 3]) -> Table {
        Table(f.0.iter().map(|&y| g.0[y]).collect())
    }

    fn tensor(f: &Table, f_dims: (usize, usize), g: &Table, g_dims: (usize, usize)) -> Table {
        let mut out = Vec::with_capacity(f_dims.0 * g_dims.0);
        for &a in &f.0 {
            for &b in &g.0 {
                out.push(a * g_dims.1 + b);
            }
        }
        Table(out)
    }

    fn permutation(perm: &[usize], dims: &[usize]) -> Table {
        let total: usize = dims.iter().product();
        Table((0..total).map(|x| permuted_index(perm, dims, x)).collect())
    }

    fn equalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Equalizer<Self>> {
        let keep: Vec<usize> = (0..f.source().dim()).filter(|&x| f.payload().0[x] == g.payload().0[x]).collect();
        let object = f.source().select(&keep);
        let inclusion = Morphism::new_unchecked(object.clone(), f.source().clone(), Table(keep));
        Ok(Equalizer { object, inclusion, pair: (f.clone(), g.clone()) })
    }

    fn coequalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Coequalizer<Self>> {
        let n = f.target().dim();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for (&a, &b) in f.payload().0.iter().zip(&g.payload().0) {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            // the smaller element represents its class
            if ra < rb {
                parent[rb] = ra;
            } else if rb < ra {
                parent[ra] = rb;
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let reps: Vec<usize> = (0..n).filter(|&x| roots[x] == x).collect();
        let class_of: Vec<usize> =
            roots.iter().map(|r| reps.binary_search(r).expect("root is a representative")).collect();
        let object = f.target().select(&reps);
        let projection = Morphism::new_unchecked(f.target().clone(), object.clone(), Table(class_of));
        Ok(Coequalizer { object, projection, pair: (f.clone(), g.clone()) })
    }

    fn factor_through_mono(mono: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        let mut preimage = vec![None; mono.target().dim()];
        for (x, &y) in mono.payload().0.iter().enumerate() {
            if preimage[y].replace(x).is_some() {
                return Err(Error::NotMono(format!("element {} is hit twice", mono.target().label(y))));
            }
        }
        let mut table = Vec::with_capacity(h.source().dim());
        for (w, &y) in h.payload().0.iter().enumerate() {
            match preimage[y] {
                Some(x) => table.push(x),
                None => {
                    return Err(Error::NotInImage { what: "map".into(), witness: Witness::new(w, h.source().label(w)) })
                }
            }
        }
        Ok(Morphism::new_unchecked(h.source().clone(), mono.source().clone(), Table(table)))
    }

    fn factor_through_epi(epi: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        let mut table: Vec<Option<usize>> = vec![None; epi.target().dim()];
        for (x, &q) in epi.payload().0.iter().enumerate() {
            let value = h.payload().0[x];
            match table[q] {
                None => table[q] = Some(value),
                Some(v) if v == value => {}
                Some(_) => {
                    return Err(Error::NotInImage {
                        what: "map is not constant on a fibre, it".into(),
                        witness: Witness::new(x, epi.source().label(x)),
                    })
                }
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(q, v)| v.ok_or_else(|| Error::NotEpi(format!("element {} is not hit", epi.target().label(q)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism::new_unchecked(epi.target().clone(), h.target().clone(), Table(table)))
    }

    fn difference(f: &Morphism<Self>, g: &Morphism<Self>) -> Option<Witness> {
        f.payload().0.iter().zip(&g.payload().0).position(|(a, b)| a != b).map(|x| Witness::new(x, f.source().label(x)))
    }

    fn render(payload: &Table) -> String {
        format!("{:?}", payload.0)
    }

    fn payload_to_json(payload: &Table, _source: &Object, target: &Object) -> Value {
        Value::Array(payload.0.iter().map(|&y| Value::String(target.label(y).to_string())).collect())
    }

    fn payload_from_json(value: &Value, source: &Object, target: &Object) -> Result<Table> {
        let items =
            value.as_array().ok_or_else(|| Error::Schema("function table must be an array of target labels".into()))?;
        if items.len() != source.dim() {
            return Err(Error::Schema(format!(
                "function table has {} entries, domain has {}",
                items.len(),
                source.dim()
            )));
        }
        let table = items
            .iter()
            .map(|item| {
                let text =
                    item.as_str().ok_or_else(|| Error::Schema("function table entries must be strings".into()))?;
                target
                    .index_of(&Label::parse(text))
                    .ok_or_else(|| Error::Schema(format!("unknown codomain element '{text}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Table(table))
    }
}
