use serde_json::Value;

use super::{Backend, BackendTag, Coequalizer, Equalizer, Morphism, Object, Witness};
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, permutation_map, ExactMatrix, LinalgError, Rational};

/// Finite-dimensional rational vector spaces with chosen bases; the tensor is
/// the Kronecker product.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FdVect;

impl Backend for FdVect {
    type Payload = ExactMatrix;

    fn tag() -> BackendTag {
        BackendTag::FdVect
    }

    fn check_payload(payload: &ExactMatrix, source_dim: usize, target_dim: usize) -> Result<()> {
        if payload.rows() != target_dim || payload.cols() != source_dim {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{} but the map is {source_dim} -> {target_dim}",
                payload.rows(),
                payload.cols()
            )));
        }
        Ok(())
    }

    fn identity(dim: usize) -> ExactMatrix {
        ExactMatrix::identity(dim)
    }

    fn compose(g: &ExactMatrix, f: &ExactMatrix, _dims: [usize; 3]) -> ExactMatrix {
        g.mul(f)
    }

    fn tensor(f: &ExactMatrix, _: (usize, usize), g: &ExactMatrix, _: (usize, usize)) -> ExactMatrix {
        f.kron(g)
    }

    fn permutation(perm: &[usize], dims: &[usize]) -> ExactMatrix {
        permutation_map(perm, dims).expect("permutation validated by caller")
    }

    fn equalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Equalizer<Self>> {
        let diff = f.payload().sub(g.payload());
        let free = diff.kernel_free_columns();
        let basis = diff.kernel_basis();
        let object = f.source().select(&free);
        let inclusion = Morphism::new_unchecked(object.clone(), f.source().clone(), basis);
        Ok(Equalizer { object, inclusion, pair: (f.clone(), g.clone()) })
    }

    fn coequalizer(f: &Morphism<Self>, g: &Morphism<Self>) -> Result<Coequalizer<Self>> {
        let diff = f.payload().sub(g.payload());
        let transposed = diff.transpose();
        let free = transposed.kernel_free_columns();
        let (q, _) = diff.cokernel_projection();
        let object = f.target().select(&free);
        let projection = Morphism::new_unchecked(f.target().clone(), object.clone(), q);
        Ok(Coequalizer { object, projection, pair: (f.clone(), g.clone()) })
    }

    fn factor_through_mono(mono: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        match mono.payload().factor_through_mono(h.payload()) {
            Ok(u) => Ok(Morphism::new_unchecked(h.source().clone(), mono.source().clone(), u)),
            Err(LinalgError::NotInImage { index }) => {
                Err(Error::NotInImage { what: "map".into(), witness: Witness::new(index, h.source().label(index)) })
            }
            Err(LinalgError::NotMono { rank, cols }) => Err(Error::NotMono(format!("rank {rank} < {cols} columns"))),
            Err(e) => Err(e.into()),
        }
    }

    fn factor_through_epi(epi: &Morphism<Self>, h: &Morphism<Self>) -> Result<Morphism<Self>> {
        match epi.payload().factor_through_epi(h.payload()) {
            Ok(u) => Ok(Morphism::new_unchecked(epi.target().clone(), h.target().clone(), u)),
            Err(LinalgError::NotInImage { index }) => Err(Error::NotInImage {
                what: "map does not vanish on the kernel, it".into(),
                witness: Witness::new(index, h.target().label(index)),
            }),
            Err(LinalgError::NotEpi { rank, rows }) => Err(Error::NotEpi(format!("rank {rank} < {rows} rows"))),
            Err(e) => Err(e.into()),
        }
    }

    fn difference(f: &Morphism<Self>, g: &Morphism<Self>) -> Option<Witness> {
        f.payload().first_differing_column(g.payload()).map(|c| Witness::new(c, f.source().label(c)))
    }

    fn render(payload: &ExactMatrix) -> String {
        payload.to_string()
    }

    fn payload_to_json(payload: &ExactMatrix, _source: &Object, _target: &Object) -> Value {
        matrix_to_json(payload)
    }

    fn payload_from_json(value: &Value, source: &Object, target: &Object) -> Result<ExactMatrix> {
        matrix_from_json(value, target.dim(), source.dim())
    }
}

/// Rows of rational literals.
pub fn matrix_to_json(m: &ExactMatrix) -> Value {
    Value::Array(
        m.to_literal_rows().into_iter().map(|row| Value::Array(row.into_iter().map(Value::String).collect())).collect(),
    )
}

/// Parses rows of rational literals (strings, or JSON integers) and checks the shape.
pub fn matrix_from_json(value: &Value, rows: usize, cols: usize) -> Result<ExactMatrix> {
    let items = value.as_array().ok_or_else(|| Error::Schema("matrix must be an array of rows".into()))?;
    let mut parsed = Vec::with_capacity(items.len());
    for (r, row) in items.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Schema(format!("matrix row {r} is not an array")))?;
        let entries = row
            .iter()
            .map(|entry| match entry {
                Value::String(s) => parse_rational(s).map_err(|e| Error::Schema(e.to_string())),
                Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or_default().into())),
                other => Err(Error::Schema(format!("matrix entry {other} is not a rational literal"))),
            })
            .collect::<Result<Vec<_>>>()?;
        parsed.push(entries);
    }
    let width = parsed.first().map_or(cols, Vec::len);
    let m = ExactMatrix::from_rows(parsed, width).map_err(|e| Error::Schema(e.to_string()))?;
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::Schema(format!("matrix is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(m)
}
