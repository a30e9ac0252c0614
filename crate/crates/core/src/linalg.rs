//! Exact sparse linear algebra over the rationals.
//!
//! Matrices are row-major and a matrix with `r` rows and `c` columns represents a
//! linear map from a `c`-dimensional space to an `r`-dimensional one, so the
//! column `j` is the image of the `j`-th basis vector. Composition is matrix
//! multiplication `g * f`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `numer / denom`. Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"` or an integer literal.
pub fn parse_rational(text: &str) -> Result<Rational, LinalgError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(LinalgError::BadLiteral(text.to_string()));
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| LinalgError::BadLiteral(text.to_string()))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| LinalgError::BadLiteral(text.to_string()))?;
        if den.is_zero() {
            return Err(LinalgError::BadLiteral(text.to_string()));
        }
        Ok(Rational::new(num, den))
    } else {
        BigInt::from_str(trimmed).map(Rational::from_integer).map_err(|_| LinalgError::BadLiteral(text.to_string()))
    }
}

/// Formats a rational as `"p/q"`, or as a bare integer when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("matrix has {found} entries, expected {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("not in image: column {index} of the right-hand side does not factor")]
    NotInImage { index: usize },
    #[error("map is not a monomorphism: rank {rank} < {cols}")]
    NotMono { rank: usize, cols: usize },
    #[error("map is not an epimorphism: rank {rank} < {rows}")]
    NotEpi { rank: usize, rows: usize },
    #[error("not a permutation of 0..{len}: {perm:?}")]
    BadPermutation { perm: Vec<usize>, len: usize },
    #[error("invalid rational literal '{0}'")]
    BadLiteral(String),
}

/// Sparse matrix of exact rationals, stored column by column as `(row, value)`
/// pairs sorted by row with no explicit zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

type SparseVec = Vec<(usize, Rational)>;

fn zero() -> &'static Rational {
    static ZERO: OnceLock<Rational> = OnceLock::new();
    ZERO.get_or_init(Rational::zero)
}

/// `a + factor * b` for sparse vectors.
fn axpy(a: &SparseVec, factor: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |e| e.0);
        let kb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, factor * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + factor * &b[j].1;
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(v: &SparseVec, k: usize) -> Option<&Rational> {
    v.binary_search_by_key(&k, |e| e.0).ok().map(|p| &v[p].1)
}

/// Row-reduces sparse rows in place, choosing pivots only among the first
/// `limit` columns, and returns the pivot columns. Row operations act on whole
/// rows, so trailing columns behave as an augmented block.
fn eliminate(rows: &mut [SparseVec], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..limit {
        if row == rows.len() {
            break;
        }
        let Some(p) = (row..rows.len()).find(|&r| rows[r].first().is_some_and(|e| e.0 == col)) else {
            continue;
        };
        rows.swap(row, p);
        let inv = rows[row][0].1.recip();
        if !inv.is_one() {
            for (_, v) in rows[row].iter_mut() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut rows[row]);
        for (r, other) in rows.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            if let Some(factor) = lookup(other, col) {
                let factor = -factor;
                *other = axpy(other, &factor, &pivot_row);
            }
        }
        rows[row] = pivot_row;
        pivots.push(col);
        row += 1;
    }
    pivots
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        ExactMatrix { rows: n, cols: n, data }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount { rows, cols, found: entries.len() });
        }
        let mut data = vec![Vec::new(); cols];
        for (k, v) in entries.into_iter().enumerate() {
            if !v.is_zero() {
                data[k % cols].push((k / cols, v));
            }
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows. An empty row list needs `cols` to fix the shape.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = vec![Vec::new(); cols];
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Ragged { row: r, found: row.len(), expected: cols });
            }
            for (c, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    data[c].push((r, v));
                }
            }
        }
        Ok(ExactMatrix { rows: n_rows, cols, data })
    }

    /// Builds a matrix from `(row, column, value)` triples; repeated positions are summed.
    pub fn from_triples(rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); cols];
        for (r, c, v) in triples {
            assert!(r < rows && c < cols, "matrix index out of range");
            data[c].push((r, v));
        }
        for col in data.iter_mut() {
            col.sort_by_key(|e| e.0);
            let mut merged: SparseVec = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((last, acc)) if *last == r => *acc += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        ExactMatrix { rows, cols, data }
    }

    /// Integer matrix literal; panics on ragged input. Intended for fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        Self::from_rows(data, cols).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        lookup(&self.data[c], r).unwrap_or(zero())
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        let col = &mut self.data[c];
        match col.binary_search_by_key(&r, |e| e.0) {
            Ok(k) if value.is_zero() => {
                col.remove(k);
            }
            Ok(k) => col[k].1 = value,
            Err(_) if value.is_zero() => {}
            Err(k) => col.insert(k, (r, value)),
        }
    }

    /// Nonzero entries of column `c` as `(row, value)`, sorted by row.
    pub fn column_entries(&self, c: usize) -> &[(usize, Rational)] {
        &self.data[c]
    }

    pub fn row(&self, r: usize) -> Vec<Rational> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows];
        for (r, v) in &self.data[c] {
            out[*r] = v.clone();
        }
        out
    }

    /// Row-major dense entries.
    pub fn entries(&self) -> Vec<Rational> {
        (0..self.rows).flat_map(|r| self.row(r)).collect()
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                data[*r].push((c, v.clone()));
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// The rows as sparse vectors.
    fn sparse_rows(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    fn from_sparse_rows(rows: Vec<SparseVec>, cols: usize) -> Self {
        ExactMatrix { rows: cols, cols: rows.len(), data: rows }.transpose()
    }

    /// Matrix product `self * rhs`. Panics on a shape mismatch; callers that
    /// accept user data check shapes first.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut acc: Vec<Option<Rational>> = vec![None; self.rows];
        let mut touched = Vec::new();
        let data = rhs
            .data
            .iter()
            .map(|col| {
                for (t, b) in col {
                    for (i, a) in &self.data[*t] {
                        let term = if b.is_one() { a.clone() } else { a * b };
                        match &mut acc[*i] {
                            Some(v) => *v += term,
                            slot => {
                                *slot = Some(term);
                                touched.push(*i);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                touched.drain(..).filter_map(|i| acc[i].take().filter(|v| !v.is_zero()).map(|v| (i, v))).collect()
            })
            .collect();
        ExactMatrix { rows: self.rows, cols: rhs.cols, data }
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| axpy(a, &Rational::one(), b)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let minus_one = -Rational::one();
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| axpy(a, &minus_one, b)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, factor: &Rational) -> ExactMatrix {
        if factor.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|col| col.iter().map(|(r, v)| (*r, v * factor)).collect()).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product with the left factor major.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.cols * rhs.cols);
        for ca in &self.data {
            for cb in &rhs.data {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ia, a) in ca {
                    for (ib, b) in cb {
                        col.push((ia * rhs.rows + ib, a * b));
                    }
                }
                data.push(col);
            }
        }
        ExactMatrix { rows: self.rows * rhs.rows, cols: self.cols * rhs.cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut rows = self.sparse_rows();
        let pivots = eliminate(&mut rows, self.cols);
        (Self::from_sparse_rows(rows, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space. Each basis vector has a one in
    /// its own free coordinate and zeros in the other free coordinates, so the
    /// result is canonical.
    pub fn kernel_basis(&self) -> ExactMatrix {
        let mut rows = self.sparse_rows();
        let pivots = eliminate(&mut rows, self.cols);
        let free = free_columns(self.cols, &pivots);
        let mut position = vec![None; self.cols];
        for (k, &f) in free.iter().enumerate() {
            position[f] = Some(k);
        }
        let mut triples: Vec<(usize, usize, Rational)> =
            free.iter().enumerate().map(|(k, &f)| (f, k, Rational::one())).collect();
        for (prow, &pcol) in pivots.iter().enumerate() {
            for (c, v) in &rows[prow] {
                if let Some(k) = position[*c] {
                    triples.push((pcol, k, -v));
                }
            }
        }
        Self::from_triples(self.cols, free.len(), triples)
    }

    /// Free (non-pivot) column indices of the null space basis returned by
    /// [`kernel_basis`](Self::kernel_basis), in order.
    pub fn kernel_free_columns(&self) -> Vec<usize> {
        let (_, pivots) = self.rref();
        free_columns(self.cols, &pivots)
    }

    /// Returns `(q, d)` with `q` a `d x rows` matrix of full row rank, `q * self = 0`
    /// and `d = rows - rank`.
    pub fn cokernel_projection(&self) -> (ExactMatrix, usize) {
        let q = self.transpose().kernel_basis().transpose();
        let d = q.rows;
        (q, d)
    }

    /// The unique `u` with `self * u = h`, where `self` has full column rank.
    pub fn factor_through_mono(&self, h: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        assert_eq!(self.rows, h.rows, "factor_through_mono shape mismatch");
        let ci = self.cols;
        let mut rows: Vec<SparseVec> = self
            .sparse_rows()
            .into_iter()
            .zip(h.sparse_rows())
            .map(|(a, b)| a.into_iter().chain(b.into_iter().map(|(c, v)| (ci + c, v))).collect())
            .collect();
        let pivots = eliminate(&mut rows, ci);
        if pivots.len() < ci {
            return Err(LinalgError::NotMono { rank: pivots.len(), cols: ci });
        }
        if let Some(index) = rows[ci..].iter().filter_map(|row| row.first().map(|(c, _)| c - ci)).min() {
            return Err(LinalgError::NotInImage { index });
        }
        rows.truncate(ci);
        let solution = rows
            .into_iter()
            .map(|row| row.into_iter().filter(|(c, _)| *c >= ci).map(|(c, v)| (c - ci, v)).collect())
            .collect();
        Ok(Self::from_sparse_rows(solution, h.cols))
    }

    /// The unique `u` with `u * self = h`, where `self` has full row rank.
    /// A `NotInImage` error names the offending row of `h`.
    pub fn factor_through_epi(&self, h: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        match self.transpose().factor_through_mono(&h.transpose()) {
            Ok(u) => Ok(u.transpose()),
            Err(LinalgError::NotMono { rank, .. }) => Err(LinalgError::NotEpi { rank, rows: self.rows }),
            Err(e) => Err(e),
        }
    }

    /// First column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &ExactMatrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).position(|(a, b)| a != b)
    }

    /// Entries rendered as rational literals, row by row.
    pub fn to_literal_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(format_rational).collect()).collect()
    }

    /// Parses rows of rational literals. `cols` is required when there are no rows.
    pub fn from_literal_rows(rows: &[Vec<String>], cols: usize) -> Result<Self, LinalgError> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(parsed, cols)
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.kron(b)
}

pub fn kernel_basis(m: &ExactMatrix) -> ExactMatrix {
    m.kernel_basis()
}

pub fn cokernel_projection(m: &ExactMatrix) -> (ExactMatrix, usize) {
    m.cokernel_projection()
}

pub fn factor_through_mono(i: &ExactMatrix, h: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
    i.factor_through_mono(h)
}

/// Checks that `perm` is a permutation of `0..n`.
pub fn check_permutation(perm: &[usize]) -> Result<(), LinalgError> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(LinalgError::BadPermutation { perm: perm.to_vec(), len: n });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Maps a flat index of the input tensor `dims[0] ⊗ … ⊗ dims[n-1]` to the flat
/// index of the permuted tensor whose `k`-th factor is input factor `perm[k]`.
pub(crate) fn permuted_index(perm: &[usize], dims: &[usize], flat: usize) -> usize {
    let n = dims.len();
    let mut digits = vec![0usize; n];
    let mut rest = flat;
    for k in (0..n).rev() {
        digits[k] = rest % dims[k];
        rest /= dims[k];
    }
    perm.iter().fold(0, |acc, &p| acc * dims[p] + digits[p])
}

/// The 0/1 matrix of the braiding isomorphism that puts input factor
/// `perm[k]` in output position `k`. With zero-based indices, `[1, 0, 2]` is
/// the symmetry usually written `c_{213}`.
pub fn permutation_map(perm: &[usize], dims: &[usize]) -> Result<ExactMatrix, LinalgError> {
    check_permutation(perm)?;
    if perm.len() != dims.len() {
        return Err(LinalgError::BadPermutation { perm: perm.to_vec(), len: dims.len() });
    }
    let total: usize = dims.iter().product();
    let data = (0..total).map(|x| vec![(permuted_index(perm, dims, x), Rational::one())]).collect();
    Ok(ExactMatrix { rows: total, cols: total, data })
}
