//! The tropical matrix semiring `M_{m,n}(R_>=0)` with `⊕ = entrywise max`
//! and `⊙ = max-times product`, plus the structure theory that goes with
//! it:
//!
//! * invertible matrices are exactly the monomial ones (one nonzero entry
//!   per row and column); [`TropMatrix::monomial_decompose`] recovers the
//!   permutation and positive diagonal, [`TropMatrix::trop_inverse`] builds
//!   the two-sided inverse by entrywise reciprocal-transpose;
//! * tropically orthogonal matrices (unit-norm columns with pairwise zero
//!   tropical inner product) are exactly the permutation matrices;
//!   [`enumerate_orthogonal`] lists the whole monoid;
//! * idempotency and the necessary diagonal/off-diagonal inequalities for
//!   it;
//! * the column permutation action, the block-diagonal orthogonal action
//!   on invertible matrices, and the corner stabilization embedding.

use crate::error::TropError;
use crate::scalar::rel_eq;
use crate::vector::TropVector;

/// Dense row-major matrix over the max-times carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, TropError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(TropError::InvalidValue(format!(
                "bad matrix shape {rows}x{cols} with {} entries",
                data.len()
            )));
        }
        for &x in &data {
            if !(x.is_finite() && x >= 0.0) {
                return Err(TropError::InvalidValue(format!(
                    "matrix entries must be finite and nonnegative, got {x}"
                )));
            }
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, TropError> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(TropError::InvalidValue("ragged matrix rows".into()));
        }
        TropMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        TropMatrix { rows: n, cols: n, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        TropMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector::new((0..self.rows).map(|i| self.get(i, j)).collect())
            .expect("matrix invariant")
    }

    pub fn row_slices(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.cols)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![0.0; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.get(i, j);
            }
        }
        TropMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Entrywise maximum; the zero matrix is the identity.
    pub fn oplus(&self, other: &Self) -> Result<Self, TropError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(TropError::DimensionMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.max(*b))
                .collect(),
        })
    }

    /// Tropical product: entry `(i,j)` is `max_k A_ik * B_kj`.
    pub fn odot(&self, other: &Self) -> Result<Self, TropError> {
        if self.cols != other.rows {
            return Err(TropError::DimensionMismatch(self.cols, other.rows));
        }
        let mut data = vec![0.0; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut m = 0.0f64;
                for k in 0..self.cols {
                    m = m.max(self.get(i, k) * other.get(k, j));
                }
                data[i * other.cols + j] = m;
            }
        }
        Ok(TropMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Splits a square matrix into a column permutation of a positive
    /// diagonal, when every row and column has exactly one nonzero entry.
    pub fn monomial_decompose(&self) -> Result<MonomialDecomposition, TropError> {
        if !self.is_square() {
            return Err(TropError::NotMonomial);
        }
        let n = self.rows;
        let mut sigma = vec![usize::MAX; n];
        let mut diag = vec![0.0; n];
        let mut col_used = vec![false; n];
        for i in 0..n {
            let nonzeros: Vec<usize> = (0..n).filter(|&j| self.get(i, j) != 0.0).collect();
            let [j] = nonzeros[..] else {
                return Err(TropError::NotMonomial);
            };
            if col_used[j] {
                return Err(TropError::NotMonomial);
            }
            col_used[j] = true;
            sigma[i] = j;
            diag[i] = self.get(i, j);
        }
        Ok(MonomialDecomposition {
            sigma: Permutation::from_images(sigma).expect("row map is a bijection"),
            diag,
        })
    }

    /// The tropical inverse `B_ij = 1/A_ji` on the support of the
    /// transpose; defined exactly for monomial matrices, and then
    /// `A ⊙ B = B ⊙ A = I` holds exactly.
    pub fn trop_inverse(&self) -> Result<TropMatrix, TropError> {
        self.monomial_decompose().map_err(|_| TropError::NotInvertible)?;
        let n = self.rows;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(j, i);
                if a != 0.0 {
                    data[i * n + j] = 1.0 / a;
                }
            }
        }
        Ok(TropMatrix { rows: n, cols: n, data })
    }

    /// True iff `A ⊙ A = A` within the library relative tolerance.
    pub fn is_idempotent(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let sq = self.odot(self).expect("square");
        sq.data.iter().zip(&self.data).all(|(a, b)| rel_eq(*a, *b))
    }

    /// The necessary conditions for idempotency: `A_ii <= 1` and
    /// `A_ik * A_ki <= min(A_ii, A_kk)` for `i != k`.  Necessary only;
    /// the converse is not claimed.
    pub fn idempotent_necessary_conditions(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        for i in 0..n {
            if self.get(i, i) > 1.0 {
                return false;
            }
            for k in 0..n {
                if i != k && self.get(i, k) * self.get(k, i) > self.get(i, i).min(self.get(k, k)) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every column has tropical norm 1 and distinct columns have
    /// tropical inner product 0 — equivalently, iff the matrix is a
    /// permutation matrix.  Both characterizations are evaluated and must
    /// agree.
    pub fn is_trop_orthogonal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let cols: Vec<TropVector> = (0..n).map(|j| self.column(j)).collect();
        let metric = cols.iter().enumerate().all(|(j, cj)| {
            cj.norm().value() == 1.0
                && cols[j + 1..]
                    .iter()
                    .all(|ck| cj.inner(ck).expect("equal lengths").value() == 0.0)
        });
        let shape = self.is_permutation_matrix();
        assert_eq!(metric, shape, "orthogonality characterizations disagree");
        metric
    }

    fn is_permutation_matrix(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_used = vec![false; n];
        for i in 0..n {
            let ones: Vec<usize> = (0..n).filter(|&j| self.get(i, j) == 1.0).collect();
            let [j] = ones[..] else { return false };
            if col_used[j] || (0..n).any(|k| k != j && self.get(i, k) != 0.0) {
                return false;
            }
            col_used[j] = true;
        }
        true
    }

    /// The corner embedding into `(m+1)x(n+1)`: the matrix in the top-left
    /// block, a `1` at the new corner, zeros elsewhere.  Preserves ⊙ and
    /// maps orthogonal matrices to orthogonal matrices.
    pub fn stabilize(&self) -> TropMatrix {
        let (m, n) = (self.rows + 1, self.cols + 1);
        let mut data = vec![0.0; m * n];
        for i in 0..self.rows {
            data[i * n..i * n + self.cols].copy_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        data[m * n - 1] = 1.0;
        TropMatrix { rows: m, cols: n, data }
    }

    /// Approximate equality, entrywise at the library relative tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.data.iter().zip(&other.data).all(|(a, b)| rel_eq(*a, *b))
    }
}

/// Permutation of `{0, .., n-1}`, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, TropError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(TropError::InvalidValue("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `a` and `b` in `{0, .., n-1}`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// The permutation matrix carrying the column action of `self`.
    pub fn matrix(&self) -> TropMatrix {
        let n = self.images.len();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + self.images[i]] = 1.0;
        }
        TropMatrix { rows: n, cols: n, data }
    }
}

/// A square monomial matrix written as a column-permuted positive
/// diagonal: the sole nonzero of row `i` sits in column `sigma(i)` and
/// equals `diag[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialDecomposition {
    pub sigma: Permutation,
    pub diag: Vec<f64>,
}

impl MonomialDecomposition {
    /// Rebuilds the matrix from the permutation and diagonal.
    pub fn matrix(&self) -> TropMatrix {
        let n = self.diag.len();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + self.sigma.apply(i)] = self.diag[i];
        }
        TropMatrix { rows: n, cols: n, data }
    }
}

/// Column permutation of a matrix: column `j` of the result is column
/// `sigma^{-1}(j)` of the input.  This is a left action and equals right
/// ⊙-multiplication by the permutation matrix of `sigma`.
pub fn perm_act(sigma: &Permutation, a: &TropMatrix) -> Result<TropMatrix, TropError> {
    if sigma.len() != a.cols() {
        return Err(TropError::DimensionMismatch(sigma.len(), a.cols()));
    }
    let inv = sigma.inverse();
    let mut data = vec![0.0; a.rows() * a.cols()];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            data[i * a.cols() + j] = a.get(i, inv.apply(j));
        }
    }
    TropMatrix::new(a.rows(), a.cols(), data)
}

/// All tropical orthogonal `n x n` matrices: the `n!` permutation
/// matrices, the orbit of the identity under the column action.
/// Guarded at `n <= 8`.
pub fn enumerate_orthogonal(n: usize) -> Result<Vec<TropMatrix>, TropError> {
    const MAX_N: usize = 8;
    if n == 0 || n > MAX_N {
        return Err(TropError::TooLarge(n, MAX_N));
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    permute(&mut images, 0, &mut |imgs| {
        out.push(
            Permutation::from_images(imgs.to_vec())
                .expect("generated bijection")
                .matrix(),
        );
    });
    Ok(out)
}

fn permute(xs: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Left action of a pair of orthogonal matrices through the block-diagonal
/// embedding: `diag(P, Q) ⊙ A`.  Requires `A` invertible; the result is
/// again invertible.
pub fn block_act(p: &TropMatrix, q: &TropMatrix, a: &TropMatrix) -> Result<TropMatrix, TropError> {
    if !p.is_trop_orthogonal() || !q.is_trop_orthogonal() {
        return Err(TropError::NotOrthogonal);
    }
    let (n, k) = (p.rows(), q.rows());
    if !a.is_square() || a.rows() != n + k {
        return Err(TropError::DimensionMismatch(a.rows(), n + k));
    }
    a.monomial_decompose().map_err(|_| TropError::NotInvertible)?;
    let mut data = vec![0.0; (n + k) * (n + k)];
    for i in 0..n {
        for j in 0..n {
            data[i * (n + k) + j] = p.get(i, j);
        }
    }
    for i in 0..k {
        for j in 0..k {
            data[(n + i) * (n + k) + n + j] = q.get(i, j);
        }
    }
    let block = TropMatrix { rows: n + k, cols: n + k, data };
    block.odot(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> TropMatrix {
        TropMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn oplus_entrywise() {
        let a = m(&[&[1.0, 2.0], &[3.0, 0.0]]);
        assert_eq!(a.oplus(&TropMatrix::zeros(2, 2)).unwrap(), a);
        assert_eq!(
            a.oplus(&m(&[&[0.0, 4.0], &[1.0, 1.0]])).unwrap(),
            m(&[&[1.0, 4.0], &[3.0, 1.0]])
        );
        assert_eq!(a.oplus(&a).unwrap(), a);
        assert!(a.oplus(&TropMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn odot_maxtimes() {
        let a = m(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert_eq!(a.odot(&TropMatrix::identity(2)).unwrap(), a);
        assert_eq!(TropMatrix::identity(2).odot(&a).unwrap(), a);
        assert_eq!(
            a.odot(&m(&[&[1.0, 1.0], &[1.0, 0.0]])).unwrap(),
            m(&[&[2.0, 1.0], &[1.0, 0.0]])
        );
        let inv_pair = m(&[&[0.0, 2.0], &[3.0, 0.0]])
            .odot(&m(&[&[0.0, 1.0 / 3.0], &[0.5, 0.0]]))
            .unwrap();
        assert_eq!(inv_pair, TropMatrix::identity(2));
        assert!(a.odot(&TropMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn monomial_decomposition() {
        let d = TropMatrix::identity(2).monomial_decompose().unwrap();
        assert_eq!(d.sigma, Permutation::identity(2));
        assert_eq!(d.diag, vec![1.0, 1.0]);

        let a = m(&[&[0.0, 2.0], &[3.0, 0.0]]);
        let d = a.monomial_decompose().unwrap();
        assert_eq!(d.sigma, Permutation::transposition(2, 0, 1));
        assert_eq!(d.diag, vec![2.0, 3.0]);
        assert_eq!(d.matrix(), a);

        assert_eq!(
            m(&[&[1.0, 1.0], &[0.0, 1.0]]).monomial_decompose(),
            Err(TropError::NotMonomial)
        );
        // zero column: row map not injective
        assert_eq!(
            m(&[&[1.0, 0.0], &[1.0, 0.0]]).monomial_decompose(),
            Err(TropError::NotMonomial)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let i2 = TropMatrix::identity(2);
        assert_eq!(i2.trop_inverse().unwrap(), i2);

        let a = m(&[&[0.0, 2.0], &[3.0, 0.0]]);
        let b = a.trop_inverse().unwrap();
        assert_eq!(b, m(&[&[0.0, 1.0 / 3.0], &[0.5, 0.0]]));
        assert_eq!(a.odot(&b).unwrap(), i2);
        assert_eq!(b.odot(&a).unwrap(), i2);

        assert_eq!(
            m(&[&[1.0, 1.0], &[0.0, 1.0]]).trop_inverse(),
            Err(TropError::NotInvertible)
        );
    }

    #[test]
    fn idempotency() {
        assert!(TropMatrix::identity(3).is_idempotent());
        assert!(m(&[&[1.0, 1.0], &[1.0, 1.0]]).is_idempotent());
        assert!(!m(&[&[1.0, 0.0], &[0.0, 0.5]]).is_idempotent());

        assert!(TropMatrix::identity(3).idempotent_necessary_conditions());
        assert!(!m(&[&[2.0, 0.0], &[0.0, 1.0]]).idempotent_necessary_conditions());
        assert!(m(&[&[1.0, 1.0], &[1.0, 1.0]]).idempotent_necessary_conditions());
    }

    #[test]
    fn orthogonality() {
        assert!(TropMatrix::identity(4).is_trop_orthogonal());
        assert!(m(&[&[0.0, 1.0], &[1.0, 0.0]]).is_trop_orthogonal());
        assert!(!m(&[&[1.0, 1.0], &[0.0, 1.0]]).is_trop_orthogonal());
        assert!(!m(&[&[0.5, 0.0], &[0.0, 1.0]]).is_trop_orthogonal());
    }

    #[test]
    fn orthogonal_enumeration() {
        assert_eq!(enumerate_orthogonal(1).unwrap(), vec![TropMatrix::identity(1)]);
        let o2 = enumerate_orthogonal(2).unwrap();
        assert_eq!(o2.len(), 2);
        assert!(o2.contains(&TropMatrix::identity(2)));
        assert!(o2.contains(&m(&[&[0.0, 1.0], &[1.0, 0.0]])));
        assert_eq!(enumerate_orthogonal(3).unwrap().len(), 6);
        assert_eq!(enumerate_orthogonal(9), Err(TropError::TooLarge(9, 8)));
    }

    #[test]
    fn column_action() {
        let a = m(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert_eq!(perm_act(&Permutation::identity(2), &a).unwrap(), a);
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(
            perm_act(&swap, &TropMatrix::identity(2)).unwrap(),
            m(&[&[0.0, 1.0], &[1.0, 0.0]])
        );
        assert_eq!(perm_act(&swap, &a).unwrap(), m(&[&[2.0, 1.0], &[4.0, 3.0]]));
        // action by right multiplication with the permutation matrix
        assert_eq!(
            perm_act(&swap, &a).unwrap(),
            a.odot(&swap.matrix()).unwrap()
        );
    }

    #[test]
    fn block_action() {
        let i3 = TropMatrix::identity(3);
        let i1 = TropMatrix::identity(1);
        assert_eq!(
            block_act(&TropMatrix::identity(2), &i1, &i3).unwrap(),
            i3
        );
        let swap = Permutation::transposition(2, 0, 1).matrix();
        let acted = block_act(&swap, &i1, &i3).unwrap();
        assert_eq!(acted, m(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]));

        // the 1x1 orthogonal group is trivial: the identity orbit is itself
        let i2 = TropMatrix::identity(2);
        assert_eq!(block_act(&i1, &i1, &i2).unwrap(), i2);

        assert_eq!(
            block_act(&m(&[&[0.5]]), &i1, &i2),
            Err(TropError::NotOrthogonal)
        );
        assert_eq!(
            block_act(&i1, &i1, &m(&[&[1.0, 1.0], &[0.0, 1.0]])),
            Err(TropError::NotInvertible)
        );
    }

    #[test]
    fn stabilization() {
        assert_eq!(m(&[&[2.0]]).stabilize(), m(&[&[2.0, 0.0], &[0.0, 1.0]]));
        assert_eq!(TropMatrix::identity(3).stabilize(), TropMatrix::identity(4));
        let s = m(&[&[0.0, 1.0], &[1.0, 0.0]]).stabilize();
        assert!(s.is_trop_orthogonal());

        // ⊙ is preserved
        let a = m(&[&[1.0, 2.0], &[3.0, 0.5]]);
        let b = m(&[&[0.25, 1.0], &[2.0, 1.5]]);
        assert_eq!(
            a.odot(&b).unwrap().stabilize(),
            a.stabilize().odot(&b.stabilize()).unwrap()
        );
    }
}
