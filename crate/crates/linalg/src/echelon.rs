use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{IntegerMatrix, LinalgError, SparseMatrix};

/// Column echelon form of a matrix, computed by unimodular column operations.
///
/// Rows are scanned top to bottom. At each row the still-active columns are
/// combined by a Euclidean sweep until at most one of them is nonzero there;
/// that survivor becomes a pivot and leaves the active set. Columns of the
/// accumulated transform that never become pivots span the kernel, and since
/// the transform is unimodular they form a basis of the kernel lattice
/// (not merely of a finite-index sublattice).
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    rows: usize,
    cols: usize,
    /// Columns of the unimodular transform `T`; `transform[j]` has length `cols`.
    transform: Vec<Vec<BigInt>>,
    /// `(row, transform column)` in the order pivots were found.
    pivots: Vec<(usize, usize)>,
    active: Vec<usize>,
}

impl ColumnEchelon {
    pub fn new(m: &IntegerMatrix) -> Self {
        let sparse: Vec<Vec<(usize, BigInt)>> = (0..m.rows()).map(|i| m.sparse_row(i)).collect();
        Self::from_sparse_rows(m.rows(), m.cols(), &sparse)
    }

    pub fn from_sparse(m: &SparseMatrix) -> Self {
        Self::from_sparse_rows(m.rows(), m.cols(), m.row_data())
    }

    fn from_sparse_rows(rows: usize, cols: usize, sparse: &[Vec<(usize, BigInt)>]) -> Self {
        let mut transform: Vec<Vec<BigInt>> = (0..cols)
            .map(|j| {
                let mut c = vec![BigInt::zero(); cols];
                c[j] = BigInt::from(1);
                c
            })
            .collect();
        let mut active: Vec<usize> = (0..cols).collect();
        let mut pivots = Vec::new();

        for (r, row) in sparse.iter().enumerate() {
            if row.is_empty() || active.is_empty() {
                continue;
            }
            let mut vals: Vec<(usize, BigInt)> = active
                .iter()
                .filter_map(|&j| {
                    let v: BigInt = row
                        .iter()
                        .filter(|(k, _)| !transform[j][*k].is_zero())
                        .map(|(k, a)| a * &transform[j][*k])
                        .sum();
                    (!v.is_zero()).then_some((j, v))
                })
                .collect();

            while vals.len() > 1 {
                let best = (0..vals.len())
                    .min_by(|&a, &b| vals[a].1.abs().cmp(&vals[b].1.abs()))
                    .expect("nonempty");
                let (pj, pv) = vals[best].clone();
                let pivot_col = transform[pj].clone();
                for (idx, (j, v)) in vals.iter_mut().enumerate() {
                    if idx == best {
                        continue;
                    }
                    let (q, rem) = v.div_rem(&pv);
                    if q.is_zero() {
                        continue;
                    }
                    for (t, p) in transform[*j].iter_mut().zip(&pivot_col) {
                        if !p.is_zero() {
                            *t -= &q * p;
                        }
                    }
                    *v = rem;
                }
                vals.retain(|(_, v)| !v.is_zero());
            }

            if let Some(&(pj, _)) = vals.first() {
                pivots.push((r, pj));
                active.retain(|&j| j != pj);
            }
        }

        ColumnEchelon {
            rows,
            cols,
            transform,
            pivots,
            active,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.active.len()
    }

    /// A basis of the kernel lattice `{x : M x = 0}` as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        self.active.iter().map(|&j| self.transform[j].clone()).collect()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
}

/// Solves `M x = b` over the integers for many right-hand sides.
///
/// Built on [`ColumnEchelon`]: `M T = H` with `H` in column echelon form, so
/// `M x = b` has an integral solution iff forward substitution through the
/// pivot rows of `H` goes through with exact divisions and leaves no residue.
#[derive(Debug, Clone)]
pub struct LatticeSolver {
    echelon: ColumnEchelon,
    /// Nonzero entries of `M T` in each pivot column, sorted by row.
    reduced: Vec<Vec<(usize, BigInt)>>,
    pivot_at_row: Vec<Option<usize>>,
}

impl LatticeSolver {
    pub fn new(m: &IntegerMatrix) -> Self {
        Self::from_sparse(&SparseMatrix::from_dense(m))
    }

    pub fn from_sparse(m: &SparseMatrix) -> Self {
        let sparse = m.row_data();
        let echelon = ColumnEchelon::from_sparse_rows(m.rows(), m.cols(), sparse);
        let mut pivot_at_row = vec![None; m.rows()];
        let mut reduced = Vec::with_capacity(echelon.pivots.len());
        for (t, &(r, j)) in echelon.pivots.iter().enumerate() {
            pivot_at_row[r] = Some(t);
            let col = &echelon.transform[j];
            let entries = sparse
                .iter()
                .enumerate()
                .skip(r)
                .filter_map(|(i, row)| {
                    let v: BigInt = row.iter().map(|(k, a)| a * &col[*k]).sum();
                    (!v.is_zero()).then_some((i, v))
                })
                .collect();
            reduced.push(entries);
        }
        LatticeSolver {
            echelon,
            reduced,
            pivot_at_row,
        }
    }

    pub fn echelon(&self) -> &ColumnEchelon {
        &self.echelon
    }

    /// An integral `x` with `M x = b`, or `None` when `b` is outside the
    /// lattice spanned by the columns of `M`.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
        let (rows, cols) = self.echelon.shape();
        if b.len() != rows {
            return Err(LinalgError::Dimension(format!(
                "right-hand side of length {} for a matrix with {rows} rows",
                b.len()
            )));
        }
        let mut residual = b.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.reduced.len()];
        for r in 0..rows {
            if residual[r].is_zero() {
                continue;
            }
            let Some(t) = self.pivot_at_row[r] else {
                return Ok(None);
            };
            let column = &self.reduced[t];
            let head = &column[0];
            debug_assert_eq!(head.0, r);
            let (q, rem) = residual[r].div_rem(&head.1);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (i, v) in column {
                residual[*i] -= &q * v;
            }
            coeffs[t] = q;
        }
        let mut x = vec![BigInt::zero(); cols];
        for (t, q) in coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let col = &self.echelon.transform[self.echelon.pivots[t].1];
            for (xi, c) in x.iter_mut().zip(col) {
                if !c.is_zero() {
                    *xi += q * c;
                }
            }
        }
        Ok(Some(x))
    }
}

pub fn rank(m: &IntegerMatrix) -> usize {
    ColumnEchelon::new(m).rank()
}

pub fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    ColumnEchelon::new(m).kernel_basis()
}

pub fn solve_in_lattice(m: &IntegerMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    LatticeSolver::new(m).solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smith_normal_form;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_one_kernel() {
        let m = IntegerMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(k[0] == big(&[1, -1]) || k[0] == big(&[-1, 1]));
    }

    #[test]
    fn empty_matrix_has_full_kernel() {
        let m = IntegerMatrix::zeros(0, 3);
        assert_eq!(rank(&m), 0);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3);
        let basis = IntegerMatrix::from_columns(3, &k);
        assert_eq!(basis.determinant().unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn kernel_is_saturated() {
        // The kernel of (2 4) is spanned by (2, -1); (4, -2) would not be saturated.
        let m = IntegerMatrix::from_rows(&[vec![2, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(k[0] == big(&[2, -1]) || k[0] == big(&[-2, 1]));
    }

    #[test]
    fn scalar_solves() {
        let m = IntegerMatrix::from_rows(&[vec![2]]);
        assert_eq!(solve_in_lattice(&m, &big(&[4])).unwrap(), Some(big(&[2])));
        assert_eq!(solve_in_lattice(&m, &big(&[3])).unwrap(), None);
        assert!(solve_in_lattice(&m, &big(&[1, 2])).is_err());
    }

    #[test]
    fn inconsistent_rational_system() {
        // x + y = 1 and x + y = 2 has no solution at all.
        let m = IntegerMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(solve_in_lattice(&m, &big(&[1, 2])).unwrap(), None);
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in 0usize..5, cols in 1usize..5,
                             seed in proptest::collection::vec(-3i64..4, 25)) {
            let m = IntegerMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 5 + j]));
            let e = ColumnEchelon::new(&m);
            prop_assert_eq!(e.rank() + e.nullity(), cols);
            prop_assert_eq!(e.rank(), smith_normal_form(&m).rank());
            for v in e.kernel_basis() {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn image_vectors_are_solved(rows in 1usize..5, cols in 1usize..5,
                                    seed in proptest::collection::vec(-3i64..4, 25),
                                    x in proptest::collection::vec(-5i64..6, 5)) {
            let m = IntegerMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 5 + j]));
            let x = big(&x[..cols]);
            let b = m.mul_vec(&x).unwrap();
            let sol = solve_in_lattice(&m, &b).unwrap().expect("b is in the image");
            prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }

        #[test]
        fn doubled_primitive_vectors_stay_out(rows in 1usize..4,
                                              seed in proptest::collection::vec(-3i64..4, 4)) {
            // Columns 2*e_i span the even lattice; an odd right-hand side is never reachable.
            let m = IntegerMatrix::from_fn(rows, rows, |i, j| BigInt::from(if i == j { 2 } else { 0 }));
            let mut b = big(&seed[..rows]);
            b[0] = BigInt::from(2 * seed[0] + 1);
            prop_assert_eq!(solve_in_lattice(&m, &b).unwrap(), None);
        }
    }
}
