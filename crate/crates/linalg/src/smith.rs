use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::IntegerMatrix;

/// Result of [`smith_normal_form`]: `left * input * right == diagonal`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: IntegerMatrix,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// The diagonal entries `d_1 | d_2 | ...`, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k).map(|i| self.diagonal[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen by minimal absolute value; every row operation is
/// mirrored on `left` and every column operation on `right`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut left = IntegerMatrix::identity(rows);
    let mut right = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t..rows, t..cols) else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            // Column t below the pivot.
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.sub_row_multiple(i, t, &q);
                left.sub_row_multiple(i, t, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            if dirty {
                let (pi, _) = min_abs_entry(&d, t..rows, t..t + 1).expect("nonzero column");
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
                continue;
            }
            // Row t right of the pivot.
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.sub_col_multiple(j, t, &q);
                right.sub_col_multiple(j, t, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                let (_, pj) = min_abs_entry(&d, t..t + 1, t..cols).expect("nonzero row");
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and go around again.
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    d.sub_row_multiple(t, i, &minus_one);
                    left.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithForm {
        diagonal: d,
        left,
        right,
    }
}

/// Position of the nonzero entry of least magnitude inside the block, if any.
fn min_abs_entry(
    d: &IntegerMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &d[(i, j)];
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let prod = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        assert_eq!(prod, s.diagonal);
        for i in 0..s.diagonal.rows() {
            for j in 0..s.diagonal.cols() {
                if i != j {
                    assert!(s.diagonal[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]), "chain broken: {f:?}");
        }
        assert!(f.iter().all(|x| !x.is_negative()));
        assert_eq!(s.left.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.right.determinant().unwrap().abs(), BigInt::one());
        s
    }

    /// Independent oracle: d_1 * ... * d_k is the gcd of all k x k minors.
    fn minor_gcds(m: &IntegerMatrix) -> Vec<BigInt> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut out = Vec::new();
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub = IntegerMatrix::from_fn(k, k, |i, j| m[(rs[i], cs[j])].clone());
                    g = g.gcd(&sub.determinant().unwrap());
                }
            }
            out.push(g);
        }
        out
    }

    #[test]
    fn two_by_two_example() {
        let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
        // gcd of entries is 2, |det| = 8, so d2 = 8 / 2.
        assert_eq!(minor_gcds(&m), vec![BigInt::from(2), BigInt::from(8)]);
    }

    #[test]
    fn zero_and_identity() {
        let s = check(&IntegerMatrix::zeros(3, 2));
        assert!(s.invariant_factors().iter().all(Zero::is_zero));
        let s = check(&IntegerMatrix::identity(3));
        assert_eq!(s.invariant_factors(), vec![BigInt::one(); 3]);
    }

    #[test]
    fn divisibility_repair_is_needed_here() {
        // diag(2, 3) is diagonal but not in Smith form: expect diag(1, 6).
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = check(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn empty_shapes() {
        check(&IntegerMatrix::zeros(0, 3));
        check(&IntegerMatrix::zeros(3, 0));
    }

    proptest! {
        #[test]
        fn agrees_with_minor_oracle(rows in 1usize..4, cols in 1usize..4,
                                    seed in proptest::collection::vec(-6i64..7, 9)) {
            let m = IntegerMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 3 + j]));
            let s = check(&m);
            let f = s.invariant_factors();
            let mut prefix = BigInt::one();
            for (k, g) in minor_gcds(&m).into_iter().enumerate() {
                prefix *= &f[k];
                prop_assert_eq!(&prefix, &g);
            }
        }
    }
}
