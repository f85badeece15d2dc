//! Dense integer-valued functions on `A_n^k`.
//!
//! The value at `(x_1, …, x_k)` lives at index `Σ (x_i − 1)·2^{(k−i)n}`, so
//! `x_1` is the most significant coordinate. Arity 0 is allowed and holds a
//! single integer (the cochains on `C_0 = Z`).

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{LaverError, Result};
use crate::table::Element;

/// Largest `k·n` for which a cochain is materialized (`2^24` values).
pub const MAX_COCHAIN_BITS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cochain {
    n: u32,
    k: u32,
    values: Vec<i64>,
}

fn check_shape(n: u32, k: u32) -> Result<()> {
    if k * n > MAX_COCHAIN_BITS {
        return Err(LaverError::SizeLimit {
            what: "cochain (k·n)",
            requested: k * n,
            cap: MAX_COCHAIN_BITS,
        });
    }
    Ok(())
}

impl Cochain {
    pub fn zero(n: u32, k: u32) -> Result<Self> {
        Self::constant(n, k, 0)
    }

    pub fn constant(n: u32, k: u32, c: i64) -> Result<Self> {
        check_shape(n, k)?;
        Ok(Cochain {
            n,
            k,
            values: vec![c; 1 << (k * n)],
        })
    }

    pub fn from_values(n: u32, k: u32, values: Vec<i64>) -> Result<Self> {
        check_shape(n, k)?;
        if values.len() != 1 << (k * n) {
            return Err(LaverError::Domain(format!(
                "a {k}-cochain on A_{n} needs {} values, got {}",
                1u64 << (k * n),
                values.len()
            )));
        }
        Ok(Cochain { n, k, values })
    }

    /// Evaluates `f` on every tuple in index order.
    pub fn from_fn(n: u32, k: u32, mut f: impl FnMut(&[Element]) -> i64) -> Result<Self> {
        check_shape(n, k)?;
        let mut values = Vec::with_capacity(1 << (k * n));
        let mut tuple = vec![1; k as usize];
        for index in 0..1usize << (k * n) {
            tuple_into(n, index, &mut tuple);
            values.push(f(&tuple));
        }
        Ok(Cochain { n, k, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn arity(&self) -> u32 {
        self.k
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn index_of(&self, tuple: &[Element]) -> Result<usize> {
        if tuple.len() != self.k as usize {
            return Err(LaverError::Arity {
                expected: self.k as usize,
                actual: tuple.len(),
            });
        }
        let size = 1u32 << self.n;
        if let Some(&bad) = tuple.iter().find(|&&x| x == 0 || x > size) {
            return Err(LaverError::Domain(format!("{bad} is not an element of A_{}", self.n)));
        }
        Ok(index_of(self.n, tuple))
    }

    pub fn get(&self, tuple: &[Element]) -> Result<i64> {
        Ok(self.values[self.index_of(tuple)?])
    }

    /// Unchecked evaluation for hot loops.
    #[inline]
    pub fn at(&self, tuple: &[Element]) -> i64 {
        self.values[index_of(self.n, tuple)]
    }

    pub fn set(&mut self, tuple: &[Element], value: i64) -> Result<()> {
        let i = self.index_of(tuple)?;
        self.values[i] = value;
        Ok(())
    }

    pub fn tuple_at(&self, index: usize) -> Vec<Element> {
        let mut t = vec![1; self.k as usize];
        tuple_into(self.n, index, &mut t);
        t
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(LaverError::Arity {
                expected: self.k as usize,
                actual: other.k as usize,
            });
        }
        if self.n != other.n {
            return Err(LaverError::Domain(format!(
                "cochains on A_{} and A_{} cannot be combined",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self> {
        self.check_same_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + c * b).collect();
        Ok(Cochain { values, ..*self })
    }

    /// `Σ c_i·φ_i` over cochains of a common shape.
    pub fn linear_combination<'a>(n: u32, k: u32, terms: impl IntoIterator<Item = (i64, &'a Cochain)>) -> Result<Self> {
        let mut acc = Cochain::zero(n, k)?;
        for (c, phi) in terms {
            acc.check_same_shape(phi)?;
            for (a, b) in acc.values.iter_mut().zip(&phi.values) {
                *a += c * b;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: i64) -> Self {
        Cochain {
            values: self.values.iter().map(|v| v * c).collect(),
            ..*self
        }
    }

    /// First tuple where the two cochains differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<Element>, i64, i64)> {
        if self.n != other.n || self.k != other.k {
            return None;
        }
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| (self.tuple_at(i), self.values[i], other.values[i]))
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    /// Panics on shape mismatch; use [`Cochain::add_scaled`] for a checked sum.
    fn add(self, rhs: &Cochain) -> Cochain {
        self.add_scaled(rhs, 1).expect("cochain shapes differ")
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        self.add_scaled(rhs, -1).expect("cochain shapes differ")
    }
}

impl Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        self.scale(-1)
    }
}

impl Mul<&Cochain> for i64 {
    type Output = Cochain;

    fn mul(self, rhs: &Cochain) -> Cochain {
        rhs.scale(self)
    }
}

#[inline]
pub(crate) fn index_of(n: u32, tuple: &[Element]) -> usize {
    tuple.iter().fold(0usize, |acc, &x| (acc << n) | (x as usize - 1))
}

#[inline]
pub(crate) fn tuple_into(n: u32, mut index: usize, tuple: &mut [Element]) {
    let mask = (1usize << n) - 1;
    for slot in tuple.iter_mut().rev() {
        *slot = (index & mask) as Element + 1;
        index >>= n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn index_layout_is_big_endian() {
        let c = Cochain::from_fn(2, 3, |t| (t[0] * 100 + t[1] * 10 + t[2]) as i64).unwrap();
        assert_eq!(c.len(), 64);
        assert_eq!(c.values()[0], 111);
        assert_eq!(c.values()[1], 112);
        assert_eq!(c.values()[4], 121);
        assert_eq!(c.values()[16], 211);
        assert_eq!(c.get(&[4, 3, 2]).unwrap(), 432);
        assert_eq!(c.index_of(&[4, 3, 2]).unwrap(), 3 * 16 + 2 * 4 + 1);
    }

    #[test]
    fn checked_access() {
        let c = Cochain::zero(2, 2).unwrap();
        assert!(matches!(c.get(&[1]), Err(LaverError::Arity { expected: 2, actual: 1 })));
        assert!(c.get(&[5, 1]).is_err());
        assert_eq!(Cochain::constant(2, 0, 7).unwrap().values(), &[7]);
        assert!(Cochain::zero(13, 2).is_err());
        assert!(Cochain::from_values(1, 2, vec![0; 3]).is_err());
        let c0 = Cochain::constant(0, 3, 1).unwrap();
        assert_eq!(c0.values(), &[1]);
    }

    #[test]
    fn arithmetic() {
        let a = Cochain::from_fn(1, 2, |t| t[0] as i64).unwrap();
        let b = Cochain::constant(1, 2, 1).unwrap();
        assert_eq!((&a - &b).values(), &[0, 0, 1, 1]);
        assert_eq!((&a + &b).values(), &[2, 2, 3, 3]);
        assert_eq!((3 * &b).values(), &[3; 4]);
        assert_eq!((-&b).values(), &[-1; 4]);
        let combo = Cochain::linear_combination(1, 2, [(2, &a), (-1, &b)]).unwrap();
        assert_eq!(combo.values(), &[1, 1, 3, 3]);
        assert_eq!(a.first_difference(&b), Some((vec![2, 1], 2, 1)));
        assert!(a.add_scaled(&Cochain::zero(1, 3).unwrap(), 1).is_err());
    }

    proptest! {
        #[test]
        fn tuple_index_round_trip(n in 0u32..5, k in 1u32..4, seed in any::<usize>()) {
            let len = 1usize << (n * k);
            let i = seed % len;
            let mut t = vec![1; k as usize];
            tuple_into(n, i, &mut t);
            prop_assert!(t.iter().all(|&x| x >= 1 && x <= 1 << n));
            prop_assert_eq!(index_of(n, &t), i);
        }
    }
}
