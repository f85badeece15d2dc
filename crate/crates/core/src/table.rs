//! Construction of the Laver tables `A_n` and the operations read off them.
//!
//! Elements are the integers `1..=2^n`. Every row of `A_n` is strictly
//! increasing until it reaches `2^n` and then repeats with a power-of-two
//! period, so only the first period of each row is stored.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{LaverError, Result};

/// An element of `A_n`, using the 1-based labels `1..=2^n`.
pub type Element = u32;

/// Default upper bound on the exponent accepted by [`LaverTable::build`].
pub const DEFAULT_MAX_N: u32 = 16;

/// Exponents above this can not be represented with 32-bit elements.
pub const HARD_MAX_N: u32 = 30;

/// Any finite binary operation on `1..=order`. Sweeps and identity checks
/// are written against this so that deliberately broken fixtures can be fed
/// through the same code as real tables.
pub trait Magma: Sync {
    fn order(&self) -> u32;

    /// `p ⊳ q`; arguments must already be in range.
    fn op(&self, p: Element, q: Element) -> Element;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaverTable {
    n: u32,
    /// `offsets[p - 1]..offsets[p]` is the stored period of row `p`.
    offsets: Vec<usize>,
    entries: Vec<Element>,
    thresholds: Vec<u32>,
}

impl LaverTable {
    /// Builds `A_n`, refusing exponents above [`DEFAULT_MAX_N`].
    pub fn build(n: u32) -> Result<Self> {
        Self::build_capped(n, DEFAULT_MAX_N)
    }

    pub fn build_capped(n: u32, cap: u32) -> Result<Self> {
        let cap = cap.min(HARD_MAX_N);
        if n > cap {
            return Err(LaverError::SizeLimit {
                what: "Laver table",
                requested: n,
                cap,
            });
        }
        let rows = build_rows(n);
        let thresholds = if n == 0 {
            Vec::new()
        } else {
            let prev = build_rows(n - 1);
            compute_thresholds(n, &rows, &prev)
        };
        Ok(Self::from_rows(n, rows, thresholds))
    }

    /// Shared, lazily built copy of `A_n`.
    pub fn cached(n: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<LaverTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("table cache poisoned").get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(Self::build(n)?);
        cache
            .lock()
            .expect("table cache poisoned")
            .insert(n, Arc::clone(&table));
        Ok(table)
    }

    fn from_rows(n: u32, rows: Vec<Vec<Element>>, thresholds: Vec<u32>) -> Self {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        let mut entries = Vec::with_capacity(rows.iter().map(Vec::len).sum());
        offsets.push(0);
        for row in rows {
            entries.extend_from_slice(&row);
            offsets.push(entries.len());
        }
        LaverTable {
            n,
            offsets,
            entries,
            thresholds,
        }
    }

    /// Rebuilds a table from stored rows after checking them against the
    /// defining laws. Used by the binary cache reader.
    pub fn from_periodic_rows(n: u32, rows: Vec<Vec<Element>>) -> Result<Self> {
        if n > HARD_MAX_N {
            return Err(LaverError::Format(format!("exponent {n} is too large")));
        }
        let expected = build_rows(n);
        if rows != expected {
            let p = rows
                .iter()
                .zip(&expected)
                .position(|(a, b)| a != b)
                .map_or(rows.len().min(expected.len()) + 1, |i| i + 1);
            return Err(LaverError::Format(format!(
                "row {p} does not satisfy the Laver recursion"
            )));
        }
        let thresholds = if n == 0 {
            Vec::new()
        } else {
            compute_thresholds(n, &rows, &build_rows(n - 1))
        };
        Ok(Self::from_rows(n, rows, thresholds))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `2^n`
    pub fn size(&self) -> Element {
        1 << self.n
    }

    pub fn contains(&self, p: Element) -> bool {
        (1..=self.size()).contains(&p)
    }

    fn check(&self, p: Element) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(LaverError::Domain(format!(
                "{p} is not an element of A_{} (valid range 1..={})",
                self.n,
                self.size()
            )))
        }
    }

    /// The stored first period of row `p`.
    pub fn row(&self, p: Element) -> &[Element] {
        let i = p as usize - 1;
        &self.entries[self.offsets[i]..self.offsets[i + 1]]
    }

    /// `p ⊳ q` with range checks.
    pub fn apply(&self, p: Element, q: Element) -> Result<Element> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.op(p, q))
    }

    pub fn period(&self, p: Element) -> Result<u32> {
        self.check(p)?;
        Ok(self.row(p).len() as u32)
    }

    /// All periods in row order.
    pub fn periods(&self) -> Vec<u32> {
        self.offsets.windows(2).map(|w| (w[1] - w[0]) as u32).collect()
    }

    /// `thres_n(p)` for `1 <= p <= 2^(n-1)`.
    pub fn threshold(&self, p: Element) -> Result<u32> {
        if self.n == 0 {
            return Err(LaverError::Domain("thresholds are undefined in A_0".into()));
        }
        if p == 0 || p > self.size() / 2 {
            return Err(LaverError::Domain(format!(
                "threshold of {p} is undefined in A_{} (valid range 1..={})",
                self.n,
                self.size() / 2
            )));
        }
        Ok(self.thresholds[p as usize - 1])
    }

    pub fn thresholds(&self) -> &[u32] {
        &self.thresholds
    }

    /// `p ∘ q`: `p ⊳ (q + 1) - 1`, or `p` when `q = 2^n`.
    pub fn compose(&self, p: Element, q: Element) -> Result<Element> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.compose_unchecked(p, q))
    }

    pub fn compose_unchecked(&self, p: Element, q: Element) -> Element {
        if q == self.size() {
            p
        } else {
            self.op(p, q + 1) - 1
        }
    }

    /// Row `p` unrolled to its full length `2^n`.
    pub fn left_translation_row(&self, p: Element) -> Result<Vec<Element>> {
        self.check(p)?;
        Ok((1..=self.size()).map(|q| self.op(p, q)).collect())
    }

    /// Every row unrolled; `2^n x 2^n` values.
    pub fn full_table(&self) -> Vec<Vec<Element>> {
        (1..=self.size())
            .map(|p| (1..=self.size()).map(|q| self.op(p, q)).collect())
            .collect()
    }
}

impl Magma for LaverTable {
    fn order(&self) -> u32 {
        self.size()
    }

    #[inline]
    fn op(&self, p: Element, q: Element) -> Element {
        debug_assert!(self.contains(p) && self.contains(q));
        let i = p as usize - 1;
        let start = self.offsets[i];
        let period = self.offsets[i + 1] - start;
        self.entries[start + ((q as usize - 1) & (period - 1))]
    }
}

/// `proj_{n,m}`: reduces `p` modulo `2^m` into `1..=2^m`.
pub fn project(n: u32, m: u32, p: Element) -> Result<Element> {
    if m > n {
        return Err(LaverError::Domain(format!(
            "cannot project A_{n} onto the larger A_{m}"
        )));
    }
    if n > HARD_MAX_N || p == 0 || p > 1 << n {
        return Err(LaverError::Domain(format!("{p} is not an element of A_{n}")));
    }
    Ok(project_unchecked(m, p))
}

#[inline]
pub(crate) fn project_unchecked(m: u32, p: Element) -> Element {
    ((p - 1) & ((1 << m) - 1)) + 1
}

/// Period-compressed rows of `A_n`, filled from the last row upwards.
fn build_rows(n: u32) -> Vec<Vec<Element>> {
    let size = 1u32 << n;
    let mut rows: Vec<Vec<Element>> = vec![Vec::new(); size as usize];
    rows[size as usize - 1] = (1..=size).collect();
    for p in (1..size).rev() {
        let succ = p + 1;
        let mut row = vec![succ];
        let mut v = succ;
        // p ⊳ (q+1) = (p ⊳ q) ⊳ (p + 1), and p ⊳ q > p, so row v is finished.
        while v != size {
            let r = &rows[v as usize - 1];
            v = r[(succ as usize - 1) & (r.len() - 1)];
            row.push(v);
        }
        rows[p as usize - 1] = row;
    }
    rows
}

/// Length of the common prefix of row `p` in `A_n` and in `A_{n-1}`.
fn compute_thresholds(n: u32, rows: &[Vec<Element>], prev: &[Vec<Element>]) -> Vec<u32> {
    let half = 1usize << (n - 1);
    (0..half)
        .map(|i| {
            let cur = &rows[i];
            let old = &prev[i];
            cur.iter()
                .enumerate()
                .take_while(|(q, v)| old[q & (old.len() - 1)] == **v)
                .count() as u32
        })
        .collect()
}

/// Rebuilds `A_n` from `A_{n-1}` and the thresholds `thres_n(p)` using the
/// doubling description of rows. Kept as an independent cross-check of
/// [`LaverTable::build`].
pub fn reconstruct_from_thresholds(prev: &LaverTable, thresholds: &[u32]) -> Result<Vec<Vec<Element>>> {
    let n = prev.n() + 1;
    let half = prev.size();
    if thresholds.len() != half as usize {
        return Err(LaverError::Domain(format!(
            "expected {half} thresholds, got {}",
            thresholds.len()
        )));
    }
    let mut rows = Vec::with_capacity(2 * half as usize);
    for p in 1..=half {
        let old = prev.row(p);
        let per = old.len() as u32;
        let t = thresholds[p as usize - 1];
        if t > per {
            return Err(LaverError::Domain(format!(
                "threshold {t} of {p} exceeds the previous period {per}"
            )));
        }
        let mut row: Vec<Element> = old
            .iter()
            .enumerate()
            .map(|(q, &v)| if (q as u32) < t { v } else { v + half })
            .collect();
        if t == per {
            row.extend(old.iter().map(|&v| v + half));
        }
        rows.push(row);
    }
    for p in half + 1..2 * half {
        rows.push(prev.row(p - half).iter().map(|&v| v + half).collect());
    }
    rows.push((1..=2 * half).collect());
    debug_assert_eq!(rows.len(), 1 << n);
    Ok(rows)
}
