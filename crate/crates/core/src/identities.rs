//! Exhaustive sweeps of the laws satisfied by Laver tables.
//!
//! Everything here is written against [`Magma`] so that the same sweeps can
//! be run on deliberately corrupted fixtures.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::LaverError;
use crate::report::CheckReport;
use crate::table::{Element, Magma};

/// Limits for the left-selfdistributivity sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBudget {
    /// Largest number of triples swept exhaustively.
    pub max_exhaustive: u64,
    /// Number of uniformly sampled triples beyond that.
    pub sample: u64,
    pub seed: u64,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget {
            max_exhaustive: 1 << 25,
            sample: 1 << 20,
            seed: 0x1a7e5,
        }
    }
}

fn ld_case<M: Magma>(m: &M, r: &mut CheckReport, x: Element, y: Element, z: Element) {
    let lhs = m.op(x, m.op(y, z));
    let rhs = m.op(m.op(x, y), m.op(x, z));
    r.case("LD", &[x.into(), y.into(), z.into()], lhs.into(), rhs.into());
}

pub fn check_selfdistributivity<M: Magma>(m: &M) -> CheckReport {
    check_selfdistributivity_with(m, &SweepBudget::default())
}

/// Sweeps `x ⊳ (y ⊳ z) = (x ⊳ y) ⊳ (x ⊳ z)`; exhaustive when the cube fits
/// the budget, otherwise a seeded uniform sample. Work is split by `x`.
pub fn check_selfdistributivity_with<M: Magma>(m: &M, budget: &SweepBudget) -> CheckReport {
    let size = m.order();
    let cube = u64::from(size).pow(3);
    if cube <= budget.max_exhaustive {
        (1..=size)
            .into_par_iter()
            .map(|x| {
                let mut r = CheckReport::new("ld");
                for y in 1..=size {
                    for z in 1..=size {
                        ld_case(m, &mut r, x, y, z);
                    }
                }
                r
            })
            .reduce(|| CheckReport::new("ld"), CheckReport::merge)
    } else {
        let chunks = 64u64;
        let per_chunk = budget.sample.div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
                rng.set_stream(c);
                let mut r = CheckReport::new("ld");
                let count = per_chunk.min(budget.sample.saturating_sub(c * per_chunk));
                for _ in 0..count {
                    let x = rng.gen_range(1..=size);
                    let y = rng.gen_range(1..=size);
                    let z = rng.gen_range(1..=size);
                    ld_case(m, &mut r, x, y, z);
                }
                r
            })
            .reduce(|| CheckReport::new("ld"), CheckReport::merge)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    LastColumn,
    Monotone,
    PlusOne,
    LastRows,
    Parity,
    Valuation,
    Monoid,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 7] = [
        Suite::LastColumn,
        Suite::Monotone,
        Suite::PlusOne,
        Suite::LastRows,
        Suite::Parity,
        Suite::Valuation,
        Suite::Monoid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LastColumn => "last-column",
            Suite::Monotone => "monotone",
            Suite::PlusOne => "plus-one",
            Suite::LastRows => "last-rows",
            Suite::Parity => "parity",
            Suite::Valuation => "valuation",
            Suite::Monoid => "monoid",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = LaverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| LaverError::Parse(format!("unknown identity suite `{s}`")))
    }
}

/// Runs one suite, or every suite merged into a single report for
/// [`Suite::All`].
pub fn check_identities<M: Magma>(m: &M, suite: Suite) -> CheckReport {
    match suite {
        Suite::All => Suite::INDIVIDUAL
            .into_iter()
            .map(|s| check_identities(m, s))
            .fold(CheckReport::new("all"), CheckReport::merge),
        Suite::LastColumn => last_column(m),
        Suite::Monotone => monotone(m),
        Suite::PlusOne => plus_one(m),
        Suite::LastRows => last_rows(m),
        Suite::Parity => parity(m),
        Suite::Valuation => valuation(m),
        Suite::Monoid => monoid(m),
    }
}

fn last_column<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let mut r = CheckReport::new("last-column");
    for p in 1..=size {
        r.case("p ⊳ 2^n = 2^n", &[p.into()], size.into(), m.op(p, size).into());
    }
    r
}

/// Left multiples grow, and each row climbs strictly to `2^n` and then
/// repeats with a power-of-two period.
fn monotone<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let mut r = CheckReport::new("monotone");
    for p in 1..=size {
        let per = (1..=size).find(|&q| m.op(p, q) == size).unwrap_or(size);
        r.holds("period is a power of two", &[p.into()], per.is_power_of_two());
        for q in 1..=size {
            let v = m.op(p, q);
            let input = [p.into(), q.into()];
            if p < size {
                r.holds("p < p ⊳ q", &input, p < v);
            }
            if q < per {
                r.holds("row increases", &input, v < m.op(p, q + 1));
            } else if q > per {
                r.case("row repeats", &input, m.op(p, (q - 1) % per + 1).into(), v.into());
            }
        }
    }
    r
}

#[inline]
fn succ(q: Element, size: Element) -> Element {
    q % size + 1
}

fn plus_one<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    (1..=size)
        .into_par_iter()
        .map(|p| {
            let mut r = CheckReport::new("plus-one");
            for q in 1..=size {
                for q2 in 1..=size {
                    if m.op(p, q) == m.op(p, q2) {
                        r.case(
                            "equal entries stay equal one step later",
                            &[p.into(), q.into(), q2.into()],
                            m.op(p, succ(q, size)).into(),
                            m.op(p, succ(q2, size)).into(),
                        );
                    } else {
                        r.total += 1;
                    }
                }
            }
            r
        })
        .reduce(|| CheckReport::new("plus-one"), CheckReport::merge)
}

fn last_rows<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let mut r = CheckReport::new("last-rows");
    for q in 1..=size {
        if size > 1 {
            r.case(
                "(2^n - 1) ⊳ q = 2^n",
                &[(size - 1).into(), q.into()],
                size.into(),
                m.op(size - 1, q).into(),
            );
        }
        r.case("2^n ⊳ q = q", &[size.into(), q.into()], q.into(), m.op(size, q).into());
    }
    r
}

fn parity<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let mut r = CheckReport::new("parity");
    if size < 2 {
        return r;
    }
    for p in 1..=size {
        for q in 1..=size {
            let odd = m.op(p, q) % 2 == 1;
            r.case(
                "p ⊳ q odd iff p even and q odd",
                &[p.into(), q.into()],
                i64::from(p % 2 == 0 && q % 2 == 1),
                i64::from(odd),
            );
        }
    }
    r
}

/// With `2^d` the largest power of two dividing `p` (and `d = n` for
/// `p = 2^n`), row `p` fixes exactly the last `2^d` columns.
fn valuation<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let mut r = CheckReport::new("valuation");
    for p in 1..=size {
        let block = if p == size { size } else { 1 << p.trailing_zeros() };
        for q in 1..=size {
            let fixed = m.op(p, q) == q;
            let input = [p.into(), q.into()];
            if q > size - block {
                r.holds("p ⊳ q = q on the last 2^d columns", &input, fixed);
            } else {
                r.holds("p ⊳ q != q before the last 2^d columns", &input, !fixed);
            }
        }
    }
    r
}

/// `p ∘ q = p ⊳ (q + 1) - 1`, read cyclically so that corrupted inputs stay
/// in range.
#[inline]
pub(crate) fn compose_in<M: Magma>(m: &M, p: Element, q: Element) -> Element {
    let size = m.order();
    if q == size {
        p
    } else {
        (m.op(p, q + 1) + size - 2) % size + 1
    }
}

fn monoid<M: Magma>(m: &M) -> CheckReport {
    let size = m.order();
    let c = |p, q| compose_in(m, p, q);
    let mut r = (1..=size)
        .into_par_iter()
        .map(|x| {
            let mut r = CheckReport::new("monoid");
            for y in 1..=size {
                let xy = c(x, y);
                r.case(
                    "x ∘ y = (x ⊳ y) ∘ x",
                    &[x.into(), y.into()],
                    xy.into(),
                    c(m.op(x, y), x).into(),
                );
                for z in 1..=size {
                    let input = [x.into(), y.into(), z.into()];
                    r.case(
                        "(x ∘ y) ⊳ z = x ⊳ (y ⊳ z)",
                        &input,
                        m.op(xy, z).into(),
                        m.op(x, m.op(y, z)).into(),
                    );
                    r.case("associativity", &input, c(xy, z).into(), c(x, c(y, z)).into());
                    r.case(
                        "x ⊳ (y ∘ z) = (x ⊳ y) ∘ (x ⊳ z)",
                        &input,
                        m.op(x, c(y, z)).into(),
                        c(m.op(x, y), m.op(x, z)).into(),
                    );
                }
            }
            r
        })
        .reduce(|| CheckReport::new("monoid"), CheckReport::merge);
    for p in 1..=size {
        r.case("p ∘ 2^n = p", &[p.into()], p.into(), c(p, size).into());
        r.case("2^n ∘ p = p", &[p.into()], p.into(), c(size, p).into());
    }
    r
}
