//! The rack cochain complex of `A_n`.
//!
//! `δ^k` sends a `k`-cochain to the `(k+1)`-cochain `φ ∘ (∂^⊳ − ∂^0)`, with
//! `∂^⋆ = Σ (−1)^{i−1} d^⋆_i`. Here `d^⊳_i` drops `x_i` and left-multiplies the
//! later coordinates by `x_i`, while `d^0_i` just drops `x_i`. So
//! `Z^k = ker δ^k` and `B^k = im δ^{k−1}`; `δ^0` is the zero map.

use std::collections::HashMap;

use laver_linalg::{quotient_group_sparse, BigInt, ColumnEchelon, LatticeSolver, SparseMatrix};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::cochain::{index_of, tuple_into, Cochain};
use crate::error::{LaverError, Result};
use crate::report::CheckReport;
use crate::table::{Element, LaverTable, Magma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Op,
    Zero,
}

/// Size limits for complex computations, indexed by cochain arity `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexCaps {
    /// Largest `n` for pointwise evaluation of `δ^k` over all of `A_n^{k+1}`.
    pub exhaustive: [u32; 5],
    /// Largest `n` for kernel, image and cohomology computations of `δ^k`.
    pub kernel: [u32; 5],
}

impl Default for ComplexCaps {
    fn default() -> Self {
        ComplexCaps {
            exhaustive: [24, 12, 8, 4, 3],
            kernel: [12, 8, 5, 3, 2],
        }
    }
}

impl ComplexCaps {
    fn check(limits: &[u32; 5], what: &'static str, n: u32, k: u32) -> Result<()> {
        let cap = limits.get(k as usize).copied().unwrap_or(0);
        if k as usize >= limits.len() || n > cap {
            return Err(LaverError::SizeLimit {
                what,
                requested: n,
                cap,
            });
        }
        Ok(())
    }

    pub fn check_exhaustive(&self, n: u32, k: u32) -> Result<()> {
        Self::check(&self.exhaustive, "exhaustive cocycle check", n, k)
    }

    pub fn check_kernel(&self, n: u32, k: u32) -> Result<()> {
        Self::check(&self.kernel, "kernel computation", n, k)
    }
}

#[inline]
fn face_into<M: Magma>(m: &M, i: usize, flavor: Flavor, x: &[Element], out: &mut Vec<Element>) {
    out.clear();
    out.extend_from_slice(&x[..i - 1]);
    let xi = x[i - 1];
    match flavor {
        Flavor::Op => out.extend(x[i..].iter().map(|&y| m.op(xi, y))),
        Flavor::Zero => out.extend_from_slice(&x[i..]),
    }
}

/// `d^⋆_{k;i}` applied to one tuple of length `k`.
pub fn face_map(t: &LaverTable, k: usize, i: usize, flavor: Flavor, tuple: &[Element]) -> Result<Vec<Element>> {
    if tuple.len() != k {
        return Err(LaverError::Arity {
            expected: k,
            actual: tuple.len(),
        });
    }
    if i == 0 || i > k {
        return Err(LaverError::Domain(format!("face index {i} outside 1..={k}")));
    }
    for &x in tuple {
        t.apply(x, 1)?;
    }
    let mut out = Vec::with_capacity(k - 1);
    face_into(t, i, flavor, tuple, &mut out);
    Ok(out)
}

/// `(δφ)(x)` for a tuple `x` of length `k + 1`, straight from the face maps.
fn generic_value<M: Magma>(m: &M, n: u32, phi: &[i64], x: &[Element], buf: &mut Vec<Element>) -> i64 {
    let mut sum = 0;
    for i in 1..=x.len() {
        face_into(m, i, Flavor::Op, x, buf);
        let a = phi[index_of(n, buf)];
        face_into(m, i, Flavor::Zero, x, buf);
        let b = phi[index_of(n, buf)];
        let term = a - b;
        sum += if i % 2 == 1 { term } else { -term };
    }
    sum
}

/// `δ^k` through the alternating face sum, for any arity.
pub fn differential_generic<M: Magma>(m: &M, phi: &Cochain) -> Result<Cochain> {
    let n = m.order().trailing_zeros();
    if phi.n() != n {
        return Err(LaverError::Domain(format!("cochain on A_{} used with A_{n}", phi.n())));
    }
    let k = phi.arity() + 1;
    let out = Cochain::zero(n, k)?;
    let values: Vec<i64> = (0..out.len())
        .into_par_iter()
        .map_init(
            || (vec![1; k as usize], Vec::with_capacity(k as usize)),
            |(x, buf), idx| {
                tuple_into(n, idx, x);
                generic_value(m, n, phi.values(), x, buf)
            },
        )
        .collect();
    Cochain::from_values(n, k, values)
}

/// `δ^k φ`, using the expanded formulas for `k ≤ 3` and the face sum above.
pub fn differential(t: &LaverTable, phi: &Cochain) -> Result<Cochain> {
    differential_of(t, phi)
}

pub(crate) fn differential_of<M: Magma>(m: &M, phi: &Cochain) -> Result<Cochain> {
    let n = m.order().trailing_zeros();
    if phi.n() != n {
        return Err(LaverError::Domain(format!("cochain on A_{} used with A_{n}", phi.n())));
    }
    let k = phi.arity();
    if k == 0 || k > 3 {
        return differential_generic(m, phi);
    }
    let out_len = 1usize << ((k + 1) * n);
    let f = |x: &[Element]| phi.at(x);
    let o = |a, b| m.op(a, b);
    let values: Vec<i64> = (0..out_len)
        .into_par_iter()
        .map_init(
            || vec![1; k as usize + 1],
            |x, idx| {
                tuple_into(n, idx, x);
                match *x.as_slice() {
                    [x, y] => f(&[o(x, y)]) - f(&[y]),
                    [x, y, z] => f(&[o(x, y), o(x, z)]) + f(&[x, z]) - f(&[x, o(y, z)]) - f(&[y, z]),
                    [x, y, z, w] => {
                        f(&[o(x, y), o(x, z), o(x, w)]) + f(&[x, y, o(z, w)]) + f(&[x, z, w])
                            - f(&[x, o(y, z), o(y, w)])
                            - f(&[y, z, w])
                            - f(&[x, y, w])
                    }
                    _ => unreachable!("arity checked above"),
                }
            },
        )
        .collect();
    Cochain::from_values(n, k + 1, values)
}

/// The first tuple where `δφ` is nonzero, with that value.
pub fn cocycle_defect(t: &LaverTable, phi: &Cochain) -> Result<Option<(Vec<Element>, i64)>> {
    cocycle_defect_with(t, phi, &ComplexCaps::default())
}

pub fn cocycle_defect_with(t: &LaverTable, phi: &Cochain, caps: &ComplexCaps) -> Result<Option<(Vec<Element>, i64)>> {
    caps.check_exhaustive(t.n(), phi.arity())?;
    let d = differential(t, phi)?;
    Ok(d.values()
        .iter()
        .position(|&v| v != 0)
        .map(|i| (d.tuple_at(i), d.values()[i])))
}

pub fn is_cocycle(t: &LaverTable, phi: &Cochain) -> Result<bool> {
    Ok(cocycle_defect(t, phi)?.is_none())
}

/// The matrix of `δ^k` acting on column vectors of cochain values. `δ^0` is
/// the zero map out of `C^0 = Z`.
pub fn differential_matrix(t: &LaverTable, k: u32) -> Result<SparseMatrix> {
    let n = t.n();
    let rows_shape = Cochain::zero(n, k + 1)?.len();
    let cols = 1usize << (k * n);
    if k == 0 {
        return Ok(SparseMatrix::zeros(rows_shape, 1));
    }
    let rows: Vec<Vec<(usize, i64)>> = (0..rows_shape)
        .into_par_iter()
        .map_init(
            || (vec![1; k as usize + 1], Vec::with_capacity(k as usize)),
            |(x, buf), idx| {
                tuple_into(n, idx, x);
                let mut entries = Vec::with_capacity(4 * (k as usize + 1));
                for i in 1..=x.len() {
                    let sign = if i % 2 == 1 { 1 } else { -1 };
                    face_into(t, i, Flavor::Op, x, buf);
                    entries.push((index_of(n, buf), sign));
                    face_into(t, i, Flavor::Zero, x, buf);
                    entries.push((index_of(n, buf), -sign));
                }
                entries
            },
        )
        .collect();
    let mut m = SparseMatrix::new(cols);
    for row in rows {
        m.push_row(row)?;
    }
    Ok(m)
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| LaverError::Contract(format!("coefficient {v} does not fit in 64 bits")))
}

/// A basis of the cocycle lattice `Z^k = ker δ^k`.
pub fn cocycle_lattice_basis(t: &LaverTable, k: u32, caps: &ComplexCaps) -> Result<Vec<Cochain>> {
    caps.check_kernel(t.n(), k)?;
    let m = differential_matrix(t, k)?;
    ColumnEchelon::from_sparse(&m)
        .kernel_basis()
        .iter()
        .map(|v| Cochain::from_values(t.n(), k, v.iter().map(to_i64).collect::<Result<_>>()?))
        .collect()
}

/// `(rank Z^k, rank B^{k+1})`: nullity and rank of `δ^k`.
pub fn differential_ranks(t: &LaverTable, k: u32, caps: &ComplexCaps) -> Result<(usize, usize)> {
    caps.check_kernel(t.n(), k)?;
    let e = ColumnEchelon::from_sparse(&differential_matrix(t, k)?);
    Ok((e.nullity(), e.rank()))
}

/// Solves `φ = δ^{k−1} θ` over the integers, returning `θ` when it exists.
pub fn is_coboundary(t: &LaverTable, phi: &Cochain) -> Result<Option<Cochain>> {
    is_coboundary_with(t, phi, &ComplexCaps::default())
}

pub fn is_coboundary_with(t: &LaverTable, phi: &Cochain, caps: &ComplexCaps) -> Result<Option<Cochain>> {
    if phi.n() != t.n() {
        return Err(LaverError::Domain(format!(
            "cochain on A_{} used with A_{}",
            phi.n(),
            t.n()
        )));
    }
    let k = phi.arity();
    if k == 0 {
        return Err(LaverError::Domain("0-cochains have no coboundaries below them".into()));
    }
    caps.check_kernel(t.n(), k - 1)?;
    let m = differential_matrix(t, k - 1)?;
    let b: Vec<BigInt> = phi.values().iter().map(|&v| BigInt::from(v)).collect();
    let Some(x) = LatticeSolver::from_sparse(&m).solve(&b)? else {
        return Ok(None);
    };
    let values = x.iter().map(to_i64).collect::<Result<_>>()?;
    Ok(Some(Cochain::from_values(t.n(), k - 1, values)?))
}

/// `H^k = Z^k / B^k` as (free rank, torsion coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cohomology {
    pub k: u32,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// `Z^r + Z/d_1 + …`, or `0` for the trivial group.
impl std::fmt::Display for Cohomology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn cohomology(t: &LaverTable, k: u32) -> Result<Cohomology> {
    cohomology_with(t, k, &ComplexCaps::default())
}

pub fn cohomology_with(t: &LaverTable, k: u32, caps: &ComplexCaps) -> Result<Cohomology> {
    if k == 0 {
        return Err(LaverError::Domain("cohomology is computed for k ≥ 1".into()));
    }
    caps.check_kernel(t.n(), k)?;
    let incoming = differential_matrix(t, k - 1)?;
    let outgoing = differential_matrix(t, k)?;
    let q = quotient_group_sparse(&incoming, &outgoing)?;
    Ok(Cohomology {
        k,
        free_rank: q.free_rank,
        torsion: q.torsion,
    })
}

type Chain = HashMap<Vec<Element>, i64>;

fn boundary(t: &LaverTable, flavor: Flavor, chain: &Chain) -> Chain {
    let mut out = Chain::new();
    let mut buf = Vec::new();
    for (x, &c) in chain {
        for i in 1..=x.len() {
            face_into(t, i, flavor, x, &mut buf);
            let sign = if i % 2 == 1 { c } else { -c };
            *out.entry(buf.clone()).or_default() += sign;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn chain_sum(a: Chain, b: Chain) -> Chain {
    let mut out = a;
    for (x, c) in b {
        *out.entry(x).or_default() += c;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Checks on every basis chain of `C_k` that `∂^⊳∂^⊳`, `∂^0∂^0` and
/// `∂^⊳∂^0 + ∂^0∂^⊳` vanish, and that `d^⋄_{k−1;j} d^⋆_{k;i} = d^⋆_{k−1;i−1} d^⋄_{k;j}`
/// for all `j < i` and all flavor pairs.
pub fn bicomplex_check(t: &LaverTable, k: usize) -> Result<CheckReport> {
    if k < 2 {
        return Err(LaverError::Domain("the bicomplex identities start at k = 2".into()));
    }
    let n = t.n();
    Cochain::zero(n, k as u32)?;
    let mut r = CheckReport::new("bicomplex");
    let flavors = [Flavor::Op, Flavor::Zero];
    let mut x = vec![1; k];
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for idx in 0..1usize << (k as u32 * n) {
        tuple_into(n, idx, &mut x);
        let input: Vec<i64> = x.iter().map(|&v| v.into()).collect();
        let basis: Chain = [(x.clone(), 1)].into_iter().collect();
        let op = boundary(t, Flavor::Op, &basis);
        let zero = boundary(t, Flavor::Zero, &basis);
        let nonzero = |c: &Chain| c.len() as i64;
        r.case("∂⊳∂⊳ = 0", &input, 0, nonzero(&boundary(t, Flavor::Op, &op)));
        r.case("∂0∂0 = 0", &input, 0, nonzero(&boundary(t, Flavor::Zero, &zero)));
        let mixed = chain_sum(boundary(t, Flavor::Op, &zero), boundary(t, Flavor::Zero, &op));
        r.case("∂⊳∂0 + ∂0∂⊳ = 0", &input, 0, nonzero(&mixed));
        for i in 2..=k {
            for j in 1..i {
                for star in flavors {
                    for diamond in flavors {
                        face_into(t, i, star, &x, &mut a);
                        let lhs = {
                            let mut out = Vec::new();
                            face_into(t, j, diamond, &a, &mut out);
                            out
                        };
                        face_into(t, j, diamond, &x, &mut b);
                        let rhs = {
                            let mut out = Vec::new();
                            face_into(t, i - 1, star, &b, &mut out);
                            out
                        };
                        r.holds("face maps commute", &input, lhs == rhs);
                    }
                }
            }
        }
    }
    Ok(r)
}
