//! The explicit 2- and 3-cocycles on `A_n` and what they encode.

use laver_linalg::{ColumnEchelon, IntegerMatrix, LatticeSolver, SparseMatrix};
use serde::Serialize;

use crate::cochain::Cochain;
use crate::complex::{cocycle_defect, cocycle_lattice_basis, differential_matrix, ComplexCaps};
use crate::error::{LaverError, Result};
use crate::poset::DivisibilityPoset;
use crate::report::CheckReport;
use crate::table::{project_unchecked, Element, LaverTable, Magma, HARD_MAX_N};

fn check_element(t: &LaverTable, q: Element) -> Result<()> {
    t.apply(q, 1).map(|_| ())
}

fn delta(a: Element, b: Element) -> i64 {
    i64::from(a == b)
}

/// `φ_{q,n}(x, y) = δ_{y,q} − δ_{x⊳y,q}`.
pub fn phi2(t: &LaverTable, q: Element) -> Result<Cochain> {
    check_element(t, q)?;
    Cochain::from_fn(t.n(), 2, |x| delta(x[1], q) - delta(t.op(x[0], x[1]), q))
}

/// `ψ_{q,n}(x, y) = 1` iff `q ∈ Col(y)` and `q ∉ Col(x ⊳ y)`.
pub fn psi2(t: &LaverTable, q: Element) -> Result<Cochain> {
    let poset = DivisibilityPoset::with_cap(t, HARD_MAX_N)?;
    psi2_in(t, &poset, q)
}

pub(crate) fn psi2_in(t: &LaverTable, poset: &DivisibilityPoset, q: Element) -> Result<Cochain> {
    check_element(t, q)?;
    let below = poset.below(q);
    Cochain::from_fn(t.n(), 2, |x| {
        i64::from(below.contains(x[1]) && !below.contains(t.op(x[0], x[1])))
    })
}

/// `ψ_{q,n}` as the sum of `φ_{r,n}` over `r ◁ q`.
pub fn psi2_by_sum(t: &LaverTable, q: Element) -> Result<Cochain> {
    let poset = DivisibilityPoset::with_cap(t, HARD_MAX_N)?;
    check_element(t, q)?;
    let phis = poset.below(q).iter().map(|r| phi2(t, r)).collect::<Result<Vec<_>>>()?;
    Cochain::linear_combination(t.n(), 2, phis.iter().map(|p| (1, p)))
}

/// `γ_{q,n}(x) = 1` iff `x ◁ q`; satisfies `ψ_{q,n} = −δ¹γ_{q,n}`.
pub fn gamma(t: &LaverTable, q: Element) -> Result<Cochain> {
    let poset = DivisibilityPoset::with_cap(t, HARD_MAX_N)?;
    check_element(t, q)?;
    Cochain::from_fn(t.n(), 1, |x| i64::from(poset.divides(x[0], q)))
}

pub fn const_cochain(n: u32, k: u32, c: i64) -> Result<Cochain> {
    Cochain::constant(n, k, c)
}

/// `const′_n = const_n − Σ_{q < 2^n} φ_{q,n}`: zero except for a 1 at
/// `(2^n − 1, 2^n)`.
pub fn const_prime(t: &LaverTable) -> Result<Cochain> {
    let phis = (1..t.size()).map(|q| phi2(t, q)).collect::<Result<Vec<_>>>()?;
    let sum = Cochain::linear_combination(t.n(), 2, phis.iter().map(|p| (1, p)))?;
    Ok(&Cochain::constant(t.n(), 2, 1)? - &sum)
}

/// `θ_n = Σ_{r ≤ 2^{n−1}} φ_{r,n}`.
pub fn theta(t: &LaverTable) -> Result<Cochain> {
    if t.n() == 0 {
        return Err(LaverError::Domain("θ_n needs n ≥ 1".into()));
    }
    let phis = (1..=t.size() / 2).map(|r| phi2(t, r)).collect::<Result<Vec<_>>>()?;
    Cochain::linear_combination(t.n(), 2, phis.iter().map(|p| (1, p)))
}

/// Coordinates of a 2-cocycle in the basis `φ_{1,n}, …, φ_{2^n−1,n}, const_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition2 {
    /// `lambdas[q - 1] = λ_q` for `q < 2^n`.
    pub lambdas: Vec<i64>,
    pub constant: i64,
}

pub fn decompose2(t: &LaverTable, phi: &Cochain) -> Result<Decomposition2> {
    if phi.arity() != 2 {
        return Err(LaverError::Arity {
            expected: 2,
            actual: phi.arity() as usize,
        });
    }
    if let Some((x, v)) = cocycle_defect(t, phi)? {
        return Err(LaverError::Contract(format!("not a 2-cocycle: δφ{x:?} = {v}")));
    }
    let size = t.size();
    if size == 1 {
        return Ok(Decomposition2 {
            lambdas: Vec::new(),
            constant: phi.at(&[1, 1]),
        });
    }
    let constant = phi.at(&[size - 1, size]);
    let lambdas = (1..size).map(|q| phi.at(&[size - 1, q]) - constant).collect();
    Ok(Decomposition2 { lambdas, constant })
}

pub fn reconstruct2(t: &LaverTable, d: &Decomposition2) -> Result<Cochain> {
    let phis = (1..t.size()).map(|q| phi2(t, q)).collect::<Result<Vec<_>>>()?;
    let c = Cochain::constant(t.n(), 2, 1)?;
    Cochain::linear_combination(t.n(), 2, d.lambdas.iter().copied().zip(&phis).chain([(d.constant, &c)]))
}

/// `φ_{p,q,n}(x,y,z) = δ_{p,y}δ_{q,z} − δ_{p,x⊳y}δ_{q,x⊳z} − δ_{p,x}δ_{q,z} + δ_{p,x}δ_{q,y⊳z}`.
pub fn phi3(t: &LaverTable, p: Element, q: Element) -> Result<Cochain> {
    check_element(t, p)?;
    check_element(t, q)?;
    Cochain::from_fn(t.n(), 3, |v| {
        let [x, y, z] = [v[0], v[1], v[2]];
        delta(p, y) * delta(q, z) - delta(p, t.op(x, y)) * delta(q, t.op(x, z)) - delta(p, x) * delta(q, z)
            + delta(p, x) * delta(q, t.op(y, z))
    })
}

/// `φ′_{p,q,n}`: `φ_{p,q,n}` plus `const` when `p = q = 2^n`.
pub fn phi3_prime(t: &LaverTable, p: Element, q: Element) -> Result<Cochain> {
    let phi = phi3(t, p, q)?;
    if p == t.size() && q == t.size() {
        Ok(&phi + &Cochain::constant(t.n(), 3, 1)?)
    } else {
        Ok(phi)
    }
}

/// The 3-cocycle basis: `φ_{p,q,n}` for `p ≠ 2^n − 1` and all `q`, then
/// `const_n`. For `n = 0` only `const` remains.
pub fn basis3(t: &LaverTable) -> Result<Vec<Cochain>> {
    let size = t.size();
    let mut out = Vec::new();
    if size > 1 {
        for p in (1..=size).filter(|&p| p != size - 1) {
            for q in 1..=size {
                out.push(phi3(t, p, q)?);
            }
        }
    }
    out.push(Cochain::constant(t.n(), 3, 1)?);
    Ok(out)
}

/// The 2-cocycle bases `φ_{1..2^n−1,n} ++ const` and `ψ_{1..2^n−1,n} ++ const`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family2 {
    Phi,
    Psi,
}

pub fn basis2(t: &LaverTable, family: Family2) -> Result<Vec<Cochain>> {
    let poset = DivisibilityPoset::with_cap(t, HARD_MAX_N)?;
    let mut out = (1..t.size())
        .map(|q| match family {
            Family2::Phi => phi2(t, q),
            Family2::Psi => psi2_in(t, &poset, q),
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(Cochain::constant(t.n(), 2, 1)?);
    Ok(out)
}

/// Pullback along `proj_{nto, nfrom}`: evaluates `φ` on coordinates reduced
/// modulo `2^{nfrom}`.
pub fn lift_cochain(nfrom: u32, nto: u32, phi: &Cochain) -> Result<Cochain> {
    if phi.n() != nfrom {
        return Err(LaverError::Domain(format!(
            "cochain lives on A_{}, not A_{nfrom}",
            phi.n()
        )));
    }
    if nfrom > nto {
        return Err(LaverError::Domain(format!(
            "cannot lift from A_{nfrom} to the smaller A_{nto}"
        )));
    }
    let mut buf = Vec::with_capacity(phi.arity() as usize);
    Cochain::from_fn(nto, phi.arity(), |x| {
        buf.clear();
        buf.extend(x.iter().map(|&v| project_unchecked(nfrom, v)));
        phi.at(&buf)
    })
}

fn first_one(phi: &Cochain, p: Element, size: Element) -> Result<u32> {
    (1..=size)
        .find(|&y| phi.at(&[p, y]) == 1)
        .ok_or_else(|| LaverError::Contract(format!("row {p} has no entry equal to 1")))
}

/// Smallest `y` with `ψ_{2^{n−1},n}(p, y) = 1`; equals `per_n(p)`.
pub fn period_from_cocycle(t: &LaverTable, p: Element) -> Result<u32> {
    if t.n() == 0 || p == 0 || p >= t.size() {
        return Err(LaverError::Domain(format!(
            "period encoding needs 1 ≤ p < 2^n, got p = {p} in A_{}",
            t.n()
        )));
    }
    first_one(&psi2(t, t.size() / 2)?, p, t.size())
}

/// [`period_from_cocycle`] for every `p < 2^n`, sharing one cocycle.
pub fn periods_from_cocycle(t: &LaverTable) -> Result<Vec<u32>> {
    if t.n() == 0 {
        return Ok(Vec::new());
    }
    let psi = psi2(t, t.size() / 2)?;
    (1..t.size()).map(|p| first_one(&psi, p, t.size())).collect()
}

/// `(smallest y with θ_n(p, y) = 1) − 1`; equals `thres_n(p)`.
pub fn threshold_from_cocycle(t: &LaverTable, p: Element) -> Result<u32> {
    if t.n() == 0 || p == 0 || p >= t.size() / 2 {
        return Err(LaverError::Domain(format!(
            "threshold encoding needs 1 ≤ p < 2^(n-1), got p = {p} in A_{}",
            t.n()
        )));
    }
    Ok(first_one(&theta(t)?, p, t.size())? - 1)
}

/// [`threshold_from_cocycle`] for every `p < 2^{n−1}`, sharing one cocycle.
pub fn thresholds_from_cocycle(t: &LaverTable) -> Result<Vec<u32>> {
    if t.n() == 0 {
        return Ok(Vec::new());
    }
    let th = theta(t)?;
    (1..t.size() / 2)
        .map(|p| Ok(first_one(&th, p, t.size())? - 1))
        .collect()
}

/// Closed-form expectations for the cocycle ranks.
pub fn expected_cocycle_rank(n: u32, k: u32) -> Option<u64> {
    let s = 1u64 << n;
    match k {
        1 => Some(1),
        2 => Some(s),
        3 => Some(s * s - s + 1),
        4 => Some(s * s * s - s * s + s),
        _ => None,
    }
}

/// Outcome of [`cocycle_space`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocycleSpaceReport {
    pub n: u32,
    pub k: u32,
    /// Rank of `Z^k` computed from the kernel of `δ^k`.
    pub rank: usize,
    pub expected_rank: u64,
    /// Rank of `B^{k+1}`, the image of `δ^k`.
    pub image_rank: usize,
    pub family_size: usize,
    pub family_are_cocycles: bool,
    /// Every kernel basis vector is an integral combination of the family.
    pub family_spans: bool,
    /// The family has full rank `family_size`.
    pub family_independent: bool,
}

impl CocycleSpaceReport {
    pub fn passed(&self) -> bool {
        self.rank as u64 == self.expected_rank
            && self.family_size == self.rank
            && self.family_are_cocycles
            && self.family_spans
            && self.family_independent
    }

    /// The same facts as a [`CheckReport`].
    pub fn to_check_report(&self) -> CheckReport {
        let mut r = CheckReport::new(format!("cocycle-space-k{}", self.k));
        let input = [i64::from(self.n)];
        r.case("rank of Z^k", &input, self.expected_rank as i64, self.rank as i64);
        r.case(
            "family size equals rank",
            &input,
            self.rank as i64,
            self.family_size as i64,
        );
        r.holds("family members are cocycles", &input, self.family_are_cocycles);
        r.holds("family spans Z^k", &input, self.family_spans);
        r.holds("family is independent", &input, self.family_independent);
        r
    }
}

fn cochains_as_columns(family: &[Cochain]) -> IntegerMatrix {
    let rows = family.first().map_or(0, Cochain::len);
    let cols: Vec<Vec<i64>> = family.iter().map(|c| c.values().to_vec()).collect();
    IntegerMatrix::from_columns(rows, &cols)
}

/// Verifies that the explicit family for `k ∈ {2, 3}` is a basis of `Z^k`.
pub fn cocycle_space(t: &LaverTable, k: u32) -> Result<CocycleSpaceReport> {
    cocycle_space_with(t, k, &ComplexCaps::default())
}

pub fn cocycle_space_with(t: &LaverTable, k: u32, caps: &ComplexCaps) -> Result<CocycleSpaceReport> {
    let family = match k {
        2 => basis2(t, Family2::Phi)?,
        3 => basis3(t)?,
        _ => {
            return Err(LaverError::Domain(format!(
                "explicit cocycle bases exist for k = 2, 3; got {k}"
            )))
        }
    };
    caps.check_kernel(t.n(), k)?;
    let d = differential_matrix(t, k)?;
    let echelon = ColumnEchelon::from_sparse(&d);
    let kernel = echelon.kernel_basis();
    let fam = cochains_as_columns(&family);
    let family_are_cocycles = d.mul(&SparseMatrix::from_dense(&fam))?.is_zero();
    let solver = LatticeSolver::new(&fam);
    let mut family_spans = true;
    for v in &kernel {
        if solver.solve(v)?.is_none() {
            family_spans = false;
            break;
        }
    }
    Ok(CocycleSpaceReport {
        n: t.n(),
        k,
        rank: echelon.nullity(),
        expected_rank: expected_cocycle_rank(t.n(), k).unwrap_or(0),
        image_rank: echelon.rank(),
        family_size: family.len(),
        family_are_cocycles,
        family_spans,
        family_independent: solver.echelon().rank() == family.len(),
    })
}

/// Kernel basis of `δ^k` as cochains, for the property checks on `Z^k`.
pub fn cocycle_basis(t: &LaverTable, k: u32) -> Result<Vec<Cochain>> {
    cocycle_lattice_basis(t, k, &ComplexCaps::default())
}

/// Rank of the `2^n × (2^n − 1)` matrix of first columns `ψ_{q,n}(·, 1)`.
pub fn first_column_rank(t: &LaverTable) -> Result<usize> {
    let poset = DivisibilityPoset::with_cap(t, HARD_MAX_N)?;
    let size = t.size();
    let cols: Vec<Vec<i64>> = (1..size)
        .map(|q| {
            let psi = psi2_in(t, &poset, q)?;
            Ok((1..=size).map(|x| psi.at(&[x, 1])).collect())
        })
        .collect::<Result<_>>()?;
    Ok(laver_linalg::rank(&IntegerMatrix::from_columns(size as usize, &cols)))
}

/// Coefficients expressing `ψ_{q,n}` in the `φ_{r,n}`: entry `(r, q)` is 1
/// iff `r ◁ q`, for `q, r < 2^n`.
pub fn psi_in_phi_matrix(t: &LaverTable) -> Result<Vec<Vec<i64>>> {
    let size = t.size();
    (1..size)
        .map(|q| {
            let d = decompose2(t, &psi2(t, q)?)?;
            if d.constant != 0 {
                return Err(LaverError::Contract(format!("ψ_{q} has a constant part")));
            }
            Ok(d.lambdas)
        })
        .collect::<Result<Vec<_>>>()
        .map(|cols| (0..cols.len()).map(|r| cols.iter().map(|c| c[r]).collect()).collect())
}

/// `proj*` identities: `proj*(φ_{p,n−1}) = φ_{p,n} + φ_{p+2^{n−1},n}` and
/// `proj*(ψ_{p,n−1}) = ψ_{p+2^{n−1},n}`.
pub fn lifting_identities(t: &LaverTable, p: Element) -> Result<(bool, bool)> {
    let n = t.n();
    if n == 0 || p == 0 || p > t.size() / 2 {
        return Err(LaverError::Domain(format!("lifting needs 1 ≤ p ≤ 2^(n-1), got {p}")));
    }
    let prev = LaverTable::build_capped(n - 1, HARD_MAX_N)?;
    let half = t.size() / 2;
    let lifted_phi = lift_cochain(n - 1, n, &phi2(&prev, p)?)?;
    let phi_ok = lifted_phi == &phi2(t, p)? + &phi2(t, p + half)?;
    let lifted_psi = lift_cochain(n - 1, n, &psi2(&prev, p)?)?;
    let psi_ok = lifted_psi == psi2(t, p + half)?;
    Ok((phi_ok, psi_ok))
}

/// `proj*_{n,1}(ψ_{1,1})`, which equals `ψ_{2^n−1,n}` and detects parity.
pub fn parity_cocycle(n: u32) -> Result<Cochain> {
    let a1 = LaverTable::build(1)?;
    lift_cochain(1, n, &psi2(&a1, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{differential, is_coboundary, is_cocycle};

    fn table(n: u32) -> LaverTable {
        LaverTable::build(n).unwrap()
    }

    #[test]
    fn phi2_values() {
        let a3 = table(3);
        let phi4 = phi2(&a3, 4).unwrap();
        assert_eq!(phi4.get(&[1, 2]).unwrap(), -1);
        assert_eq!(phi4.get(&[3, 4]).unwrap(), 1);
        assert_eq!(phi2(&a3, 7).unwrap().get(&[6, 1]).unwrap(), -1);
        for q in 1..=8 {
            let phi = phi2(&a3, q).unwrap();
            for y in 1..=8 {
                assert_eq!(phi.get(&[8, y]).unwrap(), 0);
            }
        }
    }

    #[test]
    fn phi2_is_a_coboundary_of_an_indicator() {
        let a3 = table(3);
        for q in 1..=8 {
            let theta = Cochain::from_fn(3, 1, |x| -delta(x[0], q)).unwrap();
            assert_eq!(differential(&a3, &theta).unwrap(), phi2(&a3, q).unwrap());
        }
    }

    #[test]
    fn psi2_values_and_sum() {
        let a3 = table(3);
        let psi2_3 = psi2(&a3, 2).unwrap();
        assert_eq!(psi2_3.get(&[2, 1]).unwrap(), 1);
        assert_eq!(psi2_3.get(&[1, 2]).unwrap(), 1);
        assert!(psi2(&a3, 8).unwrap().is_zero());
        let psi4 = psi2(&a3, 4).unwrap();
        for y in 1..=7 {
            assert_eq!(psi4.get(&[7, y]).unwrap(), 1);
        }
        assert_eq!(psi4.get(&[7, 8]).unwrap(), 0);
        for n in 0..=4 {
            let t = table(n);
            for q in 1..=t.size() {
                assert_eq!(psi2(&t, q).unwrap(), psi2_by_sum(&t, q).unwrap(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn psi_is_minus_delta_gamma() {
        for n in 0..=4 {
            let t = table(n);
            for q in 1..=t.size() {
                let d = differential(&t, &gamma(&t, q).unwrap()).unwrap();
                assert_eq!(&psi2(&t, q).unwrap() + &d, Cochain::zero(n, 2).unwrap());
            }
        }
        let a3 = table(3);
        let pre = is_coboundary(&a3, &psi2(&a3, 2).unwrap()).unwrap().unwrap();
        assert_eq!(differential(&a3, &pre).unwrap(), psi2(&a3, 2).unwrap());
    }

    #[test]
    fn period_cocycle_is_minus_phi_top() {
        for n in 1..=5 {
            let t = table(n);
            assert_eq!(psi2(&t, t.size() / 2).unwrap(), -&phi2(&t, t.size()).unwrap());
        }
    }

    #[test]
    fn const_prime_shape() {
        let a3 = table(3);
        let c = const_prime(&a3).unwrap();
        assert_eq!(c.get(&[7, 8]).unwrap(), 1);
        for q in 1..8 {
            assert_eq!(c.get(&[7, q]).unwrap(), 0);
        }
        assert_eq!(const_cochain(0, 3, 1).unwrap().values(), &[1]);
        assert!(const_cochain(3, 2, 1).unwrap().values().iter().all(|&v| v == 1));
    }

    #[test]
    fn theta_examples() {
        let a3 = table(3);
        let th = theta(&a3).unwrap();
        assert_eq!((1..=8).find(|&y| th.get(&[1, y]).unwrap() == 1), Some(3));
        assert!(is_cocycle(&a3, &th).unwrap());
        assert_eq!(theta(&table(1)).unwrap(), phi2(&table(1), 1).unwrap());
        assert!(theta(&table(0)).is_err());
    }

    #[test]
    fn decompositions() {
        let a3 = table(3);
        let d = decompose2(&a3, &phi2(&a3, 4).unwrap()).unwrap();
        assert_eq!(d.constant, 0);
        assert_eq!(d.lambdas, vec![0, 0, 0, 1, 0, 0, 0]);
        let d = decompose2(&a3, &Cochain::constant(3, 2, 1).unwrap()).unwrap();
        assert_eq!((d.lambdas.iter().all(|&l| l == 0), d.constant), (true, 1));
        let d = decompose2(&a3, &psi2(&a3, 2).unwrap()).unwrap();
        assert_eq!(d.lambdas, vec![1, 1, 0, 0, 1, 0, 0]);
        assert_eq!(d.constant, 0);
        let mut bad = Cochain::zero(3, 2).unwrap();
        bad.set(&[1, 1], 1).unwrap();
        assert!(matches!(decompose2(&a3, &bad), Err(LaverError::Contract(_))));
        for phi in basis2(&a3, Family2::Psi).unwrap() {
            let d = decompose2(&a3, &phi).unwrap();
            assert_eq!(reconstruct2(&a3, &d).unwrap(), phi);
        }
    }

    #[test]
    fn phi3_values() {
        let a1 = table(1);
        let phi = phi3(&a1, 2, 1).unwrap();
        for x in 1..=2 {
            for y in 1..=2 {
                for z in 1..=2 {
                    let expected = match (x, y, z) {
                        (1, 2, 1) => 1,
                        (2, 1, 1) => -1,
                        _ => 0,
                    };
                    assert_eq!(phi.get(&[x, y, z]).unwrap(), expected);
                }
            }
        }
        let tilde = &(-&phi3(&a1, 2, 2).unwrap()) - &phi3(&a1, 2, 1).unwrap();
        let ones: Vec<Vec<u32>> = (0..8)
            .filter(|&i| tilde.values()[i] != 0)
            .map(|i| tilde.tuple_at(i))
            .collect();
        assert_eq!(ones, vec![vec![1, 1, 1], vec![1, 1, 2]]);
        assert!(tilde.values().iter().all(|&v| v == 0 || v == 1));
        let a2 = table(2);
        for p in 1..3 {
            for q in 1..=4 {
                let phi = phi3(&a2, p, q).unwrap();
                for y in 1..=4 {
                    for z in 1..=4 {
                        assert_eq!(phi.get(&[3, y, z]).unwrap(), delta(p, y) * delta(q, z));
                    }
                }
            }
        }
        assert!(is_cocycle(&a2, &phi3_prime(&a2, 4, 4).unwrap()).unwrap());
    }

    #[test]
    fn lifts() {
        for n in 1..=4 {
            let t = table(n);
            for p in 1..=t.size() / 2 {
                assert_eq!(lifting_identities(&t, p).unwrap(), (true, true), "n={n} p={p}");
            }
            assert_eq!(parity_cocycle(n).unwrap(), psi2(&t, t.size() - 1).unwrap());
        }
        let lifted = lift_cochain(2, 3, &psi2(&table(2), 1).unwrap()).unwrap();
        assert_eq!(lifted, psi2(&table(3), 5).unwrap());
        assert!(lift_cochain(3, 2, &psi2(&table(3), 1).unwrap()).is_err());
        assert!(lift_cochain(2, 3, &psi2(&table(3), 1).unwrap()).is_err());
    }

    #[test]
    fn encodings() {
        let a3 = table(3);
        assert_eq!(period_from_cocycle(&a3, 3).unwrap(), 2);
        assert_eq!(period_from_cocycle(&a3, 1).unwrap(), 4);
        assert_eq!(period_from_cocycle(&a3, 7).unwrap(), 1);
        assert!(period_from_cocycle(&a3, 8).is_err());
        assert_eq!(threshold_from_cocycle(&a3, 1).unwrap(), 2);
        assert_eq!(threshold_from_cocycle(&table(4), 1).unwrap(), 1);
        assert_eq!(threshold_from_cocycle(&table(2), 1).unwrap(), 1);
        assert!(threshold_from_cocycle(&a3, 4).is_err());
        for n in 1..=6 {
            let t = table(n);
            let per: Vec<u32> = (1..t.size()).map(|p| t.period(p).unwrap()).collect();
            assert_eq!(periods_from_cocycle(&t).unwrap(), per);
            let thr: Vec<u32> = (1..t.size() / 2).map(|p| t.threshold(p).unwrap()).collect();
            assert_eq!(thresholds_from_cocycle(&t).unwrap(), thr);
        }
    }

    #[test]
    fn cocycle_spaces() {
        let r = cocycle_space(&table(2), 2).unwrap();
        assert_eq!(r.rank, 4);
        assert!(r.passed(), "{r:?}");
        let r = cocycle_space(&table(2), 3).unwrap();
        assert_eq!(r.rank, 13);
        assert!(r.passed(), "{r:?}");
        let r = cocycle_space(&table(1), 3).unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.passed(), "{r:?}");
        assert_eq!(basis3(&table(1)).unwrap().len(), 3);
    }

    #[test]
    fn first_columns() {
        assert_eq!(first_column_rank(&table(3)).unwrap(), 7);
    }
}
