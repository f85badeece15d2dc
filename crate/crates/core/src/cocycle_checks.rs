//! Structural facts about all 2- and 3-cocycles, checked on a computed
//! basis of the cocycle lattice.
//!
//! Linear equalities only need checking on basis vectors. Statements of the
//! form "vanishing on these entries forces zero" become rank conditions on
//! the coordinate matrix of those entries.

use laver_linalg::{rank, IntegerMatrix, LatticeSolver};

use crate::cochain::Cochain;
use crate::cocycles::{
    lifting_identities, parity_cocycle, periods_from_cocycle, phi2, phi3, psi2, thresholds_from_cocycle,
};
use crate::complex::{cocycle_lattice_basis, is_cocycle, ComplexCaps};
use crate::error::Result;
use crate::report::CheckReport;
use crate::table::{Element, LaverTable};

/// Matrix whose `(i, j)` entry is the value of basis vector `j` on tuple `i`.
fn evaluation_matrix(basis: &[Cochain], tuples: &[Vec<Element>]) -> IntegerMatrix {
    IntegerMatrix::from_fn(tuples.len(), basis.len(), |i, j| basis[j].at(&tuples[i]).into())
}

fn stack(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    IntegerMatrix::from_fn(a.rows() + b.rows(), a.cols(), |i, j| {
        if i < a.rows() {
            a[(i, j)].clone()
        } else {
            b[(i - a.rows(), j)].clone()
        }
    })
}

/// The explicit families on `A_n`: `φ_q`, `ψ_q`, `const` are 2-cocycles and
/// `φ_{p,q}` are 3-cocycles (within the exhaustive caps), `ψ` is `{0,1}`-valued
/// and `φ_{p,q}` is `{0,±1}`-valued, the period and threshold encodings agree
/// with the table, and the lifting identities hold.
pub fn check_families(t: &LaverTable) -> Result<CheckReport> {
    check_families_with(t, &ComplexCaps::default())
}

pub fn check_families_with(t: &LaverTable, caps: &ComplexCaps) -> Result<CheckReport> {
    let (n, size) = (t.n(), t.size());
    let mut r = CheckReport::new("cocycle-families");
    let k2 = caps.check_exhaustive(n, 2).is_ok();
    if k2 {
        r.holds(
            "const is a 2-cocycle",
            &[],
            is_cocycle(t, &Cochain::constant(n, 2, 1)?)?,
        );
        for q in 1..=size {
            let (phi, psi) = (phi2(t, q)?, psi2(t, q)?);
            r.holds("φ_q is a 2-cocycle", &[q.into()], is_cocycle(t, &phi)?);
            r.holds("ψ_q is a 2-cocycle", &[q.into()], is_cocycle(t, &psi)?);
            r.holds(
                "ψ_q takes values in {0,1}",
                &[q.into()],
                psi.values().iter().all(|v| (0..=1).contains(v)),
            );
        }
    }
    if caps.check_exhaustive(n, 3).is_ok() {
        r.holds(
            "const is a 3-cocycle",
            &[],
            is_cocycle(t, &Cochain::constant(n, 3, 1)?)?,
        );
        for p in 1..=size {
            for q in 1..=size {
                let phi = phi3(t, p, q)?;
                r.holds("φ_{p,q} is a 3-cocycle", &[p.into(), q.into()], is_cocycle(t, &phi)?);
                r.holds(
                    "φ_{p,q} takes values in {0,±1}",
                    &[p.into(), q.into()],
                    phi.values().iter().all(|v| (-1..=1).contains(v)),
                );
            }
        }
    }
    if n == 0 || !k2 {
        return Ok(r);
    }
    let periods = t.periods();
    for (i, per) in periods_from_cocycle(t)?.into_iter().enumerate() {
        r.case(
            "period from ψ_{2^(n-1)}",
            &[i as i64 + 1],
            periods[i].into(),
            per.into(),
        );
    }
    for (i, th) in thresholds_from_cocycle(t)?.into_iter().enumerate() {
        r.case("threshold from θ", &[i as i64 + 1], t.thresholds()[i].into(), th.into());
    }
    for p in 1..=size / 2 {
        let (phi_ok, psi_ok) = lifting_identities(t, p)?;
        r.holds("lifting of φ_p", &[p.into()], phi_ok);
        r.holds("lifting of ψ_p", &[p.into()], psi_ok);
    }
    r.holds(
        "parity cocycle is ψ_{2^n-1}",
        &[n.into()],
        parity_cocycle(n)? == psi2(t, size - 1)?,
    );
    Ok(r)
}

/// `Z^2(A_n)`: constant last column and last row, the shape of row and
/// column `2^{n−1}`, the column-pairing equivalence, and that row `2^n − 1`
/// determines the cocycle.
pub fn check_z2_properties(t: &LaverTable) -> Result<CheckReport> {
    check_z2_properties_with(t, &ComplexCaps::default())
}

pub fn check_z2_properties_with(t: &LaverTable, caps: &ComplexCaps) -> Result<CheckReport> {
    let basis = cocycle_lattice_basis(t, 2, caps)?;
    let size = t.size();
    let mut r = CheckReport::new("z2-properties");
    r.case("rank of Z^2", &[t.n().into()], size.into(), basis.len() as i64);
    if size == 1 {
        return Ok(r);
    }
    let (pn, half) = (size - 1, size / 2);
    for (j, phi) in basis.iter().enumerate() {
        let v = phi.at(&[size, size]);
        let u = phi.at(&[1, half]);
        for x in 1..=size {
            let input = [j as i64, x.into()];
            r.case("last column constant", &input, phi.at(&[pn, size]), phi.at(&[x, size]));
            r.case("last row constant", &input, v, phi.at(&[size, x]));
            if x < size {
                r.case(
                    "column 2^(n-1) constant above the last entry",
                    &input,
                    u,
                    phi.at(&[x, half]),
                );
            }
            if x > half {
                r.case("second half of row 2^(n-1) constant", &input, v, phi.at(&[half, x]));
            }
        }
    }

    let penult: Vec<Vec<Element>> = (1..=size).map(|y| vec![pn, y]).collect();
    r.case(
        "row 2^n - 1 determines the cocycle",
        &[t.n().into()],
        basis.len() as i64,
        rank(&evaluation_matrix(&basis, &penult)) as i64,
    );

    // φ(2^{n−1}, q) = v iff columns q and q + 2^{n−1} agree: the two linear
    // conditions must cut out the same sublattice, i.e. have the same row space.
    for q in 1..half {
        let f = IntegerMatrix::from_fn(1, basis.len(), |_, j| {
            (basis[j].at(&[half, q]) - basis[j].at(&[size, size])).into()
        });
        let g = IntegerMatrix::from_fn(size as usize, basis.len(), |p, j| {
            let p = p as Element + 1;
            (basis[j].at(&[p, q]) - basis[j].at(&[p, q + half])).into()
        });
        let (rf, rg, rfg) = (rank(&f), rank(&g), rank(&stack(&f, &g)));
        r.holds(
            "columns q, q + 2^(n-1) agree iff φ(2^(n-1), q) = v",
            &[q.into()],
            rf == rg && rg == rfg,
        );
    }
    Ok(r)
}

/// `Z^3(A_n)`: `φ(x, 2^n, 2^n)` and `φ(2^n − 1, 2^n − 1, z)` are constant,
/// and a cocycle is determined by its values on `(2^n − 1, y, z)`, even
/// after dropping the `y = 2^n − 1` entries except `(2^n − 1, 2^n − 1, 2^n − 1)`.
pub fn check_z3_properties(t: &LaverTable) -> Result<CheckReport> {
    check_z3_properties_with(t, &ComplexCaps::default())
}

pub fn check_z3_properties_with(t: &LaverTable, caps: &ComplexCaps) -> Result<CheckReport> {
    let basis = cocycle_lattice_basis(t, 3, caps)?;
    let size = t.size();
    let mut r = CheckReport::new("z3-properties");
    let expected = u64::from(size) * u64::from(size) - u64::from(size) + 1;
    r.case("rank of Z^3", &[t.n().into()], expected as i64, basis.len() as i64);
    if size == 1 {
        return Ok(r);
    }
    let pn = size - 1;
    for (j, phi) in basis.iter().enumerate() {
        for x in 1..=size {
            let input = [j as i64, x.into()];
            r.case(
                "φ(x, 2^n, 2^n) constant",
                &input,
                phi.at(&[pn, size, size]),
                phi.at(&[x, size, size]),
            );
            r.case(
                "φ(2^n - 1, 2^n - 1, z) constant",
                &input,
                phi.at(&[pn, pn, pn]),
                phi.at(&[pn, pn, x]),
            );
        }
    }
    let mut first: Vec<Vec<Element>> = Vec::new();
    let mut minimal: Vec<Vec<Element>> = vec![vec![pn, pn, pn]];
    for y in 1..=size {
        for z in 1..=size {
            first.push(vec![pn, y, z]);
            if y != pn {
                minimal.push(vec![pn, y, z]);
            }
        }
    }
    r.case(
        "values on (2^n - 1, y, z) determine the cocycle",
        &[t.n().into()],
        basis.len() as i64,
        rank(&evaluation_matrix(&basis, &first)) as i64,
    );
    r.case(
        "minimal vanishing set determines the cocycle",
        &[t.n().into()],
        basis.len() as i64,
        rank(&evaluation_matrix(&basis, &minimal)) as i64,
    );
    r.case(
        "minimal vanishing set has the rank of Z^3",
        &[t.n().into()],
        minimal.len() as i64,
        basis.len() as i64,
    );
    Ok(r)
}

/// No basis of `Z^3(A_1)` consists of `{0, 1}`-valued cocycles.
///
/// Two independent arguments: every computed basis vector `ζ` satisfies
/// `ζ(1,2,1) − ζ(2,1,1) = 2λ` for its `φ_{2,1,1}`-coordinate `λ` (so a basis
/// vector with `λ ≠ 0` leaves `{0, 1}` there); and the `{0, 1}`-valued
/// cocycles, found by enumerating all 256 candidates, span a proper
/// sublattice.
pub fn not_zero_one_check() -> Result<CheckReport> {
    let a1 = LaverTable::build(1)?;
    let mut r = CheckReport::new("no-01-basis");
    let phi211 = phi3(&a1, 2, 1)?;
    let tilde = &(-&phi3(&a1, 2, 2)?) - &phi211;
    let constant = Cochain::constant(1, 3, 1)?;
    let reference = [phi211.clone(), tilde, constant];
    let cols: Vec<Vec<i64>> = reference.iter().map(|c| c.values().to_vec()).collect();
    let solver = LatticeSolver::new(&IntegerMatrix::from_columns(8, &cols));

    let basis = cocycle_lattice_basis(&a1, 3, &ComplexCaps::default())?;
    r.case("rank of Z^3(A_1)", &[1], 3, basis.len() as i64);
    let mut some_lambda = false;
    for (j, zeta) in basis.iter().enumerate() {
        let b: Vec<_> = zeta.values().iter().map(|&v| v.into()).collect();
        let Some(coords) = solver.solve(&b)? else {
            r.holds("basis vector lies in the reference lattice", &[j as i64], false);
            continue;
        };
        let lambda = i64::try_from(&coords[0]).unwrap_or(i64::MAX);
        let gap = zeta.at(&[1, 2, 1]) - zeta.at(&[2, 1, 1]);
        r.case("ζ(1,2,1) − ζ(2,1,1) = 2λ", &[j as i64], 2 * lambda, gap);
        if lambda != 0 {
            some_lambda = true;
            let outside = |v: i64| v != 0 && v != 1;
            r.holds(
                "λ ≠ 0 forces a value outside {0, 1}",
                &[j as i64],
                outside(zeta.at(&[1, 2, 1])) || outside(zeta.at(&[2, 1, 1])),
            );
        }
    }
    r.holds("some basis vector has λ ≠ 0", &[], some_lambda);

    let zero_one: Vec<Cochain> = (0u32..256)
        .map(|mask| Cochain::from_values(1, 3, (0..8).map(|i| i64::from(mask >> i & 1)).collect()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|c| is_cocycle(&a1, c).unwrap_or(false))
        .collect();
    let span = IntegerMatrix::from_columns(8, &zero_one.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>());
    let index_gap = basis.iter().any(|zeta| {
        let b: Vec<_> = zeta.values().iter().map(|&v| v.into()).collect();
        LatticeSolver::new(&span).solve(&b).ok().flatten().is_none()
    });
    r.holds(
        "{0,1}-valued cocycles span a proper sublattice",
        &[zero_one.len() as i64],
        index_gap,
    );
    Ok(r)
}
