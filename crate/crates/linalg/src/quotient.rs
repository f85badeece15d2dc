use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{smith_normal_form, ColumnEchelon, IntegerMatrix, LatticeSolver, LinalgError, SparseMatrix};

/// Structure of a finitely generated abelian group `Z^free ⊕ ⊕ Z/t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStructure {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

/// `ker(outgoing) / im(incoming)` for a pair of composable maps with
/// `outgoing * incoming == 0`.
///
/// The image is rewritten in coordinates of a kernel basis and the Smith
/// form of that coordinate matrix gives the quotient.
pub fn quotient_group(incoming: &IntegerMatrix, outgoing: &IntegerMatrix) -> Result<QuotientStructure, LinalgError> {
    quotient_group_sparse(&incoming.into(), &outgoing.into())
}

/// [`quotient_group`] for maps given in sparse form.
pub fn quotient_group_sparse(
    incoming: &SparseMatrix,
    outgoing: &SparseMatrix,
) -> Result<QuotientStructure, LinalgError> {
    if outgoing.cols() != incoming.rows() {
        return Err(LinalgError::Dimension(format!(
            "maps do not compose: {}x{} after {}x{}",
            outgoing.rows(),
            outgoing.cols(),
            incoming.rows(),
            incoming.cols()
        )));
    }
    if !outgoing.mul(incoming)?.is_zero() {
        return Err(LinalgError::Contract("composite of consecutive maps is nonzero".into()));
    }

    let basis = ColumnEchelon::from_sparse(outgoing).kernel_basis();
    let dim = basis.len();
    if dim == 0 {
        return Ok(QuotientStructure {
            free_rank: 0,
            torsion: Vec::new(),
        });
    }
    let basis = IntegerMatrix::from_columns(incoming.rows(), &basis);
    let solver = LatticeSolver::new(&basis);

    let columns = incoming.transpose();
    let mut coords = IntegerMatrix::zeros(dim, incoming.cols());
    for j in 0..incoming.cols() {
        let entries = columns.row(j);
        if entries.is_empty() {
            continue;
        }
        let mut col = vec![BigInt::zero(); incoming.rows()];
        for (i, v) in entries {
            col[*i] = v.clone();
        }
        let y = solver
            .solve(&col)?
            .ok_or_else(|| LinalgError::Contract(format!("image column {j} is not in the kernel lattice")))?;
        for (i, v) in y.into_iter().enumerate() {
            coords[(i, j)] = v;
        }
    }

    let factors = smith_normal_form(&coords).invariant_factors();
    let rank = factors.iter().filter(|d| !d.is_zero()).count();
    Ok(QuotientStructure {
        free_rank: dim - rank,
        torsion: factors.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
    })
}
