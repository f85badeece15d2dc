use laver_linalg::{kernel_basis, quotient_group, rank, smith_normal_form, solve_in_lattice, BigInt, IntegerMatrix};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, c), r).prop_map(|rows| IntegerMatrix::from_rows(&rows))
    })
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

// Z^2 modulo the span of (2, 0)
#[test]
fn quotient_with_torsion() {
    let incoming = IntegerMatrix::from_rows(&[vec![2], vec![0]]);
    let outgoing = IntegerMatrix::zeros(1, 2);
    let q = quotient_group(&incoming, &outgoing).unwrap();
    assert_eq!(q.free_rank, 1);
    assert_eq!(q.torsion, big(&[2]));
}

#[test]
fn lattice_membership_is_not_rational_membership() {
    let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(solve_in_lattice(&m, &big(&[4, 9])).unwrap(), Some(big(&[2, 3])));
    assert_eq!(solve_in_lattice(&m, &big(&[1, 0])).unwrap(), None);
}

proptest! {
    #[test]
    fn smith_factorisation(m in small_matrix()) {
        let s = smith_normal_form(&m);
        let prod = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        prop_assert_eq!(&prod, &s.diagonal);
        prop_assert_eq!(s.rank(), rank(&m));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
    }

    #[test]
    fn kernel_is_killed_and_sized(m in small_matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len() + rank(&m), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == BigInt::from(0)));
        }
    }

    #[test]
    fn images_are_in_the_lattice(m in small_matrix(), seed in prop::collection::vec(-3i64..=3, 4)) {
        let x = big(&seed[..m.cols()]);
        let b = m.mul_vec(&x).unwrap();
        let y = solve_in_lattice(&m, &b).unwrap().expect("b lies in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }
}
