use eigencong_kernels::linalg::{self, Matrix};
use eigencong_kernels::{IntMatrix, Rationals};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, rows * cols).prop_map(move |v| {
        Matrix::from_fn(rows, cols, |i, j| BigInt::from(v[i * cols + j]))
    })
}

fn rational_det(m: &IntMatrix) -> BigInt {
    let q = m.map(|x| BigRational::from_integer(x.clone()));
    linalg::det(&Rationals, &q).to_integer()
}

fn is_column_hnf(h: &IntMatrix) -> bool {
    let pivots = h.hnf_pivot_rows();
    let nonzero = pivots.len();
    // Zero columns trail; pivot rows strictly increase.
    for j in nonzero..h.cols() {
        if (0..h.rows()).any(|i| !h[(i, j)].is_zero()) {
            return false;
        }
    }
    for w in pivots.windows(2) {
        if w[0] >= w[1] {
            return false;
        }
    }
    for (j, &r) in pivots.iter().enumerate() {
        let piv = &h[(r, j)];
        if !piv.is_positive() {
            return false;
        }
        for k in 0..j {
            if h[(r, k)].is_negative() || &h[(r, k)] >= piv {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_unimodular_transform((r, c) in (1usize..6, 1usize..6), seed in any::<u64>()) {
        let mut rng = seed;
        let m = Matrix::from_fn(r, c, |_, _| {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            BigInt::from(((rng >> 33) % 41) as i64 - 20)
        });
        let (h, u) = m.hnf();
        prop_assert_eq!(m.mul(&u), h.clone());
        prop_assert_eq!(u.det().abs(), BigInt::one());
        prop_assert!(is_column_hnf(&h));
        prop_assert_eq!(m.hnf_basis().cols(), linalg::rank(&Rationals, &m.map(|x| BigRational::from_integer(x.clone()))));
    }

    #[test]
    fn hnf_is_canonical(m in int_matrix(4, 4, -9, 9), v in int_matrix(4, 4, -2, 2)) {
        // Right-multiplying by a unimodular matrix leaves the HNF unchanged.
        let (_, u) = v.hnf();
        prop_assert_eq!(m.mul(&u).hnf().0, m.hnf().0);
    }

    #[test]
    fn snf_product_is_abs_det(m in int_matrix(8, 8, -50, 50)) {
        let d = m.snf();
        let prod: BigInt = d.iter().product();
        let det = rational_det(&m);
        prop_assert_eq!(prod, det.abs());
        prop_assert_eq!(m.det(), det);
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
    }

    #[test]
    fn snf_of_rectangular(m in int_matrix(3, 5, -6, 6)) {
        let d = m.snf();
        prop_assert_eq!(d.len(), 3);
        let rank = d.iter().filter(|x| !x.is_zero()).count();
        prop_assert_eq!(rank, m.rank());
    }
}

#[test]
fn documented_hnf_examples() {
    let m = IntMatrix::from_i64_rows(&[&[2, 0], &[1, 1]]);
    assert_eq!(m.hnf().0, IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]));
    let id = IntMatrix::identity(4);
    assert_eq!(id.hnf().0, id);
    let m = IntMatrix::from_i64_rows(&[&[4, 2], &[0, 2]]);
    let h = m.hnf().0;
    assert!(is_column_hnf(&h));
    assert_eq!(h.det().abs(), BigInt::from(8));
}

#[test]
fn documented_snf_examples() {
    let s = |rows: &[&[i64]]| IntMatrix::from_i64_rows(rows).snf();
    let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(s(&[&[2, 0], &[0, 3]]), b(&[1, 6]));
    assert_eq!(s(&[&[1, 0], &[0, 1]]), b(&[1, 1]));
    assert_eq!(s(&[&[2, 0], &[0, 2]]), b(&[2, 2]));
}
