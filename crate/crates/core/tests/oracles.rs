//! Linear-algebra and representation checks against independent oracles.

use alexq_core::burau::{burau_generator, burau_reduced, burau_unreduced, reduced_generator, row_sums};
use alexq_core::linalg::{condense, condense_with_divisor, det_bareiss};
use alexq_core::{BraidWord, LambdaMatrix, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Laplace expansion along the first row.
fn cofactor_det(a: &LambdaMatrix) -> LaurentPoly {
    let n = a.rows();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut det = LaurentPoly::zero();
    for j in 0..n {
        if a[(0, j)].is_zero() {
            continue;
        }
        let term = &a[(0, j)] * &cofactor_det(&a.minor(0, j));
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}

fn entry() -> impl Strategy<Value = LaurentPoly> {
    (-2i64..=2, prop::collection::vec(-3i64..=3, 0..=3))
        .prop_map(|(low, cs)| LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect()))
}

fn square(n: impl Strategy<Value = usize>) -> impl Strategy<Value = LambdaMatrix> {
    n.prop_flat_map(|n| prop::collection::vec(entry(), n * n)).prop_map(|es| {
        let n = (es.len() as f64).sqrt() as usize;
        LambdaMatrix::from_fn(n, n, |i, j| es[i * n + j].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_cofactor_expansion(a in square(1usize..=4)) {
        prop_assert_eq!(det_bareiss(&a).unwrap(), cofactor_det(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn condensation_scales_determinant(a in square(Just(3usize))) {
        prop_assume!(!a[(0, 0)].is_zero());
        let b = condense(&a).unwrap();
        prop_assert_eq!(b.rows(), 2);
        prop_assert_eq!(cofactor_det(&b), &a[(0, 0)] * &cofactor_det(&a));
    }

    #[test]
    fn condensation_with_common_divisor(a in square(Just(3usize)), d in entry()) {
        prop_assume!(!a[(0, 0)].is_zero() && !d.is_zero());
        let mut scaled = a.clone();
        for i in 0..3 {
            scaled[(i, 0)] = &a[(i, 0)] * &d;
        }
        let b = condense_with_divisor(&scaled, &d).unwrap();
        let lhs = &scaled[(0, 0)] * &cofactor_det(&b);
        let rhs = &a[(0, 0)].pow(2) * &cofactor_det(&scaled);
        prop_assert_eq!(lhs, rhs);
    }
}

fn gen(i: i32, n: usize, reduced: bool) -> LambdaMatrix {
    if reduced {
        reduced_generator(i, n).unwrap()
    } else {
        burau_generator(i, n).unwrap()
    }
}

fn product(ms: &[LambdaMatrix]) -> LambdaMatrix {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| &acc * m)
}

#[test]
fn braid_and_inverse_relations() {
    for reduced in [false, true] {
        for n in 2..=5usize {
            let dim = if reduced { n - 1 } else { n };
            let id = LambdaMatrix::identity(dim);
            for i in 1..n as i32 {
                let (s, si) = (gen(i, n, reduced), gen(-i, n, reduced));
                assert_eq!(&s * &si, id, "n={n} i={i} reduced={reduced}");
                assert_eq!(&si * &s, id, "n={n} i={i} reduced={reduced}");
                for j in 1..n as i32 {
                    let t = gen(j, n, reduced);
                    if (i - j).abs() >= 2 {
                        assert_eq!(&s * &t, &t * &s, "far commutation n={n} {i},{j}");
                    } else if j == i + 1 {
                        assert_eq!(
                            product(&[s.clone(), t.clone(), s.clone()]),
                            product(&[t.clone(), s.clone(), t.clone()]),
                            "braid relation n={n} {i},{j} reduced={reduced}"
                        );
                    }
                }
            }
        }
    }
}

fn braid_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|k| prop_oneof![Just(k), Just(-k)]);
        prop::collection::vec(letter, 0..=12).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn row_sums_vanish(w in braid_word()) {
        let a = burau_unreduced(&w).minus_identity().unwrap();
        prop_assert!(row_sums(&a).iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn word_and_inverse_cancel(w in braid_word()) {
        let inv = BraidWord::new(w.strands(), w.letters().iter().rev().map(|k| -k).collect()).unwrap();
        let n = w.strands();
        prop_assert_eq!(&burau_unreduced(&w) * &burau_unreduced(&inv), LambdaMatrix::identity(n));
        prop_assert_eq!(&burau_reduced(&w) * &burau_reduced(&inv), LambdaMatrix::identity(n - 1));
    }
}
