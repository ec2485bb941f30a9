use gpiq_core::prob::{det_bareiss, leading_principal_minors};
use gpiq_core::BigRational;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::from_integer(1.into());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigRational::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=40).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<BigRational>>> {
    (1..=max)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(rational(), n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bareiss_equals_cofactor_expansion(m in matrix(6)) {
        prop_assert_eq!(det_bareiss(&m), cofactor_det(&m));
    }

    #[test]
    fn leading_minors_equal_block_determinants(m in matrix(5)) {
        let minors = leading_principal_minors(&m);
        for (i, minor) in minors.iter().enumerate() {
            let block: Vec<Vec<BigRational>> = m[..=i].iter().map(|r| r[..=i].to_vec()).collect();
            prop_assert_eq!(minor, &cofactor_det(&block));
        }
        if minors.len() < m.len() {
            prop_assert!(minors.last().unwrap().is_zero());
        }
    }

    #[test]
    fn rank_deficient_matrices_vanish(m in matrix(5), pick in 0usize..5, coeff in rational()) {
        let n = m.len();
        prop_assume!(n >= 2);
        let mut m = m;
        let (src, dst) = (pick % n, (pick + 1) % n);
        m[dst] = m[src].iter().map(|x| x * &coeff).collect();
        prop_assert!(det_bareiss(&m).is_zero());
    }
}
