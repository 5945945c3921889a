use num_bigint::BigInt;
use proptest::prelude::*;

use tableau_forge::excited::naruse_count;
use tableau_forge::formulas::{f_rho, macmahon_box, s_m_factored};
use tableau_forge::oracle::count_syt;
use tableau_forge::qalg::{poch, QFactored};
use tableau_forge::shapes::{Partition, SkewShape};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_multiset)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rho_count_is_symmetric(n in 0u32..3, a in 1u32..3, b in 0u32..3, c in 1u32..3, d in 0u32..3) {
        prop_assert_eq!(f_rho(n, a, b, c, d).ok(), f_rho(n, c, d, a, b).ok());
    }

    #[test]
    fn macmahon_is_symmetric(a in 0u32..4, b in 0u32..4, c in 0u32..4) {
        let base = macmahon_box(a, b, c).to_polynomial().unwrap();
        for (x, y, z) in [(b, a, c), (c, b, a), (a, c, b)] {
            prop_assert_eq!(&macmahon_box(x, y, z).to_polynomial().unwrap(), &base);
        }
    }

    #[test]
    fn naruse_matches_linear_extensions(outer in partition(4, 4), inner in partition(3, 3)) {
        let inner = Partition::new(
            inner.parts().iter().zip(outer.parts()).map(|(&i, &o)| i.min(o)).collect()
        ).unwrap_or_else(|_| Partition::empty());
        if let Ok(shape) = SkewShape::new(outer, inner) {
            prop_assert_eq!(naruse_count(&shape).unwrap(), count_syt(shape).unwrap());
        }
    }

    #[test]
    fn factored_products_multiply_after_expansion(s in 1i64..4, k in 0u64..4, e in 0i64..3) {
        let f = poch(s, k);
        let g = QFactored::q_power(e) / poch(1, k);
        let t = 12;
        prop_assert!((&f * &g).expand(t).unwrap().agrees(&(&f.expand(t).unwrap() * &g.expand(t).unwrap())));
    }

    #[test]
    fn m_shape_limit_is_a_count(n in 0u32..2, a in 0u32..2, b in 0u32..2, c in 0u32..2, d in 0u32..2) {
        let shape = tableau_forge::shapes::build_m(n, a, b, c, d, 1).unwrap();
        let size = tableau_forge::shapes::RowIntervals::size(&shape) as u64;
        let lim = s_m_factored(n, a, b, c, d, 1).unwrap().limit_q1(size).unwrap();
        prop_assert!(lim.is_integer());
        prop_assert_eq!(lim.to_integer(), count_syt(shape).unwrap());
    }
}

#[test]
fn small_counts() {
    assert_eq!(f_rho(1, 1, 1, 1, 1).unwrap(), BigInt::from(16));
}
