use fibsum::exact::{BigRational, QSqrt5};
use fibsum::poly::{check_dattoli, dattoli_sides, Dattoli, Poly};
use fibsum::sequences::{fib, lucas};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = BigRational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(p, q)| BigRational::new(p, q).unwrap())
}

fn q5() -> impl Strategy<Value = QSqrt5> {
    (rat(), rat()).prop_map(|(a, b)| QSqrt5::new(a, b))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..6).prop_map(Poly::new)
}

proptest! {
    #[test]
    fn rational_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &BigRational::zero(), a.clone());
        prop_assert_eq!(&a - &a, BigRational::zero());
        prop_assert!((&a * &b).is_canonical());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<BigRational>().unwrap(), a);
    }

    #[test]
    fn qsqrt5_laws(x in q5(), y in q5(), z in q5()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), QSqrt5::one());
        }
    }

    #[test]
    fn qsqrt5_pow_adds(i in -30i64..30, j in -30i64..30) {
        let a = QSqrt5::alpha();
        prop_assert_eq!(&a.pow(i).unwrap() * &a.pow(j).unwrap(), a.pow(i + j).unwrap());
    }

    #[test]
    fn binet_components(n in -3000i64..3000) {
        // alpha^n = (L_n + F_n √5)/2
        let p = QSqrt5::alpha().pow(n).unwrap();
        prop_assert_eq!(p, QSqrt5::new(BigRational::new(lucas(n), 2).unwrap(), BigRational::new(fib(n), 2).unwrap()));
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly(), x in rat()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).eval(&x), &a.eval(&x) * &b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), &a.eval(&x) + &b.eval(&x));
    }

    #[test]
    fn dattoli_sides_agree_pointwise(n in 0u32..40, x in rat(), which in prop::sample::select(Dattoli::ALL.to_vec())) {
        let (lhs, rhs) = dattoli_sides(which, n).unwrap();
        prop_assert_eq!(lhs.eval(&x) == rhs.eval(&x), check_dattoli(which, n).unwrap());
        prop_assert!(check_dattoli(which, n).unwrap());
    }
}
