use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qhaar::qarith::*;
use qhaar::Error;

fn q(a: i64) -> QRational {
    QRational::q_pow(a)
}

fn one() -> QRational {
    QRational::one()
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn field_examples() {
    assert_eq!((q(1) - q(-1)) + q(-1), q(1));
    assert_eq!(QRational::one_minus_q_pow(4) / QRational::one_minus_q_pow(2), one() + q(2));
    let a = QRational::one_minus_q_pow(2);
    let b = QRational::one_minus_q_pow(4);
    assert_eq!(&(&(&a * &a) * &b) / &a, &a * &b);
    assert_eq!(one().checked_div(&QRational::zero()), Err(Error::DivisionByZero));
}

#[test]
fn q_numbers_and_binomials() {
    assert_eq!(q_number(3, 2), one() + q(2) + q(4));
    assert_eq!(q_number(0, 2), QRational::zero());
    assert_eq!(q_number(1, 2), one());
    assert_eq!(q_binomial(2, 1), one() + q(2));
    assert_eq!(q_binomial(3, 5), QRational::zero());
    assert_eq!(q_binomial(3, -1), QRational::zero());
    assert_eq!(q_binomial(4, 2), (one() + q(2) + q(4)) * (one() + q(4)));
    assert_eq!(q_multinomial(2, &[1, 1, 0]), one() + q(2));
    assert_eq!(q_multinomial(3, &[3, 0, 0]), one());
    assert_eq!(q_multinomial(1, &[1, 1, -1]), QRational::zero());
}

#[test]
fn pochhammer_symbols() {
    assert_eq!(QPochhammer::new(1, 2).expand(), QRational::one_minus_q_pow(2) * QRational::one_minus_q_pow(4));
    assert_eq!(QPochhammer::new(1, 0).expand(), one());
    assert_eq!(QPochhammer::new(2, 1).expand(), QRational::one_minus_q_pow(4));
    for n in 0..=12 {
        let direct = (1..=n).fold(one(), |acc, j| &acc * &QRational::one_minus_q_pow(2 * j));
        assert_eq!(qfact(n), direct);
        assert_eq!(pochhammer(1, n), direct);
    }
}

#[test]
fn binomial_symmetry_and_pascal() {
    for n in 0..=12 {
        for k in 0..=n {
            assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
            if n > 0 {
                assert_eq!(q_binomial(n, k), &q(2 * k) * &q_binomial(n - 1, k) + q_binomial(n - 1, k - 1), "{n} {k}");
            }
        }
    }
}

#[test]
fn numeric_evaluation() {
    assert_eq!((one() + q(2)).evaluate(&rat(1, 2)).unwrap(), rat(5, 4));
    assert!(matches!(QRational::one_minus_q_pow(2).inv().unwrap().evaluate(&rat(1, 1)), Err(Error::Pole(_))));
    assert!(matches!(QRational::v_pow(1).evaluate(&rat(1, 2)), Err(Error::IrrationalSqrt(_))));
    assert_eq!(QRational::v_pow(1).evaluate(&rat(1, 4)).unwrap(), rat(1, 2));
    assert_eq!(evaluate_numeric(&q(-2), &rat(2, 3)).unwrap(), rat(9, 4));
}

#[test]
fn canonical_form() {
    let x = &(&q(3) * &QRational::one_minus_q_pow(2)) / &(&q(-5) * &QRational::q_pow_minus_one(2));
    assert_eq!(x, -q(8));
    assert!(x.denom().is_one());
    let y = &(&one() + &q(2)) / &(&QRational::from_i64(-2) * &QRational::q_pow_minus_one(4));
    let (lead, val) = {
        let terms: Vec<_> = y.denom().terms().collect();
        (terms.last().unwrap().1.clone(), terms[0].0)
    };
    assert!(lead > BigInt::from(0));
    assert_eq!(val, 0);
}

#[test]
fn json_and_latex() {
    let x = &(&one() - &q(2)) / &(&QRational::from_i64(2) + &QRational::v_pow(3));
    let js = x.to_json();
    assert_eq!(js["num"], serde_json::json!([[0, 1], [4, -1]]));
    assert_eq!(QRational::from_json(&js).unwrap(), x);
    assert_eq!(q(2).to_latex(), "q^{2}");
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..5, -3i64..4), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn qrational() -> impl Strategy<Value = QRational> {
    (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| QRational::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]
    #[test]
    fn ring_axioms(x in qrational(), y in qrational(), z in qrational()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in qrational(), y in qrational(), num in 1i64..7, den in 1i64..7) {
        // v = num/den, so q = v^2 and half powers stay rational
        let q0 = rat(num * num, den * den);
        if let (Ok(a), Ok(b)) = (x.evaluate(&q0), y.evaluate(&q0)) {
            prop_assert_eq!((&x + &y).evaluate(&q0).unwrap(), &a + &b);
            prop_assert_eq!((&x * &y).evaluate(&q0).unwrap(), &a * &b);
        }
    }

    #[test]
    fn json_round_trip(x in qrational()) {
        prop_assert_eq!(QRational::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn multinomial_is_a_product_of_binomials(a in 0i64..5, b in 0i64..5, c in 0i64..5) {
        let m = a + b + c;
        prop_assert_eq!(q_multinomial(m, &[a, b, c]), q_binomial(m, a) * q_binomial(b + c, b));
    }
}
