use num_rational::BigRational;
use proptest::prelude::*;
use qhaar::corep::*;
use qhaar::qalgebra::{dq_power, elem3, star, star_generator};
use qhaar::qarith::{qfact, QRational};
use qhaar::{AlgebraElement, Error};

fn w(a: i64, b: i64, c: i64) -> DominantWeight {
    DominantWeight::new(a, b, c).unwrap()
}

fn vec_a(d1: u32, d2: u32, c1: u32, c2: u32, c3: u32) -> BasisVector {
    BasisVector::new([d1, d2, 0], [c1, c2, c3], 0).unwrap()
}

fn vec_b(d1: u32, d2: u32, d3: u32, c2: u32, c3: u32) -> BasisVector {
    BasisVector::new([d1, d2, d3], [0, c2, c3], 0).unwrap()
}

fn q(e: i64) -> QRational {
    QRational::q_pow(e)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Weyl dimension formula for `gl_3`.
fn weyl_dim(l: DominantWeight) -> usize {
    let (a, b, c) = (l.lambda1, l.lambda2, l.lambda3);
    ((a - b + 1) * (b - c + 1) * (a - c + 2) / 2) as usize
}

#[test]
fn tableau_counts() {
    assert_eq!(enumerate_ssyt(w(1, 0, 0)).len(), 3);
    assert_eq!(enumerate_ssyt(w(2, 1, 0)).len(), 8);
    assert_eq!(enumerate_ssyt(w(1, 1, 0)).len(), 3);
    assert_eq!(enumerate_ssyt(w(0, 0, 0)).len(), 1);
    for l in DominantWeight::all_normalized(5) {
        assert_eq!(enumerate_ssyt(l).len(), weyl_dim(l), "{l}");
        let spaces = weight_spaces(l);
        assert_eq!(spaces.values().map(|s| s.len()).sum::<usize>(), weyl_dim(l));
        if l.lambda1 == l.lambda2 {
            assert!(spaces.values().all(|s| s.len() == 1));
        }
    }
}

#[test]
fn tableau_brute_force() {
    let l = w(2, 1, 0);
    let mut count = 0;
    for code in 0..27u32 {
        let rows = vec![vec![(code % 3 + 1) as u8, (code / 3 % 3 + 1) as u8], vec![(code / 9 + 1) as u8]];
        if Tableau::new(l, rows).is_ok() {
            count += 1;
        }
    }
    assert_eq!(count, 8);
    assert_eq!(Tableau::new(l, vec![vec![2, 1], vec![3]]), Err(Error::NotSemistandard));
    assert_eq!(Tableau::new(l, vec![vec![1, 1], vec![1]]), Err(Error::NotSemistandard));
}

#[test]
fn shifted_weights() {
    let l = w(1, 0, -1);
    assert_eq!(enumerate_ssyt(l).len(), 8);
    let spaces = weight_spaces(l);
    assert!(spaces.contains_key(&[0, 0, 0]));
    assert!(spaces.contains_key(&[1, 0, -1]));
    let v = tableau_to_vector(&spaces[&[0, 0, 0]][0]).unwrap();
    assert_eq!(v.det_shift, -1);
    assert!(DominantWeight::new(0, 1, 0).is_err());
}

#[test]
fn tableau_columns() {
    let col12 = Tableau::new(w(1, 1, 0), vec![vec![1], vec![2]]).unwrap();
    assert_eq!(tableau_to_vector(&col12).unwrap(), vec_a(1, 0, 0, 0, 0));
    let box2 = Tableau::new(w(1, 0, 0), vec![vec![2]]).unwrap();
    assert_eq!(tableau_to_vector(&box2).unwrap(), vec_a(0, 0, 0, 1, 0));
    let t = Tableau::new(w(2, 1, 0), vec![vec![1, 3], vec![2]]).unwrap();
    assert_eq!(tableau_to_vector(&t).unwrap(), vec_a(1, 0, 0, 0, 1));
    let t = Tableau::new(w(2, 2, 0), vec![vec![1, 2], vec![3, 3]]).unwrap();
    let v = tableau_to_vector(&t).unwrap();
    assert_eq!(v, vec_b(0, 1, 1, 0, 0));
    assert_eq!(v.family, Family::B);
    assert!(BasisVector::new([0, 0, 1], [1, 0, 0], 0).is_err());
}

#[test]
fn vector_elements() {
    let qq = q(1);
    let ae_bd = &elem3("ae", 0) - &elem3("bd", 0).scale(&qq);
    assert_eq!(vector_to_element(&vec_a(1, 0, 0, 0, 0)), ae_bd);
    assert_eq!(vector_to_element(&vec_a(0, 0, 1, 0, 0)), elem3("a", 0));
    let bf_ce = &elem3("bf", 0) - &elem3("ce", 0).scale(&qq);
    // q^2 g* D_q is the minor itself.
    assert_eq!(vector_to_element(&vec_b(0, 0, 1, 0, 0)), bf_ce);
    assert_eq!(vector_to_element(&vec_a(0, 0, 0, 0, 0)), AlgebraElement::one(3));
}

/// The product of stars and `D_q` powers exactly as the factors are written.
fn literal(v: &BasisVector) -> AlgebraElement {
    let minus_q = -q(1);
    let mut acc = AlgebraElement::one(3);
    let factors = [
        (star_generator(3, 3, 3), v.d1),
        (star_generator(3, 3, 2).scale(&minus_q), v.d2),
        (star_generator(3, 3, 1).scale(&q(2)), v.d3),
        (AlgebraElement::generator(3, 1, 1), v.c1),
        (AlgebraElement::generator(3, 1, 2), v.c2),
        (AlgebraElement::generator(3, 1, 3), v.c3),
    ];
    for (f, e) in factors {
        acc = &acc * &f.pow(e);
    }
    &acc * &dq_power(3, v.d1 + v.d2 + v.d3)
}

#[test]
fn vector_elements_match_literal_products() {
    for l in DominantWeight::all_normalized(2) {
        for t in enumerate_ssyt(l) {
            let v = tableau_to_vector(&t).unwrap();
            assert!(vector_to_element(&v).algebra_eq(&literal(&v)), "{v}");
            for side in [Comodule::Right, Comodule::Left] {
                let x = vector_element(&v, side);
                assert!(vector_star_element(&v, side).algebra_eq(&star(&x)), "{v} {side:?}");
            }
        }
    }
}

#[test]
fn closed_form_examples() {
    // <v, v>_R with d2 = c2 = c3 = 0.
    for d1 in 0..=2i64 {
        for c1 in 0..=2i64 {
            let v = vec_a(d1 as u32, 0, c1 as u32, 0, 0);
            let qm1 = |e: i64| QRational::q_pow_minus_one(e);
            let expect = &(&(&qm1(2) * &qm1(2)) * &qm1(4)) / &(&(&qm1(2 * c1 + 2) * &qm1(2 * d1 + 2)) * &qm1(2 * (d1 + c1) + 4));
            assert_eq!(gram_entry_closed(&v, &v, Form::R, Comodule::Right).unwrap(), expect);
        }
    }
    // Against h((g*)^d3 (h*)^d2 (k*)^d1 k^d1 h^d2 g^d3): the vector's scalars and the
    // reordering of its starred factors give q^{4 d3 + 2 d2 + 2(d1 d2 + d1 d3 + d2 d3)}.
    for (d1, d2, d3) in [(1i64, 1i64, 1i64), (0, 0, 1), (2, 0, 1), (0, 2, 2), (2, 2, 1)] {
        let v = vec_b(d1 as u32, d2 as u32, d3 as u32, 0, 0);
        let display = &(&(&qfact(d1) * &qfact(d2)) * &(&qfact(d3) * &qfact(2))) / &qfact(d1 + d2 + d3 + 2);
        let scale = q(4 * d3 + 2 * d2 + 2 * (d1 * d2 + d1 * d3 + d2 * d3));
        assert_eq!(gram_entry_closed(&v, &v, Form::R, Comodule::Right).unwrap(), &scale * &display);
    }
    let one = vec_a(0, 0, 0, 0, 0);
    for form in [Form::L, Form::R] {
        assert_eq!(gram_entry_closed(&one, &one, form, Comodule::Left).unwrap(), QRational::one());
        assert_eq!(gram_entry_direct(&one, &one, form, Comodule::Right).unwrap(), QRational::one());
    }
    let a = vec_a(0, 0, 1, 0, 0);
    let b = vec_a(0, 0, 0, 1, 0);
    assert_eq!(gram_entry_closed(&a, &b, Form::L, Comodule::Right), Err(Error::WeightMismatch));
}

#[test]
fn direct_examples() {
    let v = vec_a(1, 0, 1, 0, 0);
    assert_eq!(
        gram_entry_direct(&v, &v, Form::R, Comodule::Right).unwrap(),
        gram_entry_closed(&v, &v, Form::R, Comodule::Right).unwrap()
    );
    // h(a* a) = h((ek - q fh) det^-1 a)
    let a = vec_a(0, 0, 1, 0, 0);
    let ek_fh = &elem3("ek", 1) - &elem3("fh", 1).scale(&q(1));
    let direct = qhaar::haar::haar_product(&ek_fh, &elem3("a", 0)).unwrap();
    assert_eq!(gram_entry_direct(&a, &a, Form::L, Comodule::Right).unwrap(), direct);
    let r = gram_entry_closed(&a, &a, Form::R, Comodule::Right).unwrap();
    assert_eq!(direct, &r * &q(4));
    let big = vec_a(0, 0, 7, 0, 0);
    assert!(matches!(gram_entry_direct(&big, &big, Form::L, Comodule::Right), Err(Error::Feasibility(_))));
}

#[test]
fn gram_matrices_closed_equal_direct() {
    for l in DominantWeight::all_normalized(3) {
        for mu in weight_spaces(l).into_keys() {
            for side in [Comodule::Right, Comodule::Left] {
                for form in [Form::L, Form::R] {
                    let c = gram_matrix(l, mu, form, side, Method::Closed).unwrap();
                    let d = gram_matrix(l, mu, form, side, Method::Direct).unwrap();
                    assert_eq!(c.entries, d.entries, "{l} {mu:?} {form:?} {side:?}");
                    assert!(d.is_symmetric());
                }
            }
        }
    }
}

#[test]
fn gram_examples() {
    let g = gram_matrix(w(1, 0, 0), [1, 0, 0], Form::L, Comodule::Right, Method::Direct).unwrap();
    let a = vec_a(0, 0, 1, 0, 0);
    assert_eq!(g.entries, vec![vec![gram_entry_direct(&a, &a, Form::L, Comodule::Right).unwrap()]]);
    let g = gram_matrix(w(2, 1, 0), [1, 1, 1], Form::L, Comodule::Right, Method::Closed).unwrap();
    assert_eq!(g.dim(), 2);
    assert_eq!(g.vectors[1], g.vectors[0].o2().unwrap());
    assert_eq!(
        gram_matrix(w(1, 0, 0), [0, 0, 0], Form::L, Comodule::Right, Method::Closed),
        Err(Error::EmptyWeightSpace)
    );
    let js = g.to_json();
    assert_eq!(js["entries"].as_array().unwrap().len(), 2);
    assert_eq!(js["side"], "L");
    assert_eq!(js["vectors"][0].as_array().unwrap().len(), 6);
    assert!(g.to_latex().starts_with("\\begin{tabular}{cc}"));
}

#[test]
fn det_shift_does_not_change_gram() {
    let g0 = gram_matrix(w(2, 1, 0), [1, 1, 1], Form::R, Comodule::Right, Method::Closed).unwrap();
    let g1 = gram_matrix(w(3, 2, 1), [2, 2, 2], Form::R, Comodule::Right, Method::Closed).unwrap();
    assert_eq!(g0.entries, g1.entries);
}

#[test]
fn orthogonality_across_weights() {
    for l in DominantWeight::all_normalized(2) {
        let ts = enumerate_ssyt(l);
        for s in &ts {
            for t in &ts {
                if s.content() == t.content() {
                    continue;
                }
                let (u, v) = (tableau_to_vector(s).unwrap(), tableau_to_vector(t).unwrap());
                for side in [Comodule::Right, Comodule::Left] {
                    for form in [Form::L, Form::R] {
                        assert!(gram_entry_direct(&u, &v, form, side).unwrap().is_zero(), "{s} {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn positive_definite_at_sample_points() {
    for l in DominantWeight::all_normalized(3) {
        for mu in weight_spaces(l).into_keys() {
            for form in [Form::L, Form::R] {
                let g = gram_matrix(l, mu, form, Comodule::Right, Method::Closed).unwrap();
                for q0 in [rat(1, 4), rat(9, 16)] {
                    assert!(g.is_positive_definite_at(&q0).unwrap(), "{l} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn modular_transfer() {
    for l in DominantWeight::all_normalized(3) {
        for (_, ts) in weight_spaces(l) {
            let vs: Vec<BasisVector> = ts.iter().map(|t| tableau_to_vector(t).unwrap()).collect();
            for vi in &vs {
                for vj in &vs {
                    let lhs = gram_entry_direct(vi, vj, Form::L, Comodule::Right).unwrap();
                    let rhs = gram_entry_direct(vj, vi, Form::R, Comodule::Right).unwrap();
                    assert_eq!(lhs, &q(vj.rho_exponent()) * &rhs, "{vi} {vj}");
                }
            }
        }
    }
}

#[test]
fn orthogonalization() {
    let g = QRational::from_i64(3);
    let o = gram_schmidt(&[vec![g.clone()]]).unwrap();
    assert_eq!(o.transform, vec![vec![QRational::one()]]);
    assert_eq!(o.norms_sq, vec![g.clone()]);
    let diag = vec![vec![g.clone(), QRational::zero()], vec![QRational::zero(), q(2)]];
    let o = gram_schmidt(&diag).unwrap();
    assert_eq!(o.transform[1][0], QRational::zero());
    let singular = vec![vec![QRational::zero(); 2]; 2];
    assert_eq!(gram_schmidt(&singular), Err(Error::SingularMinor(1)));
    for (l, mu) in [(w(2, 1, 0), [1, 1, 1]), (w(4, 2, 0), [2, 2, 2]), (w(3, 1, 0), [1, 2, 1])] {
        let gm = gram_matrix(l, mu, Form::L, Comodule::Right, Method::Closed).unwrap();
        let o = gram_schmidt(&gm.entries).unwrap();
        let d = congruence(&o.transform, &gm.entries);
        for i in 0..gm.dim() {
            assert_eq!(o.transform[i][i], QRational::one());
            for j in 0..gm.dim() {
                let expect = if i == j { o.norms_sq[i].clone() } else { QRational::zero() };
                assert_eq!(d[i][j], expect);
                if j > i {
                    assert!(o.transform[i][j].is_zero());
                }
            }
        }
    }
}

#[test]
fn dimensions_and_norms() {
    let d = quantum_dimension(w(1, 0, 0));
    assert_eq!(d, &(&q(2) + &QRational::one()) + &q(-2));
    assert_eq!(quantum_dimension(w(1, 1, 0)), d);
    assert_eq!(quantum_dimension(w(0, 0, 0)), QRational::one());
    assert_eq!(quantum_dimension(w(2, 1, 0)).evaluate(&rat(1, 1)).unwrap(), rat(8, 1));
    let (l, r) = matrix_coeff_norm(w(1, 0, 0), [1, 0, 0], [1, 0, 0]).unwrap();
    assert_eq!(l, &q(2) / &d);
    assert_eq!(r, &q(-2) / &d);
    let (l, _) = matrix_coeff_norm(w(1, 0, 0), [0, 1, 0], [1, 0, 0]).unwrap();
    assert_eq!(l, d.inv().unwrap());
    let (l, r) = matrix_coeff_norm(w(0, 0, 0), [0, 0, 0], [0, 0, 0]).unwrap();
    assert_eq!((l, r), (QRational::one(), QRational::one()));
    assert!(matrix_coeff_norm(w(1, 0, 0), [2, 0, 0], [1, 0, 0]).is_err());
}

#[test]
fn coefficient_norms_sum_to_one() {
    // Summing <w_ij, w_ij>_L over j for fixed i gives dim * q^{2(rho, mu_i)} / d.
    let l = w(2, 1, 0);
    let contents: Vec<_> = enumerate_ssyt(l).iter().map(|t| t.content()).collect();
    let mut total = QRational::zero();
    for mu in &contents {
        total += &matrix_coeff_norm(l, *mu, *mu).unwrap().0;
    }
    assert_eq!(total, QRational::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn gram_is_symmetric_and_chain_ordered(l1 in 0i64..=4, l2f in 0i64..=4, pick in 0usize..50) {
        let l = w(l1, l2f.min(l1), 0);
        let spaces = weight_spaces(l);
        let mu = *spaces.keys().nth(pick % spaces.len()).unwrap();
        let g = gram_matrix(l, mu, Form::R, Comodule::Right, Method::Closed).unwrap();
        prop_assert!(g.is_symmetric());
        for p in g.vectors.windows(2) {
            prop_assert_eq!(p[0].o2(), Some(p[1]));
        }
    }
}
