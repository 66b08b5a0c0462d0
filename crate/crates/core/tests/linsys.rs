use proptest::prelude::*;
use qhaar::haar::{haar_order1, haar_pseudo, haar_ref, haar_state, PseudoIndex};
use qhaar::linsys::*;
use qhaar::perm::permutations;
use qhaar::qalgebra::{comultiply_order_filtered, dq_power};
use qhaar::qarith::{q_factorial, QRational};
use qhaar::{AlgebraElement, CountingMatrix, Error};

fn perm_matrix(sigma: &[usize]) -> CountingMatrix {
    let n = sigma.len();
    let mut cm = CountingMatrix::zeros(n);
    for (i, &j) in sigma.iter().enumerate() {
        cm.entries[i * n + j] = 1;
    }
    cm
}

fn antidiagonal(n: usize, m: u32) -> CountingMatrix {
    let mut cm = CountingMatrix::zeros(n);
    for i in 0..n {
        cm.entries[i * n + n - 1 - i] = m;
    }
    cm
}

#[test]
fn enumeration_sizes() {
    assert_eq!(enumerate_bnm(3, 1).len(), 6);
    assert_eq!(enumerate_bnm(3, 2).len(), 21);
    assert_eq!(enumerate_bnm(1, 5).len(), 1);
    assert_eq!(enumerate_bnm(4, 2).len(), 282);
    for m in 0..=5u32 {
        let mi = m as usize;
        assert_eq!(enumerate_bnm(3, m).len(), (mi + 1) * (mi + 2) * (mi * mi + 3 * mi + 4) / 8);
        assert_eq!(enumerate_bnm(2, m).len(), mi + 1);
    }
}

#[test]
fn enumeration_is_sorted_complete_and_stochastic() {
    let set = enumerate_bnm(3, 3);
    assert!(set.matrices.windows(2).all(|w| w[0] < w[1]));
    assert!(set.matrices.iter().all(|c| c.order() == Some(3)));
    let mut brute = 0;
    for code in 0..4u32.pow(9) {
        let entries: Vec<u32> = (0..9).map(|i| (code / 4u32.pow(i)) % 4).collect();
        if (CountingMatrix { n: 3, entries }).order() == Some(3) {
            brute += 1;
        }
    }
    assert_eq!(brute, set.len());
    let params: Vec<CountingMatrix> = PseudoIndex::all(3).iter().map(|i| i.counting_matrix()).collect();
    assert!(params.iter().all(|c| set.index_of(c).is_some()));
}

#[test]
fn detq_expansion() {
    let b = detq_power_expand(3, 1).unwrap();
    assert_eq!(b.len(), 6);
    assert_eq!(b[&perm_matrix(&[2, 1, 0])], QRational::neg_q_pow(3));
    let b2 = detq_power_expand(2, 1).unwrap();
    assert_eq!(b2[&perm_matrix(&[0, 1])], QRational::one());
    let b3 = detq_power_expand(3, 2).unwrap();
    let coef = dq_power(3, 2).coeff(&antidiagonal(3, 2).canonical_word(0));
    assert_eq!(b3[&antidiagonal(3, 2)], coef);
    assert!(matches!(detq_power_expand(3, 4), Err(Error::Feasibility(_))));
}

#[test]
fn order_one_systems() {
    for n in 2..=4 {
        let sys = build_system(n, 1).unwrap();
        assert_eq!(sys.rows.len(), sys.unknowns.len().pow(2) + 1);
        let sol = solve_system(&sys).unwrap();
        for sigma in permutations(n) {
            assert_eq!(sol[&perm_matrix(&sigma)], haar_order1(&sigma), "n = {n}, {sigma:?}");
        }
    }
    let sol = solve_system(&build_system(2, 1).unwrap()).unwrap();
    let expect = QRational::one() / (QRational::one() + QRational::q_pow(2));
    assert_eq!(sol[&perm_matrix(&[0, 1])], expect);
    assert_eq!(expect, QRational::one() / q_factorial(2));
}

#[test]
fn order_one_relation_between_sigma_and_reverse() {
    let sys = build_system(3, 1).unwrap();
    let sol = solve_system(&sys).unwrap();
    let s0 = perm_matrix(&[2, 1, 0]);
    for sigma in permutations(3) {
        let l = qhaar::perm::inversions(&sigma) as i64;
        assert_eq!(sol[&s0], QRational::neg_q_pow(3 - l) * &sol[&perm_matrix(&sigma)]);
    }
}

#[test]
fn order_two_matches_closed_form() {
    let sol = solve_system(&build_system(3, 2).unwrap()).unwrap();
    assert_eq!(sol.len(), 21);
    for idx in PseudoIndex::all(2) {
        assert_eq!(sol[&idx.counting_matrix()], haar_pseudo(idx).unwrap(), "{idx:?}");
    }
    assert_eq!(sol[&antidiagonal(3, 2)], haar_ref(2));
}

#[test]
fn rank_two_systems_and_source_agree() {
    for m in 1..=3u32 {
        let sol = solve_system(&build_system(2, m).unwrap()).unwrap();
        assert_eq!(source_matrix_solve(2, m).unwrap(), sol[&antidiagonal(2, m)], "m = {m}");
        let x = AlgebraElement::from_word(2, antidiagonal(2, m).canonical_word(m), QRational::one());
        assert_eq!(haar_state(&x).unwrap(), sol[&antidiagonal(2, m)]);
    }
}

#[test]
fn source_matrix_rank_three() {
    for m in 1..=3u32 {
        assert_eq!(source_matrix_solve(3, m).unwrap(), haar_ref(m), "m = {m}");
    }
    let vals = source_matrix_values(3, 1).unwrap();
    for (sigma, v) in permutations(3).iter().zip(vals.iter()) {
        assert_eq!(*v, haar_order1(sigma));
    }
    assert!(matches!(source_matrix_solve(5, 1), Err(Error::Feasibility(_))));
}

#[test]
fn source_matrix_rank_four_order_one() {
    let vals = source_matrix_values(4, 1).unwrap();
    for (sigma, v) in permutations(4).iter().zip(vals.iter()) {
        assert_eq!(*v, haar_order1(sigma));
    }
}

#[test]
fn exports() {
    let sys = build_system(2, 1).unwrap();
    let sol = solve_system(&sys).unwrap();
    let csv = solution_to_csv(&sol);
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.starts_with("matrix,value\n0 1 1 0,"));
    let js = solution_to_json(2, 1, &sol);
    assert_eq!(js["values"].as_array().unwrap().len(), 2);
    assert_eq!(sys.to_json()["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn rank_deficiency_is_reported() {
    let one = QRational::one();
    let rows = vec![(vec![(0, one.clone()), (1, one.clone())], one.clone()); 2];
    assert_eq!(solve_exact(&rows, 2), Err(Error::RankDeficient(1)));
    let rows = vec![(vec![(0, one.clone())], one.clone()), (vec![(0, one.clone())], QRational::zero())];
    assert_eq!(solve_exact(&rows, 1), Err(Error::Residual(1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn sum_rule_on_tensor_terms(k in 0usize..21) {
        let set = enumerate_bnm(3, 2);
        let mut cm = set.matrices[k].clone();
        cm.entries[0] += 1;
        cm.entries[4] += 1;
        cm.entries[8] += 1;
        let x = AlgebraElement::from_word(3, cm.canonical_word(3), QRational::one());
        for ((l, r), _) in comultiply_order_filtered(&x).terms() {
            let (cl, cr) = (l.counting_matrix(3), r.counting_matrix(3));
            prop_assert_eq!(cl.row_sums(), cm.row_sums());
            prop_assert_eq!(cl.col_sums(), cr.row_sums());
            prop_assert_eq!(cr.col_sums(), cm.col_sums());
        }
    }
}

#[test]
fn source_matrix_rank_four_order_two() {
    let vals = source_matrix_values(4, 2).unwrap();
    let top = source_matrix_solve(4, 1).unwrap();
    let mut acc = QRational::zero();
    for (sigma, v) in permutations(4).iter().zip(vals.iter()) {
        acc += &(QRational::neg_q_pow(qhaar::perm::inversions(sigma) as i64) * v);
    }
    assert_eq!(acc, top);
    assert!(matches!(build_system(4, 2), Err(Error::Feasibility(_))));
}
