use qhaar::haar::{haar_state, PseudoIndex};
use qhaar::qalgebra::{elem3, quantum_minor, star_generator, word3};
use qhaar::qarith::QRational;
use qhaar::uqaction::{act, minor_action, Side, UqGenerator};
use qhaar::AlgebraElement;

use UqGenerator::{E, F};

fn v(a: i64) -> QRational {
    QRational::v_pow(a)
}

fn q(a: i64) -> QRational {
    QRational::q_pow(a)
}

/// `(q^a - q^b) / (1 - q^c)`.
fn frac(a: i64, b: i64, c: i64) -> QRational {
    (q(a) - q(b)) / QRational::one_minus_q_pow(c)
}

/// Product of letter powers written in the given order, times `det^-det`; `None` if an exponent is negative.
fn mono(parts: &[(&str, i64)], det: i64) -> Option<AlgebraElement> {
    let mut s = String::new();
    for (l, e) in parts {
        if *e < 0 {
            return None;
        }
        s.push_str(&l.repeat(*e as usize));
    }
    let mut w = word3(&s);
    w.det_power = det as u32;
    Some(AlgebraElement::from_word(3, w, QRational::one()))
}

fn left(g: UqGenerator, x: &AlgebraElement) -> AlgebraElement {
    act(&g, x, Side::Left).unwrap()
}

fn right(g: UqGenerator, x: &AlgebraElement) -> AlgebraElement {
    act(&g, x, Side::Right).unwrap()
}

fn combo(terms: Vec<(QRational, Option<AlgebraElement>)>) -> AlgebraElement {
    let mut out = AlgebraElement::zero(3);
    for (c, x) in terms {
        if let Some(x) = x {
            out.add_element(&x, &c);
        }
    }
    out
}

#[test]
fn generator_examples() {
    assert_eq!(left(E(1), &elem3("b", 0)), elem3("a", 0));
    assert_eq!(left(F(1), &elem3("a", 0)), elem3("b", 0));
    assert!(left(E(1), &elem3("a", 0)).is_zero());
    assert_eq!(right(E(1), &elem3("a", 0)), elem3("d", 0));
    let got = right(E(1), &elem3("bcg", 1));
    let expect = &elem3("ceg", 1).scale(&v(-1)) + &elem3("bfg", 1).scale(&(v(-3) * frac(2, 4, 2)));
    assert_eq!(got, expect);
}

#[test]
fn generator_ranges() {
    let x = elem3("a", 0);
    assert!(act(&E(0), &x, Side::Left).is_err());
    assert!(act(&F(3), &x, Side::Left).is_err());
    assert!(act(&UqGenerator::Q(vec![1, 0]), &x, Side::Left).is_err());
}

#[test]
fn minors() {
    assert_eq!(minor_action(3, &E(1), &[1, 2], &[2, 3]).unwrap(), quantum_minor(3, &[1, 2], &[1, 3]).unwrap());
    assert!(minor_action(3, &E(1), &[1, 2], &[1, 2]).unwrap().is_zero());
    assert_eq!(minor_action(3, &F(2), &[1, 2], &[1, 2]).unwrap(), quantum_minor(3, &[1, 2], &[1, 3]).unwrap());
    let pairs = qhaar::perm::subsets(3, 2);
    for rows in &pairs {
        for cols in &pairs {
            let xi = quantum_minor(3, rows, cols).unwrap();
            for g in [E(1), E(2), F(1), F(2), UqGenerator::Q(vec![1, -1, 2])] {
                assert_eq!(act(&g, &xi, Side::Left).unwrap(), minor_action(3, &g, rows, cols).unwrap());
            }
        }
    }
}

#[test]
fn torus_action_on_det_powers() {
    let lam = UqGenerator::Q(vec![2, 1, 0]);
    let x = elem3("aek", 2);
    assert_eq!(act(&lam, &x, Side::Left).unwrap(), x.scale(&v(3 - 6)));
    assert_eq!(act(&lam, &x, Side::Right).unwrap(), x.scale(&v(-3)));
    let y = elem3("bd", 0);
    assert_eq!(act(&lam, &y, Side::Left).unwrap(), y.scale(&v(3)));
    let dq = qhaar::qalgebra::quantum_determinant(3);
    assert_eq!(act(&lam, &dq, Side::Left).unwrap(), dq.scale(&v(3)));
    let one = &dq * &AlgebraElement::det_inv(3, 1);
    assert!(act(&lam, &one, Side::Left).unwrap().algebra_eq(&one));
}

#[test]
fn e_and_f_kill_the_determinant() {
    let dq = qhaar::qalgebra::quantum_determinant(3);
    for g in [E(1), E(2), F(1), F(2)] {
        assert!(left(g.clone(), &dq).is_zero());
        assert!(right(g, &dq).is_zero());
    }
}

#[test]
fn haar_invariance_under_generators() {
    for m in 0..=2 {
        for i in PseudoIndex::all(m) {
            let x = AlgebraElement::from_word(3, i.word(), QRational::one());
            for g in [E(1), E(2), F(1), F(2)] {
                for side in [Side::Left, Side::Right] {
                    let y = act(&g, &x, side).unwrap();
                    assert!(haar_state(&y).unwrap().is_zero(), "{g:?} {side:?} {i:?}");
                }
            }
        }
    }
}

#[test]
fn right_e1_on_bcg_family() {
    for m in 1..=3i64 {
        let x = mono(&[("b", 1), ("c", m), ("e", m - 1), ("g", m)], m).unwrap();
        let c = "ceg";
        let expect = combo(vec![
            (v(-1), mono(&[(c, m)], m)),
            (v(-3) * frac(2, 2 * m + 2, 2), mono(&[("bfg", 1), (c, m - 1)], m)),
        ]);
        assert_eq!(right(E(1), &x), expect, "m = {m}");
    }
}

#[test]
fn right_f2_on_bkceg_family() {
    for m in 1..=3i64 {
        let x = mono(&[("b", 1), ("k", 1), ("c", m - 1), ("e", m - 1), ("g", m)], m).unwrap();
        let expect = combo(vec![
            (v(1), mono(&[("bf", 1), ("c", m - 1), ("e", m - 1), ("g", m)], m)),
            (v(4 * m - 1) * frac(-2, -2 * (m + 1), -2), mono(&[("bk", 1), ("c", m - 1), ("e", m - 1), ("g", m - 1), ("d", 1)], m)),
        ]);
        assert_eq!(right(F(2), &x), expect, "m = {m}");
    }
}

#[test]
fn left_e1_on_bkceg_family() {
    for m in 1..=3i64 {
        let x = mono(&[("b", 1), ("k", 1), ("c", m - 1), ("e", m), ("g", m - 1)], m).unwrap();
        let expect = combo(vec![
            (v(1), mono(&[("ak", 1), ("c", m - 1), ("e", m), ("g", m - 1)], m)),
            (v(4 * m - 1) * frac(-2, -2 * (m + 1), -2), mono(&[("bk", 1), ("c", m - 1), ("e", m - 1), ("g", m - 1), ("d", 1)], m)),
        ]);
        assert_eq!(left(E(1), &x), expect, "m = {m}");
    }
}

#[test]
fn left_f1_boundary_family() {
    for m in 1..=3i64 {
        for l in 0..m {
            let x = mono(&[("c", m), ("d", m - l), ("e", l), ("g", l + 1), ("h", m - l - 1)], m).unwrap();
            let expect = combo(vec![
                (
                    v(2 * (m - l) + 1) * frac(-2, -2 * (m - l + 1), -2),
                    mono(&[("c", m), ("d", m - l - 1), ("e", l + 1), ("g", l + 1), ("h", m - l - 1)], m),
                ),
                (v(2 * (m - l) + 3) * frac(-2, -2 * (l + 2), -2), mono(&[("c", m), ("d", m - l), ("e", l), ("g", l), ("h", m - l)], m)),
            ]);
            assert_eq!(left(F(1), &x), expect, "m = {m}, l = {l}");
        }
    }
}

#[test]
fn left_e2_boundary_family() {
    for m in 1..=3i64 {
        for r in 0..m {
            for l in (m - r)..=m {
                let x = mono(&[("b", m - r - 1), ("c", r + 1), ("d", m - l), ("e", r - m + l), ("f", m - r), ("g", l), ("h", m - l)], m).unwrap();
                let expect = combo(vec![
                    (
                        v(2 * m - 6 * r - 5) * frac(2, 2 * r + 4, 2),
                        mono(&[("b", m - r), ("c", r), ("d", m - l), ("e", r - m + l), ("f", m - r), ("g", l), ("h", m - l)], m),
                    ),
                    (
                        v(-3 + 2 * (l + r) - 4 * m) * frac(2, 2 * (m - r + 1), 2),
                        mono(&[("b", m - r - 1), ("c", r + 1), ("d", m - l), ("e", r + 1 - m + l), ("f", m - r - 1), ("g", l), ("h", m - l)], m),
                    ),
                ]);
                assert_eq!(left(E(2), &x), expect, "m = {m}, r = {r}, l = {l}");
            }
        }
    }
}

#[test]
fn left_e1_without_e_family() {
    for m in 1..=3i64 {
        for s in 1..=m {
            for r in 0..=(m - s) {
                let l = m - r - s;
                if l >= m {
                    continue;
                }
                let x = mono(&[("a", s - 1), ("b", m - r - s + 1), ("c", r), ("d", m - s - l), ("f", m - r), ("g", l), ("h", m - l)], m).unwrap();
                let expect = combo(vec![
                    (
                        v(5 * s - 5 - 3 * m + 3 * r - l) * frac(2, 2 * (m - r - s + 2), 2),
                        mono(&[("a", s), ("b", m - r - s), ("c", r), ("d", m - s - l), ("f", m - r), ("g", l), ("h", m - l)], m),
                    ),
                    (
                        v(s - 3 + r - 3 * m + 3 * l) * frac(2, 2 * m - 2 * l + 2, 2),
                        mono(&[("a", s - 1), ("b", m - r - s + 1), ("c", r), ("d", m - s - l), ("f", m - r), ("g", l + 1), ("h", m - l - 1)], m),
                    ),
                ]);
                assert_eq!(left(E(1), &x), expect, "m = {m}, s = {s}, r = {r}");
            }
        }
    }
}

#[test]
fn left_f2_without_e_family() {
    for m in 1..=3i64 {
        for i in PseudoIndex::all(m) {
            let PseudoIndex { s, r, l, t, .. } = i;
            if i.n_e() != 0 || t < 1 {
                continue;
            }
            let x = mono(&[("a", s), ("b", m - s - r), ("c", r), ("d", m - s - l), ("f", m - r - t), ("g", l), ("h", m - l - t + 1), ("k", t - 1)], m).unwrap();
            let expect = combo(vec![
                (
                    v(m - s + 1 - r + l + t) * frac(-2, -2 * (m - s - r + 1), -2),
                    mono(&[("a", s), ("b", m - s - r - 1), ("c", r + 1), ("d", m - s - l), ("f", m - r - t), ("g", l), ("h", m - l - t + 1), ("k", t - 1)], m),
                ),
                (
                    v(m - s - r - l + 3 + t) * frac(-2, -2 * (m - l - t + 2), -2),
                    mono(&[("a", s), ("b", m - s - r), ("c", r), ("d", m - s - l), ("f", m - r - t), ("g", l), ("h", m - l - t), ("k", t)], m),
                ),
            ]);
            assert_eq!(left(F(2), &x), expect, "{i:?}");
        }
    }
}

#[test]
fn left_e2_without_c_family() {
    for m in 1..=3i64 {
        for i in PseudoIndex::all(m) {
            let PseudoIndex { s, r, l, t, .. } = i;
            if r != 0 || i.n_e() < 1 {
                continue;
            }
            let ne = s + l + t - m;
            let x = mono(&[("a", s), ("b", m - s), ("d", m - s - l), ("e", ne - 1), ("f", m - t + 1), ("g", l), ("h", m - l - t), ("k", t)], m).unwrap();
            let expect = combo(vec![
                (
                    v(2 * l + 6 * t - 4 * m - 5) * frac(2, 2 * (m - t + 2), 2),
                    mono(&[("a", s), ("b", m - s), ("d", m - s - l), ("e", ne), ("f", m - t), ("g", l), ("h", m - l - t), ("k", t)], m),
                ),
                (
                    v(-2 * t - 3) * frac(2, 2 * t + 2, 2),
                    mono(&[("a", s), ("b", m - s), ("d", m - s - l), ("e", ne - 1), ("f", m - t + 1), ("g", l), ("h", m - l - t + 1), ("k", t - 1)], m),
                ),
            ]);
            assert_eq!(left(E(2), &x), expect, "{i:?}");
        }
    }
}

#[test]
fn left_e2_general_family() {
    for m in 1..=3i64 {
        for i in PseudoIndex::all(m) {
            let PseudoIndex { s, r, l, t, .. } = i;
            let n = i.n_e();
            if n < 1 {
                continue;
            }
            let x = mono(&[("a", s), ("b", m - s - r), ("c", r), ("d", m - s - l), ("e", n - 1), ("f", m - r - t + 1), ("g", l), ("h", m - l - t), ("k", t)], m).unwrap();
            let expect = combo(vec![
                (
                    v(2 * (m - s - 3 * r) + 1) * frac(2, 2 * r + 2, 2),
                    mono(&[("a", s), ("b", m - s - r + 1), ("c", r - 1), ("d", m - s - l), ("e", n - 1), ("f", m - r - t + 1), ("g", l), ("h", m - l - t), ("k", t)], m),
                ),
                (
                    v(2 * (-2 * m + l + 3 * t + r) - 5) * frac(2, 2 * (m - r - t + 2), 2),
                    mono(&[("a", s), ("b", m - s - r), ("c", r), ("d", m - s - l), ("e", n), ("f", m - r - t), ("g", l), ("h", m - l - t), ("k", t)], m),
                ),
                (
                    v(-3 - 2 * t) * frac(2, 2 * t + 2, 2),
                    mono(&[("a", s), ("b", m - s - r), ("c", r), ("d", m - s - l), ("e", n - 1), ("f", m - r - t + 1), ("g", l), ("h", m - l - t + 1), ("k", t - 1)], m),
                ),
            ]);
            assert_eq!(left(E(2), &x), expect, "{i:?}");
        }
    }
}

/// Ordered product of `(factor, exponent)`; `None` if an exponent is negative.
fn prod(parts: &[(&AlgebraElement, i64)]) -> Option<AlgebraElement> {
    let mut acc = AlgebraElement::one(3);
    for (x, e) in parts {
        if *e < 0 {
            return None;
        }
        for _ in 0..*e {
            acc = &acc * *x;
        }
    }
    Some(acc)
}

struct Gens {
    a: AlgebraElement,
    b: AlgebraElement,
    g: AlgebraElement,
    h: AlgebraElement,
    k: AlgebraElement,
    as_: AlgebraElement,
    bs: AlgebraElement,
    gs: AlgebraElement,
    hs: AlgebraElement,
    ks: AlgebraElement,
}

fn gens() -> Gens {
    let l = |c: &str| elem3(c, 0);
    Gens {
        a: l("a"),
        b: l("b"),
        g: l("g"),
        h: l("h"),
        k: l("k"),
        as_: star_generator(3, 1, 1),
        bs: star_generator(3, 1, 2),
        gs: star_generator(3, 3, 1),
        hs: star_generator(3, 3, 2),
        ks: star_generator(3, 3, 3),
    }
}

#[test]
fn left_f2_on_star_family() {
    let x = gens();
    for d1 in 0..=1i64 {
        for d2 in 0..=1i64 {
            for c1 in 0..=1i64 {
                let lhs = prod(&[(&x.ks, d1 + 1), (&x.hs, d2), (&x.a, c1), (&x.as_, c1), (&x.h, d2 + 1), (&x.k, d1)]).unwrap();
                let expect = combo(vec![
                    (
                        -(v(-2 * d1 + 1) * QRational::one_minus_q_pow(2 * (d1 + 1)) / QRational::one_minus_q_pow(2)),
                        prod(&[(&x.ks, d1), (&x.hs, d2 + 1), (&x.a, c1), (&x.as_, c1), (&x.h, d2 + 1), (&x.k, d1)]),
                    ),
                    (
                        v(2 * d1 + 1 - 4 * d2) * QRational::one_minus_q_pow(2 * (d2 + 1)) / QRational::one_minus_q_pow(2),
                        prod(&[(&x.ks, d1 + 1), (&x.hs, d2), (&x.a, c1), (&x.as_, c1), (&x.h, d2), (&x.k, d1 + 1)]),
                    ),
                ]);
                assert!(left(F(2), &lhs).algebra_eq(&expect), "d1={d1} d2={d2} c1={c1}");
            }
        }
    }
}

#[test]
fn left_e1_on_star_family() {
    let x = gens();
    let r = |a: i64| (QRational::one() - q(a)) / QRational::one_minus_q_pow(-2);
    for (d1, d2, c1, c2) in [(0, 0, 0, 0), (0, 1, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)] {
        let lhs = prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1), (&x.b, c2 + 1), (&x.bs, c2), (&x.as_, c1 + 1), (&x.h, d2), (&x.k, d1)]).unwrap();
        let expect = combo(vec![
            (
                v(2 * (d2 + c1) + 1) * r(-2 * (c2 + 1)),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1 + 1), (&x.b, c2), (&x.bs, c2), (&x.as_, c1 + 1), (&x.h, d2), (&x.k, d1)]),
            ),
            (
                -(v(2 * (d2 + c1) - 3) * r(-2 * (c1 + 1))),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1), (&x.b, c2 + 1), (&x.bs, c2 + 1), (&x.as_, c1), (&x.h, d2), (&x.k, d1)]),
            ),
            (
                v(2 * d2 - 3) * r(-2 * d2),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1), (&x.b, c2 + 1), (&x.bs, c2), (&x.as_, c1 + 1), (&x.g, 1), (&x.h, d2 - 1), (&x.k, d1)]),
            ),
        ]);
        assert!(left(E(1), &lhs).algebra_eq(&expect), "d1={d1} d2={d2} c1={c1} c2={c2}");
    }
}

#[test]
fn left_f1_on_star_family() {
    let x = gens();
    let r = |a: i64| QRational::one_minus_q_pow(a) / QRational::one_minus_q_pow(2);
    for (d1, d2, c1, c2) in [(0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (1, 1, 0, 0)] {
        let lhs = prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1 + 1), (&x.b, c2), (&x.bs, c2), (&x.as_, c1 + 1), (&x.g, 1), (&x.h, d2 - 1), (&x.k, d1)]).unwrap();
        let expect = combo(vec![
            (
                -(v(3 - 2 * d2) * r(2 * d2)),
                prod(&[(&x.ks, d1), (&x.hs, d2 - 1), (&x.gs, 1), (&x.a, c1 + 1), (&x.b, c2), (&x.bs, c2), (&x.as_, c1 + 1), (&x.g, 1), (&x.h, d2 - 1), (&x.k, d1)]),
            ),
            (
                v(2 * (d2 - c1) - 1) * r(2 * (c1 + 1)),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1), (&x.b, c2 + 1), (&x.bs, c2), (&x.as_, c1 + 1), (&x.g, 1), (&x.h, d2 - 1), (&x.k, d1)]),
            ),
            (
                -(v(2 * (d2 + c1 - 2 * c2) + 5) * r(2 * c2)),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1 + 1), (&x.b, c2), (&x.bs, c2 - 1), (&x.as_, c1 + 2), (&x.g, 1), (&x.h, d2 - 1), (&x.k, d1)]),
            ),
            (
                v(2 * d2 - 1),
                prod(&[(&x.ks, d1), (&x.hs, d2), (&x.a, c1 + 1), (&x.b, c2), (&x.bs, c2), (&x.as_, c1 + 1), (&x.h, d2), (&x.k, d1)]),
            ),
        ]);
        assert!(left(F(1), &lhs).algebra_eq(&expect), "d1={d1} d2={d2} c1={c1} c2={c2}");
    }
}
