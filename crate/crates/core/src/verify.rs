//! Exact checks of q-series identities and of closed-form Haar values against direct evaluation.
//!
//! Every check runs over a finite parameter grid and records the grid points where the two
//! sides differ. Nothing is approximated.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corep::{family_a_tail, family_b_tail};
use crate::error::{Error, Result};
use crate::haar::{haar_product, haar_ref};
use crate::qalgebra::{quantum_minor, star_generator, AlgebraElement, LETTERS3};
use crate::qarith::{pochhammer, q_binomial, qfact, QRational};

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub parameter_grid: Vec<Vec<i64>>,
    pub failures: Vec<Vec<i64>>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity_id": self.identity_id,
            "points": self.parameter_grid.len(),
            "parameter_grid": self.parameter_grid,
            "failures": self.failures,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

/// Evaluate `check` on every grid point in parallel; failures keep grid order.
fn run<F>(id: &str, grid: Vec<Vec<i64>>, check: F) -> IdentityReport
where
    F: Fn(&[i64]) -> bool + Sync,
{
    let start = Instant::now();
    let ok: Vec<bool> = grid.par_iter().map(|p| check(p)).collect();
    let failures = grid.iter().zip(&ok).filter(|(_, &ok)| !ok).map(|(p, _)| p.clone()).collect();
    IdentityReport { identity_id: id.to_string(), parameter_grid: grid, failures, elapsed: start.elapsed() }
}

/// All integer tuples with `0 <= x_i <= bounds[i]`.
pub fn box_grid(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out.into_iter().flat_map(|p| (0..=b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

fn q(e: i64) -> QRational {
    QRational::q_pow(e)
}

fn sign(k: i64) -> QRational {
    if k % 2 == 0 {
        QRational::one()
    } else {
        -QRational::one()
    }
}

fn prod(xs: &[QRational]) -> QRational {
    xs.iter().fold(QRational::one(), |acc, x| &acc * x)
}

/// `sum_{i,j} q^{2 d1 j - 2ij - 2i - 2j} C(d1,i) C(d2,j) / C(d1+d2, i+j)` against
/// `(1 - q^{2(d1+d2)+2}) / (q^{2 d1 + 2 d2} (1 - q^2))`.
pub fn check_double_binomial_sum(d1_max: i64, d2_max: i64) -> IdentityReport {
    run("double_binomial_sum", box_grid(&[d1_max, d2_max]), |p| {
        let (d1, d2) = (p[0], p[1]);
        let mut lhs = QRational::zero();
        for i in 0..=d1 {
            for j in 0..=d2 {
                let t = &(&q(2 * d1 * j - 2 * i * j - 2 * i - 2 * j) * &q_binomial(d1, i)) * &q_binomial(d2, j);
                lhs += &(&t / &q_binomial(d1 + d2, i + j));
            }
        }
        let rhs = &QRational::one_minus_q_pow(2 * (d1 + d2) + 2) / &(&q(2 * d1 + 2 * d2) * &QRational::one_minus_q_pow(2));
        lhs == rhs
    })
}

/// `S(d1) = sum_i q^{2(c1+1)i} C(d1,i) / C(d1+c1,i)` against `(1 - q^{2 d1 + 2 c1 + 2}) / (1 - q^{2 c1 + 2})`,
/// together with the recurrence `S(d1) = q^{2 d1} + (1 - q^{2 d1}) S(d1 - 1) / (1 - q^{2 d1 + 2 c1})`.
pub fn check_s_sum(d1_max: i64, c1_max: i64) -> IdentityReport {
    run("s_sum", box_grid(&[d1_max, c1_max]), |p| {
        let (d1, c1) = (p[0], p[1]);
        let sum = |d: i64| -> QRational {
            (0..=d).map(|i| &(&q(2 * (c1 + 1) * i) * &q_binomial(d, i)) / &q_binomial(d + c1, i)).sum()
        };
        let lhs = sum(d1);
        let closed = &QRational::one_minus_q_pow(2 * d1 + 2 * c1 + 2) / &QRational::one_minus_q_pow(2 * c1 + 2);
        // first-order recurrence in d1
        let rec = d1 == 0
            || lhs == &q(2 * d1) + &(&(&om(2 * d1) * &sum(d1 - 1)) / &om(2 * d1 + 2 * c1));
        lhs == closed && rec
    })
}

fn letter(ch: char) -> AlgebraElement {
    AlgebraElement::letter(ch).unwrap()
}

/// `(x_ik x_jl - q x_jk x_il)^n = sum_p (-q)^{(1-2p)(n-p)} C(n,p) x_ik^p (x_jk x_il)^{n-p} x_jl^p`,
/// for the minor `ae - q bd`.
pub fn check_minor_power(n_max: i64) -> IdentityReport {
    run("minor_power", box_grid(&[n_max]), |p| {
        let n = p[0];
        let lhs = quantum_minor(3, &[1, 2], &[1, 2]).unwrap().pow(n as u32);
        let bd = &letter('b') * &letter('d');
        let mut rhs = AlgebraElement::zero(3);
        for k in 0..=n {
            let coef = &QRational::neg_q_pow((1 - 2 * k) * (n - k)) * &q_binomial(n, k);
            let term = &(&letter('a').pow(k as u32) * &bd.pow((n - k) as u32)) * &letter('e').pow(k as u32);
            rhs = &rhs + &term.scale(&coef);
        }
        lhs == rhs
    })
}

/// `e^s a^t = sum_k q^{3k^2 - 2(s+t)k} C(s,k) C(t,k) (q^2;q^2)_k a^{t-k} (bd)^k e^{s-k}`.
pub fn check_e_a_reordering(s_max: i64, t_max: i64) -> IdentityReport {
    run("e_a_reordering", box_grid(&[s_max, t_max]), |p| {
        let (s, t) = (p[0], p[1]);
        let lhs = &letter('e').pow(s as u32) * &letter('a').pow(t as u32);
        let bd = &letter('b') * &letter('d');
        let mut rhs = AlgebraElement::zero(3);
        for k in 0..=s.min(t) {
            let coef = prod(&[q(3 * k * k - 2 * (s + t) * k), q_binomial(s, k), q_binomial(t, k), qfact(k)]);
            let term = &(&letter('a').pow((t - k) as u32) * &bd.pow(k as u32)) * &letter('e').pow((s - k) as u32);
            rhs = &rhs + &term.scale(&coef);
        }
        lhs == rhs
    })
}

/// One factor `x^e` or `(x^*)^e` of a monomial, `x` a letter of `a..k`.
#[derive(Clone, Copy, Debug)]
pub struct Factor {
    pub letter: char,
    pub starred: bool,
    pub power: i64,
}

fn f(letter: char, power: i64) -> Factor {
    Factor { letter, starred: false, power }
}

fn s(letter: char, power: i64) -> Factor {
    Factor { letter, starred: true, power }
}

fn factor_element(x: &Factor) -> AlgebraElement {
    let p = LETTERS3.iter().position(|&c| c == x.letter).expect("letter of a..k");
    let base = if x.starred { star_generator(3, p / 3 + 1, p % 3 + 1) } else { AlgebraElement::generator(3, p / 3 + 1, p % 3 + 1) };
    base.pow(x.power as u32)
}

/// `h` of a product of powers, split in the middle to keep the expansion small.
pub fn haar_of_monomial(factors: &[Factor]) -> Result<QRational> {
    if factors.iter().any(|x| x.power < 0) {
        return Err(Error::Unsupported("negative exponent".into()));
    }
    let mid = factors.len() / 2;
    let build = |fs: &[Factor]| fs.iter().fold(AlgebraElement::one(3), |acc, x| &acc * &factor_element(x));
    haar_product(&build(&factors[..mid]), &build(&factors[mid..]))
}

/// A closed form for `h` of a parametrized monomial.
pub struct ClosedForm {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub monomial: fn(&[i64]) -> Vec<Factor>,
    pub value: fn(&[i64]) -> QRational,
    /// Grid points outside the stated range of the formula.
    pub admissible: fn(&[i64]) -> bool,
}

fn base() -> QRational {
    let a = QRational::one_minus_q_pow(2);
    prod(&[a.clone(), a, QRational::one_minus_q_pow(4)])
}

fn qm1(e: i64) -> QRational {
    QRational::q_pow_minus_one(e)
}

fn om(e: i64) -> QRational {
    QRational::one_minus_q_pow(e)
}

fn always(_: &[i64]) -> bool {
    true
}

/// The closed forms checked by [`check_closed_forms`].
pub fn closed_forms() -> Vec<ClosedForm> {
    vec![
        ClosedForm {
            id: "a_k_reduction",
            params: &["d1", "c1"],
            monomial: |p| vec![f('a', p[1]), s('k', p[0]), s('a', p[1]), f('k', p[0])],
            value: |p| {
                let (d1, c1) = (p[0], p[1]);
                let sum = |x: i64, y: i64| -> QRational {
                    (0..=x).map(|i| &(&q(2 * (y + 1) * i) * &q_binomial(x, i)) / &q_binomial(x + y, i)).sum()
                };
                prod(&[sign(d1 + c1), q(-3 * d1 - 3 * c1), haar_ref((d1 + c1) as u32), sum(d1, c1), sum(c1, d1)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "h_k_norm",
            params: &["d1", "d2"],
            monomial: |p| vec![s('h', p[1]), s('k', p[0]), f('k', p[0]), f('h', p[1])],
            value: |p| {
                let (d1, d2) = (p[0], p[1]);
                let n = d1 + d2;
                let pre = &prod(&[qfact(d1), qfact(d2), q(2 * n), qm1(2), qm1(2), qm1(4)])
                    / &prod(&[qfact(n), qm1(2 * n + 2), qm1(2 * n + 2), qm1(2 * n + 4)]);
                let mut sum = QRational::zero();
                for i in 0..=d1 {
                    for j in 0..=d2 {
                        let t = prod(&[q(2 * d1 * j - 2 * i * j - 2 * i - 2 * j), q_binomial(d1, i), q_binomial(d2, j)]);
                        sum += &(&t / &q_binomial(n, i + j));
                    }
                }
                &pre * &sum
            },
            admissible: always,
        },
        ClosedForm {
            id: "k_a_norm",
            params: &["d1", "c1"],
            monomial: |p| vec![s('k', p[0]), f('a', p[1]), s('a', p[1]), f('k', p[0])],
            value: |p| {
                let (d1, c1) = (p[0], p[1]);
                &prod(&[qm1(2), qm1(2), qm1(4)]) / &prod(&[qm1(2 * c1 + 2), qm1(2 * d1 + 2), qm1(2 * (d1 + c1) + 4)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "g_h_k_norm",
            params: &["d1", "d2", "d3"],
            monomial: |p| vec![s('g', p[2]), s('h', p[1]), s('k', p[0]), f('k', p[0]), f('h', p[1]), f('g', p[2])],
            value: |p| &prod(&[qfact(p[0]), qfact(p[1]), qfact(p[2]), qfact(2)]) / &qfact(p[0] + p[1] + p[2] + 2),
            admissible: always,
        },
        ClosedForm {
            id: "k_h_a_norm",
            params: &["d1", "d2", "c1"],
            monomial: |p| vec![s('k', p[0]), s('h', p[1]), f('a', p[2]), s('a', p[2]), f('h', p[1]), f('k', p[0])],
            value: |p| {
                let (d1, d2, c1) = (p[0], p[1], p[2]);
                &prod(&[q(2 * d1 * d2), base(), qfact(d1), qfact(d2)])
                    / &prod(&[om(2 * c1 + 2), qfact(d1 + d2 + 1), om(2 * (d1 + d2 + c1) + 4)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "k_h_a_b_norm",
            params: &["d1", "d2", "c1", "c2"],
            monomial: |p| {
                vec![s('k', p[0]), s('h', p[1]), f('a', p[2]), f('b', p[3]), s('b', p[3]), s('a', p[2]), f('h', p[1]), f('k', p[0])]
            },
            value: |p| {
                let (d1, d2, c1, c2) = (p[0], p[1], p[2], p[3]);
                let pre = &prod(&[q(2 * d1 * d2 + 2 * c1 * c2 + 2 * c2), base(), qfact(d2), qfact(c2)])
                    / &prod(&[qfact(d1 + d2 + 1), qfact(c1 + c2 + 1), pochhammer(d1 + d2 + c1 + 2, c2 + 1)]);
                let sum: QRational = (0..=c2)
                    .map(|i| prod(&[q(2 * (d1 + d2 + 1) * i), qfact(d1 + c2 - i), qfact(c1 + i), q_binomial(c2, i)]))
                    .sum();
                &pre * &sum
            },
            admissible: always,
        },
        ClosedForm {
            id: "k_h_a_b_g_cross",
            params: &["d1", "d2", "c1", "c2"],
            monomial: |p| {
                let (d1, d2, c1, c2) = (p[0], p[1], p[2], p[3]);
                vec![
                    s('k', d1),
                    s('h', d2),
                    f('a', c1),
                    f('b', c2 + 1),
                    s('b', c2),
                    s('a', c1 + 1),
                    f('g', 1),
                    f('h', d2 - 1),
                    f('k', d1),
                ]
            },
            value: |p| {
                let (d1, d2, c1, c2) = (p[0], p[1], p[2], p[3]);
                let e = 2 * d1 * d2 + 2 * d1 + 2 * d2 + c1 + 2 + 2 * c1 * c2 + 4 * c2;
                let pre = &prod(&[-q(e), base(), qfact(c2 + 1), qfact(d2)])
                    / &prod(&[qfact(d1 + d2 + 1), qfact(c1 + c2 + 2), pochhammer(d1 + d2 + c1 + 2, c2 + 2)]);
                let sum: QRational = (0..=c2)
                    .map(|i| prod(&[q(2 * (d1 + d2) * i), qfact(d1 + c2 - i), qfact(c1 + 1 + i), q_binomial(c2, i)]))
                    .sum();
                &pre * &sum
            },
            admissible: |p| p[1] >= 1,
        },
        ClosedForm {
            id: "k_h_a_b_c_shift",
            params: &["d1", "d2", "c1", "c2", "k"],
            monomial: |p| {
                let (d1, d2, c1, c2, k) = (p[0], p[1], p[2], p[3], p[4]);
                vec![
                    s('k', d1 + k),
                    s('h', d2 - k),
                    f('a', c1),
                    f('b', c2 - k),
                    f('c', k),
                    s('b', c2),
                    s('a', c1),
                    f('h', d2),
                    f('k', d1),
                ]
            },
            value: |p| {
                let (d1, d2, c1, c2, k) = (p[0], p[1], p[2], p[3], p[4]);
                let e = 2 * d1 * d2 + 2 * c1 * c2 + (k + 2) * c2 + k * (d2 - k + 1);
                let pre = &prod(&[sign(k), q(e), base(), qfact(d2), qfact(c2)])
                    / &prod(&[qfact(c1 + c2 + 1), qfact(d1 + d2 + 1), pochhammer(d1 + d2 + c1 + 2, c2 + 1)]);
                let sum: QRational = (0..=c2 - k)
                    .map(|i| prod(&[q(2 * (d1 + d2 + 1) * i), qfact(d1 + c2 - i), qfact(c1 + i), q_binomial(c2 - k, i)]))
                    .sum();
                &pre * &sum
            },
            admissible: |p| p[4] <= p[1].min(p[3]),
        },
        ClosedForm {
            id: "k_h_a_b_c_cross",
            params: &["d1", "d2", "c1", "c2", "c3", "k"],
            monomial: |p| {
                let (d1, d2, c1, c2, c3, k) = (p[0], p[1], p[2], p[3], p[4], p[5]);
                vec![
                    s('k', d1 + k),
                    s('h', d2 - k),
                    f('a', c1),
                    f('b', c2 - k),
                    f('c', c3 + k),
                    s('c', c3),
                    s('b', c2),
                    s('a', c1),
                    f('h', d2),
                    f('k', d1),
                ]
            },
            value: |p| {
                let (d1, d2, c1, c2, c3, k) = (p[0], p[1], p[2], p[3], p[4], p[5]);
                let e = 2 * d1 * d2 + 2 * c1 * c2 + 2 * c1 * c3 + 2 * c2 * c3 + 2 * c2 + 4 * c3 + k * (d2 + c2 - k + 1);
                prod(&[sign(k), q(e), family_a_tail(d1, d2, c1, c2, c3, k)])
            },
            admissible: |p| p[5] <= p[1].min(p[3]),
        },
        ClosedForm {
            id: "k_a_b_c_norm",
            params: &["d1", "c1", "c2", "c3"],
            monomial: |p| {
                let (d1, c1, c2, c3) = (p[0], p[1], p[2], p[3]);
                vec![s('k', d1), f('a', c1), f('b', c2), f('c', c3), s('c', c3), s('b', c2), s('a', c1), f('k', d1)]
            },
            value: |p| {
                let (d1, c1, c2, c3) = (p[0], p[1], p[2], p[3]);
                let e = 2 * c1 * c2 + 2 * c1 * c3 + 2 * c2 * c3 + 2 * c2 + 4 * c3 + 2 * d1 * c3;
                &prod(&[q(e), base(), qfact(c1), qfact(c2), qfact(c3)])
                    / &prod(&[qfact(c1 + c2 + 1), om(2 * d1 + 2), pochhammer(d1 + c1 + c2 + 2, c3 + 1)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "g_c_norm",
            params: &["d3", "c3"],
            monomial: |p| vec![s('g', p[0]), f('c', p[1]), s('c', p[1]), f('g', p[0])],
            value: |p| {
                let (d3, c3) = (p[0], p[1]);
                &prod(&[q(4 * c3), qm1(2), qm1(2), qm1(4)]) / &prod(&[om(2 * c3 + 2), om(2 * d3 + 2), qm1(2 * (d3 + c3) + 4)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "g_b_c_norm",
            params: &["d3", "c2", "c3"],
            monomial: |p| {
                let (d3, c2, c3) = (p[0], p[1], p[2]);
                vec![s('g', d3), f('b', c2), f('c', c3), s('c', c3), s('b', c2), f('g', d3)]
            },
            value: |p| {
                let (d3, c2, c3) = (p[0], p[1], p[2]);
                &prod(&[q(2 * c2 * c3 + 2 * c2 + 4 * c3), base(), qfact(c2), qfact(c3)])
                    / &prod(&[qfact(c2 + c3 + 1), om(2 * (d3 + 1)), om(2 * (d3 + c2 + c3) + 4)])
            },
            admissible: always,
        },
        ClosedForm {
            id: "g_a_b_c_h_cross",
            params: &["d3", "c2", "c3"],
            monomial: |p| {
                let (d3, c2, c3) = (p[0], p[1], p[2]);
                vec![
                    s('g', d3),
                    f('a', 1),
                    f('b', c2 - 1),
                    f('c', c3),
                    s('c', c3),
                    s('b', c2),
                    f('g', d3 - 1),
                    f('h', 1),
                ]
            },
            value: |p| {
                let (d3, c2, c3) = (p[0], p[1], p[2]);
                let e = 2 * c2 * c3 + 4 * c2 + 6 * c3 + d3 - 1;
                let pre = &prod(&[-q(e), base()]) / &prod(&[om(2 * (c2 + c3 + 1)), om(2 * (d3 + 1))]);
                let mid = &prod(&[qfact(c3), qfact(c2)]) / &qfact(c3 + c2);
                let tail = &om(2) / &prod(&[om(2 * (d3 + c2 + c3) + 2), om(2 * (d3 + c2 + c3) + 4)]);
                prod(&[pre, mid, tail])
            },
            admissible: |p| p[0] >= 1 && p[1] >= 1,
        },
        ClosedForm {
            id: "h_g_b_c_norm",
            params: &["d2", "d3", "c2", "c3"],
            monomial: |p| {
                let (d2, d3, c2, c3) = (p[0], p[1], p[2], p[3]);
                vec![s('h', d2), s('g', d3), f('b', c2), f('c', c3), s('c', c3), s('b', c2), f('g', d3), f('h', d2)]
            },
            value: |p| {
                let (d2, d3, c2, c3) = (p[0], p[1], p[2], p[3]);
                g_family_shift(d2, d3, c2, c3, 0)
            },
            admissible: always,
        },
        ClosedForm {
            id: "h_g_a_b_c_h_cross",
            params: &["d2", "d3", "c2", "c3"],
            monomial: |p| {
                let (d2, d3, c2, c3) = (p[0], p[1], p[2], p[3]);
                vec![
                    s('h', d2),
                    s('g', d3),
                    f('a', 1),
                    f('b', c2 - 1),
                    f('c', c3),
                    s('c', c3),
                    s('b', c2),
                    f('g', d3 - 1),
                    f('h', d2 + 1),
                ]
            },
            value: |p| {
                let (d2, d3, c2, c3) = (p[0], p[1], p[2], p[3]);
                let e = 2 * c2 * c3 + 4 * c2 + 6 * c3 + 2 * d2 * d3 + d3 - 1;
                let pre = &prod(&[-q(e), base(), qfact(c2), qfact(d2 + 1)])
                    / &prod(&[qfact(c2 + c3 + 1), qfact(d2 + d3 + 1), pochhammer(d3 + c2 + c3 + 1, d2 + 2)]);
                let sum: QRational = (0..=d2)
                    .map(|i| prod(&[q((2 * c2 + 2 * c3) * i), qfact(c3 + d2 - i), qfact(d3 + i), q_binomial(d2, i)]))
                    .sum();
                &pre * &sum
            },
            admissible: |p| p[1] >= 1 && p[2] >= 1,
        },
        ClosedForm {
            id: "k_h_g_b_c_shift",
            params: &["d2", "d3", "c2", "c3", "k"],
            monomial: |p| {
                let (d2, d3, c2, c3, k) = (p[0], p[1], p[2], p[3], p[4]);
                vec![
                    s('k', k),
                    s('h', d2 - k),
                    s('g', d3),
                    f('b', c2 - k),
                    f('c', c3 + k),
                    s('c', c3),
                    s('b', c2),
                    f('g', d3),
                    f('h', d2),
                ]
            },
            value: |p| g_family_shift(p[0], p[1], p[2], p[3], p[4]),
            admissible: |p| p[4] <= p[0].min(p[2]),
        },
        ClosedForm {
            id: "k_h_g_b_c_cross",
            params: &["d1", "d2", "d3", "c2", "c3", "k"],
            monomial: |p| {
                let (d1, d2, d3, c2, c3, k) = (p[0], p[1], p[2], p[3], p[4], p[5]);
                vec![
                    s('k', d1 + k),
                    s('h', d2 - k),
                    s('g', d3),
                    f('b', c2 - k),
                    f('c', c3 + k),
                    s('c', c3),
                    s('b', c2),
                    f('g', d3),
                    f('h', d2),
                    f('k', d1),
                ]
            },
            value: |p| {
                let (d1, d2, d3, c2, c3, k) = (p[0], p[1], p[2], p[3], p[4], p[5]);
                let e = 2 * d2 * d3 + 2 * d1 * d2 + 2 * d1 * d3 + 2 * c2 * c3 + 2 * c2 + 4 * c3 + k * (d2 + c2 - k + 1);
                prod(&[sign(k), q(e), family_b_tail(d1, d2, d3, c2, c3, k)])
            },
            admissible: |p| p[5] <= p[1].min(p[3]),
        },
    ]
}

/// `h((k*)^k (h*)^{d2-k} (g*)^d3 b^{c2-k} c^{c3+k} (c*)^c3 (b*)^c2 g^d3 h^d2)`.
fn g_family_shift(d2: i64, d3: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let e = 2 * c2 * c3 + 2 * c2 + 4 * c3 + 2 * d3 * d2 + k * (d2 + c2 - k + 1);
    let pre = &prod(&[sign(k), q(e), base(), qfact(c2), qfact(d2)])
        / &prod(&[qfact(c2 + c3 + 1), qfact(d2 + d3 + 1), pochhammer(d3 + c2 + c3 + 2, d2 + 1)]);
    let sum: QRational = (0..=d2 - k)
        .map(|i| prod(&[q((2 * c2 + 2 * c3 + 2) * i), qfact(c3 + d2 - i), qfact(d3 + i), q_binomial(d2 - k, i)]))
        .sum();
    &pre * &sum
}

/// Grid of a closed form with every parameter in `0..=max`, minus inadmissible points and
/// points whose monomial has total Haar order above `max_order`.
pub fn closed_form_grid(cf: &ClosedForm, max: i64, max_order: i64) -> Vec<Vec<i64>> {
    box_grid(&vec![max; cf.params.len()])
        .into_iter()
        .filter(|p| (cf.admissible)(p))
        .filter(|p| {
            let m = (cf.monomial)(p);
            m.iter().all(|x| x.power >= 0) && m.iter().filter(|x| x.starred).map(|x| x.power).sum::<i64>() <= max_order
        })
        .collect()
}

pub fn check_closed_form(cf: &ClosedForm, max: i64, max_order: i64) -> IdentityReport {
    run(cf.id, closed_form_grid(cf, max, max_order), |p| {
        haar_of_monomial(&(cf.monomial)(p)).is_ok_and(|h| h == (cf.value)(p))
    })
}

/// Every closed form of [`closed_forms`] with parameters in `0..=max`.
pub fn check_closed_forms(max: i64, max_order: i64) -> Vec<IdentityReport> {
    closed_forms().iter().map(|cf| check_closed_form(cf, max, max_order)).collect()
}

/// All closed forms in one report; grid points are `[form index, params...]` in [`closed_forms`] order.
pub fn check_paper_computations(max: i64) -> IdentityReport {
    let start = Instant::now();
    let mut grid = Vec::new();
    let mut failures = Vec::new();
    for (idx, r) in check_closed_forms(max, i64::MAX).into_iter().enumerate() {
        let tag = |p: Vec<i64>| [vec![idx as i64], p].concat();
        failures.extend(r.failures.into_iter().map(tag));
        grid.extend(r.parameter_grid.into_iter().map(tag));
    }
    IdentityReport { identity_id: "closed_forms".into(), parameter_grid: grid, failures, elapsed: start.elapsed() }
}

/// Named suites for batch runs.
pub fn run_suite(name: &str, bound: i64) -> Result<Vec<IdentityReport>> {
    Ok(match name {
        "double-binomial" => vec![check_double_binomial_sum(bound, bound)],
        "s-sum" => vec![check_s_sum(bound, bound)],
        "minor-power" => vec![check_minor_power(bound)],
        "e-a-reordering" => vec![check_e_a_reordering(bound, bound)],
        "closed-forms" => check_closed_forms(bound, i64::MAX),
        "all" => {
            let mut v = vec![
                check_double_binomial_sum(6, 6),
                check_s_sum(8, 8),
                check_minor_power(5),
                check_e_a_reordering(4, 4),
            ];
            v.extend(check_closed_forms(bound.min(2), i64::MAX));
            v
        }
        _ => return Err(Error::Unsupported(format!("unknown suite {name}"))),
    })
}

pub const SUITES: [&str; 6] = ["double-binomial", "s-sum", "minor-power", "e-a-reordering", "closed-forms", "all"];
