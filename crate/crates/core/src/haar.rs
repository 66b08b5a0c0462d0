//! Haar state values: the `n = 3` closed form, the reference values `h((ceg)^m det^-m)`,
//! the order-one formula for any `n`, and evaluation of arbitrary elements.

use std::collections::HashMap;

use dashmap::DashMap;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::inversions;
use crate::qalgebra::{AlgebraElement, CountingMatrix, Word};
use crate::qarith::{q_binomial, q_factorial, q_multinomial, QRational};

/// Label `(m; s, r, l, t)` of the `n = 3` monomial with counting matrix
///
/// ```text
/// [ s        m-s-r    r     ]
/// [ m-s-l    s+r+l+t-m m-r-t ]
/// [ l        m-l-t    t     ]
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PseudoIndex {
    pub m: i64,
    pub s: i64,
    pub r: i64,
    pub l: i64,
    pub t: i64,
}

impl PseudoIndex {
    pub fn new(m: i64, s: i64, r: i64, l: i64, t: i64) -> Result<Self> {
        let idx = PseudoIndex { m, s, r, l, t };
        if idx.is_valid() {
            Ok(idx)
        } else {
            Err(Error::PseudoIndex { m, s, r, l, t })
        }
    }

    pub fn is_valid(&self) -> bool {
        let PseudoIndex { m, s, r, l, t } = *self;
        [s, r, l, t, m - s - r, m - s - l, m - r - t, m - l - t, self.n_e()].iter().all(|&x| x >= 0)
    }

    /// Exponent of `e`: `s + r + l + t - m`.
    pub fn n_e(&self) -> i64 {
        self.s + self.r + self.l + self.t - self.m
    }

    pub fn counting_matrix(&self) -> CountingMatrix {
        let PseudoIndex { m, s, r, l, t } = *self;
        let n = self.n_e();
        let rows = [[s, m - s - r, r], [m - s - l, n, m - r - t], [l, m - l - t, t]];
        CountingMatrix::from_rows(&rows.iter().map(|row| row.iter().map(|&x| x as u32).collect()).collect::<Vec<_>>())
    }

    /// `a^s b^{m-s-r} ... k^t det^-m` as a canonical word.
    pub fn word(&self) -> Word {
        self.counting_matrix().canonical_word(self.m as u32)
    }

    /// Inverse of [`PseudoIndex::counting_matrix`] for `m`-doubly-stochastic `3 x 3` matrices.
    pub fn from_counting_matrix(cm: &CountingMatrix) -> Option<Self> {
        if cm.n != 3 {
            return None;
        }
        let m = cm.order()? as i64;
        Some(PseudoIndex {
            m,
            s: cm.get(1, 1) as i64,
            r: cm.get(1, 3) as i64,
            l: cm.get(3, 1) as i64,
            t: cm.get(3, 3) as i64,
        })
    }

    /// All valid indices of order `m`.
    pub fn all(m: i64) -> Vec<PseudoIndex> {
        let mut out = Vec::new();
        for s in 0..=m {
            for r in 0..=m - s {
                for l in 0..=m - s {
                    for t in 0..=(m - r).min(m - l) {
                        let idx = PseudoIndex { m, s, r, l, t };
                        if idx.is_valid() {
                            out.push(idx);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `h(c^m e^m g^m det^-m) = (-q)^{3m}(q^2-1)^2(q^4-1) / ((q^{2m+2}-1)^2(q^{2m+4}-1))`.
pub fn haar_ref(m: u32) -> QRational {
    if m == 0 {
        return QRational::one();
    }
    let m = m as i64;
    let num = QRational::neg_q_pow(3 * m) * QRational::q_pow_minus_one(2).pow(2) * QRational::q_pow_minus_one(4);
    let den = QRational::q_pow_minus_one(2 * m + 2).pow(2) * QRational::q_pow_minus_one(2 * m + 4);
    num / den
}

/// The same values from the one-step recursion in `m`.
pub fn haar_ref_recursive(m: u32) -> QRational {
    let mut h = QRational::one();
    for k in 1..=m as i64 {
        let num = QRational::q_pow(3) * QRational::q_pow_minus_one(2 * k).pow(2) * h;
        let den = QRational::one_minus_q_pow(2 * k + 2) * QRational::one_minus_q_pow(2 * k + 4);
        h = -(num / den);
    }
    h
}

static PSEUDO: Lazy<DashMap<PseudoIndex, QRational>> = Lazy::new(DashMap::new);

/// `h(m; s, r, l, t)` from the closed form.
pub fn haar_pseudo(idx: PseudoIndex) -> Result<QRational> {
    if !idx.is_valid() {
        let PseudoIndex { m, s, r, l, t } = idx;
        return Err(Error::PseudoIndex { m, s, r, l, t });
    }
    if let Some(v) = PSEUDO.get(&idx) {
        return Ok(v.clone());
    }
    let PseudoIndex { m, s, r, l, t } = idx;
    let n = idx.n_e();
    let lo = (n - s).max(n - t).max(0);
    let hi = r.min(l).min(n);
    let mut sum = QRational::zero();
    for k in lo..=hi {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = QRational::q_pow((n - k) * (n - 3 * k - 1) + 2 * k * (s + t))
            * q_binomial(r, k)
            * q_binomial(l, k)
            * q_binomial(s, n - k)
            * q_binomial(t, n - k)
            / q_binomial(n, k);
        sum += &term.scale_int(&sign.into());
    }
    let e = (2 * m + 1) * (l + r) + (n - 2) * m - 2 * l * l - 2 * r * r - r * l + 4 * s * t - 3 * n * s - 3 * n * t;
    let sign: i64 = if (r + l + n) % 2 == 0 { 1 } else { -1 };
    let den = q_multinomial(m, &[n, m - l - s, m - r - t]) * q_multinomial(m, &[n, m - r - s, m - l - t]);
    let v = sum * QRational::q_pow(e).scale_int(&sign.into()) / den * haar_ref(m as u32);
    PSEUDO.insert(idx, v.clone());
    Ok(v)
}

/// `h(x_sigma det^-1) = (-q)^{l(sigma)} / [n]_{q^2}!` for a permutation of `0..n`.
pub fn haar_order1(sigma: &[usize]) -> QRational {
    let n = sigma.len() as i64;
    QRational::neg_q_pow(inversions(sigma) as i64) / q_factorial(n)
}

/// Ratio `h_n(i; m; s,r,l,t) / h_n(i; m; 0,m,m,0)` for the copy of `U_q(3)` on rows and columns `i..i+2`.
pub fn haar_ratio_general_n(i: usize, idx: PseudoIndex, n: usize) -> Result<QRational> {
    if i < 1 || i + 2 > n {
        return Err(Error::Unsupported(format!("embedding index {i} for n = {n}")));
    }
    let base = PseudoIndex::new(idx.m, 0, idx.m, idx.m, 0)?;
    Ok(haar_pseudo(idx)? / haar_pseudo(base)?)
}

static SOLVED: Lazy<DashMap<(usize, u32), HashMap<CountingMatrix, QRational>>> = Lazy::new(DashMap::new);

/// Make solved order-`m` values available to [`haar_state`] for rank `n`.
pub fn register_solution(n: usize, m: u32, values: HashMap<CountingMatrix, QRational>) {
    SOLVED.insert((n, m), values);
}

/// Value on a single canonical word.
pub fn haar_word(n: usize, w: &Word) -> Result<QRational> {
    let cm = w.counting_matrix(n);
    match cm.order() {
        Some(m) if m == w.det_power => haar_matrix(&cm),
        _ => Ok(QRational::zero()),
    }
}

/// Value on the canonical monomial with an `m`-doubly-stochastic counting matrix.
pub fn haar_matrix(cm: &CountingMatrix) -> Result<QRational> {
    let n = cm.n;
    let m = cm.order().ok_or_else(|| Error::Unsupported("counting matrix is not doubly stochastic".into()))?;
    if m == 0 {
        return Ok(QRational::one());
    }
    if n == 3 {
        return haar_pseudo(PseudoIndex::from_counting_matrix(cm).unwrap());
    }
    if n == 1 {
        return Ok(QRational::one());
    }
    if m == 1 {
        let sigma: Vec<usize> = (1..=n).map(|i| (1..=n).position(|j| cm.get(i, j) == 1).unwrap()).collect();
        return Ok(haar_order1(&sigma));
    }
    if let Some(sol) = SOLVED.get(&(n, m)) {
        if let Some(v) = sol.get(cm) {
            return Ok(v.clone());
        }
    }
    Err(Error::Unsupported(format!("order {m} at n = {n} has not been solved")))
}

/// `h(x)`.
pub fn haar_state(x: &AlgebraElement) -> Result<QRational> {
    let n = x.rank();
    let mut acc = QRational::zero();
    for (w, c) in x.terms() {
        let v = haar_word(n, w)?;
        if !v.is_zero() {
            acc += &(c * &v);
        }
    }
    Ok(acc)
}

/// `h(x y)` without forming the full product: only word pairs whose combined
/// counting matrix is doubly stochastic of the right order are normal-ordered.
pub fn haar_product(x: &AlgebraElement, y: &AlgebraElement) -> Result<QRational> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    let n = x.rank();
    let sums = |w: &Word| {
        let cm = w.counting_matrix(n);
        (cm.row_sums(), cm.col_sums())
    };
    let ys: Vec<_> = y.terms().map(|(w, c)| (w, c, sums(w))).collect();
    let mut acc = QRational::zero();
    for (wx, cx) in x.terms() {
        let (rx, colx) = sums(wx);
        for (wy, cy, (ry, coly)) in ys.iter() {
            let p = wx.det_power + wy.det_power;
            let ok = (0..n).all(|i| rx[i] + ry[i] == p && colx[i] + coly[i] == p);
            if !ok {
                continue;
            }
            let prod = AlgebraElement::from_word(n, Word::new(wx.factors.clone(), 0), cx * *cy)
                * AlgebraElement::from_word(n, Word::new(wy.factors.clone(), p), QRational::one());
            acc += &haar_state(&prod)?;
        }
    }
    Ok(acc)
}

/// `(id ⊗ h) Delta(x)`.
pub fn haar_right_leg(x: &AlgebraElement) -> Result<AlgebraElement> {
    let n = x.rank();
    let t = crate::qalgebra::comultiply_order_filtered(x);
    let mut err = None;
    let out = t.contract_right(|w| {
        haar_word(n, w).unwrap_or_else(|e| {
            err = Some(e);
            QRational::zero()
        })
    });
    err.map_or(Ok(out), Err)
}

/// `(h ⊗ id) Delta(x)`.
pub fn haar_left_leg(x: &AlgebraElement) -> Result<AlgebraElement> {
    let n = x.rank();
    let t = crate::qalgebra::comultiply_order_filtered(x);
    let mut err = None;
    let out = t.contract_left(|w| {
        haar_word(n, w).unwrap_or_else(|e| {
            err = Some(e);
            QRational::zero()
        })
    });
    err.map_or(Ok(out), Err)
}
