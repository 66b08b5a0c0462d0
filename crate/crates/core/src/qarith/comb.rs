//! q-numbers, q-binomials, q-multinomials and finite q-Pochhammer symbols (base `q^2`).

use std::collections::HashMap;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::poly::{self, LaurentPoly};
use super::rational::QRational;

/// `(q^(2a); q^2)_n = prod_{i<n} (1 - q^(2a+2i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPochhammer {
    pub base_exponent: i64,
    pub length: u32,
}

impl QPochhammer {
    pub fn new(base_exponent: i64, length: u32) -> Self {
        QPochhammer { base_exponent, length }
    }

    pub fn expand_poly(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for i in 0..self.length as i64 {
            acc = &acc * &LaurentPoly::one_minus_q_pow(2 * self.base_exponent + 2 * i);
        }
        acc
    }

    pub fn expand(&self) -> QRational {
        QRational::from_poly(self.expand_poly())
    }
}

/// `(1 - q^(base*n)) / (1 - q^base)`.
pub fn q_number(n: i64, base: i64) -> QRational {
    if n == 0 {
        return QRational::zero();
    }
    if base == 0 {
        return QRational::from_i64(n);
    }
    QRational::one_minus_q_pow(base * n) / QRational::one_minus_q_pow(base)
}

/// `(q^2; q^2)_n` as a polynomial.
pub fn qfact_poly(n: i64) -> LaurentPoly {
    QPochhammer::new(1, n.max(0) as u32).expand_poly()
}

/// `(q^2; q^2)_n`.
pub fn qfact(n: i64) -> QRational {
    QRational::from_poly(qfact_poly(n))
}

/// `(q^(2a); q^2)_n`.
pub fn pochhammer(a: i64, n: i64) -> QRational {
    QPochhammer::new(a, n.max(0) as u32).expand()
}

static BINOM: Lazy<RwLock<HashMap<(i64, i64), LaurentPoly>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Gaussian binomial in base `q^2` as a polynomial; 0 outside `0 <= k <= n`.
pub fn q_binomial_poly(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return LaurentPoly::one();
    }
    if let Some(p) = BINOM.read().get(&(n, k)) {
        return p.clone();
    }
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=k {
        num = &num * &LaurentPoly::one_minus_q_pow(2 * (n - k + i));
        den = &den * &LaurentPoly::one_minus_q_pow(2 * i);
    }
    let p = poly::div_exact(&num, &den);
    BINOM.write().insert((n, k), p.clone());
    p
}

/// Gaussian binomial `{n choose k}_{q^2}`.
pub fn q_binomial(n: i64, k: i64) -> QRational {
    QRational::from_poly(q_binomial_poly(n, k))
}

/// `(q^2;q^2)_m / prod (q^2;q^2)_{p_i}`; 0 if a part is negative or the parts do not sum to `m`.
pub fn q_multinomial(m: i64, parts: &[i64]) -> QRational {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != m {
        return QRational::zero();
    }
    let mut rest = m;
    let mut acc = LaurentPoly::one();
    for &p in parts {
        acc = &acc * &q_binomial_poly(rest, p);
        rest -= p;
    }
    QRational::from_poly(acc)
}

/// `[n]_{q^2}! = prod_{j=1}^n [j]_{q^2}`.
pub fn q_factorial(n: i64) -> QRational {
    let mut acc = QRational::one();
    for j in 1..=n {
        acc = &acc * &q_number(j, 2);
    }
    acc
}
