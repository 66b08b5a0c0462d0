//! Laurent polynomials in `v = q^(1/2)` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_e v^e`.
///
/// Stored densely from the lowest exponent upward. The zero polynomial has no
/// coefficients; otherwise the first and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    val: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { val: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// `c v^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { val: e, coeffs: vec![c] }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// `q^a = v^(2a)`.
    pub fn q_pow(a: i64) -> Self {
        Self::v_pow(2 * a)
    }

    /// `1 - q^a`.
    pub fn one_minus_q_pow(a: i64) -> Self {
        Self::one() - Self::q_pow(a)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut items: Vec<(i64, BigInt)> = terms.into_iter().collect();
        if items.is_empty() {
            return Self::zero();
        }
        let lo = items.iter().map(|t| t.0).min().unwrap();
        let hi = items.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in items.drain(..) {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub(crate) fn from_dense(val: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { val, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.val == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c v^e` with `c != 0`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.val == 0 && self.coeffs.len() == 1)
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Highest exponent (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.val + self.coeffs.len() as i64 - 1
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn trailing_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Coefficient of `v^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.val;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    pub(crate) fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { val: self.val, coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }


    /// True if every exponent is even, i.e. the polynomial lives in `Z[q, q^-1]`.
    pub fn is_integral_in_q(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// `v -> -v`-style substitution `v^e -> v^(-e)` (inverts the variable).
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_into(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let lo = self.val.min(other.val);
        let hi = self.degree().max(other.degree());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.val - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.val - lo) as usize + i];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_dense(lo, coeffs)
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_into(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_into(rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if !self.is_zero() && rhs.val >= self.val && rhs.degree() <= self.degree() {
            let off = (rhs.val - self.val) as usize;
            for (i, c) in rhs.coeffs.iter().enumerate() {
                self.coeffs[off + i] += c;
            }
            self.trim();
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() {
            return self.scale(&rhs.coeffs[0]).shift(rhs.val);
        }
        if self.is_monomial() {
            return rhs.scale(&self.coeffs[0]).shift(self.val);
        }
        LaurentPoly::from_dense(self.val + rhs.val, dense_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

pub(crate) fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn dense_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while matches!(a.last(), Some(c) if c.is_zero()) {
        a.pop();
    }
    a
}

fn dense_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

fn dense_primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = dense_content(&a);
    if g.is_zero() {
        return a;
    }
    if a.last().map(|c| c.is_negative()).unwrap_or(false) {
        g = -g;
    }
    if g.is_one() {
        return a;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, dense, trimmed), made primitive.
fn prem_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let g = lr.gcd(lb);
        let fa = lb / &g;
        let fb = &lr / &g;
        let shift = dr - db;
        if !fa.is_one() {
            for c in r.iter_mut() {
                *c *= &fa;
            }
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[shift + j] -= &fb * y;
            }
        }
        debug_assert!(r[dr].is_zero());
        r = dense_trim(r);
        if r.len() > 8 {
            r = dense_primitive(r);
        }
    }
    dense_primitive(r)
}

/// Gcd over `Z[x]` of two dense polynomials with nonzero constant terms.
/// The result has positive leading coefficient.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = dense_content(a);
    let cb = dense_content(b);
    let c = ca.gcd(&cb);
    let mut x = dense_primitive(a.to_vec());
    let mut y = dense_primitive(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.is_empty() {
            break;
        }
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = prem_primitive(&x, &y);
        x = y;
        y = r;
    }
    let mut g = dense_primitive(x);
    if g.last().map(|v| v.is_negative()).unwrap_or(false) {
        g = g.into_iter().map(|v| -v).collect();
    }
    g.into_iter().map(|v| v * &c).collect()
}

/// Exact quotient `a / b` over `Z[x]`; panics in debug builds if not exact.
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    let n = a.len() - db;
    let mut q = vec![BigInt::zero(); n];
    for k in (0..n).rev() {
        let c = &r[k + db];
        if c.is_zero() {
            continue;
        }
        let (qc, rem) = c.div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[k + j] -= &qc * y;
            }
        }
        q[k] = qc;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}

/// Split `p` (nonzero) into `v^val * P(v^step)` where `P` has a nonzero constant term.
fn compress(p: &LaurentPoly) -> (i64, u64, Vec<BigInt>) {
    let mut step: u64 = 0;
    for (i, c) in p.coeffs.iter().enumerate() {
        if !c.is_zero() {
            step = step.gcd(&(i as u64));
        }
    }
    if step == 0 {
        step = 1;
    }
    let dense = if step == 1 {
        p.coeffs.clone()
    } else {
        p.coeffs.iter().step_by(step as usize).cloned().collect()
    };
    (p.val, step, dense)
}

fn expand(val: i64, step: u64, dense: Vec<BigInt>) -> LaurentPoly {
    if step == 1 {
        return LaurentPoly::from_dense(val, dense);
    }
    let mut out = vec![BigInt::zero(); (dense.len() - 1) * step as usize + 1];
    for (i, c) in dense.into_iter().enumerate() {
        out[i * step as usize] = c;
    }
    LaurentPoly::from_dense(val, out)
}

fn restep(dense: &[BigInt], from: u64, to: u64) -> Vec<BigInt> {
    if from == to {
        return dense.to_vec();
    }
    let f = (from / to) as usize;
    let mut out = vec![BigInt::zero(); (dense.len() - 1) * f + 1];
    for (i, c) in dense.iter().enumerate() {
        out[i * f] = c.clone();
    }
    out
}

/// Gcd in `Z[v, v^-1]` up to units; the result has valuation 0 and positive leading coefficient.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::constant(a.content().gcd(&b.content()));
    }
    let (_, sa, da) = compress(a);
    let (_, sb, db) = compress(b);
    let s = sa.gcd(&sb);
    let da = restep(&da, sa, s);
    let db = restep(&db, sb, s);
    let g = dense_gcd(&da, &db);
    expand(0, s, g)
}

fn normalize_unit(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let p = a.shift(-a.val);
    if p.leading_coeff().is_negative() {
        -p
    } else {
        p
    }
}

/// Exact quotient in `Z[v, v^-1]`; `b` must divide `a`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    if b.is_monomial() {
        return a.div_int_exact(&b.coeffs[0]).shift(-b.val);
    }
    let (va, sa, da) = compress(a);
    let (vb, sb, db) = compress(b);
    let s = sa.gcd(&sb);
    let da = restep(&da, sa, s);
    let db = restep(&db, sb, s);
    if da.len() < db.len() {
        panic!("inexact polynomial division");
    }
    let q = dense_div_exact(&da, &db);
    expand(va - vb, s, q)
}


/// Formats `v^e` as a power of `q`.
pub(crate) fn fmt_q_power(e: i64) -> String {
    if e % 2 == 0 {
        format!("q^{}", e / 2)
    } else {
        format!("q^({}/2)", e)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{}", abs)?,
                (2, true) => write!(f, "q")?,
                (2, false) => write!(f, "{}*q", abs)?,
                (_, true) => write!(f, "{}", fmt_q_power(e))?,
                (_, false) => write!(f, "{}*{}", abs, fmt_q_power(e))?,
            }
        }
        Ok(())
    }
}
