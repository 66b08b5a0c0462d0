//! The field of rational functions in `v = q^(1/2)`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::poly::{self, LaurentPoly};
use crate::error::{Error, Result};

/// Reduced fraction `num / den` of Laurent polynomials in `v`.
///
/// The denominator has valuation 0 and a positive leading coefficient, and shares no
/// nonunit factor with the numerator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_i64(c))
    }

    pub fn from_int(c: BigInt) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        QRational { num: p, den: LaurentPoly::one() }
    }

    /// `q^a`.
    pub fn q_pow(a: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(a))
    }

    /// `v^e = q^(e/2)`.
    pub fn v_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::v_pow(e))
    }

    /// `(-q)^a`.
    pub fn neg_q_pow(a: i64) -> Self {
        let x = Self::q_pow(a);
        if a.rem_euclid(2) == 1 {
            -x
        } else {
            x
        }
    }

    /// `1 - q^a`.
    pub fn one_minus_q_pow(a: i64) -> Self {
        Self::from_poly(LaurentPoly::one_minus_q_pow(a))
    }

    /// `q^a - 1`.
    pub fn q_pow_minus_one(a: i64) -> Self {
        -Self::one_minus_q_pow(a)
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            let c = den.trailing_coeff();
            let g = num.content().gcd(&c);
            let g = if c.is_negative() { -g } else { g };
            (num.div_int_exact(&g).shift(-den.valuation()), LaurentPoly::constant(&c / &g))
        } else if num.is_monomial() {
            let c = num.trailing_coeff();
            let g = den.content().gcd(&c);
            (num.div_int_exact(&g), den.div_int_exact(&g))
        } else {
            let g = poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (poly::div_exact(&num, &g), poly::div_exact(&den, &g))
            }
        };
        Self::normalize_sign(num, den)
    }

    fn normalize_sign(num: LaurentPoly, den: LaurentPoly) -> Self {
        let v = den.valuation();
        let (num, den) = if v != 0 { (num.shift(-v), den.shift(-v)) } else { (num, den) };
        if den.leading_coeff().is_negative() {
            QRational { num: -num, den: -den }
        } else {
            QRational { num, den }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let k = k as u32;
        QRational { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Multiply by `v^e`.
    pub fn shift(&self, e: i64) -> Self {
        QRational { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self * &QRational::from_int(c.clone())
    }

    /// Multiply by a Laurent polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() {
            return QRational { num: &self.num * p, den: LaurentPoly::one() };
        }
        if p.is_monomial() {
            let c = p.trailing_coeff();
            let g = self.den.content().gcd(&c);
            let num = self.num.scale(&(&c / &g)).shift(p.valuation());
            return QRational { num, den: self.den.div_int_exact(&g) };
        }
        let g = poly::gcd(p, &self.den);
        if g.is_one() {
            QRational { num: &self.num * p, den: self.den.clone() }
        } else {
            Self::normalize_sign(&self.num * &poly::div_exact(p, &g), poly::div_exact(&self.den, &g))
        }
    }

    /// True iff the value involves only integer powers of `q`.
    pub fn is_integral_in_q(&self) -> bool {
        self.num.is_integral_in_q() && self.den.is_integral_in_q()
    }

    /// Exact value at `q = q0 > 0`.
    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational> {
        if !q0.is_positive() {
            return Err(Error::Unsupported(format!("evaluation needs q > 0, got {}", q0)));
        }
        let (point, squared) = if self.is_integral_in_q() {
            (q0.clone(), true)
        } else {
            (rational_sqrt(q0).ok_or_else(|| Error::IrrationalSqrt(q0.to_string()))?, false)
        };
        let den = eval_poly(&self.den, &point, squared);
        if den.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(eval_poly(&self.num, &point, squared) / den)
    }

    /// `{num: [[e, c], ...], den: [[e, c], ...]}` with exponents in `v`.
    pub fn to_json(&self) -> Value {
        let terms = |p: &LaurentPoly| -> Value {
            Value::Array(p.terms().map(|(e, c)| json!([e, int_json(c)])).collect())
        };
        json!({ "num": terms(&self.num), "den": terms(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Unsupported("malformed rational function JSON".into());
        let poly = |key: &str| -> Result<LaurentPoly> {
            let arr = v.get(key).and_then(|x| x.as_array()).ok_or_else(bad)?;
            let mut terms = Vec::new();
            for t in arr {
                let e = t.get(0).and_then(|x| x.as_i64()).ok_or_else(bad)?;
                let c = match t.get(1).ok_or_else(bad)? {
                    Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad())?,
                    Value::String(s) => s.parse::<BigInt>().map_err(|_| bad())?,
                    _ => return Err(bad()),
                };
                terms.push((e, c));
            }
            Ok(LaurentPoly::from_terms(terms))
        };
        Self::new(poly("num")?, poly("den")?)
    }

    /// LaTeX rendering with `q` powers.
    pub fn to_latex(&self) -> String {
        let n = poly_latex(&self.num);
        if self.den.is_one() {
            n
        } else {
            format!("\\frac{{{}}}{{{}}}", n, poly_latex(&self.den))
        }
    }
}

fn int_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(x) => json!(x),
        Err(_) => json!(c.to_string()),
    }
}

fn poly_latex(p: &LaurentPoly) -> String {
    p.to_string()
        .replace('*', "")
        .split(' ')
        .map(|tok| {
            if let Some(idx) = tok.find("q^") {
                let (head, exp) = tok.split_at(idx + 2);
                let exp = exp.trim_start_matches('(').trim_end_matches(')');
                format!("{}{{{}}}", head, exp)
            } else {
                tok.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Evaluate at `v = point`, or at `q = point` when `squared` (all exponents even).
fn eval_poly(p: &LaurentPoly, point: &BigRational, squared: bool) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, c) in p.terms() {
        let k = if squared { e / 2 } else { e };
        acc += BigRational::from_integer(c.clone()) * point.pow(k as i32);
    }
    acc
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        Self::from_i64(c)
    }
}

impl From<LaurentPoly> for QRational {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational { num: &self.num + &rhs.num, den: LaurentPoly::one() };
        }
        if self.den == rhs.den {
            return QRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_constant() || rhs.den.is_constant() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return QRational::reduce(num, &self.den * &rhs.den);
        }
        let g = poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return QRational::normalize_sign(num, &self.den * &rhs.den);
        }
        let b1 = poly::div_exact(&self.den, &g);
        let d1 = poly::div_exact(&rhs.den, &g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return QRational::zero();
        }
        let g2 = poly::gcd(&num, &g);
        let den = &b1 * &d1;
        if g2.is_one() {
            QRational::normalize_sign(num, &den * &g)
        } else {
            QRational::normalize_sign(poly::div_exact(&num, &g2), &den * &poly::div_exact(&g, &g2))
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -self.num, den: self.den }
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -self.clone()
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if rhs.den.is_one() {
            return self.mul_poly(&rhs.num);
        }
        if self.den.is_one() {
            return rhs.mul_poly(&self.num);
        }
        let g1 = poly::gcd(&self.num, &rhs.den);
        let g2 = poly::gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (poly::div_exact(&self.num, &g1), poly::div_exact(&rhs.den, &g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (poly::div_exact(&rhs.num, &g2), poly::div_exact(&self.den, &g2))
        };
        QRational::normalize_sign(&a * &c, &b * &d)
    }
}

impl Div for &QRational {
    type Output = QRational;
    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: &QRational) -> QRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<QRational> for &QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRational> for QRational {
    fn add_assign(&mut self, rhs: &QRational) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl AddAssign for QRational {
    fn add_assign(&mut self, rhs: QRational) {
        *self += &rhs;
    }
}

impl SubAssign<&QRational> for QRational {
    fn sub_assign(&mut self, rhs: &QRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRational> for QRational {
    fn mul_assign(&mut self, rhs: &QRational) {
        *self = &*self * rhs;
    }
}

impl Sum for QRational {
    fn sum<I: Iterator<Item = QRational>>(iter: I) -> QRational {
        let mut acc = QRational::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> Sum<&'a QRational> for QRational {
    fn sum<I: Iterator<Item = &'a QRational>>(iter: I) -> QRational {
        let mut acc = QRational::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.num_terms() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
