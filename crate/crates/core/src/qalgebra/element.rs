use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::qarith::{LaurentPoly, QRational};

use super::hopf::dq_power;
use super::order::{extend, normal_form};
use super::word::{CountingMatrix, Generator, Word};

/// A finite combination of canonical words over `Q(q^(1/2))`.
///
/// Words are a basis of `O(Mat_q(n))`; with stored `det_q^{-1}` powers they only span
/// `O(GL_q(n))`, so use [`AlgebraElement::algebra_eq`] to compare elements that may
/// differ by the relation `D_q det_q^{-1} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: HashMap<Word, QRational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: HashMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, QRational::one())
    }

    pub fn scalar(n: usize, c: QRational) -> Self {
        Self::from_word(n, Word::empty(), c)
    }

    pub fn generator(n: usize, row: usize, col: usize) -> Self {
        Self::from_word(n, Word::new(vec![Generator::new(row, col).code(n)], 0), QRational::one())
    }

    /// The `n = 3` generator named by one of `a..k` (no `i`, `j`).
    pub fn letter(ch: char) -> Option<Self> {
        Generator::from_letter(ch).map(|g| Self::generator(3, g.row, g.col))
    }

    pub fn det_inv(n: usize, power: u32) -> Self {
        Self::from_word(n, Word::new(Vec::new(), power), QRational::one())
    }

    /// `c * w`, normal-ordering `w` if needed.
    pub fn from_word(n: usize, w: Word, c: QRational) -> Self {
        let mut x = Self::zero(n);
        x.add_word(&w, &c);
        x
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> HashMap<Word, QRational> {
        self.terms
    }

    /// Terms sorted by word.
    pub fn sorted_terms(&self) -> Vec<(&Word, &QRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, w: &Word) -> QRational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Adds `c * w` for a canonical word.
    pub fn add_canonical(&mut self, w: Word, c: &QRational) {
        debug_assert!(w.is_canonical());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// Adds `c * w` for an arbitrary word.
    pub fn add_word(&mut self, w: &Word, c: &QRational) {
        if w.is_canonical() {
            self.add_canonical(w.clone(), c);
            return;
        }
        for (f, p) in normal_form(self.n, &w.factors) {
            self.add_canonical(Word::new(f, w.det_power), &c.mul_poly(&p));
        }
    }

    pub fn add_element(&mut self, other: &AlgebraElement, c: &QRational) {
        for (w, x) in other.terms.iter() {
            self.add_canonical(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn checked_mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != rhs.n {
            return Err(Error::RankMismatch(self.n, rhs.n));
        }
        let mut out = Self::zero(self.n);
        let mut cache: HashMap<(&[u8], &[u8]), HashMap<Vec<u8>, LaurentPoly>> = HashMap::new();
        for (w1, c1) in self.terms.iter() {
            for (w2, c2) in rhs.terms.iter() {
                let c = c1 * c2;
                let det = w1.det_power + w2.det_power;
                let nf = cache
                    .entry((w1.factors.as_slice(), w2.factors.as_slice()))
                    .or_insert_with(|| extend(self.n, &w1.factors, &w2.factors));
                for (f, p) in nf.iter() {
                    out.add_canonical(Word::new(f.clone(), det), &c.mul_poly(p));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `D_q^k`, cancelling stored `det_q^{-1}` powers first.
    pub fn mul_dq_pow(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.n);
        for (w, c) in self.terms.iter() {
            if w.det_power >= k {
                out.add_canonical(Word::new(w.factors.clone(), w.det_power - k), c);
            } else {
                let rest = k - w.det_power;
                let base = AlgebraElement::from_word(self.n, Word::new(w.factors.clone(), 0), c.clone());
                out.add_element(&(&base * &dq_power(self.n, rest)), &QRational::one());
            }
        }
        out
    }

    pub fn max_det_power(&self) -> u32 {
        self.terms.keys().map(|w| w.det_power).max().unwrap_or(0)
    }

    /// `D_q^p * self` written without `det_q^{-1}`, for `p >= max_det_power()`.
    pub fn lift(&self, p: u32) -> Self {
        assert!(p >= self.max_det_power());
        let mut out = Self::zero(self.n);
        for (w, c) in self.terms.iter() {
            let base = AlgebraElement::from_word(self.n, Word::new(w.factors.clone(), 0), c.clone());
            let k = p - w.det_power;
            if k == 0 {
                out.add_element(&base, &QRational::one());
            } else {
                out.add_element(&(&base * &dq_power(self.n, k)), &QRational::one());
            }
        }
        out
    }

    /// Equality in `O(GL_q(n))`, i.e. modulo `D_q det_q^{-1} = 1`.
    pub fn algebra_eq(&self, other: &AlgebraElement) -> bool {
        if self == other {
            return true;
        }
        let p = self.max_det_power().max(other.max_det_power());
        (self - other).lift(p).is_zero()
    }

    /// `Some(m)` if every word carries `det_q^{-m}` and an `m`-doubly-stochastic counting matrix.
    pub fn order(&self) -> Option<u32> {
        let mut m: Option<u32> = None;
        if self.terms.is_empty() {
            return Some(0);
        }
        for w in self.terms.keys() {
            let o = w.counting_matrix(self.n).order()?;
            if o != w.det_power || m.is_some_and(|x| x != o) {
                return None;
            }
            m = Some(o);
        }
        m
    }

    /// Keep only the terms whose word satisfies `keep`.
    pub fn filter<F: Fn(&Word) -> bool>(&self, keep: F) -> Self {
        AlgebraElement {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Group terms by counting matrix.
    pub fn by_counting_matrix(&self) -> HashMap<(CountingMatrix, u32), Vec<(&Word, &QRational)>> {
        let mut out: HashMap<(CountingMatrix, u32), Vec<(&Word, &QRational)>> = HashMap::new();
        for (w, c) in self.terms.iter() {
            out.entry((w.counting_matrix(self.n), w.det_power)).or_default().push((w, c));
        }
        out
    }

    /// Text form accepted by the expression parser.
    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.sorted_terms() {
            let ws = w.display(self.n);
            let cs = coeff_text(c);
            let t = match (cs.as_str(), ws.as_str()) {
                (_, "1") => wrap_if_sum(&cs),
                ("1", _) => ws,
                ("-1", _) => format!("-{}", ws),
                _ => format!("{}*{}", wrap_if_sum(&cs), ws),
            };
            parts.push(t);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }
}

fn coeff_text(c: &QRational) -> String {
    if c.denom().is_one() {
        c.to_string()
    } else {
        format!("({})*({})^-1", c.numer(), c.denom())
    }
}

fn wrap_if_sum(s: &str) -> String {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.contains(" + ") || body.contains(" - ") || body.contains('/') || body.contains(")^-1") {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        out.add_element(rhs, &QRational::one());
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        out.add_element(rhs, &QRational::from_i64(-1));
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&QRational::from_i64(-1))
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("rank mismatch")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// Element of `A ⊗ A` with canonical words in both legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub(crate) n: usize,
    pub(crate) terms: HashMap<(Word, Word), QRational>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement { n, terms: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &QRational)> {
        self.terms.iter()
    }

    pub fn add_canonical(&mut self, left: Word, right: Word, c: &QRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn simple(left: &AlgebraElement, right: &AlgebraElement) -> Self {
        let mut t = TensorElement::zero(left.rank());
        for (w1, c1) in left.terms() {
            for (w2, c2) in right.terms() {
                t.add_canonical(w1.clone(), w2.clone(), &(c1 * c2));
            }
        }
        t
    }

    /// Apply a linear functional to the left leg.
    pub fn contract_left<F: FnMut(&Word) -> QRational>(&self, mut f: F) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((l, r), c) in self.terms.iter() {
            let v = f(l);
            if !v.is_zero() {
                out.add_canonical(r.clone(), &(c * &v));
            }
        }
        out
    }

    /// Apply a linear functional to the right leg.
    pub fn contract_right<F: FnMut(&Word) -> QRational>(&self, mut f: F) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for ((l, r), c) in self.terms.iter() {
            let v = f(r);
            if !v.is_zero() {
                out.add_canonical(l.clone(), &(c * &v));
            }
        }
        out
    }

    pub fn scale(&self, c: &QRational) -> Self {
        TensorElement { n: self.n, terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in other.terms.iter() {
            out.add_canonical(l.clone(), r.clone(), &(-c));
        }
        out
    }

    /// Map each leg through a linear map on words (given on single canonical words).
    pub fn map_legs<F, G>(&self, mut f: F, mut g: G) -> TensorElement
    where
        F: FnMut(&Word) -> AlgebraElement,
        G: FnMut(&Word) -> AlgebraElement,
    {
        let mut out = TensorElement::zero(self.n);
        for ((l, r), c) in self.terms.iter() {
            let fl = f(l);
            let gr = g(r);
            for (w1, c1) in fl.terms() {
                for (w2, c2) in gr.terms() {
                    out.add_canonical(w1.clone(), w2.clone(), &(&(c1 * c2) * c));
                }
            }
        }
        out
    }

    /// Swap the legs.
    pub fn flip(&self) -> TensorElement {
        TensorElement {
            n: self.n,
            terms: self.terms.iter().map(|((l, r), c)| ((r.clone(), l.clone()), c.clone())).collect(),
        }
    }
}
