//! Irreducible corepresentations of `O(U_q(3))`.
//!
//! Basis vectors are indexed by semistandard tableaux with at most two rows (after removing
//! full columns, i.e. `lambda3 = 0`). Each tableau column maps to one factor:
//! `{1,2} -> k* D_q`, `{1,3} -> -q h* D_q`, `{2,3} -> q^2 g* D_q`, `{1} -> a`, `{2} -> b`, `{3} -> c`.

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashMap;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::haar::haar_product;
use crate::qalgebra::{apply_morphism, quantum_minor, star, AlgebraElement, Morphism};
use crate::qarith::{pochhammer, q_binomial, qfact, QRational};

/// `lambda1 >= lambda2 >= lambda3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    pub lambda1: i64,
    pub lambda2: i64,
    pub lambda3: i64,
}

impl DominantWeight {
    pub fn new(lambda1: i64, lambda2: i64, lambda3: i64) -> Result<Self> {
        if lambda1 < lambda2 || lambda2 < lambda3 {
            return Err(Error::NotDominant(format!("({lambda1}, {lambda2}, {lambda3})")));
        }
        Ok(DominantWeight { lambda1, lambda2, lambda3 })
    }

    /// Row lengths `(lambda1 - lambda3, lambda2 - lambda3)`.
    pub fn normalized(&self) -> (usize, usize) {
        ((self.lambda1 - self.lambda3) as usize, (self.lambda2 - self.lambda3) as usize)
    }

    /// All dominant weights with `lambda3 = 0` and `lambda1 <= max_width`.
    pub fn all_normalized(max_width: i64) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        for l1 in 0..=max_width {
            for l2 in 0..=l1 {
                out.push(DominantWeight { lambda1: l1, lambda2: l2, lambda3: 0 });
            }
        }
        out
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.lambda1, self.lambda2, self.lambda3)
    }
}

/// Content (torus weight) `(#1, #2, #3)`, including the det shift.
pub type Content = [i64; 3];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: DominantWeight,
    /// Rows of the normalized shape; the second row may be empty.
    pub rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(shape: DominantWeight, rows: Vec<Vec<u8>>) -> Result<Self> {
        let (l1, l2) = shape.normalized();
        let mut rows = rows;
        while rows.len() < 2 {
            rows.push(Vec::new());
        }
        if rows.len() > 2 || rows[0].len() != l1 || rows[1].len() != l2 || !is_semistandard(&rows) {
            return Err(Error::NotSemistandard);
        }
        Ok(Tableau { shape, rows })
    }

    pub fn content(&self) -> Content {
        let mut c = [self.shape.lambda3; 3];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &Vec<u8>| r.iter().map(|x| x.to_string()).collect::<String>();
        write!(f, "[{}|{}]", row(&self.rows[0]), row(&self.rows[1]))
    }
}

fn is_semistandard(rows: &[Vec<u8>]) -> bool {
    let entries_ok = rows.iter().flatten().all(|&x| (1..=3).contains(&x));
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows.windows(2).all(|p| p[1].len() <= p[0].len() && p[1].iter().zip(&p[0]).all(|(b, t)| b > t));
    entries_ok && rows_ok && cols_ok
}

/// All semistandard tableaux of shape `lambda`, grouped by content; within a content they
/// follow the `O_2` chain (most single 2s in the first row first).
pub fn enumerate_ssyt(lambda: DominantWeight) -> Vec<Tableau> {
    weight_spaces(lambda).into_values().flatten().collect()
}

/// Semistandard tableaux of shape `lambda` keyed by content.
pub fn weight_spaces(lambda: DominantWeight) -> BTreeMap<Content, Vec<Tableau>> {
    let (l1, l2) = lambda.normalized();
    let mut out: BTreeMap<Content, Vec<Tableau>> = BTreeMap::new();
    for x1 in 0..=l1 {
        for x2 in 0..=l1 - x1 {
            let x3 = l1 - x1 - x2;
            for y2 in 0..=l2 {
                let y3 = l2 - y2;
                let mut top = vec![1u8; x1];
                top.extend(std::iter::repeat_n(2, x2));
                top.extend(std::iter::repeat_n(3, x3));
                let mut bottom = vec![2u8; y2];
                bottom.extend(std::iter::repeat_n(3, y3));
                let rows = vec![top, bottom];
                if is_semistandard(&rows) {
                    let t = Tableau { shape: lambda, rows };
                    out.entry(t.content()).or_default().push(t);
                }
            }
        }
    }
    for ts in out.values_mut() {
        ts.sort_by_key(|t| std::cmp::Reverse(t.rows[0].iter().filter(|&&x| x == 2).count()));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(k*)^d1 (-q h*)^d2 a^c1 b^c2 c^c3 D_q^(d1+d2)`.
    A,
    /// `(k*)^d1 (-q h*)^d2 (q^2 g*)^d3 b^c2 c^c3 D_q^(d1+d2+d3)`.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVector {
    pub family: Family,
    pub d1: u32,
    pub d2: u32,
    pub d3: u32,
    pub c1: u32,
    pub c2: u32,
    pub c3: u32,
    pub det_shift: i64,
}

impl BasisVector {
    /// Builds a vector from its exponents; the family follows from `d3`.
    pub fn new(d: [u32; 3], c: [u32; 3], det_shift: i64) -> Result<Self> {
        if d[2] > 0 && c[0] > 0 {
            return Err(Error::NotSemistandard);
        }
        let family = if d[2] == 0 { Family::A } else { Family::B };
        Ok(BasisVector { family, d1: d[0], d2: d[1], d3: d[2], c1: c[0], c2: c[1], c3: c[2], det_shift })
    }

    pub fn exponents(&self) -> [u32; 6] {
        [self.d1, self.d2, self.d3, self.c1, self.c2, self.c3]
    }

    pub fn content(&self) -> Content {
        let s = self.det_shift;
        [
            (self.d1 + self.d2 + self.c1) as i64 + s,
            (self.d1 + self.d3 + self.c2) as i64 + s,
            (self.d2 + self.d3 + self.c3) as i64 + s,
        ]
    }

    pub fn shape(&self) -> DominantWeight {
        let l2 = (self.d1 + self.d2 + self.d3) as i64;
        let l1 = l2 + (self.c1 + self.c2 + self.c3) as i64;
        DominantWeight { lambda1: l1 + self.det_shift, lambda2: l2 + self.det_shift, lambda3: self.det_shift }
    }

    /// One `O_2` step: trade a single 2 in the first row for a 3 in the second.
    pub fn o2(&self) -> Option<BasisVector> {
        (self.d2 > 0 && self.c2 > 0).then(|| BasisVector {
            d1: self.d1 + 1,
            d2: self.d2 - 1,
            c2: self.c2 - 1,
            c3: self.c3 + 1,
            ..*self
        })
    }

    /// Exponent `e` with `rho(xi_T) = q^e xi_T`.
    pub fn rho_exponent(&self) -> i64 {
        4 * self.d1 as i64 + 2 * self.d2 as i64 + 4 * self.c1 as i64 + 2 * self.c2 as i64
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponents();
        write!(f, "{:?}({},{},{};{},{},{})", self.family, e[0], e[1], e[2], e[3], e[4], e[5])
    }
}

pub fn tableau_to_vector(t: &Tableau) -> Result<BasisVector> {
    if !is_semistandard(&t.rows) {
        return Err(Error::NotSemistandard);
    }
    let (top, bottom) = (&t.rows[0], &t.rows[1]);
    let mut d = [0u32; 3];
    let mut c = [0u32; 3];
    for (p, &x) in top.iter().enumerate() {
        match bottom.get(p) {
            Some(&y) => match (x, y) {
                (1, 2) => d[0] += 1,
                (1, 3) => d[1] += 1,
                _ => d[2] += 1,
            },
            None => c[x as usize - 1] += 1,
        }
    }
    BasisVector::new(d, c, t.shape.lambda3)
}

/// Right comodule `V^R` (vectors `xi_T`) or left comodule `V^L` (vectors `xi^T = gamma(xi_T)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comodule {
    Right,
    Left,
}

/// `<x, y>_L = h(x* y)` or `<x, y>_R = h(x y*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Piece {
    Minor12,
    Minor13,
    Minor23,
    A,
    B,
    C,
}

static PIECES: Lazy<DashMap<(Piece, Comodule), (AlgebraElement, AlgebraElement)>> = Lazy::new(DashMap::new);

/// Rewrite `x` as `c * g * det^-1` for a single generator `g` when possible.
fn shrink(x: &AlgebraElement) -> AlgebraElement {
    let p = x.max_det_power();
    if p <= 1 {
        return x.clone();
    }
    let lifted = x.lift(p);
    let Some((w0, c0)) = lifted.terms().next() else { return x.clone() };
    for row in 1..=3 {
        for col in 1..=3 {
            let cand = &AlgebraElement::generator(3, row, col) * &AlgebraElement::det_inv(3, 1);
            let cl = cand.lift(p);
            let cw = cl.coeff(w0);
            if cw.is_zero() {
                continue;
            }
            let ratio = c0 / &cw;
            if cl.scale(&ratio) == lifted {
                return cand.scale(&ratio);
            }
        }
    }
    x.clone()
}

/// `(element, star(element))` of one tableau column.
fn piece(p: Piece, side: Comodule) -> (AlgebraElement, AlgebraElement) {
    if let Some(x) = PIECES.get(&(p, side)) {
        return x.clone();
    }
    let e = match p {
        Piece::Minor12 => quantum_minor(3, &[1, 2], &[1, 2]).unwrap(),
        Piece::Minor13 => quantum_minor(3, &[1, 2], &[1, 3]).unwrap(),
        Piece::Minor23 => quantum_minor(3, &[1, 2], &[2, 3]).unwrap(),
        Piece::A => AlgebraElement::generator(3, 1, 1),
        Piece::B => AlgebraElement::generator(3, 1, 2),
        Piece::C => AlgebraElement::generator(3, 1, 3),
    };
    let e = match side {
        Comodule::Right => e,
        Comodule::Left => apply_morphism(&e, Morphism::Gamma),
    };
    let s = shrink(&star(&e));
    PIECES.insert((p, side), (e.clone(), s.clone()));
    (e, s)
}

fn pieces(v: &BasisVector) -> [(Piece, u32); 6] {
    [
        (Piece::Minor12, v.d1),
        (Piece::Minor13, v.d2),
        (Piece::Minor23, v.d3),
        (Piece::A, v.c1),
        (Piece::B, v.c2),
        (Piece::C, v.c3),
    ]
}

/// `xi_T` (right comodule) or `xi^T` (left comodule), normal ordered with no det powers.
pub fn vector_element(v: &BasisVector, side: Comodule) -> AlgebraElement {
    let mut acc = AlgebraElement::one(3);
    for (p, e) in pieces(v) {
        if e > 0 {
            acc = &acc * &piece(p, side).0.pow(e);
        }
    }
    acc
}

pub fn vector_to_element(v: &BasisVector) -> AlgebraElement {
    vector_element(v, Comodule::Right)
}

/// `star(vector_element(v, side))`, assembled from the stars of the columns.
pub fn vector_star_element(v: &BasisVector, side: Comodule) -> AlgebraElement {
    let mut acc = AlgebraElement::one(3);
    for (p, e) in pieces(v).into_iter().rev() {
        if e > 0 {
            acc = &acc * &piece(p, side).1.pow(e);
        }
    }
    acc
}

/// Largest first-row length accepted by [`gram_entry_direct`].
pub const DIRECT_MAX_WIDTH: i64 = 6;

/// `<v_i, v_j>` by expanding both vectors and evaluating the Haar state.
pub fn gram_entry_direct(vi: &BasisVector, vj: &BasisVector, form: Form, side: Comodule) -> Result<QRational> {
    for v in [vi, vj] {
        let (l1, _) = v.shape().normalized();
        if l1 as i64 > DIRECT_MAX_WIDTH {
            return Err(Error::Feasibility(format!("direct Gram entry with first row {l1} > {DIRECT_MAX_WIDTH}")));
        }
    }
    match form {
        Form::L => haar_product(&vector_star_element(vi, side), &vector_element(vj, side)),
        Form::R => haar_product(&vector_element(vi, side), &vector_star_element(vj, side)),
    }
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

/// `(1 - q^2)^2 (1 - q^4)`.
fn base_factor() -> QRational {
    let a = QRational::one_minus_q_pow(2);
    &(&a * &a) * &QRational::one_minus_q_pow(4)
}

/// `<v_i, v_{i+k}>_L` on `V^R`, family A, with `v_i = (d1, d2, c1, c2, c3)`.
pub fn inner_product_family_a(d1: i64, d2: i64, c1: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let e = 2 * d1 * d2 + 4 * d1 + 4 * d2 + 2 * c1 * c2 + 2 * c1 * c3 + 2 * c2 * c3 + 4 * c1 + 4 * c2 + 4 * c3
        + k * (d2 + c2 - k);
    &q(e) * &family_a_tail(d1, d2, c1, c2, c3, k)
}

/// Fraction and double sum shared by the family A closed forms.
pub fn family_a_tail(d1: i64, d2: i64, c1: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let pre = &(&base_factor() * &qfact(d2)) * &qfact(c2) / (&qfact(d1 + d2 + 1) * &qfact(c1 + c2 + c3 + 1));
    let mut outer = QRational::zero();
    for j in 0..=c3 {
        let num = &(&(&sign(j) * &q(j * j - j)) * &q_binomial(d1, j)) * &(&q_binomial(c3, j) * &qfact(j));
        if num.is_zero() {
            continue;
        }
        let den = pochhammer(d1 + d2 + c1 + c3 - j + 2, c2 + 1);
        let mut inner = QRational::zero();
        for i in 0..=c2 - k {
            let t = &(&q((2 * d1 + 2 * d2 + 2 * c3 - 2 * j + 2) * i) * &qfact(c1 + i))
                * &(&qfact(d1 + c2 + c3 - j - i) * &q_binomial(c2 - k, i));
            inner += &t;
        }
        outer += &(&(&num / &den) * &inner);
    }
    &pre * &outer
}

/// `<v_i, v_{i+k}>_L` on `V^R`, family B, with `v_i = (d1, d2, d3, c2, c3)`.
pub fn inner_product_family_b(d1: i64, d2: i64, d3: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let e = 2 * d2 * d3 + 2 * d1 * d2 + 2 * d1 * d3 + 4 * d3 + 4 * d1 + 4 * d2 + 2 * c2 * c3 + 4 * c2 + 4 * c3
        + k * (d2 + c2 - k);
    &q(e) * &family_b_tail(d1, d2, d3, c2, c3, k)
}

pub fn family_b_tail(d1: i64, d2: i64, d3: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let pre = &(&base_factor() * &qfact(d2)) * &qfact(c2) / (&qfact(c2 + c3 + 1) * &qfact(d1 + d2 + d3 + 1));
    let mut outer = QRational::zero();
    for j in 0..=d1 {
        let num = &(&(&sign(j) * &q(j * j - j)) * &q_binomial(d1, j)) * &(&q_binomial(c3, j) * &qfact(j));
        if num.is_zero() {
            continue;
        }
        let den = pochhammer(d3 + c2 + c3 + d1 - j + 2, d2 + 1);
        let mut inner = QRational::zero();
        for i in 0..=d2 - k {
            let t = &(&q((2 * c2 + 2 * c3 + 2 * d1 - 2 * j + 2) * i) * &qfact(c3 + d2 + d1 - j - i))
                * &(&qfact(d3 + i) * &q_binomial(d2 - k, i));
            inner += &t;
        }
        outer += &(&(&num / &den) * &inner);
    }
    &pre * &outer
}

/// `<v^{i+k}, v^i>_R` on `V^L`, family A.
pub fn left_inner_product_family_a(d1: i64, d2: i64, c1: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let e = 2 * d1 * d2 + 2 * c1 * c2 + 2 * c1 * c3 + 2 * c2 * c3 + k * (d2 + c2 - k);
    &q(e) * &family_a_tail(d1, d2, c1, c2, c3, k)
}

/// `<v^{i+k}, v^i>_R` on `V^L`, family B.
pub fn left_inner_product_family_b(d1: i64, d2: i64, d3: i64, c2: i64, c3: i64, k: i64) -> QRational {
    let e = 2 * d2 * d3 + 2 * d1 * d2 + 2 * d1 * d3 + 2 * c2 * c3 + k * (d2 + c2 - k);
    &q(e) * &family_b_tail(d1, d2, d3, c2, c3, k)
}

/// `k >= 0` with `o2^k(lo) = hi`.
fn chain_distance(lo: &BasisVector, hi: &BasisVector) -> Option<u32> {
    let mut cur = *lo;
    let mut k = 0;
    loop {
        if cur == *hi {
            return Some(k);
        }
        cur = cur.o2()?;
        k += 1;
    }
}

/// `<v_i, v_j>` from the closed forms.
pub fn gram_entry_closed(vi: &BasisVector, vj: &BasisVector, form: Form, side: Comodule) -> Result<QRational> {
    if vi.content() != vj.content() || vi.shape() != vj.shape() {
        return Err(Error::WeightMismatch);
    }
    // Both forms are symmetric, so order the pair along the chain.
    let (lo, k) = match (chain_distance(vi, vj), chain_distance(vj, vi)) {
        (Some(k), _) => (*vi, k),
        (None, Some(k)) => (*vj, k),
        _ => return Err(Error::WeightMismatch),
    };
    let hi = if vi == &lo { *vj } else { *vi };
    let [d1, d2, d3, c1, c2, c3] = lo.exponents().map(|x| x as i64);
    let k = k as i64;
    let rho_hi = q(hi.rho_exponent());
    Ok(match (side, form, lo.family) {
        (Comodule::Right, Form::L, Family::A) => inner_product_family_a(d1, d2, c1, c2, c3, k),
        (Comodule::Right, Form::L, Family::B) => inner_product_family_b(d1, d2, d3, c2, c3, k),
        (Comodule::Right, Form::R, Family::A) => &inner_product_family_a(d1, d2, c1, c2, c3, k) / &rho_hi,
        (Comodule::Right, Form::R, Family::B) => &inner_product_family_b(d1, d2, d3, c2, c3, k) / &rho_hi,
        (Comodule::Left, Form::R, Family::A) => left_inner_product_family_a(d1, d2, c1, c2, c3, k),
        (Comodule::Left, Form::R, Family::B) => left_inner_product_family_b(d1, d2, d3, c2, c3, k),
        (Comodule::Left, Form::L, Family::A) => &left_inner_product_family_a(d1, d2, c1, c2, c3, k) * &rho_hi,
        (Comodule::Left, Form::L, Family::B) => &left_inner_product_family_b(d1, d2, d3, c2, c3, k) * &rho_hi,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub lambda: DominantWeight,
    pub mu: Content,
    pub form: Form,
    pub side: Comodule,
    pub vectors: Vec<BasisVector>,
    pub entries: Vec<Vec<QRational>>,
}

/// Basis of `V_mu(lambda)` in chain order `v_0, O_2 v_0, ...`.
pub fn weight_space_basis(lambda: DominantWeight, mu: Content) -> Result<Vec<BasisVector>> {
    let spaces = weight_spaces(lambda);
    let ts = spaces.get(&mu).ok_or(Error::EmptyWeightSpace)?;
    ts.iter().map(tableau_to_vector).collect()
}

pub fn gram_matrix(lambda: DominantWeight, mu: Content, form: Form, side: Comodule, method: Method) -> Result<GramMatrix> {
    let vectors = weight_space_basis(lambda, mu)?;
    let dim = vectors.len();
    let flat: Vec<Result<QRational>> = (0..dim * dim)
        .into_par_iter()
        .map(|idx| {
            let (vi, vj) = (&vectors[idx / dim], &vectors[idx % dim]);
            match method {
                Method::Closed => gram_entry_closed(vi, vj, form, side),
                Method::Direct => gram_entry_direct(vi, vj, form, side),
            }
        })
        .collect();
    let mut entries = vec![Vec::with_capacity(dim); dim];
    for (idx, x) in flat.into_iter().enumerate() {
        entries[idx / dim].push(x?);
    }
    Ok(GramMatrix { lambda, mu, form, side, vectors, entries })
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": [self.lambda.lambda1, self.lambda.lambda2, self.lambda.lambda3],
            "mu": self.mu,
            "side": match self.form { Form::L => "L", Form::R => "R" },
            "comodule": match self.side { Comodule::Right => "right", Comodule::Left => "left" },
            "vectors": self.vectors.iter().map(|v| v.exponents().to_vec()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(|x| x.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn to_latex(&self) -> String {
        matrix_latex(&self.entries)
    }

    /// Leading principal minors at `q = q0`.
    pub fn leading_minors_at(&self, q0: &BigRational) -> Result<Vec<BigRational>> {
        let m: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.evaluate(q0)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok((1..=m.len()).map(|k| determinant(m[..k].iter().map(|r| r[..k].to_vec()).collect())).collect())
    }

    pub fn is_positive_definite_at(&self, q0: &BigRational) -> Result<bool> {
        Ok(self.leading_minors_at(q0)?.iter().all(|d| d.is_positive()))
    }
}

/// Tabular LaTeX rendering of a matrix of scalars.
pub fn matrix_latex(rows: &[Vec<QRational>]) -> String {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut s = format!("\\begin{{tabular}}{{{}}}\n", "c".repeat(cols));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| format!("${}$", x.to_latex())).collect();
        s.push_str(&cells.join(" & "));
        s.push_str(" \\\\\n");
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            let f = &m[r][col] / &piv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Orthogonalization without square roots: unit lower-triangular `T` and `d` with
/// `T G T^t = diag(d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Orthogonalization {
    pub transform: Vec<Vec<QRational>>,
    pub norms_sq: Vec<QRational>,
}

impl Orthogonalization {
    pub fn to_json(&self) -> Value {
        json!({
            "transform": self.transform.iter().map(|r| r.iter().map(|x| x.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "norms_sq": self.norms_sq.iter().map(|x| x.to_json()).collect::<Vec<_>>(),
        })
    }
}

pub fn gram_schmidt(g: &[Vec<QRational>]) -> Result<Orthogonalization> {
    let n = g.len();
    // G = L D L^t.
    let mut l = vec![vec![QRational::zero(); n]; n];
    let mut d = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = g[j][j].clone();
        for k in 0..j {
            dj -= &(&(&l[j][k] * &l[j][k]) * &d[k]);
        }
        if dj.is_zero() {
            return Err(Error::SingularMinor(j + 1));
        }
        l[j][j] = QRational::one();
        for i in j + 1..n {
            let mut x = g[i][j].clone();
            for k in 0..j {
                x -= &(&(&l[i][k] * &l[j][k]) * &d[k]);
            }
            l[i][j] = &x / &dj;
        }
        d.push(dj);
    }
    // T = L^-1 by forward substitution.
    let mut t = vec![vec![QRational::zero(); n]; n];
    for i in 0..n {
        t[i][i] = QRational::one();
        for j in 0..i {
            let mut x = QRational::zero();
            for k in j..i {
                x -= &(&l[i][k] * &t[k][j]);
            }
            t[i][j] = x;
        }
    }
    Ok(Orthogonalization { transform: t, norms_sq: d })
}

/// `T G T^t`.
pub fn congruence(t: &[Vec<QRational>], g: &[Vec<QRational>]) -> Vec<Vec<QRational>> {
    let n = g.len();
    let mut tg = vec![vec![QRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                tg[i][j] += &(&t[i][k] * &g[k][j]);
            }
        }
    }
    let mut out = vec![vec![QRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += &(&tg[i][k] * &t[j][k]);
            }
        }
    }
    out
}

/// `q^{2(rho, mu)}` with `2 rho = 2 eps_1 - 2 eps_3`.
fn rho_weight(mu: &Content) -> QRational {
    QRational::q_pow(2 * mu[0] - 2 * mu[2])
}

/// `d_lambda`, the sum of `q^{2(rho, mu)}` over all tableau contents.
pub fn quantum_dimension(lambda: DominantWeight) -> QRational {
    let mut acc = QRational::zero();
    for t in enumerate_ssyt(lambda) {
        acc += &rho_weight(&t.content());
    }
    acc
}

/// `(<w, w>_L, <w, w>_R)` for a matrix coefficient `w_{i,j}` with weights `mu_i`, `mu_j`.
pub fn matrix_coeff_norm(lambda: DominantWeight, mu_i: Content, mu_j: Content) -> Result<(QRational, QRational)> {
    let spaces = weight_spaces(lambda);
    if !spaces.contains_key(&mu_i) || !spaces.contains_key(&mu_j) {
        return Err(Error::EmptyWeightSpace);
    }
    let d = quantum_dimension(lambda);
    let l = &rho_weight(&mu_i) / &d;
    let r = &rho_weight(&mu_j).inv()? / &d;
    Ok((l, r))
}
