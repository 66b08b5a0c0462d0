//! Quantum minors, comultiplication, counit, antipode, star and the (anti)automorphisms.

use std::collections::HashMap;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::perm::{complement, inversions, permutations};
use crate::qarith::{LaurentPoly, QRational};

use super::element::{AlgebraElement, TensorElement};
use super::order::normal_form;
use super::word::{Generator, Word};

/// `xi^I_J = sum_tau (-q)^{l(tau)} x_{i1, j_tau(1)} ... x_{ir, j_tau(r)}` (rows `I`, columns `J`).
pub fn quantum_minor(n: usize, rows: &[usize], cols: &[usize]) -> Result<AlgebraElement> {
    if rows.len() != cols.len() {
        return Err(Error::MinorSize);
    }
    let r = rows.len();
    let mut out = AlgebraElement::zero(n);
    for tau in permutations(r) {
        let gens: Vec<Generator> = (0..r).map(|p| Generator::new(rows[p], cols[tau[p]])).collect();
        out.add_word(&Word::from_generators(n, &gens, 0), &QRational::neg_q_pow(inversions(&tau) as i64));
    }
    Ok(out)
}

pub fn quantum_determinant(n: usize) -> AlgebraElement {
    let all: Vec<usize> = (1..=n).collect();
    quantum_minor(n, &all, &all).expect("square minor")
}

static DQ_POW: Lazy<DashMap<(usize, u32), AlgebraElement>> = Lazy::new(DashMap::new);

/// `D_q^k`, expanded and cached.
pub fn dq_power(n: usize, k: u32) -> AlgebraElement {
    if k == 0 {
        return AlgebraElement::one(n);
    }
    if let Some(x) = DQ_POW.get(&(n, k)) {
        return x.clone();
    }
    let x = &dq_power(n, k - 1) * &quantum_determinant(n);
    DQ_POW.insert((n, k), x.clone());
    x
}

fn for_each_split<F: FnMut(&[u8], &[u8])>(n: usize, letters: &[u8], max_count: Option<u32>, f: &mut F) {
    let gens: Vec<(usize, usize)> = letters.iter().map(|&c| (c as usize / n, c as usize % n)).collect();
    let mut left = Vec::with_capacity(gens.len());
    let mut right = Vec::with_capacity(gens.len());
    let mut counts = vec![0u32; n];
    fn rec<F: FnMut(&[u8], &[u8])>(
        n: usize,
        gens: &[(usize, usize)],
        max_count: Option<u32>,
        left: &mut Vec<u8>,
        right: &mut Vec<u8>,
        counts: &mut Vec<u32>,
        f: &mut F,
    ) {
        let p = left.len();
        if p == gens.len() {
            f(left, right);
            return;
        }
        let (i, j) = gens[p];
        for k in 0..n {
            if let Some(m) = max_count {
                if counts[k] >= m {
                    continue;
                }
            }
            counts[k] += 1;
            left.push((i * n + k) as u8);
            right.push((k * n + j) as u8);
            rec(n, gens, max_count, left, right, counts, f);
            left.pop();
            right.pop();
            counts[k] -= 1;
        }
    }
    rec(n, &gens, max_count, &mut left, &mut right, &mut counts, f);
}

fn comultiply_impl(x: &AlgebraElement, order_filter: bool) -> TensorElement {
    let n = x.rank();
    let mut out = TensorElement::zero(n);
    let mut nf_cache: HashMap<Vec<u8>, Vec<(Vec<u8>, LaurentPoly)>> = HashMap::new();
    for (w, c) in x.terms() {
        let det = w.det_power;
        if order_filter && w.factors.len() != n * det as usize {
            continue;
        }
        let max = if order_filter { Some(det) } else { None };
        let mut pairs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        for_each_split(n, &w.factors, max, &mut |l, r| pairs.push((l.to_vec(), r.to_vec())));
        for (l, r) in pairs {
            for raw in [&l, &r] {
                if !nf_cache.contains_key(raw) {
                    let v: Vec<_> = normal_form(n, raw).into_iter().collect();
                    nf_cache.insert(raw.clone(), v);
                }
            }
            let nl = &nf_cache[&l];
            let nr = &nf_cache[&r];
            for (wl, pl) in nl.iter() {
                for (wr, pr) in nr.iter() {
                    let coef = c.mul_poly(&(pl * pr));
                    out.add_canonical(Word::new(wl.clone(), det), Word::new(wr.clone(), det), &coef);
                }
            }
        }
    }
    out
}

/// `Delta`, extended multiplicatively with `Delta(det^-1) = det^-1 ⊗ det^-1`.
pub fn comultiply(x: &AlgebraElement) -> TensorElement {
    comultiply_impl(x, false)
}

/// `Delta(x)` with the summation indices restricted so that each of them occurs exactly
/// `p` times, where `p` is the `det_q^{-1}` power of the word.
///
/// Every tensor term with a leg of order `p` survives; the others may be dropped.
pub fn comultiply_order_filtered(x: &AlgebraElement) -> TensorElement {
    comultiply_impl(x, true)
}

/// `epsilon(x_ij) = delta_ij`, `epsilon(det^-1) = 1`.
pub fn counit(x: &AlgebraElement) -> QRational {
    let n = x.rank();
    let mut acc = QRational::zero();
    for (w, c) in x.terms() {
        if w.factors.iter().all(|&g| (g as usize) / n == (g as usize) % n) {
            acc += c;
        }
    }
    acc
}

fn hat(n: usize, i: usize) -> Vec<usize> {
    complement(n, &[i])
}

static STAR_GEN: Lazy<DashMap<(usize, u8, bool), AlgebraElement>> = Lazy::new(DashMap::new);

/// `S(x_ij)` (`star = false`) or `x_ij^*` (`star = true`).
fn gen_image(n: usize, g: u8, star: bool) -> AlgebraElement {
    if let Some(x) = STAR_GEN.get(&(n, g, star)) {
        return x.clone();
    }
    let gen = Generator::from_code(g, n);
    let (i, j) = (gen.row, gen.col);
    let x = if star {
        let m = quantum_minor(n, &hat(n, i), &hat(n, j)).unwrap();
        m.scale(&QRational::neg_q_pow(j as i64 - i as i64))
    } else {
        let m = quantum_minor(n, &hat(n, j), &hat(n, i)).unwrap();
        m.scale(&QRational::neg_q_pow(i as i64 - j as i64))
    };
    let x = &x * &AlgebraElement::det_inv(n, 1);
    STAR_GEN.insert((n, g, star), x.clone());
    x
}

fn anti_extend(x: &AlgebraElement, star: bool) -> AlgebraElement {
    let n = x.rank();
    let mut out = AlgebraElement::zero(n);
    for (w, c) in x.terms() {
        let mut acc = AlgebraElement::scalar(n, c.clone());
        for &g in w.factors.iter().rev() {
            acc = &acc * &gen_image(n, g, star);
        }
        out.add_element(&acc.mul_dq_pow(w.det_power), &QRational::one());
    }
    out
}

/// Antipode: anti-homomorphism with `S(x_ij) = (-q)^{i-j} xi^{ĵ}_{î} det^-1` and `S(det^-1) = D_q`.
pub fn antipode(x: &AlgebraElement) -> AlgebraElement {
    anti_extend(x, false)
}

/// The star structure: `x_ij^* = S(x_ji)`, `(det^-1)^* = D_q`; coefficients are real.
pub fn star(x: &AlgebraElement) -> AlgebraElement {
    anti_extend(x, true)
}

/// `x_ij^*` as an element.
pub fn star_generator(n: usize, row: usize, col: usize) -> AlgebraElement {
    gen_image(n, Generator::new(row, col).code(n), true)
}

/// `sgn_q(I; J)`: zero if the sets meet, else `(-q)^{#{(i,j): i > j}}`.
pub fn sgn_q(i_set: &[usize], j_set: &[usize]) -> QRational {
    if i_set.iter().any(|i| j_set.contains(i)) {
        return QRational::zero();
    }
    let l = i_set.iter().map(|i| j_set.iter().filter(|j| i > j).count()).sum::<usize>();
    QRational::neg_q_pow(l as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Morphism {
    /// `x_ij -> x_ji`, algebra automorphism.
    Gamma,
    /// `x_ij -> x_{n+1-i, n+1-j}`, anti-automorphism.
    Omega,
    /// `x_ij -> q^{2n+2-2i-2j} x_ij`, the modular automorphism.
    Rho,
}

pub fn apply_morphism(x: &AlgebraElement, which: Morphism) -> AlgebraElement {
    let n = x.rank();
    let mut out = AlgebraElement::zero(n);
    for (w, c) in x.terms() {
        match which {
            Morphism::Gamma => {
                let f: Vec<u8> = w
                    .generators(n)
                    .iter()
                    .map(|g| Generator::new(g.col, g.row).code(n))
                    .collect();
                out.add_word(&Word::new(f, w.det_power), c);
            }
            Morphism::Omega => {
                let f: Vec<u8> = w
                    .generators(n)
                    .iter()
                    .rev()
                    .map(|g| Generator::new(n + 1 - g.row, n + 1 - g.col).code(n))
                    .collect();
                out.add_word(&Word::new(f, w.det_power), c);
            }
            Morphism::Rho => {
                let e: i64 = w
                    .generators(n)
                    .iter()
                    .map(|g| 2 * n as i64 + 2 - 2 * g.row as i64 - 2 * g.col as i64)
                    .sum();
                out.add_canonical(w.clone(), &(c * &QRational::q_pow(e)));
            }
        }
    }
    out
}
