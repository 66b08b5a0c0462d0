//! Left and right actions of the generators `e_k`, `f_k`, `q^lambda` of `U_q(gl_n)`.

use crate::error::{Error, Result};
use crate::qalgebra::{quantum_minor, AlgebraElement, Word};
use crate::qarith::QRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UqGenerator {
    E(usize),
    F(usize),
    /// `q^lambda`, with `lambda` given in units of `1/2` (entry `k` is `2<lambda, eps_k>`).
    Q(Vec<i64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An integral weight, coordinates in the basis `eps_1..eps_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn pairing(&self, other: &Weight) -> i64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }
}

/// Twist exponent (in powers of `v = q^{1/2}`) of `q^{(eps_k - eps_{k+1})/2}` on `x_{i,j}`.
fn twist(k: usize, idx: usize) -> i64 {
    if idx == k {
        1
    } else if idx == k + 1 {
        -1
    } else {
        0
    }
}

fn check(n: usize, g: &UqGenerator) -> Result<()> {
    match g {
        UqGenerator::E(k) | UqGenerator::F(k) if *k < 1 || *k >= n => {
            Err(Error::Unsupported(format!("generator index {k} out of range for n = {n}")))
        }
        UqGenerator::Q(l) if l.len() != n => Err(Error::RankMismatch(n, l.len())),
        _ => Ok(()),
    }
}

/// Image of one generator under `e_k`/`f_k`, as `(row, col)` (1-based), or `None`.
fn step(g: &UqGenerator, side: Side, row: usize, col: usize) -> Option<(usize, usize)> {
    match (g, side) {
        (UqGenerator::E(k), Side::Left) => (col == k + 1).then(|| (row, col - 1)),
        (UqGenerator::E(k), Side::Right) => (row == *k).then(|| (row + 1, col)),
        (UqGenerator::F(k), Side::Left) => (col == *k).then(|| (row, col + 1)),
        (UqGenerator::F(k), Side::Right) => (row == k + 1).then(|| (row - 1, col)),
        (UqGenerator::Q(_), _) => None,
    }
}

/// `g . x` (left) or `x . g` (right).
pub fn act(g: &UqGenerator, x: &AlgebraElement, side: Side) -> Result<AlgebraElement> {
    let n = x.rank();
    check(n, g)?;
    let mut out = AlgebraElement::zero(n);
    match g {
        UqGenerator::Q(lambda2) => {
            let total: i64 = lambda2.iter().sum();
            for (w, c) in x.terms() {
                let mut e: i64 = w
                    .generators(n)
                    .iter()
                    .map(|gen| lambda2[if side == Side::Left { gen.col } else { gen.row } - 1])
                    .sum();
                e -= w.det_power as i64 * total;
                out.add_canonical(w.clone(), &(c * &QRational::v_pow(e)));
            }
        }
        UqGenerator::E(k) | UqGenerator::F(k) => {
            for (w, c) in x.terms() {
                let gens = w.generators(n);
                let tw: Vec<i64> = gens
                    .iter()
                    .map(|gen| twist(*k, if side == Side::Left { gen.col } else { gen.row }))
                    .collect();
                let total: i64 = tw.iter().sum();
                let mut before = 0i64;
                for (p, gen) in gens.iter().enumerate() {
                    if let Some((r, s)) = step(g, side, gen.row, gen.col) {
                        let after = total - before - tw[p];
                        let mut f = w.factors.clone();
                        f[p] = crate::qalgebra::Generator::new(r, s).code(n);
                        let coef = c * &QRational::v_pow(before - after);
                        out.add_word(&Word::new(f, w.det_power), &coef);
                    }
                    before += tw[p];
                }
            }
        }
    }
    Ok(out)
}

/// Left action on a quantum minor `xi^I_J`, using the column-shift rule.
pub fn minor_action(n: usize, g: &UqGenerator, rows: &[usize], cols: &[usize]) -> Result<AlgebraElement> {
    check(n, g)?;
    let shift = |from: usize, to: usize| -> Result<AlgebraElement> {
        if cols.contains(&to) || !cols.contains(&from) {
            return Ok(AlgebraElement::zero(n));
        }
        let mut c: Vec<usize> = cols.iter().map(|&j| if j == from { to } else { j }).collect();
        c.sort_unstable();
        quantum_minor(n, rows, &c)
    };
    match g {
        UqGenerator::E(k) => shift(k + 1, *k),
        UqGenerator::F(k) => shift(*k, k + 1),
        UqGenerator::Q(l) => {
            let e: i64 = cols.iter().map(|&j| l[j - 1]).sum();
            Ok(quantum_minor(n, rows, cols)?.scale(&QRational::v_pow(e)))
        }
    }
}
