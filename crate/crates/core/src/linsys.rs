//! Linear relations among Haar state values of order-`m` monomials.
//!
//! The generic route builds, for every equation basis `x_M det^-m`, the relations
//! obtained by comparing `(id ⊗ h) Delta(x_M det^-m)` with `h(x_M det^-m) D_q^m det^-m`
//! in the pseudo-basis, and solves them exactly. The Source-matrix route computes
//! `h(x_{sigma0}^m det^-m)` alone from an `n!`-unknown system, recursively in `m`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::haar::register_solution;
use crate::perm::{inversions, permutations};
use crate::qalgebra::{comultiply_order_filtered, dq_power, normal_order, AlgebraElement, CountingMatrix, Word};
use crate::qarith::QRational;

/// The `m`-doubly-stochastic `n x n` matrices, sorted lexicographically by their row-major entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StochasticMatrixSet {
    pub n: usize,
    pub m: u32,
    pub matrices: Vec<CountingMatrix>,
}

impl StochasticMatrixSet {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn index_of(&self, cm: &CountingMatrix) -> Option<usize> {
        self.matrices.binary_search(cm).ok()
    }
}

/// All of `B_n(m)`.
pub fn enumerate_bnm(n: usize, m: u32) -> StochasticMatrixSet {
    fn rows(n: usize, m: u32, row: usize, budget: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<CountingMatrix>) {
        if row == n {
            if budget.iter().all(|&b| b == 0) {
                out.push(CountingMatrix { n, entries: cur.clone() });
            }
            return;
        }
        fill(n, m, row, 0, m, budget, cur, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        n: usize,
        m: u32,
        row: usize,
        col: usize,
        left: u32,
        budget: &mut Vec<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<CountingMatrix>,
    ) {
        if col == n - 1 {
            if left <= budget[col] {
                budget[col] -= left;
                cur.push(left);
                rows(n, m, row + 1, budget, cur, out);
                cur.pop();
                budget[col] += left;
            }
            return;
        }
        for v in 0..=left.min(budget[col]) {
            budget[col] -= v;
            cur.push(v);
            fill(n, m, row, col + 1, left - v, budget, cur, out);
            cur.pop();
            budget[col] += v;
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        let mut budget = vec![m; n];
        rows(n, m, 0, &mut budget, &mut Vec::with_capacity(n * n), &mut out);
    }
    out.sort();
    StochasticMatrixSet { n, m, matrices: out }
}

/// Size bounds for the expansion and the generic system.
pub fn system_feasible(n: usize, m: u32) -> Result<()> {
    let ok = match n {
        0 => false,
        1 => m <= 12,
        2 => m <= 6,
        3 => m <= 3,
        4 => m <= 1,
        _ => m <= 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Feasibility(format!("linear system for n = {n}, m = {m}")))
    }
}

/// Size bounds for the Source-matrix route.
pub fn source_feasible(n: usize, m: u32) -> Result<()> {
    if (2..=4).contains(&n) && (1..=3).contains(&m) {
        Ok(())
    } else {
        Err(Error::Feasibility(format!("source matrix for n = {n}, m = {m}")))
    }
}

/// Coefficients `b_L` of `D_q^m` in the canonical pseudo-basis.
pub fn detq_power_expand(n: usize, m: u32) -> Result<HashMap<CountingMatrix, QRational>> {
    system_feasible(n, m)?;
    Ok(detq_power_expand_unchecked(n, m))
}

pub fn detq_power_expand_unchecked(n: usize, m: u32) -> HashMap<CountingMatrix, QRational> {
    dq_power(n, m).terms().map(|(w, c)| (w.counting_matrix(n), c.clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowTag {
    /// Relation from equation basis `M` and comparing basis `L`.
    Relation { equation: CountingMatrix, comparing: CountingMatrix },
    Normalization,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SystemRow {
    /// Nonzero coefficients as `(unknown index, value)`, sorted by index.
    pub coeffs: Vec<(usize, QRational)>,
    pub rhs: QRational,
    pub tag: RowTag,
}

/// Relations among `h(x_K det^-m)`, `K` running over [`HaarLinearSystem::unknowns`].
#[derive(Clone, Debug, PartialEq)]
pub struct HaarLinearSystem {
    pub n: usize,
    pub m: u32,
    pub unknowns: Vec<CountingMatrix>,
    pub rows: Vec<SystemRow>,
}

pub fn build_system(n: usize, m: u32) -> Result<HaarLinearSystem> {
    system_feasible(n, m)?;
    build_system_unchecked(n, m)
}

pub fn build_system_unchecked(n: usize, m: u32) -> Result<HaarLinearSystem> {
    let basis = enumerate_bnm(n, m);
    let b = detq_power_expand_unchecked(n, m);
    let k = basis.len();
    let blocks: Vec<Result<Vec<SystemRow>>> = basis
        .matrices
        .par_iter()
        .enumerate()
        .map(|(mi, mm)| {
            let x = AlgebraElement::from_word(n, mm.canonical_word(m), QRational::one());
            let alpha = mm.row_sums();
            let beta = mm.col_sums();
            let mut by_l: HashMap<usize, HashMap<usize, QRational>> = HashMap::new();
            for ((wl, wr), c) in comultiply_order_filtered(&x).terms() {
                let cl = wl.counting_matrix(n);
                let cr = wr.counting_matrix(n);
                if cl.row_sums() != alpha || cl.col_sums() != cr.row_sums() || cr.col_sums() != beta {
                    return Err(Error::Unsupported(format!("tensor term violates the sum rule: {cl} ⊗ {cr}")));
                }
                let (Some(li), Some(ki)) = (basis.index_of(&cl), basis.index_of(&cr)) else {
                    return Err(Error::Unsupported(format!("tensor term of wrong order: {cl} ⊗ {cr}")));
                };
                *by_l.entry(li).or_default().entry(ki).or_default() += c;
            }
            let mut out = Vec::with_capacity(k);
            for (li, l) in basis.matrices.iter().enumerate() {
                let mut coeffs = by_l.remove(&li).unwrap_or_default();
                if let Some(bl) = b.get(l) {
                    *coeffs.entry(mi).or_default() -= bl;
                }
                let mut coeffs: Vec<(usize, QRational)> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                coeffs.sort_by_key(|e| e.0);
                out.push(SystemRow {
                    coeffs,
                    rhs: QRational::zero(),
                    tag: RowTag::Relation { equation: mm.clone(), comparing: l.clone() },
                });
            }
            Ok(out)
        })
        .collect();
    let mut rows = Vec::with_capacity(k * k + 1);
    let norm: Vec<(usize, QRational)> =
        basis.matrices.iter().enumerate().filter_map(|(i, l)| b.get(l).map(|c| (i, c.clone()))).collect();
    rows.push(SystemRow { coeffs: norm, rhs: QRational::one(), tag: RowTag::Normalization });
    for blk in blocks {
        rows.extend(blk?);
    }
    Ok(HaarLinearSystem { n, m, unknowns: basis.matrices, rows })
}

/// Exact solution of `rows`, pivoting greedily in the given order; every row is checked afterwards.
pub fn solve_exact(rows: &[(Vec<(usize, QRational)>, QRational)], k: usize) -> Result<Vec<QRational>> {
    let mut echelon: Vec<(usize, Vec<QRational>, QRational)> = Vec::new();
    for (coeffs, rhs) in rows {
        if echelon.len() == k {
            break;
        }
        if coeffs.is_empty() && rhs.is_zero() {
            continue;
        }
        let mut r = vec![QRational::zero(); k];
        for (i, c) in coeffs {
            r[*i] += c;
        }
        let mut b = rhs.clone();
        for (p, er, eb) in echelon.iter() {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(er.iter()) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            b -= &(&f * eb);
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            if !b.is_zero() {
                return Err(Error::Residual(1));
            }
            continue;
        };
        let inv = r[p].inv()?;
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        b *= &inv;
        echelon.push((p, r, b));
    }
    if echelon.len() < k {
        return Err(Error::RankDeficient(k - echelon.len()));
    }
    let mut sol = vec![QRational::zero(); k];
    for (p, r, b) in echelon.iter().rev() {
        let mut v = b.clone();
        for (c, x) in r.iter().enumerate() {
            if c != *p && !x.is_zero() {
                v -= &(x * &sol[c]);
            }
        }
        sol[*p] = v;
    }
    let bad = rows
        .par_iter()
        .filter(|(coeffs, rhs)| {
            let mut acc = QRational::zero();
            for (i, c) in coeffs {
                acc += &(c * &sol[*i]);
            }
            acc != *rhs
        })
        .count();
    if bad > 0 {
        return Err(Error::Residual(bad));
    }
    Ok(sol)
}

/// Solve the system, check every emitted row and register the values with [`crate::haar`].
pub fn solve_system(sys: &HaarLinearSystem) -> Result<HashMap<CountingMatrix, QRational>> {
    let rows: Vec<(Vec<(usize, QRational)>, QRational)> = sys.rows.iter().map(|r| (r.coeffs.clone(), r.rhs.clone())).collect();
    let sol = solve_exact(&rows, sys.unknowns.len())?;
    let map: HashMap<CountingMatrix, QRational> = sys.unknowns.iter().cloned().zip(sol).collect();
    register_solution(sys.n, sys.m, map.clone());
    Ok(map)
}

fn matrix_key(cm: &CountingMatrix) -> String {
    cm.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

/// `matrix,value` lines, matrices flattened row-major and space-separated.
pub fn solution_to_csv(sol: &HashMap<CountingMatrix, QRational>) -> String {
    let mut keys: Vec<&CountingMatrix> = sol.keys().collect();
    keys.sort();
    let mut s = String::from("matrix,value\n");
    for k in keys {
        s.push_str(&format!("{},{}\n", matrix_key(k), sol[k]));
    }
    s
}

pub fn solution_to_json(n: usize, m: u32, sol: &HashMap<CountingMatrix, QRational>) -> Value {
    let mut keys: Vec<&CountingMatrix> = sol.keys().collect();
    keys.sort();
    let values: Vec<Value> = keys.iter().map(|k| json!({ "matrix": k.rows(), "value": sol[*k].to_json() })).collect();
    json!({ "n": n, "m": m, "values": values })
}

impl HaarLinearSystem {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let tag = match &r.tag {
                    RowTag::Normalization => json!("normalization"),
                    RowTag::Relation { equation, comparing } => {
                        json!({ "equation": equation.rows(), "comparing": comparing.rows() })
                    }
                };
                json!({
                    "tag": tag,
                    "coeffs": r.coeffs.iter().map(|(i, c)| json!([i, c.to_json()])).collect::<Vec<_>>(),
                    "rhs": r.rhs.to_json(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "m": self.m,
            "unknowns": self.unknowns.iter().map(|u| u.rows()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Polarity {
    Negative,
    Neutral,
    Positive,
}

fn polarity(n: usize, code: u8) -> Polarity {
    let (a, b) = (code as usize / n, code as usize % n);
    match (a + b).cmp(&(n - 1)) {
        std::cmp::Ordering::Less => Polarity::Positive,
        std::cmp::Ordering::Equal => Polarity::Neutral,
        std::cmp::Ordering::Greater => Polarity::Negative,
    }
}

/// `x y = q^{e/2} y x`; returns `e`, or an error if the swap produces a second monomial.
fn pure_swap(n: usize, x: u8, y: u8) -> Result<i64> {
    use crate::qalgebra::swap_rule;
    if x == y {
        return Ok(0);
    }
    let (hi, lo) = if x > y { (x, y) } else { (y, x) };
    let (c0, extra) = swap_rule(n, hi, lo);
    if extra.is_some() {
        return Err(Error::Unsupported("reordering would generate an extra monomial".into()));
    }
    let e = c0.valuation();
    Ok(if x > y { e } else { -e })
}

/// Reduce `h(eta det^-m)` to `sum_tau c_tau h(x_tau x_{sigma0}^{m-1} det^-m)`.
///
/// `extra[i]` marks the letters of `eta` that are not part of `x_{sigma0}^{m-1}`.
fn reduce_eta(n: usize, eta: &[u8], extra: &[bool]) -> Result<HashMap<Vec<usize>, QRational>> {
    let mut items: Vec<(u8, bool)> = eta.iter().copied().zip(extra.iter().copied()).collect();
    let pol = |it: &(u8, bool)| if it.1 { polarity(n, it.0) } else { Polarity::Neutral };
    let mut vexp = 0i64;
    let len = items.len();
    for i in (0..len).rev() {
        if pol(&items[i]) != Polarity::Positive {
            continue;
        }
        let mut j = i;
        while j + 1 < len && pol(&items[j + 1]) != Polarity::Positive {
            vexp += pure_swap(n, items[j].0, items[j + 1].0)?;
            items.swap(j, j + 1);
            j += 1;
        }
    }
    for i in 0..len {
        if pol(&items[i]) != Polarity::Negative {
            continue;
        }
        let mut j = i;
        while j > 0 && pol(&items[j - 1]) != Polarity::Negative {
            vexp += pure_swap(n, items[j - 1].0, items[j].0)?;
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    let neg: Vec<u8> = items.iter().filter(|it| pol(it) == Polarity::Negative).map(|it| it.0).collect();
    let pos: Vec<u8> = items.iter().filter(|it| pol(it) == Polarity::Positive).map(|it| it.0).collect();
    let neutral_extra: Vec<u8> = items.iter().filter(|it| it.1 && pol(it) == Polarity::Neutral).map(|it| it.0).collect();
    // rho on the moved factors e p
    let rho: i64 = neutral_extra
        .iter()
        .chain(pos.iter())
        .map(|&c| {
            let (a, b) = (c as i64 / n as i64, c as i64 % n as i64);
            2 * (2 * n as i64 - 2 - 2 * a - 2 * b)
        })
        .sum();
    vexp += rho;
    let mut w = neutral_extra;
    w.extend(pos);
    w.extend(neg);
    let mut out = HashMap::new();
    for (word, c) in normal_order(n, &Word::new(w, 0)).terms() {
        let sigma: Vec<usize> = word.factors.iter().map(|&f| f as usize % n).collect();
        out.insert(sigma, c * &QRational::v_pow(vexp));
    }
    Ok(out)
}

/// Values `h(x_tau x_{sigma0}^{m-1} det^-m)` for every permutation `tau` of `0..n`
/// (in the order of [`permutations`]), solved from the Source matrix of order `m`.
pub fn source_matrix_values(n: usize, m: u32) -> Result<Vec<QRational>> {
    source_feasible(n, m)?;
    source_matrix_values_unchecked(n, m)
}

pub fn source_matrix_values_unchecked(n: usize, m: u32) -> Result<Vec<QRational>> {
    if n < 2 || m < 1 {
        return Err(Error::Unsupported(format!("source matrix needs n >= 2 and m >= 1, got n = {n}, m = {m}")));
    }
    let prev = if m == 1 { QRational::one() } else { source_matrix_solve_unchecked(n, m - 1)? };
    let perms = permutations(n);
    let col: HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let k = perms.len();
    let sigma0: Vec<usize> = (0..n).rev().collect();
    let b = detq_power_expand_unchecked(n, m);
    let mut rows: Vec<(Vec<(usize, QRational)>, QRational)> = Vec::with_capacity(k);
    let dq_row = perms.iter().enumerate().map(|(i, p)| (i, QRational::neg_q_pow(inversions(p) as i64))).collect();
    rows.push((dq_row, prev));

    for sigma in perms.iter().filter(|s| s.iter().enumerate().any(|(i, &j)| i != j)) {
        let moved: Vec<usize> = (0..n).filter(|&r| sigma[r] != r).collect();
        let mut z = CountingMatrix::zeros(n);
        for r in 0..n {
            z.entries[r * n + r] += m - 1;
            z.entries[r * n + sigma[r]] += 1;
        }
        let mut row = vec![QRational::zero(); k];
        let mut pos = vec![0u32; moved.len()];
        loop {
            // left leg zeta_r and right leg eta_r for every row block of x_{sigma0}^m
            let mut zeta = Vec::with_capacity(n * m as usize);
            let mut eta = Vec::with_capacity(n * m as usize);
            let mut extra = Vec::with_capacity(n * m as usize);
            for r in 0..n {
                let at = moved.iter().position(|&x| x == r).map(|i| pos[i]).unwrap_or(0);
                for t in 0..m {
                    let kk = if t == at { sigma[r] } else { r };
                    zeta.push((r * n + kk) as u8);
                    eta.push((kk * n + (n - 1 - r)) as u8);
                    extra.push(t == at);
                }
            }
            let zl = normal_order(n, &Word::new(zeta, 0));
            let lam = zl.coeff(&z.canonical_word(0));
            for (tau, c) in reduce_eta(n, &eta, &extra)? {
                row[col[&tau]] += &(&lam * &c);
            }
            let mut i = 0;
            while i < pos.len() {
                pos[i] += 1;
                if pos[i] < m {
                    break;
                }
                pos[i] = 0;
                i += 1;
            }
            if i == pos.len() {
                break;
            }
        }
        if let Some(bz) = b.get(&z) {
            row[col[&sigma0]] -= bz;
        }
        rows.push((row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect(), QRational::zero()));
    }
    solve_exact(&rows, k)
}

/// `h(x_{sigma0}^m det^-m)` by the Source-matrix recursion.
pub fn source_matrix_solve(n: usize, m: u32) -> Result<QRational> {
    source_feasible(n, m)?;
    source_matrix_solve_unchecked(n, m)
}

pub fn source_matrix_solve_unchecked(n: usize, m: u32) -> Result<QRational> {
    if m == 0 {
        return Ok(QRational::one());
    }
    let vals = source_matrix_values_unchecked(n, m)?;
    Ok(vals[vals.len() - 1].clone())
}
