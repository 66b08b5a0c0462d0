//! Normal ordering of words in `O(Mat_q(n))` into row-lexicographic form.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::qarith::LaurentPoly;

pub(crate) type Lin = Vec<(Vec<u8>, LaurentPoly)>;

static INSERT: Lazy<DashMap<(u8, Vec<u8>, u8), Arc<Lin>>> = Lazy::new(DashMap::new);

fn q_inv() -> LaurentPoly {
    LaurentPoly::v_pow(-2)
}

/// `-(q - q^-1)`.
fn minus_q_minus_qinv() -> LaurentPoly {
    LaurentPoly::v_pow(-2) - LaurentPoly::v_pow(2)
}

/// One rewrite of the adjacent pair `x g` with `x > g` in row-lex order:
/// `x g = c0 * g x + extra`, where `extra` is `Some((coeff, first, second))`.
pub(crate) fn swap_rule(n: usize, x: u8, g: u8) -> (LaurentPoly, Option<(LaurentPoly, u8, u8)>) {
    let (i1, j1) = (x as usize / n, x as usize % n);
    let (i2, j2) = (g as usize / n, g as usize % n);
    debug_assert!(x > g);
    if i1 == i2 || j1 == j2 {
        (q_inv(), None)
    } else if j1 < j2 {
        (LaurentPoly::one(), None)
    } else {
        let ik = (i2 * n + j1) as u8;
        let lj = (i1 * n + j2) as u8;
        (LaurentPoly::one(), Some((minus_q_minus_qinv(), ik, lj)))
    }
}

fn accumulate(acc: &mut HashMap<Vec<u8>, LaurentPoly>, w: Vec<u8>, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Canonical form of `u * g` for a canonical word `u`.
pub(crate) fn insert(n: usize, u: &[u8], g: u8) -> Arc<Lin> {
    if u.last().is_none_or(|&x| x <= g) {
        let mut w = u.to_vec();
        w.push(g);
        return Arc::new(vec![(w, LaurentPoly::one())]);
    }
    let key = (n as u8, u.to_vec(), g);
    if let Some(hit) = INSERT.get(&key) {
        return hit.clone();
    }
    let x = *u.last().unwrap();
    let head = &u[..u.len() - 1];
    let (c0, extra) = swap_rule(n, x, g);
    let mut acc: HashMap<Vec<u8>, LaurentPoly> = HashMap::new();
    for (w, c) in insert(n, head, g).iter() {
        for (w2, c2) in insert(n, w, x).iter() {
            accumulate(&mut acc, w2.clone(), &(&c0 * c) * c2);
        }
    }
    if let Some((ce, ik, lj)) = extra {
        for (w, c) in insert(n, head, ik).iter() {
            for (w2, c2) in insert(n, w, lj).iter() {
                accumulate(&mut acc, w2.clone(), &(&ce * c) * c2);
            }
        }
    }
    let mut out: Lin = acc.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    let out = Arc::new(out);
    INSERT.insert(key, out.clone());
    out
}

/// Canonical form of `prefix * letters` where `prefix` is canonical.
pub(crate) fn extend(n: usize, prefix: &[u8], letters: &[u8]) -> HashMap<Vec<u8>, LaurentPoly> {
    let mut cur: HashMap<Vec<u8>, LaurentPoly> = HashMap::new();
    cur.insert(prefix.to_vec(), LaurentPoly::one());
    for &g in letters {
        if cur.len() == 1 {
            let (w, c) = cur.drain().next().unwrap();
            for (w2, c2) in insert(n, &w, g).iter() {
                accumulate(&mut cur, w2.clone(), &c * c2);
            }
            continue;
        }
        let mut next: HashMap<Vec<u8>, LaurentPoly> = HashMap::with_capacity(cur.len());
        for (w, c) in cur.into_iter() {
            for (w2, c2) in insert(n, &w, g).iter() {
                accumulate(&mut next, w2.clone(), &c * c2);
            }
        }
        cur = next;
    }
    cur
}

/// Canonical form of an arbitrary word.
pub(crate) fn normal_form(n: usize, letters: &[u8]) -> HashMap<Vec<u8>, LaurentPoly> {
    let split = letters.windows(2).position(|w| w[0] > w[1]).map_or(letters.len(), |p| p + 1);
    extend(n, &letters[..split], &letters[split..])
}

/// Independent rewriting by repeated adjacent swaps at the leftmost (or rightmost) descent.
pub(crate) fn bubble_normal_form(n: usize, letters: &[u8], from_left: bool) -> HashMap<Vec<u8>, LaurentPoly> {
    let mut memo: HashMap<Vec<u8>, HashMap<Vec<u8>, LaurentPoly>> = HashMap::new();
    bubble_rec(n, letters, from_left, &mut memo)
}

fn bubble_rec(
    n: usize,
    w: &[u8],
    from_left: bool,
    memo: &mut HashMap<Vec<u8>, HashMap<Vec<u8>, LaurentPoly>>,
) -> HashMap<Vec<u8>, LaurentPoly> {
    let descent = if from_left {
        w.windows(2).position(|p| p[0] > p[1])
    } else {
        w.windows(2).rposition(|p| p[0] > p[1])
    };
    let Some(p) = descent else {
        let mut m = HashMap::new();
        m.insert(w.to_vec(), LaurentPoly::one());
        return m;
    };
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let (c0, extra) = swap_rule(n, w[p], w[p + 1]);
    let mut swapped = w.to_vec();
    swapped.swap(p, p + 1);
    let mut acc = HashMap::new();
    for (k, c) in bubble_rec(n, &swapped, from_left, memo) {
        accumulate(&mut acc, k, &c0 * &c);
    }
    if let Some((ce, ik, lj)) = extra {
        let mut alt = w.to_vec();
        alt[p] = ik;
        alt[p + 1] = lj;
        for (k, c) in bubble_rec(n, &alt, from_left, memo) {
            accumulate(&mut acc, k, &ce * &c);
        }
    }
    memo.insert(w.to_vec(), acc.clone());
    acc
}
