//! The bialgebra `O(Mat_q(n))` with `det_q^{-1}` adjoined: words, normal ordering,
//! quantum minors, Hopf structure, star and the maps `gamma`, `omega`, `rho`.

mod element;
mod hopf;
mod order;
mod word;

pub use element::{AlgebraElement, TensorElement};
pub use hopf::{
    antipode, apply_morphism, comultiply, comultiply_order_filtered, counit, dq_power, quantum_determinant,
    quantum_minor, sgn_q, star, star_generator, Morphism,
};
pub use word::{CountingMatrix, Generator, Word, LETTERS3};
pub(crate) use order::swap_rule;

use crate::qarith::QRational;

/// Canonical form computed by an independent bubble-sort rewriter, for confluence checks.
pub fn normal_order_bubble(n: usize, w: &Word, from_left: bool) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for (f, p) in order::bubble_normal_form(n, &w.factors, from_left) {
        out.add_canonical(Word::new(f, w.det_power), &QRational::from_poly(p));
    }
    out
}

/// Canonical form of an arbitrary word.
pub fn normal_order(n: usize, w: &Word) -> AlgebraElement {
    AlgebraElement::from_word(n, w.clone(), QRational::one())
}

/// Parse a product of `n = 3` letters such as `"aek"`; panics on other characters.
pub fn word3(s: &str) -> Word {
    let f = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|ch| Generator::from_letter(ch).expect("generator letter").code(3))
        .collect();
    Word::new(f, 0)
}

/// The element `w det^-p` for a word of `n = 3` letters, normal-ordered.
pub fn elem3(s: &str, det_power: u32) -> AlgebraElement {
    let mut w = word3(s);
    w.det_power = det_power;
    normal_order(3, &w)
}
