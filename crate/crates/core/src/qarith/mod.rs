//! Exact arithmetic in `Q(q^(1/2))` and the q-combinatorial building blocks.

mod comb;
mod poly;
mod rational;

pub use comb::{
    pochhammer, q_binomial, q_binomial_poly, q_factorial, q_multinomial, q_number, qfact, qfact_poly,
    QPochhammer,
};
pub use poly::{div_exact, gcd, LaurentPoly};
pub use rational::QRational;

use num_rational::BigRational;

use crate::error::Result;

/// Exact value of `x` at the rational point `q = q0`.
pub fn evaluate_numeric(x: &QRational, q0: &BigRational) -> Result<BigRational> {
    x.evaluate(q0)
}
