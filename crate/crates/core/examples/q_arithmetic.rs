//! Exact arithmetic with rational functions of `q`, q-integers, Pochhammer symbols and binomials.

use num_rational::BigRational;
use qhaar::qarith::{pochhammer, q_binomial, q_number, qfact, QRational};

fn main() {
    let q = QRational::q_pow;
    let x = (QRational::one() - q(4)) / (QRational::one() - q(2));
    println!("(1 - q^4)/(1 - q^2) = {x}");
    println!("[3]_(q^2) = {}", q_number(3, 2));
    println!("(q^2;q^2)_3 = {}", qfact(3));
    println!("(q^4;q^2)_2 = {}", pochhammer(2, 2));
    println!("binom(4,2)_(q^2) = {}", q_binomial(4, 2));
    println!("half powers: q^(1/2) * q^(3/2) = {}", QRational::v_pow(1) * QRational::v_pow(3));

    let r = &q_binomial(5, 2) / &qfact(2);
    let half = BigRational::new(1.into(), 2.into());
    println!("binom(5,2)/(q^2;q^2)_2 = {r}");
    println!("  at q = 1/2: {}", r.evaluate(&half).unwrap());
    println!("  latex: {}", r.to_latex());
    println!("  json: {}", r.to_json());
}
