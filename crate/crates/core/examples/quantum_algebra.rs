//! Normal ordering, quantum minors, the quantum determinant, the star map and the coproduct.

use qhaar::qalgebra::{antipode, comultiply, counit, elem3, quantum_determinant, quantum_minor, star, AlgebraElement};

fn main() {
    let a = AlgebraElement::letter('a').unwrap();
    let e = AlgebraElement::letter('e').unwrap();
    println!("e a = {}", &e * &a);
    println!("a e = {}", &a * &e);

    let minor = quantum_minor(3, &[1, 2], &[1, 2]).unwrap();
    println!("minor rows 12 cols 12 = {minor}");
    println!("minor^2 = {}", minor.pow(2));

    let dq = quantum_determinant(3);
    println!("D_q has {} terms", dq.len());
    let one = &dq * &AlgebraElement::det_inv(3, 1);
    println!("D_q det^-1 = 1: {}", one.algebra_eq(&AlgebraElement::one(3)));

    println!("a^* = {}", star(&a));
    println!("S(a) = {}", antipode(&a));
    println!("a a^* + b b^* + c c^* = 1: {}", {
        let row: AlgebraElement = ['a', 'b', 'c'].iter().fold(AlgebraElement::zero(3), |acc, &ch| {
            let x = AlgebraElement::letter(ch).unwrap();
            &acc + &(&x * &star(&x))
        });
        row.algebra_eq(&AlgebraElement::one(3))
    });

    let x = elem3("ae", 0);
    println!("Delta(a e) has {} tensor terms, counit {}", comultiply(&x).len(), counit(&x));
}
