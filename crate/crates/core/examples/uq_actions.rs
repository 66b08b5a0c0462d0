//! Left and right actions of `e_k`, `f_k` and the torus of `U_q(gl_3)` on coordinate functions.

use qhaar::qalgebra::{elem3, quantum_minor};
use qhaar::uqaction::{act, minor_action, Side, UqGenerator};

fn main() {
    let x = elem3("ae", 0);
    for side in [Side::Left, Side::Right] {
        for g in [UqGenerator::E(1), UqGenerator::F(1), UqGenerator::E(2), UqGenerator::F(2)] {
            println!("{side:?} {g:?} . ae = {}", act(&g, &x, side).unwrap());
        }
    }
    let torus = UqGenerator::Q(vec![2, 0, 0]);
    println!("q^eps1 . a = {}", act(&torus, &elem3("a", 0), Side::Left).unwrap());

    let minor = quantum_minor(3, &[1, 2], &[1, 2]).unwrap();
    let moved = minor_action(3, &UqGenerator::F(2), &[1, 2], &[1, 2]).unwrap();
    println!("f_2 . xi^12_12 = {moved}");
    println!("direct: {}", act(&UqGenerator::F(2), &minor, Side::Left).unwrap());
}
