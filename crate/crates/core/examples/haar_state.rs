//! Haar state values: order-one permutations, the pseudo-basis of order m, reference values and invariance.

use qhaar::haar::{haar_ref, haar_ref_recursive, haar_right_leg, haar_state, PseudoIndex};
use qhaar::qalgebra::{comultiply, elem3};

fn main() {
    println!("h(c e g det^-1) = {}", haar_state(&elem3("ceg", 1)).unwrap());
    for m in 1..=4 {
        println!("h((ceg)^{m} det^-{m}) = {}", haar_ref(m));
        assert_eq!(haar_ref(m), haar_ref_recursive(m));
    }

    for idx in PseudoIndex::all(2).into_iter().take(5) {
        let x = qhaar::AlgebraElement::from_word(3, idx.word(), qhaar::qarith::QRational::one());
        println!("{:?}: {} -> {}", idx, idx.word().display(3), haar_state(&x).unwrap());
    }

    let x = elem3("afh", 1);
    let leg = haar_right_leg(&x).unwrap();
    println!("(id (x) h) Delta(a f h det^-1) = {leg}");
    println!("comultiplication has {} terms", comultiply(&x).len());
}
