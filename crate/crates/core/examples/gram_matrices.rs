//! Weight spaces of irreducible corepresentations, Gram matrices and their orthogonalization.

use num_rational::BigRational;
use qhaar::corep::*;

fn main() {
    let lambda = DominantWeight::new(2, 1, 0).unwrap();
    println!("lambda = {lambda}, quantum dimension {}", quantum_dimension(lambda));
    for (mu, tableaux) in weight_spaces(lambda) {
        println!("  mu = {mu:?}: {} tableaux", tableaux.len());
    }

    let mu = [1, 1, 1];
    for form in [Form::L, Form::R] {
        let closed = gram_matrix(lambda, mu, form, Comodule::Right, Method::Closed).unwrap();
        let direct = gram_matrix(lambda, mu, form, Comodule::Right, Method::Direct).unwrap();
        println!("{form:?} form, closed = direct: {}", closed.entries == direct.entries);
        for (v, row) in closed.vectors.iter().zip(&closed.entries) {
            println!("  {v}: {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ; "));
        }
        let q0 = BigRational::new(1.into(), 4.into());
        println!("  positive definite at q = 1/4: {}", closed.is_positive_definite_at(&q0).unwrap());

        let o = gram_schmidt(&closed.entries).unwrap();
        for (i, d) in o.norms_sq.iter().enumerate() {
            println!("  |u{}|^2 = {d}", i + 1);
        }
    }

    let left = gram_matrix(lambda, mu, Form::L, Comodule::Left, Method::Closed).unwrap();
    println!("left comodule Gram matrix:\n{}", left.to_latex());
    let (l, r) = matrix_coeff_norm(lambda, [2, 1, 0], [1, 1, 1]).unwrap();
    println!("matrix coefficient norms: L {l}, R {r}");
}
