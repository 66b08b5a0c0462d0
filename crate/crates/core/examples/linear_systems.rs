//! Haar values as the solution of the invariance equations, and the reference value from the Source matrix.

use qhaar::linsys::{build_system, enumerate_bnm, solution_to_csv, solve_system, source_matrix_solve, source_matrix_values};

fn main() {
    for n in 2..=4 {
        println!("|B_{n}(1)| = {}, |B_{n}(2)| = {}", enumerate_bnm(n, 1).len(), enumerate_bnm(n, 2).len());
    }

    let sys = build_system(3, 1).unwrap();
    println!("n = 3, m = 1: {} unknowns, {} equations", sys.unknowns.len(), sys.rows.len());
    let sol = solve_system(&sys).unwrap();
    print!("{}", solution_to_csv(&sol));

    for m in 1..=2 {
        println!("Source matrix n = 3, m = {m}: {}", source_matrix_solve(3, m).unwrap());
    }
    let vals = source_matrix_values(4, 1).unwrap();
    println!("n = 4, m = 1: {} permutation values, first {}", vals.len(), vals[0]);
}
