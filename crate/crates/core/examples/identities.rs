//! Exact verification of q-series identities and closed-form Haar values.

use qhaar::verify::*;

fn main() {
    let reports = [
        check_double_binomial_sum(4, 4),
        check_s_sum(5, 5),
        check_minor_power(4),
        check_e_a_reordering(3, 3),
    ];
    for r in &reports {
        println!("{:<24} {:>4} points  passed: {}", r.identity_id, r.parameter_grid.len(), r.passed());
    }
    for r in check_closed_forms(1, i64::MAX) {
        println!("{:<24} {:>4} points  passed: {}", r.identity_id, r.parameter_grid.len(), r.passed());
    }
    println!("{}", reports[0].to_json());
}
