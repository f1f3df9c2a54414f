//! For a coprime pair, computes the Jones polynomial of `(T_i, T_j, T_k)`
//! for every remnant degree `k` and checks that they differ up to mirror.
//! Distinct polynomials prove the knots distinct; this is evidence only.

use chebknot::cli::{cmd_conjecture2, Report};

fn main() {
    for (i, j) in [(3, 7), (4, 5), (4, 7), (3, 11), (5, 6)] {
        print!("{}", cmd_conjecture2(i, j, 24).unwrap().text());
        println!();
    }
}
