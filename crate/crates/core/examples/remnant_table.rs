//! Remnant degrees for coprime pairs with at most 16 nodes.

use chebknot::algebra::{frobenius, remnant};
use chebknot::cli::{cmd_table1, Report};

fn main() {
    let table = cmd_table1(16).unwrap();
    print!("{}", table.text());
    let reduced: usize = table.rows.iter().map(|r| r.remnant.len()).sum();
    println!("{} pairs, {reduced} reduced triples", table.rows.len());
    println!("Frobenius number of <5,7>: {}", frobenius(5, 7).unwrap());
    println!("gaps of <3,7> above 7: {:?}", remnant(3, 7).unwrap());
}
