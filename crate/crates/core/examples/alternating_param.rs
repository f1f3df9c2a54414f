//! The explicit parametrization `(T_i, T_j, F')` of the alternating knot
//! over `(T_i, T_j)`, and its diagram.

use chebknot::cli::{cmd_knot, cmd_param, Report};

fn main() {
    print!("{}", cmd_param(3, 11).unwrap().text());
    for (i, j) in [(3, 4), (3, 5), (3, 7), (4, 5)] {
        let r = cmd_knot(i, j, None, 24).unwrap();
        println!(
            "alternating ({i},{j}): {} crossings, alternating code {}, type {}",
            r.nodes,
            r.gauss_code.is_alternating(),
            r.identification.map(|id| id.name).unwrap_or("?")
        );
    }
}
