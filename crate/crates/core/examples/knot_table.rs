//! Identifies the knots of reduced Chebyshev triples and alternating
//! diagrams through their Jones polynomials.

use chebknot::cli::cmd_knot;

fn show(i: u64, j: u64, k: Option<u64>) {
    let r = cmd_knot(i, j, k, 24).unwrap();
    let label = match k {
        Some(k) => format!("({i},{j},{k})"),
        None => format!("alt({i},{j})"),
    };
    let name = match (&r.identification, r.cap_exceeded) {
        (_, true) => "beyond cap".to_string(),
        (Some(id), _) => format!("{}{}", id.name, if id.mirror_matched { " (mirror)" } else { "" }),
        (None, _) => "not tabulated".to_string(),
    };
    println!("{label:<12} {:>3} nodes  writhe {:>4}  {name}", r.nodes, r.writhe);
}

fn main() {
    for (i, j, k) in [
        (3, 4, 5),
        (3, 5, 7),
        (3, 7, 8),
        (3, 7, 11),
        (4, 5, 7),
        (4, 5, 11),
        (3, 8, 13),
        (3, 10, 17),
        (4, 7, 13),
        (5, 6, 19),
        (5, 7, 9),
        (3, 16, 17),
        (7, 8, 9),
        (9, 10, 11),
    ] {
        show(i, j, Some(k));
    }
    for (i, j) in [(3, 4), (3, 5), (3, 7), (4, 5), (3, 8), (4, 7), (5, 6)] {
        show(i, j, None);
    }
}
