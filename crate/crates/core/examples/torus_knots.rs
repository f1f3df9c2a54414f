//! Diagrams over `(T_3, T_{3n+1})` carrying the torus crossing sequence are
//! the `(2, 2n+1)` torus knots.

use chebknot::diagram::{build_gauss_code, torus_sequence};
use chebknot::geometry::NodalCurve;
use chebknot::invariants::{identify, jones, jones_of_knot_pd, standard_torus_pd, DEFAULT_CAP};

fn main() {
    for n in 1..=4 {
        let curve = NodalCurve::new(3, 3 * n as u64 + 1).unwrap();
        let seq = torus_sequence(n);
        let g = build_gauss_code(&curve, &seq).unwrap();
        let v = jones(&g, DEFAULT_CAP).unwrap();
        let torus = jones_of_knot_pd(&standard_torus_pd(2 * n as u32 + 1).unwrap(), DEFAULT_CAP).unwrap();
        let same = v == torus || v == torus.mirror();
        println!(
            "n={n}: sequence {seq}\n    jones {}\n    matches T(2,{}): {same}  table: {}",
            v.compress(4).unwrap().display_in("t"),
            2 * n + 1,
            identify(&v).map(|id| id.name).unwrap_or("?")
        );
    }
}
