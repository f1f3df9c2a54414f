//! Nodes of the plane curve `(T_i, T_j)` as exact angle cosines, with both
//! preimages and the parity check.

use chebknot::geometry::{check_parity, NodalCurve};

fn main() {
    let (i, j) = (3, 5);
    let curve = NodalCurve::new(i, j).unwrap();
    println!("(T_{i}, T_{j}) has {} nodes", curve.node_count());
    for n in &curve.nodes {
        println!(
            "  lambda={} mu={}  x=cos({}pi/{}) ~ {:+.5}  y=cos({}pi/{}) ~ {:+.5}  t in {{{:.5}, {:.5}}}",
            n.lambda,
            n.mu,
            n.x.k(),
            n.x.denominator(),
            n.x.to_f64(),
            n.y.k(),
            n.y.denominator(),
            n.y.to_f64(),
            n.t_low.to_f64(),
            n.t_high.to_f64()
        );
    }
    println!("nodes verified exactly: {}", curve.verify_nodes());
    for (a, b) in [(3, 4), (4, 7), (5, 8), (7, 11)] {
        let c = NodalCurve::new(a, b).unwrap();
        println!("({a},{b}): {} nodes, parity holds: {}", c.node_count(), check_parity(a, b).unwrap());
    }
}
