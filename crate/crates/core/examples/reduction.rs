//! Reduces Chebyshev triples by shears and swaps, then replays the trace to
//! recover the original parametrization.

use chebknot::algebra::{chebyshev_parametrization, reduce_triple, rectify, Triple};

fn main() {
    for t in [Triple::new(3, 5, 13), Triple::new(4, 7, 29), Triple::new(5, 3, 17), Triple::new(2, 5, 9)] {
        let trace = reduce_triple(t).expect("embedding triple");
        println!("{} -> {}  ({} shears, trivial: {})", trace.start, trace.end, trace.shear_count(), trace.is_trivial());
        for step in &trace.steps {
            println!("    {:<24} {}", step.involution.to_string(), step.triple);
        }
        println!("    degree profile {:?}", trace.degree_profile());
        assert_eq!(trace.replay(), chebyshev_parametrization(t));
        if let Some(moves) = rectify(t).expect("embedding triple") {
            println!("    rectified to (t,0,0) with {} further moves", moves.len());
        }
    }
}
