//! PD codes of braid closures and the invariance of the Jones polynomial
//! under Reidemeister moves and Markov stabilization.

use chebknot::diagram::braid_closure_pd;
use chebknot::invariants::{identify, jones_of_pd, DEFAULT_CAP};

fn main() {
    let words: [(&str, usize, &[i32]); 5] = [
        ("s1^3", 2, &[1, 1, 1]),
        ("s1^3 s2", 3, &[1, 1, 1, 2]),
        ("s1^3 s2 s2^-1 s2", 3, &[1, 1, 1, 2, -2, 2]),
        ("(s1 s2^-1)^2", 3, &[1, -2, 1, -2]),
        ("s1^5", 2, &[1, 1, 1, 1, 1]),
    ];
    for (name, strands, word) in words {
        let pd = braid_closure_pd(strands, word).unwrap();
        // All strands run upward, so each generator contributes its sign.
        let writhe: i64 = word.iter().map(|g| g.signum() as i64).sum();
        let v = jones_of_pd(&pd, writhe, DEFAULT_CAP).unwrap();
        println!(
            "{name:<20} {} crossings  jones {}  {}",
            pd.crossing_count(),
            v.compress(4).map(|p| p.display_in("t")).unwrap_or_else(|| v.to_string()),
            identify(&v).map(|id| id.name).unwrap_or("?")
        );
    }
}
