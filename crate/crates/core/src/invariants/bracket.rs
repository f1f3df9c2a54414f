//! Kauffman bracket by dynamic programming over the crossings.
//!
//! Crossings are smoothed one at a time. After each step the smoothed part
//! is a set of strands joining "dangling" arcs (arcs with exactly one end at
//! a processed crossing) plus closed loops already counted into the weight.
//! States are the perfect matchings of the dangling arcs, so the work is
//! governed by the width of the frontier rather than `2^N`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::LaurentPoly;
use crate::diagram::PdCode;
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 24;

/// Dense polynomial in `A` with exponents `-off..=off`.
#[derive(Clone)]
struct Dense {
    c: Vec<i128>,
}

impl Dense {
    fn new(off: usize) -> Self {
        Dense { c: vec![0; 2 * off + 1] }
    }

    fn add_shifted(&mut self, src: &Dense, shift: i64) {
        let len = self.c.len() as i64;
        for (i, &v) in src.c.iter().enumerate() {
            if v != 0 {
                let j = i as i64 + shift;
                debug_assert!((0..len).contains(&j));
                self.c[j as usize] += v;
            }
        }
    }

    /// Multiplies by the loop value `d = -A^2 - A^-2`.
    fn times_loop(&self) -> Dense {
        let mut out = Dense { c: vec![0; self.c.len()] };
        for (i, &v) in self.c.iter().enumerate() {
            if v != 0 {
                out.c[i + 2] -= v;
                out.c[i - 2] -= v;
            }
        }
        out
    }
}

type Matching = Vec<(u32, u32)>;

fn partner(m: &Matching, x: u32) -> Option<u32> {
    m.iter().find_map(|&(a, b)| {
        if a == x {
            Some(b)
        } else if b == x {
            Some(a)
        } else {
            None
        }
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Far {
    Slot(usize),
    Dangling(u32),
}

/// Smooths one crossing: new matching and number of loops closed.
fn smooth(m: &Matching, arcs: &[u32; 4], pairs: [(usize, usize); 2]) -> (Matching, usize) {
    let mut far = [Far::Slot(0); 4];
    for s in 0..4 {
        let x = arcs[s];
        far[s] = if let Some(s2) = (0..4).find(|&s2| s2 != s && arcs[s2] == x) {
            Far::Slot(s2)
        } else if let Some(y) = partner(m, x) {
            match (0..4).find(|&s2| arcs[s2] == y) {
                Some(s2) => Far::Slot(s2),
                None => Far::Dangling(y),
            }
        } else {
            Far::Dangling(x)
        };
    }
    let mut sm = [0usize; 4];
    for (a, b) in pairs {
        sm[a] = b;
        sm[b] = a;
    }
    let mut next: Matching = m.iter().copied().filter(|&(a, b)| !arcs.contains(&a) && !arcs.contains(&b)).collect();
    let mut seen = [false; 4];
    for s in 0..4 {
        let Far::Dangling(t0) = far[s] else { continue };
        if seen[s] {
            continue;
        }
        let mut cur = s;
        loop {
            seen[cur] = true;
            let other = sm[cur];
            seen[other] = true;
            match far[other] {
                Far::Dangling(t1) => {
                    next.push((t0.min(t1), t0.max(t1)));
                    break;
                }
                Far::Slot(s2) => cur = s2,
            }
        }
    }
    let mut loops = 0;
    for s in 0..4 {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut cur = s;
        while !seen[cur] {
            seen[cur] = true;
            let other = sm[cur];
            seen[other] = true;
            match far[other] {
                Far::Slot(s2) => cur = s2,
                Far::Dangling(_) => unreachable!("closed walk met a dangling arc"),
            }
        }
    }
    next.sort_unstable();
    (next, loops)
}

/// Order keeping the frontier narrow: repeatedly take the crossing sharing
/// the most arcs with those already taken.
fn crossing_order(pd: &PdCode) -> Vec<usize> {
    let n = pd.crossing_count();
    let mut done = vec![false; n];
    let mut touched = vec![0u8; pd.arc_count() + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = pd.crossings[c].iter().filter(|&&a| touched[a as usize] == 1).count();
                (shared, std::cmp::Reverse(c))
            })
            .expect("a crossing remains");
        done[best] = true;
        for &a in &pd.crossings[best] {
            touched[a as usize] += 1;
        }
        order.push(best);
    }
    order
}

/// Unnormalized state sum `<D>` in `A`, counting every loop.
fn state_sum(pd: &PdCode) -> LaurentPoly {
    let n = pd.crossing_count();
    let off = 3 * n + 4;
    let mut start = Dense::new(off);
    start.c[off] = 1;
    let mut states: HashMap<Matching, Dense> = HashMap::from([(Vec::new(), start)]);
    for c in crossing_order(pd) {
        let arcs = &pd.crossings[c];
        let mut next: HashMap<Matching, Dense> = HashMap::with_capacity(states.len() * 2);
        for (m, poly) in &states {
            for (pairs, weight) in [([(0, 1), (2, 3)], 1i64), ([(0, 3), (1, 2)], -1)] {
                let (m2, loops) = smooth(m, arcs, pairs);
                let mut p = poly.clone();
                for _ in 0..loops {
                    p = p.times_loop();
                }
                next.entry(m2).or_insert_with(|| Dense::new(off)).add_shifted(&p, weight);
            }
        }
        states = next;
    }
    let dense = states.remove(&Vec::new()).unwrap_or_else(|| Dense::new(off));
    LaurentPoly::from_terms(
        dense.c.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, &v)| (i as i64 - off as i64, BigInt::from(v))),
    )
}

/// Divides by `d = -A^2 - A^-2`; exact for any state sum with at least one loop.
fn divide_by_loop(p: &LaurentPoly) -> Result<LaurentPoly> {
    // p = -A^-2 (1 + A^4) q  <=>  q = -A^2 p / (1 + A^4)
    let Some(lo) = p.min_exp() else { return Ok(LaurentPoly::zero()) };
    let hi = p.max_exp().expect("nonzero");
    let mut rem: Vec<BigInt> = (lo..=hi).map(|e| p.coeff(e)).collect();
    let mut quot = LaurentPoly::zero();
    for i in 0..rem.len() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        if i + 4 >= rem.len() {
            return Err(Error::Internal("bracket state sum is not divisible by the loop value".into()));
        }
        rem[i + 4] -= &c;
        quot.add_term(lo + i as i64, c);
    }
    Ok((-&quot).shift(2))
}

/// Bracket with every loop counted, so the crossingless unknot gives `d`.
pub fn unnormalized_bracket(pd: &PdCode, cap: usize) -> Result<LaurentPoly> {
    if pd.crossing_count() > cap {
        return Err(Error::TooManyCrossings { crossings: pd.crossing_count(), cap });
    }
    if pd.crossing_count() == 0 {
        return Ok(LaurentPoly::from_terms([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]));
    }
    Ok(state_sum(pd))
}

/// Normalized Kauffman bracket, with the value 1 on the crossingless unknot.
pub fn kauffman_bracket(pd: &PdCode, cap: usize) -> Result<LaurentPoly> {
    if pd.crossing_count() > cap {
        return Err(Error::TooManyCrossings { crossings: pd.crossing_count(), cap });
    }
    if pd.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    divide_by_loop(&state_sum(pd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(kauffman_bracket(&PdCode::unknot(), DEFAULT_CAP).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn single_kink() {
        // One crossing, arcs 1 and 2 each joined at the same crossing.
        for x in [[1, 1, 2, 2], [1, 2, 2, 1]] {
            let b = kauffman_bracket(&PdCode::new(vec![x]).unwrap(), DEFAULT_CAP).unwrap();
            assert!(b == p(&[(3, -1)]) || b == p(&[(-3, -1)]), "{b}");
        }
    }

    #[test]
    fn trefoil_bracket() {
        let pd = PdCode::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let b = kauffman_bracket(&pd, DEFAULT_CAP).unwrap();
        assert_eq!(b, p(&[(-7, 1), (-3, -1), (5, -1)]));
        let full = unnormalized_bracket(&pd, DEFAULT_CAP).unwrap();
        assert_eq!(full, p(&[(-9, -1), (-1, 1), (3, 1), (7, 1)]));
    }

    #[test]
    fn cap_is_enforced() {
        let pd = PdCode::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        assert!(matches!(kauffman_bracket(&pd, 2), Err(Error::TooManyCrossings { crossings: 3, cap: 2 })));
    }

    #[test]
    fn division_by_loop_value() {
        let d = p(&[(2, -1), (-2, -1)]);
        let q = p(&[(5, 3), (-1, -2), (0, 7)]);
        assert_eq!(divide_by_loop(&(&d * &q)).unwrap(), q);
        assert!(divide_by_loop(&p(&[(0, 1)])).is_err());
    }
}
