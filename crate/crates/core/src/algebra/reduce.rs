//! Reduction of an embedding triple by elementary involutions.
//!
//! Writing `k = a i + b j` the shear `z -> 2 T_a(x) T_b(y) - z` sends
//! `(T_i, T_j, T_k)` to `(T_i, T_j, T_{|ai - bj|})`; swaps keep the triple
//! sorted. The process stops at a triple containing 1 or one whose largest
//! degree lies in the remnant of the other two.

use serde::Serialize;

use super::involution::{apply_involutions, chebyshev_parametrization, Involution, Separable};
use super::{in_semigroup, is_embedding, pgcd, semigroup_member, Triple};
use crate::error::{Error, Result};
use crate::poly::{cheb_t, ExactPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    #[serde(flatten)]
    pub involution: Involution,
    /// Triple after this involution.
    pub triple: Triple,
}

/// Ordered record of the involutions carrying `(T_i, T_j, T_k)` for `start`
/// to the Chebyshev parametrization of `end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub start: Triple,
    pub steps: Vec<TraceEntry>,
    pub end: Triple,
}

impl ReductionTrace {
    pub fn involutions(&self) -> impl DoubleEndedIterator<Item = &Involution> {
        self.steps.iter().map(|e| &e.involution)
    }

    /// Number of degree-lowering shears (permutations not counted).
    pub fn shear_count(&self) -> usize {
        self.steps.iter().filter(|e| !e.involution.is_permutation()).count()
    }

    /// Total degree before and after every shear.
    pub fn degree_profile(&self) -> Vec<u64> {
        std::iter::once(self.start.total_degree())
            .chain(
                self.steps
                    .iter()
                    .filter(|e| !e.involution.is_permutation())
                    .map(|e| e.triple.total_degree()),
            )
            .collect()
    }

    /// Applies the recorded involutions to the start parametrization.
    pub fn forward(&self) -> [ExactPoly; 3] {
        apply_involutions(self.involutions(), &chebyshev_parametrization(self.start))
    }

    /// Applies the involutions in reverse order to the end parametrization;
    /// the result must be the start parametrization.
    pub fn replay(&self) -> [ExactPoly; 3] {
        apply_involutions(self.involutions().rev(), &chebyshev_parametrization(self.end))
    }

    /// Whether the end triple contains 1, so the knot is trivial.
    pub fn is_trivial(&self) -> bool {
        self.end.contains_one()
    }
}

/// A sorted triple is reduced when it contains 1, or `2 <= i < j` and `k`
/// lies in the remnant of `(i, j)`.
pub fn is_reduced(t: Triple) -> bool {
    let t = t.sorted();
    if t.contains_one() {
        return true;
    }
    t.i < t.j && t.j < t.k && !in_semigroup(t.i, t.j, t.k) && pgcd(t) == 1
}

fn sort_swaps(t: Triple, entries: &mut Vec<TraceEntry>) -> Triple {
    let mut a = t.as_array();
    let mut push = |a: &mut [u64; 3], x: usize, y: usize, inv: Involution| {
        if a[x] > a[y] {
            a.swap(x, y);
            entries.push(TraceEntry { involution: inv, triple: Triple::from_array(*a) });
        }
    };
    push(&mut a, 0, 1, Involution::SwapXY);
    push(&mut a, 1, 2, Involution::SwapYZ);
    push(&mut a, 0, 1, Involution::SwapXY);
    Triple::from_array(a)
}

pub fn reduce_triple(t: Triple) -> Result<ReductionTrace> {
    if !is_embedding(t) {
        return Err(Error::NotAnEmbedding { triple: t, reason: "pgcd > 1 and no component is 1" });
    }
    let mut steps = Vec::new();
    let mut cur = sort_swaps(t, &mut steps);
    while !is_reduced(cur) {
        let (i, j, k) = (cur.i, cur.j, cur.k);
        let (a, b) = semigroup_member(i, j, k)?
            .ok_or_else(|| Error::Internal(format!("{k} is not in <{i},{j}> yet {cur} is unreduced")))?;
        let next_k = (a * i).abs_diff(b * j);
        if next_k == 0 {
            return Err(Error::Internal(format!("shear of {cur} collapses to degree 0")));
        }
        let shear = Separable::new(cheb_t(a as usize).scale_int(2), cheb_t(b as usize));
        cur = Triple::new(i, j, next_k);
        steps.push(TraceEntry { involution: Involution::ShearZ(shear), triple: cur });
        cur = sort_swaps(cur, &mut steps);
    }
    Ok(ReductionTrace { start: t, steps, end: cur })
}

/// Involutions carrying `(T_i, T_j, T_k)` to `(t, 0, 0)` for a triple with a
/// component equal to 1.
pub fn rectify_trivial(t: Triple) -> Result<Vec<Involution>> {
    let mut maps = Vec::with_capacity(2);
    let (g, h) = if t.i == 1 {
        (t.j, t.k)
    } else if t.j == 1 {
        maps.push(Involution::SwapXY);
        (t.i, t.k)
    } else if t.k == 1 {
        maps.push(Involution::SwapXZ);
        (t.j, t.i)
    } else {
        return Err(Error::NoUnitComponent(t));
    };
    maps.push(Involution::FromX { g: cheb_t(g as usize), h: cheb_t(h as usize) });
    let image = apply_involutions(&maps, &chebyshev_parametrization(t));
    if image != [ExactPoly::t(), ExactPoly::zero(), ExactPoly::zero()] {
        return Err(Error::Internal(format!("rectification of {t} does not reach (t, 0, 0)")));
    }
    Ok(maps)
}

/// For a triple whose reduction ends at a trivial triple, the full chain of
/// involutions from `(T_i, T_j, T_k)` to `(t, 0, 0)`; `None` if the reduced
/// triple is not trivial.
pub fn rectify(t: Triple) -> Result<Option<Vec<Involution>>> {
    let trace = reduce_triple(t)?;
    if !trace.is_trivial() {
        return Ok(None);
    }
    let mut maps: Vec<Involution> = trace.involutions().cloned().collect();
    maps.extend(rectify_trivial(trace.end)?);
    Ok(Some(maps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_reduced() {
        let tr = reduce_triple(Triple::new(3, 4, 5)).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.end, Triple::new(3, 4, 5));
    }

    #[test]
    fn trefoil_from_3_4_7() {
        let tr = reduce_triple(Triple::new(3, 4, 7)).unwrap();
        assert_eq!(tr.end, Triple::new(1, 3, 4));
        assert!(tr.is_trivial());
        assert_eq!(tr.forward(), chebyshev_parametrization(tr.end));
        assert_eq!(tr.replay(), chebyshev_parametrization(tr.start));
    }

    #[test]
    fn unsorted_start_is_sorted_by_swaps() {
        let tr = reduce_triple(Triple::new(5, 3, 4)).unwrap();
        assert_eq!(tr.shear_count(), 0);
        assert_eq!(tr.end, Triple::new(3, 4, 5));
        assert_eq!(tr.replay(), chebyshev_parametrization(tr.start));
    }

    #[test]
    fn degree_strictly_drops_per_shear() {
        let tr = reduce_triple(Triple::new(5, 7, 101)).unwrap();
        let d = tr.degree_profile();
        assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
        assert!(is_reduced(tr.end));
    }

    #[test]
    fn rejects_non_embedding() {
        assert!(reduce_triple(Triple::new(4, 6, 9)).is_err());
    }

    #[test]
    fn rectify_each_unit_position() {
        for t in [Triple::new(1, 4, 6), Triple::new(5, 1, 3), Triple::new(2, 3, 1)] {
            rectify_trivial(t).unwrap();
        }
        assert_eq!(rectify_trivial(Triple::new(3, 4, 5)), Err(Error::NoUnitComponent(Triple::new(3, 4, 5))));
    }

    #[test]
    fn full_rectification_reaches_the_line() {
        let t = Triple::new(3, 5, 11);
        let maps = rectify(t).unwrap().expect("(3,5,11) is trivial");
        let image = apply_involutions(&maps, &chebyshev_parametrization(t));
        assert_eq!(image, [ExactPoly::t(), ExactPoly::zero(), ExactPoly::zero()]);
    }
}
