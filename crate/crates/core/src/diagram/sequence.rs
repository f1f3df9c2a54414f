use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{cheb_eval_angle, interval, NodalCurve};
use crate::poly::ExactPoly;

/// A `+-1` label per preimage parameter in ascending-t order; `+1` means the
/// strand passes over its partner.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CrossingSequence {
    values: Vec<i8>,
}

impl CrossingSequence {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.abs() != 1) {
            return Err(Error::InvalidSequence(format!("entry {v} is not +1 or -1")));
        }
        Ok(CrossingSequence { values })
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_alternating(&self) -> bool {
        self.values.windows(2).all(|w| w[0] != w[1])
    }

    pub fn negated(&self) -> Self {
        CrossingSequence { values: self.values.iter().map(|v| -v).collect() }
    }

    /// The two preimages of every node must carry opposite labels.
    pub fn validate(&self, curve: &NodalCurve) -> Result<()> {
        if self.values.len() != curve.params.len() {
            return Err(Error::InvalidSequence(format!(
                "length {} but the curve has {} preimage parameters",
                self.values.len(),
                curve.params.len()
            )));
        }
        for (node, (a, b)) in curve.position_pairs().into_iter().enumerate() {
            if self.values[a] * self.values[b] != -1 {
                return Err(Error::InvalidSequence(format!(
                    "node {node} has equal labels at positions {} and {}",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.values.iter().map(|&v| if v > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `a_n = (-1)^n` for `n = 1..2N`.
pub fn alternating_sequence(nodes: usize) -> CrossingSequence {
    CrossingSequence { values: (1..=2 * nodes).map(|n| if n % 2 == 0 { 1 } else { -1 }).collect() }
}

/// The sequence on `(T_3, T_{3n+1})` giving the `(2, 2n+1)` torus knot:
/// a first block of length `2n` from the seeds `+, -, -` and
/// `a_m = a_{m-1} a_{m-2} a_{m-3}`, then `a_{m+2n} = (-1)^{n+1} a_m` and
/// `a_{m+4n} = a_m`.
pub fn torus_sequence(n: usize) -> CrossingSequence {
    assert!(n >= 1, "torus sequences start at n = 1");
    let mut first: Vec<i8> = vec![1, -1, -1];
    while first.len() < 2 * n {
        let m = first.len();
        first.push(first[m - 1] * first[m - 2] * first[m - 3]);
    }
    first.truncate(2 * n);
    let flip: i8 = if n % 2 == 1 { 1 } else { -1 };
    let mut values = first.clone();
    values.extend(first.iter().map(|v| v * flip));
    values.extend(&first);
    CrossingSequence { values }
}

/// The third coordinate of a space curve over `(T_i, T_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Height {
    /// `z = T_k`, compared exactly through angle arithmetic.
    Chebyshev(u64),
    /// `z = F'` of the alternating construction; signs follow from the
    /// alternation of `F'` across the simple roots of `F`.
    Alternating,
    /// Any polynomial; compared by certified intervals.
    Poly(ExactPoly),
}

/// Over/under labels induced by the height `z` on the curve.
pub fn z_crossing_sequence(curve: &NodalCurve, z: &Height) -> Result<CrossingSequence> {
    let n = curve.params.len();
    let values = match z {
        Height::Alternating => {
            // F has positive leading coefficient, so F' > 0 at the largest
            // root (position 2N) and the signs alternate downward.
            (1..=n).map(|s| if (n - s).is_multiple_of(2) { 1 } else { -1 }).collect()
        }
        Height::Chebyshev(k) => {
            let mut v = Vec::with_capacity(n);
            for pos in 0..n {
                let here = cheb_eval_angle(*k, curve.params[pos]);
                let there = cheb_eval_angle(*k, curve.params[curve.partner[pos]]);
                v.push(match here.cmp(&there) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => return Err(Error::ZFailsToSeparate { node: curve.node_of[pos] }),
                });
            }
            v
        }
        Height::Poly(p) => {
            let mut v = vec![0i8; n];
            for pos in 0..n {
                let other = curve.partner[pos];
                if pos > other {
                    continue;
                }
                let ord = interval::compare_at(p, curve.params[pos], curve.params[other])
                    .ok_or(Error::ZFailsToSeparate { node: curve.node_of[pos] })?;
                let s = if ord == Ordering::Greater { 1 } else { -1 };
                v[pos] = s;
                v[other] = -s;
            }
            v
        }
    };
    let seq = CrossingSequence { values };
    seq.validate(curve)?;
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::alternating_z;
    use crate::poly::cheb_t;

    #[test]
    fn alternating_fixtures() {
        assert_eq!(alternating_sequence(3).to_string(), "(-,+,-,+,-,+)");
        assert_eq!(alternating_sequence(1).to_string(), "(-,+)");
        let c = NodalCurve::new(3, 4).unwrap();
        alternating_sequence(3).validate(&c).unwrap();
    }

    #[test]
    fn torus_fixtures() {
        assert_eq!(torus_sequence(2).to_string(), "(+,-,-,+,-,+,+,-,+,-,-,+)");
        assert_eq!(torus_sequence(1).len(), 6);
        let first: Vec<i8> = torus_sequence(4).values()[..7].to_vec();
        assert_eq!(first, vec![1, -1, -1, 1, 1, -1, -1]);
    }

    #[test]
    fn torus_sequences_are_valid() {
        for n in 1..=6 {
            let c = NodalCurve::new(3, 3 * n as u64 + 1).unwrap();
            torus_sequence(n).validate(&c).unwrap();
        }
    }

    #[test]
    fn chebyshev_height() {
        let c = NodalCurve::new(3, 4).unwrap();
        z_crossing_sequence(&c, &Height::Chebyshev(5)).unwrap();
        assert!(matches!(
            z_crossing_sequence(&c, &Height::Chebyshev(6)),
            Err(Error::ZFailsToSeparate { .. })
        ));
    }

    #[test]
    fn interval_route_agrees_with_exact_routes() {
        let c = NodalCurve::new(3, 4).unwrap();
        let exact = z_crossing_sequence(&c, &Height::Chebyshev(5)).unwrap();
        let approx = z_crossing_sequence(&c, &Height::Poly(cheb_t(5))).unwrap();
        assert_eq!(exact, approx);

        let c = NodalCurve::new(3, 11).unwrap();
        let theorem = z_crossing_sequence(&c, &Height::Alternating).unwrap();
        let approx = z_crossing_sequence(&c, &Height::Poly(alternating_z(3, 11).unwrap())).unwrap();
        assert_eq!(theorem, approx);
        assert_eq!(theorem, alternating_sequence(10));
    }

    #[test]
    fn rejects_bad_sequences() {
        let c = NodalCurve::new(3, 4).unwrap();
        assert!(CrossingSequence::new(vec![1, 1, 1, 1, 1, 1]).unwrap().validate(&c).is_err());
        assert!(CrossingSequence::new(vec![1, 0]).is_err());
        assert!(alternating_sequence(2).validate(&c).is_err());
    }
}
