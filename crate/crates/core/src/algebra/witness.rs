//! The explicit identity `t = 2 T_a(T_J) T_b(T_K) - T_c(T_I)` proving that a
//! triple with `pgcd = 1` gives an embedding: `t` lies in the algebra
//! generated by the three coordinate polynomials.

use serde::Serialize;

use super::{pgcd, Triple};
use crate::error::{Error, Result};
use crate::poly::{cheb_t, ExactPoly};

/// Which component of the original triple plays the odd role `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    I,
    J,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub odd_slot: Slot,
}

impl Witness {
    /// `(I, J, K)`: the odd component, then the other two in original order.
    pub fn roles(&self, t: Triple) -> (u64, u64, u64) {
        match self.odd_slot {
            Slot::I => (t.i, t.j, t.k),
            Slot::J => (t.j, t.i, t.k),
            Slot::K => (t.k, t.i, t.j),
        }
    }

    /// Degree of the largest term, `c I`.
    pub fn degree(&self, t: Triple) -> u64 {
        self.c * self.roles(t).0
    }

    /// Expands `2 T_a(T_J) T_b(T_K) - T_c(T_I)` by composition.
    pub fn expand(&self, t: Triple) -> ExactPoly {
        let (i, j, k) = self.roles(t);
        let comp = |outer: u64, inner: u64| cheb_at(outer, &cheb_t(inner as usize));
        (comp(self.a, j) * comp(self.b, k)).scale_int(2) - comp(self.c, i)
    }

    pub fn verify(&self, t: Triple) -> bool {
        self.expand(t) == ExactPoly::t()
    }
}

/// `T_n(y)` for a polynomial `y`, by the ladder
/// `T_2m = 2 T_m^2 - 1`, `T_2m+1 = 2 T_m T_m+1 - y`.
fn cheb_at(n: u64, y: &ExactPoly) -> ExactPoly {
    let one = ExactPoly::one();
    let (mut lo, mut hi) = (one.clone(), y.clone());
    for bit in (0..64 - n.leading_zeros()).rev() {
        let mid = (&lo * &hi).scale_int(2) - y.clone();
        if n >> bit & 1 == 0 {
            lo = (&lo * &lo).scale_int(2) - one.clone();
            hi = mid;
        } else {
            hi = (&hi * &hi).scale_int(2) - one.clone();
            lo = mid;
        }
    }
    lo
}

/// Largest identity degree that `embedding_witness` will expand.
pub const MAX_WITNESS_DEGREE: u64 = 20_000;

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = super::ext_gcd((a % m) as i64, m as i64);
    (g == 1).then(|| x.rem_euclid(m as i64) as u64)
}

/// Computes the witness for a triple with `pgcd = 1`, checking the identity
/// by full expansion before returning it.
pub fn embedding_witness(t: Triple) -> Result<Witness> {
    let w = witness_unchecked(t)?;
    if w.degree(t) > MAX_WITNESS_DEGREE {
        return Err(Error::WitnessTooLarge { degree: w.degree(t), cap: MAX_WITNESS_DEGREE });
    }
    if !w.verify(t) {
        return Err(Error::Internal(format!("witness {w:?} for {t} fails to expand to t")));
    }
    Ok(w)
}

/// The witness without the expansion check.
pub fn witness_unchecked(t: Triple) -> Result<Witness> {
    if pgcd(t) != 1 {
        return Err(Error::NotAnEmbedding { triple: t, reason: "pgcd is not 1" });
    }
    let odd_slot = if t.i % 2 == 1 {
        Slot::I
    } else if t.j % 2 == 1 {
        Slot::J
    } else {
        Slot::K
    };
    let probe = Witness { a: 0, b: 0, c: 0, odd_slot };
    let (i, j, k) = probe.roles(t);

    // Smallest A >= 1 with A J - B K = +-1, preferring +1.
    let (a0, b0) = (1..=k)
        .find_map(|a| {
            let aj = a * j;
            if (aj - 1) % k == 0 {
                Some((a, (aj - 1) / k))
            } else if (aj + 1) % k == 0 {
                Some((a, (aj + 1) / k))
            } else {
                None
            }
        })
        .ok_or(Error::Internal(format!("no Bezout pair for ({j}, {k})")))?;

    let m = i as u128;
    let inv = inverse_mod(((2 * j as u128 * k as u128) % m) as u64, i)
        .ok_or(Error::Internal(format!("2JK is not invertible mod {i}")))? as u128;
    let s = (a0 as u128 * j as u128 + b0 as u128 * k as u128) % m;
    let x = ((m - s * inv % m) % m) as u64;

    let a = k * x + a0;
    let b = j * x + b0;
    let num = a * j + b * k;
    debug_assert_eq!(num % i, 0);
    Ok(Witness { a, b, c: num / i, odd_slot })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_triple() {
        let t = Triple::new(3, 4, 5);
        let w = embedding_witness(t).unwrap();
        assert_eq!(w.odd_slot, Slot::I);
        let (_, j, k) = w.roles(t);
        assert_eq!((w.a * j).abs_diff(w.b * k), 1);
        assert!(w.verify(t));
    }

    #[test]
    fn odd_component_moves_to_front() {
        let w = embedding_witness(Triple::new(4, 5, 7)).unwrap();
        assert_eq!(w.odd_slot, Slot::J);
        let w = embedding_witness(Triple::new(4, 8, 3)).unwrap_err();
        assert!(matches!(w, Error::NotAnEmbedding { .. }));
    }

    #[test]
    fn unit_components_are_handled() {
        for t in [Triple::new(1, 1, 1), Triple::new(1, 2, 3), Triple::new(2, 1, 3)] {
            assert!(embedding_witness(t).unwrap().verify(t), "{t}");
        }
    }

    #[test]
    fn ladder_matches_horner() {
        let y = cheb_t(7);
        for n in [0, 1, 2, 5, 12, 31] {
            assert_eq!(cheb_at(n, &y), cheb_t(n as usize).compose(&y), "n={n}");
        }
    }

    #[test]
    fn expansion_cap() {
        let t = Triple::new(37, 39, 40);
        assert!(witness_unchecked(t).unwrap().degree(t) > MAX_WITNESS_DEGREE);
        assert!(matches!(embedding_witness(t), Err(Error::WitnessTooLarge { .. })));
    }

    #[test]
    fn rejects_common_factor() {
        assert!(embedding_witness(Triple::new(6, 10, 15)).is_err());
    }
}
