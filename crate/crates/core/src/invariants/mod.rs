//! Kauffman bracket, Jones polynomial, and identification against a small
//! table of named knots.
//!
//! Jones polynomials are Laurent polynomials in `x = A^-1`, so `t = x^4`.
//! Identification ignores chirality.

mod bracket;
mod laurent;
mod table;

pub use bracket::{kauffman_bracket, unnormalized_bracket, DEFAULT_CAP};
pub use laurent::LaurentPoly;
pub use table::{knot_table, standard_diagram, KnotRecord};

use num_bigint::BigInt;
use serde::Serialize;

use crate::diagram::{gauss_to_pd, writhe, PdCode, SignedGaussCode};
use crate::error::{Error, Result};

/// `(-A)^(-3w) <D>` rewritten in `x = A^-1`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let factor = LaurentPoly::monomial(-3 * writhe, BigInt::from(sign));
    (&factor * bracket).mirror()
}

pub fn jones_of_pd(pd: &PdCode, writhe: i64, cap: usize) -> Result<LaurentPoly> {
    Ok(jones_from_bracket(&kauffman_bracket(pd, cap)?, writhe))
}

/// Jones polynomial of a knot PD code whose arcs are numbered along the
/// orientation, taking the writhe from that numbering.
pub fn jones_of_knot_pd(pd: &PdCode, cap: usize) -> Result<LaurentPoly> {
    let w = if pd.crossing_count() == 0 { 0 } else { pd.writhe_by_orientation()? };
    jones_of_pd(pd, w, cap)
}

pub fn jones(g: &SignedGaussCode, cap: usize) -> Result<LaurentPoly> {
    jones_of_pd(&gauss_to_pd(g)?, writhe(g), cap)
}

#[derive(Debug, Clone, Serialize)]
pub struct Identification {
    pub name: &'static str,
    pub crossing_number: u32,
    pub mirror_matched: bool,
    /// Number of table entries with the same Jones polynomial up to mirror.
    #[serde(skip_serializing_if = "is_one")]
    pub multiplicity: usize,
}

fn is_one(n: &usize) -> bool {
    *n == 1
}

/// Looks `v` and its mirror up in the table; the first match wins.
pub fn identify(v: &LaurentPoly) -> Option<Identification> {
    let mirror = v.mirror();
    let hits: Vec<(&KnotRecord, bool)> = knot_table()
        .iter()
        .filter_map(|r| {
            if r.jones == *v {
                Some((r, false))
            } else if r.jones == mirror {
                Some((r, true))
            } else {
                None
            }
        })
        .collect();
    let &(r, mirror_matched) = hits.first()?;
    Some(Identification { name: r.name, crossing_number: r.crossing_number, mirror_matched, multiplicity: hits.len() })
}

/// Standard `q`-crossing diagram of the `(2, q)` torus knot, all crossings
/// positive: `X[a, a+q+1, a+1, a+q]` for `a = 2, 4, ..., 2q`, labels mod `2q`.
pub fn standard_torus_pd(q: u32) -> Result<PdCode> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("torus diagram needs odd q >= 3, got {q}")));
    }
    let m = 2 * q;
    let wrap = |x: u32| (x - 1) % m + 1;
    PdCode::new((1..=q).map(|s| 2 * s).map(|a| [wrap(a), wrap(a + q + 1), wrap(a + 1), wrap(a + q)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{alternating_sequence, build_gauss_code};
    use crate::geometry::NodalCurve;

    #[test]
    fn trefoil_jones_and_identification() {
        let c = NodalCurve::new(3, 4).unwrap();
        let g = build_gauss_code(&c, &alternating_sequence(3)).unwrap();
        let v = jones(&g, DEFAULT_CAP).unwrap();
        assert!(v.exponents_divisible_by(4));
        let id = identify(&v).unwrap();
        assert_eq!(id.name, "3_1");
        assert_eq!(jones(&g.mirror(), DEFAULT_CAP).unwrap(), v.mirror());
    }

    #[test]
    fn unknot_identification() {
        assert_eq!(identify(&LaurentPoly::one()).unwrap().name, "0_1");
        assert_eq!(jones(&SignedGaussCode::default(), DEFAULT_CAP).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn torus_diagrams() {
        for (q, name) in [(3, "3_1"), (5, "5_1"), (7, "7_1"), (9, "9_1"), (11, "11a_367")] {
            let pd = standard_torus_pd(q).unwrap();
            assert!(pd.is_planar());
            assert_eq!(pd.writhe_by_orientation().unwrap(), q as i64);
            let id = identify(&jones_of_knot_pd(&pd, DEFAULT_CAP).unwrap()).unwrap();
            assert_eq!((id.name, id.mirror_matched), (name, false));
        }
        assert!(standard_torus_pd(4).is_err());
    }
}
