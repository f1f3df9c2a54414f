//! Exact geometry of the plane curve `t -> (T_i(t), T_j(t))`.
//!
//! Node coordinates and preimages are all of the form `cos(k pi / N)` and are
//! handled exactly through [`AngleCos`]. Signs of arbitrary polynomials at
//! those points go through certified intervals in [`interval`].

mod angle;
pub mod interval;
mod nodes;

pub use angle::{cheb_eval_angle, sin_multiple_sign, AngleCos};
pub use nodes::{check_parity, nodes, preimage_parameters, NodalCurve, NodeData};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{cheb_t, cheb_u, ExactPoly};

/// `F'` for `F = U_{mn-1} / (U_{m-1} U_{n-1})`: the height function whose
/// knot over `(T_m, T_n)` is the alternating one.
pub fn alternating_z(m: u64, n: u64) -> Result<ExactPoly> {
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    if !(3 <= m && m < n) {
        return Err(Error::InvalidArgument(format!("need 3 <= m < n, got ({m}, {n})")));
    }
    let f = alternating_f(m, n)?;
    Ok(f.derivative())
}

/// `F = U_{mn-1} / (U_{m-1} U_{n-1})`, an even polynomial whose simple roots
/// are the preimage parameters of `(T_m, T_n)`.
pub fn alternating_f(m: u64, n: u64) -> Result<ExactPoly> {
    let whole = cheb_u((m * n) as i64 - 1);
    let den = cheb_u(m as i64 - 1) * cheb_u(n as i64 - 1);
    whole.exact_div(&den)
}

/// Exact samples of `(T_i(t), T_j(t))` at `count` equally spaced `t` over
/// `[lo, hi]`, endpoints included.
pub fn curve_samples(
    i: u64,
    j: u64,
    count: usize,
    range: (BigRational, BigRational),
) -> Result<Vec<(BigRational, BigRational)>> {
    if count < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 samples, got {count}")));
    }
    let (lo, hi) = range;
    let step = (&hi - &lo) / BigRational::from_integer(BigInt::from(count - 1));
    let (ti, tj) = (cheb_t(i as usize), cheb_t(j as usize));
    Ok((0..count)
        .map(|s| {
            let t = &lo + &step * BigRational::from_integer(BigInt::from(s));
            (ti.eval(&t), tj.eval(&t))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn three_eleven_height() {
        let z = alternating_z(3, 11).unwrap();
        let scaled = z.scale(&BigRational::new(BigInt::one(), BigInt::from(64)));
        let expect = [
            (19, 327680),
            (17, -1548288),
            (15, 3080192),
            (13, -3347456),
            (11, 2155008),
            (9, -832320),
            (7, 185888),
            (5, -21774),
            (3, 1090),
            (1, -15),
        ];
        assert_eq!(scaled.degree().finite(), Some(19));
        for (e, c) in expect {
            assert_eq!(scaled.coeff(e), BigRational::from_integer(BigInt::from(c)), "t^{e}");
        }
        assert!(scaled.is_odd());
    }

    #[test]
    fn trefoil_height_degree() {
        let f = alternating_f(3, 4).unwrap();
        assert_eq!(f.degree().finite(), Some(6));
        assert!(f.is_even());
        assert_eq!(alternating_z(3, 4).unwrap().degree().finite(), Some(5));
        assert!(alternating_z(4, 6).is_err());
    }

    #[test]
    fn samples_at_fixed_points() {
        let one = BigRational::one();
        let s = curve_samples(3, 4, 3, (-one.clone(), one.clone())).unwrap();
        assert_eq!(s[0], (-one.clone(), one.clone()));
        assert_eq!(s[1], (BigRational::zero(), one.clone()));
        assert_eq!(s[2], (one.clone(), one));
        assert!(curve_samples(3, 4, 1, (BigRational::zero(), BigRational::one())).is_err());
    }
}
