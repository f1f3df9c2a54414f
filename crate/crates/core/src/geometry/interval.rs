//! Certified dyadic interval arithmetic for evaluating integer polynomials at
//! `cos(k pi / N)`.
//!
//! An interval at precision `p` is `[lo, hi] * 2^-p` with integer endpoints.
//! Every operation rounds outward, so the true value is always enclosed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AngleCos;
use crate::poly::ExactPoly;

/// Working precision at which refinement starts.
pub const START_PRECISION: u32 = 64;
/// Refinement gives up past this many bits.
pub const MAX_PRECISION: u32 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_shr(x: &BigInt, s: u32) -> BigInt {
    // BigInt >> rounds toward negative infinity.
    x >> s
}

fn ceil_shr(x: &BigInt, s: u32) -> BigInt {
    -((-x) >> s)
}

impl Interval {
    pub fn point(x: BigInt, prec: u32) -> Self {
        Interval { lo: x.clone() << prec, hi: x << prec, prec }
    }

    fn from_scaled(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi, prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn bounds_f64(&self) -> (f64, f64) {
        let scale = (self.prec as f64).exp2();
        (to_f64(&self.lo) / scale, to_f64(&self.hi) / scale)
    }

    /// `Some(sign)` when the interval excludes zero or is exactly zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Certified comparison; `None` while the intervals overlap.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        assert_eq!(self.prec, other.prec);
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        assert_eq!(self.prec, o.prec);
        Interval::from_scaled(&self.lo + &o.lo, &self.hi + &o.hi, self.prec)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        assert_eq!(self.prec, o.prec);
        Interval::from_scaled(&self.lo - &o.hi, &self.hi - &o.lo, self.prec)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        assert_eq!(self.prec, o.prec);
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().expect("four products");
        let hi = p.iter().max().expect("four products");
        Interval::from_scaled(floor_shr(lo, self.prec), ceil_shr(hi, self.prec), self.prec)
    }

    pub fn mul_int(&self, c: &BigInt) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if c.is_negative() {
            Interval::from_scaled(b, a, self.prec)
        } else {
            Interval::from_scaled(a, b, self.prec)
        }
    }

    /// Division by a positive integer.
    pub fn div_pos_int(&self, d: u64) -> Interval {
        let d = BigInt::from(d);
        Interval::from_scaled(self.lo.div_floor(&d), self.hi.div_ceil(&d), self.prec)
    }
}

fn to_f64(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 60 {
        return i64::try_from(x).map(|v| v as f64).unwrap_or(0.0);
    }
    let shift = bits - 60;
    let top: i64 = i64::try_from(x >> shift).unwrap_or(0);
    top as f64 * (shift as f64).exp2()
}

/// `atan(1/x) * 2^q` truncated, with an error bound in units of `2^-q`.
fn atan_inv_scaled(x: u64, q: u32) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << q) / &x;
    let mut sum = BigInt::zero();
    let mut n = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * n + 1);
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        n += 1;
    }
    // Each truncated term is off by less than 3 ulp; the tail is below 2 ulp.
    (sum, 3 * n + 2)
}

/// Enclosure of `pi` by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_interval(prec: u32) -> Interval {
    let guard = 16;
    let q = prec + guard;
    let (a, ea) = atan_inv_scaled(5, q);
    let (b, eb) = atan_inv_scaled(239, q);
    let centre = a * 16 - b * 4;
    let err = BigInt::from(16 * ea + 4 * eb);
    Interval::from_scaled(floor_shr(&(&centre - &err), guard), ceil_shr(&(&centre + &err), guard), prec)
}

fn log2_factorial(n: u64) -> f64 {
    (1..=n).map(|m| (m as f64).log2()).sum()
}

/// Enclosure of `cos(X / 2^p)` for a dyadic `0 <= X / 2^p <= 4`, by an exact
/// Taylor partial sum plus a remainder bound.
fn cos_point(x: &BigInt, prec: u32) -> Interval {
    debug_assert!(!x.is_negative());
    let xf = to_f64(x) / (prec as f64).exp2() + 1e-9;
    // Remainder after terms 0..m is at most x^(2m+2) / (2m+2)!.
    let mut m = 1u64;
    while xf.max(1.0).log2() * (2 * m + 2) as f64 - log2_factorial(2 * m + 2) > -(prec as f64 + 2.0) {
        m += 1;
    }
    let two_q = 2 * prec as u64;
    let x2 = x * x;
    let mut fact_ratio = BigInt::one();
    let mut num = BigInt::zero();
    let mut xpow = BigInt::one();
    // sum_{n<=m} (-1)^n x^{2n} 2^{2q(m-n)} (2m)!/(2n)!, built from n = m down to 0.
    let mut terms = Vec::with_capacity(m as usize + 1);
    for _ in 0..=m {
        terms.push(xpow.clone());
        xpow *= &x2;
    }
    for n in (0..=m).rev() {
        let term = (&terms[n as usize] * &fact_ratio) << (two_q * (m - n)) as usize;
        if n % 2 == 0 {
            num += term;
        } else {
            num -= term;
        }
        if n > 0 {
            fact_ratio *= (2 * n) * (2 * n - 1);
        }
    }
    let den = fact_ratio << (two_q * m) as usize;
    let scaled = num << prec;
    let lo = scaled.div_floor(&den) - 1;
    let hi = scaled.div_ceil(&den) + 1;
    Interval::from_scaled(lo, hi, prec)
}

/// Enclosure of `cos(k pi / N)`.
pub fn cos_angle_interval(a: AngleCos, prec: u32) -> Interval {
    let q = prec + 8;
    let theta = pi_interval(q).mul_int(&BigInt::from(a.k())).div_pos_int(a.denominator());
    let pi = pi_interval(q);
    // On [0, 4] cos falls to its minimum at pi and rises after it, so the
    // maximum sits at an endpoint.
    let upper = if theta.lo.is_positive() {
        cos_point(&theta.lo, q).hi.max(cos_point(&theta.hi, q).hi)
    } else {
        BigInt::one() << q
    };
    let lower = if theta.hi < pi.lo { cos_point(&theta.hi, q).lo } else { -(BigInt::one() << q) };
    Interval::from_scaled(floor_shr(&lower, 8), ceil_shr(&upper, 8), prec)
}

/// Interval Horner evaluation of `p` at `cos(k pi / N)`, up to the positive
/// common denominator of `p`.
pub fn eval_numerator_at(p: &ExactPoly, a: AngleCos, prec: u32) -> Interval {
    let x = cos_angle_interval(a, prec);
    let (coeffs, _) = p.raw_parts();
    let mut acc = Interval::point(BigInt::zero(), prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(&x).add(&Interval::point(c.clone(), prec));
    }
    acc
}

/// Certified order of `p(cos a)` against `p(cos b)`, doubling precision from
/// `START_PRECISION`. `None` if the values could not be separated by
/// `MAX_PRECISION` bits.
pub fn compare_at(p: &ExactPoly, a: AngleCos, b: AngleCos) -> Option<Ordering> {
    let mut prec = START_PRECISION;
    while prec <= MAX_PRECISION {
        let (va, vb) = (eval_numerator_at(p, a, prec), eval_numerator_at(p, b, prec));
        if let Some(ord) = va.compare(&vb) {
            return Some(ord);
        }
        prec *= 2;
    }
    None
}

/// Certified sign of `p(cos a)`; `None` if undecided by `MAX_PRECISION` bits.
pub fn sign_at(p: &ExactPoly, a: AngleCos) -> Option<i8> {
    let mut prec = START_PRECISION;
    while prec <= MAX_PRECISION {
        if let Some(s) = eval_numerator_at(p, a, prec).sign() {
            return Some(s);
        }
        prec *= 2;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(iv: &Interval, x: f64) -> bool {
        let (lo, hi) = iv.bounds_f64();
        lo <= x + 1e-15 && x - 1e-15 <= hi
    }

    #[test]
    fn pi_enclosure_is_tight() {
        for prec in [64, 200, 1000] {
            let iv = pi_interval(prec);
            assert!(contains(&iv, std::f64::consts::PI));
            assert!(&iv.hi - &iv.lo < BigInt::from(64));
        }
    }

    #[test]
    fn cos_enclosures_match_float() {
        for (k, n) in [(1, 3), (1, 12), (5, 12), (11, 12), (0, 5), (5, 5), (7, 33)] {
            let a = AngleCos::new(k, n);
            for prec in [64, 128, 512] {
                let iv = cos_angle_interval(a, prec);
                assert!(contains(&iv, a.to_f64()), "{a} at {prec}");
                assert!(&iv.hi - &iv.lo < BigInt::from(256), "{a} width at {prec}");
            }
        }
    }

    #[test]
    fn exact_cos_values_are_enclosed() {
        // cos(pi/3) = 1/2
        let iv = cos_angle_interval(AngleCos::new(1, 3), 100);
        let half = BigInt::one() << 99u32;
        assert!(iv.lo <= half && half <= iv.hi);
    }

    #[test]
    fn polynomial_sign_and_compare() {
        let t3 = crate::poly::cheb_t(3);
        // T_3(cos(pi/12)) = cos(pi/4) > 0, T_3(cos(5pi/12)) = cos(5pi/4) < 0
        assert_eq!(sign_at(&t3, AngleCos::new(1, 12)), Some(1));
        assert_eq!(sign_at(&t3, AngleCos::new(5, 12)), Some(-1));
        assert_eq!(
            compare_at(&t3, AngleCos::new(1, 12), AngleCos::new(5, 12)),
            Some(Ordering::Greater)
        );
    }
}
