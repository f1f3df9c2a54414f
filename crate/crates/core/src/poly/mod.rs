//! Dense univariate polynomials over the rationals and the Chebyshev families.

mod cheb;
mod kronecker;
mod serial;

pub use cheb::{cheb, cheb_t, cheb_u, monic_cheb, ChebKind};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `t` with arbitrary-precision rational coefficients.
///
/// Stored as integer numerators over one positive common denominator, kept in
/// lowest terms. Integral polynomials (every Chebyshev polynomial) therefore
/// run on plain big-integer arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int_coeffs(vec![BigInt::one()])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_int_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^exp`
    pub fn monomial(c: BigRational, exp: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_int_coeffs(num: Vec<BigInt>) -> Self {
        let mut p = ExactPoly { num, den: BigInt::one() };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_int_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from coefficients indexed by exponent.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .into_iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(num, den)
    }

    fn normalized(num: Vec<BigInt>, den: BigInt) -> Self {
        let mut p = ExactPoly { num, den };
        p.normalize();
        p
    }

    fn trim(&mut self) {
        while self.num.last().is_some_and(|c| c.is_zero()) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
        }
    }

    fn normalize(&mut self) {
        self.trim();
        if self.num.is_empty() {
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn degree(&self) -> Degree {
        match self.num.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn coeff(&self, exp: usize) -> BigRational {
        match self.num.get(exp) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> BigRational {
        match self.num.len() {
            0 => BigRational::zero(),
            n => self.coeff(n - 1),
        }
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn int_coeffs(&self) -> Option<&[BigInt]> {
        self.den.is_one().then_some(self.num.as_slice())
    }

    /// Common denominator of the coefficients (1 for integral polynomials).
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Gcd of the coefficients as a positive rational (0 for the zero polynomial).
    pub fn content(&self) -> BigRational {
        let g = self.num.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        BigRational::new(g, self.den.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::normalized(num, &self.den * c.denom())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.num.len() <= 1 {
            return Self::zero();
        }
        let num = self
            .num
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::normalized(num, self.den.clone())
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        let num = self
            .num
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        ExactPoly { num, den: self.den.clone() }
    }

    /// `p(q(t))` by Horner's scheme in the polynomial ring.
    pub fn compose(&self, q: &ExactPoly) -> Self {
        let Some((last, rest)) = self.num.split_last() else {
            return Self::zero();
        };
        let mut acc = ExactPoly::from_int_coeffs(vec![last.clone()]);
        for c in rest.iter().rev() {
            acc = &acc * q;
            acc.add_int_constant(c);
        }
        acc.scale(&BigRational::new(BigInt::one(), self.den.clone()))
    }

    fn add_int_constant(&mut self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let shifted = c * &self.den;
        if self.num.is_empty() {
            self.num.push(shifted);
            self.den = BigInt::one();
            self.normalize();
            return;
        }
        self.num[0] += shifted;
        self.normalize();
    }

    /// Euclidean division: returns `(quotient, remainder)` with `deg r < deg q`.
    pub fn div_rem(&self, divisor: &ExactPoly) -> Result<(ExactPoly, ExactPoly)> {
        let Degree::Finite(dq) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Degree::Finite(dp) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dp < dq {
            return Ok((Self::zero(), self.clone()));
        }
        // Work on integer numerators and fix denominators at the end:
        // self = P / dp_den, divisor = Q / dq_den, so self / divisor = (P / Q) * (dq_den / dp_den).
        let lead = divisor.num[dq].clone();
        let mut rem: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut quot = vec![BigRational::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let c = &rem[k + dq] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.num.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        let ratio = BigRational::new(divisor.den.clone(), self.den.clone());
        let q = ExactPoly::from_coeffs(quot).scale(&ratio);
        let r = ExactPoly::from_coeffs(rem).scale(&BigRational::new(BigInt::one(), self.den.clone()));
        Ok((q, r))
    }

    /// Exact quotient `self / divisor`; fails when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &ExactPoly) -> Result<ExactPoly> {
        let (q, r) = self.div_rem(divisor)?;
        match r.degree() {
            Degree::NegInfinity => Ok(q),
            Degree::Finite(d) => Err(Error::NonzeroRemainder { remainder_degree: d }),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        // Homogenized Horner on the numerator: sum n_i p^i q^(d-i), then divide by q^d * den.
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.num.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        if self.num.is_empty() {
            return BigRational::zero();
        }
        let qd = qpow / q;
        BigRational::new(acc, qd * &self.den)
    }

    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Approximate evaluation, for plotting only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        self.num
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
            / den
    }

    /// True when `p(-t) = p(t)`.
    pub fn is_even(&self) -> bool {
        self.num.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// True when `p(-t) = -p(t)`.
    pub fn is_odd(&self) -> bool {
        self.num.iter().step_by(2).all(|c| c.is_zero())
    }

    pub(crate) fn raw_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }
}

impl Default for ExactPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_scaled(a: &[BigInt], fa: &BigInt, b: &[BigInt], fb: &BigInt, sign: i8) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).map(|c| c * fa).unwrap_or_default();
            let y = b.get(i).map(|c| c * fb).unwrap_or_default();
            if sign >= 0 {
                x + y
            } else {
                x - y
            }
        })
        .collect()
}

fn add_impl(a: &ExactPoly, b: &ExactPoly, sign: i8) -> ExactPoly {
    if a.den == b.den {
        let one = BigInt::one();
        let num = add_scaled(&a.num, &one, &b.num, &one, sign);
        if a.den.is_one() {
            return ExactPoly::from_int_coeffs(num);
        }
        return ExactPoly::normalized(num, a.den.clone());
    }
    let l = a.den.lcm(&b.den);
    let fa = &l / &a.den;
    let fb = &l / &b.den;
    ExactPoly::normalized(add_scaled(&a.num, &fa, &b.num, &fb, sign), l)
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        add_impl(self, rhs, 1)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        add_impl(self, rhs, -1)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let num = kronecker::mul(&self.num, &rhs.num);
        if self.den.is_one() && rhs.den.is_one() {
            return ExactPoly::from_int_coeffs(num);
        }
        ExactPoly::normalized(num, &self.den * &rhs.den)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: &ExactPoly) -> ExactPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<ExactPoly> for &ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if !unit || exp == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match exp {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zero_has_sentinel_degree() {
        assert_eq!(ExactPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        let p = ExactPoly::from_i64(&[1, 2]);
        assert_eq!((&p - &p).degree(), Degree::NegInfinity);
    }

    #[test]
    fn monomial_product() {
        let t = ExactPoly::t();
        assert_eq!(&t * &t, ExactPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = ExactPoly::from_coeffs(vec![q(1, 3), q(-2, 5), q(7, 1)]);
        assert_eq!(&p + &ExactPoly::zero(), p);
    }

    #[test]
    fn rational_coefficients_stay_reduced() {
        let p = ExactPoly::from_coeffs(vec![q(1, 2), q(1, 2)]);
        let two = p.scale(&q(2, 1));
        assert!(two.is_integral());
        assert_eq!(two, ExactPoly::from_i64(&[1, 1]));
        assert_eq!(p.coeff(1), q(1, 2));
    }

    #[test]
    fn derivative_power_rule() {
        let p = ExactPoly::from_i64(&[0, -3, 0, 4]);
        assert_eq!(p.derivative(), ExactPoly::from_i64(&[-3, 0, 12]));
        assert!(ExactPoly::from_i64(&[9]).derivative().is_zero());
    }

    #[test]
    fn exact_division_by_factor() {
        let p = ExactPoly::from_i64(&[-1, 0, 1]);
        let d = ExactPoly::from_i64(&[1, 1]);
        assert_eq!(p.exact_div(&d).unwrap(), ExactPoly::from_i64(&[-1, 1]));
        assert_eq!(p.exact_div(&ExactPoly::one()).unwrap(), p);
    }

    #[test]
    fn exact_division_reports_remainder() {
        let p = ExactPoly::from_i64(&[1, 0, 1]);
        let d = ExactPoly::from_i64(&[1, 1]);
        assert_eq!(p.exact_div(&d), Err(Error::NonzeroRemainder { remainder_degree: 0 }));
        assert_eq!(p.exact_div(&ExactPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_with_rational_operands() {
        let p = ExactPoly::from_coeffs(vec![q(-1, 3), q(0, 1), q(1, 3)]);
        let d = ExactPoly::from_coeffs(vec![q(1, 2), q(1, 2)]);
        assert_eq!(p.exact_div(&d).unwrap(), ExactPoly::from_coeffs(vec![q(-2, 3), q(2, 3)]));
    }

    #[test]
    fn identity_composition() {
        let p = ExactPoly::from_coeffs(vec![q(1, 3), q(-2, 5), q(7, 1)]);
        assert_eq!(p.compose(&ExactPoly::t()), p);
    }

    #[test]
    fn rational_evaluation() {
        let p = ExactPoly::from_i64(&[-1, 0, 2]);
        assert_eq!(p.eval_i64(0), q(-1, 1));
        assert_eq!(p.eval(&q(1, 2)), q(-1, 2));
        let r = ExactPoly::from_coeffs(vec![q(1, 3), q(1, 2)]);
        assert_eq!(r.eval(&q(2, 3)), q(2, 3));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(ExactPoly::from_i64(&[0, -3, 0, 4]).to_string(), "4t^3 - 3t");
        assert_eq!(ExactPoly::from_coeffs(vec![q(-1, 64)]).to_string(), "-(1/64)");
        assert_eq!(ExactPoly::zero().to_string(), "0");
    }

    #[test]
    fn content_of_integral_polynomial() {
        let p = ExactPoly::from_i64(&[6, 0, -4]);
        assert_eq!(p.content(), q(2, 1));
    }
}
