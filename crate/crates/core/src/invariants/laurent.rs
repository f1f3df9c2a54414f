use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Laurent polynomial with integer coefficients; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes the variable by its inverse.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplies by the monomial of degree `k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn exponents_divisible_by(&self, n: i64) -> bool {
        self.terms.keys().all(|e| e % n == 0)
    }

    /// Substitutes `v^n -> v`, if every exponent is a multiple of `n`.
    pub fn compress(&self, n: i64) -> Option<Self> {
        self.exponents_divisible_by(n)
            .then(|| LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e / n, c.clone())).collect() })
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let unit = mag.is_one();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !unit {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if e != 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(&[(1, 2), (-3, 1)]);
        let b = p(&[(1, -2)]);
        assert_eq!(&a + &b, p(&[(-3, 1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn loop_value_squared() {
        let d = p(&[(2, -1), (-2, -1)]);
        assert_eq!(&d * &d, p(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn display_and_serialization() {
        let v = p(&[(4, 1), (12, 1), (16, -1)]);
        assert_eq!(v.compress(4).unwrap().display_in("t"), "t + t^3 - t^4");
        assert_eq!(p(&[(-2, -3), (0, 1)]).display_in("t"), "-3t^-2 + 1");
        let json = serde_json::to_string(&p(&[(-4, -1), (0, 2)])).unwrap();
        assert_eq!(json, r#"{"-4":"-1","0":"2"}"#);
    }

    #[test]
    fn mirror_and_evaluation() {
        let v = p(&[(4, 1), (12, 1), (16, -1)]);
        assert_eq!(v.mirror(), p(&[(-4, 1), (-12, 1), (-16, -1)]));
        assert_eq!(v.eval_at_one(), BigInt::one());
        assert!(v.compress(3).is_none());
    }
}
