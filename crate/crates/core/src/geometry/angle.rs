use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The real number `cos(k pi / N)`, kept with `0 <= k <= N`.
///
/// The pair is not reduced by `gcd(k, N)`, so node data keeps its natural
/// denominator `ij`. Equality and hashing go through the reduced fraction.
#[derive(Debug, Clone, Copy)]
pub struct AngleCos {
    k: u64,
    n: u64,
}

impl AngleCos {
    /// Folds `k` modulo `2N` and reflects into `[0, N]`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "angle denominator must be positive");
        let period = 2 * n as i128;
        let mut r = (k as i128).rem_euclid(period) as u64;
        if r > n {
            r = 2 * n - r;
        }
        AngleCos { k: r, n }
    }

    pub fn k(self) -> u64 {
        self.k
    }

    pub fn denominator(self) -> u64 {
        self.n
    }

    /// Strictly inside `(0, pi)`, where `sin` is positive.
    pub fn is_interior(self) -> bool {
        self.k != 0 && self.k != self.n
    }

    pub fn to_f64(self) -> f64 {
        (self.k as f64 * std::f64::consts::PI / self.n as f64).cos()
    }

    fn reduced(self) -> (u64, u64) {
        let g = self.k.gcd(&self.n);
        (self.k / g, self.n / g)
    }
}

impl PartialEq for AngleCos {
    fn eq(&self, other: &Self) -> bool {
        self.k as u128 * other.n as u128 == other.k as u128 * self.n as u128
    }
}

impl Eq for AngleCos {}

impl Hash for AngleCos {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.reduced().hash(state);
    }
}

impl Ord for AngleCos {
    /// Order of the real values; cosine decreases on `[0, pi]`.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.k as u128 * other.n as u128;
        let rhs = other.k as u128 * self.n as u128;
        rhs.cmp(&lhs)
    }
}

impl PartialOrd for AngleCos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AngleCos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cos({}pi/{})", self.k, self.n)
    }
}

impl Serialize for AngleCos {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AngleCos", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("N", &self.n)?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

/// `T_n(cos(k pi / N)) = cos(n k pi / N)`.
pub fn cheb_eval_angle(n: u64, a: AngleCos) -> AngleCos {
    let k = (n as u128 * a.k as u128 % (2 * a.n as u128)) as i64;
    AngleCos::new(k, a.n)
}

/// Sign of `U_{n-1}(cos theta) = sin(n theta) / sin(theta)` at an interior angle.
pub fn sin_multiple_sign(n: u64, a: AngleCos) -> Result<i8> {
    if !a.is_interior() {
        return Err(Error::BoundaryAngle { k: a.k, n: a.n });
    }
    let r = (n as u128 * a.k as u128 % (2 * a.n as u128)) as u64;
    Ok(if r == 0 || r == a.n {
        0
    } else if r < a.n {
        1
    } else {
        -1
    })
}
