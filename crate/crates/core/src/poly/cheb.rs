//! Chebyshev polynomials of the first and second kind.
//!
//! Generated by the three-term recurrences `T_{n+1} = 2t T_n - T_{n-1}` and
//! `U_{n+1} = 2t U_n - U_{n-1}` and memoized per process up to
//! `MEMO_LIMIT`. Higher degrees are run forward from the top of the table
//! without being stored.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ExactPoly;

const MEMO_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

struct Memo {
    // T: index n holds T_n. U: index n holds U_{n-1}, so U_{-1} sits at 0.
    table: RwLock<Vec<ExactPoly>>,
    seeds: fn() -> [ExactPoly; 2],
}

static T_MEMO: Memo = Memo {
    table: RwLock::new(Vec::new()),
    seeds: || [ExactPoly::one(), ExactPoly::t()],
};

static U_MEMO: Memo = Memo {
    table: RwLock::new(Vec::new()),
    seeds: || [ExactPoly::zero(), ExactPoly::one()],
};

fn step(cur: &ExactPoly, prev: &ExactPoly) -> ExactPoly {
    let (c, _) = cur.raw_parts();
    let (p, _) = prev.raw_parts();
    let mut next = Vec::with_capacity(c.len() + 1);
    next.push(BigInt::zero());
    next.extend(c.iter().map(|x| x << 1u8));
    for (i, x) in p.iter().enumerate() {
        next[i] -= x;
    }
    ExactPoly::from_int_coeffs(next)
}

impl Memo {
    fn get(&self, idx: usize) -> ExactPoly {
        if let Some(p) = self.table.read().expect("memo poisoned").get(idx) {
            return p.clone();
        }
        let mut table = self.table.write().expect("memo poisoned");
        if table.is_empty() {
            table.extend((self.seeds)());
        }
        while table.len() <= idx.min(MEMO_LIMIT) {
            let n = table.len();
            let next = step(&table[n - 1], &table[n - 2]);
            table.push(next);
        }
        if idx < table.len() {
            return table[idx].clone();
        }
        let n = table.len();
        let (mut prev, mut cur) = (table[n - 2].clone(), table[n - 1].clone());
        drop(table);
        for _ in n..=idx {
            let next = step(&cur, &prev);
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

/// `T_n`, the Chebyshev polynomial of the first kind.
pub fn cheb_t(n: usize) -> ExactPoly {
    T_MEMO.get(n)
}

/// `U_n`, the Chebyshev polynomial of the second kind, for `n >= -1` (`U_{-1} = 0`).
///
/// # Panics
/// If `n < -1`.
pub fn cheb_u(n: i64) -> ExactPoly {
    assert!(n >= -1, "U_n is defined for n >= -1, got {n}");
    U_MEMO.get((n + 1) as usize)
}

pub fn cheb(kind: ChebKind, n: usize) -> ExactPoly {
    match kind {
        ChebKind::FirstKind => cheb_t(n),
        ChebKind::SecondKind => cheb_u(n as i64),
    }
}

/// The monic Chebyshev polynomial `2 T_n(t/2)`, for `n >= 1`.
pub fn monic_cheb(n: usize) -> ExactPoly {
    assert!(n >= 1, "monic Chebyshev polynomials start at degree 1");
    let half = ExactPoly::from_coeffs(vec![
        BigRational::zero(),
        BigRational::new(BigInt::one(), BigInt::from(2)),
    ]);
    cheb_t(n).compose(&half).scale_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_kind_fixtures() {
        assert_eq!(cheb_t(0), ExactPoly::one());
        assert_eq!(cheb_t(3), ExactPoly::from_i64(&[0, -3, 0, 4]));
        assert_eq!(
            cheb_t(11),
            ExactPoly::from_i64(&[0, -11, 0, 220, 0, -1232, 0, 2816, 0, -2816, 0, 1024])
        );
    }

    #[test]
    fn second_kind_fixtures() {
        assert!(cheb_u(-1).is_zero());
        assert_eq!(cheb_u(0), ExactPoly::one());
        assert_eq!(cheb_u(1), ExactPoly::from_i64(&[0, 2]));
        assert_eq!(cheb_u(2), ExactPoly::from_i64(&[-1, 0, 4]));
    }

    #[test]
    fn monic_fixtures() {
        assert_eq!(monic_cheb(3), ExactPoly::from_i64(&[0, -3, 0, 1]));
        assert_eq!(monic_cheb(4), ExactPoly::from_i64(&[2, 0, -4, 0, 1]));
        assert_eq!(monic_cheb(5), ExactPoly::from_i64(&[0, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn beyond_memo_limit_continues_recurrence() {
        let n = MEMO_LIMIT + 3;
        let expect = step(&cheb_t(n - 1), &cheb_t(n - 2));
        assert_eq!(cheb_t(n), expect);
        assert_eq!(cheb_t(n).eval_i64(1), BigRational::one());
    }

    #[test]
    fn kind_dispatch() {
        assert_eq!(cheb(ChebKind::FirstKind, 4), cheb_t(4));
        assert_eq!(cheb(ChebKind::SecondKind, 4), cheb_u(4));
    }
}
