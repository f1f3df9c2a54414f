use num_integer::Integer;

use super::Triple;
use crate::error::{Error, Result};

/// Largest of the three pairwise gcds.
pub fn pgcd(t: Triple) -> u64 {
    t.i.gcd(&t.j).max(t.i.gcd(&t.k)).max(t.j.gcd(&t.k))
}

/// `(T_i, T_j, T_k)` is an embedding iff `pgcd = 1` or one degree is 1.
pub fn is_embedding(t: Triple) -> bool {
    pgcd(t) == 1 || t.contains_one()
}

/// Extended Euclid: `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

fn require_coprime(i: u64, j: u64) -> Result<()> {
    if i == 0 || j == 0 || i.gcd(&j) != 1 {
        return Err(Error::NotCoprime(i, j));
    }
    Ok(())
}

/// Membership in the semigroup `<i, j>` generated by `i` and `j`
/// (non-negative combinations, not both zero).
pub fn in_semigroup(i: u64, j: u64, k: u64) -> bool {
    k > 0 && (0..=k / i).any(|a| (k - a * i).is_multiple_of(j))
}

/// Writes `k = a i + b j` with positive `a, b`, choosing the smallest `a`.
pub fn semigroup_member(i: u64, j: u64, k: u64) -> Result<Option<(u64, u64)>> {
    require_coprime(i, j)?;
    Ok((1..=k / i).find_map(|a| {
        let rest = k.checked_sub(a * i)?;
        (rest > 0 && rest % j == 0).then_some((a, rest / j))
    }))
}

/// Frobenius number `ij - i - j` of a coprime pair with `i, j >= 2`.
pub fn frobenius(i: u64, j: u64) -> Result<u64> {
    require_coprime(i, j)?;
    if i < 2 || j < 2 {
        return Err(Error::InvalidArgument(format!("frobenius needs i, j >= 2, got ({i}, {j})")));
    }
    Ok(i * j - i - j)
}

/// The remnant of a coprime pair: all `k > max(i, j)` outside `<i, j>` with
/// `pgcd(i, j, k) = 1`, ascending.
pub fn remnant(i: u64, j: u64) -> Result<Vec<u64>> {
    require_coprime(i, j)?;
    if i < 2 || j < 2 {
        return Err(Error::InvalidArgument(format!("remnant needs i, j >= 2, got ({i}, {j})")));
    }
    let top = i * j - i - j;
    Ok((i.max(j) + 1..=top)
        .filter(|&k| !in_semigroup(i, j, k) && pgcd(Triple::new(i, j, k)) == 1)
        .collect())
}
