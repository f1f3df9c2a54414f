//! Integer polynomial multiplication.
//!
//! Small or lopsided products use the schoolbook method. Large balanced
//! products go through Kronecker substitution: both operands are packed into
//! a single big integer at `X = 2^slot`, multiplied once, and the product's
//! signed digits are read back out. `slot` is chosen so that no coefficient of
//! the product can overflow its digit.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

const KRONECKER_MIN_LEN: usize = 24;

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) >= KRONECKER_MIN_LEN {
        kronecker(a, b)
    } else {
        schoolbook(a, b)
    }
}

pub(crate) fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn kronecker(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let bits_a = max_bits(a);
    let bits_b = max_bits(b);
    if bits_a == 0 || bits_b == 0 {
        return vec![BigInt::zero(); a.len() + b.len() - 1];
    }
    let terms = a.len().min(b.len()) as u64;
    let slot = bits_a + bits_b + (64 - terms.leading_zeros() as u64) + 2;
    let count = a.len() + b.len() - 1;
    let product = pack(a, slot) * pack(b, slot);
    unpack(&product, slot, count)
}

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn or_shifted(target: &mut [u32], digits: &[u32], bit_offset: u64) {
    let word = (bit_offset / 32) as usize;
    let shift = (bit_offset % 32) as u32;
    for (idx, &d) in digits.iter().enumerate() {
        target[word + idx] |= d << shift;
        if shift > 0 {
            target[word + idx + 1] |= d >> (32 - shift);
        }
    }
}

fn pack(coeffs: &[BigInt], slot: u64) -> BigInt {
    let words = ((coeffs.len() as u64 * slot) / 32 + 2) as usize;
    let mut pos = vec![0u32; words];
    let mut neg = vec![0u32; words];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let digits = c.magnitude().to_u32_digits();
        let target = if c.is_positive() { &mut pos } else { &mut neg };
        or_shifted(target, &digits, i as u64 * slot);
    }
    BigInt::from(BigUint::new(pos)) - BigInt::from(BigUint::new(neg))
}

/// Reads `len` bits starting at bit `start` out of a little-endian digit slice.
fn extract_bits(digits: &[u32], start: u64, len: u64) -> BigUint {
    let words = len.div_ceil(32) as usize;
    let mut out = vec![0u32; words];
    let at = |i: usize| digits.get(i).copied().unwrap_or(0);
    for (w, slot) in out.iter_mut().enumerate() {
        let bit = start + 32 * w as u64;
        let idx = (bit / 32) as usize;
        let shift = (bit % 32) as u32;
        let mut val = at(idx) >> shift;
        if shift > 0 {
            val |= at(idx + 1) << (32 - shift);
        }
        *slot = val;
    }
    let tail = (len % 32) as u32;
    if tail != 0 {
        if let Some(last) = out.last_mut() {
            *last &= (1u32 << tail) - 1;
        }
    }
    BigUint::new(out)
}

fn unpack(value: &BigInt, slot: u64, count: usize) -> Vec<BigInt> {
    // Shift every balanced digit into [1, 2^slot) so the sum is a plain base-2^slot number.
    let words = ((count as u64 * slot) / 32 + 2) as usize;
    let mut bias = vec![0u32; words];
    for k in 0..count as u64 {
        let bit = k * slot + slot - 1;
        bias[(bit / 32) as usize] |= 1 << (bit % 32);
    }
    let bias = BigUint::new(bias);
    let shifted = value + BigInt::from(bias);
    debug_assert!(shifted.sign() != Sign::Minus);
    let digits = shifted.magnitude().to_u32_digits();
    let half = BigInt::from(1u8) << (slot - 1);
    (0..count as u64)
        .map(|k| BigInt::from(extract_bits(&digits, k * slot, slot)) - &half)
        .collect()
}
