//! Exact integer helpers shared by the counting code.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial with signed arguments; zero outside `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn det2(m: &[[BigInt; 2]; 2]) -> BigInt {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

pub fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// `num / den` as a non-negative integer, or an error naming `formula`.
pub fn exact_quotient(formula: &'static str, num: &BigInt, den: &BigInt) -> Result<BigUint> {
    if den.is_zero() {
        return Err(Error::Inexact {
            formula,
            detail: "zero denominator".into(),
        });
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Inexact {
            formula,
            detail: format!("{num} is not divisible by {den}"),
        });
    }
    if q.is_negative() {
        return Err(Error::Inexact {
            formula,
            detail: format!("negative value {q}"),
        });
    }
    Ok(q.magnitude().clone())
}

pub fn to_nonnegative(formula: &'static str, v: BigInt) -> Result<BigUint> {
    if v.is_negative() {
        return Err(Error::Inexact {
            formula,
            detail: format!("negative value {v}"),
        });
    }
    Ok(v.magnitude().clone())
}

/// Lossy convenience for small counts in tests and tables.
pub fn as_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

/// All sequences of `parts` non-negative integers summing to `total`,
/// in lexicographic order.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(left: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(left - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}
