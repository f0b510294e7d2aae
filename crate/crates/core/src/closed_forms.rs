//! Closed-form counts: the multivariate determinant formula, the
//! fixed-point-free count `b_n`, and the auxiliary path counts `u_n`, `s_n`
//! and disjoint diagonal pairs.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_i, det2, det3, exact_quotient, factorial};
use crate::error::{Error, Result};
use crate::perm::ParameterProfile;
use crate::walks;

/// `q = n+p−k`, `s = n−k−r`, `t = k+r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedParams {
    pub q: i64,
    pub s: i64,
    pub t: i64,
}

impl DerivedParams {
    pub fn of(profile: &ParameterProfile) -> Self {
        let (n, k, p, r) = (
            i64::from(profile.n),
            i64::from(profile.k),
            i64::from(profile.p),
            i64::from(profile.r),
        );
        Self {
            q: n + p - k,
            s: n - k - r,
            t: k + r,
        }
    }
}

/// Number of involutive Baxter permutations with profile `(n, k, p, r)`,
/// `n ≥ 1`:
///
/// ```text
///   C(p+r, r) · C(n+p−1, k)² · C(n, t)     | q(q+1)  q(q−1)   s(s−1) |
///   ─────────────────────────────────── ·  | k(q+1)  (k+1)q   s(t+1) |
///      n · q² · (q+1) · (k+1) · (t+1)      | k(k−1)  k(k+1)   t(t+1) |
/// ```
///
/// Infeasible profiles (`k > n+p−1` or `r > n−k`) give 0.
pub fn a_multi(profile: &ParameterProfile) -> Result<BigUint> {
    if profile.n == 0 {
        return Err(Error::Contract(
            "the multivariate formula needs n >= 1".into(),
        ));
    }
    if !walks::is_feasible(profile) {
        return Ok(BigUint::zero());
    }
    let DerivedParams { q, s, t } = DerivedParams::of(profile);
    let (n, k, p, r) = (
        i64::from(profile.n),
        i64::from(profile.k),
        i64::from(profile.p),
        i64::from(profile.r),
    );
    let e = |v: i64| BigInt::from(v);
    let matrix = [
        [e(q * (q + 1)), e(q * (q - 1)), e(s * (s - 1))],
        [e(k * (q + 1)), e((k + 1) * q), e(s * (t + 1))],
        [e(k * (k - 1)), e(k * (k + 1)), e(t * (t + 1))],
    ];
    let c1 = binomial_i(n + p - 1, k);
    let numerator: BigInt =
        BigInt::from(binomial_i(p + r, r) * &c1 * &c1 * binomial_i(n, t)) * det3(&matrix);
    let denominator = e(n) * e(q) * e(q) * e(q + 1) * e(k + 1) * e(t + 1);
    exact_quotient("multivariate count", &numerator, &denominator)
}

/// `b_n = 3·2^{n−1}·C(2n, n) / ((n+1)(n+2))`, the number of fixed-point-free
/// involutive Baxter permutations of size `2n`.
pub fn b_fpf(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Contract("b_n needs n >= 1".into()));
    }
    let n64 = u64::from(n);
    let numerator = BigUint::from(3u32) * (BigUint::one() << (n - 1)) * binomial(2 * n64, n64);
    let denominator = BigUint::from((n64 + 1) * (n64 + 2));
    exact_quotient(
        "fixed-point-free count",
        &numerator.into(),
        &denominator.into(),
    )
}

/// `u_n = 2^{n−1}·(2n)!/(n!(n+1)!)`.
pub fn u_count(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Contract("u_n needs n >= 1".into()));
    }
    let n64 = u64::from(n);
    let numerator = (BigUint::one() << (n - 1)) * factorial(2 * n64);
    let denominator = factorial(n64) * factorial(n64 + 1);
    exact_quotient("u_n", &numerator.into(), &denominator.into())
}

/// `s_n = 2^n·(2n−1)!/((n−2)!(n+2)!)` for `n ≥ 2`, and `s_1 = 0`.
pub fn s_count(n: u32) -> Result<BigUint> {
    match n {
        0 => Err(Error::Contract("s_n needs n >= 1".into())),
        1 => Ok(BigUint::zero()),
        _ => {
            let n64 = u64::from(n);
            let numerator = (BigUint::one() << n) * factorial(2 * n64 - 1);
            let denominator = factorial(n64 - 2) * factorial(n64 + 2);
            exact_quotient("s_n", &numerator.into(), &denominator.into())
        }
    }
}

pub fn catalan(n: u32) -> BigUint {
    let n64 = u64::from(n);
    binomial(2 * n64, n64) / (n64 + 1)
}

/// Number of `steps`-step diagonal paths (±1 per step) from `from` to `to`.
fn diagonal_paths(steps: i64, from: i64, to: i64) -> BigUint {
    let d = to - from;
    if (steps + d) % 2 != 0 {
        return BigUint::zero();
    }
    binomial_i(steps, (steps + d) / 2)
}

/// Vertex-disjoint pairs of `(n−1)`-step diagonal paths starting `start_gap`
/// apart and ending `end_gap` apart (gaps in undoubled units), summed over
/// end positions with a 2×2 LGV determinant each.
pub fn disjoint_pair_count_lgv(n: u32, start_gap: u32, end_gap: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Contract("pair counts need n >= 1".into()));
    }
    let steps = i64::from(n) - 1;
    let (b, g) = (2 * i64::from(start_gap), 2 * i64::from(end_gap));
    let mut total = BigInt::zero();
    for e in -steps..=steps {
        let m = [
            [
                BigInt::from(diagonal_paths(steps, 0, e)),
                BigInt::from(diagonal_paths(steps, 0, e + g)),
            ],
            [
                BigInt::from(diagonal_paths(steps, b, e)),
                BigInt::from(diagonal_paths(steps, b, e + g)),
            ],
        ];
        total += det2(&m);
    }
    exact_quotient("pair LGV sum", &total, &BigInt::one())
}

/// Closed form for disjoint diagonal pairs ending at distance 1: the Catalan
/// number for start distance 1 and `4(2n−1)!/((n−2)!(n+2)!)` for start
/// distance 2. The LGV sum is evaluated as a cross-check.
pub fn disjoint_pair_count(n: u32, start_gap: u32, end_gap: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Contract("pair counts need n >= 1".into()));
    }
    if end_gap != 1 || !(1..=2).contains(&start_gap) {
        return Err(Error::Contract(format!(
            "closed form covers gaps 1->1 and 2->1, got {start_gap}->{end_gap}"
        )));
    }
    let n64 = u64::from(n);
    let closed = match (start_gap, n) {
        (1, _) => catalan(n),
        (_, 1) => BigUint::zero(),
        _ => exact_quotient(
            "pair count",
            &(BigInt::from(4) * BigInt::from(factorial(2 * n64 - 1))),
            &BigInt::from(factorial(n64 - 2) * factorial(n64 + 2)),
        )?,
    };
    let lgv = disjoint_pair_count_lgv(n, start_gap, end_gap)?;
    if closed != lgv {
        return Err(Error::Inexact {
            formula: "pair count",
            detail: format!("closed form {closed} disagrees with LGV sum {lgv}"),
        });
    }
    Ok(closed)
}

/// Profiles with `n ≥ 1` and `2n + p = size` that can carry a nonzero count.
pub fn feasible_profiles(size: u32) -> Vec<ParameterProfile> {
    let mut out = Vec::new();
    for n in 1..=size / 2 {
        let p = size - 2 * n;
        for k in 0..n + p {
            for r in 0..=n - k.min(n) {
                let prof = ParameterProfile::new(n, k, p, r);
                if walks::is_feasible(&prof) {
                    out.push(prof);
                }
            }
        }
    }
    out
}
