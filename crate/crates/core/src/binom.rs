//! Binomial coefficients in the two conventions used across the crate, and
//! Macaulay representations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `x (x-1) ... (x-k+1) / k!`, the binomial polynomial evaluated at any integer.
pub fn poly_binom(x: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Binomial with `binom(a, b) = 0` whenever `b < 0` or `a < b`.
pub fn binom(a: &BigInt, b: i64) -> BigInt {
    if b < 0 || *a < BigInt::from(b) {
        return BigInt::zero();
    }
    poly_binom(a, b as u64)
}

pub fn binom_i(a: i64, b: i64) -> BigInt {
    binom(&BigInt::from(a), b)
}

/// `binom(n, k)` for non-negative machine integers, saturating at `u64::MAX`.
pub fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The `t`-th Macaulay representation `a = sum binom(k_i, i)`, `i = t, t-1, ...`,
/// as pairs `(k_i, i)` with `k_t > k_{t-1} > ... >= i >= 1`.
pub fn macaulay_rep(a: &BigInt, t: u64) -> Vec<(BigInt, u64)> {
    let mut rest = a.clone();
    let mut out = Vec::new();
    let mut i = t;
    while rest.is_positive() && i >= 1 {
        // Largest k with binom(k, i) <= rest.
        let mut lo = BigInt::from(i);
        let mut hi = BigInt::from(i);
        while poly_binom(&hi, i) <= rest {
            hi = &hi * 2 + 1;
        }
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) / 2;
            if poly_binom(&mid, i) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= poly_binom(&lo, i);
        out.push((lo, i));
        i -= 1;
    }
    out
}

/// `a^<t>`: the largest value the Hilbert function may take in degree `t + 1`
/// after `a` in degree `t`.
pub fn macaulay_bound(a: &BigInt, t: u64) -> BigInt {
    macaulay_rep(a, t).iter().map(|(k, i)| poly_binom(&(k + 1), i + 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(poly_binom(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binom_i(-2, 2), BigInt::zero());
        assert_eq!(binom_i(5, 2), BigInt::from(10));
        assert_eq!(binom_i(3, -1), BigInt::zero());
        assert_eq!(binom_i(0, 0), BigInt::one());
        assert_eq!(binom_u64(10, 3), 120);
    }

    #[test]
    fn macaulay() {
        // 5 = binom(3,2) + binom(2,1), so 5^<2> = binom(4,3) + binom(3,2) = 7.
        assert_eq!(macaulay_rep(&BigInt::from(5), 2), vec![(BigInt::from(3), 2), (BigInt::from(2), 1)]);
        assert_eq!(macaulay_bound(&BigInt::from(5), 2), BigInt::from(7));
        // Polynomial ring in 3 variables grows maximally.
        assert_eq!(macaulay_bound(&BigInt::from(6), 2), BigInt::from(10));
    }
}
