//! Exact rational and prime-field linear algebra.

mod exact;
mod modular;

pub use exact::{rank_exact, ExactMatrix};
pub use modular::{is_prime, kernel_basis_mod, rank_mod, ModMatrix, MAX_MODULUS};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in machine arithmetic for the small arguments used in indexing.
/// Saturates at `u64::MAX`.
pub(crate) fn binom_u64(n: u64, k: u64) -> u64 {
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

/// Determinant of the 2x2 system relating the per-subset sums to `a0` and `a1`:
/// `C(v-4, k-4) - C(v-3, k-3)`, which equals `-C(v-4, k-3)`.
pub fn cramer_determinant(v: i64, k: i64) -> Result<BigInt> {
    if !(4 <= k && k < v) {
        return domain(format!("cramer_determinant needs 4 <= k <= v-1, got v={v}, k={k}"));
    }
    let delta = binomial(v - 4, k - 4) - binomial(v - 3, k - 3);
    let closed = -binomial(v - 4, k - 3);
    assert_eq!(delta, closed, "determinant identity failed at v={v}, k={k}");
    assert!(!delta.is_zero(), "determinant vanished at v={v}, k={k}");
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, -1), BigInt::zero());
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binom_u64(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn cramer_values() {
        assert_eq!(cramer_determinant(6, 4).unwrap(), BigInt::from(-2));
        assert_eq!(cramer_determinant(10, 5).unwrap(), BigInt::from(-15));
        for v in 5..=21 {
            for k in 4..v {
                assert!(!cramer_determinant(v, k).unwrap().is_zero());
            }
        }
        assert!(cramer_determinant(6, 3).is_err());
        assert!(cramer_determinant(6, 6).is_err());
    }
}
