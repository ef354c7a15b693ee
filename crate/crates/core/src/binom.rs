//! Binomial coefficients, exact in `u64` for the search machinery and in
//! `BigUint` for formula evaluation (audit grids overflow 64 bits quickly).

use num::BigUint;

/// `C(n, k)` as an exact `u64`, or `None` on overflow.
///
/// The product is accumulated in `u128`; each intermediate division is exact
/// because `result * (n-k+1) * ... * (n-k+i)` is divisible by `i!`.
pub fn binom_checked(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result.checked_mul((n - k + i) as u128)? / i as u128;
    }
    u64::try_from(result).ok()
}

/// `C(n, k)` as an exact `u64`; panics on overflow.
///
/// All desk-scale call sites (ranks, incidence sizes) are far below the
/// overflow range; formula evaluation goes through [`binom_big`] instead.
pub fn binom(n: u64, k: u64) -> u64 {
    binom_checked(n, k).unwrap_or_else(|| panic!("C({n},{k}) overflows u64"))
}

/// `C(n, k)` in arbitrary precision.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut result = BigUint::from(1u32);
    for i in 1..=k {
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(5, 3), 10);
        assert_eq!(binom(5, 6), 0);
        assert_eq!(binom(20, 3), 1140);
        assert_eq!(binom(19, 3), 969);
    }

    #[test]
    fn pascal_identity_matches_big() {
        for n in 0..40u64 {
            for k in 0..=n {
                let lhs = binom_big(n, k);
                let rhs = if k == 0 || k == n {
                    BigUint::from(1u32)
                } else {
                    binom_big(n - 1, k - 1) + binom_big(n - 1, k)
                };
                assert_eq!(lhs, rhs, "C({n},{k})");
                assert_eq!(BigUint::from(binom(n, k)), lhs);
            }
        }
    }

    #[test]
    fn overflow_reported() {
        assert!(binom_checked(70, 35).is_none());
        assert!(binom_checked(128, 3).is_some());
    }
}
