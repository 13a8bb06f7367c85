//! Shared combinatorial numerics: exact 128-bit binomials and falling
//! factorials for cost tables, log-domain binomials for probability sums.

use statrs::function::gamma::ln_gamma;

/// ln C(n, k), computed via log-gamma. Returns -inf for k outside 0..=n.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_gamma((n + 1) as f64) - ln_gamma((k + 1) as f64) - ln_gamma((n - k + 1) as f64)
}

/// Exact C(n, k) as i128. Panics on overflow; safe for n <= 128.
pub fn binomial_i128(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .expect("binomial_i128 overflow");
        acc /= (i + 1) as i128;
    }
    acc
}

/// Falling factorial x (x-1) ... (x-terms+1) with 128-bit accumulation.
/// Zero terms yields 1; any non-positive factor makes the product 0 or
/// follows the integers literally (callers keep x >= 0).
pub fn falling_factorial_i128(x: i128, terms: u32) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..terms as i128 {
        acc = acc
            .checked_mul(x - i)
            .expect("falling_factorial_i128 overflow");
        if acc == 0 {
            return 0;
        }
    }
    acc
}

/// Exact n! as i128 for small n (factorials of clause localities).
pub fn factorial_i128(n: u32) -> i128 {
    (1..=n as i128).product()
}

/// C(n, k) / 2^n as f64: exact integer path for small n, log-domain above.
pub fn binomial_weight(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= 120 {
        binomial_i128(n, k) as f64 / 2f64.powi(n as i32)
    } else {
        (ln_binomial(n, k) - n as f64 * std::f64::consts::LN_2).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_exact_small_cases() {
        assert_eq!(binomial_i128(0, 0), 1);
        assert_eq!(binomial_i128(5, 2), 10);
        assert_eq!(binomial_i128(10, 10), 1);
        assert_eq!(binomial_i128(10, 11), 0);
        assert_eq!(binomial_i128(52, 5), 2_598_960);
    }

    #[test]
    fn binomial_log_matches_exact() {
        for n in [1u64, 7, 30, 100] {
            for k in 0..=n {
                let exact = binomial_i128(n, k) as f64;
                let vialn = ln_binomial(n, k).exp();
                assert!((vialn - exact).abs() / exact < 1e-10, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn falling_factorial_basics() {
        assert_eq!(falling_factorial_i128(6, 3), 120);
        assert_eq!(falling_factorial_i128(4, 0), 1);
        assert_eq!(falling_factorial_i128(2, 3), 0);
        assert_eq!(factorial_i128(5), 120);
        assert_eq!(factorial_i128(0), 1);
    }

    #[test]
    fn binomial_weight_sums_to_one() {
        for n in [12u64, 121, 300] {
            let total: f64 = (0..=n).map(|k| binomial_weight(n, k)).sum();
            assert!((total - 1.0).abs() < 1e-10, "n={n} total={total}");
        }
    }
}
