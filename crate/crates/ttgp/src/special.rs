//! Scalar special functions used by the closed-form kernel expectations.
//!
//! The propagation integrals of [`crate::tier2`] involve products of the form
//! `exp(a)·Φ(b)` where `a` can be far above 700 while `Φ(b)` underflows, even
//! though the product is a modest number in `(0, 1]`. All such products are
//! therefore routed through the *scaled complementary error function*
//! `erfcx(x) = exp(x²)·erfc(x)`, which stays in a representable range for all
//! arguments that arise.

use std::f64::consts::FRAC_1_SQRT_2;

/// `1/√π`, not provided by `std::f64::consts`.
const FRAC_1_SQRT_PI: f64 = 0.5641895835477563;

/// Scaled complementary error function `erfcx(x) = exp(x²)·erfc(x)`.
///
/// * For `0 ≤ x ≤ 25` the definition is evaluated directly; both factors are
///   representable there and `libm::erfc` is accurate to ~1 ulp.
/// * For `x > 25` the direct product degrades (`erfc` approaches the
///   subnormal range near `x ≈ 26.6`), so the asymptotic expansion
///   `erfcx(x) ≈ 1/(x√π) · Σₖ (−1)ᵏ (2k−1)!! / (2x²)ᵏ` is used; at `x = 25`
///   the truncation error after eight terms is below 1e−18.
/// * For `x < 0`, the reflection `erfcx(−x) = 2·exp(x²) − erfcx(x)` applies
///   and overflows to `+∞` for `x ≲ −26.6`, faithfully mirroring the growth
///   of the underlying function.
pub fn erfcx(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 * (x * x).exp() - erfcx(-x);
    }
    if x > 25.0 {
        let inv2x2 = 1.0 / (2.0 * x * x);
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=8u32 {
            term *= -(f64::from(2 * k - 1)) * inv2x2;
            sum += term;
        }
        return sum * FRAC_1_SQRT_PI / x;
    }
    (x * x).exp() * libm::erfc(x)
}

/// Standard normal cumulative distribution function `Φ(x)`.
pub fn norm_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Standard normal density `φ(x)`.
pub fn norm_pdf(x: f64) -> f64 {
    const FRAC_1_SQRT_2PI: f64 = 0.3989422804014327;
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Stable evaluation of `½·erfcx(q/√2)·exp(−θ²/2)`.
///
/// This is the building block of the exponential-kernel expectations: every
/// term of the form `exp(a)·Φ(b)` appearing there can be rewritten as
/// `phi_term(q, θ)` with `|q| ≤ |θ|` whenever `q < 0` (see `MATH_NOTES.md`).
/// For `q ≥ 0` the direct product is finite and accurate. For `q < 0` the
/// reflection of [`erfcx`] is applied *after* absorbing `exp(−θ²/2)`, giving
/// `exp((q²−θ²)/2) − phi_term(−q, θ)` whose exponent is non-positive under
/// the call-site guarantee, so no intermediate overflows.
pub fn phi_term(q: f64, theta: f64) -> f64 {
    debug_assert!(
        q >= 0.0 || q.abs() <= theta.abs() + 1e-9,
        "phi_term reflection requires |q| <= |theta| (q={q}, theta={theta})"
    );
    let direct = 0.5 * erfcx(q.abs() * FRAC_1_SQRT_2) * (-0.5 * theta * theta).exp();
    if q >= 0.0 {
        direct
    } else {
        (0.5 * (q * q - theta * theta)).exp() - direct
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Reference values computed with 40-digit arithmetic (mpmath:
    /// `exp(x~2)*erfc(x)`), covering both branches and the switch point.
    const ERFCX_REFERENCE: &[(f64, f64)] = &[
        (-6.0, 8622463094230390.4),
        (-3.0, 16205.988853999587),
        (-1.5, 18.653886256262734),
        (-0.5, 1.9523604891825571),
        (0.0, 1.0),
        (0.25, 0.77034654773099674),
        (std::f64::consts::FRAC_1_SQRT_2, 0.52315658373024671),
        (1.0, 0.42758357615580700),
        (2.0, 0.25539567631050574),
        (5.0, 0.11070463773306863),
        (9.5, 0.059064678352563891),
        (10.5, 0.053491899746564117),
        (26.0, 0.021683584850562907),
        (27.0, 0.020881607990420941),
        (50.0, 0.011281536265323773),
        (1e4, 5.6418958072680841e-5),
    ];

    #[test]
    fn erfcx_matches_high_precision_reference() {
        for &(x, want) in ERFCX_REFERENCE {
            assert_relative_eq!(erfcx(x), want, max_relative = 1e-13);
        }
    }

    #[test]
    fn erfcx_is_continuous_at_branch_switch() {
        // The direct product and the asymptotic series must agree near x=25.
        let lo = erfcx(25.0 - 1e-9);
        let hi = erfcx(25.0 + 1e-9);
        assert_relative_eq!(lo, hi, max_relative = 1e-12);
    }

    #[test]
    fn erfcx_overflow_for_large_negative_argument() {
        assert!(erfcx(-27.0).is_infinite());
    }

    #[test]
    fn norm_cdf_basics() {
        assert_relative_eq!(norm_cdf(0.0), 0.5, max_relative = 1e-15);
        assert_relative_eq!(norm_cdf(-1.0), 0.15865525393145707, max_relative = 1e-13);
        assert_relative_eq!(norm_cdf(1.0) + norm_cdf(-1.0), 1.0, max_relative = 1e-14);
        assert!(norm_cdf(-40.0) >= 0.0 && norm_cdf(-40.0) < 1e-300);
    }

    #[test]
    fn phi_term_agrees_with_naive_product_in_safe_range() {
        // exp(a)·Φ(b) with a = (q²−θ²)/2 ⇒ phi_term(q, θ) = exp(a)·Φ(−q)... the
        // identity under test: ½ erfcx(q/√2) e^{−θ²/2} = e^{(q²−θ²)/2} Φ(−q).
        for &(q, theta) in &[(0.3, 1.0), (2.0, 3.0), (0.0, 0.5), (-1.0, 2.0), (-3.0, 4.0)] {
            let naive = (0.5 * (q * q - theta * theta)).exp() * norm_cdf(-q);
            assert_relative_eq!(phi_term(q, theta), naive, max_relative = 1e-12);
        }
    }

    #[test]
    fn phi_term_survives_extreme_theta() {
        // θ = 1e5 with q = −θ + 2: naive evaluation would form exp(~5e9)·Φ(...).
        let theta = 1e5;
        let q = -theta + 2.0;
        let v = phi_term(q, theta);
        assert!(v.is_finite() && v >= 0.0, "got {v}");
    }
}
