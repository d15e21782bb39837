//! Scalar fractional-calculus kernel.
//!
//! Everything here is a pure function: the gamma function, the
//! Riemann-Liouville derivative of a monomial `x^mu` with lower terminal 0,
//! the power convention used to evaluate `x^p` at arbitrary real points, and
//! the rules that pick the effective order of each partial derivative.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

/// Default residual threshold below which accelerated rules switch to order 1.
pub const DEFAULT_DELTA: f64 = 13.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FracError {
    #[error("gamma function has a pole at {0}")]
    GammaPole(f64),
    #[error("monomial exponent {0} is outside the domain mu > -1")]
    Domain(f64),
    #[error("power pole: 0 raised to negative exponent {exponent}")]
    PowerPole { exponent: f64 },
}

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// The gamma function `Γ(x)`.
///
/// Uses the Lanczos approximation on `x >= 0.5` and the reflection formula
/// `Γ(x)Γ(1-x) = π / sin(πx)` below that. Positive integers up to 20 are
/// returned as exact factorials.
pub fn gamma<T: Scalar>(x: T) -> Result<T, FracError> {
    if x.is_nan() {
        return Ok(x);
    }
    if x <= T::zero() && x.is_integer() {
        return Err(FracError::GammaPole(x.as_f64()));
    }
    if x.is_integer() && x <= T::lit(21.0) {
        let n = x.to_u32().unwrap_or(0);
        let mut acc = T::one();
        for k in 2..n {
            acc = acc * T::from_u32(k).unwrap_or_else(T::zero);
        }
        return Ok(acc);
    }
    if x < T::lit(0.5) {
        let pi = T::PI();
        let s = (pi * x).sin();
        return Ok(pi / (s * gamma(T::one() - x)?));
    }
    Ok(lanczos(x))
}

fn lanczos<T: Scalar>(x: T) -> T {
    let z = x - T::one();
    let mut series = T::lit(LANCZOS_COEF[0]);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series = series + T::lit(c) / (z + T::from_usize(i).unwrap_or_else(T::zero));
    }
    let half = T::lit(0.5);
    let t = z + T::lit(LANCZOS_G) + half;
    let sqrt_two_pi = (T::lit(2.0) * T::PI()).sqrt();
    // split the power so that t^(z + 0.5) does not overflow before e^-t scales it down
    let p = t.powf((z + half) * half);
    sqrt_two_pi * p * (p * (-t).exp()) * series
}

/// `1 / Γ(x)`, which is entire: zero at the non-positive integers.
pub fn recip_gamma<T: Scalar>(x: T) -> T {
    match gamma(x) {
        Ok(g) => T::one() / g,
        Err(_) => T::zero(),
    }
}

/// The result of differentiating a monomial: `coefficient · x^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonomialDerivative<T> {
    pub coefficient: T,
    pub exponent: T,
}

/// Riemann-Liouville derivative of order `alpha` of `x^mu` (lower terminal 0).
///
/// Returns `Γ(μ+1)/Γ(μ−α+1) · x^(μ−α)`. When `μ−α+1` is a non-positive
/// integer the coefficient is 0, the limit of `1/Γ` at its poles. Integer
/// orders are evaluated with exact falling/rising factorials so that
/// `alpha = 1` reproduces the ordinary power rule bit for bit.
pub fn rl_deriv_monomial<T: Scalar>(mu: T, alpha: T) -> Result<MonomialDerivative<T>, FracError> {
    if !(mu > -T::one()) {
        return Err(FracError::Domain(mu.as_f64()));
    }
    let exponent = mu - alpha;
    if alpha.is_integer() {
        let n = alpha.to_i64().unwrap_or(0);
        let mut coefficient = T::one();
        if n >= 0 {
            for j in 0..n {
                coefficient = coefficient * (mu - T::from_i64(j).unwrap_or_else(T::zero));
            }
        } else {
            for j in 1..=(-n) {
                coefficient = coefficient / (mu + T::from_i64(j).unwrap_or_else(T::zero));
            }
        }
        return Ok(MonomialDerivative { coefficient, exponent });
    }
    let coefficient = gamma(mu + T::one())? * recip_gamma(exponent + T::one());
    Ok(MonomialDerivative { coefficient, exponent })
}

/// `|base|^p`, the magnitude convention for real powers.
///
/// `0^p` is 0 for `p > 0`, and any base to the power 0 is 1.
pub fn real_power<T: Scalar>(base: T, p: T) -> Result<T, FracError> {
    if p == T::zero() {
        return Ok(T::one());
    }
    if base == T::zero() {
        return if p > T::zero() { Ok(T::zero()) } else { Err(FracError::PowerPole { exponent: p.as_f64() }) };
    }
    Ok(base.abs().powf(p))
}

/// Power used for evaluating terms: exact signed `base^p` for integer `p`,
/// [`real_power`] otherwise.
pub fn signed_power<T: Scalar>(base: T, p: T) -> Result<T, FracError> {
    if p.is_integer() && p.abs() <= T::lit(i32::MAX as f64) {
        if base == T::zero() && p < T::zero() {
            return Err(FracError::PowerPole { exponent: p.as_f64() });
        }
        return Ok(base.powi(p.to_i32().unwrap_or(0)));
    }
    real_power(base, p)
}

/// How the nominal order `alpha` is mapped to the order actually used for
/// the partial derivative in variable `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrderRule<T> {
    /// Always `alpha`.
    Constant { alpha: T },
    /// `alpha` unless `x_k == 0`, where it falls back to 1.
    Beta { alpha: T },
    /// `alpha` while `x_k != 0` and the residual norm exceeds `delta`, else 1.
    AlphaF { alpha: T, delta: T },
}

impl<T: Scalar> OrderRule<T> {
    pub fn constant(alpha: T) -> Self {
        OrderRule::Constant { alpha }
    }

    pub fn beta(alpha: T) -> Self {
        OrderRule::Beta { alpha }
    }

    pub fn alpha_f(alpha: T, delta: T) -> Self {
        OrderRule::AlphaF { alpha, delta }
    }

    pub fn alpha(&self) -> T {
        match *self {
            OrderRule::Constant { alpha } | OrderRule::Beta { alpha } | OrderRule::AlphaF { alpha, .. } => alpha,
        }
    }

    /// Same rule kind with a different nominal order.
    pub fn with_alpha(self, alpha: T) -> Self {
        match self {
            OrderRule::Constant { .. } => OrderRule::Constant { alpha },
            OrderRule::Beta { .. } => OrderRule::Beta { alpha },
            OrderRule::AlphaF { delta, .. } => OrderRule::AlphaF { alpha, delta },
        }
    }

    pub fn is_accelerated(&self) -> bool {
        matches!(self, OrderRule::AlphaF { .. })
    }
}

/// Effective order for one variable given its current value and the
/// residual norm `‖f(x)‖` at the current iterate.
pub fn effective_order<T: Scalar>(rule: &OrderRule<T>, x_k: T, residual_norm: T) -> T {
    match *rule {
        OrderRule::Constant { alpha } => alpha,
        OrderRule::Beta { alpha } => {
            if x_k.abs() != T::zero() {
                alpha
            } else {
                T::one()
            }
        }
        OrderRule::AlphaF { alpha, delta } => {
            if x_k.abs() != T::zero() && residual_norm > delta {
                alpha
            } else {
                T::one()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_small_factorials() {
        assert_eq!(gamma(1.0f64).unwrap(), 1.0);
        assert_eq!(gamma(5.0f64).unwrap(), 24.0);
        assert_eq!(gamma(2.0f32).unwrap(), 1.0);
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        let g = gamma(0.5f64).unwrap();
        assert!(rel(g, std::f64::consts::PI.sqrt()) < 1e-14);
    }

    #[test]
    fn gamma_poles() {
        for x in [0.0f64, -1.0, -2.0, -7.0] {
            assert!(matches!(gamma(x), Err(FracError::GammaPole(_))));
        }
        assert_eq!(recip_gamma(0.0f64), 0.0);
        assert_eq!(recip_gamma(-3.0f64), 0.0);
    }

    #[test]
    fn gamma_negative_non_integer() {
        // Γ(-0.5) = -2√π
        let g = gamma(-0.5f64).unwrap();
        assert!(rel(g, -2.0 * std::f64::consts::PI.sqrt()) < 1e-13);
    }

    #[test]
    fn rl_constant_nonzero_for_fractional_order() {
        let d = rl_deriv_monomial(0.0f64, 0.5).unwrap();
        assert!((d.coefficient - 0.564_189_583_547_756_3).abs() < 1e-12);
        assert_eq!(d.exponent, -0.5);
    }

    #[test]
    fn rl_first_order_recovers_power_rule() {
        let d = rl_deriv_monomial(1.0f64, 1.0).unwrap();
        assert_eq!(d.coefficient, 1.0);
        assert_eq!(d.exponent, 0.0);
        let c = rl_deriv_monomial(0.0f64, 1.0).unwrap();
        assert_eq!(c.coefficient, 0.0);
        for mu in [1.0f64, 2.0, 3.0] {
            assert!((rl_deriv_monomial(mu, 1.0).unwrap().coefficient - mu).abs() < 1e-12);
        }
    }

    #[test]
    fn rl_pole_yields_zero_coefficient() {
        // μ − α + 1 = −1
        let d = rl_deriv_monomial(0.5f64, 2.5).unwrap();
        assert_eq!(d.coefficient, 0.0);
    }

    #[test]
    fn rl_rejects_domain() {
        assert!(matches!(rl_deriv_monomial(-1.0f64, 0.5), Err(FracError::Domain(_))));
        assert!(matches!(rl_deriv_monomial(-2.0f64, 0.5), Err(FracError::Domain(_))));
    }

    #[test]
    fn rl_negative_integer_order_integrates() {
        // order -1 on x^2 gives x^3 / 3
        let d = rl_deriv_monomial(2.0f64, -1.0).unwrap();
        assert!((d.coefficient - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(d.exponent, 3.0);
    }

    #[test]
    fn real_power_conventions() {
        assert!((real_power(2.0f64, 0.5).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(real_power(-2.0f64, 0.0).unwrap(), 1.0);
        assert!((real_power(-3.0f64, 0.5).unwrap() - 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(real_power(0.0f64, 1.5).unwrap(), 0.0);
        assert!(real_power(0.0f64, -0.5).is_err());
    }

    #[test]
    fn signed_power_keeps_sign_for_integers() {
        assert_eq!(signed_power(-2.0f64, 3.0).unwrap(), -8.0);
        assert_eq!(signed_power(-2.0f64, 2.0).unwrap(), 4.0);
        assert!((signed_power(-4.0f64, 0.5).unwrap() - 2.0).abs() < 1e-15);
        assert!(signed_power(0.0f64, -1.0).is_err());
    }

    #[test]
    fn order_rules() {
        let af = OrderRule::alpha_f(0.89825f64, 13.0);
        assert_eq!(effective_order(&af, 51.56, 6.66), 1.0);
        assert_eq!(effective_order(&af, 255.39, 197.0), 0.89825);
        assert_eq!(effective_order(&af, 0.0, 197.0), 1.0);
        assert_eq!(effective_order(&OrderRule::beta(0.5f64), 0.0, 1e9), 1.0);
        assert_eq!(effective_order(&OrderRule::beta(0.5f64), -1.0, 0.0), 0.5);
        assert_eq!(effective_order(&OrderRule::constant(0.5f64), 0.0, 0.0), 0.5);
    }

    proptest! {
        #[test]
        fn gamma_recurrence(x in 0.5f64..10.0) {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            prop_assert!(((lhs - rhs) / lhs).abs() <= 1e-12);
        }

        #[test]
        fn rl_exponent_is_exact(mu in -0.99f64..6.0, alpha in -2.0f64..3.0) {
            let d = rl_deriv_monomial(mu, alpha).unwrap();
            prop_assert_eq!(d.exponent, mu - alpha);
        }

        #[test]
        fn unit_order_is_fixed_point(x in -10.0f64..10.0, r in 0.0f64..100.0, delta in 0.0f64..50.0) {
            for rule in [OrderRule::constant(1.0), OrderRule::beta(1.0), OrderRule::alpha_f(1.0, delta)] {
                prop_assert_eq!(effective_order(&rule, x, r), 1.0);
            }
        }

        #[test]
        fn alpha_f_matches_beta_above_threshold(
            alpha in 0.05f64..1.95, x in 0.01f64..100.0, sign in any::<bool>(), delta in 0.0f64..20.0, extra in 1e-6f64..100.0
        ) {
            let x = if sign { x } else { -x };
            let r = delta + extra;
            prop_assert_eq!(
                effective_order(&OrderRule::alpha_f(alpha, delta), x, r),
                effective_order(&OrderRule::beta(alpha), x, r)
            );
        }
    }
}
