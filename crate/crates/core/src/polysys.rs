//! Vector functions built from real-power terms and their (fractional)
//! Jacobians.
//!
//! A [`PowerTermSystem`] has `n` components, each a sum of
//! `coefficient · Π_k x_k^{e_k}` terms. Because the Riemann-Liouville
//! derivative of a monomial has a closed form, both the classical Jacobian
//! and the fractional Jacobian of any order are exact for these systems.
//!
//! The partial derivative of order `o` in variable `k` treats every factor in
//! the other variables as a constant multiplier, and acts on the term's own
//! `x_k^{e_k}`. A term with `e_k = 0` is a constant in `x_k`, whose fractional
//! derivative is `x_k^{-o} / Γ(1 - o)`, not zero.
//!
//! [`AffineSystem`] is the special case `c + M·x` used to build the
//! quasi-Newton linearizations `a·f(x_i) + f'(x_i)(x - b·x_i)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fracops::{effective_order, rl_deriv_monomial, signed_power, FracError, OrderRule};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Frac(#[from] FracError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("component {component}, term {term}: exponent {exponent} must be > -1")]
    InvalidExponent { component: usize, term: usize, exponent: f64 },
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Model(String),
}

/// A vector function `f: R^n -> R^n` the solvers can iterate on.
pub trait System<T: Scalar> {
    fn dim(&self) -> usize;

    fn eval(&self, x: &[T]) -> Result<Vec<T>, SystemError>;

    /// Classical Jacobian; defaults to central differences.
    fn jacobian(&self, x: &[T]) -> Result<Matrix<T>, SystemError> {
        finite_difference_jacobian(|v| self.eval(v), x)
    }

    /// Exact fractional Jacobian, when the representation supports one.
    fn fractional_jacobian(
        &self,
        _x: &[T],
        _rule: &OrderRule<T>,
        _residual_norm: T,
    ) -> Option<Result<Matrix<T>, SystemError>> {
        None
    }
}

/// Relative step used by the finite-difference Jacobian fallback.
pub const FD_RELATIVE_STEP: f64 = 1e-7;

/// Central-difference Jacobian with step `1e-7 · max(|x_k|, 1)`.
pub fn finite_difference_jacobian<T, F>(f: F, x: &[T]) -> Result<Matrix<T>, SystemError>
where
    T: Scalar,
    F: Fn(&[T]) -> Result<Vec<T>, SystemError>,
{
    let n = x.len();
    let mut jac = Matrix::zeros(n, n);
    let mut probe = x.to_vec();
    for k in 0..n {
        let h = T::lit(FD_RELATIVE_STEP) * x[k].abs().max(T::one());
        probe[k] = x[k] + h;
        let fp = f(&probe)?;
        probe[k] = x[k] - h;
        let fm = f(&probe)?;
        probe[k] = x[k];
        if fp.len() != n || fm.len() != n {
            return Err(SystemError::Dimension { expected: n, got: fp.len() });
        }
        for j in 0..n {
            jac[(j, k)] = (fp[j] - fm[j]) / (h + h);
        }
    }
    Ok(jac)
}

fn check_dim(expected: usize, got: usize) -> Result<(), SystemError> {
    if expected != got {
        return Err(SystemError::Dimension { expected, got });
    }
    Ok(())
}

/// `coefficient · Π_k x_k^{exponents_k}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct PowerTerm<T> {
    #[serde(rename = "coef")]
    pub coefficient: T,
    #[serde(rename = "exp")]
    pub exponents: Vec<T>,
}

impl<T: Scalar> PowerTerm<T> {
    pub fn new(coefficient: T, exponents: Vec<T>) -> Self {
        PowerTerm { coefficient, exponents }
    }

    pub fn constant(coefficient: T, n: usize) -> Self {
        PowerTerm { coefficient, exponents: vec![T::zero(); n] }
    }

    pub fn eval(&self, x: &[T]) -> Result<T, FracError> {
        let mut v = self.coefficient;
        for (&xi, &e) in x.iter().zip(&self.exponents) {
            v = v * signed_power(xi, e)?;
        }
        Ok(v)
    }

    /// Product of the factors in every variable except `skip`.
    fn eval_without(&self, x: &[T], skip: usize) -> Result<T, FracError> {
        let mut v = self.coefficient;
        for (l, (&xl, &e)) in x.iter().zip(&self.exponents).enumerate() {
            if l != skip {
                v = v * signed_power(xl, e)?;
            }
        }
        Ok(v)
    }
}

#[derive(Deserialize)]
#[serde(bound = "T: Scalar")]
struct PowerTermSystemRepr<T> {
    n: usize,
    components: Vec<Vec<PowerTerm<T>>>,
}

/// Vector function whose components are sums of [`PowerTerm`]s.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", try_from = "PowerTermSystemRepr<T>")]
pub struct PowerTermSystem<T> {
    n: usize,
    components: Vec<Vec<PowerTerm<T>>>,
}

impl<T: Scalar> TryFrom<PowerTermSystemRepr<T>> for PowerTermSystem<T> {
    type Error = SystemError;
    fn try_from(r: PowerTermSystemRepr<T>) -> Result<Self, SystemError> {
        PowerTermSystem::new(r.n, r.components)
    }
}

impl<T: Scalar> PowerTermSystem<T> {
    /// Validates shapes and the exponent domain `e > -1`.
    pub fn new(n: usize, components: Vec<Vec<PowerTerm<T>>>) -> Result<Self, SystemError> {
        if n == 0 {
            return Err(SystemError::Malformed("system dimension must be positive".into()));
        }
        check_dim(n, components.len())?;
        for (j, comp) in components.iter().enumerate() {
            for (t, term) in comp.iter().enumerate() {
                check_dim(n, term.exponents.len())?;
                if !term.coefficient.is_finite() {
                    return Err(SystemError::Malformed(format!("component {j}, term {t}: coefficient is not finite")));
                }
                for &e in &term.exponents {
                    if !(e > -T::one()) || !e.is_finite() {
                        return Err(SystemError::InvalidExponent { component: j, term: t, exponent: e.as_f64() });
                    }
                }
            }
        }
        Ok(PowerTermSystem { n, components })
    }

    /// One-variable polynomial from `(coefficient, exponent)` pairs.
    pub fn univariate(terms: &[(T, T)]) -> Result<Self, SystemError> {
        let comp = terms.iter().map(|&(c, e)| PowerTerm::new(c, vec![e])).collect();
        Self::new(1, vec![comp])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Vec<PowerTerm<T>>] {
        &self.components
    }

    pub fn evaluate(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        check_dim(self.n, x.len())?;
        self.components
            .iter()
            .map(|comp| comp.iter().try_fold(T::zero(), |acc, term| Ok(acc + term.eval(x)?)))
            .collect()
    }

    pub fn classical_jacobian(&self, x: &[T]) -> Result<Matrix<T>, SystemError> {
        check_dim(self.n, x.len())?;
        let mut jac = Matrix::zeros(self.n, self.n);
        for (j, comp) in self.components.iter().enumerate() {
            for term in comp {
                for k in 0..self.n {
                    let e = term.exponents[k];
                    if e == T::zero() {
                        continue;
                    }
                    let d = e * signed_power(x[k], e - T::one())? * term.eval_without(x, k)?;
                    jac[(j, k)] = jac[(j, k)] + d;
                }
            }
        }
        Ok(jac)
    }

    /// Riemann-Liouville fractional Jacobian: entry `(j, k)` is the partial
    /// derivative of component `j` in variable `k` of order
    /// `effective_order(rule, x_k, residual_norm)`.
    pub fn fractional_jacobian(
        &self,
        x: &[T],
        rule: &OrderRule<T>,
        residual_norm: T,
    ) -> Result<Matrix<T>, SystemError> {
        check_dim(self.n, x.len())?;
        let orders: Vec<T> = x.iter().map(|&xk| effective_order(rule, xk, residual_norm)).collect();
        let mut jac = Matrix::zeros(self.n, self.n);
        for (j, comp) in self.components.iter().enumerate() {
            for term in comp {
                if term.coefficient == T::zero() {
                    continue;
                }
                for k in 0..self.n {
                    let d = rl_deriv_monomial(term.exponents[k], orders[k])?;
                    if d.coefficient == T::zero() {
                        continue;
                    }
                    let v = term.eval_without(x, k)? * d.coefficient * signed_power(x[k], d.exponent)?;
                    jac[(j, k)] = jac[(j, k)] + v;
                }
            }
        }
        Ok(jac)
    }
}

impl<T: Scalar> System<T> for PowerTermSystem<T> {
    fn dim(&self) -> usize {
        self.n
    }

    fn eval(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        self.evaluate(x)
    }

    fn jacobian(&self, x: &[T]) -> Result<Matrix<T>, SystemError> {
        self.classical_jacobian(x)
    }

    fn fractional_jacobian(
        &self,
        x: &[T],
        rule: &OrderRule<T>,
        residual_norm: T,
    ) -> Option<Result<Matrix<T>, SystemError>> {
        Some(PowerTermSystem::fractional_jacobian(self, x, rule, residual_norm))
    }
}

/// `c + M·x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct AffineSystem<T> {
    pub constant: Vec<T>,
    pub matrix: Matrix<T>,
}

impl<T: Scalar> AffineSystem<T> {
    pub fn new(constant: Vec<T>, matrix: Matrix<T>) -> Result<Self, SystemError> {
        check_dim(matrix.rows(), matrix.cols())?;
        check_dim(matrix.rows(), constant.len())?;
        Ok(AffineSystem { constant, matrix })
    }

    /// `g_{a,b,f}(x) = a·f(x_i) + f'(x_i)(x - b·x_i)`; `a = 1, b = 0` is the
    /// plain linearization `f(x_i) + f'(x_i)·x`.
    pub fn linearization(f_at: &[T], jacobian: &Matrix<T>, x_i: &[T], a: T, b: T) -> Result<Self, SystemError> {
        check_dim(jacobian.rows(), f_at.len())?;
        check_dim(jacobian.cols(), x_i.len())?;
        let jx = jacobian.mul_vec(x_i);
        let constant = f_at.iter().zip(&jx).map(|(&fv, &v)| a * fv - b * v).collect();
        Self::new(constant, jacobian.clone())
    }

    pub fn n(&self) -> usize {
        self.constant.len()
    }

    pub fn evaluate(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        check_dim(self.n(), x.len())?;
        let mx = self.matrix.mul_vec(x);
        Ok(self.constant.iter().zip(mx).map(|(&c, v)| c + v).collect())
    }

    /// Entry `(j, k)`:
    /// `(c_j + Σ_{l≠k} M_jl x_l) · x_k^{-o} / Γ(1-o) + M_jk · x_k^{1-o} / Γ(2-o)`
    /// with `o = effective_order(rule, x_k, residual_norm)`.
    pub fn fractional_jacobian(
        &self,
        x: &[T],
        rule: &OrderRule<T>,
        residual_norm: T,
    ) -> Result<Matrix<T>, SystemError> {
        let n = self.n();
        check_dim(n, x.len())?;
        let mx = self.matrix.mul_vec(x);
        let mut jac = Matrix::zeros(n, n);
        for k in 0..n {
            let order = effective_order(rule, x[k], residual_norm);
            let d_const = rl_deriv_monomial(T::zero(), order)?;
            let d_lin = rl_deriv_monomial(T::one(), order)?;
            let p_const = if d_const.coefficient == T::zero() {
                T::zero()
            } else {
                d_const.coefficient * signed_power(x[k], d_const.exponent)?
            };
            let p_lin = d_lin.coefficient * signed_power(x[k], d_lin.exponent)?;
            for j in 0..n {
                let m_jk = self.matrix[(j, k)];
                let frozen = self.constant[j] + (mx[j] - m_jk * x[k]);
                let mut v = m_jk * p_lin;
                if p_const != T::zero() {
                    v = v + frozen * p_const;
                }
                jac[(j, k)] = v;
            }
        }
        Ok(jac)
    }

    /// The same map written as a [`PowerTermSystem`].
    pub fn to_power_terms(&self) -> PowerTermSystem<T> {
        let n = self.n();
        let components = (0..n)
            .map(|j| {
                let mut terms = vec![PowerTerm::constant(self.constant[j], n)];
                for l in 0..n {
                    let mut e = vec![T::zero(); n];
                    e[l] = T::one();
                    terms.push(PowerTerm::new(self.matrix[(j, l)], e));
                }
                terms
            })
            .collect();
        PowerTermSystem::new(n, components).expect("affine embedding is well formed")
    }
}

impl<T: Scalar> System<T> for AffineSystem<T> {
    fn dim(&self) -> usize {
        self.n()
    }

    fn eval(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        self.evaluate(x)
    }

    fn jacobian(&self, _x: &[T]) -> Result<Matrix<T>, SystemError> {
        Ok(self.matrix.clone())
    }

    fn fractional_jacobian(
        &self,
        x: &[T],
        rule: &OrderRule<T>,
        residual_norm: T,
    ) -> Option<Result<Matrix<T>, SystemError>> {
        Some(AffineSystem::fractional_jacobian(self, x, rule, residual_norm))
    }
}

/// A user-supplied closure; its Jacobian comes from central differences.
pub struct FnSystem<F> {
    dim: usize,
    f: F,
}

impl<F> FnSystem<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnSystem { dim, f }
    }
}

impl<T, F> System<T> for FnSystem<F>
where
    T: Scalar,
    F: Fn(&[T]) -> Vec<T>,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        check_dim(self.dim, x.len())?;
        let v = (self.f)(x);
        check_dim(self.dim, v.len())?;
        Ok(v)
    }
}
