//! Fractional fixed-point iteration engine.
//!
//! Every method iterates `x_{i+1} = x_i - A(x_i)^{-1} f(x_i)` and differs
//! only in how the matrix `A` is built:
//!
//! * fractional Newton-Raphson: the exact fractional Jacobian of `f`
//!   (power-term systems only);
//! * fractional quasi-Newton: the fractional Jacobian of the affine model
//!   `g_{a,b,f}(x) = a·f(x_i) + f'(x_i)(x - b·x_i)` at `x_i`.
//!
//! The [`OrderRule`] decides the order per variable; the `AlphaF` rule drops
//! to order 1 once the residual is small, which turns the local behaviour
//! into that of the classical Newton map.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fracops::{effective_order, OrderRule};
use crate::linalg::{dist2, norm2, LinalgError, Matrix};
use crate::polysys::{AffineSystem, PowerTermSystem, System, SystemError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("initial point has dimension {got}, system has {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("method not supported for this system: {0}")]
    UnsupportedMethod(&'static str),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("initial point is not finite")]
    NonFiniteStart,
    #[error("singular iteration matrix while computing iterate {iteration}")]
    SingularMatrix { iteration: usize },
    #[error("iterate {iteration} is not finite")]
    NonFinite { iteration: usize },
    #[error("no convergence after {iterations} iterations")]
    MaxIterExceeded { iterations: usize },
    #[error("model evaluation failed at iterate {iteration}: {message}")]
    Model { iteration: usize, message: String },
    #[error("not enough decreasing step norms to estimate an order")]
    InsufficientData,
    #[error("point is not a converged approximation (residual {residual:e})")]
    NotConverged { residual: f64 },
    #[error(transparent)]
    System(#[from] SystemError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    FractionalNewtonRaphson,
    QuasiNewton,
}

/// Which iteration matrix to build.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct MethodSpec<T> {
    pub family: Family,
    pub rule: OrderRule<T>,
    /// Scale of `f(x_i)` in the affine model (quasi-Newton only).
    pub a: T,
    /// Shift `b·x_i` in the affine model (quasi-Newton only).
    pub b: T,
}

impl<T: Scalar> MethodSpec<T> {
    pub fn fractional_newton_raphson(rule: OrderRule<T>) -> Self {
        MethodSpec { family: Family::FractionalNewtonRaphson, rule, a: T::one(), b: T::zero() }
    }

    /// Fractional quasi-Newton with the `β` order rule.
    pub fn quasi_newton(alpha: T) -> Self {
        Self::generalized(OrderRule::beta(alpha), T::one(), T::zero())
    }

    /// Fractional quasi-Newton with the accelerating `α_f` rule.
    pub fn quasi_newton_accelerated(alpha: T, delta: T) -> Self {
        Self::generalized(OrderRule::alpha_f(alpha, delta), T::one(), T::zero())
    }

    /// Quasi-Newton on `g_{a,b,f}`.
    pub fn generalized(rule: OrderRule<T>, a: T, b: T) -> Self {
        MethodSpec { family: Family::QuasiNewton, rule, a, b }
    }

    pub fn with_alpha(self, alpha: T) -> Self {
        MethodSpec { rule: self.rule.with_alpha(alpha), ..self }
    }
}

/// Stopping rules. The step and residual criteria are disjunctive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", default)]
pub struct SolverConfig<T> {
    pub step_tol: T,
    pub residual_tol: T,
    pub max_iter: usize,
    /// Threshold on `‖Φ'‖_max` separating linear from quadratic maps.
    pub classification_tol: T,
}

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        SolverConfig {
            step_tol: T::lit(1e-5),
            residual_tol: T::lit(1e-8),
            max_iter: 200,
            classification_tol: T::lit(1e-3),
        }
    }
}

impl<T: Scalar> SolverConfig<T> {
    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.step_tol > T::zero()) || !(self.residual_tol > T::zero()) {
            return Err(SolverError::InvalidConfig("tolerances must be positive".into()));
        }
        if !(self.classification_tol > T::zero()) {
            return Err(SolverError::InvalidConfig("classification_tol must be positive".into()));
        }
        if self.max_iter == 0 {
            return Err(SolverError::InvalidConfig("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Termination {
    StepTolerance,
    ResidualTolerance,
    MaxIterations,
    SingularMatrix { iteration: usize },
    NonFinite { iteration: usize },
    ModelError { iteration: usize, message: String },
}

/// Per-iteration record of a run. `iterates[0]` is the starting point;
/// `step_norms[i - 1]`, `residual_norms[i - 1]` and `orders[i - 1]` belong to
/// `iterates[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct IterationTrace<T> {
    pub iterates: Vec<Vec<T>>,
    pub step_norms: Vec<T>,
    pub residual_norms: Vec<T>,
    /// Residual norm at the starting point.
    pub initial_residual: T,
    /// Effective orders used to build the matrix that produced each iterate.
    pub orders: Vec<Vec<T>>,
    pub converged: bool,
    pub termination: Termination,
}

impl<T: Scalar> IterationTrace<T> {
    /// Number of iterations performed (the starting point is iteration 0).
    pub fn iterations(&self) -> usize {
        self.step_norms.len()
    }

    pub fn final_iterate(&self) -> &[T] {
        self.iterates.last().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn final_residual(&self) -> T {
        self.residual_norms.last().copied().unwrap_or(self.initial_residual)
    }

    /// Converts failure terminations into errors.
    pub fn into_result(self) -> Result<Self, SolverError> {
        match self.termination.clone() {
            Termination::StepTolerance | Termination::ResidualTolerance => Ok(self),
            Termination::MaxIterations => Err(SolverError::MaxIterExceeded { iterations: self.iterations() }),
            Termination::SingularMatrix { iteration } => Err(SolverError::SingularMatrix { iteration }),
            Termination::NonFinite { iteration } => Err(SolverError::NonFinite { iteration }),
            Termination::ModelError { iteration, message } => Err(SolverError::Model { iteration, message }),
        }
    }
}

/// Fractional Newton-Raphson matrix: the fractional Jacobian of `f` itself.
pub fn newton_raphson_step_matrix<T: Scalar>(
    f: &PowerTermSystem<T>,
    x: &[T],
    rule: &OrderRule<T>,
    residual_norm: T,
) -> Result<Matrix<T>, SystemError> {
    f.fractional_jacobian(x, rule, residual_norm)
}

/// The matrix `A` of the method at `x`, given `fx = f(x)`.
pub fn step_matrix<T, S>(f: &S, method: &MethodSpec<T>, x: &[T], fx: &[T]) -> Result<Matrix<T>, SolverError>
where
    T: Scalar,
    S: System<T> + ?Sized,
{
    let residual = norm2(fx);
    match method.family {
        Family::FractionalNewtonRaphson => f
            .fractional_jacobian(x, &method.rule, residual)
            .ok_or(SolverError::UnsupportedMethod(
                "fractional Newton-Raphson needs a system with an exact fractional Jacobian",
            ))?
            .map_err(SolverError::from),
        Family::QuasiNewton => {
            let jac = f.jacobian(x)?;
            let g = AffineSystem::linearization(fx, &jac, x, method.a, method.b)?;
            Ok(g.fractional_jacobian(x, &method.rule, residual)?)
        }
    }
}

/// One application of the iteration function `Φ(x) = x - A(x)^{-1} f(x)`.
pub fn iteration_map<T, S>(f: &S, method: &MethodSpec<T>, x: &[T]) -> Result<Vec<T>, SolverError>
where
    T: Scalar,
    S: System<T> + ?Sized,
{
    let fx = f.eval(x)?;
    let a = step_matrix(f, method, x, &fx)?;
    let delta = a.solve(&fx)?;
    Ok(x.iter().zip(delta).map(|(&xi, d)| xi - d).collect())
}

fn all_finite<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_finite())
}

/// Runs the fixed-point iteration from `x0` until a stopping rule fires.
///
/// Failures that occur mid-run (singular matrix, non-finite iterate, model
/// pole) end the trace with the corresponding [`Termination`] and keep the
/// iterates computed so far. Problems detectable up front are errors.
pub fn iterate<T, S>(
    f: &S,
    method: &MethodSpec<T>,
    x0: &[T],
    config: &SolverConfig<T>,
) -> Result<IterationTrace<T>, SolverError>
where
    T: Scalar,
    S: System<T> + ?Sized,
{
    config.validate()?;
    if x0.len() != f.dim() {
        return Err(SolverError::Dimension { expected: f.dim(), got: x0.len() });
    }
    if !all_finite(x0) {
        return Err(SolverError::NonFiniteStart);
    }
    let mut fx = f.eval(x0)?;
    let mut residual = norm2(&fx);
    let mut trace = IterationTrace {
        iterates: vec![x0.to_vec()],
        step_norms: Vec::new(),
        residual_norms: Vec::new(),
        initial_residual: residual,
        orders: Vec::new(),
        converged: false,
        termination: Termination::MaxIterations,
    };
    if residual <= config.residual_tol {
        trace.converged = true;
        trace.termination = Termination::ResidualTolerance;
        return Ok(trace);
    }
    let mut x = x0.to_vec();
    for i in 1..=config.max_iter {
        let a = match step_matrix(f, method, &x, &fx) {
            Ok(a) => a,
            Err(SolverError::UnsupportedMethod(m)) => return Err(SolverError::UnsupportedMethod(m)),
            Err(e) => {
                trace.termination = Termination::ModelError { iteration: i, message: e.to_string() };
                return Ok(trace);
            }
        };
        if !a.is_finite() {
            trace.termination = Termination::NonFinite { iteration: i };
            return Ok(trace);
        }
        let delta = match a.solve(&fx) {
            Ok(d) => d,
            Err(_) => {
                trace.termination = Termination::SingularMatrix { iteration: i };
                return Ok(trace);
            }
        };
        let next: Vec<T> = x.iter().zip(&delta).map(|(&xi, &d)| xi - d).collect();
        if !all_finite(&next) {
            trace.termination = Termination::NonFinite { iteration: i };
            return Ok(trace);
        }
        let f_next = match f.eval(&next) {
            Ok(v) => v,
            Err(e) => {
                trace.termination = Termination::ModelError { iteration: i, message: e.to_string() };
                return Ok(trace);
            }
        };
        let r_next = norm2(&f_next);
        if !r_next.is_finite() {
            trace.termination = Termination::NonFinite { iteration: i };
            return Ok(trace);
        }
        let step = dist2(&next, &x);
        trace.orders.push(x.iter().map(|&xk| effective_order(&method.rule, xk, residual)).collect());
        trace.iterates.push(next.clone());
        trace.step_norms.push(step);
        trace.residual_norms.push(r_next);
        if r_next <= config.residual_tol {
            trace.converged = true;
            trace.termination = Termination::ResidualTolerance;
            return Ok(trace);
        }
        if step <= config.step_tol {
            trace.converged = true;
            trace.termination = Termination::StepTolerance;
            return Ok(trace);
        }
        x = next;
        fx = f_next;
        residual = r_next;
    }
    Ok(trace)
}

/// Outcome of one order in an [`alpha_sweep`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct SweepRun<T> {
    pub alpha: T,
    pub trace: Option<IterationTrace<T>>,
    pub error: Option<String>,
}

impl<T: Scalar> SweepRun<T> {
    pub fn converged(&self) -> bool {
        self.trace.as_ref().is_some_and(|t| t.converged)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct SweepResult<T> {
    pub runs: Vec<SweepRun<T>>,
    /// Distinct converged end points, in order of first appearance.
    pub roots: Vec<Vec<T>>,
}

/// Tolerance below which two converged end points count as the same root.
pub const ROOT_DEDUP_TOL: f64 = 1e-6;

/// Clustering radius actually used by [`alpha_sweep`]. A run stopped by the
/// step rule under linear contraction can sit several `step_tol` away from
/// the root, so the radius never drops below `10 * step_tol`.
pub fn root_cluster_tol<T: Scalar>(config: &SolverConfig<T>) -> T {
    T::lit(ROOT_DEDUP_TOL).max(T::lit(10.0) * config.step_tol)
}

/// Solves once per order in `alphas`, keeping everything else from
/// `template`. Runs are independent and execute in parallel; results keep
/// the order of `alphas`.
pub fn alpha_sweep<T, S>(
    f: &S,
    template: &MethodSpec<T>,
    x0: &[T],
    alphas: &[T],
    config: &SolverConfig<T>,
) -> SweepResult<T>
where
    T: Scalar,
    S: System<T> + Sync + ?Sized,
{
    let runs: Vec<SweepRun<T>> = alphas
        .par_iter()
        .map(|&alpha| {
            let method = template.with_alpha(alpha);
            match iterate(f, &method, x0, config) {
                Ok(trace) => {
                    let error = (!trace.converged).then(|| format!("{:?}", trace.termination));
                    SweepRun { alpha, trace: Some(trace), error }
                }
                Err(e) => SweepRun { alpha, trace: None, error: Some(e.to_string()) },
            }
        })
        .collect();
    let roots = distinct_roots(
        runs.iter().filter(|r| r.converged()).filter_map(|r| r.trace.as_ref()).map(|t| t.final_iterate()),
        root_cluster_tol(config),
    );
    SweepResult { runs, roots }
}

/// Greedy clustering: a point joins the first representative within `tol`.
pub fn distinct_roots<'a, T: Scalar>(points: impl IntoIterator<Item = &'a [T]>, tol: T) -> Vec<Vec<T>> {
    let mut roots: Vec<Vec<T>> = Vec::new();
    for p in points {
        if !roots.iter().any(|r| dist2(r, p) <= tol) {
            roots.push(p.to_vec());
        }
    }
    roots
}

/// Computational order `ln(s_i/s_{i-1}) / ln(s_{i-1}/s_{i-2})` from the last
/// strictly decreasing, positive triple of step norms.
pub fn estimate_order_from_steps<T: Scalar>(steps: &[T]) -> Result<T, SolverError> {
    (2..steps.len())
        .rev()
        .find_map(|i| {
            let (s0, s1, s2) = (steps[i - 2], steps[i - 1], steps[i]);
            (s2 > T::zero() && s1 > s2 && s0 > s1).then(|| (s2 / s1).ln() / (s1 / s0).ln())
        })
        .ok_or(SolverError::InsufficientData)
}

pub fn estimate_order<T: Scalar>(trace: &IterationTrace<T>) -> Result<T, SolverError> {
    estimate_order_from_steps(&trace.step_norms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderClass {
    /// `‖Φ'‖` does not vanish at the root: at least linear.
    Ord1,
    /// `‖Φ'‖` vanishes at the root: at least quadratic.
    Ord2,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ConvergenceReport<T> {
    /// Computational order from a trace, when one was supplied.
    pub estimated_order: Option<T>,
    pub phi_jacobian_norm: T,
    pub classification: OrderClass,
}

/// Relative step for the finite-difference Jacobian of `Φ`.
pub const PHI_FD_RELATIVE_STEP: f64 = 1e-6;

/// Central-difference Jacobian of the iteration function at `x`.
pub fn phi_jacobian<T, S>(f: &S, method: &MethodSpec<T>, x: &[T]) -> Result<Matrix<T>, SolverError>
where
    T: Scalar,
    S: System<T> + ?Sized,
{
    let n = x.len();
    let mut jac = Matrix::zeros(n, n);
    let mut probe = x.to_vec();
    for k in 0..n {
        let h = T::lit(PHI_FD_RELATIVE_STEP) * x[k].abs().max(T::one());
        probe[k] = x[k] + h;
        let plus = iteration_map(f, method, &probe)?;
        probe[k] = x[k] - h;
        let minus = iteration_map(f, method, &probe)?;
        probe[k] = x[k];
        for j in 0..n {
            jac[(j, k)] = (plus[j] - minus[j]) / (h + h);
        }
    }
    Ok(jac)
}

/// Classifies the local order of the method at a converged point `xi`
/// from the size of `Φ'(xi)`.
pub fn classify<T, S>(
    f: &S,
    method: &MethodSpec<T>,
    xi: &[T],
    config: &SolverConfig<T>,
) -> Result<ConvergenceReport<T>, SolverError>
where
    T: Scalar,
    S: System<T> + ?Sized,
{
    config.validate()?;
    if xi.len() != f.dim() {
        return Err(SolverError::Dimension { expected: f.dim(), got: xi.len() });
    }
    let residual = norm2(&f.eval(xi)?);
    if !(residual <= T::lit(10.0) * config.residual_tol) {
        return Err(SolverError::NotConverged { residual: residual.as_f64() });
    }
    let jac = phi_jacobian(f, method, xi)?;
    let norm = jac.max_norm();
    let classification = if !jac.is_finite() {
        OrderClass::Unknown
    } else if norm <= config.classification_tol {
        OrderClass::Ord2
    } else {
        OrderClass::Ord1
    };
    Ok(ConvergenceReport { estimated_order: None, phi_jacobian_norm: norm, classification })
}
