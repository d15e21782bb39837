//! Fractional fixed-point root finders.
//!
//! The crate implements the fractional Newton-Raphson and fractional
//! quasi-Newton iterations (with and without the residual-triggered
//! acceleration), exact Riemann-Liouville Jacobians for power-term systems,
//! and a hybrid photovoltaic/thermoelectric receiver model that serves as
//! the end-to-end application.
//!
//! All numerics are generic over a [`Scalar`] (`f32` or `f64`). The aliases
//! below fix the scalar to `f64`, which is what the reference data, the
//! simulation pipeline and the CLI use.
//!
//! ```
//! use fracsolve::{iterate, MethodSpec, ReceiverSystem, SolverConfig};
//! use fracsolve::receiver::{build_params, ReceiverConstants};
//!
//! let params = build_params(900.0, 20.0, &ReceiverConstants::default()).unwrap();
//! let method = MethodSpec::quasi_newton_accelerated(0.89825, 13.0);
//! let trace = iterate(&ReceiverSystem::new(params), &method, &[3000.0, 3000.0], &SolverConfig::default()).unwrap();
//! assert!(trace.converged);
//! assert_eq!(trace.iterations(), 13);
//! ```

// `!(a > b)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod fracops;
pub mod io;
pub mod linalg;
pub mod polysys;
pub mod receiver;
pub mod reference;
pub mod scalar;
pub mod simulate;
pub mod solver;

pub use fracops::{effective_order, gamma, real_power, rl_deriv_monomial, MonomialDerivative, OrderRule};
pub use linalg::Matrix;
pub use polysys::{AffineSystem, FnSystem, PowerTerm, PowerTermSystem, System, SystemError};
pub use receiver::{ReceiverParams, ReceiverState, ReceiverSystem};
pub use scalar::Scalar;
pub use solver::{
    alpha_sweep, classify, estimate_order, iterate, ConvergenceReport, Family, IterationTrace, MethodSpec, OrderClass,
    SolverConfig, SolverError, Termination,
};

pub type Matrix64 = Matrix<f64>;
pub type OrderRule64 = OrderRule<f64>;
pub type PowerTermSystem64 = PowerTermSystem<f64>;
pub type AffineSystem64 = AffineSystem<f64>;
pub type MethodSpec64 = MethodSpec<f64>;
pub type SolverConfig64 = SolverConfig<f64>;
pub type IterationTrace64 = IterationTrace<f64>;
pub type ReceiverParams64 = ReceiverParams<f64>;
pub type ReceiverState64 = ReceiverState<f64>;

pub type Matrix32 = Matrix<f32>;
pub type PowerTermSystem32 = PowerTermSystem<f32>;
pub type MethodSpec32 = MethodSpec<f32>;
pub type SolverConfig32 = SolverConfig<f32>;
pub type IterationTrace32 = IterationTrace<f32>;
