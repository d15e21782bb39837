//! Hybrid photovoltaic / thermoelectric solar receiver.
//!
//! The steady state is described by five unknowns
//! `s = (T_cell, T_hot, T_cold, η_cell, η_TEG)`. Eliminating `T_cell`,
//! `η_cell` and `η_TEG` leaves a two-equation transcendental system in
//! `(T_hot, T_cold)` ([`f2`]); [`recover`] rebuilds the full state from its
//! solution. Temperatures are in °C, `a[9] = 273.15` performs the Kelvin
//! shift inside the Carnot-like efficiency term.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::polysys::{System, SystemError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReceiverError {
    #[error("invalid receiver parameter: {0}")]
    Domain(String),
    #[error("pole in receiver model: {0}")]
    Pole(&'static str),
    #[error("expected a {expected}-vector, got length {got}")]
    Dimension { expected: usize, got: usize },
}

impl From<ReceiverError> for SystemError {
    fn from(e: ReceiverError) -> Self {
        match e {
            ReceiverError::Dimension { expected, got } => SystemError::Dimension { expected, got },
            other => SystemError::Model(other.to_string()),
        }
    }
}

/// Physical constants of the receiver. Every field can be overridden; the
/// defaults are the reference design values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, bound = "T: Scalar", deny_unknown_fields)]
pub struct ReceiverConstants<T> {
    pub eta_opt: T,
    pub r_intercon: T,
    #[serde(rename = "C_g")]
    pub c_g: T,
    #[serde(rename = "A_cell")]
    pub a_cell: T,
    #[serde(rename = "R_heat_exch")]
    pub r_heat_exch: T,
    #[serde(rename = "A_TEG")]
    pub a_teg: T,
    pub eta_cell_ref: T,
    pub r_cell: T,
    pub f_star: T,
    pub gamma_cell: T,
    pub r_sol: T,
    pub b: T,
    pub r_cop: T,
    pub r_cer: T,
    pub l: T,
    #[serde(rename = "k_TEG")]
    pub k_teg: T,
    #[serde(rename = "ZT")]
    pub zt: T,
}

impl<T: Scalar> Default for ReceiverConstants<T> {
    fn default() -> Self {
        ReceiverConstants {
            eta_opt: T::lit(0.85),
            r_intercon: T::lit(2.331e-7),
            c_g: T::lit(800.0),
            a_cell: T::lit(9e-6),
            r_heat_exch: T::lit(0.5),
            a_teg: T::lit(5.04e-5),
            eta_cell_ref: T::lit(0.43),
            r_cell: T::lit(3e-6),
            f_star: T::lit(0.7),
            gamma_cell: T::lit(4.6e-4),
            r_sol: T::lit(1.603e-6),
            b: T::lit(5e-4),
            r_cop: T::lit(7.5e-7),
            r_cer: T::lit(8e-6),
            l: T::lit(5e-4),
            k_teg: T::lit(1.5),
            zt: T::lit(1.0),
        }
    }
}

/// Operating point `(DNI, T_air)` with the derived coefficients `a[0..10]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ReceiverParams<T> {
    #[serde(rename = "DNI")]
    pub dni: T,
    #[serde(rename = "T_air")]
    pub t_air: T,
    pub a: [T; 10],
}

impl<T: Scalar> ReceiverParams<T> {
    /// Wraps precomputed coefficients without validation.
    pub fn from_coefficients(dni: T, t_air: T, a: [T; 10]) -> Self {
        ReceiverParams { dni, t_air, a }
    }

    /// `1 + a1·a2·a6`, the denominator shared by the reduction formulas.
    fn k(&self) -> T {
        let a = &self.a;
        T::one() + a[1] * a[2] * a[6]
    }
}

/// Derives `a[0..10]` from the irradiance, ambient temperature and constants.
pub fn build_params<T: Scalar>(dni: T, t_air: T, c: &ReceiverConstants<T>) -> Result<ReceiverParams<T>, ReceiverError> {
    if !(dni > T::zero()) || !dni.is_finite() {
        return Err(ReceiverError::Domain(format!("DNI must be positive, got {dni}")));
    }
    if !t_air.is_finite() {
        return Err(ReceiverError::Domain("T_air must be finite".into()));
    }
    for (name, v) in [("A_TEG", c.a_teg), ("A_cell", c.a_cell), ("f_star", c.f_star), ("k_TEG", c.k_teg)] {
        if !(v > T::zero()) {
            return Err(ReceiverError::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    if !(c.zt > -T::one()) {
        return Err(ReceiverError::Domain(format!("ZT must exceed -1, got {}", c.zt)));
    }
    let two = T::lit(2.0);
    let a0 = two * c.r_intercon / ((c.f_star * c.a_teg).sqrt() * (c.b * c.f_star.sqrt() + c.a_teg.sqrt()));
    let a1 = c.eta_opt * c.c_g * dni;
    let a2 = c.r_cell + c.r_sol + c.a_cell * ((c.r_cop + c.r_cer) / c.a_teg + a0);
    let a3 = c.a_cell * c.l / (c.f_star * c.a_teg * c.k_teg);
    let a4 = t_air;
    let a5 = c.a_cell * (c.r_cer / c.a_teg + c.r_heat_exch + a0);
    let a6 = -c.eta_cell_ref * c.gamma_cell;
    let a7 = c.eta_cell_ref * (T::one() + T::lit(25.0) * c.gamma_cell);
    let a8 = (T::one() + c.zt).sqrt();
    let a9 = T::lit(273.15);
    Ok(ReceiverParams { dni, t_air, a: [a0, a1, a2, a3, a4, a5, a6, a7, a8, a9] })
}

/// Full receiver state `(T_cell, T_hot, T_cold, η_cell, η_TEG)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ReceiverState<T> {
    pub t_cell: T,
    pub t_hot: T,
    pub t_cold: T,
    pub eta_cell: T,
    pub eta_teg: T,
}

impl<T: Scalar> ReceiverState<T> {
    pub fn from_array(s: [T; 5]) -> Self {
        ReceiverState { t_cell: s[0], t_hot: s[1], t_cold: s[2], eta_cell: s[3], eta_teg: s[4] }
    }

    pub fn to_array(&self) -> [T; 5] {
        [self.t_cell, self.t_hot, self.t_cold, self.eta_cell, self.eta_teg]
    }
}

fn nonzero<T: Scalar>(v: T, what: &'static str) -> Result<T, ReceiverError> {
    if v == T::zero() || !v.is_finite() {
        Err(ReceiverError::Pole(what))
    } else {
        Ok(v)
    }
}

fn pair<T: Scalar>(x: &[T]) -> Result<(T, T), ReceiverError> {
    match x {
        [h, c] => Ok((*h, *c)),
        _ => Err(ReceiverError::Dimension { expected: 2, got: x.len() }),
    }
}

/// Residuals of the five coupled receiver equations.
pub fn f1<T: Scalar>(s: &ReceiverState<T>, p: &ReceiverParams<T>) -> Result<[T; 5], ReceiverError> {
    let a = &p.a;
    let one = T::one();
    let [x1, x2, x3, x4, x5] = s.to_array();
    let hot = nonzero(x2 + a[9], "T_hot + 273.15 = 0")?;
    let ratio = (x3 + a[9]) / hot;
    let carnot = nonzero(a[8] + ratio, "a8 + (T_cold + a9)/(T_hot + a9) = 0")?;
    Ok([
        x1 - x2 - a[1] * a[2] * (one - x4),
        x2 - x3 - a[1] * a[3] * (one - x4) * (one - x5),
        x3 - a[4] - a[1] * a[5] * (one - x4) * (one - x5),
        x4 - a[6] * x1 - a[7],
        x5 - (a[8] - one) * (one - ratio) / carnot,
    ])
}

/// The ratio term shared by both components of [`f2`]:
/// `(a6 x2 + a7 - 1)(a8(x3 + a9) + (x2 + a9)) / ((1 + a1 a2 a6)(a8(x2 + a9) + (x3 + a9)))`.
fn reduced_ratio<T: Scalar>(x2: T, x3: T, p: &ReceiverParams<T>) -> Result<T, ReceiverError> {
    let a = &p.a;
    let k = nonzero(p.k(), "1 + a1 a2 a6 = 0")?;
    let num = (a[6] * x2 + a[7] - T::one()) * (a[8] * (x3 + a[9]) + (x2 + a[9]));
    let den = nonzero(a[8] * (x2 + a[9]) + (x3 + a[9]), "a8 (T_hot + a9) + (T_cold + a9) = 0")?;
    Ok(num / (k * den))
}

/// Reduced two-dimensional system in `(T_hot, T_cold)`.
pub fn f2<T: Scalar>(x: &[T], p: &ReceiverParams<T>) -> Result<[T; 2], ReceiverError> {
    let (x2, x3) = pair(x)?;
    let a = &p.a;
    let q = reduced_ratio(x2, x3, p)?;
    Ok([x2 - x3 + a[1] * a[3] * q, x3 - a[4] + a[1] * a[5] * q])
}

/// Analytic Jacobian of [`f2`].
pub fn f2_jacobian<T: Scalar>(x: &[T], p: &ReceiverParams<T>) -> Result<Matrix<T>, ReceiverError> {
    let (x2, x3) = pair(x)?;
    let a = &p.a;
    let one = T::one();
    let k = nonzero(p.k(), "1 + a1 a2 a6 = 0")?;
    let lin = a[6] * x2 + a[7] - one;
    let num = a[8] * (x3 + a[9]) + (x2 + a[9]);
    let den = nonzero(a[8] * (x2 + a[9]) + (x3 + a[9]), "a8 (T_hot + a9) + (T_cold + a9) = 0")?;
    let den2 = den * den;
    // ∂num/∂x2 = 1, ∂num/∂x3 = a8, ∂den/∂x2 = a8, ∂den/∂x3 = 1
    let dq2 = (a[6] * num / den + lin * (den - num * a[8]) / den2) / k;
    let dq3 = lin * (a[8] * den - num) / den2 / k;
    let c3 = a[1] * a[3];
    let c5 = a[1] * a[5];
    Ok(Matrix::from_rows(&[vec![one + c3 * dq2, -one + c3 * dq3], vec![c5 * dq2, one + c5 * dq3]]))
}

/// Rebuilds the full state from a solution `(T_hot, T_cold)` of [`f2`].
pub fn recover<T: Scalar>(x: &[T], p: &ReceiverParams<T>) -> Result<ReceiverState<T>, ReceiverError> {
    let (x2, x3) = pair(x)?;
    let a = &p.a;
    let one = T::one();
    let k = nonzero(p.k(), "1 + a1 a2 a6 = 0")?;
    let a1a2 = a[1] * a[2];
    let den = nonzero(a[8] * (x2 + a[9]) + (x3 + a[9]), "a8 (T_hot + a9) + (T_cold + a9) = 0")?;
    Ok(ReceiverState {
        t_cell: (x2 - a1a2 * (a[7] - one)) / k,
        t_hot: x2,
        t_cold: x3,
        eta_cell: (a[6] * (a1a2 + x2) + a[7]) / k,
        eta_teg: (a[8] - one) * (x2 - x3) / den,
    })
}

/// [`f2`] packaged as a [`System`] with its analytic Jacobian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReceiverSystem<T> {
    pub params: ReceiverParams<T>,
}

impl<T: Scalar> ReceiverSystem<T> {
    pub fn new(params: ReceiverParams<T>) -> Self {
        ReceiverSystem { params }
    }
}

impl<T: Scalar> System<T> for ReceiverSystem<T> {
    fn dim(&self) -> usize {
        2
    }

    fn eval(&self, x: &[T]) -> Result<Vec<T>, SystemError> {
        Ok(f2(x, &self.params)?.to_vec())
    }

    fn jacobian(&self, x: &[T]) -> Result<Matrix<T>, SystemError> {
        Ok(f2_jacobian(x, &self.params)?)
    }
}
