//! Truncated formal power series and the coefficient-level operators.
//!
//! A [`TruncatedSeries`] of order `K` stores `c_0..=c_K`. Every operator
//! states its output order explicitly: `U_n` shrinks the order to `K / n`,
//! `V_n` requires the caller to name the output order and refuses to invent
//! coefficients beyond `n * K`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a truncated series needs at least one coefficient")]
    Empty,
    #[error("requested order {requested} but the input only determines coefficients up to {available}")]
    InsufficientOrder { requested: usize, available: usize },
    #[error("order {order} does not match {len} coefficients")]
    OrderMismatch { order: usize, len: usize },
}

/// `c_0 + c_1 x + ... + c_K x^K + O(x^{K+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRecord", into = "SeriesRecord")]
pub struct TruncatedSeries {
    coeffs: Vec<GaussianRational>,
}

/// Wire form of a series: `{"order": K, "coeffs": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub order: usize,
    pub coeffs: Vec<GaussianRational>,
}

impl TryFrom<SeriesRecord> for TruncatedSeries {
    type Error = SeriesError;

    fn try_from(rec: SeriesRecord) -> Result<Self, SeriesError> {
        if rec.coeffs.len() != rec.order + 1 {
            return Err(SeriesError::OrderMismatch { order: rec.order, len: rec.coeffs.len() });
        }
        TruncatedSeries::new(rec.coeffs)
    }
}

impl From<TruncatedSeries> for SeriesRecord {
    fn from(s: TruncatedSeries) -> Self {
        SeriesRecord { order: s.order(), coeffs: s.coeffs }
    }
}

/// Truncated inner product: the value is the multiplier of `2*pi*i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProductValue {
    pub value: GaussianRational,
    pub radius: Rational,
    pub terms_used: usize,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<GaussianRational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> GaussianRational) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_| GaussianRational::zero())
    }

    /// `1/(1-x)` to the given order.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| GaussianRational::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&GaussianRational> {
        self.coeffs.get(k)
    }

    /// Drop every coefficient above `order`.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::InsufficientOrder { requested: order, available: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Equality on the common prefix only; `==` additionally requires equal orders.
    pub fn agrees_on_overlap(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }

    /// First index in the common prefix where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }

    pub fn scaled(&self, c: &GaussianRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Hecke operator `U_n`: coefficient `k` of the result is `c_{nk}`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn u_n(&self, n: usize) -> Self {
        assert!(n > 0, "U_n needs n >= 1");
        TruncatedSeries { coeffs: self.coeffs.iter().step_by(n).cloned().collect() }
    }

    /// `V_n f = f(x^n)` truncated at `k_out`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn v_n(&self, n: usize, k_out: usize) -> Result<Self, SeriesError> {
        assert!(n > 0, "V_n needs n >= 1");
        let available = n * self.order();
        if k_out > available {
            return Err(SeriesError::InsufficientOrder { requested: k_out, available });
        }
        Ok(Self::from_fn(k_out, |m| {
            if m % n == 0 {
                self.coeffs[m / n].clone()
            } else {
                GaussianRational::zero()
            }
        }))
    }

    /// Coefficient-wise product, truncated to the smaller order.
    pub fn hadamard(&self, other: &Self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect() }
    }

    /// `sum_k c_k * conj(d_k) * R^{2k}` over the common order.
    pub fn inner_product(&self, other: &Self, radius: &Rational) -> InnerProductValue {
        let r2 = GaussianRational::from_real(radius * radius);
        let mut weight = GaussianRational::one();
        let mut value = GaussianRational::zero();
        for (c, d) in self.coeffs.iter().zip(&other.coeffs) {
            value += &(&(c * &d.conj()) * &weight);
            weight *= &r2;
        }
        InnerProductValue {
            value,
            radius: radius.clone(),
            terms_used: self.order().min(other.order()),
        }
    }
}

/// Convenience for the common `p/q` radius.
pub fn radius(num: i64, den: i64) -> Rational {
    GaussianRational::ratio(num, den).re().clone()
}
