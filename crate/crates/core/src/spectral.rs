//! Eigenfunctions of `U_n` among hypergeometric series.
//!
//! A nonzero series `x^j pFq` can only be an eigenfunction when `j` is 0 or 1.
//! For `j = 0` it must be `C/(1-x)` (eigenvalue 1). For `j = 1` the augmented
//! system, after cancelling common parameters, must be all-2 over all-1
//! (`sum k^e x^k`, `e > 0`) or all-1 over all-2 (polylogarithms, `e < 0`),
//! and the eigenvalue of `U_n` is `n^{gamma_b - gamma_a}` for every `n`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergeometric::{cancel_common, pochhammer, HypSeries};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("unbalanced series: {upper} upper vs {augmented_lower} augmented lower parameters")]
    Unbalanced { upper: usize, augmented_lower: usize },
    #[error("exponent {0} is not 1")]
    BadExponent(usize),
    #[error("vectors of lengths {0} and {1}")]
    LengthMismatch(usize, usize),
}

/// Depth of the numeric confirmation inside [`classify_eigen`].
pub const CONFIRM_ORDER: usize = 40;
/// Operators used for the numeric confirmation inside [`classify_eigen`].
pub const CONFIRM_OPERATORS: [usize; 2] = [2, 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaCounts {
    pub gamma_a: usize,
    pub gamma_b: usize,
}

fn count_units(v: &[GaussianRational]) -> usize {
    v.iter().filter(|x| x.is_one()).count()
}

fn require_balanced(h: &HypSeries) -> Result<(), SpectralError> {
    if h.is_balanced() {
        Ok(())
    } else {
        Err(SpectralError::Unbalanced {
            upper: h.upper().len(),
            augmented_lower: h.lower().len() + 1,
        })
    }
}

fn require_exponent_one(h: &HypSeries) -> Result<(), SpectralError> {
    match h.exponent() {
        1 => Ok(()),
        j => Err(SpectralError::BadExponent(j)),
    }
}

/// Unit parameters among the upper and the augmented lower vectors.
pub fn gamma_counts(h: &HypSeries) -> Result<GammaCounts, SpectralError> {
    require_balanced(h)?;
    Ok(GammaCounts {
        gamma_a: count_units(h.upper()),
        gamma_b: count_units(&h.augmented_lower()),
    })
}

/// `c_n / c_1 = s^{n-1} prod (a)_{n-1} / prod (B)_{n-1}`, the only possible
/// eigenvalue of `U_n` for a `j = 1` series.
pub fn eigenvalue_candidate(h: &HypSeries, n: usize) -> Result<GaussianRational, SpectralError> {
    require_balanced(h)?;
    require_exponent_one(h)?;
    let k = n.saturating_sub(1);
    let num: GaussianRational = h.upper().iter().map(|a| pochhammer(a, k)).product();
    let den: GaussianRational = h.augmented_lower().iter().map(|b| pochhammer(b, k)).product();
    Ok(&(&num * &h.scale().pow(k as u64)) / &den)
}

/// `n^{gamma_a} prod (a)_{n-1} == n^{gamma_b} prod (B)_{n-1}`.
///
/// Only the exponent is checked up front; an unbalanced series is evaluated
/// as is (the identity then simply fails or holds by coincidence).
pub fn gamma_identity_check(h: &HypSeries, n: usize) -> Result<bool, SpectralError> {
    require_exponent_one(h)?;
    let augmented = h.augmented_lower();
    let k = n.saturating_sub(1);
    let nn = GaussianRational::from_int(n as i64);
    let lhs = h
        .upper()
        .iter()
        .map(|a| pochhammer(a, k))
        .fold(nn.pow(count_units(h.upper()) as u64), |acc, x| &acc * &x);
    let rhs = augmented
        .iter()
        .map(|b| pochhammer(b, k))
        .fold(nn.pow(count_units(&augmented) as u64), |acc, x| &acc * &x);
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EigenVerdict {
    Eigen,
    NotEigen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotEigenReason {
    BadExponent,
    Unbalanced,
    StructureMismatch,
    NumericMismatch,
}

/// Outcome of [`classify_eigen`]. For `Eigen`, `U_n h = n^exponent h` for every `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenReport {
    pub verdict: EigenVerdict,
    pub exponent: Option<i64>,
    pub reason: Option<NotEigenReason>,
    pub normalized_form: Option<HypSeries>,
}

impl EigenReport {
    fn eigen(exponent: i64, form: HypSeries) -> Self {
        EigenReport {
            verdict: EigenVerdict::Eigen,
            exponent: Some(exponent),
            reason: None,
            normalized_form: Some(form),
        }
    }

    fn not_eigen(reason: NotEigenReason) -> Self {
        EigenReport { verdict: EigenVerdict::NotEigen, exponent: None, reason: Some(reason), normalized_form: None }
    }

    pub fn is_eigen(&self) -> bool {
        self.verdict == EigenVerdict::Eigen
    }
}

/// Does `U_n expand(h, n*order) == n^e expand(h, order)` hold?
pub fn satisfies_eigenrelation(h: &HypSeries, n: usize, e: i64, order: usize) -> bool {
    let lambda = GaussianRational::from_int(n as i64).powi(e).expect("n >= 1");
    h.expand(n * order).u_n(n) == h.expand(order).scaled(&lambda)
}

fn structural_exponent(h: &HypSeries) -> Option<i64> {
    let (upper, lower) = cancel_common(h.upper(), &h.augmented_lower());
    if upper.len() != lower.len() {
        return None;
    }
    let one = GaussianRational::one();
    let two = GaussianRational::from_int(2);
    let all = |v: &[GaussianRational], x: &GaussianRational| v.iter().all(|y| y == x);
    let m = upper.len() as i64;
    if all(&upper, &two) && all(&lower, &one) {
        Some(m)
    } else if all(&upper, &one) && all(&lower, &two) {
        Some(-m)
    } else {
        None
    }
}

/// Decide whether `h` is an eigenfunction of every `U_n`, and with which exponent.
pub fn classify_eigen(h: &HypSeries) -> EigenReport {
    use NotEigenReason::*;

    let j = h.exponent();
    if j > 1 {
        return EigenReport::not_eigen(BadExponent);
    }
    // The zero series is not a nontrivial eigenfunction.
    if h.prefactor().is_zero() {
        return EigenReport::not_eigen(StructureMismatch);
    }
    let form = h.canonicalize();
    let zero = GaussianRational::zero();

    let exponent = if j == 0 && form.upper().contains(&zero) {
        // A nonzero constant: fixed by every U_n.
        0
    } else if form.is_terminating() {
        return EigenReport::not_eigen(StructureMismatch);
    } else if !form.is_balanced() {
        return EigenReport::not_eigen(Unbalanced);
    } else if !form.scale().is_one() {
        return EigenReport::not_eigen(StructureMismatch);
    } else {
        match (j, structural_exponent(&form)) {
            (0, Some(0)) => 0,
            (1, Some(e)) => {
                let gamma = gamma_counts(&form).expect("balanced");
                debug_assert_eq!(e, gamma.gamma_b as i64 - gamma.gamma_a as i64);
                e
            }
            _ => return EigenReport::not_eigen(StructureMismatch),
        }
    };

    let confirmed = CONFIRM_OPERATORS
        .iter()
        .all(|&n| satisfies_eigenrelation(h, n, exponent, CONFIRM_ORDER));
    if !confirmed {
        return EigenReport::not_eigen(NumericMismatch);
    }
    EigenReport::eigen(exponent, form)
}

/// `sum_{k>=1} k^e x^k` as `x * pFq`:
/// `e < 0` is `x * F(1^{|e|+1}; 2^{|e|})`, `e > 0` is `x * F(2^e; 1^{e-1})`,
/// `e = 0` is `x * F(1;)`.
pub fn make_eigenfunction(e: i64) -> HypSeries {
    let one = GaussianRational::one();
    let two = GaussianRational::from_int(2);
    let m = e.unsigned_abs() as usize;
    let (upper, lower) = match e {
        0 => (vec![one], vec![]),
        e if e < 0 => (vec![one; m + 1], vec![two; m]),
        _ => (vec![two; m], vec![one; m - 1]),
    };
    HypSeries::simple(1, upper, lower).expect("parameters 1 and 2 are legal")
}

fn check_lengths(u: &[GaussianRational], v: &[GaussianRational]) -> Result<(), SpectralError> {
    if u.len() == v.len() {
        Ok(())
    } else {
        Err(SpectralError::LengthMismatch(u.len(), v.len()))
    }
}

/// Power sums `p_1..=p_{k_max}` of `v`.
pub fn power_sums(v: &[GaussianRational], k_max: usize) -> Vec<GaussianRational> {
    let mut powers = v.to_vec();
    let mut sums = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        if k > 1 {
            powers.iter_mut().zip(v).for_each(|(pw, x)| *pw *= x);
        }
        sums.push(powers.iter().sum());
    }
    sums
}

/// `sum u_i^k == sum v_i^k` for `k = 1..=k_max`.
pub fn power_sums_equal(
    u: &[GaussianRational],
    v: &[GaussianRational],
    k_max: usize,
) -> Result<bool, SpectralError> {
    check_lengths(u, v)?;
    Ok(power_sums(u, k_max) == power_sums(v, k_max))
}

/// Elementary symmetric polynomials `e_0..=e_p` from power sums `p_1..=p_p`
/// via Newton's identities `k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
pub fn elementary_from_power_sums(p: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut e = vec![GaussianRational::one()];
    for k in 1..=p.len() {
        let mut acc = GaussianRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        e.push(acc.div_int(k as i64));
    }
    e
}

/// Multiset equality decided through elementary symmetric polynomials.
pub fn multisets_equal_via_newton(
    u: &[GaussianRational],
    v: &[GaussianRational],
) -> Result<bool, SpectralError> {
    check_lengths(u, v)?;
    let p = u.len();
    Ok(elementary_from_power_sums(&power_sums(u, p)) == elementary_from_power_sums(&power_sums(v, p)))
}

/// Replace every parameter equal to 1 by 2.
pub fn unit_shift(params: &[GaussianRational]) -> Vec<GaussianRational> {
    params
        .iter()
        .map(|x| if x.is_one() { GaussianRational::from_int(2) } else { x.clone() })
        .collect()
}
