//! Symbolic `U_n` on hypergeometric series.
//!
//! For `h = C x^j pFq(a; b; s x)` the decimated series is again hypergeometric.
//! Writing `B = b ++ [1]` for the augmented lower vector:
//!
//! * `n | j`: exponent `j/n`, parameters `(a+l-1)/n` and `(B+l-1)/n` for
//!   `l = 1..=n`, prefactor unchanged.
//! * `n ∤ j`: with `r = n - (j mod n) - 1`, exponent `1 + floor(j/n)`,
//!   parameters `(a+r+l)/n` and `(B+r+l)/n`, prefactor multiplied by
//!   `s^{r+1} prod (a)_{r+1} / prod (B)_{r+1}`.
//!
//! In both cases exactly one lower parameter equal to `1` comes from the
//! augmented `1` and is dropped (it becomes the new `k!`), and the scale
//! becomes `s^n * n^{n(p-q-1)}`.
//!
//! [`oracle_check`] compares the result with plain coefficient decimation.

use num_traits::Zero;
use thiserror::Error;

use crate::hypergeometric::{pochhammer, HypSeries};
use crate::scalar::GaussianRational;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("{n} does not divide the exponent {j}")]
    IndivisibleExponent { n: usize, j: usize },
}

/// `(a + offset + l)/n` for every parameter `a` and `l = 0..n`, grouped by parameter.
fn images(params: &[GaussianRational], offset: usize, n: usize) -> Vec<GaussianRational> {
    params
        .iter()
        .flat_map(|a| (0..n).map(move |l| a.add_int((offset + l) as i64).div_int(n as i64)))
        .collect()
}

/// `U_n h` as a hypergeometric series (parameters not canonicalized).
///
/// # Panics
/// If `n == 0`.
pub fn apply_un(h: &HypSeries, n: usize) -> HypSeries {
    assert!(n > 0, "U_n needs n >= 1");
    let p = h.upper().len() as i64;
    let q = h.lower().len();
    let j = h.exponent();
    let augmented = h.augmented_lower();
    let nn = GaussianRational::from_int(n as i64);
    let scale = &h.scale().pow(n as u64)
        * &nn.powi(n as i64 * (p - q as i64 - 1)).expect("n is nonzero");

    // Offset 0 gives (a+l-1)/n for l = 1..=n; offset r+1 gives (a+r+l)/n.
    let (offset, exponent, prefactor) = if j % n == 0 {
        (0, j / n, h.prefactor().clone())
    } else {
        let r = n - j % n - 1;
        let prefactor = if h.prefactor().is_zero() {
            GaussianRational::zero()
        } else {
            let num: GaussianRational = h.upper().iter().map(|a| pochhammer(a, r + 1)).product();
            let den: GaussianRational = augmented.iter().map(|b| pochhammer(b, r + 1)).product();
            &(&(h.prefactor() * &h.scale().pow((r + 1) as u64)) * &num) / &den
        };
        (r + 1, 1 + j / n, prefactor)
    };

    let upper = images(h.upper(), offset, n);
    let mut lower = images(&augmented, offset, n);
    // The augmented 1 occupies the last block; (1 + offset + l)/n = 1 at l = n - 1 - offset.
    let unit_at = q * n + (n - 1 - offset);
    debug_assert!(lower[unit_at] == GaussianRational::from_int(1));
    lower.remove(unit_at);

    HypSeries::new(prefactor, exponent, upper, lower, scale)
        .expect("images of legal parameters are legal")
}

/// `(sum c - sum d) - (sum a - sum b)` for the `n | j` image, which equals
/// `(n-1)(p-q-1)/2`.
pub fn parameter_sum_shift(h: &HypSeries, n: usize) -> Result<GaussianRational, HeckeError> {
    if n == 0 || h.exponent() % n != 0 {
        return Err(HeckeError::IndivisibleExponent { n, j: h.exponent() });
    }
    let image = apply_un(h, n);
    let sum = |v: &[GaussianRational]| v.iter().sum::<GaussianRational>();
    let after = &sum(image.upper()) - &sum(image.lower());
    let before = &sum(h.upper()) - &sum(h.lower());
    Ok(&after - &before)
}

/// Symbolic image expanded next to the decimation of the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub image: HypSeries,
    pub symbolic: TruncatedSeries,
    pub oracle: TruncatedSeries,
    pub first_mismatch: Option<usize>,
}

impl OracleComparison {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare `expand(apply_un(h, n), order)` with `U_n expand(h, n*order)`.
pub fn oracle_check(h: &HypSeries, n: usize, order: usize) -> OracleComparison {
    let image = apply_un(h, n);
    let symbolic = image.expand(order);
    let oracle = h.expand(n * order).u_n(n);
    let first_mismatch = symbolic.first_difference(&oracle);
    OracleComparison { image, symbolic, oracle, first_mismatch }
}
