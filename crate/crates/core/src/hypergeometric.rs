//! Symbolic hypergeometric series `C * x^j * pFq(a; b; s*x)` and Pochhammer arithmetic.
//!
//! Storage convention: the `lower` vector never contains the implicit `k!`.
//! Code that needs the augmented system (lower parameters followed by a
//! trailing `1`) builds it with [`HypSeries::augmented_lower`].

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::GaussianRational;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypError {
    #[error("lower parameter {0} is a non-positive integer")]
    IllegalLowerParameter(GaussianRational),
    #[error("argument scale must be nonzero")]
    ZeroScale,
    #[error("{n} divides {j}; the offset split needs n not dividing j")]
    DivisibleJ { n: usize, j: usize },
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &GaussianRational, k: usize) -> GaussianRational {
    let mut acc = GaussianRational::one();
    let mut factor = a.clone();
    let one = GaussianRational::one();
    for _ in 0..k {
        acc *= &factor;
        if acc.is_zero() {
            break;
        }
        factor += &one;
    }
    acc
}

/// `(a)_{kn}` evaluated by grouping its factors into residue classes mod `n`:
/// `n^{kn} * prod_{i<n} ((a+i)/n)_k`.
pub fn pochhammer_split(a: &GaussianRational, n: usize, k: usize) -> GaussianRational {
    assert!(n > 0, "split needs n >= 1");
    let scale = GaussianRational::from_int(n as i64).pow((k * n) as u64);
    (0..n)
        .map(|i| pochhammer(&a.add_int(i as i64).div_int(n as i64), k))
        .fold(scale, |acc, x| &acc * &x)
}

/// Data of the offset split `(a)_N = n^{nk} (a)_{r+1} prod_{i=r+1}^{r+n} ((a+i)/n)_k`
/// with `r = n - (j mod n) - 1` and `N = nk + r + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochSplitOffset {
    pub base: GaussianRational,
    pub n: usize,
    pub r: usize,
    /// `(a)_{r+1}`
    pub constant: GaussianRational,
    /// `(a+r+1)/n, ..., (a+r+n)/n`
    pub factors: Vec<GaussianRational>,
}

impl PochSplitOffset {
    pub fn new(a: &GaussianRational, n: usize, j: usize) -> Result<Self, HypError> {
        if n == 0 || j % n == 0 {
            return Err(HypError::DivisibleJ { n, j });
        }
        let r = n - j % n - 1;
        let factors = (1..=n)
            .map(|l| a.add_int((r + l) as i64).div_int(n as i64))
            .collect();
        Ok(PochSplitOffset {
            base: a.clone(),
            n,
            r,
            constant: pochhammer(a, r + 1),
            factors,
        })
    }

    /// Length `N` of the rising factorial that the split reproduces at index `k`.
    pub fn full_length(&self, k: usize) -> usize {
        self.n * k + self.r + 1
    }

    pub fn evaluate(&self, k: usize) -> GaussianRational {
        let scale = GaussianRational::from_int(self.n as i64).pow((self.n * k) as u64);
        self.factors
            .iter()
            .map(|c| pochhammer(c, k))
            .fold(&scale * &self.constant, |acc, x| &acc * &x)
    }
}

pub fn pochhammer_split_offset(
    a: &GaussianRational,
    n: usize,
    j: usize,
    k: usize,
) -> Result<(PochSplitOffset, GaussianRational), HypError> {
    let split = PochSplitOffset::new(a, n, j)?;
    let value = split.evaluate(k);
    Ok((split, value))
}

/// `C * x^j * pFq(upper; lower; s*x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypSeriesRecord", into = "HypSeriesRecord")]
pub struct HypSeries {
    prefactor: GaussianRational,
    exponent: usize,
    upper: Vec<GaussianRational>,
    lower: Vec<GaussianRational>,
    scale: GaussianRational,
}

/// Unvalidated wire form; field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypSeriesRecord {
    pub prefactor: GaussianRational,
    pub exponent: usize,
    pub upper: Vec<GaussianRational>,
    pub lower: Vec<GaussianRational>,
    pub scale: GaussianRational,
}

impl TryFrom<HypSeriesRecord> for HypSeries {
    type Error = HypError;

    fn try_from(r: HypSeriesRecord) -> Result<Self, HypError> {
        HypSeries::new(r.prefactor, r.exponent, r.upper, r.lower, r.scale)
    }
}

impl From<HypSeries> for HypSeriesRecord {
    fn from(h: HypSeries) -> Self {
        HypSeriesRecord {
            prefactor: h.prefactor,
            exponent: h.exponent,
            upper: h.upper,
            lower: h.lower,
            scale: h.scale,
        }
    }
}

impl HypSeries {
    pub fn new(
        prefactor: GaussianRational,
        exponent: usize,
        upper: Vec<GaussianRational>,
        lower: Vec<GaussianRational>,
        scale: GaussianRational,
    ) -> Result<Self, HypError> {
        if let Some(b) = lower.iter().find(|b| b.is_nonpositive_integer()) {
            return Err(HypError::IllegalLowerParameter(b.clone()));
        }
        if scale.is_zero() {
            return Err(HypError::ZeroScale);
        }
        Ok(HypSeries { prefactor, exponent, upper, lower, scale })
    }

    /// Unit prefactor and scale.
    pub fn simple(
        exponent: usize,
        upper: Vec<GaussianRational>,
        lower: Vec<GaussianRational>,
    ) -> Result<Self, HypError> {
        Self::new(GaussianRational::one(), exponent, upper, lower, GaussianRational::one())
    }

    /// `1/(1-x)`, stored as `1F0(1;;x)`.
    pub fn geometric() -> Self {
        HypSeries {
            prefactor: GaussianRational::one(),
            exponent: 0,
            upper: vec![GaussianRational::one()],
            lower: vec![],
            scale: GaussianRational::one(),
        }
    }

    /// `Li_2(x) = x * 3F2(1,1,1; 2,2; x)`.
    pub fn dilogarithm() -> Self {
        let one = GaussianRational::one();
        let two = GaussianRational::from_int(2);
        HypSeries {
            prefactor: one.clone(),
            exponent: 1,
            upper: vec![one.clone(), one.clone(), one.clone()],
            lower: vec![two.clone(), two],
            scale: one,
        }
    }

    pub fn prefactor(&self) -> &GaussianRational {
        &self.prefactor
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn upper(&self) -> &[GaussianRational] {
        &self.upper
    }

    pub fn lower(&self) -> &[GaussianRational] {
        &self.lower
    }

    pub fn scale(&self) -> &GaussianRational {
        &self.scale
    }

    pub fn with_prefactor(mut self, c: GaussianRational) -> Self {
        self.prefactor = c;
        self
    }

    pub fn with_exponent(mut self, j: usize) -> Self {
        self.exponent = j;
        self
    }

    pub fn with_scale(self, s: GaussianRational) -> Result<Self, HypError> {
        if s.is_zero() {
            return Err(HypError::ZeroScale);
        }
        Ok(HypSeries { scale: s, ..self })
    }

    /// Lower parameters followed by the `1` standing for `k!`.
    pub fn augmented_lower(&self) -> Vec<GaussianRational> {
        let mut b = self.lower.clone();
        b.push(GaussianRational::one());
        b
    }

    /// `p = q + 1` with `k!` counted as a lower parameter.
    pub fn is_balanced(&self) -> bool {
        self.upper.len() == self.lower.len() + 1
    }

    /// True when some upper parameter is a non-positive integer, so the
    /// coefficients vanish from some index on.
    pub fn is_terminating(&self) -> bool {
        self.upper.iter().any(GaussianRational::is_nonpositive_integer)
    }

    /// Coefficient of `x^m`, from fresh Pochhammer products.
    pub fn coefficient(&self, m: usize) -> GaussianRational {
        if m < self.exponent || self.prefactor.is_zero() {
            return GaussianRational::zero();
        }
        let k = m - self.exponent;
        let num: GaussianRational = self.upper.iter().map(|a| pochhammer(a, k)).product();
        if num.is_zero() {
            return num;
        }
        let den: GaussianRational = self
            .augmented_lower()
            .iter()
            .map(|b| pochhammer(b, k))
            .product();
        &(&(&self.prefactor * &self.scale.pow(k as u64)) * &num) / &den
    }

    /// Series of order `order`, built from the term ratio
    /// `t_{k+1}/t_k = s * prod(a_i + k) / (prod(b_i + k) * (k + 1))`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = vec![GaussianRational::zero(); order + 1];
        if self.exponent > order || self.prefactor.is_zero() {
            return TruncatedSeries::new(coeffs).expect("non-empty");
        }
        let mut term = self.prefactor.clone();
        let mut up = self.upper.clone();
        let mut low = self.lower.clone();
        let one = GaussianRational::one();
        let last = order - self.exponent;
        for k in 0..=last {
            coeffs[self.exponent + k] = term.clone();
            if k == last {
                break;
            }
            let num = up.iter().fold(self.scale.clone(), |acc, a| &acc * a);
            if num.is_zero() {
                break;
            }
            let den = low.iter().fold(GaussianRational::from_int(k as i64 + 1), |acc, b| &acc * b);
            term = &(&term * &num) / &den;
            up.iter_mut().for_each(|a| *a += &one);
            low.iter_mut().for_each(|b| *b += &one);
        }
        TruncatedSeries::new(coeffs).expect("non-empty")
    }

    /// Cancel equal upper/lower pairs one for one, then sort both vectors.
    pub fn canonicalize(&self) -> HypSeries {
        let (upper, lower) = cancel_common(&self.upper, &self.lower);
        HypSeries { upper, lower, ..self.clone() }
    }
}

/// Multiset difference of two parameter vectors: removes common values one
/// copy at a time and returns both remainders sorted.
pub fn cancel_common(
    upper: &[GaussianRational],
    lower: &[GaussianRational],
) -> (Vec<GaussianRational>, Vec<GaussianRational>) {
    let mut up = upper.to_vec();
    let mut low = lower.to_vec();
    up.sort();
    low.sort();
    let (mut i, mut j) = (0, 0);
    let mut keep_up = Vec::with_capacity(up.len());
    let mut keep_low = Vec::with_capacity(low.len());
    while i < up.len() && j < low.len() {
        match up[i].cmp(&low[j]) {
            std::cmp::Ordering::Less => {
                keep_up.push(up[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                keep_low.push(low[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    keep_up.extend_from_slice(&up[i..]);
    keep_low.extend_from_slice(&low[j..]);
    (keep_up, keep_low)
}
