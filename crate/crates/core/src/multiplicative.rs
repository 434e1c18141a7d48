//! Completely multiplicative hypergeometric coefficients.
//!
//! `c(n) = prod (a_i)_{n-1} / prod (b_i)_{n-1}` (1-based, so `c(1) = 1`) is
//! completely multiplicative exactly when `sum c(n) x^n` is an eigenfunction
//! of every `U_n`, i.e. when `c(n) = n^a`. [`classify_cm`] decides this both
//! ways and insists that the two answers agree.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergeometric::HypSeries;
use crate::scalar::GaussianRational;
use crate::spectral::classify_eigen;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CmError {
    #[error("lower parameter {0} is a non-positive integer")]
    IllegalParameter(GaussianRational),
    /// An upper parameter 0 makes `c(n) = 0` for all `n >= 2`: the indicator of
    /// `n = 1`, which is completely multiplicative but not of the form `C n^a`.
    #[error("upper parameter 0 gives the degenerate sequence 1, 0, 0, ...")]
    DegenerateSequence,
    #[error("eigenfunction route says {eigen_route:?}, pairwise test says {pairwise:?}")]
    RouteDisagreement { eigen_route: CmVerdict, pairwise: CmVerdict },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CmVerdict {
    CompletelyMultiplicative,
    NotCM,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub verdict: CmVerdict,
    /// `c(n) = constant * n^exponent` when completely multiplicative.
    pub exponent: Option<i64>,
    pub constant: Option<GaussianRational>,
    /// First pair `(m, k)`, `2 <= m <= k`, with `c(mk) c(1) != c(m) c(k)`.
    pub witness: Option<(usize, usize)>,
}

impl CmReport {
    pub fn is_cm(&self) -> bool {
        self.verdict == CmVerdict::CompletelyMultiplicative
    }
}

fn check_lower(lower: &[GaussianRational]) -> Result<(), CmError> {
    match lower.iter().find(|b| b.is_nonpositive_integer()) {
        Some(b) => Err(CmError::IllegalParameter(b.clone())),
        None => Ok(()),
    }
}

/// `c(1..=terms)`; index 0 of the result holds `c(1)`.
pub fn hyp_coeff_sequence(
    upper: &[GaussianRational],
    lower: &[GaussianRational],
    terms: usize,
) -> Result<Vec<GaussianRational>, CmError> {
    check_lower(lower)?;
    let mut out = Vec::with_capacity(terms);
    let mut c = GaussianRational::one();
    for i in 0..terms {
        if i > 0 {
            let shift = (i - 1) as i64;
            let num: GaussianRational = upper.iter().map(|a| a.add_int(shift)).product();
            let den: GaussianRational = lower.iter().map(|b| b.add_int(shift)).product();
            c = &(&c * &num) / &den;
        }
        out.push(c.clone());
    }
    Ok(out)
}

/// Pairwise test of `c(mk) = c(m) c(k) / c(1)` for `2 <= m <= k`, `mk <= N`.
/// `c[0]` is `c(1)`. Only `verdict` and `witness` are filled in.
pub fn test_complete_multiplicativity(c: &[GaussianRational]) -> CmReport {
    let not_cm = |m, k| CmReport {
        verdict: CmVerdict::NotCM,
        exponent: None,
        constant: None,
        witness: Some((m, k)),
    };
    let n_max = c.len();
    if n_max > 0 && c[0].is_zero() {
        return not_cm(1, 1);
    }
    let at = |n: usize| &c[n - 1];
    for m in 2..=n_max {
        if m * m > n_max {
            break;
        }
        for k in m..=n_max / m {
            if at(m * k) * &c[0] != at(m) * at(k) {
                return not_cm(m, k);
            }
        }
    }
    CmReport {
        verdict: CmVerdict::CompletelyMultiplicative,
        exponent: None,
        constant: None,
        witness: None,
    }
}

/// Classify `c(n)` through the eigenfunction route and confirm with the
/// pairwise test on `c(1..=terms)`.
pub fn classify_cm(
    upper: &[GaussianRational],
    lower: &[GaussianRational],
    terms: usize,
) -> Result<CmReport, CmError> {
    check_lower(lower)?;
    if upper.iter().any(Zero::is_zero) {
        return Err(CmError::DegenerateSequence);
    }
    let seq = hyp_coeff_sequence(upper, lower, terms)?;
    let pairwise = test_complete_multiplicativity(&seq);

    // sum_{n>=1} c(n) x^n = x * pFq(upper ++ [1]; lower; x): the extra 1 absorbs k!.
    let mut series_upper = upper.to_vec();
    series_upper.push(GaussianRational::one());
    let h = HypSeries::simple(1, series_upper, lower.to_vec())
        .map_err(|_| CmError::IllegalParameter(GaussianRational::zero()))?;
    let report = classify_eigen(&h);

    let eigen_route = if report.is_eigen() {
        CmVerdict::CompletelyMultiplicative
    } else {
        CmVerdict::NotCM
    };
    if eigen_route != pairwise.verdict {
        return Err(CmError::RouteDisagreement { eigen_route, pairwise: pairwise.verdict });
    }
    Ok(match eigen_route {
        CmVerdict::CompletelyMultiplicative => CmReport {
            verdict: eigen_route,
            exponent: report.exponent,
            constant: Some(&seq[0] * h.prefactor()),
            witness: None,
        },
        CmVerdict::NotCM => pairwise,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn qs(xs: &[&str]) -> Vec<GaussianRational> {
        xs.iter().map(|x| q(x)).collect()
    }

    fn ints(f: impl Fn(i64) -> i64, n: i64) -> Vec<GaussianRational> {
        (1..=n).map(|k| GaussianRational::from_int(f(k))).collect()
    }

    #[test]
    fn sequence_examples() {
        let c = hyp_coeff_sequence(&qs(&["1", "1", "1"]), &qs(&["2", "2", "1"]), 10).unwrap();
        assert_eq!(c[2], q("1/9"));
        for (i, x) in c.iter().enumerate() {
            let n = (i + 1) as i64;
            assert_eq!(x, &GaussianRational::ratio(1, n * n));
        }
        let c = hyp_coeff_sequence(&qs(&["3/2", "i"]), &qs(&["i", "3/2"]), 12).unwrap();
        assert!(c.iter().all(One::is_one));
        let c = hyp_coeff_sequence(&qs(&["2", "2"]), &qs(&["1", "1"]), 12).unwrap();
        assert_eq!(c, ints(|n| n * n, 12));
        assert_eq!(
            hyp_coeff_sequence(&qs(&["1"]), &qs(&["-1"]), 4),
            Err(CmError::IllegalParameter(q("-1")))
        );
    }

    #[test]
    fn pairwise_examples() {
        assert!(test_complete_multiplicativity(&ints(|n| n * n * n, 50)).is_cm());
        let r = test_complete_multiplicativity(&ints(|n| n + 1, 10));
        assert_eq!((r.verdict, r.witness), (CmVerdict::NotCM, Some((2, 2))));
        let c = hyp_coeff_sequence(&qs(&["3"]), &qs(&["2"]), 20).unwrap();
        assert_eq!(c[3], q("5/2"));
        let r = test_complete_multiplicativity(&c);
        assert_eq!(r.witness, Some((2, 2)));
    }

    #[test]
    fn pairwise_normalizes_by_first_value() {
        let c: Vec<_> = ints(|n| 3 * n * n, 40);
        assert!(test_complete_multiplicativity(&c).is_cm());
        // Multiplicative but not completely: the witness is the first prime square.
        let phi = ints(|n| (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as i64, 30);
        assert_eq!(test_complete_multiplicativity(&phi).witness, Some((2, 2)));
    }

    #[test]
    fn pairwise_zero_sequences() {
        let zeros = vec![GaussianRational::zero(); 10];
        assert_eq!(test_complete_multiplicativity(&zeros).witness, Some((1, 1)));
    }

    #[test]
    fn classify_examples() {
        let r = classify_cm(&qs(&["1", "1", "1"]), &qs(&["2", "2", "1"]), 60).unwrap();
        assert_eq!((r.verdict, r.exponent, r.constant), (CmVerdict::CompletelyMultiplicative, Some(-2), Some(q("1"))));
        let r = classify_cm(&qs(&["2", "2", "2"]), &qs(&["1", "1", "1"]), 60).unwrap();
        assert_eq!(r.exponent, Some(3));
        let r = classify_cm(&qs(&["3"]), &qs(&["2"]), 60).unwrap();
        assert_eq!(r.verdict, CmVerdict::NotCM);
        assert_eq!(r.witness, Some((2, 2)));
        let r = classify_cm(&[], &[], 60).unwrap();
        assert_eq!(r.exponent, Some(0));
    }

    #[test]
    fn classify_errors() {
        assert_eq!(classify_cm(&qs(&["0"]), &[], 30), Err(CmError::DegenerateSequence));
        assert_eq!(classify_cm(&qs(&["1"]), &qs(&["0"]), 30), Err(CmError::IllegalParameter(q("0"))));
    }
}
