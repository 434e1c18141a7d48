//! Seeded generators for randomized checks. Everything is driven by a
//! `ChaCha8Rng`, so a seed fixes the whole sample.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergeometric::HypSeries;
use crate::scalar::GaussianRational;
use crate::series::TruncatedSeries;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::ratio(rng.random_range(-bound..=bound), rng.random_range(1..=bound))
}

/// A small Gaussian rational; the imaginary part is nonzero with probability `complex_prob`.
pub fn small_scalar<R: Rng>(rng: &mut R, bound: i64, complex_prob: f64) -> GaussianRational {
    let re = small_rational(rng, bound);
    if rng.random_bool(complex_prob) {
        let im = loop {
            let im = small_rational(rng, bound);
            if !num_traits::Zero::is_zero(&im) {
                break im;
            }
        };
        &re + &(&im * &GaussianRational::i())
    } else {
        re
    }
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, bound: i64, complex_prob: f64) -> GaussianRational {
    loop {
        let x = small_scalar(rng, bound, complex_prob);
        if !num_traits::Zero::is_zero(&x) {
            return x;
        }
    }
}

/// A scalar that is not 0, -1, -2, ...
pub fn legal_lower<R: Rng>(rng: &mut R, bound: i64, complex_prob: f64) -> GaussianRational {
    loop {
        let x = small_scalar(rng, bound, complex_prob);
        if !x.is_nonpositive_integer() {
            return x;
        }
    }
}

/// Shape of randomly drawn hypergeometric series.
#[derive(Debug, Clone)]
pub struct HypSampler {
    pub p: RangeInclusive<usize>,
    pub q: RangeInclusive<usize>,
    pub j: RangeInclusive<usize>,
    /// Numerator/denominator bound for parameters.
    pub bound: i64,
    pub complex_prob: f64,
    /// Probability of a non-unit prefactor and scale.
    pub decorate_prob: f64,
    /// Reject non-positive integer upper parameters.
    pub nonterminating: bool,
}

impl Default for HypSampler {
    fn default() -> Self {
        HypSampler {
            p: 0..=3,
            q: 0..=3,
            j: 0..=7,
            bound: 9,
            complex_prob: 0.25,
            decorate_prob: 0.5,
            nonterminating: false,
        }
    }
}

impl HypSampler {
    pub fn with_exponent(mut self, j: RangeInclusive<usize>) -> Self {
        self.j = j;
        self
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> HypSeries {
        let p = rng.random_range(self.p.clone());
        let q = rng.random_range(self.q.clone());
        let j = rng.random_range(self.j.clone());
        self.sample_shape(rng, p, q, j)
    }

    pub fn sample_shape<R: Rng>(&self, rng: &mut R, p: usize, q: usize, j: usize) -> HypSeries {
        let upper = (0..p)
            .map(|_| {
                if self.nonterminating {
                    legal_lower(rng, self.bound, self.complex_prob)
                } else {
                    small_scalar(rng, self.bound, self.complex_prob)
                }
            })
            .collect();
        let lower = (0..q).map(|_| legal_lower(rng, self.bound, self.complex_prob)).collect();
        let (prefactor, scale) = if rng.random_bool(self.decorate_prob) {
            (
                nonzero_scalar(rng, self.bound, self.complex_prob),
                nonzero_scalar(rng, 3, self.complex_prob),
            )
        } else {
            (GaussianRational::from_int(1), GaussianRational::from_int(1))
        };
        HypSeries::new(prefactor, j, upper, lower, scale).expect("sampled parameters are legal")
    }
}

pub fn series<R: Rng>(rng: &mut R, order: usize, bound: i64, complex_prob: f64) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |_| small_scalar(rng, bound, complex_prob))
}

/// Draw `j` and `n` in `0..=max_j`, `1..=max_n` with `n | j` (`divisible`) or not.
pub fn exponent_and_operator<R: Rng>(
    rng: &mut R,
    max_j: usize,
    max_n: usize,
    divisible: bool,
) -> (usize, usize) {
    loop {
        let n = rng.random_range(1..=max_n);
        let j = rng.random_range(0..=max_j);
        if (j % n == 0) == divisible {
            return (j, n);
        }
    }
}
