#![allow(dead_code)]

use hecke_core::{GaussianRational, HypSeries, TruncatedSeries};
use proptest::prelude::*;

pub fn q(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

pub fn rational() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| GaussianRational::ratio(n, d))
}

/// Mostly real, sometimes complex, numerators and denominators up to 9.
pub fn scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        3 => rational(),
        1 => (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
            .prop_map(|(a, b, c, d)| GaussianRational::complex(a, b, c, d)),
    ]
}

pub fn nonzero_scalar() -> impl Strategy<Value = GaussianRational> {
    scalar().prop_filter("nonzero", |x| !num_traits::Zero::is_zero(x))
}

pub fn legal_lower() -> impl Strategy<Value = GaussianRational> {
    scalar().prop_filter("legal lower parameter", |x| !x.is_nonpositive_integer())
}

pub fn series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(scalar(), 1..=max_order + 1).prop_map(|c| TruncatedSeries::new(c).unwrap())
}

pub fn series_of_order(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(scalar(), order + 1).prop_map(|c| TruncatedSeries::new(c).unwrap())
}

/// `C x^j pFq(a; b; s x)` with `p, q <= 3`, `j <= max_j`.
pub fn hyp(max_j: usize) -> impl Strategy<Value = HypSeries> {
    (
        nonzero_scalar(),
        0..=max_j,
        prop::collection::vec(scalar(), 0..=3),
        prop::collection::vec(legal_lower(), 0..=3),
        nonzero_scalar(),
    )
        .prop_map(|(c, j, a, b, s)| HypSeries::new(c, j, a, b, s).unwrap())
}

/// Like [`hyp`] but with no non-positive integer upper parameter.
pub fn nonterminating_hyp(j: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = HypSeries> {
    (
        nonzero_scalar(),
        j,
        prop::collection::vec(legal_lower(), 0..=3),
        prop::collection::vec(legal_lower(), 0..=3),
        nonzero_scalar(),
    )
        .prop_map(|(c, j, a, b, s)| HypSeries::new(c, j, a, b, s).unwrap())
}
