//! Seeded property suites behind `hecke verify`.
//!
//! Each suite draws its cases from [`crate::random`] and stops at the first
//! counterexample, which it describes in the returned report.

use num_integer::gcd;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hecke::{apply_un, oracle_check, parameter_sum_shift};
use crate::hypergeometric::{
    cancel_common, pochhammer, pochhammer_split, pochhammer_split_offset, HypSeries,
};
use crate::multiplicative::{classify_cm, hyp_coeff_sequence, test_complete_multiplicativity};
use crate::random::{self, HypSampler};
use crate::scalar::{GaussianRational, Rational};
use crate::series::{radius, TruncatedSeries};
use crate::spectral::{
    classify_eigen, eigenvalue_candidate, gamma_identity_check, make_eigenfunction,
    multisets_equal_via_newton, power_sums_equal, satisfies_eigenrelation, NotEigenReason,
};

pub const SUITES: [&str; 7] = [
    "operator-algebra",
    "adjoint",
    "pochhammer",
    "oracle",
    "spectrum",
    "newton",
    "multiplicative",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Outcome = Result<usize, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

pub fn run(name: &str, seed: u64) -> Result<SuiteReport, UnknownSuite> {
    let outcome = match name {
        "operator-algebra" => operator_algebra(seed),
        "adjoint" => adjoint(seed),
        "pochhammer" => pochhammer_splitting(seed),
        "oracle" => symbolic_oracle(seed),
        "spectrum" => spectrum(seed),
        "newton" => newton(seed),
        "multiplicative" => multiplicative(seed),
        other => return Err(UnknownSuite(other.to_string())),
    };
    let (cases, failure) = match outcome {
        Ok(cases) => (cases, None),
        Err(msg) => (0, Some(msg)),
    };
    Ok(SuiteReport { suite: name.to_string(), seed, cases, failure })
}

/// Composition laws of `U` and `V`, the fixed points of `V_n U_n`, and the
/// action on `x^j g`.
pub fn operator_algebra(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let cases = 200;
    for case in 0..cases {
        let n = rng.random_range(1..=4usize);
        let m = rng.random_range(1..=4usize);
        let order = n * m * 20 + rng.random_range(0..10usize);
        let f = random::series(&mut rng, order, 9, 0.3);
        let ctx = format!("case {case} (n = {n}, m = {m}, order = {order})");

        ensure!(f.u_n(m).u_n(n) == f.u_n(n * m), "{ctx}: U_n U_m != U_nm");
        ensure!(f.u_n(n).u_n(m) == f.u_n(n * m), "{ctx}: U_m U_n != U_nm");

        let small = f.truncated(order / (n * m)).unwrap();
        let k = small.order();
        let vv = small.v_n(m, m * k).unwrap().v_n(n, n * m * k).unwrap();
        ensure!(vv == small.v_n(n * m, n * m * k).unwrap(), "{ctx}: V_n V_m != V_nm");
        let vv = small.v_n(n, n * k).unwrap().v_n(m, n * m * k).unwrap();
        ensure!(vv == small.v_n(n * m, n * m * k).unwrap(), "{ctx}: V_m V_n != V_nm");

        ensure!(f.v_n(n, n * order).unwrap().u_n(n) == f, "{ctx}: U_n V_n != Id");

        let g = gcd(m, n);
        let lhs = f.v_n(m, m * order).unwrap().u_n(n);
        let rhs_inner = f.u_n(n / g);
        let rhs = rhs_inner.v_n(m / g, (m / g) * rhs_inner.order()).unwrap();
        ensure!(
            lhs.truncated(rhs.order()).unwrap() == rhs,
            "{ctx}: U_n V_m != V_(m/g) U_(n/g)"
        );

        let (kk, jj) = (rng.random_range(1..=3usize), rng.random_range(1..=3usize));
        let vm = f.v_n(m, m * order).unwrap();
        ensure!(vm.u_n(kk * jj) == vm.u_n(jj).u_n(kk), "{ctx}: U_kj V_m != U_k (U_j V_m)");

        // V_n U_n fixes exactly the series supported on multiples of n.
        let top = n * (order / n);
        let sparse = TruncatedSeries::from_fn(top, |i| {
            if i % n == 0 { f.coeffs()[i].clone() } else { GaussianRational::zero() }
        });
        ensure!(sparse.u_n(n).v_n(n, top).unwrap() == sparse, "{ctx}: V_n U_n moved a fixed point");
        let dense = f.truncated(top).unwrap();
        let has_offgrid = dense.coeffs().iter().enumerate().any(|(i, c)| i % n != 0 && !c.is_zero());
        let fixed = dense.u_n(n).v_n(n, top).unwrap() == dense;
        ensure!(fixed != has_offgrid, "{ctx}: V_n U_n fixed-point characterization failed");

        // U_n (x^j g) index by index.
        let j = rng.random_range(0..=7usize);
        let shifted = TruncatedSeries::from_fn(order + j, |i| {
            if i < j { GaussianRational::zero() } else { f.coeffs()[i - j].clone() }
        });
        let image = shifted.u_n(n);
        for (i, c) in image.coeffs().iter().enumerate() {
            let expected = if j % n == 0 {
                if i < j / n { GaussianRational::zero() } else { f.coeffs()[n * (i - j / n)].clone() }
            } else if i < 1 + j / n {
                GaussianRational::zero()
            } else {
                f.coeffs()[n * (i - j / n) - j % n].clone()
            };
            ensure!(*c == expected, "{ctx}: U_n(x^{j} g) differs from the closed form at index {i}");
        }
    }
    Ok(cases)
}

/// `<f, V_n g>_R` (to index nK) against `<U_n f, g>_{R^n}` (to K), plus
/// positivity of `<f, f>` for real `f`.
pub fn adjoint(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let k = 50;
    let r = radius(1, 3);
    let cases = 100;
    for case in 0..cases {
        let n = 2 + case % 2;
        let f = random::series(&mut rng, n * k, 9, 0.4);
        let g = random::series(&mut rng, k, 9, 0.4);
        let lhs = f.inner_product(&g.v_n(n, n * k).unwrap(), &r);
        let rhs = f.u_n(n).inner_product(&g, &r.pow(n as isize));
        ensure!(lhs.value == rhs.value, "case {case} (n = {n}): {} != {}", lhs.value, rhs.value);

        let real = random::series(&mut rng, k, 9, 0.0);
        let norm = real.inner_product(&real, &r).value;
        ensure!(
            norm.is_real() && *norm.re() >= Rational::ZERO,
            "case {case}: <f, f> = {norm} is not a non-negative real"
        );
    }
    Ok(cases)
}

/// Both residue-class splittings of the rising factorial, the shift relation
/// and the term ratio.
pub fn pochhammer_splitting(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let cases = 500;
    for case in 0..cases {
        let a = random::small_scalar(&mut rng, 9, 0.3);
        let n = rng.random_range(1..=6usize);
        let k = rng.random_range(0..=20usize);
        ensure!(
            pochhammer_split(&a, n, k) == pochhammer(&a, k * n),
            "split case {case}: a = {a}, n = {n}, k = {k}"
        );

        let k_ratio = rng.random_range(0..=15usize);
        let base = pochhammer(&a, k_ratio);
        if !base.is_zero() {
            ensure!(
                &pochhammer(&a, k_ratio + 1) / &base == a.add_int(k_ratio as i64),
                "ratio case {case}: a = {a}, k = {k_ratio}"
            );
            ensure!(
                a.add_int(k_ratio as i64) == &(&a * &pochhammer(&a.add_int(1), k_ratio)) / &base,
                "shift relation case {case}: c = {a}, k = {k_ratio}"
            );
        }
    }
    for case in 0..cases {
        let a = random::small_scalar(&mut rng, 9, 0.3);
        let (j, n) = loop {
            let n = rng.random_range(2..=6usize);
            let j = rng.random_range(1..=17usize);
            if j % n != 0 {
                break (j, n);
            }
        };
        let k = rng.random_range(0..=12usize);
        let (split, value) = pochhammer_split_offset(&a, n, j, k).map_err(|e| e.to_string())?;
        let full = n * (k + 1) - j % n;
        ensure!(split.r <= n - 2, "offset case {case}: r = {} out of range for n = {n}", split.r);
        ensure!(split.full_length(k) == full, "offset case {case}: N = {} != {full}", split.full_length(k));
        ensure!(
            value == pochhammer(&a, full),
            "offset case {case}: a = {a}, n = {n}, j = {j}, k = {k}"
        );
    }
    Ok(2 * cases)
}

/// Symbolic `U_n` against coefficient decimation, in both divisibility regimes.
pub fn symbolic_oracle(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let sampler = HypSampler::default();
    let cases = 500;
    for case in 0..cases {
        let (j, n) = match case {
            0..100 => random::exponent_and_operator(&mut rng, 7, 5, true),
            100..200 => random::exponent_and_operator(&mut rng, 7, 5, false),
            _ => (rng.random_range(0..=7usize), rng.random_range(1..=5usize)),
        };
        let p = rng.random_range(0..=3usize);
        let q = rng.random_range(0..=3usize);
        let h = sampler.sample_shape(&mut rng, p, q, j);
        let ctx = format!("case {case}: n = {n}, h = {}", describe(&h));

        let cmp = oracle_check(&h, n, 40);
        ensure!(cmp.matches(), "{ctx}: first mismatch at index {:?}", cmp.first_mismatch);
        ensure!(
            cmp.image.lower().iter().all(|b| !b.is_nonpositive_integer()),
            "{ctx}: illegal lower parameter in the image"
        );
        if h.is_balanced() {
            ensure!(cmp.image.is_balanced(), "{ctx}: balanced input, unbalanced image");
            ensure!(*cmp.image.scale() == h.scale().pow(n as u64), "{ctx}: balanced scale changed");
        }
        if j % n == 0 {
            let expected = GaussianRational::ratio(((n as i64) - 1) * (p as i64 - q as i64 - 1), 2);
            let shift = parameter_sum_shift(&h, n).map_err(|e| e.to_string())?;
            ensure!(shift == expected, "{ctx}: parameter sum shift {shift} != {expected}");
        }
        let m = rng.random_range(1..=3usize);
        ensure!(
            apply_un(&cmp.image, m).expand(20) == apply_un(&h, n * m).expand(20),
            "{ctx}: U_{m} U_{n} != U_{}",
            n * m
        );
    }
    Ok(cases)
}

/// The eigenfunction grid, simultaneous eigenvalues, the gamma identity, and
/// the exponent constraints.
pub fn spectrum(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let mut cases = 0;

    let li2 = HypSeries::dilogarithm().expand(200);
    for n in 2..=7usize {
        let lambda = GaussianRational::ratio(1, (n * n) as i64);
        ensure!(
            li2.u_n(n) == li2.truncated(200 / n).unwrap().scaled(&lambda),
            "U_{n} Li_2 != Li_2 / {n}^2"
        );
        cases += 1;
    }

    for e in -4..=4i64 {
        let h = make_eigenfunction(e);
        let report = classify_eigen(&h);
        ensure!(report.is_eigen() && report.exponent == Some(e), "e = {e}: classified as {report:?}");
        for n in [2usize, 3, 5] {
            let expected = GaussianRational::from_int(n as i64).powi(e).unwrap();
            let got = eigenvalue_candidate(&h, n).map_err(|err| err.to_string())?;
            ensure!(got == expected, "e = {e}, n = {n}: eigenvalue {got} != {expected}");
        }
        for n in 2..=7usize {
            ensure!(satisfies_eigenrelation(&h, n, e, 40), "e = {e}: not an eigenfunction of U_{n}");
        }
        for n in 1..=10usize {
            ensure!(
                gamma_identity_check(&h, n).map_err(|err| err.to_string())?,
                "e = {e}: gamma identity fails at n = {n}"
            );
        }
        cases += 1;
    }

    let geo = classify_eigen(&HypSeries::geometric());
    ensure!(geo.is_eigen() && geo.exponent == Some(0), "geometric series classified as {geo:?}");

    let gate = HypSampler { nonterminating: true, ..HypSampler::default() }.with_exponent(2..=9);
    for case in 0..50 {
        let h = gate.sample(&mut rng);
        let report = classify_eigen(&h);
        ensure!(
            report.reason == Some(NotEigenReason::BadExponent),
            "exponent gate case {case}: {} classified as {report:?}",
            describe(&h)
        );
        cases += 1;
    }

    let rigid = HypSampler { nonterminating: true, ..HypSampler::default() }.with_exponent(0..=0);
    let mut drawn = 0;
    while drawn < 50 {
        let p = rng.random_range(1..=3usize);
        let h = rigid.sample_shape(&mut rng, p, p - 1, 0);
        let form = h.canonicalize();
        let (up, low) = cancel_common(form.upper(), &form.augmented_lower());
        if up.is_empty() && low.is_empty() {
            continue;
        }
        drawn += 1;
        let report = classify_eigen(&h);
        ensure!(!report.is_eigen(), "j = 0 case {drawn}: {} classified as eigen", describe(&h));
        cases += 1;
    }

    // Balance is forced by numeric proportionality (terminating series can
    // be annihilated outright, so they are left out).
    let proportional = HypSampler { nonterminating: true, ..HypSampler::default() }.with_exponent(1..=1);
    for case in 0..30 {
        let h = proportional.sample(&mut rng);
        if satisfies_eigenrelation(&h, 2, 0, 40) || proportional_under_u2(&h) {
            ensure!(h.canonicalize().is_balanced(), "degree case {case}: {} is unbalanced", describe(&h));
        }
    }
    Ok(cases)
}

fn proportional_under_u2(h: &HypSeries) -> bool {
    let base = h.expand(40);
    let image = h.expand(80).u_n(2);
    let Some(pivot) = base.coeffs().iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let lambda = &image.coeffs()[pivot] / &base.coeffs()[pivot];
    image == base.scaled(&lambda)
}

/// Power sums, Newton's identities and sorting agree on multiset equality.
pub fn newton(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let cases = 300;
    for case in 0..cases {
        let p = rng.random_range(0..=6usize);
        let u: Vec<_> = (0..p).map(|_| random::small_scalar(&mut rng, 3, 0.3)).collect();
        let mut v = u.clone();
        match case % 3 {
            0 => v.shuffle(&mut rng),
            1 => {
                v.shuffle(&mut rng);
                if p > 0 {
                    let idx = rng.random_range(0..p);
                    v[idx] = random::small_scalar(&mut rng, 3, 0.3);
                }
            }
            _ => v = (0..p).map(|_| random::small_scalar(&mut rng, 3, 0.3)).collect(),
        }
        let mut su = u.clone();
        let mut sv = v.clone();
        su.sort();
        sv.sort();
        let sorted = su == sv;
        let sums = power_sums_equal(&u, &v, p).map_err(|e| e.to_string())?;
        let newton = multisets_equal_via_newton(&u, &v).map_err(|e| e.to_string())?;
        ensure!(
            sums == sorted && newton == sorted,
            "case {case}: u = {u:?}, v = {v:?}: power sums {sums}, Newton {newton}, sorting {sorted}"
        );
    }
    Ok(cases)
}

/// Parameters of `c(n) = n^e` in the 1-based coefficient form.
pub fn cm_family(e: i64) -> (Vec<GaussianRational>, Vec<GaussianRational>) {
    let one = GaussianRational::one();
    let two = GaussianRational::from_int(2);
    let m = e.unsigned_abs() as usize;
    match e {
        0 => (vec![one.clone()], vec![one]),
        e if e < 0 => (vec![one; m], vec![two; m]),
        _ => (vec![two; m], vec![one; m]),
    }
}

/// Whether the parameters reduce to one of the `n^e` families.
pub fn is_cm_family(upper: &[GaussianRational], lower: &[GaussianRational]) -> bool {
    let (up, low) = cancel_common(upper, lower);
    let one = GaussianRational::one();
    let two = GaussianRational::from_int(2);
    up.len() == low.len()
        && ((up.iter().all(|x| *x == one) && low.iter().all(|x| *x == two))
            || (up.iter().all(|x| *x == two) && low.iter().all(|x| *x == one)))
}

/// Complete multiplicativity of the `n^e` grid, and of perturbations of it.
pub fn multiplicative(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let mut cases = 0;
    for e in -4..=4i64 {
        let (upper, lower) = cm_family(e);
        let seq = hyp_coeff_sequence(&upper, &lower, 200).map_err(|err| err.to_string())?;
        ensure!(test_complete_multiplicativity(&seq).is_cm(), "e = {e}: pairwise test failed");
        for (i, c) in seq.iter().enumerate() {
            let n = GaussianRational::from_int(i as i64 + 1);
            ensure!(*c == n.powi(e).unwrap(), "e = {e}: c({}) = {c}", i + 1);
        }
        let report = classify_cm(&upper, &lower, 60).map_err(|err| err.to_string())?;
        ensure!(report.is_cm() && report.exponent == Some(e), "e = {e}: classified as {report:?}");
        cases += 1;
    }

    let mut drawn = 0;
    while drawn < 50 {
        let e = rng.random_range(-4..=4i64);
        let (mut upper, mut lower) = cm_family(e);
        let total = upper.len() + lower.len();
        let idx = rng.random_range(0..total);
        if idx < upper.len() {
            upper[idx] = upper[idx].add_int(1);
        } else {
            lower[idx - upper.len()] = lower[idx - upper.len()].add_int(1);
        }
        if is_cm_family(&upper, &lower) {
            continue;
        }
        drawn += 1;
        let ctx = format!("perturbation {drawn}: upper {upper:?}, lower {lower:?}");
        let seq = hyp_coeff_sequence(&upper, &lower, 60).map_err(|err| err.to_string())?;
        let pairwise = test_complete_multiplicativity(&seq);
        ensure!(!pairwise.is_cm(), "{ctx}: pairwise test accepted");
        let (m, k) = pairwise.witness.expect("NotCM carries a witness");
        ensure!(m * k <= 30, "{ctx}: witness ({m}, {k}) beyond 30");
        let report = classify_cm(&upper, &lower, 60).map_err(|err| format!("{ctx}: {err}"))?;
        ensure!(!report.is_cm(), "{ctx}: classified as CM");
        cases += 1;
    }
    Ok(cases)
}

fn describe(h: &HypSeries) -> String {
    format!(
        "{} * x^{} * F({:?}; {:?}; {} x)",
        h.prefactor(),
        h.exponent(),
        h.upper(),
        h.lower(),
        h.scale()
    )
}
