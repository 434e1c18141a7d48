//! Acceptance gate: every criterion is an exact check with a wall-clock bound.
//! Prints one line per criterion and exits nonzero if any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_core::hypergeometric::{cancel_common, pochhammer};
use hecke_core::random::{self, HypSampler};
use hecke_core::spectral::{
    classify_eigen, eigenvalue_candidate, gamma_identity_check, make_eigenfunction, NotEigenReason,
};
use hecke_core::suites;
use hecke_core::{apply_un, GaussianRational, HypSeries};
use rand::Rng;

const SEED: u64 = 20_240_611;

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, u64, Check); 10] = [
        ("1  dilogarithm eigenrelation", 1, dilogarithm),
        ("2  spectrum grid", 5, spectrum_grid),
        ("3  symbolic vs oracle", 60, symbolic_vs_oracle),
        ("4  operator algebra", 5, || suite("operator-algebra")),
        ("5  adjoint relation", 5, || suite("adjoint")),
        ("6  gamma identity", 1, gamma_identity),
        ("7  completely multiplicative", 10, || suite("multiplicative")),
        ("8  exponent rigidity", 5, exponent_rigidity),
        ("9  Newton multisets", 2, || suite("newton")),
        ("10 Pochhammer splitting", 5, || suite("pochhammer")),
    ];

    let mut failed = 0;
    for (name, bound, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(bound);
        let line = match (&outcome, in_time) {
            (Ok(detail), true) => format!("PASS {name}: {detail}"),
            (Ok(detail), false) => format!("FAIL {name}: {detail}, but over the {bound} s bound"),
            (Err(msg), _) => format!("FAIL {name}: {msg}"),
        };
        println!("{line} [{:.3} s]", elapsed.as_secs_f64());
        if outcome.is_err() || !in_time {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

fn suite(name: &str) -> Result<String, String> {
    let report = suites::run(name, SEED).map_err(|e| e.to_string())?;
    match report.failure {
        None => Ok(format!("{} cases", report.cases)),
        Some(msg) => Err(msg),
    }
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn dilogarithm() -> Result<String, String> {
    let li2 = HypSeries::dilogarithm().expand(200);
    for n in 2..=7usize {
        let lambda = GaussianRational::ratio(1, (n * n) as i64);
        let expected = li2.truncated(200 / n).unwrap().scaled(&lambda);
        if li2.u_n(n) != expected {
            return Err(format!("U_{n} Li_2 differs from Li_2 / {n}^2"));
        }
    }
    Ok("n = 2..7 on 201 coefficients".into())
}

fn spectrum_grid() -> Result<String, String> {
    for e in -4..=4i64 {
        let h = make_eigenfunction(e);
        let report = classify_eigen(&h);
        if !report.is_eigen() || report.exponent != Some(e) {
            return Err(format!("e = {e}: {report:?}"));
        }
        for n in [2usize, 3, 5] {
            let got = eigenvalue_candidate(&h, n).map_err(|err| err.to_string())?;
            if got != int(n as i64).powi(e).unwrap() {
                return Err(format!("e = {e}, n = {n}: eigenvalue {got}"));
            }
        }
    }
    Ok("27 (e, n) pairs".into())
}

fn symbolic_vs_oracle() -> Result<String, String> {
    let mut rng = random::rng(SEED);
    let sampler = HypSampler::default();
    let (mut divisible, mut indivisible) = (0, 0);
    for case in 0..500 {
        let (j, n) = match case {
            0..100 => random::exponent_and_operator(&mut rng, 7, 5, true),
            100..200 => random::exponent_and_operator(&mut rng, 7, 5, false),
            _ => (rng.random_range(0..=7usize), rng.random_range(1..=5usize)),
        };
        let (p, q) = (rng.random_range(0..=3usize), rng.random_range(0..=3usize));
        let h = sampler.sample_shape(&mut rng, p, q, j);
        let symbolic = apply_un(&h, n).expand(40);
        let oracle = h.expand(245).u_n(n).truncated(40).unwrap();
        if symbolic != oracle {
            return Err(format!("case {case}, n = {n}: {h:?}"));
        }
        if j % n == 0 {
            divisible += 1;
        } else {
            indivisible += 1;
        }
    }
    Ok(format!("500 instances, {divisible} with n | j, {indivisible} with n ∤ j"))
}

fn gamma_identity() -> Result<String, String> {
    let (one, two) = (int(1), int(2));
    for n in 2..=10usize {
        let nn = int(n as i64);
        let lhs = &nn.pow(3) * &pochhammer(&one, n - 1).pow(3);
        let rhs = &(&nn * &pochhammer(&two, n - 1).pow(2)) * &pochhammer(&one, n - 1);
        if lhs != rhs {
            return Err(format!("displayed identity fails at n = {n}"));
        }
    }
    for e in -4..=4i64 {
        let h = make_eigenfunction(e);
        for n in 1..=10usize {
            if !gamma_identity_check(&h, n).map_err(|err| err.to_string())? {
                return Err(format!("e = {e}, n = {n}"));
            }
        }
    }
    Ok("n = 2..10, 9 eigenfunctions".into())
}

fn exponent_rigidity() -> Result<String, String> {
    let mut rng = random::rng(SEED);
    let legal = HypSampler { nonterminating: true, ..HypSampler::default() };
    let gate = legal.clone().with_exponent(2..=9);
    for case in 0..50 {
        let h = gate.sample(&mut rng);
        let report = classify_eigen(&h);
        if report.reason != Some(NotEigenReason::BadExponent) {
            return Err(format!("j >= 2 case {case}: {report:?}"));
        }
    }

    let geo = classify_eigen(&HypSeries::geometric());
    if !geo.is_eigen() || geo.exponent != Some(0) {
        return Err(format!("geometric series: {geo:?}"));
    }

    let mut drawn = 0;
    while drawn < 50 {
        let (p, q) = (rng.random_range(0..=3usize), rng.random_range(0..=3usize));
        let h = legal.sample_shape(&mut rng, p, q, 0);
        let form = h.canonicalize();
        let (up, low) = cancel_common(form.upper(), &form.augmented_lower());
        if up.is_empty() && low.is_empty() {
            continue;
        }
        drawn += 1;
        let report = classify_eigen(&h);
        if report.is_eigen() {
            return Err(format!("j = 0 case {drawn}: {h:?} classified as eigen"));
        }
    }
    Ok("50 + 1 + 50 instances".into())
}
