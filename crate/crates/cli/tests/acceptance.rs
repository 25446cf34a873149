//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so that the report is always printed;
//! the process exits nonzero if any criterion fails.

mod common;
#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mahler_cli::{format_equation, parse_equation, SeriesDocument};
use mahler_core::algebra::{rat, rat_frac, Poly, Rat, RationalFn, TruncatedSeries};
use mahler_core::analytic::{eval_disk, singular_orbit, DiskPoint, FloatSeries, Orbit, OrbitPolicy};
use mahler_core::dichotomy::{
    certificate_identity, classify, dfinite_guess, rational_reconstruct, Classification,
    SearchBounds,
};
use mahler_core::mahler::{expand, guess_equation, minimize, solution_space, MahlerEquation};
use mahler_core::regular::{
    automaton_export, kernel_elements, linear_representation, regular_rank, thue_morse,
    SequencePrefix,
};
use mahler_core::structure::{decompose, gamma_of};
use num_complex::Complex64;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn within(elapsed: Duration, limit_secs: f64) -> Outcome {
    if elapsed.as_secs_f64() < limit_secs {
        Ok(format!("{:.2}s < {limit_secs}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("took {:.2}s, limit {limit_secs}s", elapsed.as_secs_f64()))
    }
}

fn thue_morse_eq() -> MahlerEquation {
    MahlerEquation::new(2, vec![Poly::one(), Poly::from_ints(&[-1, 1])]).unwrap()
}

fn geometric_eq() -> MahlerEquation {
    MahlerEquation::new(2, vec![Poly::from_ints(&[-1, 1]), Poly::from_ints(&[1, 0, -1])]).unwrap()
}

/// `prod_{2^j <= N} (1 - z^(2^j)) mod z^N` by direct multiplication.
fn thue_morse_product(n: usize) -> Vec<i64> {
    let mut acc = vec![0i64; n];
    acc[0] = 1;
    let mut p = 1;
    while p <= n {
        for i in (p..n).rev() {
            acc[i] -= acc[i - p];
        }
        p *= 2;
    }
    acc
}

/// Rational corpus: `(p/q, exact series, guessed equation)`.
fn rational_corpus() -> Vec<(RationalFn, TruncatedSeries, MahlerEquation)> {
    let mut rng = support::corpus_rng();
    (0..12)
        .map(|_| {
            let r = support::random_rational(&mut rng);
            let f = r.series(128).unwrap();
            let eq = guess_equation(&f, 2, 1, 9)
                .unwrap()
                .expect("a first-order equation exists for p/q");
            (r, f, eq)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let n = 1 << 14;
    let space = solution_space(&thue_morse_eq(), n);
    ensure!(space.len() == 1, "dimension {}", space.len());
    let f = space[0].scale(&(Rat::from_integer(1.into()) / space[0].coeff(0)));
    for i in 0..n {
        ensure!(*f.coeff(i) == rat(thue_morse(i as u64)), "mismatch at n = {i}");
    }
    let timing = within(start.elapsed(), 10.0)?;
    Ok(format!("dimension 1, {n} coefficients exact, {timing}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let eq = geometric_eq();
    let f = expand(&eq, &[rat(1)], 64).unwrap();
    ensure!(f.coeffs().iter().all(|c| *c == rat(1)), "expansion is not geometric");
    let cert = rational_reconstruct(&eq, &f, 4)
        .map_err(|e| e.to_string())?
        .ok_or("no certificate")?;
    let expected = RationalFn::new(Poly::one(), Poly::from_ints(&[1, -1])).unwrap();
    ensure!(cert.candidate == expected, "candidate {}", cert.candidate);
    let (identity, _) = certificate_identity(&eq, &cert.candidate);
    ensure!(identity.is_zero(), "identity {identity}");
    let timing = within(start.elapsed(), 1.0)?;
    Ok(format!("1/(1 - z) certified, identity = 0, {timing}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let corpus = rational_corpus();
    for (r, f, eq) in &corpus {
        let ode = dfinite_guess(f, 2, 6).map_err(|e| e.to_string())?;
        ensure!(ode.is_some(), "no ODE for {r}");
        let cert = rational_reconstruct(eq, f, 3).map_err(|e| e.to_string())?;
        ensure!(cert.map(|c| c.candidate) == Some(r.clone()), "no certificate for {r}");
    }
    let tm = expand(&thue_morse_eq(), &[rat(1)], 1024).unwrap();
    let bounds = SearchBounds {
        rational_deg: 16,
        ode_order: 6,
        ode_deg: 8,
    };
    ensure!(
        rational_reconstruct(&thue_morse_eq(), &tm, 16).map_err(|e| e.to_string())?.is_none(),
        "Thue-Morse reconstructed as rational"
    );
    ensure!(
        dfinite_guess(&tm, 6, 8).map_err(|e| e.to_string())?.is_none(),
        "Thue-Morse fitted by an ODE"
    );
    let c = classify(&thue_morse_eq(), &tm, bounds).map_err(|e| e.to_string())?;
    ensure!(
        matches!(c, Classification::NoRationalAtBounds { .. }),
        "classification {c:?}"
    );
    let timing = within(start.elapsed(), 60.0)?;
    Ok(format!(
        "{} rational members pass both searches, Thue-Morse NoRationalAtBounds, {timing}",
        corpus.len()
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x4d41_484c);
    let mut mismatches = 0;
    for _ in 0..200 {
        let eq = support::random_equation(&mut rng);
        let n = rng.gen_range(eq.prefix_bound()..=40);
        let fast: Vec<Vec<Rat>> = solution_space(&eq, n).into_iter().map(|s| s.into_coeffs()).collect();
        let slow = support::brute_force_space(&eq, n);
        if fast.len() != slow.len() || support::rref(fast) != support::rref(slow) {
            mismatches += 1;
        }
    }
    ensure!(mismatches == 0, "{mismatches} mismatches");
    let timing = within(start.elapsed(), 30.0)?;
    Ok(format!("200 equations, 0 mismatches, {timing}"))
}

fn criterion_5() -> Outcome {
    let mut equations: Vec<MahlerEquation> =
        rational_corpus().into_iter().map(|(_, _, eq)| eq).collect();
    equations.extend(common::EQUATION_CORPUS.iter().map(|t| parse_equation(t).unwrap()));
    equations.push(geometric_eq());
    for eq in &equations {
        let g = gamma_of(eq);
        ensure!(g.reassemble() == *eq.coeff(0), "reassembly fails for {eq}");
        ensure!(g.gamma.coeff(0) == rat(1), "Gamma(0) != 1 for {eq}");
    }
    let n = 1024;
    let f = expand(&thue_morse_eq(), &[rat(1)], n).unwrap();
    let d = decompose(&thue_morse_eq(), &f).map_err(|e| e.to_string())?;
    let product = thue_morse_product(n);
    ensure!(
        d.h.coeffs().iter().zip(&product).all(|(a, b)| *a == rat(*b)) && d.h.order() == n,
        "H differs from the product"
    );
    let h = SequencePrefix::from_series(&d.h, 2).unwrap();
    let rank = regular_rank(&h, 4, n / 16).map_err(|e| e.to_string())?;
    ensure!(rank == 1, "rank {rank}");
    Ok(format!(
        "{} reassemblies exact, H = product mod z^{n}, rank 1 at depth 4",
        equations.len()
    ))
}

fn criterion_6() -> Outcome {
    let values: Vec<i64> = (0..4096).map(thue_morse).collect();
    let s = SequencePrefix::from_ints(&values, 2).unwrap();
    let elements = kernel_elements(&s, 4).map_err(|e| e.to_string())?;
    ensure!(elements.len() == 2, "{} kernel elements", elements.len());
    let rank = regular_rank(&s, 4, 256).map_err(|e| e.to_string())?;
    ensure!(rank == 1, "rank {rank}");
    let rep = linear_representation(&s, 4, 256).map_err(|e| e.to_string())?;
    let a = automaton_export(&rep).map_err(|e| e.to_string())?;
    for n in 0..4096u64 {
        ensure!(*a.run(n) == rat(thue_morse(n)), "automaton wrong at {n}");
    }
    // two states with outputs 1 and -1; digit 0 stays, digit 1 swaps
    ensure!(a.states.len() == 2, "{} states", a.states.len());
    let plus = a.states.iter().position(|s| s.output == rat(1)).ok_or("no state with output 1")?;
    let minus = 1 - plus;
    ensure!(a.states[minus].output == rat(-1), "second output {}", a.states[minus].output);
    ensure!(plus == 0, "initial state outputs {}", a.states[0].output);
    ensure!(
        a.transitions[plus] == vec![plus, minus] && a.transitions[minus] == vec![minus, plus],
        "transitions {:?}",
        a.transitions
    );
    Ok("2 kernel elements, rank 1, 2-state automaton reproduces t(n) for n < 4096".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let iterate = MahlerEquation::new(
        2,
        vec![Poly::one(), Poly::zero(), -(&Poly::from_ints(&[1, -1]) * &Poly::from_ints(&[1, 0, -1]))],
    )
    .unwrap();
    let m = minimize(&iterate, 256).map_err(|e| e.to_string())?;
    ensure!(m.order() == 1, "order {}", m.order());
    ensure!(m.is_proportional_to(&thue_morse_eq()), "minimized to {m}");
    let timing = within(start.elapsed(), 5.0)?;
    Ok(format!("order 2 -> 1, a1 proportional to -(1 - z), {timing}"))
}

fn criterion_8() -> Outcome {
    let Orbit::Path(orbit) =
        singular_orbit(TAU, 2, 1, 61, OrbitPolicy::Fixed(0)).map_err(|e| e.to_string())?
    else {
        return Err("expected a path".into());
    };
    let theta = orbit.angles[60];
    let gap = (Complex64::from_polar(1.0, theta) - 1.0).norm();
    ensure!(gap < 1e-15, "|exp(i theta_60) - 1| = {gap:e}");

    let geo = RationalFn::new(Poly::one(), Poly::from_ints(&[1, -1])).unwrap().series(2048).unwrap();
    let v = eval_disk(&geo, DiskPoint::new(0.99, 0.0).unwrap()).map_err(|e| e.to_string())?;
    let err = (v.value() - Complex64::new(100.0, 0.0)).norm();
    ensure!(err < 1e-6, "geometric at 0.99 off by {err:e}");

    let tm = FloatSeries::new(&expand(&thue_morse_eq(), &[rat(1)], 4096).unwrap())
        .map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for &r in &[0.5, 0.7, 0.8, 0.9, 0.95] {
        for p in 0..8 {
            let theta = TAU * p as f64 / 8.0;
            let z = DiskPoint::new(r, theta).unwrap();
            let z2 = DiskPoint::new(r * r, 2.0 * theta).unwrap();
            let (a, b) = (tm.eval(z), tm.eval(z2));
            let one_minus_z = Complex64::new(1.0, 0.0) - z.to_complex();
            let gap = (a.value() - one_minus_z * b.value()).norm();
            let bound = a.error_bound() + one_minus_z.norm() * b.error_bound();
            ensure!(gap < bound, "r = {r}, theta = {theta}: gap {gap:e} >= bound {bound:e}");
            worst = worst.max(gap / bound);
        }
    }
    Ok(format!(
        "orbit gap {gap:.1e}, geometric error {err:.1e}, functional equation holds on 5x8 grid (worst gap/bound {worst:.2})"
    ))
}

fn criterion_9() -> Outcome {
    for text in common::EQUATION_CORPUS {
        let eq = parse_equation(text).map_err(|e| format!("{text}: {e}"))?;
        let again = parse_equation(&format_equation(&eq)).map_err(|e| format!("{text}: {e}"))?;
        ensure!(again == eq, "round trip changed {text}");
    }
    let coeffs = vec![
        rat(0),
        rat_frac(-7, 3),
        Rat::new("123456789012345678901234567890".parse().unwrap(), 7.into()),
        rat_frac(1, i64::MAX),
    ];
    let f = TruncatedSeries::new(coeffs);
    let doc = SeriesDocument::from_series(&f, Some(3));
    let back = SeriesDocument::parse(&doc.to_json()).map_err(|e| e.to_string())?;
    ensure!(back == doc && back.to_series().unwrap() == f, "series document changed");
    if let Some(msg) = common::golden_mismatch() {
        return Err(msg);
    }
    Ok(format!(
        "{} equations round-trip, series document exact, {} golden outputs stable",
        common::EQUATION_CORPUS.len(),
        common::golden_cases().len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Thue-Morse end-to-end", criterion_1),
        ("rationality certificate", criterion_2),
        ("dichotomy cross-check", criterion_3),
        ("recursion bound vs full system", criterion_4),
        ("structure identities", criterion_5),
        ("k-kernel and automaton", criterion_6),
        ("minimization", criterion_7),
        ("analytic consistency", criterion_8),
        ("CLI round-trips", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check)
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
