//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 6 is a documented known failure: the box search and the mod-2
//! complex both give 0 in degree 1 for the literal weight vector, so the
//! requested lower bound 1 is not met and the upper bound 0 sits below the
//! external value 2. The line is printed as FAIL and does not abort the run;
//! any other failure makes the process exit nonzero.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use oscoh::catalog::{self, weights};
use oscoh::osalg::{aomoto_matrix, nbc_basis};
use oscoh::resonance::{betti_bounds, resonance_membership, yuzvinsky_vanishing};
use oscoh::{
    kunneth_product, modn_cohomology_ranks, os_cohomology_dims, render_poincare, Arrangement, Rational, WeightVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILURES: &[u32] = &[6];

fn big(k: &[i64]) -> Vec<BigInt> {
    k.iter().map(|&v| v.into()).collect()
}

fn qdims(a: &Arrangement, k: &[i64], n: i64) -> Vec<usize> {
    os_cohomology_dims(a, &WeightVector::from_i64(k, n)).unwrap().dims
}

fn modn(a: &Arrangement, k: &[i64], n: u64) -> Vec<usize> {
    modn_cohomology_ranks(a, &big(k), n).unwrap().dims
}

type Outcome = Result<String, String>;

fn check(cond: bool, ok: String, bad: String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(bad)
    }
}

fn criterion_1() -> Outcome {
    let d = qdims(&catalog::ceva3(), &weights::CEVA, 3);
    check(d[1] == 1, format!("Ceva(3) dims {d:?}"), format!("Ceva(3) dims {d:?}, expected dims[1] = 1"))
}

fn criterion_2() -> Outcome {
    let a = catalog::ceva3_section();
    let p = render_poincare(&qdims(&a, &weights::CEVA, 3));
    let m = render_poincare(&modn(&a, &weights::CEVA, 3));
    let msg = format!("Q: {p}; Z_3: {m}");
    check(p == "t + 17*t^2" && m == "2*t + 18*t^2", msg.clone(), msg)
}

fn criterion_3() -> Outcome {
    let a = catalog::maclane_section();
    let p = render_poincare(&qdims(&a, &weights::MACLANE_SECTION, 3));
    let m = render_poincare(&modn(&a, &weights::MACLANE_SECTION, 3));
    let msg = format!("Q: {p}; Z_3: {m}");
    check(p == "13*t^2" && m == "t + 14*t^2", msg.clone(), msg)
}

fn criterion_4() -> Outcome {
    let a = catalog::maclane();
    let mut bad = Vec::new();
    let mut cases = 0;
    for u in 0..3 {
        for v in 0..3 {
            if (u, v) == (0, 0) {
                continue;
            }
            cases += 1;
            let r = modn(&a, &weights::maclane(u, v), 3)[1];
            if r != 1 {
                bad.push(format!("k({u},{v}) -> {r}"));
            }
        }
    }
    check(bad.is_empty(), format!("{cases} weight vectors, mod-3 H^1 rank 1 each"), bad.join(", "))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let prod = catalog::product_example();
    let k: Vec<i64> = weights::CEVA.iter().chain(&weights::MACLANE_SECTION).copied().collect();
    let direct = os_cohomology_dims(&prod, &WeightVector::from_i64(&k, 3)).unwrap();
    let left = os_cohomology_dims(&catalog::ceva3_section(), &WeightVector::from_i64(&weights::CEVA, 3)).unwrap();
    let right =
        os_cohomology_dims(&catalog::maclane_section(), &WeightVector::from_i64(&weights::MACLANE_SECTION, 3))
            .unwrap();
    let kun = kunneth_product(&left, &right).unwrap();
    let m = render_poincare(&modn(&prod, &k, 3));
    let elapsed = start.elapsed();
    let msg = format!(
        "n = {}, b = {:?}; Q: {} (Kunneth {}); Z_3: {m}; {:.1?}",
        prod.n(),
        prod.betti_numbers(),
        direct.poincare(),
        kun.poincare(),
        elapsed
    );
    let ok = direct.poincare() == "13*t^3 + 221*t^4"
        && kun.dims == direct.dims
        && m == "2*t^2 + 46*t^3 + 252*t^4"
        && elapsed < Duration::from_secs(600);
    check(ok, msg.clone(), msg)
}

fn criterion_6() -> Outcome {
    let a = catalog::example_lstrict();
    let r = betti_bounds(&a, &WeightVector::from_i64(&weights::LSTRICT, 2), 1).unwrap();
    let (lo, up) = (r.lower()[1], r.upper()[1]);
    let msg = format!("B = 1: lower[1] = {lo}, upper[1] = {up} (requested lower 1, external value 2)");
    check(lo == 1 && up >= 2, msg.clone(), msg)
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    for name in catalog::NAMES {
        let name = name.replace("(n)", "(4)");
        let a = catalog::lookup(&name).unwrap();
        let p = (a.n() as u64 + 1..).find(|&p| oscoh::exactla::is_prime(p)).unwrap();
        let cert = yuzvinsky_vanishing(&a, &big(&vec![1; a.n()]), p).unwrap();
        let mut expect = vec![0; a.rank() + 1];
        expect[a.rank()] = a.euler_characteristic().unsigned_abs() as usize;
        if !(cert.holds && cert.computed_dims.as_ref() == Some(&expect)) {
            return Err(format!("{name}: p = {p}, {cert:?}"));
        }
        lines.push(format!("{name} p={p}"));
    }
    Ok(format!("certificate holds and ranks are (0,...,0,|e|): {}", lines.join(", ")))
}

/// Random weights `k / N` with `N` drawn from small primes.
fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> (Vec<i64>, i64) {
    let modulus = [2i64, 3, 5, 7][rng.gen_range(0..4)];
    ((0..n).map(|_| rng.gen_range(-6..=6)).collect(), modulus)
}

fn property_suite(name: &str, a: &Arrangement, rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let n = a.n();
    let fail = |what: &str, k: &[i64], m: i64| Err(format!("{name}: ({what}) fails at {k:?}/{m}"));
    let betti = a.betti_numbers();
    // (d)
    let nbc: Vec<usize> = (0..=a.rank()).map(|q| nbc_basis(a, q).len()).collect();
    if nbc != betti {
        return Err(format!("{name}: (d) NBC sizes {nbc:?} vs {betti:?}"));
    }
    let mut checks = 1;
    for _ in 0..50 {
        let (k, m) = random_weights(rng, n);
        let lam = WeightVector::from_i64(&k, m);
        let kk = lam.k().to_vec();
        // (a)
        for q in 0..a.rank() {
            let m0 = aomoto_matrix(a, q).unwrap().evaluate(&kk);
            let m1 = aomoto_matrix(a, q + 1).unwrap().evaluate(&kk);
            if !m0.mul(&m1).is_zero() {
                return fail("a", &k, m);
            }
        }
        let d = os_cohomology_dims(a, &lam).unwrap().dims;
        // (b)
        let chi: i64 = d.iter().enumerate().map(|(q, &x)| if q % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        if chi != a.euler_characteristic() {
            return fail("b", &k, m);
        }
        // (c)
        for c in [2, -1, 5] {
            let scaled = lam.scaled(&Rational::from_integer(c.into()));
            if os_cohomology_dims(a, &scaled).unwrap().dims != d {
                return fail("c", &k, m);
            }
        }
        // (e)
        let nn: u64 = lam.modulus().try_into().unwrap();
        if nn >= 2 {
            let up = modn_cohomology_ranks(a, &kk, nn).unwrap().dims;
            if d.iter().zip(&up).any(|(x, y)| x > y) {
                return fail("e", &k, m);
            }
        }
        // (f)
        if name == "boolean(4)" && !lam.is_zero() && d.iter().any(|&x| x != 0) {
            return fail("f", &k, m);
        }
        // (g)
        if a.is_central() && !lam.total().is_zero() && d.iter().any(|&x| x != 0) {
            return fail("g", &k, m);
        }
        // (h)
        for q in 0..=a.rank() {
            if resonance_membership(a, &lam, q, 1).unwrap() {
                for c in [2, -1, 5] {
                    let scaled = lam.scaled(&Rational::from_integer(c.into()));
                    if !resonance_membership(a, &scaled, q, 1).unwrap() {
                        return fail("h", &k, m);
                    }
                }
            }
        }
        checks += 1;
    }
    Ok(checks)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05c0_4001);
    let mut parts = Vec::new();
    for name in catalog::NAMES {
        let name = name.replace("(n)", "(4)");
        let a = catalog::lookup(&name).unwrap();
        property_suite(&name, &a, &mut rng)?;
        parts.push(name);
    }
    Ok(format!("(a)-(h) on 50 seeded weight vectors for each of {}", parts.join(", ")))
}

fn main() {
    // `cargo test -- --list` and filters are not meaningful here
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut unexpected = 0;
    for (id, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(msg) => println!("criterion {id}: PASS  {msg}"),
            Err(msg) if KNOWN_FAILURES.contains(&id) => {
                println!("criterion {id}: FAIL  {msg} [known failure, see README]")
            }
            Err(msg) => {
                println!("criterion {id}: FAIL  {msg}");
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
