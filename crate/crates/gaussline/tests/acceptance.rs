//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gaussline::construct::{construct_line, construct_stream, ConstructionRequest};
use gaussline::crt::{crt_line, Constraint, LineCongruenceSystem};
use gaussline::line::{Line, DEFAULT_SCAN_CAP};
use gaussline::pillai::{
    self, bound_b, bound_table, certify_no_bad_window, explore_g, find_bad_window, g_of_line,
    window_report, Caps, Certificate,
};
use gaussline::zi::{self, GaussInt};

fn g(re: i64, im: i64) -> GaussInt {
    GaussInt::new(re, im)
}

fn caps() -> Caps {
    Caps::default()
}

fn primorial_below(n: u64) -> u64 {
    (2..n).filter(|&p| zi::is_prime_u64(p)).product::<u64>().max(1)
}

/// A random line through two small random points; optionally primitive-only
/// and optionally excluding the degenerate big_delta = 0 axes.
fn random_line(rng: &mut ChaCha8Rng, primitive: bool, nonzero_delta: bool) -> Line {
    loop {
        let z = g(rng.gen_range(-30..=30), rng.gen_range(-30..=30));
        let w = g(rng.gen_range(-30..=30), rng.gen_range(-30..=30));
        if z == w {
            continue;
        }
        let line = Line::from_points(&z, &w).unwrap();
        if primitive && !line.is_primitive() {
            continue;
        }
        if nonzero_delta && line.big_delta().is_zero() {
            continue;
        }
        return line;
    }
}

#[test]
fn criterion_1_real_line_pillai() {
    let line = Line::real_line();
    let report = g_of_line(&line, 20, &caps()).unwrap();
    assert_eq!(report.g, Some(17));
    assert!(!report.conditional);

    for cert in &report.certificates {
        let n = cert.n();
        if n < 17 {
            let expected_period = primorial_below(n);
            assert_eq!(
                cert,
                &Certificate::NoneInPeriod { n, period: expected_period },
                "expected exhaustive none-in-period at n={n}"
            );
            assert_eq!(30030 % expected_period, 0);
        }
    }
    // the full prime battery 2*3*5*7*11*13 is in force from n = 14 on
    for n in 14..=16u64 {
        assert_eq!(
            report.certificates[(n - 2) as usize],
            Certificate::NoneInPeriod { n, period: 30030 }
        );
    }

    let witness = report.certificates.last().unwrap();
    assert_eq!(witness, &Certificate::Witness { n: 17, witness_k: BigInt::from(2183) });

    // brute-force gcd oracle over the window 2184..2200
    let window: Vec<u64> = (2184..=2200).collect();
    for (i, &a) in window.iter().enumerate() {
        let shares = window
            .iter()
            .enumerate()
            .any(|(j, &b)| i != j && a.gcd(&b) > 1);
        assert!(shares, "{a} is coprime to the rest of 2184..2200");
    }
    // and the residue-method report agrees
    let rep = window_report(&line, &BigInt::from(2183), 17, DEFAULT_SCAN_CAP).unwrap();
    assert!(rep.lonely.is_empty());

    println!("criterion 1 (real-line Pillai, g = 17, witness 2184): PASS");
}

#[test]
fn criterion_2_bound_table() {
    assert_eq!(bound_b(100), 54);
    let table = bound_table(260_186);
    assert_eq!(table.threshold, 260_185);
    assert!(table.value(260_186).unwrap() > 260_186);
    assert_eq!(table.value(260_185).unwrap(), 260_185);
    assert!((2..=260_185).all(|t| table.value(t).unwrap() <= t));
    println!("criterion 2 (B_100 = 54; threshold 260,185, B_260186 > 260,186): PASS");
}

#[test]
fn criterion_3_g7_characterization() {
    // (i) the four primes present, conjugates over 5 at consecutive indices
    let req = ConstructionRequest {
        div_constraints: vec![
            Constraint::new(g(1, 1), 1),
            Constraint::new(g(3, 0), 1),
            Constraint::new(g(1, 2), 1),
            Constraint::new(g(2, 1), 2),
        ],
        ..Default::default()
    };
    let trace = construct_line(&req).unwrap();
    let line = &trace.line;
    let report = g_of_line(line, 7, &caps()).unwrap();
    assert_eq!(report.g, Some(7));
    let Certificate::Witness { witness_k, .. } = report.certificates.last().unwrap() else {
        panic!("expected a witness at n = 7");
    };
    // witness structure from the characterization proof: the canonical
    // associate of 1-2i divides window positions 2 and 7
    for pos in [2i64, 7] {
        let idx = witness_k + BigInt::from(pos);
        assert!(line.divides_alpha(&g(2, 1), &idx, DEFAULT_SCAN_CAP).unwrap());
    }
    let rep = window_report(line, witness_k, 7, DEFAULT_SCAN_CAP).unwrap();
    assert!(rep.lonely.is_empty());

    // (ii) 20 seeded lines that fail the criterion all certify n = 7
    let failing_requests = [
        // 1+i missing from the divisor set
        ConstructionRequest {
            div_constraints: vec![
                Constraint::new(g(3, 0), 0),
                Constraint::new(g(1, 2), 0),
                Constraint::new(g(2, 1), 1),
            ],
            excluded_split: vec![g(1, 1)],
            ..Default::default()
        },
        // 3 missing
        ConstructionRequest {
            div_constraints: vec![
                Constraint::new(g(1, 1), 0),
                Constraint::new(g(1, 2), 0),
                Constraint::new(g(2, 1), 1),
            ],
            excluded_inert: vec![3],
            ..Default::default()
        },
        // 1+2i missing
        ConstructionRequest {
            div_constraints: vec![Constraint::new(g(1, 1), 0), Constraint::new(g(3, 0), 0)],
            excluded_split: vec![g(1, 2)],
            ..Default::default()
        },
        // the 1-2i associate missing
        ConstructionRequest {
            div_constraints: vec![
                Constraint::new(g(1, 1), 0),
                Constraint::new(g(3, 0), 0),
                Constraint::new(g(1, 2), 0),
            ],
            excluded_split: vec![g(2, 1)],
            ..Default::default()
        },
        // conjugates present but at non-consecutive indices (0 and 2)
        ConstructionRequest {
            div_constraints: vec![
                Constraint::new(g(1, 1), 0),
                Constraint::new(g(3, 0), 0),
                Constraint::new(g(1, 2), 0),
                Constraint::new(g(2, 1), 2),
            ],
            ..Default::default()
        },
    ];
    let mut certified = 0;
    for req in &failing_requests {
        for trace in construct_stream(req, 4).unwrap() {
            let cert = certify_no_bad_window(&trace.line, 7, DEFAULT_SCAN_CAP).unwrap();
            assert!(
                matches!(cert, Certificate::NoneInPeriod { .. }),
                "line {} unexpectedly admits a bad 7-window",
                trace.line
            );
            certified += 1;
        }
    }
    assert_eq!(certified, 20);
    println!("criterion 3 (g = 7 characterization, both directions): PASS");
}

#[test]
fn criterion_4_remark_3() {
    // conjugate-non-consecutive line: g = 9
    let req = ConstructionRequest {
        div_constraints: vec![
            Constraint::new(g(1, 1), 0),
            Constraint::new(g(3, 0), 0),
            Constraint::new(g(1, 2), 0),
            Constraint::new(g(2, 1), 2),
        ],
        ..Default::default()
    };
    let trace = construct_line(&req).unwrap();
    let report = g_of_line(&trace.line, 9, &caps()).unwrap();
    assert_eq!(report.g, Some(9));
    for cert in &report.certificates[..7] {
        assert!(matches!(cert, Certificate::NoneInPeriod { .. }));
    }

    // g = 15 family: 1+i, 3, 1+2i, 7, 11 and both primes over 13 present,
    // the 1-2i associate excluded, primes over 13 at consecutive indices
    let req = ConstructionRequest {
        div_constraints: vec![
            Constraint::new(g(1, 1), 0),
            Constraint::new(g(3, 0), 0),
            Constraint::new(g(11, 0), 0),
            Constraint::new(g(2, 3), 0),
            Constraint::new(g(3, 2), 1),
            Constraint::new(g(1, 2), 2),
            Constraint::new(g(7, 0), 5),
        ],
        excluded_split: vec![g(2, 1)],
        ..Default::default()
    };
    let trace = construct_line(&req).unwrap();
    let line = &trace.line;
    assert!(!line.prime_in_divisor_set(&g(2, 1)).unwrap());
    let report = g_of_line(line, 15, &caps()).unwrap();
    assert_eq!(report.g, Some(15));
    for cert in &report.certificates[..13] {
        assert!(matches!(cert, Certificate::NoneInPeriod { .. }));
    }
    // at n = 14 the full battery {2,3,5,7,11,13} is in force
    assert_eq!(
        report.certificates[12],
        Certificate::NoneInPeriod { n: 14, period: 30030 }
    );
    assert!(report.certificates[13].is_witness());
    println!("criterion 4 (Remark 3: g = 9 and g = 15 families): PASS");
}

#[test]
fn criterion_5_example_1() {
    // four primes present, conjugates consecutive, 7 excluded:
    // g = 7 but no bad window of length 8, so G > 7 = g
    let req = ConstructionRequest {
        div_constraints: vec![
            Constraint::new(g(1, 1), 1),
            Constraint::new(g(3, 0), 1),
            Constraint::new(g(1, 2), 1),
            Constraint::new(g(2, 1), 2),
        ],
        excluded_inert: vec![7],
        ..Default::default()
    };
    let trace = construct_line(&req).unwrap();
    let certs = explore_g(&trace.line, 7, 8, &caps()).unwrap();
    assert!(certs[0].is_witness());
    assert!(matches!(certs[1], Certificate::NoneInPeriod { .. }));

    // flipping 7 into the divisor set produces a bad window of length 8
    let req = ConstructionRequest {
        div_constraints: vec![
            Constraint::new(g(1, 1), 1),
            Constraint::new(g(3, 0), 1),
            Constraint::new(g(1, 2), 1),
            Constraint::new(g(2, 1), 2),
            Constraint::new(g(7, 0), 1),
        ],
        ..Default::default()
    };
    let trace = construct_line(&req).unwrap();
    let cert = find_bad_window(&trace.line, 8, &caps()).unwrap();
    assert!(cert.is_witness());
    println!("criterion 5 (Example 1: g = 7 with G > 7; 7 in D(L) flips n = 8): PASS");
}

#[test]
fn criterion_6_example_2() {
    // B = 50: the 1-2i associate divides alpha_0, 1+2i divides alpha_1, and
    // one prime over each rational p < 50 (p != 5) divides alpha_0; the
    // unused conjugates over the split primes are excluded so the divisor
    // set is exactly the prescribed one.
    let mut div_constraints = vec![Constraint::new(g(2, 1), 0), Constraint::new(g(1, 2), 1)];
    let mut excluded_split = Vec::new();
    for p in 2u64..50 {
        if !zi::is_prime_u64(p) || p == 5 {
            continue;
        }
        let primes = zi::primes_over(p).unwrap();
        div_constraints.push(Constraint::new(primes[0].clone(), 0));
        if primes.len() == 2 {
            excluded_split.push(primes[1].clone());
        }
    }
    let req = ConstructionRequest { div_constraints, excluded_split, ..Default::default() };
    let trace = construct_line(&req).unwrap();
    let certs = explore_g(&trace.line, 7, 50, &caps()).unwrap();
    for cert in &certs {
        assert_eq!(
            cert,
            &Certificate::Witness { n: cert.n(), witness_k: BigInt::from(-1) },
            "expected the bad window starting at alpha_0 for n = {}",
            cert.n()
        );
    }
    println!("criterion 6 (Example 2 at B = 50: bad windows at alpha_0 for n in 7..=50): PASS");
}

#[test]
fn criterion_7_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    // Periodicity: divisibility happens on exactly one residue class
    // modulo nu(beta), verified over three full periods.
    let mut checked = 0;
    while checked < 100 {
        let line = random_line(&mut rng, true, false);
        let beta = g(rng.gen_range(-8..=8), rng.gen_range(-8..=8));
        if beta.is_zero() || beta.is_unit() {
            continue;
        }
        let Some(t) = line.member_index(&beta, DEFAULT_SCAN_CAP).unwrap() else {
            continue;
        };
        let nu = u64::try_from(&beta.nu().unwrap()).unwrap();
        for k in 0..3 * nu {
            let divides = beta.divides(&line.alpha(&BigInt::from(k))).unwrap();
            assert_eq!(divides, k % nu == t, "periodicity broken for {beta} on {line}");
        }
        checked += 1;
    }

    // Line-CRT uniqueness by exhaustive scan for products <= 1e5.
    let mut solved = 0;
    while solved < 25 {
        let line = random_line(&mut rng, true, false);
        let pool: Vec<GaussInt> = [g(1, 1), g(3, 0), g(1, 2), g(2, 1), g(7, 0), g(3, 2), g(2, 3)]
            .into_iter()
            .filter(|pi| line.member_index(pi, DEFAULT_SCAN_CAP).unwrap().is_some())
            .collect();
        if pool.len() < 2 {
            continue;
        }
        let mut constraints = Vec::new();
        let mut nus: Vec<u64> = Vec::new();
        for pi in &pool {
            let nu = u64::try_from(&pi.nu().unwrap()).unwrap();
            if nus.iter().any(|&m| m.gcd(&nu) != 1) {
                continue;
            }
            nus.push(nu);
            constraints.push(Constraint::new(pi.clone(), rng.gen_range(-10..=10)));
        }
        if constraints.len() < 2 || nus.iter().product::<u64>() > 100_000 {
            continue;
        }
        let sys = LineCongruenceSystem { constraints };
        let (t, modulus) = crt_line(&line, &sys, DEFAULT_SCAN_CAP).unwrap();
        let modulus = u64::try_from(&modulus).unwrap();
        let mut hits = 0;
        for cand in 0..modulus {
            let all = sys.constraints.iter().all(|c| {
                line.divides_alpha(&c.mu, &(BigInt::from(cand) + &c.b), DEFAULT_SCAN_CAP)
                    .unwrap()
            });
            if all {
                assert_eq!(BigInt::from(cand), t);
                hits += 1;
            }
        }
        assert_eq!(hits, 1, "line CRT solution not unique on {line}");
        solved += 1;
    }

    // Divisor-set theorem vs. brute scan for all primes with nu <= 200.
    for _ in 0..50 {
        let line = random_line(&mut rng, true, false);
        for p in 2u64..=200 {
            if !zi::is_prime_u64(p) {
                continue;
            }
            for pi in zi::primes_over(p).unwrap() {
                let by_theorem = line.prime_in_divisor_set(&pi).unwrap();
                let by_scan = line.member_index(&pi, DEFAULT_SCAN_CAP).unwrap().is_some();
                assert_eq!(by_theorem, by_scan, "divisor-set mismatch for {pi} on {line}");
            }
        }
    }

    // I_p residue counts for odd p <= 50. The count of k in [0, p) with
    // p | N(alpha_k) follows from which primes over p are in the divisor
    // set: for p = 1 (mod 4) the two conjugate residues coincide exactly
    // when p | big_delta.
    for _ in 0..50 {
        let line = random_line(&mut rng, true, true);
        let poly = line.norm_poly();
        for p in (3u64..=50).filter(|&p| zi::is_prime_u64(p)) {
            let count = (0..p)
                .filter(|&k| (&poly.eval(&BigInt::from(k)) % p).is_zero())
                .count();
            let p_div = |v: &BigInt| (v % p).is_zero();
            let expected = if p % 4 == 1 {
                if p_div(&poly.a2) || p_div(line.big_delta()) {
                    1
                } else {
                    2
                }
            } else if p_div(line.big_delta()) {
                1
            } else {
                0
            };
            assert_eq!(count, expected, "I_{p} count mismatch on {line}");
        }
    }

    // Norm-polynomial discriminant is -4 * big_delta^2 on 1000 random lines.
    for _ in 0..1000 {
        let line = random_line(&mut rng, false, false);
        let poly = line.norm_poly();
        assert_eq!(
            poly.discriminant(),
            BigInt::from(-4) * line.big_delta() * line.big_delta()
        );
    }

    println!("criterion 7 (periodicity, CRT uniqueness, divisor-set, I_p, discriminant): PASS");
}

#[test]
fn criterion_8_construction_verification() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // pool of pairwise-coprime building blocks
    let pool = [
        g(1, 1),
        g(3, 0),
        g(7, 0),
        g(11, 0),
        g(2, 1),
        g(1, 2),
        g(3, 2),
        g(2, 3),
        g(4, 1),
        g(1, 4),
        g(19, 0),
        g(23, 0),
    ];
    for round in 0..100u64 {
        let mut picks: Vec<usize> = (0..pool.len()).collect();
        // shuffle by repeated swaps
        for i in (1..picks.len()).rev() {
            picks.swap(i, rng.gen_range(0..=i));
        }
        let n_div = rng.gen_range(1..=4usize);
        let n_excl = rng.gen_range(0..=3usize);
        let mut div_constraints = Vec::new();
        let mut excluded_inert = Vec::new();
        let mut excluded_split = Vec::new();
        let mut iter = picks.into_iter();
        for _ in 0..n_div {
            let mu = pool[iter.next().unwrap()].clone();
            div_constraints.push(Constraint::new(mu, rng.gen_range(-6..=6)));
        }
        for _ in 0..n_excl {
            let z = pool[iter.next().unwrap()].clone();
            if z.im.is_zero() {
                excluded_inert.push(u64::try_from(&z.re).unwrap());
            } else {
                // excluding both conjugates over one rational prime is
                // unsatisfiable, so keep at most one of each pair
                let conj_present = excluded_split.iter().any(|w: &GaussInt| {
                    w.conj().canonical_associate().unwrap() == z.canonical_associate().unwrap()
                });
                if !conj_present {
                    excluded_split.push(z);
                }
            }
        }
        let req = ConstructionRequest {
            div_constraints,
            excluded_inert,
            excluded_split,
            seed: round % 5,
        };
        let trace = construct_line(&req).unwrap();
        let line = &trace.line;

        // the six proof properties, asserted explicitly
        let n0 = trace.alpha0.norm();
        assert!(trace.delta.norm() > BigInt::from(16) * &n0); // property 1 guard
        for k in [-2i64, -1, 1, 2] {
            assert!(line.alpha_i64(k).norm() > n0);
        }
        assert!(trace.delta.re.gcd(&trace.delta.im) == BigInt::from(1)); // property 2
        assert!(trace.delta.re.is_positive());
        assert!(zi::coprime(&trace.alpha0, &trace.delta).unwrap()); // property 3
        for c in &req.div_constraints {
            assert!(c.mu.divides(&line.alpha(&c.b)).unwrap()); // property 4
            assert!(line.divides_alpha(&c.mu, &c.b, DEFAULT_SCAN_CAP).unwrap());
        }
        for &p in &req.excluded_inert {
            assert!(!(line.big_delta() % p).is_zero()); // property 5
            assert!(!line.prime_in_divisor_set(&GaussInt::from_int(p as i64)).unwrap());
        }
        for pi in &req.excluded_split {
            assert!(pi.divides(&trace.delta).unwrap()); // property 6
            assert!(!line.prime_in_divisor_set(pi).unwrap());
        }
        assert!(line.is_primitive());
        assert_eq!(
            line,
            &Line::from_points(&trace.alpha0, &(&trace.alpha0 + &trace.delta)).unwrap()
        );
    }
    println!("criterion 8 (100 seeded construction requests fully verified): PASS");
}

#[test]
fn explore_g_reports_no_claim_beyond_certificates() {
    // sanity: explore output covers the requested range in order
    let line = Line::real_line();
    let certs = pillai::explore_g(&line, 15, 18, &caps()).unwrap();
    let ns: Vec<u64> = certs.iter().map(|c| c.n()).collect();
    assert_eq!(ns, vec![15, 16, 17, 18]);
}
