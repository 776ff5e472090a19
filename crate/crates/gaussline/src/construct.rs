//! Synthesis of primitive Gaussian lines with prescribed divisors at
//! prescribed indices and prescribed excluded primes, together with a full
//! verification trace.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::crt;
use crate::error::{Error, Result};
use crate::line::Line;
use crate::zi::{self, GaussInt};

const FACTOR_NORM_BOUND: u64 = 1_000_000;
const DELTA_SEARCH_CAP: u64 = 1_000_000;

/// Requested divisibility structure: each (mu, b) forces mu | alpha_b on
/// the produced line; excluded primes are kept out of the divisor set.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ConstructionRequest {
    pub div_constraints: Vec<crt::Constraint>,
    /// rational primes = 3 (mod 4) that must not divide big_delta
    pub excluded_inert: Vec<u64>,
    /// non-rational Gaussian primes that must divide delta
    pub excluded_split: Vec<GaussInt>,
    /// selects among the infinitely many solutions
    pub seed: u64,
}

/// Every intermediate of the construction, kept for verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub gamma: Vec<GaussInt>,
    pub lambda: GaussInt,
    pub alpha0: GaussInt,
    pub eta: Vec<Option<GaussInt>>,
    pub beta: GaussInt,
    #[serde(with = "crate::zi::serde_bigint")]
    pub p_product: BigInt,
    pub modulus: GaussInt,
    pub tau: GaussInt,
    pub delta: GaussInt,
    pub line: Line,
}

fn validate(req: &ConstructionRequest) -> Result<()> {
    let mut all: Vec<GaussInt> = Vec::new();
    for c in &req.div_constraints {
        if c.mu.is_zero() || c.mu.is_unit() {
            return Err(Error::Domain(format!(
                "constraint divisor must be a nonzero non-unit, got {}",
                c.mu
            )));
        }
        all.push(c.mu.clone());
    }
    for &p in &req.excluded_inert {
        if p % 4 != 3 || !zi::is_prime_u64(p) {
            return Err(Error::Domain(format!(
                "excluded inert prime must be a rational prime = 3 (mod 4), got {p}"
            )));
        }
        all.push(GaussInt::from_int(p as i64));
    }
    for pi in &req.excluded_split {
        let canonical = pi.canonical_associate()?;
        if !zi::is_gaussian_prime(pi) || canonical.im.is_zero() {
            return Err(Error::Domain(format!(
                "excluded split prime must be a non-rational Gaussian prime, got {pi}"
            )));
        }
        all.push(pi.clone());
    }
    // excluding both conjugate primes over a rational p would force
    // p | delta, contradicting gcd(c, d) = 1
    for i in 0..req.excluded_split.len() {
        for j in i + 1..req.excluded_split.len() {
            let a = req.excluded_split[i].canonical_associate()?;
            let b = req.excluded_split[j].conj().canonical_associate()?;
            if a == b {
                return Err(Error::Domain(format!(
                    "cannot exclude both conjugate primes {} and {}",
                    req.excluded_split[i], req.excluded_split[j]
                )));
            }
        }
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if !zi::coprime(&all[i], &all[j])? {
                return Err(Error::Domain(format!(
                    "request data not pairwise coprime: {} and {}",
                    all[i], all[j]
                )));
            }
        }
    }
    Ok(())
}

/// The (seed+1)-th rational prime q = 3 (mod 4) coprime to the request data.
fn pick_lambda(req: &ConstructionRequest) -> GaussInt {
    let mut remaining = req.seed;
    let mut q = 3u64;
    loop {
        if zi::is_prime_u64(q) && q % 4 == 3 {
            let q_big = BigInt::from(q);
            let ok = req.div_constraints.iter().all(|c| {
                !(&c.mu.norm() % &q_big).is_zero()
                    && (c.b.is_zero() || !(&c.b % &q_big).is_zero())
            }) && req.excluded_inert.iter().all(|&p| p != q);
            // inert q is automatically coprime to every non-rational prime
            if ok {
                if remaining == 0 {
                    return GaussInt::from_int(q as i64);
                }
                remaining -= 1;
            }
        }
        q += 4;
    }
}

/// Deterministic enumeration of nonzero Gaussian integers by growing
/// square shells, used to walk delta candidates tau + omega * M.
fn shell_points(r: i64) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if x.abs().max(y.abs()) == r {
                pts.push((x, y));
            }
        }
    }
    pts.sort();
    pts
}

/// Build one primitive line realizing the request, with a trace of every
/// intermediate quantity of the underlying constructive argument.
pub fn construct_line(req: &ConstructionRequest) -> Result<ConstructionTrace> {
    validate(req)?;
    let lambda = pick_lambda(req);

    // gamma_j = gcd(mu_j, b_j); for b_j = 0 this degenerates to mu_j itself.
    let mut gamma: Vec<GaussInt> = Vec::with_capacity(req.div_constraints.len());
    for c in &req.div_constraints {
        let g = if c.b.is_zero() {
            c.mu.canonical_associate()?
        } else {
            zi::gcd(&c.mu, &GaussInt { re: c.b.clone(), im: BigInt::zero() })?
        };
        gamma.push(g);
    }

    let mut alpha0 = lambda.clone();
    for g in &gamma {
        alpha0 = &alpha0 * g;
    }

    // Congruences on delta. For each constraint with b_j != 0:
    //   delta = -eta_j * (alpha0/gamma_j)  (mod mu_j/gamma_j)
    // where eta_j inverts b_j/gamma_j modulo mu_j/gamma_j.
    let mut pairs: Vec<(GaussInt, GaussInt)> = Vec::new();
    let mut eta: Vec<Option<GaussInt>> = Vec::with_capacity(req.div_constraints.len());
    let mut reduced_moduli: Vec<GaussInt> = Vec::new();
    for (c, g) in req.div_constraints.iter().zip(&gamma) {
        let m_j = c.mu.div_exact(g).ok_or_else(|| {
            Error::Verification(format!("gamma {g} does not divide {}", c.mu))
        })?;
        if c.b.is_zero() || m_j.is_unit() {
            eta.push(None);
            continue;
        }
        let b_over_g = GaussInt { re: c.b.clone(), im: BigInt::zero() }
            .div_exact(g)
            .ok_or_else(|| Error::Verification(format!("gamma {g} does not divide {}", c.b)))?;
        let (u, x, _) = zi::egcd(&b_over_g, &m_j);
        if !u.is_unit() {
            return Err(Error::Verification(format!(
                "b/gamma = {b_over_g} not invertible modulo {m_j}"
            )));
        }
        let eta_j = crt::reduce_mod(&(&x * &u.conj()), &m_j);
        let a_over_g = alpha0.div_exact(g).expect("gamma divides alpha0");
        let residue = crt::reduce_mod(&(-&(&eta_j * &a_over_g)), &m_j);
        pairs.push((residue, m_j.clone()));
        reduced_moduli.push(m_j);
        eta.push(Some(eta_j));
    }

    // beta: product of the distinct Gaussian primes dividing alpha0 that are
    // coprime to every reduced modulus mu_j/gamma_j; forces gcd(alpha0, delta) = 1.
    let mut alpha0_primes: Vec<GaussInt> = vec![lambda.canonical_associate()?];
    for g in &gamma {
        for (pi, _) in zi::factor(g, FACTOR_NORM_BOUND)? {
            if !alpha0_primes.contains(&pi) {
                alpha0_primes.push(pi);
            }
        }
    }
    let mut beta = GaussInt::one();
    for pi in &alpha0_primes {
        let mut keep = true;
        for m in &reduced_moduli {
            if !zi::coprime(pi, m)? {
                keep = false;
                break;
            }
        }
        if keep {
            beta = &beta * pi;
        }
    }
    if !beta.is_unit() {
        pairs.push((GaussInt::one(), beta.clone()));
    }

    // excluded inert primes: delta = i * alpha0 (mod P) keeps them off big_delta
    let mut p_product = BigInt::one();
    for &p in &req.excluded_inert {
        p_product *= p;
    }
    if !p_product.is_one() {
        let i_alpha0 = &GaussInt::i() * &alpha0;
        pairs.push((i_alpha0, GaussInt { re: p_product.clone(), im: BigInt::zero() }));
    }

    // excluded split primes: delta = 0 (mod product of pi_m)
    let mut pi_product = GaussInt::one();
    for pi in &req.excluded_split {
        pi_product = &pi_product * pi;
    }
    if !pi_product.is_unit() {
        pairs.push((GaussInt::zero(), pi_product));
    }

    let (tau, modulus) = crt::crt_zi(&pairs)?;

    // delta = tau + omega * modulus for omega walked over growing shells;
    // accept the first candidate with gcd(c, d) = 1, c > 0, and
    // N(delta) > 16 N(alpha0), which pins alpha0 as the minimum-norm point.
    let norm_threshold = alpha0.norm() * 16;
    let mut delta = None;
    let mut tried = 0u64;
    'search: for r in 1.. {
        for (x, y) in shell_points(r) {
            tried += 1;
            if tried > DELTA_SEARCH_CAP {
                break 'search;
            }
            let omega = GaussInt::new(x, y);
            let cand = &tau + &(&omega * &modulus);
            if !cand.re.is_positive() {
                continue;
            }
            if cand.norm() <= norm_threshold {
                continue;
            }
            if !cand.re.gcd(&cand.im).is_one() {
                continue;
            }
            delta = Some(cand);
            break 'search;
        }
    }
    let delta = delta.ok_or(Error::DeltaSearchExhausted)?;

    let line = Line::from_points(&alpha0, &(&alpha0 + &delta))?;
    let trace = ConstructionTrace {
        gamma,
        lambda,
        alpha0,
        eta,
        beta,
        p_product,
        modulus,
        tau,
        delta,
        line,
    };
    verify_trace(req, &trace)?;
    Ok(trace)
}

/// `count` traces with pairwise distinct lines, seeds seed..seed+count.
pub fn construct_stream(req: &ConstructionRequest, count: u64) -> Result<Vec<ConstructionTrace>> {
    let mut out = Vec::with_capacity(count as usize);
    for k in 0..count {
        let mut r = req.clone();
        r.seed = req.seed + k;
        out.push(construct_line(&r)?);
    }
    Ok(out)
}

/// Assert the six structural properties of the construction plus the
/// requested postconditions. Failure signals an implementation bug.
pub fn verify_trace(req: &ConstructionRequest, trace: &ConstructionTrace) -> Result<()> {
    let fail = |what: &str| Err(Error::Verification(what.to_string()));

    // Property 1: alpha0 is the unique minimum-norm point. Guaranteed by
    // N(delta) > 16 N(alpha0); cross-checked via the canonical line form.
    if trace.line.alpha0() != &trace.alpha0 {
        return fail("alpha0 is not the minimum-norm point of the produced line");
    }
    if trace.line.delta() != &trace.delta {
        return fail("delta is not the canonical step of the produced line");
    }
    // Property 2: gcd(c, d) = 1 and c >= 0
    if !trace.delta.re.gcd(&trace.delta.im).is_one() || trace.delta.re.is_negative() {
        return fail("delta components not coprime or c < 0");
    }
    // Property 3: gcd(alpha0, delta) = 1
    if !zi::coprime(&trace.alpha0, &trace.delta)? {
        return fail("alpha0 and delta are not coprime");
    }
    if !trace.line.is_primitive() {
        return fail("produced line is not primitive");
    }
    // Property 4: mu_j | alpha0 + b_j delta
    for c in &req.div_constraints {
        let point = trace.line.alpha(&c.b);
        if !c.mu.divides(&point)? {
            return fail(&format!("{} does not divide alpha_{}", c.mu, c.b));
        }
    }
    // Property 5: p_n does not divide big_delta
    for &p in &req.excluded_inert {
        if trace.line.prime_in_divisor_set(&GaussInt::from_int(p as i64))? {
            return fail(&format!("excluded inert prime {p} is in the divisor set"));
        }
    }
    // Property 6: pi_m | delta
    for pi in &req.excluded_split {
        if !pi.divides(&trace.delta)? {
            return fail(&format!("excluded split prime {pi} does not divide delta"));
        }
        if trace.line.prime_in_divisor_set(pi)? {
            return fail(&format!("excluded split prime {pi} is in the divisor set"));
        }
    }
    // delta must honor the congruence solution
    if !trace.modulus.is_unit() {
        let diff = &trace.delta - &trace.tau;
        if !trace.modulus.divides(&diff)? {
            return fail("delta is not congruent to tau modulo M");
        }
    }
    // alpha0 = lambda * prod(gamma_j)
    let mut prod = trace.lambda.clone();
    for g in &trace.gamma {
        prod = &prod * g;
    }
    if prod != trace.alpha0 {
        return fail("alpha0 != lambda * prod(gamma)");
    }
    Ok(())
}

/// Render a trace as a key/value text document.
pub fn trace_to_text(trace: &ConstructionTrace) -> String {
    let join = |v: &[GaussInt]| {
        v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ")
    };
    let etas = trace
        .eta
        .iter()
        .map(|e| e.as_ref().map_or("-".to_string(), |z| z.to_string()))
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "gamma: {}\nlambda: {}\nalpha0: {}\neta: {}\nbeta: {}\np_product: {}\nmodulus: {}\ntau: {}\ndelta: {}\nline: {}\nbig_delta: {}\n",
        join(&trace.gamma),
        trace.lambda,
        trace.alpha0,
        etas,
        trace.beta,
        trace.p_product,
        trace.modulus,
        trace.tau,
        trace.delta,
        trace.line,
        trace.line.big_delta(),
    )
}
