//! Window coprimality analysis on Gaussian lines: reports, exhaustive
//! certification, witness search, and the B_t bound table.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::line::Line;
use crate::zi::{self, GaussInt};

/// Scan / budget limits for the certification and search operations.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Caps {
    /// max divisibility period scanned exhaustively
    pub scan_cap: u64,
    /// max window evaluations in a budgeted witness search
    pub budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { scan_cap: 10_000_000, budget: 10_000_000 }
    }
}

/// A Gaussian prime relevant to windows of length n: in the divisor set
/// and with divisibility period nu < n.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelevantPrime {
    pub prime: GaussInt,
    /// residue class of indices it divides
    pub index: u64,
    /// nu(prime): the divisibility period along the line
    pub period: u64,
}

/// Per-position coprimality structure of the window alpha_{k+1..k+n}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowReport {
    pub line: Line,
    #[serde(with = "crate::zi::serde_bigint")]
    pub start_k: BigInt,
    pub n: u64,
    /// partners[i-1] lists, for window position i in 1..=n, the
    /// (other-position, shared-prime) pairs
    pub partners: Vec<Vec<(u64, GaussInt)>>,
    /// positions coprime to all the others
    pub lonely: Vec<u64>,
}

/// Outcome of an exhaustive or budgeted bad-window search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// verified start of a bad window: alpha_{witness_k+1..witness_k+n}
    Witness {
        n: u64,
        #[serde(with = "crate::zi::serde_bigint")]
        witness_k: BigInt,
    },
    /// one full divisibility period scanned, no bad window exists
    NoneInPeriod { n: u64, period: u64 },
    /// budget exhausted without a verdict
    Unknown { n: u64, budget_spent: u64 },
}

impl Certificate {
    pub fn n(&self) -> u64 {
        match self {
            Certificate::Witness { n, .. }
            | Certificate::NoneInPeriod { n, .. }
            | Certificate::Unknown { n, .. } => *n,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Certificate::Witness { .. })
    }
}

/// Result of the g_L search up to n_max.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GReport {
    /// smallest n with a verified bad window, if one was found
    pub g: Option<u64>,
    /// one certificate per examined n, in increasing n order
    pub certificates: Vec<Certificate>,
    /// true when some smaller n ended in Unknown, making g conditional
    pub conditional: bool,
}

/// B_t values for t = 2..=limit plus the threshold statistic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundTable {
    pub limit: u64,
    /// values[t - 2] = B_t
    pub values: Vec<u64>,
    /// largest t <= limit such that B_t' never exceeds t' for t' <= t
    /// (equality occurs at t = 260,171 and 260,185 before the first strict
    /// exceedance at 260,186)
    pub threshold: u64,
}

/// All canonical Gaussian primes in the divisor set with nu < n, each with
/// its divisibility residue. Only these can be shared by two members of a
/// window of length n.
pub fn relevant_primes(line: &Line, n: u64, scan_cap: u64) -> Result<Vec<RelevantPrime>> {
    if !line.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut out = Vec::new();
    for p in 2..n {
        if !zi::is_prime_u64(p) {
            continue;
        }
        for pi in zi::primes_over(p)? {
            if !line.prime_in_divisor_set(&pi)? {
                continue;
            }
            let index = line
                .member_index(&pi, scan_cap)?
                .ok_or_else(|| Error::Verification(format!(
                    "{pi} passes the divisor-set test but divides no scanned point"
                )))?;
            out.push(RelevantPrime { prime: pi, index, period: p });
        }
    }
    Ok(out)
}

/// Residue view of the relevant primes, for tight scan loops.
fn residue_table(primes: &[RelevantPrime]) -> Vec<(i128, i128)> {
    primes.iter().map(|rp| (rp.index as i128, rp.period as i128)).collect()
}

fn divisible(s: i128, residue: i128, period: i128) -> bool {
    (s - residue).rem_euclid(period) == 0
}

/// True iff the window alpha_{k+1..k+n} has no member coprime to all the
/// others, judged from the residue table alone.
fn window_is_bad(table: &[(i128, i128)], n: u64, k: i128) -> bool {
    let lo = k + 1;
    let hi = k + n as i128;
    for s in lo..=hi {
        let mut covered = false;
        for &(r, p) in table {
            if divisible(s, r, p) && (s - p >= lo || s + p <= hi) {
                covered = true;
                break;
            }
        }
        if !covered {
            return false;
        }
    }
    true
}

/// Per-position partner structure of the window alpha_{k+1..k+n}.
pub fn window_report(line: &Line, k: &BigInt, n: u64, scan_cap: u64) -> Result<WindowReport> {
    if n < 2 {
        return Err(Error::Domain("window length must be at least 2".into()));
    }
    let primes = relevant_primes(line, n, scan_cap)?;
    let mut partners: Vec<Vec<(u64, GaussInt)>> = vec![Vec::new(); n as usize];
    for rp in &primes {
        let nu = BigInt::from(rp.period);
        let r = BigInt::from(rp.index);
        // positions i in 1..=n with k+i = index residue (mod nu)
        let mut hits: Vec<u64> = Vec::new();
        for i in 1..=n {
            let s = k + BigInt::from(i);
            if ((s - &r) % &nu).sign() == num_bigint::Sign::NoSign {
                hits.push(i);
            }
        }
        for a in 0..hits.len() {
            for b in 0..hits.len() {
                if a != b {
                    partners[hits[a] as usize - 1].push((hits[b], rp.prime.clone()));
                }
            }
        }
    }
    for list in &mut partners {
        list.sort();
        list.dedup();
    }
    let lonely = (1..=n).filter(|&i| partners[i as usize - 1].is_empty()).collect();
    Ok(WindowReport { line: line.clone(), start_k: k.clone(), n, partners, lonely })
}

fn period_of(primes: &[RelevantPrime]) -> u128 {
    let mut distinct: Vec<u64> = primes.iter().map(|rp| rp.period).collect();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.iter().fold(1u128, |acc, &p| acc.saturating_mul(p as u128))
}

/// Scan k in [lo, hi) for the smallest bad-window start. Chunked so the
/// search parallelizes deterministically: the smallest witness wins.
fn scan_for_witness(table: &[(i128, i128)], n: u64, lo: i128, hi: i128) -> Option<i128> {
    const CHUNK: i128 = 1 << 16;
    if hi - lo <= CHUNK {
        return (lo..hi).find(|&k| window_is_bad(table, n, k));
    }
    let chunks: Vec<(i128, i128)> = {
        let mut v = Vec::new();
        let mut start = lo;
        while start < hi {
            v.push((start, (start + CHUNK).min(hi)));
            start += CHUNK;
        }
        v
    };
    chunks
        .par_iter()
        .filter_map(|&(a, b)| (a..b).find(|&k| window_is_bad(table, n, k)))
        .min()
}

/// Exhaustively scan one full divisibility period. Returns a witness if a
/// bad window exists, otherwise a none-in-period certificate. Errors when
/// the period exceeds the scan cap.
pub fn certify_no_bad_window(line: &Line, n: u64, scan_cap: u64) -> Result<Certificate> {
    let primes = relevant_primes(line, n, scan_cap)?;
    let period = period_of(&primes);
    if period > scan_cap as u128 {
        return Err(Error::ScanCapExceeded { needed: period.to_string(), cap: scan_cap });
    }
    let table = residue_table(&primes);
    match scan_for_witness(&table, n, 0, period as i128) {
        Some(k) => Ok(Certificate::Witness { n, witness_k: BigInt::from(k) }),
        None => Ok(Certificate::NoneInPeriod { n, period: period as u64 }),
    }
}

/// Budgeted witness search. Scans window starts upward from k = -n so that
/// constructions placing their bad window at alpha_0 are found immediately;
/// when the full period fits the budget the result is exhaustive.
pub fn find_bad_window(line: &Line, n: u64, caps: &Caps) -> Result<Certificate> {
    let primes = relevant_primes(line, n, caps.scan_cap)?;
    let period = period_of(&primes);
    let table = residue_table(&primes);
    let lo = -(n as i128);
    if period <= caps.budget as u128 {
        match scan_for_witness(&table, n, lo, lo + period as i128) {
            Some(k) => Ok(Certificate::Witness { n, witness_k: BigInt::from(k) }),
            None => Ok(Certificate::NoneInPeriod { n, period: period as u64 }),
        }
    } else {
        match scan_for_witness(&table, n, lo, lo + caps.budget as i128) {
            Some(k) => Ok(Certificate::Witness { n, witness_k: BigInt::from(k) }),
            None => Ok(Certificate::Unknown { n, budget_spent: caps.budget }),
        }
    }
}

/// Smallest n <= n_max admitting a verified bad window, with certificates
/// for every examined n. Unknown entries make the result conditional.
pub fn g_of_line(line: &Line, n_max: u64, caps: &Caps) -> Result<GReport> {
    let mut certificates = Vec::new();
    let mut conditional = false;
    for n in 2..=n_max {
        let cert = find_bad_window(line, n, caps)?;
        let found = cert.is_witness();
        if matches!(cert, Certificate::Unknown { .. }) {
            conditional = true;
        }
        certificates.push(cert);
        if found {
            return Ok(GReport { g: Some(n), certificates, conditional });
        }
    }
    Ok(GReport { g: None, certificates, conditional })
}

/// Best certificate obtainable within budget for each n in [n_lo, n_hi].
pub fn explore_g(line: &Line, n_lo: u64, n_hi: u64, caps: &Caps) -> Result<Vec<Certificate>> {
    (n_lo..=n_hi).map(|n| find_bad_window(line, n, caps)).collect()
}

/// B_t = sum over rational primes p < t, p = 1 (mod 4), of ceil(t/p).
pub fn bound_b(t: u64) -> u64 {
    let mut sum = 0u64;
    for p in 2..t {
        if p % 4 == 1 && zi::is_prime_u64(p) {
            sum += t.div_ceil(p);
        }
    }
    sum
}

/// Incremental computation of B_t for all t <= limit.
///
/// Uses the step identity: going from t-1 to t, ceil(t/p) grows by one
/// exactly for the primes p | t-1, and when t-1 is itself a prime
/// = 1 (mod 4) it newly enters the sum contributing ceil(t/(t-1)) = 2.
pub fn bound_table(limit: u64) -> BoundTable {
    assert!(limit >= 2, "bound_table needs limit >= 2");
    let n = limit as usize;
    // smallest-prime-factor sieve up to limit
    let mut spf: Vec<u32> = vec![0; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut values = Vec::with_capacity(n - 1);
    let mut b = 0u64; // B_2 = 0
    values.push(b);
    let mut threshold = 2u64;
    let mut all_below = true;
    for t in 3..=limit {
        let mut m = (t - 1) as usize;
        let mut step = 0u64;
        while m > 1 {
            let p = spf[m] as u64;
            if p % 4 == 1 {
                step += 1;
            }
            while m % p as usize == 0 {
                m /= p as usize;
            }
        }
        if (t - 1) % 4 == 1 && zi::is_prime_u64(t - 1) {
            step += 1; // the new prime p = t-1 contributes ceil(t/p) = 2 in total
        }
        b += step;
        values.push(b);
        if b > t {
            all_below = false;
        }
        if all_below {
            threshold = t;
        }
    }
    BoundTable { limit, values, threshold }
}

impl BoundTable {
    pub fn value(&self, t: u64) -> Option<u64> {
        if t < 2 || t > self.limit {
            return None;
        }
        Some(self.values[(t - 2) as usize])
    }
}
