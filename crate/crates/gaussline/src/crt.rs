//! Chinese remainder solving in Z[i] and on Gaussian lines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::line::Line;
use crate::zi::{self, GaussInt};

/// A system of divisibility constraints "mu_i must divide alpha_{t + b_i}"
/// on a line, solved for t.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LineCongruenceSystem {
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Constraint {
    pub mu: GaussInt,
    #[serde(with = "crate::zi::serde_bigint")]
    pub b: BigInt,
}

impl Constraint {
    pub fn new<T: Into<BigInt>>(mu: GaussInt, b: T) -> Self {
        Constraint { mu, b: b.into() }
    }
}

/// Reduce z into the fundamental parallelogram of the lattice m*Z[i],
/// via nearest-lattice-point division. Deterministic representative.
pub fn reduce_mod(z: &GaussInt, m: &GaussInt) -> GaussInt {
    let (_, r) = z.div_round(m);
    r
}

/// Solve x = r_i (mod m_i) for pairwise-coprime Gaussian moduli.
/// Returns (representative, product-of-moduli).
pub fn crt_zi(pairs: &[(GaussInt, GaussInt)]) -> Result<(GaussInt, GaussInt)> {
    if pairs.is_empty() {
        return Ok((GaussInt::zero(), GaussInt::one()));
    }
    for (_, m) in pairs {
        if m.is_zero() {
            return Err(Error::ZeroArgument("crt modulus"));
        }
    }
    let (mut x, mut modulus) = (reduce_mod(&pairs[0].0, &pairs[0].1), pairs[0].1.clone());
    for (r, m) in &pairs[1..] {
        let (g, u, _) = zi::egcd(&modulus, m);
        if !g.is_unit() {
            return Err(Error::NonCoprimeModuli);
        }
        // modulus*u + m*v = g with g a unit; g^{-1} = conj(g) for units.
        let g_inv = g.conj();
        let diff = r - &x;
        let lift = &modulus * &u * &g_inv * &diff;
        modulus = &modulus * m;
        x = reduce_mod(&(&x + &lift), &modulus);
    }
    Ok((x, modulus))
}

/// Solve the line congruence system of Theorem-3 type: the unique t modulo
/// prod(nu(mu_i)) with mu_i | alpha_{t + b_i} for all i. Every mu_i must be
/// in the divisor set of the line and the nu values pairwise coprime.
pub fn crt_line(
    line: &Line,
    sys: &LineCongruenceSystem,
    scan_cap: u64,
) -> Result<(BigInt, BigInt)> {
    if !line.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let mut residues: Vec<(BigInt, BigInt)> = Vec::with_capacity(sys.constraints.len());
    for c in &sys.constraints {
        let t_i = line
            .member_index(&c.mu, scan_cap)?
            .ok_or_else(|| Error::NotInDivisorSet(c.mu.to_string()))?;
        let nu = c.mu.nu()?;
        let residue = (BigInt::from(t_i) - &c.b).mod_floor(&nu);
        residues.push((residue, nu));
    }
    for i in 0..residues.len() {
        for j in i + 1..residues.len() {
            if !residues[i].1.gcd(&residues[j].1).is_one() {
                return Err(Error::NonCoprimeNu);
            }
        }
    }
    let (mut t, mut modulus) = (BigInt::zero(), BigInt::one());
    for (r, m) in &residues {
        // integer CRT step; moduli verified pairwise coprime above
        let e = m.extended_gcd(&modulus);
        debug_assert!(e.gcd.is_one());
        // x = t (mod modulus), x = r (mod m):
        // x = t + modulus * ((r - t) * modulus^{-1} mod m)
        let inv = e.y.mod_floor(m); // modulus^{-1} mod m
        let k = ((r - &t) * inv).mod_floor(m);
        t += &modulus * k;
        modulus *= m;
        t = t.mod_floor(&modulus);
    }
    // Re-verify every constraint through the periodicity test.
    for c in &sys.constraints {
        let idx = &t + &c.b;
        if !line.divides_alpha(&c.mu, &idx, scan_cap)? {
            return Err(Error::Verification(format!(
                "crt_line solution t={t} fails constraint {} | alpha_(t+{})",
                c.mu, c.b
            )));
        }
    }
    Ok((t, modulus))
}
