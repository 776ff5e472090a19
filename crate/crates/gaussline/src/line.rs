//! Canonical Gaussian lines: point indexing, primitivity, divisor-set
//! tests, divisibility indices, and the norm polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zi::{self, GaussInt};

/// Default cap on the brute divisibility scan in [`Line::member_index`].
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

/// A canonical Gaussian line: alpha0 is the minimum-norm point, delta the
/// unit step, big_delta = a*d - b*c for alpha0 = a+bi, delta = c+di.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    alpha0: GaussInt,
    delta: GaussInt,
    #[serde(with = "crate::zi::serde_bigint")]
    big_delta: BigInt,
    primitive: bool,
}

/// Coefficients of f(x) = N(alpha_x) = a2 x^2 + a1 x + a0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormPoly {
    #[serde(with = "crate::zi::serde_bigint")]
    pub a2: BigInt,
    #[serde(with = "crate::zi::serde_bigint")]
    pub a1: BigInt,
    #[serde(with = "crate::zi::serde_bigint")]
    pub a0: BigInt,
}

impl NormPoly {
    pub fn discriminant(&self) -> BigInt {
        &self.a1 * &self.a1 - BigInt::from(4) * &self.a2 * &self.a0
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        (&self.a2 * x + &self.a1) * x + &self.a0
    }
}

impl Line {
    /// The canonical line through two distinct Gaussian integers.
    pub fn from_points(z: &GaussInt, w: &GaussInt) -> Result<Line> {
        if z == w {
            return Err(Error::IdenticalPoints);
        }
        let dir = w - z;
        let g = dir.re.gcd(&dir.im);
        let mut delta = GaussInt { re: &dir.re / &g, im: &dir.im / &g };
        if delta.re.is_negative() || (delta.re.is_zero() && delta.im.is_negative()) {
            delta = -delta;
        }
        // Minimize N(z + k*delta), a quadratic in k with positive leading
        // coefficient; probe floor and ceil of the real vertex.
        let a2 = delta.norm();
        let a1 = (z * &delta.conj()).trace();
        let kf = (-&a1).div_floor(&(&a2 * 2));
        let cand = |k: BigInt| {
            let pt = z + &(&delta * &GaussInt { re: k, im: BigInt::zero() });
            (pt.norm(), pt)
        };
        let (n0, p0) = cand(kf.clone());
        let (n1, p1) = cand(&kf + 1);
        let alpha0 = if n0 < n1 {
            p0
        } else if n1 < n0 {
            p1
        } else {
            // tie: the point with the larger real part
            if p0.re > p1.re {
                p0
            } else {
                p1
            }
        };
        let big_delta = &alpha0.re * &delta.im - &alpha0.im * &delta.re;
        let primitive = if alpha0.is_zero() {
            delta.is_unit()
        } else {
            zi::gcd(&alpha0, &delta)?.is_unit()
        };
        Ok(Line { alpha0, delta, big_delta, primitive })
    }

    /// Validate a claimed canonical (alpha0, delta) pair; errors if the
    /// canonical form of the line they span differs.
    pub fn from_canon(alpha0: &GaussInt, delta: &GaussInt) -> Result<Line> {
        if delta.is_zero() {
            return Err(Error::ZeroArgument("delta"));
        }
        let line = Line::from_points(alpha0, &(alpha0 + delta))?;
        if &line.alpha0 != alpha0 || &line.delta != delta {
            return Err(Error::Domain(format!(
                "canon mismatch: {};{} canonicalizes to {};{}",
                alpha0, delta, line.alpha0, line.delta
            )));
        }
        Ok(line)
    }

    /// The real line Im(z) = 0, i.e. the rational integers.
    pub fn real_line() -> Line {
        Line::from_points(&GaussInt::zero(), &GaussInt::one()).expect("distinct points")
    }

    pub fn alpha0(&self) -> &GaussInt {
        &self.alpha0
    }

    pub fn delta(&self) -> &GaussInt {
        &self.delta
    }

    pub fn big_delta(&self) -> &BigInt {
        &self.big_delta
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// alpha_k = alpha0 + k * delta.
    pub fn alpha(&self, k: &BigInt) -> GaussInt {
        &self.alpha0 + &(&self.delta * &GaussInt { re: k.clone(), im: BigInt::zero() })
    }

    pub fn alpha_i64(&self, k: i64) -> GaussInt {
        self.alpha(&BigInt::from(k))
    }

    /// Inverse of alpha: the k with alpha_k = z, if z lies on the line.
    pub fn index_of(&self, z: &GaussInt) -> Option<BigInt> {
        let q = (z - &self.alpha0).div_exact(&self.delta)?;
        q.im.is_zero().then_some(q.re)
    }

    /// Divisor-set membership test for a Gaussian prime (Theorem-style:
    /// a rational prime is in D(L) iff it divides big_delta, a non-rational
    /// prime iff it does not divide delta).
    pub fn prime_in_divisor_set(&self, pi: &GaussInt) -> Result<bool> {
        if !self.primitive {
            return Err(Error::NotPrimitive);
        }
        if !zi::is_gaussian_prime(pi) {
            return Err(Error::NotPrime(pi.to_string()));
        }
        let c = pi.canonical_associate()?;
        if c.im.is_zero() {
            // rational (inert) prime; big_delta = 0 is divisible by everything
            Ok(self.big_delta.is_zero() || (&self.big_delta % &c.re).is_zero())
        } else {
            Ok(!c.divides(&self.delta)?)
        }
    }

    /// The unique residue t in [0, nu(beta)) with beta | alpha_t, found by
    /// brute scan, or None if beta divides no point of the line.
    pub fn member_index(&self, beta: &GaussInt, scan_cap: u64) -> Result<Option<u64>> {
        if !self.primitive {
            return Err(Error::NotPrimitive);
        }
        if beta.is_zero() {
            return Err(Error::ZeroArgument("member_index"));
        }
        if beta.is_unit() {
            return Err(Error::Domain("member_index rejects units".into()));
        }
        let nu = beta.nu()?;
        let nu: u64 = u64::try_from(&nu).map_err(|_| Error::ScanCapExceeded {
            needed: nu.to_string(),
            cap: scan_cap,
        })?;
        if nu > scan_cap {
            return Err(Error::ScanCapExceeded { needed: nu.to_string(), cap: scan_cap });
        }
        let mut point = self.alpha0.clone();
        for t in 0..nu {
            if beta.divides(&point)? {
                return Ok(Some(t));
            }
            point = &point + &self.delta;
        }
        Ok(None)
    }

    /// beta | alpha_k, decided through the divisibility period so it works
    /// for huge k.
    pub fn divides_alpha(&self, beta: &GaussInt, k: &BigInt, scan_cap: u64) -> Result<bool> {
        match self.member_index(beta, scan_cap)? {
            None => Ok(false),
            Some(t) => {
                let nu = BigInt::from(u64::try_from(&beta.nu()?).expect("checked by member_index"));
                Ok(k.mod_floor(&nu) == BigInt::from(t))
            }
        }
    }

    /// f(x) = N(delta) x^2 + Tr(alpha0 * conj(delta)) x + N(alpha0).
    pub fn norm_poly(&self) -> NormPoly {
        NormPoly {
            a2: self.delta.norm(),
            a1: (&self.alpha0 * &self.delta.conj()).trace(),
            a0: self.alpha0.norm(),
        }
    }

    /// Parse a line spec: `points: z1 ; z2` or `canon: alpha0 ; delta`.
    pub fn parse_spec(s: &str) -> Result<Line> {
        let err = || Error::Parse(format!("invalid line spec: {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(err)?;
        let mut parts = rest.split(';').map(|p| p.trim());
        let first: GaussInt = parts.next().ok_or_else(err)?.parse()?;
        let second: GaussInt = parts.next().ok_or_else(err)?.parse()?;
        if parts.next().is_some() {
            return Err(err());
        }
        match kind.trim() {
            "points" => Line::from_points(&first, &second),
            "canon" => Line::from_canon(&first, &second),
            _ => Err(err()),
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "canon: {} ; {}", self.alpha0, self.delta)
    }
}

impl FromStr for Line {
    type Err = Error;
    fn from_str(s: &str) -> Result<Line> {
        Line::parse_spec(s)
    }
}
