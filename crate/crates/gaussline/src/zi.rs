//! Exact arithmetic in the ring Z[i] of Gaussian integers.
//!
//! Components are unbounded (`BigInt`), so norms and products in the
//! construction machinery never overflow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Gaussian integer a + bi with unbounded components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new<R: Into<BigInt>, I: Into<BigInt>>(re: R, im: I) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        GaussInt { re: n.into(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Units of Z[i] are 1, i, -1, -i, i.e. the elements of norm 1.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// N(a + bi) = a^2 + b^2.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Tr(a + bi) = 2a.
    pub fn trace(&self) -> BigInt {
        &self.re * 2
    }

    /// nu(a + bi) = N(a + bi) / gcd(a, b): the smallest positive rational
    /// integer divisible by a + bi.
    pub fn nu(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("nu"));
        }
        let g = self.re.gcd(&self.im);
        Ok(self.norm() / g)
    }

    /// The unique associate with re > 0 and im >= 0.
    pub fn canonical_associate(&self) -> Result<GaussInt> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("canonical_associate"));
        }
        let mut z = self.clone();
        for _ in 0..4 {
            if z.re.is_positive() && !z.im.is_negative() {
                return Ok(z);
            }
            // multiply by i
            z = GaussInt { re: -&z.im, im: z.re };
        }
        unreachable!("some rotation of a nonzero Gaussian integer is canonical")
    }

    pub fn is_canonical(&self) -> bool {
        self.re.is_positive() && !self.im.is_negative()
    }

    /// Exact division: Some(self / d) when d | self, None otherwise.
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let t = self * &d.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt { re: qr, im: qi })
        } else {
            None
        }
    }

    /// True iff self | z. Errors on self = 0 unless z = 0 is also asked;
    /// the spec makes a zero divisor an error.
    pub fn divides(&self, z: &GaussInt) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("divides"));
        }
        Ok(z.div_exact(self).is_some())
    }

    /// Nearest-lattice-point division: returns (q, r) with self = q*d + r
    /// and N(r) <= N(d)/2. Deterministic tie handling.
    pub fn div_round(&self, d: &GaussInt) -> (GaussInt, GaussInt) {
        debug_assert!(!d.is_zero());
        let n = d.norm();
        let t = self * &d.conj();
        let q = GaussInt { re: round_div(&t.re, &n), im: round_div(&t.im, &n) };
        let r = self - &(&q * d);
        (q, r)
    }
}

/// round(a / n) for n > 0, ties toward +infinity.
fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    let num: BigInt = a * 2 + n;
    num.div_floor(&(n * 2))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &GaussInt) -> GaussInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussInt> for &GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

/// Euclidean gcd, returned as a canonical associate.
/// gcd(z, 0) = canonical_associate(z); gcd(0, 0) is an error.
pub fn gcd(z: &GaussInt, w: &GaussInt) -> Result<GaussInt> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::GcdZeroZero);
    }
    let mut a = z.clone();
    let mut b = w.clone();
    while !b.is_zero() {
        let (_, r) = a.div_round(&b);
        a = b;
        b = r;
    }
    a.canonical_associate()
}

/// Extended Euclidean algorithm: returns (g, x, y) with z*x + w*y = g.
/// The gcd g is not canonicalized here; callers needing the unit use it raw.
pub fn egcd(z: &GaussInt, w: &GaussInt) -> (GaussInt, GaussInt, GaussInt) {
    let (mut old_r, mut r) = (z.clone(), w.clone());
    let (mut old_s, mut s) = (GaussInt::one(), GaussInt::zero());
    let (mut old_t, mut t) = (GaussInt::zero(), GaussInt::one());
    while !r.is_zero() {
        let (q, rem) = old_r.div_round(&r);
        old_r = std::mem::replace(&mut r, rem);
        let ns = &old_s - &(&q * &s);
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &(&q * &t);
        old_t = std::mem::replace(&mut t, nt);
    }
    (old_r, old_s, old_t)
}

pub fn coprime(z: &GaussInt, w: &GaussInt) -> Result<bool> {
    Ok(gcd(z, w)?.is_unit())
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Primality of a rational integer. Deterministic below 3.3e24; beyond
/// that the fixed Miller-Rabin base set is used as-is.
pub fn is_prime_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Ok(small) = u64::try_from(n) {
        return is_prime_u64(small);
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    if (n % &two).is_zero() {
        return false;
    }
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// True iff z is a Gaussian prime: N(z) is a rational prime, or z is an
/// associate of a rational prime p = 3 (mod 4).
pub fn is_gaussian_prime(z: &GaussInt) -> bool {
    let n = z.norm();
    if n <= BigInt::one() {
        return false;
    }
    if is_prime_int(&n) {
        return true;
    }
    let c = z.canonical_associate().expect("nonzero");
    c.im.is_zero() && (&c.re % 4u32) == BigInt::from(3) && is_prime_int(&c.re)
}

/// Canonical Gaussian primes lying over the rational prime p:
/// {1+i} for p = 2, {p} for p = 3 (mod 4), and the two non-associate
/// conjugate primes for p = 1 (mod 4), smaller imaginary part first.
pub fn primes_over(p: u64) -> Result<Vec<GaussInt>> {
    if !is_prime_u64(p) {
        return Err(Error::NotRationalPrime(p));
    }
    if p == 2 {
        return Ok(vec![GaussInt::new(1, 1)]);
    }
    if p % 4 == 3 {
        return Ok(vec![GaussInt::new(p as i64, 0)]);
    }
    // p = 1 (mod 4): solve a^2 + b^2 = p with a > b > 0 by brute search.
    let mut a = 1u64;
    loop {
        let a2 = a * a;
        if a2 * 2 > p {
            break;
        }
        let b2 = p - a2;
        let b = (b2 as f64).sqrt().round() as u64;
        if b * b == b2 {
            let (hi, lo) = (a.max(b), a.min(b));
            return Ok(vec![
                GaussInt::new(hi as i64, lo as i64),
                GaussInt::new(lo as i64, hi as i64),
            ]);
        }
        a += 1;
    }
    unreachable!("every prime p = 1 (mod 4) is a sum of two squares")
}

/// Factor a nonzero Gaussian integer into canonical Gaussian primes with
/// multiplicity, by trial division of its norm up to `norm_bound`.
pub fn factor(z: &GaussInt, norm_bound: u64) -> Result<Vec<(GaussInt, u32)>> {
    if z.is_zero() {
        return Err(Error::ZeroArgument("factor"));
    }
    let mut rem = z.clone();
    let mut n = z.norm();
    let mut out: Vec<(GaussInt, u32)> = Vec::new();

    let extract = |rem: &mut GaussInt, pi: &GaussInt| -> u32 {
        let mut count = 0u32;
        while let Some(q) = rem.div_exact(pi) {
            *rem = q;
            count += 1;
        }
        count
    };

    let mut q = 2u64;
    while BigInt::from(q) * BigInt::from(q) <= n {
        if q > norm_bound {
            return Err(Error::FactorBoundExceeded(z.to_string()));
        }
        if (&n % q).is_zero() {
            for pi in primes_over(q)? {
                let c = extract(&mut rem, &pi);
                if c > 0 {
                    out.push((pi, c));
                }
            }
            while (&n % q).is_zero() {
                n /= q;
            }
        }
        q = if q == 2 { 3 } else { q + 2 };
    }
    if n > BigInt::one() {
        // Residual rational factor of the norm: a single big prime power.
        if is_prime_int(&n) {
            // split prime or 2; needs an explicit two-squares decomposition
            let p = u64::try_from(&n)
                .map_err(|_| Error::FactorBoundExceeded(z.to_string()))?;
            if p > norm_bound.saturating_mul(norm_bound) {
                return Err(Error::FactorBoundExceeded(z.to_string()));
            }
            for pi in primes_over(p)? {
                let c = extract(&mut rem, &pi);
                if c > 0 {
                    out.push((pi, c));
                }
            }
        } else {
            // p^2 for an inert prime p
            let p = n.sqrt();
            if &p * &p != n || !is_prime_int(&p) {
                return Err(Error::FactorBoundExceeded(z.to_string()));
            }
            let pi = GaussInt { re: p, im: BigInt::zero() };
            let c = extract(&mut rem, &pi);
            if c > 0 {
                out.push((pi, c));
            }
        }
    }
    debug_assert!(rem.is_unit(), "factorization must leave a unit");
    Ok(out)
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &BigInt, lead_sign: bool| {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if lead_sign {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            im_part(f, &self.im, true)
        }
    }
}

impl FromStr for GaussInt {
    type Err = Error;

    /// Accepts `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`, `0`; no spaces.
    fn from_str(s: &str) -> Result<GaussInt> {
        let err = || Error::Parse(format!("invalid Gaussian integer: {s:?}"));
        if s.is_empty() {
            return Err(err());
        }
        // Split into one or two signed terms.
        let bytes = s.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if b == b'+' || b == b'-' {
                if split.is_some() {
                    return Err(err());
                }
                split = Some(idx);
            }
        }
        let parse_term = |t: &str| -> Result<(BigInt, bool)> {
            // returns (value, is_imaginary)
            if let Some(num) = t.strip_suffix('i') {
                let v = match num {
                    "" | "+" => BigInt::one(),
                    "-" => -BigInt::one(),
                    _ => num.parse().map_err(|_| err())?,
                };
                Ok((v, true))
            } else {
                Ok((t.parse().map_err(|_| err())?, false))
            }
        };
        match split {
            None => {
                let (v, imag) = parse_term(s)?;
                Ok(if imag { GaussInt { re: BigInt::zero(), im: v } } else {
                    GaussInt { re: v, im: BigInt::zero() }
                })
            }
            Some(idx) => {
                let (a, a_imag) = parse_term(&s[..idx])?;
                let (b, b_imag) = parse_term(&s[idx..])?;
                if a_imag || !b_imag {
                    return Err(err());
                }
                Ok(GaussInt { re: a, im: b })
            }
        }
    }
}

impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde helpers for BigInt fields (serialized as decimal strings).
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(g(1, 2).norm(), BigInt::from(5));
        assert_eq!(g(0, 0).norm(), BigInt::from(0));
        assert_eq!(g(3, -4).norm(), BigInt::from(25));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(g(3, 0).nu().unwrap(), BigInt::from(3));
        assert_eq!(g(1, 2).nu().unwrap(), BigInt::from(5));
        assert_eq!(g(2, 4).nu().unwrap(), BigInt::from(10));
        assert!(g(0, 0).nu().is_err());
    }

    #[test]
    fn nu_is_smallest_divisible_rational_integer() {
        // nu(z) is divisible by z and divides every rational integer
        // divisible by z; checked by scan over 1..nu(z).
        for (re, im) in [(1, 2), (2, 4), (3, 0), (1, 1), (3, 1), (-2, 5)] {
            let z = g(re, im);
            let nu = u64::try_from(&z.nu().unwrap()).unwrap();
            assert!(z.divides(&GaussInt::from_int(nu as i64)).unwrap());
            for r in 1..nu {
                let divisible = z.divides(&GaussInt::from_int(r as i64)).unwrap();
                assert!(!divisible, "nu({z}) = {nu} but {z} | {r}");
            }
        }
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(g(-3, 0).canonical_associate().unwrap(), g(3, 0));
        assert_eq!(g(0, 1).canonical_associate().unwrap(), g(1, 0));
        assert_eq!(g(1, -2).canonical_associate().unwrap(), g(2, 1));
        assert!(g(0, 0).canonical_associate().is_err());
    }

    #[test]
    fn canonical_associate_is_idempotent_and_unique() {
        for re in -4i64..=4 {
            for im in -4i64..=4 {
                if re == 0 && im == 0 {
                    continue;
                }
                let z = g(re, im);
                let c = z.canonical_associate().unwrap();
                assert!(c.is_canonical());
                assert_eq!(c.canonical_associate().unwrap(), c);
                // exactly one associate is canonical
                let mut count = 0;
                let mut w = z.clone();
                for _ in 0..4 {
                    if w.is_canonical() {
                        count += 1;
                    }
                    w = GaussInt { re: -&w.im, im: w.re };
                }
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&g(2, 0), &g(1, 1)).unwrap(), g(1, 1));
        assert_eq!(gcd(&g(-3, 4), &g(0, 0)).unwrap(), g(-3, 4).canonical_associate().unwrap());
        assert_eq!(gcd(&g(5, 0), &g(1, 2)).unwrap(), g(1, 2));
        assert!(gcd(&g(0, 0), &g(0, 0)).is_err());
    }

    #[test]
    fn gcd_divides_both_and_quotients_coprime() {
        for (a, b) in [((4, 6), (2, 2)), ((5, 0), (3, 4)), ((7, 1), (2, -3)), ((12, 8), (6, -10))] {
            let z = g(a.0, a.1);
            let w = g(b.0, b.1);
            let d = gcd(&z, &w).unwrap();
            assert!(d.divides(&z).unwrap());
            assert!(d.divides(&w).unwrap());
            let qz = z.div_exact(&d).unwrap();
            let qw = w.div_exact(&d).unwrap();
            assert!(coprime(&qz, &qw).unwrap());
            // commutativity up to canonicalization
            assert_eq!(d, gcd(&w, &z).unwrap());
        }
    }

    #[test]
    fn egcd_bezout() {
        for (a, b) in [((7, 3), (2, -5)), ((10, 0), (4, 4)), ((1, 2), (2, 1))] {
            let z = g(a.0, a.1);
            let w = g(b.0, b.1);
            let (d, x, y) = egcd(&z, &w);
            assert_eq!(&z * &x + &w * &y, d);
        }
    }

    #[test]
    fn coprime_examples() {
        assert!(!coprime(&g(2, 0), &g(1, 1)).unwrap());
        assert!(coprime(&g(3, 0), &g(5, 0)).unwrap());
        // consecutive points on a primitive line
        let alpha = g(3, 1);
        let delta = g(2, 5);
        assert!(coprime(&alpha, &delta).unwrap());
        assert!(coprime(&alpha, &(&alpha + &delta)).unwrap());
    }

    #[test]
    fn divides_examples() {
        assert!(g(1, 2).divides(&g(3, 1)).unwrap());
        assert!(!g(1, 1).divides(&g(1, 0)).unwrap());
        assert!(g(3, -2).divides(&g(0, 0)).unwrap());
        assert!(g(0, 0).divides(&g(1, 0)).is_err());
    }

    #[test]
    fn gaussian_prime_examples() {
        assert!(is_gaussian_prime(&g(1, 1)));
        assert!(is_gaussian_prime(&g(3, 0)));
        assert!(!is_gaussian_prime(&g(2, 0)));
        assert!(is_gaussian_prime(&g(0, -3)));
        assert!(!is_gaussian_prime(&g(0, 1)));
    }

    #[test]
    fn gaussian_prime_agrees_with_divisor_enumeration() {
        // brute force: z prime iff N(z) > 1 and the only divisors are units
        // and associates, over all z with N(z) <= 10^4 is slow; sample a grid.
        for re in -20i64..=20 {
            for im in -20i64..=20 {
                let z = g(re, im);
                let n = z.norm();
                if n <= BigInt::one() {
                    continue;
                }
                let mut has_proper = false;
                let bound = 30i64;
                'outer: for dr in -bound..=bound {
                    for di in -bound..=bound {
                        let d = g(dr, di);
                        if d.is_zero() || d.is_unit() {
                            continue;
                        }
                        let dn = d.norm();
                        if dn >= n || !d.divides(&z).unwrap() {
                            continue;
                        }
                        has_proper = true;
                        break 'outer;
                    }
                }
                assert_eq!(
                    is_gaussian_prime(&z),
                    !has_proper,
                    "primality mismatch at {z}"
                );
            }
        }
    }

    #[test]
    fn primes_over_examples() {
        assert_eq!(primes_over(5).unwrap(), vec![g(2, 1), g(1, 2)]);
        assert_eq!(primes_over(3).unwrap(), vec![g(3, 0)]);
        assert_eq!(primes_over(2).unwrap(), vec![g(1, 1)]);
        assert!(primes_over(6).is_err());
    }

    #[test]
    fn primes_over_split_structure() {
        for p in [5u64, 13, 17, 29, 97, 101] {
            let primes = primes_over(p).unwrap();
            assert_eq!(primes.len(), 2);
            let [a, b] = [&primes[0], &primes[1]];
            assert!(!a.div_exact(b).map(|q| q.is_unit()).unwrap_or(false));
            let prod = a * b;
            assert_eq!(
                prod.canonical_associate().unwrap(),
                GaussInt::from_int(p as i64)
            );
            assert_eq!(a.nu().unwrap(), BigInt::from(p));
            assert_eq!(b.nu().unwrap(), BigInt::from(p));
        }
    }

    #[test]
    fn factor_small() {
        let z = g(5, 0);
        let fs = factor(&z, 1_000_000).unwrap();
        assert_eq!(fs, vec![(g(2, 1), 1), (g(1, 2), 1)]);
        let z = g(9, 0);
        assert_eq!(factor(&z, 1_000_000).unwrap(), vec![(g(3, 0), 2)]);
        let z = g(1, 1) * g(3, 0) * g(2, 1);
        let fs = factor(&z, 1_000_000).unwrap();
        let mut rebuilt = GaussInt::one();
        for (pi, c) in &fs {
            for _ in 0..*c {
                rebuilt = &rebuilt * pi;
            }
        }
        assert_eq!(rebuilt.canonical_associate().unwrap(), z.canonical_associate().unwrap());
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["0", "1", "-1", "i", "-i", "3i", "-3+2i", "2+i", "7-12i", "-45", "10i"] {
            let z: GaussInt = s.parse().unwrap();
            assert_eq!(z.to_string(), s, "round trip failed for {s}");
        }
        assert!("".parse::<GaussInt>().is_err());
        assert!("1+2".parse::<GaussInt>().is_err());
        assert!("i+1".parse::<GaussInt>().is_err());
        assert!("2 + i".parse::<GaussInt>().is_err());
    }
}
