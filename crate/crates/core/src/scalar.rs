//! Exact scalars: arbitrary-precision rationals and cyclotomic numbers.
//!
//! A [`Cyc`] is an element of the cyclotomic field Q(zeta_N), stored as a
//! coefficient vector over the power basis 1, z, ..., z^{phi(N)-1} with
//! z = e^{2 pi i / N}, reduced modulo the N-th cyclotomic polynomial.
//! Mixed-conductor arithmetic promotes both operands to the lcm of their
//! conductors; no minimal-conductor (subfield) reduction is attempted.
//!
//! Serialization: a rational value prints as `p/q` (or `p` when q = 1), an
//! irrational cyclotomic as `c0 + c1*z + ... ; N`. Parsing round-trips
//! exactly.

use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Convenience constructor for p/q.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Convenience constructor for an integer rational.
pub fn rat_i(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

/// Minimal field interface used by the generic linear algebra and
/// polynomial layers. Built on the num-traits `Zero`/`One` contracts.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rat {}

/// Euler totient, by trial counting; conductors here are tiny.
pub fn phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(mut a: Vec<Rat>, m: &[Rat]) -> Vec<Rat> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = a.len() - dm;
        for (j, mj) in m.iter().take(dm).enumerate() {
            if !mj.is_zero() {
                let idx = shift + j;
                let delta = &lead * mj;
                a[idx] -= delta;
            }
        }
    }
    poly_trim(&mut a);
    a
}

/// Exact quotient of `a` by monic `m`; panics if the division leaves a
/// remainder (only used on cyclotomic polynomial products, where it is exact).
fn poly_div_exact(mut a: Vec<Rat>, m: &[Rat]) -> Vec<Rat> {
    let dm = m.len() - 1;
    let mut q = vec![Rat::zero(); a.len().saturating_sub(dm)];
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = a.len() - dm;
        q[shift] = lead.clone();
        for (j, mj) in m.iter().take(dm).enumerate() {
            if !mj.is_zero() {
                let delta = &lead * mj;
                a[shift + j] -= delta;
            }
        }
    }
    poly_trim(&mut a);
    assert!(a.len() == 1 && a[0].is_zero(), "inexact cyclotomic division");
    poly_trim(&mut q);
    q
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Vec<Rat>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Rat>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monic N-th cyclotomic polynomial as a dense coefficient vector.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rat> {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in divisors(n) {
        if d < n {
            let pd = cyclotomic_polynomial(d);
            num = poly_div_exact(num, &pd);
        }
    }
    cyclo_cache().lock().unwrap().insert(n, num.clone());
    num
}

/// Element of the cyclotomic field Q(zeta_n) in the power basis.
#[derive(Clone, Debug)]
pub struct Cyc {
    n: u32,
    c: Vec<Rat>,
}

impl Cyc {
    fn reduce(n: u32, poly: Vec<Rat>) -> Self {
        let m = cyclotomic_polynomial(n);
        let mut c = poly_rem(poly, &m);
        let deg = phi(n) as usize;
        c.resize(deg, Rat::zero());
        Cyc { n, c }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyc { n: 1, c: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Cyc::from_rat(rat_i(k))
    }

    /// zeta_n^k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rat::zero(); k + 1];
        poly[k] = Rat::one();
        Cyc::reduce(n, poly)
    }

    pub fn zeta(n: u32) -> Self {
        Cyc::zeta_pow(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    /// Rewrite in Q(zeta_m); requires n | m.
    pub fn promote(&self, m: u32) -> Cyc {
        assert!(m % self.n == 0, "promotion requires a conductor multiple");
        if m == self.n {
            return self.clone();
        }
        let stride = (m / self.n) as usize;
        let mut poly = vec![Rat::zero(); (self.c.len() - 1) * stride + 1];
        for (k, ck) in self.c.iter().enumerate() {
            if !ck.is_zero() {
                poly[k * stride] = ck.clone();
            }
        }
        Cyc::reduce(m, poly)
    }

    fn aligned(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        let m = (a.n as u64).lcm(&(b.n as u64)) as u32;
        (a.promote(m), b.promote(m))
    }

    /// Galois substitution z -> z^t; requires gcd(t, n) = 1.
    pub fn galois(&self, t: i64) -> Cyc {
        let t = t.rem_euclid(self.n as i64) as u32;
        assert!(t.gcd(&self.n) == 1, "galois exponent must be coprime");
        let mut poly = vec![Rat::zero(); (self.c.len() - 1) * t as usize + 1];
        for (k, ck) in self.c.iter().enumerate() {
            if !ck.is_zero() {
                poly[k * t as usize] = ck.clone();
            }
        }
        Cyc::reduce(self.n, poly)
    }

    /// Complex conjugate, z -> z^{-1}.
    pub fn conj(&self) -> Cyc {
        if self.n == 1 {
            return self.clone();
        }
        self.galois(self.n as i64 - 1)
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_integer())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().and_then(|r| {
            if r.is_integer() {
                Some(r.to_integer())
            } else {
                None
            }
        })
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse; requires a nonzero value.
    pub fn try_inv(&self) -> Result<Cyc, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyc {
                n: self.n,
                c: {
                    let mut c = vec![Rat::zero(); self.c.len()];
                    c[0] = r.recip();
                    c
                },
            });
        }
        // Extended Euclid against the (irreducible) cyclotomic polynomial.
        let modulus = cyclotomic_polynomial(self.n);
        let mut r0 = modulus.clone();
        let mut r1 = self.c.clone();
        poly_trim(&mut r1);
        let mut s0: Vec<Rat> = vec![Rat::zero()];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            if r0.len() < r1.len() {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
                continue;
            }
            // One long-division step: r0 -= (lead ratio) x^shift * r1.
            let dm = r1.len() - 1;
            let lead = r0.last().unwrap() / r1.last().unwrap();
            let shift = r0.len() - 1 - dm;
            let mut q = vec![Rat::zero(); shift + 1];
            q[shift] = lead;
            let qr1 = poly_mul(&q, &r1);
            let qs1 = poly_mul(&q, &s1);
            r0 = poly_sub(&r0, &qr1);
            s0 = poly_sub(&s0, &qs1);
            if r0.len() < r1.len() || (r0.len() == 1 && r0[0].is_zero()) {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
            }
        }
        // r0 is now a nonzero constant gcd; self^{-1} = s0 / r0.
        assert!(r0.len() == 1 && !r0[0].is_zero());
        let g = r0[0].clone();
        let inv_poly: Vec<Rat> = s0.iter().map(|c| c / &g).collect();
        Ok(Cyc::reduce(self.n, inv_poly))
    }

    /// Numerical value as (re, im) in f64.
    pub fn to_c64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let v = rat_to_f64(ck);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.n as f64);
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let len = a.len().max(b.len());
    let mut out = vec![Rat::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    poly_trim(&mut out);
    out
}

/// f64 value of a big rational, via a scaled quotient when out of range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = Cyc::aligned(self, other);
        a.c == b.c
    }
}

impl Eq for Cyc {}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        let (mut a, b) = Cyc::aligned(&self, &rhs);
        for (x, y) in a.c.iter_mut().zip(b.c.iter()) {
            *x += y;
        }
        a
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        let (mut a, b) = Cyc::aligned(&self, &rhs);
        for (x, y) in a.c.iter_mut().zip(b.c.iter()) {
            *x -= y;
        }
        a
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(mut self) -> Cyc {
        for x in self.c.iter_mut() {
            *x = -x.clone();
        }
        self
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        let (a, b) = Cyc::aligned(&self, &rhs);
        Cyc::reduce(a.n, poly_mul(&a.c, &b.c))
    }
}

impl Div for Cyc {
    type Output = Cyc;
    // Division is multiplication by the norm-form inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Cyc) -> Cyc {
        let inv = rhs.try_inv().expect("division by zero cyclotomic");
        self * inv
    }
}

impl Zero for Cyc {
    fn zero() -> Self {
        Cyc::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }
}

impl One for Cyc {
    fn one() -> Self {
        Cyc::from_rat(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }
}

impl Field for Cyc {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
}

impl From<Rat> for Cyc {
    fn from(r: Rat) -> Self {
        Cyc::from_rat(r)
    }
}

impl From<i64> for Cyc {
    fn from(k: i64) -> Self {
        Cyc::from_int(k)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", fmt_rat(&r));
        }
        let mut terms = Vec::new();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let t = match k {
                0 => fmt_rat(ck),
                1 => format!("{}*z", fmt_rat(ck)),
                _ => format!("{}*z^{}", fmt_rat(ck), k),
            };
            terms.push(t);
        }
        write!(f, "{}; {}", terms.join(" + "), self.n)
    }
}

/// Parse a rational in `p/q` or `p` form.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational: {s:?}")))
}

impl FromStr for Cyc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some((head, tail)) = s.rsplit_once(';') {
            let n: u32 = tail
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad conductor in {s:?}")))?;
            if n == 0 {
                return Err(Error::Parse("conductor must be positive".into()));
            }
            let mut acc = Cyc::zero();
            for term in head.split('+') {
                let term = term.trim();
                if term.is_empty() {
                    return Err(Error::Parse(format!("empty term in {s:?}")));
                }
                let (coeff, pow) = match term.split_once('*') {
                    Some((c, zpart)) => (parse_rat(c)?, parse_zpow(zpart)?),
                    None => {
                        if let Some(p) = term.strip_prefix('z') {
                            (Rat::one(), parse_zpow(&format!("z{p}"))?)
                        } else {
                            (parse_rat(term)?, 0)
                        }
                    }
                };
                acc = acc + Cyc::from_rat(coeff) * Cyc::zeta_pow(n, pow as i64);
            }
            Ok(acc.promote_if_below(n))
        } else {
            Ok(Cyc::from_rat(parse_rat(s)?))
        }
    }
}

fn parse_zpow(s: &str) -> Result<u32, Error> {
    let s = s.trim();
    if s == "z" {
        return Ok(1);
    }
    s.strip_prefix("z^")
        .and_then(|e| e.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad power of z: {s:?}")))
}

impl Cyc {
    fn promote_if_below(self, n: u32) -> Cyc {
        if self.n < n && n % self.n == 0 {
            self.promote(n)
        } else {
            self
        }
    }
}

impl serde::Serialize for Cyc {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyc {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let p = cyclotomic_polynomial(1);
        assert_eq!(p, vec![rat_i(-1), rat_i(1)]);
        let p = cyclotomic_polynomial(4);
        assert_eq!(p, vec![rat_i(1), rat_i(0), rat_i(1)]);
        let p = cyclotomic_polynomial(6);
        assert_eq!(p, vec![rat_i(1), rat_i(-1), rat_i(1)]);
        let p = cyclotomic_polynomial(12);
        assert_eq!(p, vec![rat_i(1), rat_i(0), rat_i(-1), rat_i(0), rat_i(1)]);
    }

    #[test]
    fn zeta_relations() {
        let z = Cyc::zeta(3);
        let sum = Cyc::one() + z.clone() + z.clone() * z.clone();
        assert!(sum.is_zero());
        let z4 = Cyc::zeta(4);
        assert_eq!(z4.clone() * z4.clone(), Cyc::from_int(-1));
        let z2 = Cyc::zeta(2);
        assert_eq!(z2, Cyc::from_int(-1));
        // zeta_6 = -zeta_3^2.
        let z6 = Cyc::zeta(6);
        let z3 = Cyc::zeta(3);
        assert_eq!(z6, -(z3.clone() * z3));
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let z3 = Cyc::zeta(3);
        let z4 = Cyc::zeta(4);
        let prod = z3.clone() * z4.clone();
        assert_eq!(prod, Cyc::zeta_pow(12, 7));
        assert_eq!(prod.conductor(), 12);
        let s = z4.clone() + (-z4);
        assert!(s.is_zero());
    }

    #[test]
    fn inverses() {
        for n in [3u32, 5, 8, 12] {
            for k in 1..n as i64 {
                let v = Cyc::zeta_pow(n, k) + Cyc::from_int(2);
                let inv = v.try_inv().unwrap();
                assert!((v * inv).is_one());
            }
        }
        assert!(Cyc::zero().try_inv().is_err());
    }

    #[test]
    fn conjugation_and_reality() {
        let z = Cyc::zeta(5);
        let real = z.clone() + z.conj();
        assert!(real.is_real());
        assert!(!z.is_real());
        assert!(Cyc::from_rat(rat(-7, 3)).is_real());
        // |zeta_5|^2 = 1.
        assert!((z.clone() * z.conj()).is_one());
    }

    #[test]
    fn rationality_checks() {
        let z = Cyc::zeta(3);
        let v = z.clone() * z.clone() + z.clone(); // = -1
        assert_eq!(v.as_integer(), Some(BigInt::from(-1)));
        assert!(Cyc::from_rat(rat(4, 2)).is_integer());
        assert!(!Cyc::from_rat(rat(1, 2)).is_integer());
    }

    #[test]
    fn display_roundtrip() {
        let vals = [
            Cyc::from_rat(rat(-3, 7)),
            Cyc::zeta(12) + Cyc::from_rat(rat(1, 2)),
            Cyc::zeta_pow(8, 3) * Cyc::from_rat(rat(-2, 5)) + Cyc::from_int(4),
            Cyc::zero(),
            (Cyc::zeta(3) + Cyc::from_int(1)).try_inv().unwrap(),
        ];
        for v in vals {
            let s = v.to_string();
            let back: Cyc = s.parse().unwrap();
            assert_eq!(back, v, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn to_c64_matches_euler_formula() {
        let (re, im) = Cyc::zeta(8).to_c64();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((re - s).abs() < 1e-12 && (im - s).abs() < 1e-12);
    }
}
