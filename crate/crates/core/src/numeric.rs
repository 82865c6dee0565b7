//! Floating scalars for the monodromy engine.
//!
//! Two backends sit behind [`Real`]: plain f64 (53-bit mantissa) and
//! double-double [`DD`] (106-bit), the default for published results.
//! Double-double follows the usual error-free transformation scheme
//! (two_sum / two_prod with fused multiply-add), which keeps the pair
//! normalized so that the tail is below half an ulp of the head.
//!
//! The only transcendental entry point is e^{2*pi*i*q} for rational q:
//! the argument is reduced to [0, 1/8] exactly in rational arithmetic,
//! scaled by a 50-digit rational approximation of pi, and fed to a
//! Taylor series, so each backend gets full-precision trigonometry
//! without its own constant tables.

use crate::error::Error;
use crate::linalg::Mat;
use crate::scalar::{rat, Cyc, Field, Rat};
use num::{BigInt, One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

fn pi_rat() -> &'static Rat {
    static PI: OnceLock<Rat> = OnceLock::new();
    PI.get_or_init(|| {
        let digits = "31415926535897932384626433832795028841971693993751";
        Rat::new(
            BigInt::from_str(digits).unwrap(),
            BigInt::from(10u8).pow(49),
        )
    })
}

pub trait Real:
    Copy
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const MANTISSA_BITS: u32;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    /// hi + lo as one value; lo refines hi where the type can hold it.
    fn from_two_f64(hi: f64, lo: f64) -> Self;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    /// Unit roundoff of the backend.
    fn eps() -> f64 {
        (2.0f64).powi(-(Self::MANTISSA_BITS as i32))
    }

    fn from_rat(r: &Rat) -> Self {
        let hi = r.to_f64().unwrap();
        let rest = r - Rat::from_float(hi).unwrap();
        Self::from_two_f64(hi, rest.to_f64().unwrap())
    }

    /// (cos, sin) of 2*pi*q, exact rational reduction first.
    fn cos_sin_2pi(q: &Rat) -> (Self, Self) {
        let fl = q.floor();
        let mut q = q - &fl;
        let mut flip_sin = false;
        if q > rat(1, 2) {
            q = rat(1, 1) - q;
            flip_sin = true;
        }
        let mut negate_cos = false;
        if q > rat(1, 4) {
            q = rat(1, 2) - q;
            negate_cos = true;
        }
        let mut swap = false;
        if q > rat(1, 8) {
            q = rat(1, 4) - q;
            swap = true;
        }
        let theta = Self::from_rat(&(pi_rat() * &q * rat(2, 1)));
        let (mut c, mut s) = taylor_cos_sin(theta);
        if swap {
            std::mem::swap(&mut c, &mut s);
        }
        if negate_cos {
            c = -c;
        }
        if flip_sin {
            s = -s;
        }
        (c, s)
    }
}

/// cos/sin by Taylor series; |theta| <= pi/4 after reduction.
fn taylor_cos_sin<R: Real>(theta: R) -> (R, R) {
    let t2 = theta * theta;
    let cutoff = R::eps() * 1e-3;
    let mut cos = R::one();
    let mut sin = theta;
    let mut term_c = R::one();
    let mut term_s = theta;
    let mut n = 0u32;
    loop {
        // term_c: (-1)^k t^{2k}/(2k)!, step divides by (2k+1)(2k+2).
        term_c = -term_c * t2 / R::from_f64(((n + 1) * (n + 2)) as f64);
        term_s = -term_s * t2 / R::from_f64(((n + 2) * (n + 3)) as f64);
        cos = cos + term_c;
        sin = sin + term_s;
        n += 2;
        if term_c.abs().to_f64() < cutoff && term_s.abs().to_f64() < cutoff {
            break;
        }
        assert!(n < 200, "Taylor series failed to converge");
    }
    (cos, sin)
}

impl Real for f64 {
    const MANTISSA_BITS: u32 = 53;

    fn from_f64(x: f64) -> Self {
        x
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn from_two_f64(hi: f64, lo: f64) -> Self {
        hi + lo
    }

    fn abs(self) -> Self {
        f64::abs(self)
    }

    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
}

/// Double-double: value hi + lo with |lo| <= ulp(hi)/2.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DD(pub f64, pub f64);

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Add for DD {
    type Output = DD;
    fn add(self, rhs: DD) -> DD {
        let (s1, s2) = two_sum(self.0, rhs.0);
        let (t1, t2) = two_sum(self.1, rhs.1);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (r0, r1) = quick_two_sum(s1, s2 + t2);
        DD(r0, r1)
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD(-self.0, -self.1)
    }
}

impl Sub for DD {
    type Output = DD;
    fn sub(self, rhs: DD) -> DD {
        self + (-rhs)
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, rhs: DD) -> DD {
        let (p1, p2) = two_prod(self.0, rhs.0);
        let p2 = p2 + self.0 * rhs.1 + self.1 * rhs.0;
        let (r0, r1) = quick_two_sum(p1, p2);
        DD(r0, r1)
    }
}

impl Div for DD {
    type Output = DD;
    fn div(self, rhs: DD) -> DD {
        let q1 = self.0 / rhs.0;
        let r = self - rhs * DD(q1, 0.0);
        let q2 = r.0 / rhs.0;
        let r = r - rhs * DD(q2, 0.0);
        let q3 = r.0 / rhs.0;
        let (s, e) = quick_two_sum(q1, q2);
        DD(s, e) + DD(q3, 0.0)
    }
}

impl Real for DD {
    const MANTISSA_BITS: u32 = 106;

    fn from_f64(x: f64) -> Self {
        DD(x, 0.0)
    }

    fn to_f64(self) -> f64 {
        self.0 + self.1
    }

    fn from_two_f64(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        DD(s, e)
    }

    fn abs(self) -> Self {
        if self.0 < 0.0 || (self.0 == 0.0 && self.1 < 0.0) {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        if self.0 == 0.0 && self.1 == 0.0 {
            return DD(0.0, 0.0);
        }
        assert!(self.0 > 0.0, "sqrt of negative double-double");
        // One dd-Newton refinement of the f64 square root.
        let x = 1.0 / self.0.sqrt();
        let ax = self.0 * x;
        let axdd = DD(ax, 0.0);
        let err = (self - axdd * axdd).0 * (x * 0.5);
        let (r0, r1) = quick_two_sum(ax, err);
        DD(r0, r1)
    }
}

impl fmt::Display for DD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.17e}", self.to_f64())
    }
}

/// Complex number over a [`Real`] backend.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cplx<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cplx<R> {
    pub fn new(re: R, im: R) -> Self {
        Cplx { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cplx::new(R::from_f64(re), R::from_f64(im))
    }

    pub fn from_rat(r: &Rat) -> Self {
        Cplx::new(R::from_rat(r), R::zero())
    }

    pub fn i() -> Self {
        Cplx::new(R::zero(), R::one())
    }

    pub fn conj(self) -> Self {
        Cplx::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> R {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> R {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: R) -> Self {
        Cplx::new(self.re * s, self.im * s)
    }

    /// e^{2 pi i q} for rational q.
    pub fn root_of_unity(q: &Rat) -> Self {
        let (c, s) = R::cos_sin_2pi(q);
        Cplx::new(c, s)
    }
}

impl<R: Real> Add for Cplx<R> {
    type Output = Cplx<R>;
    fn add(self, rhs: Self) -> Self {
        Cplx::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<R: Real> Sub for Cplx<R> {
    type Output = Cplx<R>;
    fn sub(self, rhs: Self) -> Self {
        Cplx::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<R: Real> Neg for Cplx<R> {
    type Output = Cplx<R>;
    fn neg(self) -> Self {
        Cplx::new(-self.re, -self.im)
    }
}

impl<R: Real> Mul for Cplx<R> {
    type Output = Cplx<R>;
    fn mul(self, rhs: Self) -> Self {
        Cplx::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<R: Real> Div for Cplx<R> {
    type Output = Cplx<R>;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.norm_sqr();
        let n = self * rhs.conj();
        Cplx::new(n.re / d, n.im / d)
    }
}

impl<R: Real> Zero for Cplx<R> {
    fn zero() -> Self {
        Cplx::new(R::zero(), R::zero())
    }

    fn is_zero(&self) -> bool {
        self.re == R::zero() && self.im == R::zero()
    }
}

impl<R: Real> One for Cplx<R> {
    fn one() -> Self {
        Cplx::new(R::one(), R::zero())
    }
}

impl<R: Real> Field for Cplx<R> {
    fn inv(&self) -> Self {
        Cplx::<R>::one() / *self
    }
}

/// Numerical embedding Q(zeta_n) -> C sending zeta_n to e^{2 pi i / n}.
pub fn cyc_to_complex<R: Real>(a: &Cyc) -> Cplx<R> {
    let n = a.conductor();
    let mut acc = Cplx::zero();
    for (j, coeff) in a.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let root = Cplx::<R>::root_of_unity(&rat(j as i64, n as i64));
        acc = acc + root.scale(R::from_rat(coeff));
    }
    acc
}

/// Embedding at a requested mantissa width; the double-double backend
/// covers every width up to 106 bits.
pub fn to_complex(a: &Cyc, precision_bits: u32) -> Result<Cplx<DD>, Error> {
    if precision_bits == 0 || precision_bits > DD::MANTISSA_BITS {
        return Err(Error::Config(format!(
            "precision {precision_bits} bits unsupported (1..=106)"
        )));
    }
    Ok(cyc_to_complex(a))
}

pub fn mat_to_complex<R: Real>(m: &Mat<Cyc>) -> Mat<Cplx<R>> {
    m.map(|c| cyc_to_complex(c))
}

/// Frobenius norm, reported in f64.
pub fn frobenius<R: Real>(m: &Mat<Cplx<R>>) -> f64 {
    let mut acc = R::zero();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            acc = acc + m[(i, j)].norm_sqr();
        }
    }
    acc.sqrt().to_f64()
}

pub fn max_abs<R: Real>(m: &Mat<Cplx<R>>) -> f64 {
    let mut best = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            best = best.max(m[(i, j)].abs().to_f64());
        }
    }
    best
}

/// Rank by column-pivoted elimination with an absolute threshold.
pub fn numeric_rank<R: Real>(m: &Mat<Cplx<R>>, tol: f64) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut rank = 0;
    let mut row = 0;
    for _ in 0..cols.min(rows) {
        // Largest remaining entry.
        let mut best = (row, row, 0.0f64);
        for i in row..rows {
            for j in 0..cols {
                let v = a[(i, j)].abs().to_f64();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        if best.2 <= tol {
            break;
        }
        let (pi, pj, _) = best;
        for j in 0..cols {
            let t = a[(row, j)];
            a[(row, j)] = a[(pi, j)];
            a[(pi, j)] = t;
        }
        let pivot = a[(row, pj)];
        for i in row + 1..rows {
            let f = a[(i, pj)] / pivot;
            for j in 0..cols {
                let s = a[(row, j)];
                a[(i, j)] = a[(i, j)] - f * s;
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Monic characteristic polynomial coefficients [c_0, ..., c_{n-1}, 1]
/// by the Faddeev-LeVerrier recurrence.
pub fn char_poly<R: Real>(m: &Mat<Cplx<R>>) -> Vec<Cplx<R>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut coeffs = vec![Cplx::zero(); n + 1];
    coeffs[n] = Cplx::one();
    let mut mk: Mat<Cplx<R>> = Mat::identity(n);
    for k in 1..=n {
        let nk = m * &mk;
        let c = -(nk.trace() / Cplx::from_f64(k as f64, 0.0));
        coeffs[n - k] = c;
        mk = nk;
        for i in 0..n {
            mk[(i, i)] = mk[(i, i)] + c;
        }
    }
    coeffs
}

/// All roots of a monic polynomial by Durand-Kerner iteration.
pub fn poly_roots<R: Real>(coeffs: &[Cplx<R>], tol: f64) -> Result<Vec<Cplx<R>>, Error> {
    let n = coeffs.len() - 1;
    assert!(!coeffs[n].is_zero());
    let monic: Vec<Cplx<R>> = coeffs.iter().map(|c| *c / coeffs[n]).collect();
    let eval = |x: Cplx<R>| {
        let mut acc = Cplx::<R>::zero();
        for c in monic.iter().rev() {
            acc = acc * x + *c;
        }
        acc
    };
    // Seed on a spiral that avoids symmetric lock-in.
    let seed = Cplx::<R>::from_f64(0.4, 0.9);
    let mut roots: Vec<Cplx<R>> = Vec::with_capacity(n);
    let mut cur = Cplx::<R>::one();
    for _ in 0..n {
        cur = cur * seed;
        roots.push(cur);
    }
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for j in 0..n {
            let mut denom = Cplx::<R>::one();
            for k in 0..n {
                if k != j {
                    denom = denom * (roots[j] - roots[k]);
                }
            }
            let step = eval(roots[j]) / denom;
            roots[j] = roots[j] - step;
            delta = delta.max(step.abs().to_f64());
        }
        if delta < tol {
            return Ok(roots);
        }
    }
    Err(Error::Numerical("root finding did not converge".into()))
}

/// Eigenvalues of a square complex matrix.
pub fn eigenvalues<R: Real>(m: &Mat<Cplx<R>>, tol: f64) -> Result<Vec<Cplx<R>>, Error> {
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    poly_roots(&char_poly(m), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_i;

    #[test]
    fn dd_arithmetic_extends_f64() {
        // 1 + 2^-80 is invisible to f64, visible to DD.
        let tiny = (2.0f64).powi(-80);
        let a = DD::from_f64(1.0) + DD::from_f64(tiny);
        assert_ne!(a, DD::from_f64(1.0));
        assert_eq!(a - DD::from_f64(tiny), DD::from_f64(1.0));
        // Division round trip.
        let x = DD::from_rat(&rat(1, 3));
        let y = x * DD::from_f64(3.0);
        assert!((y - DD::from_f64(1.0)).abs().to_f64() < 1e-31);
        // sqrt(2)^2 = 2.
        let s = DD::from_f64(2.0).sqrt();
        assert!((s * s - DD::from_f64(2.0)).abs().to_f64() < 1e-31);
    }

    #[test]
    fn roots_of_unity_high_precision() {
        // zeta_4 -> i.
        let z: Cplx<DD> = Cplx::root_of_unity(&rat(1, 4));
        assert!(z.re.abs().to_f64() < 1e-31);
        assert!((z.im - DD::from_f64(1.0)).abs().to_f64() < 1e-31);
        // |e^{2 pi i q}| = 1 for awkward q.
        for q in [rat(1, 7), rat(3, 11), rat(22, 13), rat(-5, 9)] {
            let z: Cplx<DD> = Cplx::root_of_unity(&q);
            assert!((z.norm_sqr() - DD::from_f64(1.0)).abs().to_f64() < 1e-30);
        }
        // Addition theorem at 1/7: z^7 = 1.
        let z: Cplx<DD> = Cplx::root_of_unity(&rat(1, 7));
        let mut p = Cplx::<DD>::one();
        for _ in 0..7 {
            p = p * z;
        }
        assert!((p - Cplx::one()).abs().to_f64() < 1e-30);
    }

    #[test]
    fn embedding_is_ring_homomorphism() {
        // (zeta_3 + 2)(zeta_3 - 1) vs product of embeddings.
        let a = Cyc::zeta_pow(3, 1) + Cyc::from_rat(rat_i(2));
        let b = Cyc::zeta_pow(3, 1) - Cyc::from_rat(rat_i(1));
        let ab = a.clone() * b.clone();
        let za: Cplx<DD> = cyc_to_complex(&a);
        let zb: Cplx<DD> = cyc_to_complex(&b);
        let zab: Cplx<DD> = cyc_to_complex(&ab);
        assert!((za * zb - zab).abs().to_f64() < 1e-30);
        let bad = to_complex(&a, 200);
        assert!(bad.is_err());
        assert!(to_complex(&a, 64).is_ok());
    }

    #[test]
    fn rank_and_eigenvalues() {
        // Rank-1 projector has eigenvalues {1, 0}.
        let m: Mat<Cplx<DD>> = Mat::from_rows(vec![
            vec![Cplx::from_f64(0.5, 0.0), Cplx::from_f64(0.5, 0.0)],
            vec![Cplx::from_f64(0.5, 0.0), Cplx::from_f64(0.5, 0.0)],
        ]);
        assert_eq!(numeric_rank(&m, 1e-20), 1);
        let mut eig = eigenvalues(&m, 1e-25).unwrap();
        eig.sort_by(|a, b| a.abs().to_f64().partial_cmp(&b.abs().to_f64()).unwrap());
        assert!(eig[0].abs().to_f64() < 1e-20);
        assert!((eig[1] - Cplx::one()).abs().to_f64() < 1e-20);
        // Rotation by 2 pi / 5: eigenvalues e^{+-2 pi i/5}.
        let (c, s) = DD::cos_sin_2pi(&rat(1, 5));
        let rot: Mat<Cplx<DD>> = Mat::from_rows(vec![
            vec![Cplx::new(c, DD::from_f64(0.0)), Cplx::new(-s, DD::from_f64(0.0))],
            vec![Cplx::new(s, DD::from_f64(0.0)), Cplx::new(c, DD::from_f64(0.0))],
        ]);
        let eig = eigenvalues(&rot, 1e-25).unwrap();
        let target: Cplx<DD> = Cplx::root_of_unity(&rat(1, 5));
        let hit = eig
            .iter()
            .any(|e| (*e - target).abs().to_f64() < 1e-25);
        assert!(hit);
    }

    #[test]
    fn f64_backend_agrees() {
        let (c, s) = f64::cos_sin_2pi(&rat(1, 3));
        assert!((c + 0.5).abs() < 1e-15);
        assert!((s - (0.75f64).sqrt()).abs() < 1e-15);
        let (cd, sd) = DD::cos_sin_2pi(&rat(1, 3));
        assert!((cd.to_f64() - c).abs() < 1e-15);
        assert!((sd.to_f64() - s).abs() < 1e-15);
    }
}
