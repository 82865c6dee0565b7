//! Independent oracles used by the integration tests.
//!
//! Everything here is written from first principles against closed-form
//! rank-one calculations and textbook algorithms, deliberately avoiding the
//! crate's own polynomial, group and module machinery, so that agreement
//! between the two code paths is meaningful evidence.

#![allow(dead_code)]

use cherednik::scalar::{rat_i, Rat};
use num::{BigInt, Signed, Zero};

/// Closed-form rank-one oracle for W = Z/e acting on V = C.
///
/// On the standard module built on the character det^m, the basis vector of
/// the degree-t layer is x^t (x) v and the lowering generator acts by
///
///   xi (x^t (x) v) = coeff(t) * x^{t-1} (x) v,
///   coeff(t) = t + e * (k[(t - m) mod e] - k[(-m) mod e]),
///
/// with k[0] = 0. This is a hand derivation from the commutation relation
/// in one variable; for m = 0 it reduces to the Dunkl eigenvalue
/// t + e * k[t mod e] on polynomials.
pub struct RankOneOracle {
    pub e: usize,
    /// k[1..e-1]; index 0 is implicitly zero.
    pub k: Vec<Rat>,
}

impl RankOneOracle {
    pub fn new(e: usize, k: Vec<Rat>) -> Self {
        assert_eq!(k.len(), e - 1);
        RankOneOracle { e, k }
    }

    fn k_at(&self, idx: usize) -> Rat {
        let r = idx % self.e;
        if r == 0 {
            Rat::zero()
        } else {
            self.k[r - 1].clone()
        }
    }

    /// Coefficient of the lowering action Delta(det^m)_t -> Delta(det^m)_{t-1}.
    pub fn lowering_coeff(&self, m: usize, t: usize) -> Rat {
        let e = self.e;
        let shift = self.k_at((t + e - (m % e)) % e) - self.k_at((e - (m % e)) % e);
        rat_i(t as i64) + rat_i(e as i64) * shift
    }

    /// Dunkl action on plain polynomials: T(x^t) = dunkl_coeff(t) x^{t-1}.
    pub fn dunkl_coeff(&self, t: usize) -> Rat {
        self.lowering_coeff(0, t)
    }

    /// dim L(det^m)_n: 1 while every lowering coefficient up to n is
    /// nonzero, 0 from the first vanishing coefficient on.
    pub fn simple_dims(&self, m: usize, max_n: usize) -> Vec<usize> {
        let mut dims = Vec::with_capacity(max_n + 1);
        let mut alive = true;
        dims.push(1);
        for t in 1..=max_n {
            if self.lowering_coeff(m, t).is_zero() {
                alive = false;
            }
            dims.push(if alive { 1 } else { 0 });
        }
        dims
    }

    /// c-value of det^m: the degree-t layer is an eu eigenvector with
    /// eigenvalue t - c, and the singular degree is where coeff vanishes.
    pub fn c_value(&self, m: usize) -> Rat {
        // c_{det^m} = e * k[(-m) mod e].
        rat_i(self.e as i64) * self.k_at((self.e - (m % self.e)) % self.e)
    }
}

/// Textbook integer Bareiss elimination, used as the rank oracle.
pub fn bareiss_rank_int(rows: usize, cols: usize, data: &[i64]) -> usize {
    assert_eq!(data.len(), rows * cols);
    let mut a: Vec<BigInt> = data.iter().map(|&x| BigInt::from(x)).collect();
    let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * cols + j].clone();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !at(&a, i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let pivot = at(&a, r, c);
        for i in (r + 1)..rows {
            let head = at(&a, i, c);
            for j in (c + 1)..cols {
                let num = &pivot * at(&a, i, j) - &head * at(&a, r, j);
                let q = &num / &prev;
                assert!((&q * &prev - &num).is_zero(), "Bareiss division not exact");
                a[i * cols + j] = q;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    let _ = prev.abs();
    r
}

/// Hand character table of S3 on classes (1, transpositions, 3-cycles),
/// with class sizes (1, 3, 2); rows triv, sgn, std.
pub const S3_CHAR_TABLE: [[i64; 3]; 3] = [[1, 1, 1], [1, -1, 1], [2, 0, -1]];
pub const S3_CLASS_SIZES: [i64; 3] = [1, 3, 2];

/// Multiplicity of row f in the product of rows chi by psi, by hand
/// orthogonality over the table above.
pub fn s3_product_multiplicity(chi: [i64; 3], psi: [i64; 3], f: usize) -> i64 {
    let mut acc = 0;
    for c in 0..3 {
        acc += S3_CLASS_SIZES[c] * chi[c] * psi[c] * S3_CHAR_TABLE[f][c];
    }
    assert_eq!(acc % 6, 0);
    acc / 6
}
