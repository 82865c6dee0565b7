//! The rational Cherednik algebra in its PBW normal form.
//!
//! Elements are finite sums of terms x^a w xi^b with cyclotomic
//! coefficients: a polynomial part in the coordinates of V*, a group
//! element, and a polynomial part in a basis of V.  Multiplication rewrites
//! any product back into this shape using the defining commutation relation
//!
//!   [xi, x] = <xi, x> + sum_H (<xi, alpha_H> <v_H, x> / <v_H, alpha_H>) gamma_H
//!
//! together with w x w^{-1} = w(x) and w xi w^{-1} = w(xi).

use crate::group::ReflectionGroup;
use crate::linalg::Mat;
use crate::params::CherednikParams;
use crate::poly::Poly;
use crate::scalar::Cyc;
use num::{One, Zero};
use std::collections::BTreeMap;

type TermKey = (Vec<u32>, usize, Vec<u32>);

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    nvars: usize,
    terms: BTreeMap<TermKey, Cyc>,
}

impl AlgebraElement {
    pub fn zero(nvars: usize) -> Self {
        AlgebraElement { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::scalar(nvars, Cyc::one())
    }

    pub fn scalar(nvars: usize, c: Cyc) -> Self {
        let mut out = Self::zero(nvars);
        out.insert_add((vec![0; nvars], 0, vec![0; nvars]), c);
        out
    }

    pub fn x_var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut out = Self::zero(nvars);
        out.insert_add((e, 0, vec![0; nvars]), Cyc::one());
        out
    }

    pub fn xi_var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut out = Self::zero(nvars);
        out.insert_add((vec![0; nvars], 0, e), Cyc::one());
        out
    }

    pub fn group_elem(nvars: usize, g: usize) -> Self {
        let mut out = Self::zero(nvars);
        out.insert_add((vec![0; nvars], g, vec![0; nvars]), Cyc::one());
        out
    }

    pub fn from_x_poly(p: &Poly<Cyc>) -> Self {
        let nvars = p.nvars();
        let mut out = Self::zero(nvars);
        for (e, c) in p.terms() {
            out.insert_add((e.clone(), 0, vec![0; nvars]), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Cyc)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: TermKey, c: Cyc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(cur) => {
                *cur = cur.clone() + c;
                if cur.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Cyc) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, c) in &self.terms {
            out.insert_add(k.clone(), c.clone() * s.clone());
        }
        out
    }

    /// The common value of deg_x - deg_xi over all terms, if the element is
    /// homogeneous for the algebra grading (group elements have degree 0).
    pub fn grading_degree(&self) -> Option<i64> {
        let mut deg = None;
        for ((a, _, b), _) in &self.terms {
            let d = a.iter().sum::<u32>() as i64 - b.iter().sum::<u32>() as i64;
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                _ => return None,
            }
        }
        deg
    }

    /// Product in the algebra, returned in PBW normal form.
    pub fn mul(&self, rhs: &Self, g: &ReflectionGroup, p: &CherednikParams) -> Self {
        let n = self.nvars;
        let mut out = Self::zero(n);
        for ((p1, w1, s1), c1) in &self.terms {
            for ((p2, w2, s2), c2) in &rhs.terms {
                // Start from the right factor's x-part as an element with
                // identity group part, push xi variables of s1 through it,
                // then apply w1 and the left polynomial, and finally absorb
                // w2 and s2 on the right.
                let mut acc = {
                    let mut e = Self::zero(n);
                    e.insert_add((p2.clone(), 0, vec![0; n]), Cyc::one());
                    e
                };
                for (i, &m) in s1.iter().enumerate() {
                    for _ in 0..m {
                        acc = xi_times(i, &acc, g, p);
                    }
                }
                // Left-multiply by x^{p1} w1.
                let mut shifted = Self::zero(n);
                for ((q, u, t), c) in &acc.terms {
                    let moved = g.act_on_poly(*w1, &Poly::monomial(q.clone(), Cyc::one()));
                    for (qe, qc) in moved.terms() {
                        let xe: Vec<u32> =
                            p1.iter().zip(qe.iter()).map(|(a, b)| a + b).collect();
                        shifted.insert_add(
                            (xe, g.mult[*w1][*u], t.clone()),
                            c.clone() * qc.clone(),
                        );
                    }
                }
                // Right-multiply by w2 xi^{s2}: move each xi tail past w2.
                let mut full = Self::zero(n);
                for ((q, u, t), c) in &shifted.terms {
                    let conj = conj_xi_monomial(g, g.inv[*w2], t);
                    for (te, tc) in conj.terms() {
                        let xe: Vec<u32> =
                            te.iter().zip(s2.iter()).map(|(a, b)| a + b).collect();
                        full.insert_add(
                            (q.clone(), g.mult[*u][*w2], xe),
                            c.clone() * tc.clone(),
                        );
                    }
                }
                let factor = c1.clone() * c2.clone();
                for (k, c) in full.terms {
                    out.insert_add(k, c * factor.clone());
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self, g: &ReflectionGroup, p: &CherednikParams) -> Self {
        self.mul(rhs, g, p).sub(&rhs.mul(self, g, p))
    }

    /// Matrix of the element acting on a finite-dimensional module given by
    /// matrices for x_i, xi_i and the group elements.
    pub fn act(
        &self,
        x_ops: &[Mat<Cyc>],
        xi_ops: &[Mat<Cyc>],
        w_ops: &[Mat<Cyc>],
        dim: usize,
    ) -> Mat<Cyc> {
        let mut out: Mat<Cyc> = Mat::zeros(dim, dim);
        for ((a, w, b), c) in &self.terms {
            let mut m = Mat::identity(dim);
            for (i, &e) in a.iter().enumerate() {
                for _ in 0..e {
                    m = &m * &x_ops[i];
                }
            }
            m = &m * &w_ops[*w];
            for (i, &e) in b.iter().enumerate() {
                for _ in 0..e {
                    m = &m * &xi_ops[i];
                }
            }
            out = &out + &m.scale(c);
        }
        out
    }
}

/// xi_i times an element in normal form, renormalized.  The group and xi
/// parts of each term are passed unchanged once the xi variable has moved
/// through the polynomial part.
fn xi_times(
    i: usize,
    elt: &AlgebraElement,
    g: &ReflectionGroup,
    p: &CherednikParams,
) -> AlgebraElement {
    let n = elt.nvars;
    let mut out = AlgebraElement::zero(n);
    for ((q, u, t), c) in &elt.terms {
        let moved = xi_past_monomial(i, q, g, p);
        for ((q2, u2, t2), c2) in &moved.terms {
            // (q2 u2 xi^{t2}) u xi^t = q2 (u2 u) (u^{-1} xi^{t2}) xi^t.
            let conj = conj_xi_monomial(g, g.inv[*u], t2);
            for (te, tc) in conj.terms() {
                let xe: Vec<u32> = te.iter().zip(t.iter()).map(|(a, b)| a + b).collect();
                out.insert_add(
                    (q2.clone(), g.mult[*u2][*u], xe),
                    c.clone() * c2.clone() * tc.clone(),
                );
            }
        }
    }
    out
}

/// Normal form of xi_i x^mu.
fn xi_past_monomial(
    i: usize,
    mu: &[u32],
    g: &ReflectionGroup,
    p: &CherednikParams,
) -> AlgebraElement {
    let n = mu.len();
    let Some(j) = mu.iter().position(|&e| e > 0) else {
        return AlgebraElement::xi_var(n, i);
    };
    let mut rest = mu.to_vec();
    rest[j] -= 1;

    // xi_i x_j x^rest = x_j (xi_i x^rest) + delta_ij x^rest
    //                 + sum_H (alpha_{H,i} v_{H,j} / e_H) gamma_H x^rest.
    let mut out = AlgebraElement::zero(n);
    let inner = xi_past_monomial(i, &rest, g, p);
    for ((q, u, t), c) in &inner.terms {
        let mut q2 = q.clone();
        q2[j] += 1;
        out.insert_add((q2, *u, t.clone()), c.clone());
    }
    if i == j {
        out.insert_add((rest.clone(), 0, vec![0; n]), Cyc::one());
    }
    let rest_poly = Poly::monomial(rest, Cyc::one());
    for (h, hp) in g.hyperplanes.iter().enumerate() {
        let coeff = hp.alpha[i].clone() * hp.coweight[j].clone()
            * Cyc::from_int(hp.e as i64).try_inv().unwrap();
        if coeff.is_zero() {
            continue;
        }
        let gamma = p.gamma(g, h);
        for (w, cw) in gamma.c.iter().enumerate() {
            if cw.is_zero() {
                continue;
            }
            let moved = g.act_on_poly(w, &rest_poly);
            for (qe, qc) in moved.terms() {
                out.insert_add(
                    (qe.clone(), w, vec![0; n]),
                    coeff.clone() * cw.clone() * qc.clone(),
                );
            }
        }
    }
    out
}

/// (w . xi)^t expanded as a polynomial in the xi basis; terms are xi
/// monomials with coefficients.
fn conj_xi_monomial(g: &ReflectionGroup, w: usize, t: &[u32]) -> Poly<Cyc> {
    if t.iter().all(|&e| e == 0) || w == 0 {
        return Poly::monomial(t.to_vec(), Cyc::one());
    }
    let m = &g.v_mats[w];
    let images: Vec<Poly<Cyc>> = (0..g.dim).map(|j| Poly::linear(&m.col(j))).collect();
    Poly::monomial(t.to_vec(), Cyc::one()).substitute(&images)
}

/// The grading element eu = sum_i x_i xi_i - z; it satisfies [eu, x] = x,
/// [eu, xi] = -xi and acts on the degree-n layer of a standard module with
/// lowest weight E by n - c_E.
pub fn euler(g: &ReflectionGroup, p: &CherednikParams) -> AlgebraElement {
    let n = g.dim;
    let mut out = AlgebraElement::zero(n);
    for i in 0..n {
        let mut a = vec![0u32; n];
        a[i] = 1;
        out.insert_add((a.clone(), 0, a), Cyc::one());
    }
    for (w, c) in p.z(g).c.iter().enumerate() {
        out.insert_add((vec![0; n], w, vec![0; n]), -c.clone());
    }
    out
}
