//! Multivariate polynomials generic over a [`Field`], with linear
//! substitution (group actions on functions), partial derivatives and exact
//! division by linear forms.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration
//! order and every derived output are deterministic.

use crate::error::Error;
use crate::scalar::Field;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Field> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, T::one())
    }

    pub fn monomial(exps: Vec<u32>, c: T) -> Self {
        let nvars = exps.len();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Linear form sum_i coeffs[i] x_i as a polynomial.
    pub fn linear(coeffs: &[T]) -> Self {
        let nvars = coeffs.len();
        let mut p = Poly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(cur) => {
                *cur = cur.clone() + c;
                if cur.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Partial derivative with respect to variable i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            let mut k = T::zero();
            for _ in 0..e[i] {
                k = k + T::one();
            }
            out.insert_add(e2, c.clone() * k);
        }
        out
    }

    /// Substitute x_i -> images[i] (a polynomial each); used for linear
    /// group actions on functions.
    pub fn substitute(&self, images: &[Poly<T>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        // Powers of each image, built once up to the needed exponent.
        let mut maxe = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                maxe[i] = maxe[i].max(e[i]);
            }
        }
        let mut pows: Vec<Vec<Poly<T>>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let mut ps = vec![Poly::constant(self.nvars, T::one())];
            for k in 1..=maxe[i] {
                let next = &ps[(k - 1) as usize] * &images[i];
                ps.push(next);
            }
            pows.push(ps);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(self.nvars, c.clone());
            for i in 0..self.nvars {
                if e[i] > 0 {
                    term = &term * &pows[i][e[i] as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact division by a linear form; errors if any remainder is left.
    pub fn div_exact_linear(&self, form: &[T]) -> Result<Poly<T>, Error> {
        assert_eq!(form.len(), self.nvars);
        let Some(pivot) = form.iter().position(|c| !c.is_zero()) else {
            return Err(Error::DivisionByZero);
        };
        let a = form[pivot].clone();
        let ell = Poly::linear(form);
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        loop {
            // Highest pivot-exponent among remaining terms.
            let Some(d) = rem.terms.keys().map(|e| e[pivot]).max() else {
                return Ok(quot);
            };
            if d == 0 {
                if rem.is_zero() {
                    return Ok(quot);
                }
                return Err(Error::DivisionNotExact(format!("{form:?}")));
            }
            // Peel the top slice: terms with pivot exponent d.
            let mut slice = Poly::zero(self.nvars);
            for (e, c) in &rem.terms {
                if e[pivot] == d {
                    let mut e2 = e.clone();
                    e2[pivot] -= 1;
                    slice.insert_add(e2, c.clone() * a.inv());
                }
            }
            let sub = &slice * &ell;
            rem = &rem - &sub;
            quot = &quot + &slice;
        }
    }

    /// Evaluate the polynomial at scalar arguments.
    pub fn eval(&self, args: &[T]) -> T {
        assert_eq!(args.len(), self.nvars);
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars {
                for _ in 0..e[i] {
                    t = t * args[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<T: Field> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Field> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Field> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Field> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// Exponent vectors of all degree-d monomials in `nvars` variables, in
/// lexicographic order with the first variable largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if nvars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(nvars - 1, d - k, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut out, &mut Vec::new());
    out
}
