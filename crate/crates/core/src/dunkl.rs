//! Dunkl operators and the action on standard modules.
//!
//! On the polynomial representation, xi in V acts by
//!
//!   T_xi = d_xi + sum_H (<xi, alpha_H> / alpha_H) a_H
//!
//! where a_H acts through the group.  On a standard module Delta(E) =
//! Sym(V*) (x) E the same operator acquires the E part:
//!
//!   xi(f (x) v) = d_xi f (x) v + sum_H (<xi, alpha_H> / alpha_H)
//!       sum_{i,j} e_H (k_{H,i+j} - k_{H,j}) eps_{H,i}(f) (x) eps_{H,j}(v)
//!
//! with indices mod e_H.  Both the numerator polynomials here and a_H(f)
//! vanish on H, so the divisions are exact; the division routine verifies
//! that on every call.

use crate::algebra::AlgebraElement;
use crate::error::Error;
use crate::group::ReflectionGroup;
use crate::linalg::Mat;
use crate::params::CherednikParams;
use crate::poly::{monomials_of_degree, Poly};
use crate::scalar::Cyc;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dunkl operator T_xi applied to a polynomial.
pub fn dunkl_apply(
    g: &ReflectionGroup,
    p: &CherednikParams,
    xi: usize,
    f: &Poly<Cyc>,
) -> Result<Poly<Cyc>, Error> {
    let mut out = f.partial(xi);
    for (h, hp) in g.hyperplanes.iter().enumerate() {
        let pairing = hp.alpha[xi].clone();
        if pairing.is_zero() {
            continue;
        }
        let ah = p.a_h(g, h);
        let mut acted = Poly::zero(g.dim);
        for (w, c) in ah.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acted = &acted + &g.act_on_poly(w, f).scale(c);
        }
        if acted.is_zero() {
            continue;
        }
        let q = acted.div_exact_linear(&hp.alpha)?;
        out = &out + &q.scale(&pairing);
    }
    Ok(out)
}

/// A vector of Delta(E): component b is the polynomial coefficient of the
/// b-th basis vector of E.
pub type DeltaVec = Vec<Poly<Cyc>>;

pub fn delta_zero(g: &ReflectionGroup, e_idx: usize) -> DeltaVec {
    vec![Poly::zero(g.dim); g.irreps[e_idx].dim]
}

/// Action of xi on a Delta(E) vector.
pub fn xi_on_delta(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    xi: usize,
    v: &DeltaVec,
) -> Result<DeltaVec, Error> {
    let e = &g.irreps[e_idx];
    let mut out: DeltaVec = v.iter().map(|f| f.partial(xi)).collect();
    for (h, hp) in g.hyperplanes.iter().enumerate() {
        let pairing = hp.alpha[xi].clone();
        if pairing.is_zero() {
            continue;
        }
        let eh = hp.e;
        // Isotypic pieces of each polynomial component under the cyclic
        // stabilizer, divided by alpha_H up front.
        let mut eps_f: Vec<Vec<Option<Poly<Cyc>>>> = Vec::with_capacity(e.dim);
        for f in v {
            let mut per_i: Vec<Option<Poly<Cyc>>> = Vec::with_capacity(eh);
            for i in 0..eh {
                if i == 0 {
                    per_i.push(None);
                    continue;
                }
                let mut acc = Poly::zero(g.dim);
                for &w in &hp.stab {
                    let mut d = Cyc::one();
                    for _ in 0..i {
                        d = d * g.det[w].clone();
                    }
                    acc = &acc + &g.act_on_poly(w, f).scale(&d);
                }
                if acc.is_zero() {
                    per_i.push(Some(acc));
                } else {
                    let scaled = acc.scale(&Cyc::from_int(eh as i64).try_inv().unwrap());
                    per_i.push(Some(scaled.div_exact_linear(&hp.alpha)?));
                }
            }
            eps_f.push(per_i);
        }
        let projectors: Vec<Mat<Cyc>> = (0..eh).map(|j| g.eps(h, j).act_irrep(e)).collect();
        for i in 1..eh {
            for j in 0..eh {
                let dk = p.k_at(g, h, (i + j) as i64) - p.k_at(g, h, j as i64);
                if dk.is_zero() {
                    continue;
                }
                let coeff = pairing.clone()
                    * Cyc::from_rat(dk * crate::scalar::rat_i(eh as i64));
                // (x) eps_j on the E side mixes components.
                for b in 0..e.dim {
                    let fpart = eps_f[b][i].as_ref().unwrap();
                    if fpart.is_zero() {
                        continue;
                    }
                    for a in 0..e.dim {
                        let amp = projectors[j][(a, b)].clone() * coeff.clone();
                        if amp.is_zero() {
                            continue;
                        }
                        out[a] = &out[a] + &fpart.scale(&amp);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Action of a group element on a Delta(E) vector.
pub fn w_on_delta(g: &ReflectionGroup, e_idx: usize, w: usize, v: &DeltaVec) -> DeltaVec {
    let e = &g.irreps[e_idx];
    let mut out = delta_zero(g, e_idx);
    for (b, f) in v.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let wf = g.act_on_poly(w, f);
        for a in 0..e.dim {
            let c = e.mats[w][(a, b)].clone();
            if c.is_zero() {
                continue;
            }
            out[a] = &out[a] + &wf.scale(&c);
        }
    }
    out
}

/// Action of an arbitrary PBW element on a Delta(E) vector.
pub fn element_on_delta(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    elt: &AlgebraElement,
    v: &DeltaVec,
) -> Result<DeltaVec, Error> {
    let mut out = delta_zero(g, e_idx);
    for ((a, w, b), c) in elt.terms() {
        let mut cur = v.clone();
        for (i, &m) in b.iter().enumerate() {
            for _ in 0..m {
                cur = xi_on_delta(g, p, e_idx, i, &cur)?;
            }
        }
        cur = w_on_delta(g, e_idx, *w, &cur);
        let xmono = Poly::monomial(a.clone(), c.clone());
        for (comp, f) in cur.into_iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            out[comp] = &out[comp] + &(&f * &xmono);
        }
    }
    Ok(out)
}

/// Matrix of xi acting from the degree-n layer of Delta(E) to the degree
/// n-1 layer.  Rows and columns run over (monomial, E-basis) pairs with the
/// monomial index major.
pub fn delta_action_matrix(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    xi: usize,
    n: u32,
) -> Result<Mat<Cyc>, Error> {
    let dim_e = g.irreps[e_idx].dim;
    let cols_mono = monomials_of_degree(g.dim, n);
    let rows_mono = if n == 0 { Vec::new() } else { monomials_of_degree(g.dim, n - 1) };
    let mut out = Mat::zeros(rows_mono.len() * dim_e, cols_mono.len() * dim_e);
    for (mc, mono) in cols_mono.iter().enumerate() {
        for b in 0..dim_e {
            let mut v = delta_zero(g, e_idx);
            v[b] = Poly::monomial(mono.clone(), Cyc::one());
            let img = xi_on_delta(g, p, e_idx, xi, &v)?;
            for (a, f) in img.iter().enumerate() {
                for (exp, c) in f.terms() {
                    let mr = rows_mono
                        .iter()
                        .position(|m| m == exp)
                        .expect("xi image left the expected layer");
                    out[(mr * dim_e + a, mc * dim_e + b)] = c.clone();
                }
            }
        }
    }
    Ok(out)
}

/// Seeded spot check that the polynomial representation separates a sample
/// of nonzero PBW elements: every sampled element must move some monomial
/// of degree <= 4 to a nonzero polynomial.
pub fn faithfulness_probe(
    g: &ReflectionGroup,
    p: &CherednikParams,
    trials: usize,
    seed: u64,
) -> Result<bool, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.dim;
    for _ in 0..trials {
        let mut elt = AlgebraElement::zero(n);
        let nterms = rng.gen_range(1..=3);
        for _ in 0..nterms {
            let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let b: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let w = rng.gen_range(0..g.order());
            let c = Cyc::from_int(rng.gen_range(1..=5));
            let term = AlgebraElement::from_x_poly(&Poly::monomial(a, c))
                .mul(&AlgebraElement::group_elem(n, w), g, p)
                .mul(
                    &b.iter().enumerate().fold(AlgebraElement::one(n), |acc, (i, &m)| {
                        let mut cur = acc;
                        for _ in 0..m {
                            cur = cur.mul(&AlgebraElement::xi_var(n, i), g, p);
                        }
                        cur
                    }),
                    g,
                    p,
                );
            elt = elt.add(&term);
        }
        if elt.is_zero() {
            continue;
        }
        let mut witnessed = false;
        'outer: for d in 0..=4u32 {
            for mono in monomials_of_degree(n, d) {
                let f = Poly::monomial(mono, Cyc::one());
                let v = vec![f];
                let img = element_on_delta(g, p, 0, &elt, &v)?;
                if img.iter().any(|q| !q.is_zero()) {
                    witnessed = true;
                    break 'outer;
                }
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}
