//! Finite Hecke algebra data: local eigenvalue sets, type-A Specht
//! modules in seminormal form as an independent oracle, and the
//! c-function integrality readout.
//!
//! The oracle is built from the classical Hoefsmit matrices M_i(q) with
//! eigenvalues {q, -1}; the monodromy normal form wants {1, -q} with
//! T = 1 on the trivial partition, and the unique affine match is
//! T_i(lambda) = -M_i(lambda') on the conjugate shape.  The rescaling
//! preserves braid relations because defining braid words have equal
//! length on both sides.

use crate::error::Error;
use crate::group::ReflectionGroup;
use crate::kz::{hecke_roots, monodromy_character, MonodromyRep};
use crate::linalg::Mat;
use crate::numeric::{frobenius, Cplx, Real};
use crate::params::CherednikParams;
use crate::scalar::Rat;
use num::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct HeckeParams<R: Real> {
    /// Eigenvalue multiset per hyperplane orbit; entry 0 is the root 1.
    pub orbit_roots: Vec<Vec<Cplx<R>>>,
}

/// Local monodromy eigenvalue sets, one per orbit.
pub fn hecke_parameters<R: Real>(g: &ReflectionGroup, p: &CherednikParams) -> HeckeParams<R> {
    let n_orbits = g.hyperplanes.iter().map(|h| h.orbit).max().unwrap() + 1;
    let orbit_roots = (0..n_orbits)
        .map(|o| {
            let wall = g.hyperplanes.iter().position(|h| h.orbit == o).unwrap();
            let mut roots = vec![Cplx::one()];
            roots.extend(hecke_roots::<R>(g, p, wall));
            roots
        })
        .collect();
    HeckeParams { orbit_roots }
}

/// Conjugate partition.
pub fn conjugate_partition(shape: &[usize]) -> Vec<usize> {
    if shape.is_empty() {
        return Vec::new();
    }
    (0..shape[0])
        .map(|c| shape.iter().filter(|&&r| r > c).count())
        .collect()
}

/// Standard Young tableaux of a shape, as value -> (row, col) position
/// lists; deterministic order by peeling the largest entry from corners
/// top to bottom.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n: usize = shape.iter().sum();
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for r in 0..shape.len() {
        let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r] > shape[r + 1]);
        if !removable {
            continue;
        }
        let mut smaller = shape.to_vec();
        smaller[r] -= 1;
        if smaller[r] == 0 && r + 1 == smaller.len() {
            smaller.pop();
        }
        for mut t in standard_tableaux(&smaller) {
            t.push((r, shape[r] - 1));
            out.push(t);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SpechtOracle<R: Real> {
    pub lambda: Vec<usize>,
    pub q: Cplx<R>,
    /// Matrices of T_1..T_{n-1}, eigenvalues {1, -q}.
    pub gens: Vec<Mat<Cplx<R>>>,
}

fn cpow<R: Real>(z: Cplx<R>, e: i64) -> Cplx<R> {
    let base = if e < 0 { Cplx::<R>::one() / z } else { z };
    let mut acc = Cplx::<R>::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * base;
    }
    acc
}

/// Hoefsmit seminormal matrices on a shape, relation (M - q)(M + 1) = 0.
fn hoefsmit_matrices<R: Real>(
    shape: &[usize],
    q: Cplx<R>,
) -> Result<Vec<Mat<Cplx<R>>>, Error> {
    let n: usize = shape.iter().sum();
    let tableaux = standard_tableaux(shape);
    let dim = tableaux.len();
    let content = |pos: (usize, usize)| pos.1 as i64 - pos.0 as i64;
    let one = Cplx::<R>::one();
    // a_d = (q - 1)/(1 - q^{-d}), with the q = 1 limit 1/d.
    let weight = |d: i64| -> Result<Cplx<R>, Error> {
        let denom = one - cpow(q, -d);
        if denom.abs().to_f64() < 1e-12 {
            if (q - one).abs().to_f64() < 1e-12 {
                return Ok(Cplx::from_f64(1.0 / d as f64, 0.0));
            }
            return Err(Error::Numerical(format!(
                "degenerate Hecke parameter: q^{d} = 1"
            )));
        }
        Ok((q - one) / denom)
    };
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let mut m: Mat<Cplx<R>> = Mat::zeros(dim, dim);
        for (ti, t) in tableaux.iter().enumerate() {
            let (p1, p2) = (t[i], t[i + 1]);
            if p1.0 == p2.0 {
                m[(ti, ti)] = q;
                continue;
            }
            if p1.1 == p2.1 {
                m[(ti, ti)] = -one;
                continue;
            }
            let d = content(p2) - content(p1);
            if d < 0 {
                continue; // handled from the partner tableau
            }
            let mut swapped = t.clone();
            swapped.swap(i, i + 1);
            let si = tableaux
                .iter()
                .position(|u| *u == swapped)
                .expect("swapped tableau not standard");
            let a_pos = weight(d)?;
            let a_neg = weight(-d)?;
            m[(ti, ti)] = a_pos;
            m[(si, ti)] = a_pos * a_neg + q;
            m[(ti, si)] = one;
            m[(si, si)] = a_neg;
        }
        gens.push(m);
    }
    Ok(gens)
}

/// Specht module matrices with the monodromy normalization {1, -q}.
pub fn specht_matrices<R: Real>(lambda: &[usize], q: Cplx<R>) -> Result<SpechtOracle<R>, Error> {
    let gens = hoefsmit_matrices(&conjugate_partition(lambda), q)?
        .into_iter()
        .map(|m| m.scale(&-Cplx::<R>::one()))
        .collect();
    Ok(SpechtOracle { lambda: lambda.to_vec(), q, gens })
}

/// Worst quadratic and braid relation residuals of an oracle.
pub fn oracle_residuals<R: Real>(oracle: &SpechtOracle<R>) -> (f64, f64) {
    let dim = oracle.gens[0].nrows();
    let ident: Mat<Cplx<R>> = Mat::identity(dim);
    let mut quad = 0.0f64;
    for t in &oracle.gens {
        let r = &(t - &ident) * &(t + &ident.scale(&oracle.q));
        quad = quad.max(frobenius(&r));
    }
    let mut braid = 0.0f64;
    for i in 0..oracle.gens.len() {
        for j in (i + 1)..oracle.gens.len() {
            let (a, b) = (&oracle.gens[i], &oracle.gens[j]);
            let diff = if j == i + 1 {
                &(&(a * b) * a) - &(&(b * a) * b)
            } else {
                &(a * b) - &(b * a)
            };
            braid = braid.max(frobenius(&diff));
        }
    }
    (quad, braid)
}

/// Partition attached to an irrep label of S_n under the fixed
/// bijection: the trivial representation is the one-row shape, where
/// every T_i acts by 1.
pub fn partition_for_irrep(g: &ReflectionGroup, e_idx: usize) -> Option<Vec<usize>> {
    let n = g.braid_gens.len() + 1;
    if !g.name.starts_with('S') {
        return None;
    }
    match g.irreps[e_idx].label.as_str() {
        "triv" => Some(vec![n]),
        "sgn" => Some(vec![1; n]),
        "std" => Some(vec![n - 1, 1]),
        "s22" => Some(vec![2, 2]),
        "s211" => Some(vec![2, 1, 1]),
        _ => None,
    }
}

/// c_E / k_1 for the equal-parameter case; the values must come out as
/// non-negative integers.
pub fn a_plus_a_from_c(g: &ReflectionGroup, p: &CherednikParams) -> Result<Vec<Rat>, Error> {
    let k1 = p.k_at(g, 0, 1);
    if k1.is_zero() {
        return Err(Error::Config("a_E + A_E needs k != 0".into()));
    }
    if g.hyperplanes.iter().any(|h| h.e != 2) {
        return Err(Error::Config("a_E + A_E is defined for real reflection groups".into()));
    }
    for h in 0..g.hyperplanes.len() {
        if p.k_at(g, h, 1) != k1 {
            return Err(Error::Config("a_E + A_E needs equal parameters".into()));
        }
    }
    let c = p.c_all(g)?;
    let mut out = Vec::with_capacity(c.len());
    for (e, ce) in c.iter().enumerate() {
        let v = ce / &k1;
        if !v.is_integer() || v.is_negative() {
            return Err(Error::Numerical(format!(
                "c_E/k_1 = {v} for {} is not a non-negative integer",
                g.irreps[e].label
            )));
        }
        out.push(v);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub pass: bool,
    pub dim_monodromy: usize,
    pub dim_oracle: usize,
    pub max_trace_diff: f64,
}

/// Trace comparison of a monodromy rep against the Specht oracle on a
/// list of generator words.
pub fn compare_with_monodromy<R: Real>(
    rep: &MonodromyRep<R>,
    oracle: &SpechtOracle<R>,
    words: &[Vec<usize>],
    tol: f64,
) -> ComparisonReport {
    let dim_monodromy = rep.gens[0].nrows();
    let dim_oracle = oracle.gens[0].nrows();
    if dim_monodromy != dim_oracle {
        return ComparisonReport { pass: false, dim_monodromy, dim_oracle, max_trace_diff: f64::INFINITY };
    }
    let mono = monodromy_character(rep, words);
    let mut max_trace_diff = 0.0f64;
    for (w, word) in words.iter().enumerate() {
        let mut acc: Mat<Cplx<R>> = Mat::identity(dim_oracle);
        for &i in word {
            acc = &acc * &oracle.gens[i];
        }
        max_trace_diff = max_trace_diff.max((acc.trace() - mono[w]).abs().to_f64());
    }
    ComparisonReport { pass: max_trace_diff < tol, dim_monodromy, dim_oracle, max_trace_diff }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kz::monodromy_rep;
    use crate::numeric::DD;
    use crate::scalar::rat;

    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        match n {
            2 => vec![vec![2], vec![1, 1]],
            3 => vec![vec![3], vec![2, 1], vec![1, 1, 1]],
            4 => vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]],
            _ => unreachable!(),
        }
    }

    #[test]
    fn eigenvalue_sets() {
        // Z/2 at k = 1/2: doubled root {1, 1}.
        let g = ReflectionGroup::cyclic(2).unwrap();
        let p = CherednikParams::new(&g, vec![vec![rat(1, 2)]]).unwrap();
        let hp = hecke_parameters::<DD>(&g, &p);
        for r in &hp.orbit_roots[0] {
            assert!((*r - Cplx::one()).abs().to_f64() < 1e-30);
        }
        // k = 0, e = 3: third roots of unity as a set.
        let g3 = ReflectionGroup::cyclic(3).unwrap();
        let p0 = CherednikParams::zero(&g3);
        let hp0 = hecke_parameters::<DD>(&g3, &p0);
        for j in 0..3i64 {
            let target = Cplx::<DD>::root_of_unity(&rat(j, 3));
            assert!(hp0.orbit_roots[0]
                .iter()
                .any(|r| (*r - target).abs().to_f64() < 1e-30));
        }
        // S3 at k = 1/5: {1, -e^{2 pi i/5}}.
        let s3 = ReflectionGroup::symmetric(3, true).unwrap();
        let p5 = CherednikParams::equal(&s3, rat(1, 5));
        let hp5 = hecke_parameters::<DD>(&s3, &p5);
        assert_eq!(hp5.orbit_roots.len(), 1);
        let minus_q = Cplx::<DD>::root_of_unity(&rat(7, 10));
        assert!((hp5.orbit_roots[0][1] - minus_q).abs().to_f64() < 1e-30);
    }

    #[test]
    fn one_dimensional_shapes() {
        let q = Cplx::<DD>::root_of_unity(&rat(1, 5));
        let top = specht_matrices(&[3], q).unwrap();
        for t in &top.gens {
            assert!((t[(0, 0)] - Cplx::one()).abs().to_f64() < 1e-30);
        }
        let bottom = specht_matrices(&[1, 1, 1], q).unwrap();
        for t in &bottom.gens {
            assert!((t[(0, 0)] + q).abs().to_f64() < 1e-30);
        }
    }

    #[test]
    fn oracle_soundness_and_dimension_count() {
        let q = Cplx::<DD>::root_of_unity(&rat(1, 5));
        for n in 2..=4usize {
            let mut total = 0usize;
            for lambda in all_partitions(n) {
                let oracle = specht_matrices(&lambda, q).unwrap();
                let (quad, braid) = oracle_residuals(&oracle);
                assert!(quad < 1e-10 && braid < 1e-10, "{lambda:?}");
                let d = oracle.gens[0].nrows();
                total += d * d;
            }
            let fact: usize = (1..=n).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn q_one_degenerates_to_group_characters() {
        let q = Cplx::<DD>::one();
        let g = ReflectionGroup::symmetric(3, true).unwrap();
        let std = specht_matrices(&[2, 1], q).unwrap();
        let (quad, braid) = oracle_residuals(&std);
        assert!(quad < 1e-12 && braid < 1e-12);
        // Traces match the reflection representation character:
        // chi(s) = 0, chi(s1 s2) = -1.
        let e_std = g.irrep_by_label("std").unwrap();
        assert_eq!(g.irreps[e_std].dim, std.gens[0].nrows());
        assert!(std.gens[0].trace().abs().to_f64() < 1e-12);
        let prod = &std.gens[0] * &std.gens[1];
        assert!((prod.trace() + Cplx::one()).abs().to_f64() < 1e-12);
    }

    #[test]
    fn degenerate_q_reported() {
        let q = Cplx::<DD>::root_of_unity(&rat(1, 3));
        // (3,1) needs axial distance 3 on the conjugate shape (2,1,1).
        assert!(specht_matrices(&[3, 1], q).is_err());
        // Distances stay below 3 for (2,1).
        assert!(specht_matrices(&[2, 1], q).is_ok());
    }

    #[test]
    fn c_function_integrality() {
        let s3 = ReflectionGroup::symmetric(3, true).unwrap();
        let p = CherednikParams::equal(&s3, rat(1, 1));
        let vals = a_plus_a_from_c(&s3, &p).unwrap();
        assert_eq!(vals, vec![rat(0, 1), rat(3, 1), rat(6, 1)]);
        let z2 = ReflectionGroup::cyclic(2).unwrap();
        let p2 = CherednikParams::new(&z2, vec![vec![rat(1, 2)]]).unwrap();
        assert_eq!(a_plus_a_from_c(&z2, &p2).unwrap(), vec![rat(0, 1), rat(2, 1)]);
        // Unequal parameters refused.
        let d4 = ReflectionGroup::dihedral(4).unwrap();
        let bad = CherednikParams::new(&d4, vec![vec![rat(1, 2)], vec![rat(1, 3)]]).unwrap();
        assert!(a_plus_a_from_c(&d4, &bad).is_err());
        let s4 = ReflectionGroup::symmetric(4, true).unwrap();
        let p4 = CherednikParams::equal(&s4, rat(1, 1));
        for v in a_plus_a_from_c(&s4, &p4).unwrap() {
            assert!(v.is_integer() && !v.is_negative());
        }
    }

    #[test]
    fn monodromy_matches_specht() {
        let g = ReflectionGroup::symmetric(3, true).unwrap();
        let p = CherednikParams::equal(&g, rat(1, 5));
        let q = Cplx::<DD>::root_of_unity(&rat(1, 5));
        let words: Vec<Vec<usize>> =
            vec![vec![], vec![0], vec![1], vec![0, 1], vec![0, 1, 0]];
        let e_std = g.irrep_by_label("std").unwrap();
        let rep = monodromy_rep::<DD>(&g, &p, e_std, 1e-10).unwrap();
        let oracle = specht_matrices(&[2, 1], q).unwrap();
        let report = compare_with_monodromy(&rep, &oracle, &words, 1e-5);
        assert!(report.pass, "max diff {}", report.max_trace_diff);
        // Negative control: wrong shape has the wrong dimension.
        let wrong = specht_matrices(&[3], q).unwrap();
        let bad = compare_with_monodromy(&rep, &wrong, &words, 1e-5);
        assert!(!bad.pass);
        assert_eq!((bad.dim_monodromy, bad.dim_oracle), (2, 1));
    }
}
