//! Category O computations: graded characters of standard, costandard and
//! simple modules, contravariant (Gram) ranks, blocks and linkage,
//! decomposition matrices, singular vectors, and growth of graded
//! dimensions.
//!
//! The maximal proper submodule of Delta(E) is detected degreewise: a
//! vector m in degree n is in the radical iff every degree-n product of xi
//! factors kills it, because a proper graded submodule has zero degree-0
//! part.  That turns simple characters into exact rank computations.

use crate::dunkl::delta_action_matrix;
use crate::error::Error;
use crate::group::ReflectionGroup;
use crate::linalg::Mat;
use crate::params::CherednikParams;
use crate::poly::monomials_of_degree;
use crate::scalar::{rat, rat_i, Cyc, Rat};
use num::{One, Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedCharacter {
    pub degrees: Vec<u32>,
    pub irreps: Vec<String>,
    pub mults: Vec<Vec<i64>>,
}

impl GradedCharacter {
    pub fn total_dim(&self, g: &ReflectionGroup, n_idx: usize) -> i64 {
        self.mults[n_idx]
            .iter()
            .zip(g.irreps.iter())
            .map(|(m, e)| m * e.dim as i64)
            .sum()
    }
}

/// chi_{Sym^n}(w) for n = 0..=nmax, for the action matrices given per
/// element; computed from the inverse of det(1 - t w) as a power series.
fn molien_traces(g: &ReflectionGroup, mats: &[Mat<Cyc>], nmax: u32) -> Vec<Vec<Cyc>> {
    let d = g.dim;
    let nmax = nmax as usize;
    mats.iter()
        .map(|m| {
            // det(1 - t m) = sum_k (-1)^k e_k t^k, e_k = sum of principal
            // k x k minors.
            let mut cpoly = vec![Cyc::zero(); d + 1];
            cpoly[0] = Cyc::one();
            for mask in 1u32..(1 << d) {
                let rows: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
                let k = rows.len();
                let sub = Mat::from_fn(k, k, |i, j| m[(rows[i], rows[j])].clone());
                let sign = if k % 2 == 0 { Cyc::one() } else { -Cyc::one() };
                cpoly[k] = cpoly[k].clone() + sign * sub.det();
            }
            // Power series inverse.
            let mut s = vec![Cyc::zero(); nmax + 1];
            s[0] = Cyc::one();
            for n in 1..=nmax {
                let mut acc = Cyc::zero();
                for j in 1..=n.min(d) {
                    acc = acc + cpoly[j].clone() * s[n - j].clone();
                }
                s[n] = -acc;
            }
            s
        })
        .collect()
}

fn character_from_traces(
    g: &ReflectionGroup,
    traces_by_degree: &[Vec<Cyc>],
) -> GradedCharacter {
    let mults = traces_by_degree
        .iter()
        .map(|tr| {
            (0..g.irreps.len())
                .map(|f| {
                    let m = g.multiplicity(f, tr);
                    assert!(m.is_integer() && !m.is_negative(), "non-natural multiplicity");
                    m.to_integer().try_into().expect("multiplicity overflow")
                })
                .collect()
        })
        .collect();
    GradedCharacter {
        degrees: (0..traces_by_degree.len() as u32).collect(),
        irreps: g.irreps.iter().map(|e| e.label.clone()).collect(),
        mults,
    }
}

/// Graded character of Delta(E) = Sym(V*) (x) E up to degree nmax.  The
/// class depends only on W, not on the parameters.
pub fn delta_character(g: &ReflectionGroup, e_idx: usize, nmax: u32) -> GradedCharacter {
    let molien = molien_traces(g, &g.vstar_mats, nmax);
    let by_degree: Vec<Vec<Cyc>> = (0..=nmax as usize)
        .map(|n| {
            (0..g.order())
                .map(|w| molien[w][n].clone() * g.irreps[e_idx].chars[w].clone())
                .collect()
        })
        .collect();
    character_from_traces(g, &by_degree)
}

/// Graded character of nabla(E), read off through the duality: nabla(E) is
/// the graded dual of the standard module with lowest weight E^dual for
/// the algebra built on V* (with the dagger parameters), so its degree-n
/// multiplicity of F equals the multiplicity of F^dual in Sym^n(V) (x)
/// E^dual.  Parameters drop out of the class, which is why none are taken.
pub fn nabla_character(g: &ReflectionGroup, e_idx: usize, nmax: u32) -> GradedCharacter {
    let molien = molien_traces(g, &g.v_mats, nmax);
    let e_dual = g.dual_irrep(e_idx);
    let by_degree: Vec<Vec<Cyc>> = (0..=nmax as usize)
        .map(|n| {
            (0..g.order())
                .map(|w| molien[w][n].clone() * g.irreps[e_dual].chars[w].clone())
                .collect()
        })
        .collect();
    let inner = character_from_traces(g, &by_degree);
    // Dual reading: mult_F nabla(E)_n = mult_{F^dual} of the inner class.
    let mults = inner
        .mults
        .iter()
        .map(|row| {
            (0..g.irreps.len()).map(|f| row[g.dual_irrep(f)]).collect()
        })
        .collect();
    GradedCharacter { degrees: inner.degrees, irreps: inner.irreps, mults }
}

/// Matrix of w on the degree-n layer of Delta(E), in the (monomial major,
/// E-basis minor) layout shared with delta_action_matrix.
pub fn layer_rep_matrix(g: &ReflectionGroup, e_idx: usize, w: usize, n: u32) -> Mat<Cyc> {
    let monos = monomials_of_degree(g.dim, n);
    let e = &g.irreps[e_idx];
    let mut out: Mat<Cyc> = Mat::zeros(monos.len() * e.dim, monos.len() * e.dim);
    for (mc, mono) in monos.iter().enumerate() {
        let img = g.act_on_poly(w, &crate::poly::Poly::monomial(mono.clone(), Cyc::one()));
        for (exp, c) in img.terms() {
            let mr = monos.iter().position(|m| m == exp).expect("degree not preserved");
            for a in 0..e.dim {
                for b in 0..e.dim {
                    let v = c.clone() * e.mats[w][(a, b)].clone();
                    if !v.is_zero() {
                        out[(mr * e.dim + a, mc * e.dim + b)] =
                            out[(mr * e.dim + a, mc * e.dim + b)].clone() + v;
                    }
                }
            }
        }
    }
    out
}

/// Projector onto the F-isotypic component of the degree-n layer of
/// Delta(E).
pub fn layer_isotypic_projector(
    g: &ReflectionGroup,
    e_idx: usize,
    f_idx: usize,
    n: u32,
) -> Mat<Cyc> {
    let dim_layer = monomials_of_degree(g.dim, n).len() * g.irreps[e_idx].dim;
    let mut out: Mat<Cyc> = Mat::zeros(dim_layer, dim_layer);
    let f = &g.irreps[f_idx];
    for w in 0..g.order() {
        let coeff = f.chars[g.inv[w]].clone();
        if coeff.is_zero() {
            continue;
        }
        out = &out + &layer_rep_matrix(g, e_idx, w, n).scale(&coeff);
    }
    let scale = Cyc::from_rat(rat(f.dim as i64, g.order() as i64));
    out.scale(&scale)
}

/// Bottom-up builder for the maps (xi-monomial of degree n): Delta(E)_n ->
/// E obtained by composing single-xi lowering matrices.
struct GramChain<'a> {
    g: &'a ReflectionGroup,
    p: &'a CherednikParams,
    e_idx: usize,
    degree: u32,
    /// Map keyed by the xi-monomial, valued at the composite matrix.
    maps: HashMap<Vec<u32>, Mat<Cyc>>,
}

impl<'a> GramChain<'a> {
    fn new(g: &'a ReflectionGroup, p: &'a CherednikParams, e_idx: usize) -> Self {
        let dim_e = g.irreps[e_idx].dim;
        let mut maps = HashMap::new();
        maps.insert(vec![0u32; g.dim], Mat::identity(dim_e));
        GramChain { g, p, e_idx, degree: 0, maps }
    }

    /// Advance from degree d to d+1.
    fn step(&mut self) -> Result<(), Error> {
        let next = self.degree + 1;
        let lowering: Vec<Mat<Cyc>> = (0..self.g.dim)
            .map(|j| delta_action_matrix(self.g, self.p, self.e_idx, j, next))
            .collect::<Result<_, _>>()?;
        let mut maps = HashMap::new();
        for mu in monomials_of_degree(self.g.dim, next) {
            let j = mu.iter().position(|&e| e > 0).unwrap();
            let mut prev = mu.clone();
            prev[j] -= 1;
            let tail = &self.maps[&prev];
            maps.insert(mu, tail * &lowering[j]);
        }
        self.maps = maps;
        self.degree = next;
        Ok(())
    }

    /// The full pairing matrix G_n: Delta(E)_n -> (monomials of degree n)
    /// (x) E, rows stacked in monomial order.
    fn gram(&self) -> Mat<Cyc> {
        let monos = monomials_of_degree(self.g.dim, self.degree);
        let blocks: Vec<Mat<Cyc>> = monos.iter().map(|mu| self.maps[mu].clone()).collect();
        Mat::vstack_all(&blocks)
    }
}

/// Total and per-irrep ranks of the contravariant pairing on Delta(E)_n.
/// The per-irrep entry is the multiplicity of F in L(E)_n.
pub fn shapovalov_rank(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    n: u32,
) -> Result<(usize, Vec<usize>), Error> {
    let mut chain = GramChain::new(g, p, e_idx);
    for _ in 0..n {
        chain.step()?;
    }
    gram_ranks(g, e_idx, n, &chain.gram())
}

fn gram_ranks(
    g: &ReflectionGroup,
    e_idx: usize,
    n: u32,
    gram: &Mat<Cyc>,
) -> Result<(usize, Vec<usize>), Error> {
    let total = gram.rank();
    let mut per = Vec::with_capacity(g.irreps.len());
    let mut check = 0usize;
    for f_idx in 0..g.irreps.len() {
        let pf = layer_isotypic_projector(g, e_idx, f_idx, n);
        let r = (gram * &pf).rank();
        let dim_f = g.irreps[f_idx].dim;
        assert_eq!(r % dim_f, 0, "isotypic rank not divisible by dim F");
        per.push(r / dim_f);
        check += r;
    }
    assert_eq!(check, total, "isotypic ranks do not add up");
    Ok((total, per))
}

/// Graded character of the simple quotient L(E) up to degree nmax, by
/// exact Gram ranks per isotype.
pub fn simple_character(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    nmax: u32,
) -> Result<GradedCharacter, Error> {
    let mut chain = GramChain::new(g, p, e_idx);
    let mut mults: Vec<Vec<i64>> = Vec::with_capacity(nmax as usize + 1);
    for n in 0..=nmax {
        if n > 0 {
            chain.step()?;
        }
        let (_, per) = gram_ranks(g, e_idx, n, &chain.gram())?;
        mults.push(per.into_iter().map(|m| m as i64).collect());
    }
    Ok(GradedCharacter {
        degrees: (0..=nmax).collect(),
        irreps: g.irreps.iter().map(|e| e.label.clone()).collect(),
        mults,
    })
}

/// Singular vectors: the degree-n vectors of Delta(E) killed by every xi,
/// decomposed by W-isotype.  Returns (F index, basis columns) pairs for
/// the isotypes with nonzero kernel.  Every reported F satisfies
/// n = c_E - c_F; that law is asserted here.
pub fn singular_vectors(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    n: u32,
) -> Result<Vec<(usize, Mat<Cyc>)>, Error> {
    assert!(n >= 1);
    let stacked = Mat::vstack_all(
        &(0..g.dim)
            .map(|j| delta_action_matrix(g, p, e_idx, j, n))
            .collect::<Result<Vec<_>, _>>()?,
    );
    let ker = stacked.kernel();
    if ker.ncols() == 0 {
        return Ok(Vec::new());
    }
    let c = p.c_all(g)?;
    let mut out = Vec::new();
    for f_idx in 0..g.irreps.len() {
        let pf = layer_isotypic_projector(g, e_idx, f_idx, n);
        let proj = &pf * &ker;
        let basis = proj.column_space();
        if basis.ncols() == 0 {
            continue;
        }
        let diff = c[e_idx].clone() - c[f_idx].clone();
        assert_eq!(
            diff,
            rat_i(n as i64),
            "singular vector degree law violated for {} in Delta({})",
            g.irreps[f_idx].label,
            g.irreps[e_idx].label
        );
        out.push((f_idx, basis));
    }
    Ok(out)
}

/// Blocks: transitive closure of the relation c_E - c_F in Z.
pub fn blocks(g: &ReflectionGroup, p: &CherednikParams) -> Result<Vec<Vec<usize>>, Error> {
    let c = p.c_all(g)?;
    let n = c.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (c[i].clone() - c[j].clone()).is_integer() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut root_of: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_of.get(&r) {
            Some(&b) => out[b].push(i),
            None => {
                root_of.insert(r, out.len());
                out.push(vec![i]);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionMatrix {
    /// Irrep indices of the block in ascending index order (rows = standards
    /// Delta(F), columns = simples L(E), same order).
    pub block: Vec<usize>,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    pub certified: bool,
    pub n_used: u32,
}

/// The linkage spread of a block: max over linked pairs of |c_E - c_F|.
fn block_spread(c: &[Rat], block: &[usize]) -> u32 {
    let mut spread = rat_i(0);
    for &i in block {
        for &j in block {
            let d = c[i].clone() - c[j].clone();
            if d > spread {
                spread = d;
            }
        }
    }
    assert!(spread.is_integer());
    let s: i64 = spread.to_integer().try_into().unwrap();
    s as u32
}

/// Decomposition matrix of one block by the unitriangular graded-character
/// solve.  N defaults to the block's linkage spread + 4.  The result is
/// certified when N is at least spread + 2 and a boundary scan at the top
/// two degrees finds no unexplained singular vectors; if uncertified and
/// not allowed, the error carries the recommended N.
pub fn decomposition_matrix(
    g: &ReflectionGroup,
    p: &CherednikParams,
    block: &[usize],
    n: Option<u32>,
    allow_uncertified: bool,
) -> Result<DecompositionMatrix, Error> {
    let c = p.c_all(g)?;
    let spread = block_spread(&c, block);
    let n_used = n.unwrap_or(spread + 4);
    let recommended = spread + 4;

    let mut certified = n_used >= spread + 2;
    if certified {
        // Boundary scan: any singular vector in the top two degrees would
        // witness a constituent not yet resolved at this truncation.
        for &f in block {
            for nn in [n_used.saturating_sub(1), n_used] {
                if nn >= 1 && nn > spread && !singular_vectors(g, p, f, nn)?.is_empty() {
                    certified = false;
                }
            }
        }
    }
    if !certified && !allow_uncertified {
        return Err(Error::Uncertified(recommended as usize));
    }

    let mut members: Vec<usize> = block.to_vec();
    members.sort_unstable();
    // Simple characters, once per member.
    let mut lchar: HashMap<usize, GradedCharacter> = HashMap::new();
    for &e in &members {
        lchar.insert(e, simple_character(g, p, e, n_used)?);
    }
    // Process simples by decreasing c.
    let mut order = members.clone();
    order.sort_by(|&a, &b| c[b].cmp(&c[a]));

    let mut entries = vec![vec![0i64; members.len()]; members.len()];
    for (fi, &f) in members.iter().enumerate() {
        let mut residual = delta_character(g, f, n_used).mults;
        for &e in &order {
            let shift = c[f].clone() - c[e].clone();
            assert!(shift.is_integer());
            let s: i64 = shift.to_integer().try_into().unwrap();
            if s < 0 || s > n_used as i64 {
                continue;
            }
            let d = residual[s as usize][e];
            assert!(d >= 0, "negative residual multiplicity");
            if f == e {
                assert_eq!(d, 1, "diagonal entry must be 1");
            }
            let ei = members.iter().position(|&x| x == e).unwrap();
            entries[fi][ei] = d;
            if d != 0 {
                let le = &lchar[&e];
                for nn in s as usize..=n_used as usize {
                    for t in 0..residual[nn].len() {
                        residual[nn][t] -= d * le.mults[nn - s as usize][t];
                    }
                }
            }
        }
        for row in &residual {
            assert!(
                row.iter().all(|&m| m == 0),
                "graded character additivity failed in block solve"
            );
        }
    }
    Ok(DecompositionMatrix {
        labels: members.iter().map(|&e| g.irreps[e].label.clone()).collect(),
        block: members,
        entries,
        certified,
        n_used,
    })
}

/// Growth of the total graded dimension: returns (d, certified) where the
/// sequence grows like i^{d-1} (d = 0 for eventually zero).  Certified
/// when the minimal stabilizing difference order is constant over the
/// trailing ceil(N/3) degrees.
pub fn ch_variety_dim(g: &ReflectionGroup, ch: &GradedCharacter) -> (usize, bool) {
    let n = ch.degrees.len();
    let totals: Vec<i64> = (0..n).map(|i| ch.total_dim(g, i)).collect();
    let window = n.div_ceil(3).max(2);
    if n < window + 1 {
        return (0, false);
    }
    let tail_zero = totals[n - window..].iter().all(|&t| t == 0);
    if tail_zero {
        return (0, true);
    }
    let mut seq = totals;
    for j in 0..n {
        let tail = &seq[seq.len().saturating_sub(window)..];
        if tail.len() >= window && tail.windows(2).all(|w| w[0] == w[1]) {
            return (j + 1, true);
        }
        if seq.len() < 2 {
            break;
        }
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    (0, false)
}

/// K_0-level count underlying the endomorphism-dimension identity: the
/// generic ranks of Delta(E) and nabla(E) over the regular locus are both
/// dim E, so the sum of their products must be |W|.
pub fn endomorphism_count_check(g: &ReflectionGroup) -> bool {
    let total: usize = g.irreps.iter().map(|e| e.dim * e.dim).sum();
    total == g.order()
}
