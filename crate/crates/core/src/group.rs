//! Finite complex reflection groups in their reflection representations.
//!
//! Supported families: cyclic groups Z/e acting on C, dihedral groups I2(m)
//! acting on R^2 (complexified), and symmetric groups S_n (n <= 4) in either
//! the permutation representation on C^n or the (n-1)-dimensional reflection
//! representation.  All matrices are exact cyclotomic.  Each group carries
//! its full multiplication table, reflection hyperplanes with marked
//! stabilizers, hyperplane orbits, and a complete list of irreducible
//! representations.

use crate::error::Error;
use crate::linalg::Mat;
use crate::poly::Poly;
use crate::scalar::{rat, rat_i, Cyc, Rat};
use num::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Z/e, e >= 2.
    Cyclic(usize),
    /// I2(m), m >= 3.
    Dihedral(usize),
    /// S_n; the flag selects the (n-1)-dimensional reflection representation
    /// instead of the permutation representation on C^n.
    Symmetric(usize, bool),
}

/// A reflection hyperplane H together with the data the commutation
/// relations use: a defining linear form alpha, a coweight v with
/// alpha(v) = e_H, and the pointwise stabilizer W_H listed as powers of its
/// distinguished generator (the reflection with determinant zeta_{e_H}).
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub alpha: Vec<Cyc>,
    pub coweight: Vec<Cyc>,
    pub e: usize,
    pub orbit: usize,
    /// stab[j] is s^j for the distinguished generator s; stab[0] = identity.
    pub stab: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: String,
    pub dim: usize,
    pub mats: Vec<Mat<Cyc>>,
    pub chars: Vec<Cyc>,
}

#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    pub name: String,
    pub family: Family,
    pub dim: usize,
    pub elem_names: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    /// Action on V; columns are images of basis vectors.
    pub v_mats: Vec<Mat<Cyc>>,
    /// Action on the coordinate functions x_j of V*: w.x_j has coefficient
    /// vector equal to column j of this matrix.
    pub vstar_mats: Vec<Mat<Cyc>>,
    pub det: Vec<Cyc>,
    pub hyperplanes: Vec<Hyperplane>,
    /// Hyperplane indices grouped by W-orbit; orbit i is labeled "Hi".
    pub orbits: Vec<Vec<usize>>,
    /// hyperplane_perm[w][h] is the index of w(H_h).
    pub hyperplane_perm: Vec<Vec<usize>>,
    pub irreps: Vec<Irrep>,
    /// Element indices of the generating reflections used for braid paths.
    pub braid_gens: Vec<usize>,
}

impl ReflectionGroup {
    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn cyclic(e: usize) -> Result<Self, Error> {
        if !(2..=12).contains(&e) {
            return Err(Error::Config(format!("cyclic order {e} out of range 2..=12")));
        }
        let n = e as u32;
        let mult: Vec<Vec<usize>> = (0..e).map(|a| (0..e).map(|b| (a + b) % e).collect()).collect();
        let v_mats: Vec<Mat<Cyc>> = (0..e)
            .map(|a| Mat::from_fn(1, 1, |_, _| Cyc::zeta_pow(n, a as i64)))
            .collect();
        let elem_names = (0..e)
            .map(|a| match a {
                0 => "1".to_string(),
                1 => "s".to_string(),
                _ => format!("s^{a}"),
            })
            .collect();
        let hyperplanes = vec![Hyperplane {
            alpha: vec![Cyc::one()],
            coweight: vec![Cyc::from_int(e as i64)],
            e,
            orbit: 0,
            stab: Vec::new(),
        }];
        let irreps = (0..e)
            .map(|m| {
                let label = if e == 2 && m == 1 {
                    "sgn".to_string()
                } else {
                    match m {
                        0 => "triv".to_string(),
                        1 => "det".to_string(),
                        _ => format!("det^{m}"),
                    }
                };
                let mats: Vec<Mat<Cyc>> = (0..e)
                    .map(|a| Mat::from_fn(1, 1, |_, _| Cyc::zeta_pow(n, (a * m) as i64)))
                    .collect();
                build_irrep(label, mats)
            })
            .collect();
        Ok(Self::finish(
            format!("Z/{e}"),
            Family::Cyclic(e),
            1,
            elem_names,
            mult,
            v_mats,
            hyperplanes,
            irreps,
            vec![1],
        ))
    }

    pub fn dihedral(m: usize) -> Result<Self, Error> {
        if !(3..=8).contains(&m) {
            return Err(Error::Config(format!("dihedral order {m} out of range 3..=8")));
        }
        let n = 2 * m;
        // Element t is the rotation r^t, element m+t the reflection fixing
        // the line at angle t*pi/m.
        let idx = |is_refl: bool, t: usize| if is_refl { m + t % m } else { t % m };
        let mut mult = vec![vec![0usize; n]; n];
        for a in 0..m {
            for b in 0..m {
                mult[a][b] = idx(false, a + b);
                mult[a][m + b] = idx(true, a + b);
                mult[m + a][b] = idx(true, a + m - b % m);
                mult[m + a][m + b] = idx(false, a + m - b % m);
            }
        }
        let cs = |t: i64| (cos_frac(t, m as u32), sin_frac(t, m as u32));
        let v_mats: Vec<Mat<Cyc>> = (0..n)
            .map(|g| {
                if g < m {
                    let (c, s) = cs(g as i64);
                    Mat::from_rows(vec![vec![c.clone(), -s.clone()], vec![s, c]])
                } else {
                    let (c, s) = cs((g - m) as i64);
                    Mat::from_rows(vec![vec![c.clone(), s.clone()], vec![s, -c]])
                }
            })
            .collect();
        let elem_names = (0..n)
            .map(|g| match g {
                0 => "1".to_string(),
                1 => "r".to_string(),
                g if g < m => format!("r^{g}"),
                g => format!("s{}", g - m),
            })
            .collect();
        // Wall of s_t is the line at angle t*pi/m; half angles live in the
        // 2m-th cyclotomic field.
        let hyperplanes = (0..m)
            .map(|t| {
                let c = cos_frac(t as i64, 2 * m as u32);
                let s = sin_frac(t as i64, 2 * m as u32);
                let two = Cyc::from_int(2);
                Hyperplane {
                    alpha: vec![-(s.clone() * two.clone()), c.clone() * two],
                    coweight: vec![-s, c],
                    e: 2,
                    orbit: 0,
                    stab: Vec::new(),
                }
            })
            .collect();
        let mut irreps: Vec<Irrep> = Vec::new();
        let lin = |f: &dyn Fn(usize) -> i64| -> Vec<Mat<Cyc>> {
            (0..n).map(|g| Mat::from_fn(1, 1, |_, _| Cyc::from_int(f(g)))).collect()
        };
        irreps.push(build_irrep("triv".into(), lin(&|_| 1)));
        irreps.push(build_irrep("sgn".into(), lin(&|g| if g < m { 1 } else { -1 })));
        if m % 2 == 0 {
            let alt = |g: usize| if (g % m) % 2 == 0 { 1 } else { -1 };
            irreps.push(build_irrep(
                "sgn0".into(),
                lin(&|g| if g < m { alt(g) } else { -alt(g) }),
            ));
            irreps.push(build_irrep("sgn1".into(), lin(&alt)));
        }
        let lmax = if m % 2 == 0 { m / 2 - 1 } else { (m - 1) / 2 };
        for l in 1..=lmax {
            let mats: Vec<Mat<Cyc>> = (0..n)
                .map(|g| {
                    let t = (g % m * l) as i64;
                    let c = cos_frac(t, m as u32);
                    let s = sin_frac(t, m as u32);
                    if g < m {
                        Mat::from_rows(vec![vec![c.clone(), -s.clone()], vec![s, c]])
                    } else {
                        Mat::from_rows(vec![vec![c.clone(), s.clone()], vec![s, -c]])
                    }
                })
                .collect();
            irreps.push(build_irrep(format!("rho{l}"), mats));
        }
        Ok(Self::finish(
            format!("I2({m})"),
            Family::Dihedral(m),
            2,
            elem_names,
            mult,
            v_mats,
            hyperplanes,
            irreps,
            vec![m, m + 1],
        ))
    }

    pub fn symmetric(nn: usize, reflection_rep: bool) -> Result<Self, Error> {
        if !(2..=4).contains(&nn) {
            return Err(Error::Config(format!("symmetric degree {nn} out of range 2..=4")));
        }
        let perms = all_perms(nn);
        let n = perms.len();
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut mult = vec![vec![0usize; n]; n];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..nn).map(|i| p[q[i]]).collect();
                mult[a][b] = index_of(&comp);
            }
        }
        let dim = if reflection_rep { nn - 1 } else { nn };
        let v_mats: Vec<Mat<Cyc>> = perms
            .iter()
            .map(|p| {
                if reflection_rep {
                    // Basis f_i = e_i - e_{i+1}; column j is w(f_j) in that basis.
                    Mat::from_fn(dim, dim, |i, j| {
                        let coeffs = diff_in_f_basis(nn, p[j], p[j + 1]);
                        Cyc::from_rat(coeffs[i].clone())
                    })
                } else {
                    Mat::from_fn(dim, dim, |i, j| {
                        if p[j] == i { Cyc::one() } else { Cyc::zero() }
                    })
                }
            })
            .collect();
        let elem_names = perms.iter().map(|p| cycle_notation(p)).collect();
        let mut hyperplanes = Vec::new();
        for i in 0..nn {
            for j in (i + 1)..nn {
                let (alpha, coweight) = if reflection_rep {
                    // alpha = X_i - X_j evaluated on the f-basis; coweight
                    // e_i - e_j = f_i + ... + f_{j-1}.
                    let a: Vec<Cyc> = (0..dim)
                        .map(|k| {
                            let v = (i == k) as i64 - (i == k + 1) as i64 - (j == k) as i64
                                + (j == k + 1) as i64;
                            Cyc::from_int(v)
                        })
                        .collect();
                    let w: Vec<Cyc> = (0..dim)
                        .map(|k| if i <= k && k < j { Cyc::one() } else { Cyc::zero() })
                        .collect();
                    (a, w)
                } else {
                    let a: Vec<Cyc> = (0..dim)
                        .map(|k| Cyc::from_int((k == i) as i64 - (k == j) as i64))
                        .collect();
                    (a.clone(), a)
                };
                hyperplanes.push(Hyperplane { alpha, coweight, e: 2, orbit: 0, stab: Vec::new() });
            }
        }
        let irreps = symmetric_irreps(nn, &perms, &mult);
        let braid_gens: Vec<usize> = (0..nn - 1)
            .map(|i| {
                let mut p: Vec<usize> = (0..nn).collect();
                p.swap(i, i + 1);
                index_of(&p)
            })
            .collect();
        Ok(Self::finish(
            format!("S{nn}"),
            Family::Symmetric(nn, reflection_rep),
            dim,
            elem_names,
            mult,
            v_mats,
            hyperplanes,
            irreps,
            braid_gens,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        name: String,
        family: Family,
        dim: usize,
        elem_names: Vec<String>,
        mult: Vec<Vec<usize>>,
        v_mats: Vec<Mat<Cyc>>,
        mut hyperplanes: Vec<Hyperplane>,
        irreps: Vec<Irrep>,
        braid_gens: Vec<usize>,
    ) -> Self {
        let n = mult.len();
        let mut inv = vec![0usize; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| mult[g][h] == 0).unwrap();
        }
        let vstar_mats: Vec<Mat<Cyc>> = (0..n).map(|g| v_mats[inv[g]].transpose()).collect();
        let det: Vec<Cyc> = v_mats.iter().map(|m| m.det()).collect();

        // Pointwise stabilizers, ordered as powers of the reflection whose
        // determinant is exactly zeta_e.
        for h in hyperplanes.iter_mut() {
            let ker = Mat::from_rows(vec![h.alpha.clone()]).kernel();
            let basis: Vec<Vec<Cyc>> = (0..ker.ncols()).map(|j| ker.col(j)).collect();
            let fixers: Vec<usize> = (0..n)
                .filter(|&g| basis.iter().all(|v| v_mats[g].mul_vec(v) == *v))
                .collect();
            assert_eq!(fixers.len(), h.e);
            let zeta = Cyc::zeta_pow(h.e as u32, 1);
            let s = *fixers.iter().find(|&&g| det[g] == zeta).unwrap();
            let mut stab = vec![0usize];
            let mut cur = s;
            while cur != 0 {
                stab.push(cur);
                cur = mult[cur][s];
            }
            assert_eq!(stab.len(), h.e);
            h.stab = stab;
        }

        // How W permutes the arrangement: w(H) has form alpha o w^{-1}.
        let nh = hyperplanes.len();
        let mut hyperplane_perm = vec![vec![0usize; nh]; n];
        for g in 0..n {
            for (hi, h) in hyperplanes.iter().enumerate() {
                let mw = &v_mats[inv[g]];
                let moved: Vec<Cyc> = (0..dim)
                    .map(|j| {
                        let mut acc = Cyc::zero();
                        for i in 0..dim {
                            acc = acc + h.alpha[i].clone() * mw[(i, j)].clone();
                        }
                        acc
                    })
                    .collect();
                let target = hyperplanes
                    .iter()
                    .position(|h2| proportional(&moved, &h2.alpha))
                    .expect("arrangement not W-stable");
                hyperplane_perm[g][hi] = target;
            }
        }

        // Orbits by transitive closure, in order of smallest member.
        let mut orbit_of = vec![usize::MAX; nh];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for h in 0..nh {
            if orbit_of[h] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members: Vec<usize> = (0..n).map(|g| hyperplane_perm[g][h]).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                orbit_of[x] = id;
            }
            orbits.push(members);
        }
        for (h, hp) in hyperplanes.iter_mut().enumerate() {
            hp.orbit = orbit_of[h];
        }

        ReflectionGroup {
            name,
            family,
            dim,
            elem_names,
            mult,
            inv,
            v_mats,
            vstar_mats,
            det,
            hyperplanes,
            orbits,
            hyperplane_perm,
            irreps,
            braid_gens,
        }
    }

    /// Action of w on a polynomial function on V: (w.p)(v) = p(w^{-1} v).
    pub fn act_on_poly(&self, w: usize, p: &Poly<Cyc>) -> Poly<Cyc> {
        let m = &self.vstar_mats[w];
        let images: Vec<Poly<Cyc>> = (0..self.dim).map(|j| Poly::linear(&m.col(j))).collect();
        p.substitute(&images)
    }

    /// The idempotent eps_{H,i} = (1/e) sum_w det(w)^i w over W_H; it
    /// projects a W_H-module onto the isotype of det^{-i} restricted to W_H.
    pub fn eps(&self, h: usize, i: usize) -> GroupAlg {
        let hp = &self.hyperplanes[h];
        let e = hp.e as i64;
        let mut out = GroupAlg::zero(self.order());
        let inv_e = Cyc::from_rat(rat(1, e));
        for &w in &hp.stab {
            let mut d = Cyc::one();
            for _ in 0..i {
                d = d * self.det[w].clone();
            }
            out.c[w] = d * inv_e.clone();
        }
        out
    }

    /// The distinguished reflection generating the pointwise stabilizer of
    /// hyperplane h.
    pub fn wall_reflection(&self, h: usize) -> usize {
        self.hyperplanes[h].stab[1]
    }

    /// Hyperplane fixed by a braid generator.
    pub fn wall_of(&self, g: usize) -> Option<usize> {
        self.hyperplanes.iter().position(|h| h.stab.contains(&g) && g != 0)
    }

    pub fn irrep_by_label(&self, label: &str) -> Option<usize> {
        self.irreps.iter().position(|e| e.label == label)
    }

    /// Defining braid relations as pairs of alternating words in generator
    /// indices: for generators i, j with prod = s_i s_j of order m, the
    /// words (i j i ...) and (j i j ...) of length m agree.  A single
    /// generator yields no relations.
    pub fn braid_relations(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for i in 0..self.braid_gens.len() {
            for j in (i + 1)..self.braid_gens.len() {
                let prod = self.mult[self.braid_gens[i]][self.braid_gens[j]];
                let mut m = 1;
                let mut cur = prod;
                while cur != 0 {
                    cur = self.mult[cur][prod];
                    m += 1;
                }
                let word = |a: usize, b: usize| (0..m).map(|t| if t % 2 == 0 { a } else { b }).collect();
                out.push((word(i, j), word(j, i)));
            }
        }
        out
    }

    /// Index of the dual representation, identified by its character.
    pub fn dual_irrep(&self, e: usize) -> usize {
        let chars = &self.irreps[e].chars;
        self.irreps
            .iter()
            .position(|f| (0..self.order()).all(|g| f.chars[g] == chars[self.inv[g]]))
            .expect("dual irrep missing")
    }

    /// Multiplicity of irrep e in a character given by element traces.
    pub fn multiplicity(&self, e: usize, traces: &[Cyc]) -> Rat {
        let mut acc = Cyc::zero();
        for g in 0..self.order() {
            acc = acc + self.irreps[e].chars[self.inv[g]].clone() * traces[g].clone();
        }
        let m = acc * Cyc::from_rat(rat(1, self.order() as i64));
        m.as_rational().expect("multiplicity not rational")
    }
}

fn build_irrep(label: String, mats: Vec<Mat<Cyc>>) -> Irrep {
    let dim = mats[0].nrows();
    let chars = mats.iter().map(|m| m.trace()).collect();
    Irrep { label, dim, mats, chars }
}

/// cos(2 pi t / den) as an exact cyclotomic number.
fn cos_frac(t: i64, den: u32) -> Cyc {
    let half = Cyc::from_rat(rat(1, 2));
    (Cyc::zeta_pow(den, t) + Cyc::zeta_pow(den, -t)) * half
}

/// sin(2 pi t / den) as an exact cyclotomic number.
fn sin_frac(t: i64, den: u32) -> Cyc {
    let mhalf_i = Cyc::zeta_pow(4, 3) * Cyc::from_rat(rat(1, 2));
    (Cyc::zeta_pow(den, t) - Cyc::zeta_pow(den, -t)) * mhalf_i
}

fn proportional(a: &[Cyc], b: &[Cyc]) -> bool {
    let Some(i) = a.iter().position(|c| !c.is_zero()) else {
        return b.iter().all(|c| c.is_zero());
    };
    if b[i].is_zero() {
        return false;
    }
    for j in 0..a.len() {
        if a[j].clone() * b[i].clone() != b[j].clone() * a[i].clone() {
            return false;
        }
    }
    true
}

/// e_a - e_b expressed in the basis f_k = e_k - e_{k+1} of the reflection
/// representation of S_n.
fn diff_in_f_basis(n: usize, a: usize, b: usize) -> Vec<Rat> {
    let mut out = vec![rat_i(0); n - 1];
    if a < b {
        for k in a..b {
            out[k] = rat_i(1);
        }
    } else {
        for k in b..a {
            out[k] = rat_i(-1);
        }
    }
    out
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(next) = next_perm(out.last().unwrap()) {
        out.push(next);
    }
    out
}

fn next_perm(p: &[usize]) -> Option<Vec<usize>> {
    let mut q = p.to_vec();
    let n = q.len();
    let i = (1..n).rev().find(|&i| q[i - 1] < q[i])?;
    let j = (i..n).rev().find(|&j| q[j] > q[i - 1]).unwrap();
    q.swap(i - 1, j);
    q[i..].reverse();
    Some(q)
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut cur = p[start];
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            cur = p[cur];
        }
        out.push('(');
        out.push_str(
            &cyc.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

// Partitions of n with parts descending, listed with larger first parts
// first: [n], [n-1,1], ..., [1,...,1].
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, maxpart: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=maxpart.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

type Tableau = Vec<Vec<usize>>;

fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut filled = vec![0usize; shape.len()];
    let mut t: Tableau = shape.iter().map(|_| Vec::new()).collect();
    fn rec(
        k: usize,
        n: usize,
        shape: &[usize],
        filled: &mut Vec<usize>,
        t: &mut Tableau,
        out: &mut Vec<Tableau>,
    ) {
        if k > n {
            out.push(t.clone());
            return;
        }
        for r in 0..shape.len() {
            if filled[r] < shape[r] && (r == 0 || filled[r] < filled[r - 1]) {
                t[r].push(k);
                filled[r] += 1;
                rec(k + 1, n, shape, filled, t, out);
                filled[r] -= 1;
                t[r].pop();
            }
        }
    }
    rec(1, n, shape, &mut filled, &mut t, &mut out);
    out
}

fn entry_position(t: &Tableau, k: usize) -> (usize, usize) {
    for (r, row) in t.iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == k) {
            return (r, c);
        }
    }
    unreachable!()
}

/// Seminormal-form matrix of the adjacent transposition (i, i+1) on the
/// standard tableaux of one shape.  Entries are rational.
fn seminormal_gen(tabs: &[Tableau], i: usize) -> Mat<Cyc> {
    let d = tabs.len();
    let mut m = Mat::zeros(d, d);
    for (a, t) in tabs.iter().enumerate() {
        let (r1, c1) = entry_position(t, i);
        let (r2, c2) = entry_position(t, i + 1);
        if r1 == r2 {
            m[(a, a)] = Cyc::one();
        } else if c1 == c2 {
            m[(a, a)] = -Cyc::one();
        } else {
            let dist = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
            if dist > 0 {
                // a is the tableau where i sits earlier along the diagonal
                // order; its swap partner b carries the unit off-diagonal.
                let mut swapped = t.clone();
                swapped[r1][c1] = i + 1;
                swapped[r2][c2] = i;
                let b = tabs.iter().position(|u| *u == swapped).unwrap();
                let dd = rat(1, dist);
                m[(a, a)] = Cyc::from_rat(dd.clone());
                m[(b, a)] = Cyc::from_rat(rat_i(1) - dd.clone() * dd.clone());
                m[(a, b)] = Cyc::one();
                m[(b, b)] = Cyc::from_rat(-dd);
            }
        }
    }
    m
}

fn symmetric_irreps(n: usize, perms: &[Vec<usize>], mult: &[Vec<usize>]) -> Vec<Irrep> {
    let order = perms.len();
    let gen_elems: Vec<usize> = (0..n - 1)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            perms.iter().position(|q| *q == p).unwrap()
        })
        .collect();
    partitions(n)
        .into_iter()
        .map(|shape| {
            let tabs = standard_tableaux(&shape);
            let gens: Vec<Mat<Cyc>> = (1..n).map(|i| seminormal_gen(&tabs, i)).collect();
            // Fill in all elements by multiplying along the Cayley graph.
            let mut mats: Vec<Option<Mat<Cyc>>> = vec![None; order];
            mats[0] = Some(Mat::identity(tabs.len()));
            let mut queue = vec![0usize];
            while let Some(g) = queue.pop() {
                let mg = mats[g].clone().unwrap();
                for (gi, &s) in gen_elems.iter().enumerate() {
                    let t = mult[g][s];
                    if mats[t].is_none() {
                        mats[t] = Some(&mg * &gens[gi]);
                        queue.push(t);
                    }
                }
            }
            let label = partition_label(&shape, n);
            build_irrep(label, mats.into_iter().map(|m| m.unwrap()).collect())
        })
        .collect()
}

fn partition_label(shape: &[usize], n: usize) -> String {
    if shape.len() == 1 {
        "triv".to_string()
    } else if shape.len() == n {
        "sgn".to_string()
    } else if shape.len() == 2 && shape[1] == 1 {
        "std".to_string()
    } else {
        let digits: String = shape.iter().map(|p| p.to_string()).collect();
        format!("s{digits}")
    }
}

/// Element of the group algebra with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlg {
    pub c: Vec<Cyc>,
}

impl GroupAlg {
    pub fn zero(n: usize) -> Self {
        GroupAlg { c: vec![Cyc::zero(); n] }
    }

    pub fn from_elem(n: usize, g: usize) -> Self {
        let mut out = Self::zero(n);
        out.c[g] = Cyc::one();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GroupAlg {
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GroupAlg {
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &Cyc) -> Self {
        GroupAlg { c: self.c.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn mul(&self, rhs: &Self, g: &ReflectionGroup) -> Self {
        let mut out = Self::zero(self.c.len());
        for (a, ca) in self.c.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.c.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let t = g.mult[a][b];
                out.c[t] = out.c[t].clone() + ca.clone() * cb.clone();
            }
        }
        out
    }

    /// Image under an irrep: sum_g c_g rho(g).
    pub fn act_irrep(&self, e: &Irrep) -> Mat<Cyc> {
        let mut out: Mat<Cyc> = Mat::zeros(e.dim, e.dim);
        for (g, cg) in self.c.iter().enumerate() {
            if cg.is_zero() {
                continue;
            }
            out = &out + &e.mats[g].scale(cg);
        }
        out
    }

    pub fn is_central(&self, g: &ReflectionGroup) -> bool {
        (0..g.order()).all(|w| {
            let left = GroupAlg::from_elem(g.order(), w).mul(self, g);
            let right = self.mul(&GroupAlg::from_elem(g.order(), w), g);
            left == right
        })
    }
}
