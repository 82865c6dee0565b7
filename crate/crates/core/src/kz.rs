//! Numerical monodromy of the KZ connection on the regular locus.
//!
//! The connection is d - sum_H (d alpha_H / alpha_H) A_H with residues
//! A_H = a_H represented on E.  Horizontal sections along a path x(t)
//! solve F' = [sum_H alpha_H(x') / alpha_H(x) . A_H] F, integrated with
//! an adaptive Dormand-Prince 5(4) scheme over either floating backend.
//!
//! Braid generator convention, calibrated once on the rank-one closed
//! form and used everywhere: the generator attached to a distinguished
//! reflection s transports along the bumped segment x0 -> s.x0 whose
//! imaginary detour makes every wall crossing positively oriented, then
//! identifies the endpoint fiber back through rho_E(s)^{-1}.  For a real
//! reflection this is the familiar positive half-turn; for Z/e with
//! e >= 3 it is the 1/e-turn lifting the positive loop of the quotient.
//! Each (E, generator) integration is independent and deterministic, so
//! callers may fan them out; nothing here shares mutable state.

use crate::error::Error;
use crate::group::ReflectionGroup;
use crate::linalg::Mat;
use crate::numeric::{frobenius, mat_to_complex, Cplx, Real};
use crate::params::CherednikParams;
use crate::scalar::{rat, Rat};
use num::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct KZConnection<R: Real> {
    pub e_idx: usize,
    /// One residue matrix per hyperplane, acting on E.
    pub residues: Vec<Mat<Cplx<R>>>,
    /// Complexified linear forms, indexed like the group's hyperplanes.
    pub alphas: Vec<Vec<Cplx<R>>>,
    pub x0: Vec<Cplx<R>>,
    pub x0_rat: Vec<Rat>,
    pub flatness_residual: f64,
    pub equivariance_residual: f64,
}

fn dot<R: Real>(alpha: &[Cplx<R>], x: &[Cplx<R>]) -> Cplx<R> {
    let mut acc = Cplx::zero();
    for (a, b) in alpha.iter().zip(x) {
        acc = acc + *a * *b;
    }
    acc
}

fn alpha_norm<R: Real>(alpha: &[Cplx<R>]) -> f64 {
    alpha
        .iter()
        .map(|c| c.norm_sqr().to_f64())
        .sum::<f64>()
        .sqrt()
}

fn vec_norm<R: Real>(x: &[Cplx<R>]) -> f64 {
    x.iter().map(|c| c.norm_sqr().to_f64()).sum::<f64>().sqrt()
}

/// Normalized distance from x to the arrangement.
fn wall_clearance<R: Real>(alphas: &[Vec<Cplx<R>>], x: &[Cplx<R>]) -> f64 {
    alphas
        .iter()
        .map(|a| dot(a, x).abs().to_f64() / alpha_norm(a))
        .fold(f64::INFINITY, f64::min)
}

/// The straight segment [x, s.x] must cross the wall of s and no other;
/// otherwise the bumped path would pick up extra braid letters and the
/// generators would only satisfy the Artin relations up to conjugation.
/// Walls are real forms here whenever there is more than one, so the
/// test is a sign comparison at the endpoints.
fn crosses_only_own_wall(
    g: &ReflectionGroup,
    alphas: &[Vec<Cplx<f64>>],
    x: &[Cplx<f64>],
) -> bool {
    for &s in &g.braid_gens {
        let own = g.wall_of(s).expect("braid generator fixes no wall");
        let m = mat_to_complex::<f64>(&g.v_mats[s]);
        let sx = m.mul_vec(x);
        for (h, a) in alphas.iter().enumerate() {
            if h == own {
                continue;
            }
            let (u, v) = (dot(a, x), dot(a, &sx));
            if u.im.abs() > 1e-9 || v.im.abs() > 1e-9 || u.re * v.re <= 0.0 {
                return false;
            }
        }
    }
    true
}

/// Deterministic rational base point: the grid point in [-1,1]^dim of
/// step 1/4 maximizing the scale-free clearance min_H |alpha(x)|/(|alpha||x|),
/// restricted to the chamber condition of `crosses_only_own_wall`.
pub fn base_point(g: &ReflectionGroup) -> Vec<Rat> {
    let alphas: Vec<Vec<Cplx<f64>>> = g
        .hyperplanes
        .iter()
        .map(|h| h.alpha.iter().map(crate::numeric::cyc_to_complex).collect())
        .collect();
    let steps: Vec<Rat> = (-4..=4).map(|i| rat(i, 4)).collect();
    let mut best: Option<(f64, Vec<Rat>)> = None;
    let dim = g.dim;
    let mut idx = vec![0usize; dim];
    loop {
        let cand: Vec<Rat> = idx.iter().map(|&i| steps[i].clone()).collect();
        let x: Vec<Cplx<f64>> = cand
            .iter()
            .map(|r| Cplx::new(r.to_f64().unwrap(), 0.0))
            .collect();
        let nx = vec_norm(&x);
        if nx > 1e-9 && crosses_only_own_wall(g, &alphas, &x) {
            let score = wall_clearance(&alphas, &x) / nx;
            if best.as_ref().is_none_or(|(b, _)| score > *b + 1e-12) {
                best = Some((score, cand));
            }
        }
        // Odometer.
        let mut d = 0;
        loop {
            if d == dim {
                return best.expect("no admissible base point on the grid").1;
            }
            idx[d] += 1;
            if idx[d] < steps.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Residues, base point, and the numerical flatness / equivariance
/// residual checks.
pub fn assemble_connection<R: Real>(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
) -> Result<KZConnection<R>, Error> {
    let e = &g.irreps[e_idx];
    let residues: Vec<Mat<Cplx<R>>> = (0..g.hyperplanes.len())
        .map(|h| mat_to_complex(&p.a_h(g, h).act_irrep(e)))
        .collect();
    let alphas: Vec<Vec<Cplx<R>>> = g
        .hyperplanes
        .iter()
        .map(|h| h.alpha.iter().map(crate::numeric::cyc_to_complex).collect())
        .collect();
    let x0_rat = base_point(g);
    let x0: Vec<Cplx<R>> = x0_rat.iter().map(|r| Cplx::from_rat(r)).collect();

    // W-equivariance: A_{w(H)} = rho(w) A_H rho(w)^{-1}.
    let mut equivariance_residual = 0.0f64;
    for w in 0..g.order() {
        let rho = mat_to_complex::<R>(&e.mats[w]);
        let rho_inv = mat_to_complex::<R>(&e.mats[g.inv[w]]);
        for h in 0..g.hyperplanes.len() {
            let lhs = &residues[g.hyperplane_perm[w][h]];
            let rhs = &(&rho * &residues[h]) * &rho_inv;
            equivariance_residual = equivariance_residual.max(frobenius(&(lhs - &rhs)));
        }
    }

    // Flatness: the curvature of d - sum (dalpha/alpha) A_H reduces to
    // [omega(xi), omega(eta)] at a point; sample random real points and
    // integer 2-planes.
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b7a);
    let mut flatness_residual = 0.0f64;
    let omega = |x: &[Cplx<R>], v: &[Cplx<R>], alphas: &[Vec<Cplx<R>>]| {
        let mut acc: Mat<Cplx<R>> = Mat::zeros(e.dim, e.dim);
        for (h, a) in alphas.iter().enumerate() {
            let c = dot(a, v) / dot(a, x);
            acc = &acc + &residues[h].scale(&c);
        }
        acc
    };
    let mut trials = 0;
    while trials < 5 {
        let x: Vec<Cplx<R>> = (0..g.dim)
            .map(|_| Cplx::from_rat(&rat(rng.gen_range(-16..=16), 8)))
            .collect();
        if wall_clearance(&alphas, &x) < 0.05 {
            continue;
        }
        let xi: Vec<Cplx<R>> = (0..g.dim)
            .map(|_| Cplx::from_rat(&rat(rng.gen_range(-3..=3), 1)))
            .collect();
        let eta: Vec<Cplx<R>> = (0..g.dim)
            .map(|_| Cplx::from_rat(&rat(rng.gen_range(-3..=3), 1)))
            .collect();
        if vec_norm(&xi) < 1e-9 || vec_norm(&eta) < 1e-9 {
            continue;
        }
        let a = omega(&x, &xi, &alphas);
        let b = omega(&x, &eta, &alphas);
        flatness_residual = flatness_residual.max(frobenius(&(&(&a * &b) - &(&b * &a))));
        trials += 1;
    }

    let scale = 1.0 + residues.iter().map(frobenius).fold(0.0, f64::max);
    if equivariance_residual > 1e-10 * scale || flatness_residual > 1e-10 * scale * scale {
        return Err(Error::Numerical(format!(
            "connection residuals too large: equivariance {equivariance_residual:.3e}, flatness {flatness_residual:.3e}"
        )));
    }
    Ok(KZConnection {
        e_idx,
        residues,
        alphas,
        x0,
        x0_rat,
        flatness_residual,
        equivariance_residual,
    })
}

/// One smooth piece: x(t) = start + t(end-start) + 4t(1-t) bump.
#[derive(Clone, Debug)]
pub struct Segment<R: Real> {
    pub start: Vec<Cplx<R>>,
    pub end: Vec<Cplx<R>>,
    pub bump: Vec<Cplx<R>>,
}

impl<R: Real> Segment<R> {
    fn at(&self, t: R) -> Vec<Cplx<R>> {
        let tt = Cplx::new(t, R::zero());
        let hump = Cplx::new(R::from_f64(4.0) * t * (R::one() - t), R::zero());
        (0..self.start.len())
            .map(|i| self.start[i] + (self.end[i] - self.start[i]) * tt + self.bump[i] * hump)
            .collect()
    }

    fn deriv(&self, t: R) -> Vec<Cplx<R>> {
        let slope = Cplx::new(R::from_f64(4.0) - R::from_f64(8.0) * t, R::zero());
        (0..self.start.len())
            .map(|i| self.end[i] - self.start[i] + self.bump[i] * slope)
            .collect()
    }

    fn reversed(&self) -> Segment<R> {
        Segment {
            start: self.end.clone(),
            end: self.start.clone(),
            bump: self.bump.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BraidPath<R: Real> {
    pub segments: Vec<Segment<R>>,
}

impl<R: Real> BraidPath<R> {
    pub fn straight(a: Vec<Cplx<R>>, b: Vec<Cplx<R>>) -> Self {
        let bump = vec![Cplx::zero(); a.len()];
        BraidPath { segments: vec![Segment { start: a, end: b, bump }] }
    }

    pub fn concat(mut self, other: BraidPath<R>) -> Self {
        self.segments.extend(other.segments);
        self
    }

    pub fn reversed(&self) -> Self {
        BraidPath {
            segments: self.segments.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    pub fn samples(&self, per_segment: usize) -> Vec<Vec<Cplx<R>>> {
        let mut out = Vec::new();
        for seg in &self.segments {
            for i in 0..=per_segment {
                out.push(seg.at(R::from_f64(i as f64 / per_segment as f64)));
            }
        }
        out
    }

    pub fn min_wall_distance(&self, alphas: &[Vec<Cplx<R>>]) -> f64 {
        self.samples(64)
            .iter()
            .map(|x| wall_clearance(alphas, x))
            .fold(f64::INFINITY, f64::min)
    }
}

/// The calibrated generator path x0 -> s.x0 with an imaginary bump of
/// relative height eta_scale times half the base clearance.
pub fn standard_path<R: Real>(
    conn: &KZConnection<R>,
    g: &ReflectionGroup,
    s: usize,
    eta_scale: f64,
) -> BraidPath<R> {
    let m = mat_to_complex::<R>(&g.v_mats[s]);
    let end = m.mul_vec(&conn.x0);
    let d0 = wall_clearance(&conn.alphas, &conn.x0);
    let eta = 0.5 * d0 * eta_scale / vec_norm(&conn.x0);
    let ic = Cplx::new(R::zero(), R::from_f64(eta));
    let bump: Vec<Cplx<R>> = conn.x0.iter().map(|c| *c * ic).collect();
    BraidPath {
        segments: vec![Segment { start: conn.x0.clone(), end, bump }],
    }
}

const STAGES: usize = 7;

/// Dormand-Prince 5(4) tableau, exact rationals.
fn dp_tableau<R: Real>() -> ([[R; STAGES]; STAGES], [R; STAGES], [R; STAGES], [R; STAGES]) {
    let r = |n: i64, d: i64| R::from_rat(&rat(n, d));
    let z = R::zero();
    let mut a = [[z; STAGES]; STAGES];
    a[1][0] = r(1, 5);
    a[2][0] = r(3, 40);
    a[2][1] = r(9, 40);
    a[3][0] = r(44, 45);
    a[3][1] = r(-56, 15);
    a[3][2] = r(32, 9);
    a[4][0] = r(19372, 6561);
    a[4][1] = r(-25360, 2187);
    a[4][2] = r(64448, 6561);
    a[4][3] = r(-212, 729);
    a[5][0] = r(9017, 3168);
    a[5][1] = r(-355, 33);
    a[5][2] = r(46732, 5247);
    a[5][3] = r(49, 176);
    a[5][4] = r(-5103, 18656);
    a[6][0] = r(35, 384);
    a[6][2] = r(500, 1113);
    a[6][3] = r(125, 192);
    a[6][4] = r(-2187, 6784);
    a[6][5] = r(11, 84);
    let c = [z, r(1, 5), r(3, 10), r(4, 5), r(8, 9), R::one(), R::one()];
    let b5 = a[6];
    let b4 = [
        r(5179, 57600),
        z,
        r(7571, 16695),
        r(393, 640),
        r(-92097, 339200),
        r(187, 2100),
        r(1, 40),
    ];
    (a, c, b5, b4)
}

fn connection_matrix<R: Real>(conn: &KZConnection<R>, seg: &Segment<R>, t: R) -> Mat<Cplx<R>> {
    let x = seg.at(t);
    let xd = seg.deriv(t);
    let dim_e = conn.residues[0].nrows();
    let mut acc: Mat<Cplx<R>> = Mat::zeros(dim_e, dim_e);
    for (h, alpha) in conn.alphas.iter().enumerate() {
        let c = dot(alpha, &xd) / dot(alpha, &x);
        acc = &acc + &conn.residues[h].scale(&c);
    }
    acc
}

fn transport_segment<R: Real>(
    conn: &KZConnection<R>,
    seg: &Segment<R>,
    tol: f64,
) -> Result<Mat<Cplx<R>>, Error> {
    let (a, c, b5, b4) = dp_tableau::<R>();
    let dim_e = conn.residues[0].nrows();
    let mut f: Mat<Cplx<R>> = Mat::identity(dim_e);
    let mut t = R::zero();
    let mut h = 0.01f64;
    let mut iterations = 0usize;
    while t.to_f64() < 1.0 {
        iterations += 1;
        if iterations > 500_000 {
            return Err(Error::Numerical("integrator exceeded iteration budget".into()));
        }
        let remaining = 1.0 - t.to_f64();
        if h > remaining {
            h = remaining;
        }
        if h < 1e-13 {
            return Err(Error::Numerical("integrator step size underflow".into()));
        }
        let hr = R::from_f64(h);
        let mut k: Vec<Mat<Cplx<R>>> = Vec::with_capacity(STAGES);
        for i in 0..STAGES {
            let mut y = f.clone();
            for (j, kj) in k.iter().enumerate() {
                if a[i][j] != R::zero() {
                    y = &y + &kj.scale(&Cplx::new(hr * a[i][j], R::zero()));
                }
            }
            let g_mat = connection_matrix(conn, seg, t + c[i] * hr);
            k.push(&g_mat * &y);
        }
        let mut f5 = f.clone();
        let mut err_mat: Mat<Cplx<R>> = Mat::zeros(dim_e, dim_e);
        for i in 0..STAGES {
            if b5[i] != R::zero() {
                f5 = &f5 + &k[i].scale(&Cplx::new(hr * b5[i], R::zero()));
            }
            let diff = b5[i] - b4[i];
            if diff != R::zero() {
                err_mat = &err_mat + &k[i].scale(&Cplx::new(hr * diff, R::zero()));
            }
        }
        let err = frobenius(&err_mat);
        let scale = 1.0f64.max(frobenius(&f5));
        // Local error per unit arc of the parameter.
        let threshold = tol * h * scale;
        if err <= threshold {
            t = t + hr;
            f = f5;
            let clearance = wall_clearance(&conn.alphas, &seg.at(t));
            if clearance < 1e-9 {
                return Err(Error::Numerical("path clearance underflow".into()));
            }
        }
        let ratio = if err > 0.0 { threshold / err } else { 10.0 };
        h *= (0.9 * ratio.powf(0.25)).clamp(0.2, 5.0);
    }
    Ok(f)
}

/// Fundamental solution along the path; segments compose in travel order,
/// so transport(p1.p2) = transport(p2) * transport(p1).
pub fn parallel_transport<R: Real>(
    conn: &KZConnection<R>,
    path: &BraidPath<R>,
    tol: f64,
) -> Result<Mat<Cplx<R>>, Error> {
    let dim_e = conn.residues[0].nrows();
    let mut u: Mat<Cplx<R>> = Mat::identity(dim_e);
    for (i, seg) in path.segments.iter().enumerate() {
        u = &transport_segment(conn, seg, tol).map_err(|e| match e {
            Error::Numerical(msg) => Error::Numerical(format!(
                "{msg} on path segment {} of {}",
                i + 1,
                path.segments.len()
            )),
            other => other,
        })? * &u;
    }
    Ok(u)
}

/// Monodromy of the braid generator whose base-point path is
/// x0 -> s.x0.  The image of that generator in W is s^{-1}: the
/// reflection whose determinant on covectors is e^{2 pi i / e_H}.  For
/// real reflections the two coincide.
pub fn braid_generator_monodromy<R: Real>(
    g: &ReflectionGroup,
    conn: &KZConnection<R>,
    s: usize,
    tol: f64,
) -> Result<Mat<Cplx<R>>, Error> {
    let path = standard_path(conn, g, s, 1.0);
    let u = parallel_transport(conn, &path, tol)?;
    let rho_inv = mat_to_complex::<R>(&g.irreps[conn.e_idx].mats[g.inv[s]]);
    Ok(&rho_inv * &u)
}

#[derive(Clone, Debug)]
pub struct MonodromyRep<R: Real> {
    pub e_idx: usize,
    /// Image in W of each braid generator, parallel to `gens`; at zero
    /// parameters gens[i] degenerates to the representation matrix of
    /// gen_elems[i].
    pub gen_elems: Vec<usize>,
    /// Hyperplane fixed by each generator.
    pub walls: Vec<usize>,
    pub gens: Vec<Mat<Cplx<R>>>,
    pub tol: f64,
}

pub fn monodromy_rep<R: Real>(
    g: &ReflectionGroup,
    p: &CherednikParams,
    e_idx: usize,
    tol: f64,
) -> Result<MonodromyRep<R>, Error> {
    let conn = assemble_connection(g, p, e_idx)?;
    let mut gens = Vec::new();
    let mut walls = Vec::new();
    for &s in &g.braid_gens {
        gens.push(braid_generator_monodromy(g, &conn, s, tol)?);
        walls.push(g.wall_of(s).expect("braid generator fixes no wall"));
    }
    let gen_elems = g.braid_gens.iter().map(|&s| g.inv[s]).collect();
    Ok(MonodromyRep { e_idx, gen_elems, walls, gens, tol })
}

/// Nontrivial roots of the local Hecke relation at a wall: for the
/// distinguished generator s, whose determinant on covectors is
/// e^{2 pi i / e_H}, the root for j is det(s)^{-j} e^{2 pi i k_{H,j}}
/// = e^{2 pi i (j/e_H + k_{H,j})}.  For a real reflection this is the
/// familiar -e^{2 pi i k}.
pub fn hecke_roots<R: Real>(
    g: &ReflectionGroup,
    p: &CherednikParams,
    wall: usize,
) -> Vec<Cplx<R>> {
    let e_h = g.hyperplanes[wall].e as i64;
    (1..e_h)
        .map(|j| Cplx::root_of_unity(&(p.k_at(g, wall, j) + rat(j, e_h))))
        .collect()
}

/// Frobenius norm of (T - 1) prod_j (T - q_{H,j}) over the hecke_roots.
pub fn hecke_relation_residual<R: Real>(
    g: &ReflectionGroup,
    p: &CherednikParams,
    t_mat: &Mat<Cplx<R>>,
    wall: usize,
) -> f64 {
    let dim = t_mat.nrows();
    let ident: Mat<Cplx<R>> = Mat::identity(dim);
    let mut acc = t_mat - &ident;
    for q in hecke_roots::<R>(g, p, wall) {
        acc = &acc * &(t_mat - &ident.scale(&q));
    }
    frobenius(&acc)
}

/// Max residual over the defining braid relations.
pub fn braid_relation_residual<R: Real>(g: &ReflectionGroup, rep: &MonodromyRep<R>) -> f64 {
    let dim = rep.gens[0].nrows();
    let word_mat = |word: &[usize]| {
        let mut acc: Mat<Cplx<R>> = Mat::identity(dim);
        for &i in word {
            acc = &acc * &rep.gens[i];
        }
        acc
    };
    let mut worst = 0.0f64;
    for (l, r) in g.braid_relations() {
        worst = worst.max(frobenius(&(&word_mat(&l) - &word_mat(&r))));
    }
    worst
}

/// Traces of generator words, the isomorphism-invariant fingerprint.
pub fn monodromy_character<R: Real>(rep: &MonodromyRep<R>, words: &[Vec<usize>]) -> Vec<Cplx<R>> {
    let dim = rep.gens[0].nrows();
    words
        .iter()
        .map(|word| {
            let mut acc: Mat<Cplx<R>> = Mat::identity(dim);
            for &i in word {
                acc = &acc * &rep.gens[i];
            }
            acc.trace()
        })
        .collect()
}
