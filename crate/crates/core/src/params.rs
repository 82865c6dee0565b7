//! Parameters of a rational Cherednik algebra and the group-algebra
//! elements built from them.
//!
//! Parameters are stored per hyperplane orbit as a vector (k_1, ...,
//! k_{e-1}) of rationals; k_0 = k_e = 0 throughout.  From these we build
//! the elements gamma_H entering the commutation relations, the elements
//! a_H, their sum z (central in kW), and the scalars c_E by which z acts on
//! the irreducibles.

use crate::error::Error;
use crate::group::{GroupAlg, ReflectionGroup};
use crate::scalar::{rat_i, Cyc, Rat};
use num::Zero;

#[derive(Clone, Debug, PartialEq)]
pub struct CherednikParams {
    /// k[orbit] has length e_orbit - 1 and lists k_1, ..., k_{e-1}.
    pub k: Vec<Vec<Rat>>,
}

impl CherednikParams {
    pub fn zero(g: &ReflectionGroup) -> Self {
        let k = g
            .orbits
            .iter()
            .map(|o| vec![rat_i(0); g.hyperplanes[o[0]].e - 1])
            .collect();
        CherednikParams { k }
    }

    /// All parameters set to the same rational, in every orbit and slot.
    pub fn equal(g: &ReflectionGroup, kval: Rat) -> Self {
        let k = g
            .orbits
            .iter()
            .map(|o| vec![kval.clone(); g.hyperplanes[o[0]].e - 1])
            .collect();
        CherednikParams { k }
    }

    pub fn new(g: &ReflectionGroup, k: Vec<Vec<Rat>>) -> Result<Self, Error> {
        if k.len() != g.orbits.len() {
            return Err(Error::Config(format!(
                "expected {} orbit parameter vectors, got {}",
                g.orbits.len(),
                k.len()
            )));
        }
        for (oi, o) in g.orbits.iter().enumerate() {
            let e = g.hyperplanes[o[0]].e;
            if k[oi].len() != e - 1 {
                return Err(Error::Config(format!(
                    "orbit H{oi} has e = {e}; expected {} parameters, got {}",
                    e - 1,
                    k[oi].len()
                )));
            }
        }
        Ok(CherednikParams { k })
    }

    /// k_{H,i} with the index taken mod e_H and k_{H,0} = 0.
    pub fn k_at(&self, g: &ReflectionGroup, h: usize, i: i64) -> Rat {
        let hp = &g.hyperplanes[h];
        let e = hp.e as i64;
        let i = i.rem_euclid(e) as usize;
        if i == 0 {
            rat_i(0)
        } else {
            self.k[hp.orbit][i - 1].clone()
        }
    }

    /// gamma_H = e_H sum_j (k_{H,j+1} - k_{H,j}) eps_{H,j}.
    pub fn gamma(&self, g: &ReflectionGroup, h: usize) -> GroupAlg {
        let e = g.hyperplanes[h].e;
        let mut out = GroupAlg::zero(g.order());
        for j in 0..e {
            let dk = self.k_at(g, h, j as i64 + 1) - self.k_at(g, h, j as i64);
            if dk.is_zero() {
                continue;
            }
            let coeff = Cyc::from_rat(dk * Rat::from_integer((e as i64).into()));
            out = out.add(&g.eps(h, j).scale(&coeff));
        }
        out
    }

    /// a_H = sum_{i=1}^{e-1} e_H k_{H,i} eps_{H,i}.
    pub fn a_h(&self, g: &ReflectionGroup, h: usize) -> GroupAlg {
        let e = g.hyperplanes[h].e;
        let mut out = GroupAlg::zero(g.order());
        for i in 1..e {
            let ki = self.k_at(g, h, i as i64);
            if ki.is_zero() {
                continue;
            }
            let coeff = Cyc::from_rat(ki * Rat::from_integer((e as i64).into()));
            out = out.add(&g.eps(h, i).scale(&coeff));
        }
        out
    }

    /// z = sum_H a_H, a central element of kW.
    pub fn z(&self, g: &ReflectionGroup) -> GroupAlg {
        let mut out = GroupAlg::zero(g.order());
        for h in 0..g.hyperplanes.len() {
            out = out.add(&self.a_h(g, h));
        }
        debug_assert!(out.is_central(g));
        out
    }

    /// The scalar by which z acts on irrep E.
    pub fn c_of(&self, g: &ReflectionGroup, e_idx: usize) -> Result<Rat, Error> {
        let m = self.z(g).act_irrep(&g.irreps[e_idx]);
        let s = m.is_scalar().ok_or_else(|| {
            Error::NonScalarAction(format!("z not scalar on {}", g.irreps[e_idx].label))
        })?;
        s.as_rational().ok_or_else(|| {
            Error::NonScalarAction(format!("c value not rational on {}", g.irreps[e_idx].label))
        })
    }

    pub fn c_all(&self, g: &ReflectionGroup) -> Result<Vec<Rat>, Error> {
        (0..g.irreps.len()).map(|e| self.c_of(g, e)).collect()
    }

    /// Parameters of the opposite-side algebra: k'_{H,i} = k_{H,1} -
    /// k_{H,1-i}.  An involution; the identity for e_H = 2.
    pub fn dagger(&self, g: &ReflectionGroup) -> Self {
        let k = g
            .orbits
            .iter()
            .map(|o| {
                let h = o[0];
                let e = g.hyperplanes[h].e as i64;
                (1..e)
                    .map(|i| self.k_at(g, h, 1) - self.k_at(g, h, 1 - i))
                    .collect()
            })
            .collect();
        CherednikParams { k }
    }

    /// Parameters after twisting by a linear character zeta of W:
    /// k'_{H,i} = k_{H,i-d} - k_{H,e-d} where zeta restricts to det^d on
    /// the stabilizer of H.
    pub fn twist(&self, g: &ReflectionGroup, zeta_idx: usize) -> Result<Self, Error> {
        let zeta = &g.irreps[zeta_idx];
        if zeta.dim != 1 {
            return Err(Error::Config(format!("{} is not a linear character", zeta.label)));
        }
        let mut k = Vec::with_capacity(g.orbits.len());
        for o in g.orbits.iter() {
            let h = o[0];
            let hp = &g.hyperplanes[h];
            let e = hp.e as i64;
            let s = hp.stab[1];
            // zeta(s) = det(s)^d with det(s) = zeta_e.
            let d = (0..e)
                .find(|&d| {
                    let mut p = Cyc::from_int(1);
                    for _ in 0..d {
                        p = p * g.det[s].clone();
                    }
                    p == zeta.chars[s]
                })
                .ok_or_else(|| {
                    Error::Config(format!("{} not a power of det on a stabilizer", zeta.label))
                })?;
            k.push(
                (1..e)
                    .map(|i| self.k_at(g, h, i - d) - self.k_at(g, h, e - d))
                    .collect(),
            );
        }
        Ok(CherednikParams { k })
    }

    /// Twisting by zeta shifts every c value by the same constant:
    /// c_{E (x) zeta^{-1}} at the twisted parameters minus c_E at the
    /// original ones is independent of E.  Returns true when that holds.
    pub fn twist_check(&self, g: &ReflectionGroup, zeta_idx: usize) -> Result<bool, Error> {
        let twisted = self.twist(g, zeta_idx)?;
        let mut shift: Option<Rat> = None;
        for e_idx in 0..g.irreps.len() {
            let te = tensor_linear(g, e_idx, zeta_idx, true)?;
            let delta = twisted.c_of(g, te)? - self.c_of(g, e_idx)?;
            match &shift {
                None => shift = Some(delta),
                Some(s) => {
                    if *s != delta {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Index of E (x) zeta^{+-1} for a linear character zeta, found by its
/// character.
pub fn tensor_linear(
    g: &ReflectionGroup,
    e_idx: usize,
    zeta_idx: usize,
    invert: bool,
) -> Result<usize, Error> {
    let zeta = &g.irreps[zeta_idx];
    if zeta.dim != 1 {
        return Err(Error::Config(format!("{} is not a linear character", zeta.label)));
    }
    let target: Vec<Cyc> = (0..g.order())
        .map(|w| {
            let zw = if invert { zeta.chars[g.inv[w]].clone() } else { zeta.chars[w].clone() };
            g.irreps[e_idx].chars[w].clone() * zw
        })
        .collect();
    g.irreps
        .iter()
        .position(|f| f.chars == target)
        .ok_or_else(|| Error::Config("tensor with linear character left the irrep list".into()))
}
