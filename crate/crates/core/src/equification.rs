//! Equification: lifting an ideal to an equigenerated one with an extra
//! variable `z`, and the constructions built on it.
//!
//! If `d` is the largest generator degree, each `f_j` of degree `d_j` becomes
//! `f_j z^(d - d_j)`. The variable `z` is placed after the original `x`
//! variables (and before any `y` variables), so the decreasing lex order of
//! `G(I)` is the decreasing lex order of the lifted generators as well.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{power_complete, MonomialIdeal};
use crate::lattice::LcmLattice;
use crate::linearization::{lin, Linearized};
use crate::monomial::Monomial;
use crate::ring::{RingContext, VarRole, Variable};

/// Position where `z` goes: after the last non-`y` variable.
fn z_slot(ring: &RingContext) -> usize {
    ring.indices_with_role(VarRole::Y)
        .first()
        .copied()
        .unwrap_or(ring.len())
}

pub fn equify(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::domain("equification of the zero ideal"));
    }
    let ring = ideal.ring();
    if ring.z_index().is_some() {
        return Err(Error::domain("ring already has a z-tagged variable"));
    }
    let at = z_slot(ring);
    let ext = ring.with_inserted(
        at,
        Variable {
            name: ring.fresh_name("z"),
            role: VarRole::Z,
        },
    )?;
    let d = ideal
        .gens()
        .iter()
        .map(Monomial::degree)
        .max()
        .expect("nonzero");
    let gens = ideal
        .gens()
        .iter()
        .map(|f| {
            let e = u32::try_from(d - f.degree())
                .map_err(|_| Error::Arithmetic("exponent overflow".into()))?;
            Ok(f.insert_coordinate(at, e))
        })
        .collect::<Result<Vec<_>>>()?;
    // Lifted generators stay pairwise non-dividing: if f_i z^a | f_j z^b then
    // f_i | f_j already.
    Ok(MonomialIdeal::from_minimal(ext, gens))
}

/// Sets `z = 1` and minimalizes. A ring without `z` is returned unchanged.
pub fn deequify(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let Some(z) = ideal.ring().z_index() else {
        return Ok(ideal.clone());
    };
    let ring = ideal.ring().without(z)?;
    MonomialIdeal::new(
        ring,
        ideal
            .gens()
            .iter()
            .map(|g| g.remove_coordinate(z))
            .collect(),
    )
}

/// The trivial syzygy between generators `i` and `j` and whether it is
/// redundant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyzygyPair {
    pub i: usize,
    pub j: usize,
    pub lcm_ij: Monomial,
    pub redundant: bool,
    /// Least `k` certifying redundancy.
    pub witness: Option<usize>,
}

fn check_pair(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<()> {
    let m = ideal.num_gens();
    if i >= m || j >= m {
        return Err(Error::argument(format!(
            "generator index out of range (ideal has {m} generators)"
        )));
    }
    if i == j {
        return Err(Error::argument("syzygy pair needs two distinct generators"));
    }
    Ok(())
}

fn syzygy(ideal: &MonomialIdeal, i: usize, j: usize, degree_bound: bool) -> Result<SyzygyPair> {
    check_pair(ideal, i, j)?;
    let g = ideal.gens();
    let lcm_ij = g[i].lcm(&g[j]);
    let min_deg = g[i].degree().min(g[j].degree());
    let witness = (0..g.len()).find(|&k| {
        k != i
            && k != j
            && g[k].lcm(&g[i]).divides(&lcm_ij)
            && g[k].lcm(&g[j]).divides(&lcm_ij)
            && (!degree_bound || min_deg <= g[k].degree())
    });
    Ok(SyzygyPair {
        i,
        j,
        lcm_ij,
        redundant: witness.is_some(),
        witness,
    })
}

/// `σ_ij` is redundant iff some `k ∉ {i, j}` has both `lcm(f_k, f_i)` and
/// `lcm(f_k, f_j)` dividing `lcm(f_i, f_j)`. Indices refer to `G(I)` in
/// decreasing lex order.
pub fn syzygy_redundant(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<SyzygyPair> {
    syzygy(ideal, i, j, false)
}

/// Redundancy of `σ_ij` after equification, decided on `I` itself: the same
/// divisibility test plus `min(d_i, d_j) <= d_k`. The reported lcm is that of
/// the original generators.
pub fn syzygy_redundant_eq(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<SyzygyPair> {
    syzygy(ideal, i, j, true)
}

/// `Lin(I) := Lin(I^eq)`, with `z` acting as the last of the `x` variables.
pub fn lin_general(ideal: &MonomialIdeal) -> Result<Linearized> {
    lin(&equify(ideal)?)
}

/// The `z = 1` image of `Lin(I^eq)` in closed form:
/// `(x)^δ_{≤v} + (f_j y_j / x_k : deg f_j = δ, x_k | f_j)`, where `δ` is the
/// least generator degree and `v` the exponent vector of `I`. The result
/// lives in the ring of `lin_general(I)` with `z` removed.
pub fn lin_general_z1(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let l = lin_general(ideal)?;
    let z = l.ring().z_index().expect("equified ring has z");
    let ring = l.ring().without(z)?;
    let n = ideal.ring().len();
    let delta = ideal
        .gens()
        .iter()
        .map(Monomial::degree)
        .min()
        .expect("nonzero");
    let mut bound = ideal.max_exponent_vector()?;
    bound.0.resize(ring.len(), 0);
    let mut gens = power_complete(&ring, delta, &bound)?.gens().to_vec();
    for (j, f) in ideal.gens().iter().enumerate() {
        if f.degree() != delta {
            continue;
        }
        let fy = f.padded(ring.len()).mul_var(n + j, 1)?;
        for k in f.support() {
            gens.push(fy.div_var(k)?);
        }
    }
    MonomialIdeal::new(ring, gens)
}

/// Compares [`lin_general_z1`] with setting `z = 1` in `lin_general(I)`.
pub fn lin_general_z1_agrees(ideal: &MonomialIdeal) -> Result<bool> {
    let direct = deequify(lin_general(ideal)?.ideal())?;
    Ok(direct == lin_general_z1(ideal)?)
}

/// Checks that `L_I` sits inside `L_{I^eq}` through `z = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticeEmbedding {
    /// Setting `z = 1` commutes with lcm on `L_{I^eq}`.
    pub lcm_commutes: bool,
    /// The `z = 1` image of `L_{I^eq}` is exactly `L_I`.
    pub image_is_lattice: bool,
    /// `w ↦ lcm{f^eq : f | w}` is an injective order embedding `L_I →
    /// L_{I^eq}` that `z = 1` undoes.
    pub section_embeds: bool,
    pub size: usize,
    pub size_eq: usize,
}

impl LatticeEmbedding {
    pub fn holds(&self) -> bool {
        self.lcm_commutes && self.image_is_lattice && self.section_embeds
    }
}

pub fn lattice_embedding_check(ideal: &MonomialIdeal, cap: usize) -> Result<LatticeEmbedding> {
    let eq = equify(ideal)?;
    let z = eq.ring().z_index().expect("equified ring has z");
    let base = LcmLattice::new(ideal, cap)?;
    let lifted = LcmLattice::new(&eq, cap)?;
    let drop = |u: &Monomial| u.remove_coordinate(z);

    let le = lifted.elements();
    let lcm_commutes = le
        .iter()
        .all(|u| le.iter().all(|v| drop(&u.lcm(v)) == drop(u).lcm(&drop(v))));

    let image: BTreeSet<Monomial> = le.iter().map(drop).collect();
    let base_set: BTreeSet<Monomial> = base.elements().iter().cloned().collect();
    let image_is_lattice = image == base_set;

    let n_eq = eq.ring().len();
    let section = |w: &Monomial| -> Monomial {
        ideal
            .gens()
            .iter()
            .zip(eq.gens())
            .filter(|(f, _)| f.divides(w))
            .fold(Monomial::one(n_eq), |acc, (_, g)| acc.lcm(g))
    };
    let lifts: Vec<Monomial> = base.elements().iter().map(section).collect();
    let distinct: HashMap<&Monomial, usize> = lifts.iter().zip(0..).collect();
    let be = base.elements();
    let section_embeds = distinct.len() == lifts.len()
        && lifts
            .iter()
            .zip(be)
            .all(|(l, w)| lifted.contains(l) && drop(l) == *w)
        && (0..be.len())
            .all(|a| (0..be.len()).all(|b| be[a].divides(&be[b]) == lifts[a].divides(&lifts[b])));

    Ok(LatticeEmbedding {
        lcm_commutes,
        image_is_lattice,
        section_embeds,
        size: base.len(),
        size_eq: lifted.len(),
    })
}

pub const MAX_ROOTED_GENERATORS: usize = 20;

/// Rooted subsets of the generators of an equified ideal.
///
/// The rooting map sends an element `v` of the lcm-lattice to the first
/// generator dividing it, in the order of the `z = 1` images (the decreasing
/// lex order of `G(I)`, which is also the order of `G(I^eq)`). A set `U` is
/// rooted when every nonempty `W ⊆ U` contains the root of `lcm(W)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedComplex {
    pub vertices: usize,
    /// Faces as bit masks over generator indices, in increasing mask order.
    pub faces: Vec<u64>,
}

impl RootedComplex {
    /// Number of faces with `k` vertices, for `k = 0, 1, ...`.
    pub fn face_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.vertices + 1];
        for f in &self.faces {
            counts[f.count_ones() as usize] += 1;
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    pub fn faces_as_sets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|&f| (0..self.vertices).filter(|&i| f >> i & 1 == 1).collect())
            .collect()
    }
}

pub fn rooted_complex(eq: &MonomialIdeal) -> Result<RootedComplex> {
    let z = eq
        .ring()
        .z_index()
        .ok_or_else(|| Error::domain("rooted complex needs an equified ideal"))?;
    let m = eq.num_gens();
    if m > MAX_ROOTED_GENERATORS {
        return Err(Error::Resource(format!(
            "rooted complex limited to {MAX_ROOTED_GENERATORS} generators"
        )));
    }
    let gens = eq.gens();
    // The order of the z = 1 images.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        gens[b]
            .remove_coordinate(z)
            .cmp(&gens[a].remove_coordinate(z))
    });
    let n = eq.ring().len();
    let full = 1usize << m;
    let mut lcms = vec![Monomial::one(n); full];
    let mut rooted = vec![false; full];
    rooted[0] = true;
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
        let root = order
            .iter()
            .copied()
            .find(|&g| gens[g].divides(&lcms[mask]))
            .expect("a member divides the lcm");
        rooted[mask] =
            mask >> root & 1 == 1 && (0..m).all(|i| mask >> i & 1 == 0 || rooted[mask & !(1 << i)]);
    }
    Ok(RootedComplex {
        vertices: m,
        faces: (0..full).filter(|&s| rooted[s]).map(|s| s as u64).collect(),
    })
}
