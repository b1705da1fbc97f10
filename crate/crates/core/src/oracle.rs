//! Multigraded Betti numbers from simplicial homology.
//!
//! For a multidegree `b`, the upper Koszul simplicial complex
//! `K^b = {τ squarefree : b / x^τ ∈ I}` satisfies
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b)`. Nonzero values only occur at elements
//! of the lcm-lattice, so those are the only multidegrees visited. `K^b` is
//! generated by the faces `F_g = {i : g_i < b_i}` for generators `g | b`; if
//! one vertex lies in every `F_g` the complex is a cone and contributes
//! nothing. Homology ranks are computed exactly over the rationals.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{LcmLattice, DEFAULT_LATTICE_CAP};
use crate::linalg::{field_rank, rational_rank, SparseMatrix};
use crate::monomial::Monomial;
use crate::ring::{Ring, RingContext};
use crate::Fp;

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coefficients {
    /// Exact rational ranks via fraction-free integer elimination.
    #[default]
    Rational,
    /// Ranks modulo the prime `2^61 - 1`. Faster, but Betti numbers computed
    /// this way are only guaranteed to agree with the rational ones when
    /// the homology has no torsion at that prime.
    LargePrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest lcm-lattice the oracle will walk.
    pub lattice_cap: usize,
    pub coefficients: Coefficients,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            lattice_cap: DEFAULT_LATTICE_CAP,
            coefficients: Coefficients::Rational,
            parallel: true,
        }
    }
}

/// `β_{i,b}` for homological index `i` and multidegree `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedBetti {
    ring: Ring,
    entries: BTreeMap<(usize, Monomial), u64>,
    pub coefficients: Coefficients,
}

impl MultigradedBetti {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, b: &Monomial) -> u64 {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> + '_ {
        self.entries.iter().map(|((i, b), &v)| (*i, b, v))
    }

    /// Sums multidegrees of equal total degree.
    pub fn graded(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for ((i, b), &v) in &self.entries {
            t.add(*i, b.degree(), v);
        }
        t
    }

    /// Warning text when the numbers are not certified over the rationals.
    pub fn warning(&self) -> Option<&'static str> {
        match self.coefficients {
            Coefficients::Rational => None,
            Coefficients::LargePrime => Some(
                "Betti numbers computed modulo 2^61-1; they equal the rational values unless the homology has torsion at that prime",
            ),
        }
    }
}

/// Multigraded and graded Betti numbers of `ideal`.
pub fn oracle_betti(
    ideal: &MonomialIdeal,
    config: &OracleConfig,
) -> Result<(MultigradedBetti, BettiTable)> {
    if ideal.is_zero() {
        return Err(Error::domain("Betti numbers of the zero ideal"));
    }
    if ideal.ring().len() > 64 {
        return Err(Error::Resource(
            "the oracle handles at most 64 variables".into(),
        ));
    }
    let lattice = LcmLattice::new(ideal, config.lattice_cap)?;
    let work = |b: &Monomial| -> Vec<(usize, u64)> {
        upper_koszul_homology(ideal.gens(), b, config.coefficients)
    };
    let per_degree: Vec<Vec<(usize, u64)>> = if config.parallel {
        lattice.elements().par_iter().map(work).collect()
    } else {
        lattice.elements().iter().map(work).collect()
    };
    let mut entries = BTreeMap::new();
    for (b, values) in lattice.elements().iter().zip(per_degree) {
        for (i, v) in values {
            entries.insert((i, b.clone()), v);
        }
    }
    let multi = MultigradedBetti {
        ring: ideal.ring().clone(),
        entries,
        coefficients: config.coefficients,
    };
    let graded = multi.graded();
    Ok((multi, graded))
}

/// Graded Betti table with the default configuration.
pub fn oracle_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    Ok(oracle_betti(ideal, &OracleConfig::default())?.1)
}

/// Nonzero `(i, dim H̃_{i-1}(K^b))` pairs.
fn upper_koszul_homology(
    gens: &[Monomial],
    b: &Monomial,
    coefficients: Coefficients,
) -> Vec<(usize, u64)> {
    let support = b.support();
    let mut facets: Vec<u64> = gens
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            support
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.exp(v) < b.exp(v))
                .fold(0u64, |m, (t, _)| m | 1 << t)
        })
        .collect();
    if facets.is_empty() {
        return vec![];
    }
    facets.sort_unstable();
    facets.dedup();
    let maximal: Vec<u64> = facets
        .iter()
        .copied()
        .filter(|&f| !facets.iter().any(|&g| g != f && g & f == f))
        .collect();
    if maximal == [0] {
        return vec![(0, 1)];
    }
    if maximal.iter().fold(u64::MAX, |acc, &f| acc & f) != 0 {
        return vec![];
    }
    reduced_homology(&maximal, coefficients)
        .into_iter()
        .enumerate()
        .filter(|&(_, h)| h > 0)
        .collect()
}

/// Reduced Betti numbers of the complex generated by `facets`; entry `s`
/// is `dim H̃_{s-1}`, so entry 0 is the `(-1)`-dimensional homology.
pub fn reduced_homology(facets: &[u64], coefficients: Coefficients) -> Vec<u64> {
    let mut faces: Vec<u64> = Vec::new();
    for &f in facets {
        // All submasks of f, including f and 0.
        let mut s = f;
        loop {
            faces.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    faces.sort_unstable();
    faces.dedup();
    let top = faces
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    let mut rank = vec![0u64; top + 2];
    for s in 1..=top {
        let mut m = SparseMatrix::new(by_size[s - 1].len());
        for &f in &by_size[s] {
            let mut sign = 1i64;
            let mut entries = Vec::with_capacity(s);
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let col = by_size[s - 1]
                    .binary_search(&(f & !(1 << v)))
                    .expect("faces are closed under removal");
                entries.push((col, sign));
                sign = -sign;
            }
            m.push_row(entries);
        }
        rank[s] = match coefficients {
            Coefficients::Rational => rational_rank(&m),
            Coefficients::LargePrime => field_rank::<Fp>(&m),
        } as u64;
    }
    (0..=top)
        .map(|s| by_size[s].len() as u64 - rank[s] - rank[s + 1])
        .collect()
}

/// True iff the Betti table of an equigenerated ideal sits on one row.
pub fn is_linear_resolution(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<bool> {
    let d = ideal
        .generating_degree()
        .ok_or_else(|| Error::domain("linear resolution test needs an equigenerated ideal"))?;
    Ok(oracle_betti(ideal, config)?.1.is_linear(d))
}

/// `Σ_S (-1)^(|S|-1)` over nonempty generator subsets `S` with lcm `b`: the
/// multigraded Euler characteristic of the Taylor resolution, which every
/// free resolution of the ideal shares.
pub fn taylor_euler_characteristic(ideal: &MonomialIdeal) -> Result<BTreeMap<Monomial, i64>> {
    let m = ideal.num_gens();
    if m == 0 || m > 20 {
        return Err(Error::Resource(
            "Taylor enumeration needs 1..=20 generators".into(),
        ));
    }
    let gens = ideal.gens();
    let n = ideal.ring().len();
    let mut lcms = vec![Monomial::one(n); 1 << m];
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    for mask in 1usize..1 << m {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *out.entry(lcms[mask].clone()).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Outcome of a Betti splitting test `I = J + K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingReport {
    pub i_table: BettiTable,
    pub j_table: BettiTable,
    pub k_table: BettiTable,
    pub meet_table: BettiTable,
    /// Cells `(i, j, β_{i,j}(I), β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K))`
    /// where the two sides differ.
    pub mismatches: Vec<(usize, u64, u64, u64)>,
}

impl SplittingReport {
    pub fn is_splitting(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// `β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K)`.
    pub fn predicted(&self, i: usize, j: u64) -> u64 {
        let meet = if i == 0 {
            0
        } else {
            self.meet_table.get(i - 1, j)
        };
        self.j_table.get(i, j) + self.k_table.get(i, j) + meet
    }
}

/// Compares the Betti table of `I` with the splitting formula for the
/// partition `G(I) = G(J) ⊔ G(K)`.
pub fn betti_splitting_check(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    config: &OracleConfig,
) -> Result<SplittingReport> {
    RingContext::ensure_same(i.ring(), j.ring())?;
    RingContext::ensure_same(i.ring(), k.ring())?;
    if j.is_zero() || k.is_zero() {
        return Err(Error::argument("both parts of a splitting must be nonzero"));
    }
    let mut parts: Vec<&Monomial> = j.gens().iter().chain(k.gens()).collect();
    parts.sort();
    let mut whole: Vec<&Monomial> = i.gens().iter().collect();
    whole.sort();
    if parts != whole {
        return Err(Error::argument(
            "G(I) must be the disjoint union of G(J) and G(K)",
        ));
    }
    let meet = j.intersection(k)?;
    let table = |x: &MonomialIdeal| oracle_betti(x, config).map(|r| r.1);
    let mut report = SplittingReport {
        i_table: table(i)?,
        j_table: table(j)?,
        k_table: table(k)?,
        meet_table: table(&meet)?,
        mismatches: vec![],
    };
    let mut cells: Vec<(usize, u64)> = report
        .i_table
        .entries()
        .chain(report.j_table.entries())
        .chain(report.k_table.entries())
        .map(|(a, b, _)| (a, b))
        .chain(report.meet_table.entries().map(|(a, b, _)| (a + 1, b)))
        .collect();
    cells.sort_unstable();
    cells.dedup();
    for (a, b) in cells {
        let lhs = report.i_table.get(a, b);
        let rhs = report.predicted(a, b);
        if lhs != rhs {
            report.mismatches.push((a, b, lhs, rhs));
        }
    }
    Ok(report)
}
