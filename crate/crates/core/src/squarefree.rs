//! Closed formulas for the starred linearization of squarefree ideals.
//!
//! Let `I` be squarefree, generated in degree `d` by `m` monomials in `n`
//! variables. A `(d-1)`-edge is a squarefree degree-`d-1` divisor of some
//! generator, and its multiplicity is the number of generators it divides.
//! A maximal `j`-cluster is a maximal set of `j >= 2` generators sharing one
//! `(d-1)`-edge. Two distinct squarefree degree-`d` monomials have at most one
//! common `(d-1)`-divisor (their gcd), so each maximal cluster is determined
//! by its edge and the number `C_j` of maximal `j`-clusters equals the number
//! of edges of multiplicity exactly `j`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use crate::scalar::binomial;

/// Edge multiplicities and cluster counts of a squarefree equigenerated ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterProfile {
    pub n: usize,
    pub m: usize,
    pub d: u64,
    /// `(d-1)`-edge to multiplicity.
    pub edges: BTreeMap<Monomial, u64>,
    /// `j` to `C_j`, for `j >= 2` with `C_j > 0`.
    pub clusters: BTreeMap<u64, u64>,
}

impl ClusterProfile {
    /// Largest `j` with `C_j != 0`, or 1 if there are no clusters.
    pub fn max_cluster(&self) -> u64 {
        self.clusters.keys().copied().max().unwrap_or(1)
    }

    pub fn cluster_count(&self, j: u64) -> u64 {
        self.clusters.get(&j).copied().unwrap_or(0)
    }

    /// `md - Σ_j (j-1) C_j`: the number of last-part positions with `r = n-d+1`.
    pub fn base_count(&self) -> u64 {
        self.m as u64 * self.d
            - self
                .clusters
                .iter()
                .map(|(&j, &c)| (j - 1) * c)
                .sum::<u64>()
    }

    /// The sorted `r` values of the last part of the canonical order:
    /// `base_count` copies of `n-d+1` and, for each maximal `j`-cluster, one
    /// each of `n-d+2, ..., n-d+j`.
    pub fn last_part_r_census(&self) -> Vec<usize> {
        let base = self.n + 1 - self.d as usize;
        let mut out = vec![base; self.base_count() as usize];
        for (&j, &c) in &self.clusters {
            for _ in 0..c {
                out.extend((2..=j as usize).map(|k| base + k - 1));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_json(&self, ring: &RingContext) -> Value {
        let edges: serde_json::Map<String, Value> = self
            .edges
            .iter()
            .rev()
            .map(|(e, &mult)| (e.display(ring).to_string(), json!(mult)))
            .collect();
        let clusters: serde_json::Map<String, Value> = self
            .clusters
            .iter()
            .map(|(j, c)| (j.to_string(), json!(c)))
            .collect();
        json!({
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "edges": edges,
            "clusters": clusters,
            "N": self.max_cluster(),
        })
    }
}

fn check_input(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain(
            "cluster analysis needs a nonzero proper ideal",
        ));
    }
    if !ideal.is_squarefree() {
        return Err(Error::domain("cluster analysis needs a squarefree ideal"));
    }
    ideal
        .generating_degree()
        .ok_or_else(|| Error::domain("cluster analysis needs an equigenerated ideal"))
}

/// Edge multiplicities and cluster counts.
///
/// For `d = 1` the only `(d-1)`-edge is the constant monomial, which divides
/// all `m` generators, so the generators form a single `m`-cluster when
/// `m >= 2`. This keeps the closed formulas valid in degree 1.
pub fn cluster_profile(ideal: &MonomialIdeal) -> Result<ClusterProfile> {
    let d = check_input(ideal)?;
    let mut edges: BTreeMap<Monomial, u64> = BTreeMap::new();
    for f in ideal.gens() {
        for k in f.support() {
            *edges.entry(f.div_var(k)?).or_insert(0) += 1;
        }
    }
    let mut clusters = BTreeMap::new();
    for &mult in edges.values() {
        if mult >= 2 {
            *clusters.entry(mult).or_insert(0) += 1;
        }
    }
    Ok(ClusterProfile {
        n: ideal.ring().len(),
        m: ideal.num_gens(),
        d,
        edges,
        clusters,
    })
}

/// `β_i(LIN(I)) = C(i+d-1, d-1) C(n, i+d) + C(n-d+1, i)(md - Σ(j-1)C_j)
/// + Σ_j C_j Σ_{k=2..j} C(n-d+k, i)`, placed at degree `i + d`.
pub fn betti_closed_form(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let p = cluster_profile(ideal)?;
    let (n, d) = (p.n as i64, p.d as i64);
    let base = p.base_count();
    let mut table = BettiTable::new();
    for i in 0..=(n + p.m as i64) {
        let mut v = binomial(i + d - 1, d - 1) * binomial(n, i + d);
        v += binomial(n - d + 1, i) * base;
        for (&j, &c) in &p.clusters {
            v += c * (2..=j as i64).map(|k| binomial(n - d + k, i)).sum::<u64>();
        }
        table.add(i as usize, (i + d) as u64, v);
    }
    Ok(table)
}

/// Projective dimension of `LIN(I)` and depth of `R / LIN(I)`, where `R` has
/// the `n + m` variables: `pd = n - d + N` and `depth = m + d - N - 1`.
pub fn pd_and_depth(ideal: &MonomialIdeal) -> Result<(u64, u64)> {
    let p = cluster_profile(ideal)?;
    let big_n = p.max_cluster();
    Ok((p.n as u64 - p.d + big_n, p.m as u64 + p.d - big_n - 1))
}

fn check_veronese(n: u64, d: u64) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::domain(format!(
            "squarefree Veronese needs 1 <= d <= n, got n={n}, d={d}"
        )));
    }
    Ok(())
}

/// `β_i` of the squarefree Veronese ideal: `C(i+d-1, d-1) C(n, i+d)`.
pub fn veronese_betti(n: u64, d: u64, i: u64) -> Result<u64> {
    check_veronese(n, d)?;
    let (n, d, i) = (n as i64, d as i64, i as i64);
    Ok(binomial(i + d - 1, d - 1) * binomial(n, i + d))
}

/// For the squarefree Veronese in its decreasing lex order, the number of
/// generators with each colon count `r`: `r -> C(r+d-1, d-1)` for `r` in
/// `0..=n-d`.
pub fn complete_part_rk_histogram(n: u64, d: u64) -> Result<BTreeMap<u64, u64>> {
    check_veronese(n, d)?;
    Ok((0..=n - d)
        .map(|r| (r, binomial((r + d - 1) as i64, (d - 1) as i64)))
        .collect())
}

/// Colon count of a squarefree generator in the decreasing lex order of the
/// squarefree Veronese: its largest variable index (counting from 1) minus `d`.
pub fn veronese_r(u: &Monomial) -> u64 {
    let top = u.support().last().map_or(0, |&k| k as u64 + 1);
    top - u.degree()
}
