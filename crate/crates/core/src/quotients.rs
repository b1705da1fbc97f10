//! Colon sequences, the linear-quotients test, and Betti numbers read off
//! from quotient counts.

use std::collections::HashSet;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, ExponentBound, MonomialIdeal};
use crate::monomial::Monomial;
use crate::scalar::binomial;

/// A generator order together with its colon sequence.
///
/// Position `k` stores the minimal generators of `(g_1, ..., g_{k-1}) : g_k`
/// and their count `r_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGenerators {
    ideal: MonomialIdeal,
    order: Vec<usize>,
    colon_gens: Vec<Vec<Monomial>>,
}

fn check_permutation(order: &[usize], m: usize) -> Result<()> {
    if order.len() != m {
        return Err(Error::argument(format!(
            "order has {} entries, ideal has {} generators",
            order.len(),
            m
        )));
    }
    let mut seen = vec![false; m];
    for &k in order {
        if k >= m || seen[k] {
            return Err(Error::argument(format!(
                "order is not a permutation: {order:?}"
            )));
        }
        seen[k] = true;
    }
    Ok(())
}

/// Minimal generators of `(earlier) : g`.
fn colon_of(earlier: &[&Monomial], g: &Monomial) -> Vec<Monomial> {
    minimal_generators(earlier.iter().map(|f| f.div_by_gcd(g)).collect())
}

/// Computes the colon sequence of `ideal` with generators taken in `order`
/// (indices into the canonical generator list).
pub fn colon_sequence(ideal: &MonomialIdeal, order: &[usize]) -> Result<OrderedGenerators> {
    if ideal.is_zero() {
        return Err(Error::domain("colon sequence of the zero ideal"));
    }
    check_permutation(order, ideal.num_gens())?;
    let gens = ideal.gens();
    let colon_gens = (0..order.len())
        .map(|k| {
            let earlier: Vec<&Monomial> = order[..k].iter().map(|&t| &gens[t]).collect();
            colon_of(&earlier, &gens[order[k]])
        })
        .collect();
    Ok(OrderedGenerators {
        ideal: ideal.clone(),
        order: order.to_vec(),
        colon_gens,
    })
}

/// Position of each monomial of `sequence` in the canonical generator list.
pub fn order_of(ideal: &MonomialIdeal, sequence: &[Monomial]) -> Result<Vec<usize>> {
    sequence
        .iter()
        .map(|u| {
            ideal
                .gens()
                .iter()
                .position(|g| g == u)
                .ok_or_else(|| Error::argument("monomial is not a minimal generator"))
        })
        .collect()
}

impl OrderedGenerators {
    /// Colon sequence for generators listed explicitly as monomials.
    pub fn from_sequence(ideal: &MonomialIdeal, sequence: &[Monomial]) -> Result<Self> {
        colon_sequence(ideal, &order_of(ideal, sequence)?)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Generators in sequence order.
    pub fn generators(&self) -> Vec<&Monomial> {
        self.order.iter().map(|&k| &self.ideal.gens()[k]).collect()
    }

    /// Minimal generators of the `k`-th colon ideal (0-based position).
    pub fn colon_gens(&self, k: usize) -> &[Monomial] {
        &self.colon_gens[k]
    }

    pub fn colon_ideal(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.ideal.ring().clone(), self.colon_gens[k].clone())
            .expect("colon generators live in the ideal's ring")
    }

    /// `r_k` for every position.
    pub fn r(&self) -> Vec<usize> {
        self.colon_gens.iter().map(Vec::len).collect()
    }

    /// True iff every colon ideal is generated by variables.
    pub fn has_linear_quotients(&self) -> bool {
        self.colon_gens
            .iter()
            .all(|c| c.iter().all(|u| u.degree() == 1))
    }

    /// Position of the first colon ideal that is not generated by variables.
    pub fn first_failure(&self) -> Option<usize> {
        self.colon_gens
            .iter()
            .position(|c| c.iter().any(|u| u.degree() != 1))
    }

    /// Keeps the generators admitted by `v`, in their induced relative order.
    /// If none survive the result is the empty sequence of the zero ideal.
    pub fn crop(&self, v: &ExponentBound) -> Result<OrderedGenerators> {
        let cropped = self.ideal.crop(v)?;
        if cropped.is_zero() {
            return Ok(OrderedGenerators {
                ideal: cropped,
                order: vec![],
                colon_gens: vec![],
            });
        }
        let seq: Vec<Monomial> = self
            .generators()
            .into_iter()
            .filter(|g| v.admits(g))
            .cloned()
            .collect();
        OrderedGenerators::from_sequence(&cropped, &seq)
    }
}

/// Linear quotients test via colon ideals.
pub fn has_linear_quotients(ideal: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    Ok(colon_sequence(ideal, order)?.has_linear_quotients())
}

/// Linear quotients test via the pairwise witness criterion: for all `j < i`
/// there are `k < i` and a variable `x_l` with `u_k / gcd(u_k, u_i) = x_l`
/// and `x_l | u_j / gcd(u_j, u_i)`.
pub fn has_linear_quotients_pairwise(ideal: &MonomialIdeal, order: &[usize]) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::domain("linear quotients of the zero ideal"));
    }
    check_permutation(order, ideal.num_gens())?;
    let u: Vec<&Monomial> = order.iter().map(|&k| &ideal.gens()[k]).collect();
    for i in 1..u.len() {
        let variables: Vec<usize> = (0..i)
            .filter_map(|k| {
                let q = u[k].div_by_gcd(u[i]);
                (q.degree() == 1).then(|| q.support()[0])
            })
            .collect();
        for j in 0..i {
            let q = u[j].div_by_gcd(u[i]);
            if !variables.iter().any(|&l| q.exp(l) > 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `β_i = Σ_k C(r_k, i)` placed at degree `i + d`.
pub fn betti_from_quotients(og: &OrderedGenerators) -> Result<BettiTable> {
    let d = og
        .ideal
        .generating_degree()
        .ok_or_else(|| Error::domain("quotient formula needs an equigenerated ideal"))?;
    if !og.has_linear_quotients() {
        return Err(Error::domain(
            "quotient formula needs an order with linear quotients",
        ));
    }
    let mut table = BettiTable::new();
    for r in og.r() {
        for i in 0..=r {
            table.add(i, i as u64 + d, binomial(r as i64, i as i64));
        }
    }
    Ok(table)
}

/// Outcome of [`find_linear_quotient_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSearch {
    /// The lexicographically least order with linear quotients.
    Found(Vec<usize>),
    /// The search was exhaustive and no order works.
    NoneExists,
    /// The node budget ran out first.
    Inconclusive,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// Depth-first search for an order with linear quotients.
///
/// Whether a generator may come next depends only on the set already placed,
/// so sets with no completion are remembered and never expanded twice. With
/// candidates tried in increasing index order the first success is the
/// lexicographically least one.
pub fn find_linear_quotient_order(ideal: &MonomialIdeal, budget: u64) -> Result<OrderSearch> {
    if ideal.is_zero() {
        return Err(Error::domain("order search on the zero ideal"));
    }
    let m = ideal.num_gens();
    let mut search = Search {
        gens: ideal.gens(),
        dead: HashSet::new(),
        used: vec![false; m],
        prefix: Vec::with_capacity(m),
        nodes: 0,
        budget,
    };
    Ok(match search.extend() {
        Some(true) => OrderSearch::Found(search.prefix),
        Some(false) => OrderSearch::NoneExists,
        None => OrderSearch::Inconclusive,
    })
}

struct Search<'a> {
    gens: &'a [Monomial],
    dead: HashSet<Vec<bool>>,
    used: Vec<bool>,
    prefix: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn can_follow(&self, c: usize) -> bool {
        let earlier: Vec<&Monomial> = self.prefix.iter().map(|&t| &self.gens[t]).collect();
        colon_of(&earlier, &self.gens[c])
            .iter()
            .all(|u| u.degree() == 1)
    }

    /// `Some(true)` on success (prefix holds the order), `Some(false)` when
    /// no completion exists, `None` when the budget is exhausted.
    fn extend(&mut self) -> Option<bool> {
        if self.prefix.len() == self.gens.len() {
            return Some(true);
        }
        if self.dead.contains(&self.used) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for c in 0..self.gens.len() {
            if self.used[c] || !self.can_follow(c) {
                continue;
            }
            self.used[c] = true;
            self.prefix.push(c);
            match self.extend() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.prefix.pop();
            self.used[c] = false;
        }
        self.dead.insert(self.used.clone());
        Some(false)
    }
}
