//! Linearization of equigenerated monomial ideals.
//!
//! For `I` generated in degree `d` by `f_1 > ... > f_m` (decreasing lex), the
//! linearization lives in the ring extended by `y_1, ..., y_m` and consists of
//!
//! * the *complete part*: all degree-`d` monomials in the original variables
//!   with `a_i <= M_i` (the largest exponent of `x_i` in `G(I)`), or with
//!   `a_i <= M` for the starred variant, where `M` is the overall largest
//!   exponent;
//! * the *last part*: `f_j * y_j / x_k` for every `x_k` dividing `f_j`.
//!
//! Taking the complete part in decreasing lex order, followed by the last part
//! by increasing `j` and then increasing `k`, gives an order with linear
//! quotients, so the result has a `d`-linear resolution.

use std::collections::HashSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::{bounded_monomials, minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;
use crate::quotients::OrderedGenerators;
use crate::ring::{Ring, RingContext, VarRole, Variable};
use crate::scalar::binomial;

/// Which exponent bound the complete part uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinMode {
    /// Per-variable bounds `M_i`.
    Lin,
    /// The uniform bound `M`.
    Star,
}

/// How the added `y` variables are named.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum YIndexing {
    /// `y1, ..., ym`, following the decreasing lex order of `G(I)`.
    Positional,
    /// `y[<generator>]`, which makes the construction compatible with
    /// inclusions of ideals.
    ByMonomial,
}

/// A linearized ideal together with the data needed to read it back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearized {
    ideal: MonomialIdeal,
    source: MonomialIdeal,
    mode: LinMode,
    y_indexing: YIndexing,
    sequence: Vec<Monomial>,
    complete_len: usize,
    degree: u64,
}

fn positional_names(ring: &RingContext, m: usize) -> Vec<String> {
    let mut stem = "y".to_string();
    while (1..=m).any(|j| ring.index_of(&format!("{stem}{j}")).is_some()) {
        stem.push('y');
    }
    (1..=m).map(|j| format!("{stem}{j}")).collect()
}

/// Checks that `ideal` can be linearized and returns its generating degree.
fn linearizable_degree(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("linearization needs a nonzero proper ideal"));
    }
    if !ideal.ring().indices_with_role(VarRole::Y).is_empty() {
        return Err(Error::domain(
            "linearization input must not contain y-tagged variables",
        ));
    }
    ideal.generating_degree().ok_or_else(|| {
        Error::domain("ideal is not equigenerated; use the general linearization instead")
    })
}

/// Linearizes `source` with the given bound and `y` naming.
pub fn linearize(
    source: &MonomialIdeal,
    mode: LinMode,
    y_indexing: YIndexing,
) -> Result<Linearized> {
    let d = linearizable_degree(source)?;
    let ring = source.ring();
    let n = ring.len();
    let m = source.num_gens();
    let names = match y_indexing {
        YIndexing::Positional => positional_names(ring, m),
        YIndexing::ByMonomial => source
            .gens()
            .iter()
            .map(|f| format!("y[{}]", f.display(ring)))
            .collect(),
    };
    let ext = ring.extended(names.into_iter().map(|name| Variable {
        name,
        role: VarRole::Y,
    }))?;

    let per_var = source.max_exponent_vector()?;
    let overall = source.max_exponent();
    let mut bounds: Vec<u64> = (0..n)
        .map(|i| match mode {
            LinMode::Lin => per_var.0[i] as u64,
            LinMode::Star => overall as u64,
        })
        .collect();
    bounds.resize(n + m, 0);
    let mut sequence = bounded_monomials(&bounds, d);
    let complete_len = sequence.len();

    for (j, f) in source.gens().iter().enumerate() {
        let fy = f.padded(n + m).mul_var(n + j, 1)?;
        for k in f.support() {
            sequence.push(fy.div_var(k)?);
        }
    }
    let ideal = MonomialIdeal::from_minimal(ext, sequence.clone());
    Ok(Linearized {
        ideal,
        source: source.clone(),
        mode,
        y_indexing,
        sequence,
        complete_len,
        degree: d,
    })
}

/// `Lin(I)` with positional `y` names.
pub fn lin(source: &MonomialIdeal) -> Result<Linearized> {
    linearize(source, LinMode::Lin, YIndexing::Positional)
}

/// `LIN(I)` with positional `y` names.
pub fn star_lin(source: &MonomialIdeal) -> Result<Linearized> {
    linearize(source, LinMode::Star, YIndexing::Positional)
}

impl Linearized {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn mode(&self) -> LinMode {
        self.mode
    }

    pub fn y_indexing(&self) -> YIndexing {
        self.y_indexing
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    /// Number of variables of the source ring.
    pub fn x_count(&self) -> usize {
        self.source.ring().len()
    }

    /// All generators in the canonical linear-quotients order.
    pub fn sequence(&self) -> &[Monomial] {
        &self.sequence
    }

    pub fn complete_range(&self) -> Range<usize> {
        0..self.complete_len
    }

    pub fn last_range(&self) -> Range<usize> {
        self.complete_len..self.sequence.len()
    }

    pub fn complete_part(&self) -> &[Monomial] {
        &self.sequence[self.complete_range()]
    }

    pub fn last_part(&self) -> &[Monomial] {
        &self.sequence[self.last_range()]
    }

    /// Ring index of `y_j` paired with the source generator `f_j`.
    pub fn source_map(&self) -> Vec<(usize, &Monomial)> {
        let n = self.x_count();
        self.source
            .gens()
            .iter()
            .enumerate()
            .map(|(j, f)| (n + j, f))
            .collect()
    }

    /// The canonical order with its colon sequence.
    pub fn canonical_order(&self) -> Result<OrderedGenerators> {
        OrderedGenerators::from_sequence(&self.ideal, &self.sequence)
    }

    pub fn part_ideal(&self, range: Range<usize>) -> MonomialIdeal {
        MonomialIdeal::from_minimal(self.ring().clone(), self.sequence[range].to_vec())
    }

    pub fn to_json(&self) -> Value {
        let ring = self.ring();
        let source_ring = self.source.ring();
        let source_map: Vec<Value> = self
            .source_map()
            .into_iter()
            .map(|(y, f)| json!({ "y": ring.name(y), "generator": f.display(source_ring).to_string() }))
            .collect();
        json!({
            "mode": self.mode,
            "y_indexing": self.y_indexing,
            "degree": self.degree,
            "ideal": self.ideal.to_json(),
            "sequence": self.sequence,
            "complete_part": [0, self.complete_len],
            "last_part": [self.complete_len, self.sequence.len()],
            "source_map": source_map,
        })
    }
}

pub fn canonical_order(l: &Linearized) -> Result<OrderedGenerators> {
    l.canonical_order()
}

/// Recovers `I` from a linearization.
pub fn retrieve_source(l: &Linearized) -> Result<MonomialIdeal> {
    retrieve_from_ideal(l.ideal(), l.mode())
}

/// Recovers `I` from the generators of its linearization alone.
///
/// For `y_j` occurring in more than one last-part generator, `f_j` is the lcm
/// of their `x`-parts. A single occurrence means `f_j = x_k^d`, and the
/// `x`-part `x_k^(d-1)` names `k` unless `d = 1`. In that case every source
/// generator is a variable, the variables of the complete part are exactly
/// those generators, and decreasing lex order pairs them with the `y`s by
/// increasing index.
pub fn retrieve_from_ideal(ideal: &MonomialIdeal, mode: LinMode) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    let ys = ring.indices_with_role(VarRole::Y);
    let n = ring.len() - ys.len();
    if ys.is_empty() || ys.iter().enumerate().any(|(t, &y)| y != n + t) {
        return Err(Error::domain(
            "expected a ring whose last variables are the y-variables",
        ));
    }
    let d = ideal
        .generating_degree()
        .ok_or_else(|| Error::domain("a linearization is equigenerated"))?;
    let mut parts: Vec<Vec<Monomial>> = vec![Vec::new(); ys.len()];
    let mut complete_vars = Vec::new();
    for g in ideal.gens() {
        let yexp = &g.exponents()[n..];
        let x_part = Monomial::new(g.exponents()[..n].to_vec());
        match yexp.iter().filter(|&&e| e > 0).count() {
            0 => {
                if d == 1 {
                    complete_vars.push(x_part.support()[0]);
                }
            }
            1 => {
                let t = yexp.iter().position(|&e| e > 0).expect("one y present");
                if yexp[t] != 1 {
                    return Err(Error::domain("y-variable with exponent above 1"));
                }
                parts[t].push(x_part);
            }
            _ => return Err(Error::domain("generator with several y-variables")),
        }
    }
    complete_vars.sort_unstable();

    let mut gens = vec![None; ys.len()];
    let mut pending = Vec::new();
    for (t, p) in parts.iter().enumerate() {
        gens[t] = match p.len() {
            0 => {
                return Err(Error::domain(format!(
                    "y-variable `{}` does not occur",
                    ring.name(ys[t])
                )))
            }
            1 if p[0].is_one() => {
                pending.push(t);
                None
            }
            1 => {
                let support = p[0].support();
                if support.len() != 1 {
                    return Err(Error::domain("malformed last part"));
                }
                Some(p[0].mul_var(support[0], 1)?)
            }
            _ => Some(p.iter().skip(1).fold(p[0].clone(), |acc, u| acc.lcm(u))),
        };
    }
    if !pending.is_empty() {
        if complete_vars.len() != pending.len() {
            let why = if mode == LinMode::Star {
                "degree-1 starred linearization does not determine its source"
            } else {
                "malformed degree-1 linearization"
            };
            return Err(Error::domain(why));
        }
        for (&t, &k) in pending.iter().zip(&complete_vars) {
            gens[t] = Some(Monomial::var(n, k));
        }
    }
    let source_ring = RingContext::new(ring.variables()[..n].to_vec())?;
    MonomialIdeal::new(
        source_ring,
        gens.into_iter().map(|g| g.expect("filled")).collect(),
    )
}

/// Exchange property: for `u, v` in `G(J)` and `i` with `u_i > v_i` there is
/// `j` with `u_j < v_j` and `u x_j / x_i` in `G(J)`.
pub fn is_polymatroidal(j: &MonomialIdeal) -> Result<bool> {
    if j.is_zero() {
        return Err(Error::domain("polymatroidality of the zero ideal"));
    }
    if !j.is_equigenerated() {
        return Err(Error::domain(
            "polymatroidality needs an equigenerated ideal",
        ));
    }
    let gens: HashSet<&Monomial> = j.gens().iter().collect();
    let n = j.ring().len();
    for u in j.gens() {
        for v in j.gens() {
            for i in 0..n {
                if u.exp(i) <= v.exp(i) {
                    continue;
                }
                let lowered = u.div_var(i)?;
                let ok = (0..n).any(|k| {
                    u.exp(k) < v.exp(k)
                        && lowered
                            .mul_var(k, 1)
                            .map(|w| gens.contains(&w))
                            .unwrap_or(false)
                });
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The radical of `LIN(I)` for a non-squarefree equigenerated `I`.
///
/// Writing `d = aM + b` with `0 <= b < M`, the radical is generated by the
/// squarefree monomials of degree `a + sign(b)` in the original variables
/// together with `sqrt(f_j / x_k) y_j` for each generator `f_j` in which
/// `x_k` is the only variable of exponent 1 and every other variable of the
/// support has exponent `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalStarLin {
    pub ideal: MonomialIdeal,
    pub a: u64,
    pub b: u64,
    /// `(j, k)`: generator index in `G(I)` and the variable of exponent 1.
    pub pathological: Vec<(usize, usize)>,
    /// Squarefree part in decreasing lex order, then the pathological part
    /// by increasing `j`.
    pub sequence: Vec<Monomial>,
    source: MonomialIdeal,
}

impl RadicalStarLin {
    /// Degree `a + sign(b)` of every generator.
    pub fn degree(&self) -> u64 {
        self.a + u64::from(self.b > 0)
    }

    pub fn ordered(&self) -> Result<OrderedGenerators> {
        OrderedGenerators::from_sequence(&self.ideal, &self.sequence)
    }

    /// `t_l`: how many earlier pathological pairs have the same quotient `f/x`.
    pub fn t_values(&self) -> Vec<usize> {
        let quotients: Vec<Monomial> = self
            .pathological
            .iter()
            .map(|&(j, k)| {
                self.source.gens()[j]
                    .div_var(k)
                    .expect("pathological variable divides")
            })
            .collect();
        (0..quotients.len())
            .map(|l| {
                quotients[..l]
                    .iter()
                    .filter(|q| **q == quotients[l])
                    .count()
            })
            .collect()
    }
}

pub fn radical_star_lin(source: &MonomialIdeal) -> Result<RadicalStarLin> {
    let d = linearizable_degree(source)?;
    if source.is_squarefree() {
        return Err(Error::domain(
            "radical formula assumes a non-squarefree ideal; squarefree ideals are handled by the cluster formulas",
        ));
    }
    let big_m = source.max_exponent() as u64;
    let (a, b) = (d / big_m, d % big_m);
    if a < 1 || big_m < 2 {
        return Err(Error::domain("radical formula needs a >= 1 and M >= 2"));
    }
    let l = star_lin(source)?;
    let n = l.x_count();
    let m = source.num_gens();
    let s = a + u64::from(b > 0);
    let mut bounds = vec![1u64; n];
    bounds.resize(n + m, 0);
    let mut sequence = bounded_monomials(&bounds, s);
    let mut pathological = Vec::new();
    for (j, f) in source.gens().iter().enumerate() {
        let support = f.support();
        let ones: Vec<usize> = support.iter().copied().filter(|&k| f.exp(k) == 1).collect();
        if ones.len() == 1
            && support
                .iter()
                .all(|&k| k == ones[0] || f.exp(k) as u64 == big_m)
        {
            let k = ones[0];
            pathological.push((j, k));
            sequence.push(f.div_var(k)?.radical().padded(n + m).mul_var(n + j, 1)?);
        }
    }
    Ok(RadicalStarLin {
        ideal: MonomialIdeal::new(l.ring().clone(), sequence.clone())?,
        a,
        b,
        pathological,
        sequence,
        source: source.clone(),
    })
}

/// `β_i = C(i+s-1, s-1) C(n, i+s) + Σ_l C(n-a+t_l, i)` with `s = a + sign(b)`.
pub fn radical_star_lin_betti(source: &MonomialIdeal) -> Result<BettiTable> {
    let r = radical_star_lin(source)?;
    let n = source.ring().len() as i64;
    let s = r.degree() as i64;
    let a = r.a as i64;
    let t = r.t_values();
    let mut table = BettiTable::new();
    for i in 0..=n {
        let mut v = binomial(i + s - 1, s - 1) * binomial(n, i + s);
        v += t
            .iter()
            .map(|&tl| binomial(n - a + tl as i64, i))
            .sum::<u64>();
        table.add(i as usize, i as u64 + s as u64, v);
    }
    Ok(table)
}

/// Result of comparing the linearizations of `I`, `J` and `I + J`, all with
/// `y` variables indexed by generator so they share one ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumCompatibility {
    /// `Lin(I) + Lin(J) ⊆ Lin(I+J)`.
    pub lin_contained: bool,
    pub lin_equal: bool,
    /// `LIN(I) + LIN(J) ⊆ LIN(I+J)`.
    pub star_contained: bool,
    pub star_equal: bool,
}

impl SumCompatibility {
    pub fn holds(&self) -> bool {
        self.lin_contained && self.star_contained
    }
}

/// Re-expresses `ideal` in `target`, matching variables by name.
fn rename_into(ideal: &MonomialIdeal, target: &Ring) -> Result<MonomialIdeal> {
    let map: Vec<usize> = ideal
        .ring()
        .variables()
        .iter()
        .map(|v| {
            target
                .index_of(&v.name)
                .ok_or_else(|| Error::Context(format!("variable `{}` missing", v.name)))
        })
        .collect::<Result<_>>()?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0; target.len()];
            for (i, &t) in map.iter().enumerate() {
                e[t] = g.exp(i);
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(target.clone(), gens)
}

pub fn sum_compatibility_check(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<SumCompatibility> {
    RingContext::ensure_same(i.ring(), j.ring())?;
    let (di, dj) = (linearizable_degree(i)?, linearizable_degree(j)?);
    if di != dj {
        return Err(Error::domain(format!(
            "ideals generated in different degrees {di} and {dj}"
        )));
    }
    let sum = i.sum(j)?;
    let universe = minimal_generators(i.gens().iter().chain(j.gens()).cloned().collect());
    let ring = i.ring().extended(universe.iter().map(|u| Variable {
        name: format!("y[{}]", u.display(i.ring())),
        role: VarRole::Y,
    }))?;
    let common = |ideal: &MonomialIdeal, mode| -> Result<MonomialIdeal> {
        rename_into(
            linearize(ideal, mode, YIndexing::ByMonomial)?.ideal(),
            &ring,
        )
    };
    let mut out = [(false, false); 2];
    for (slot, mode) in [LinMode::Lin, LinMode::Star].into_iter().enumerate() {
        let parts = common(i, mode)?.sum(&common(j, mode)?)?;
        let whole = common(&sum, mode)?;
        out[slot] = (whole.contains_ideal(&parts), whole == parts);
    }
    Ok(SumCompatibility {
        lin_contained: out[0].0,
        lin_equal: out[0].1,
        star_contained: out[1].0,
        star_equal: out[1].1,
    })
}
