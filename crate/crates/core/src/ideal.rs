//! Monomial ideals stored by their minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Cursor, Exp, Monomial};
use crate::ring::{Ring, RingContext, VarRole, Variable};

/// Componentwise exponent bound used for cropping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentBound(pub Vec<Exp>);

impl ExponentBound {
    pub fn uniform(nvars: usize, bound: Exp) -> Self {
        ExponentBound(vec![bound; nvars])
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.exponents().iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &ExponentBound) -> ExponentBound {
        ExponentBound(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }
}

/// A monomial ideal, represented by its unique minimal generating set.
///
/// Generators are kept sorted in decreasing lex order, so two ideals are
/// equal iff their rings and generator lists are equal. The empty list is the
/// zero ideal; the single generator `1` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Returns the divisibility-minimal elements of `gens`, deduplicated and
/// sorted in decreasing lex order.
pub(crate) fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.len()) {
            return Err(Error::Context(format!(
                "generator has {} exponents, ring has {} variables",
                g.nvars(),
                ring.len()
            )));
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimal_generators(gens),
        })
    }

    /// Builds an ideal from generators already known to be minimal; only the
    /// canonical sort is applied.
    pub(crate) fn from_minimal(ring: Ring, mut gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == ring.len()));
        gens.sort_by(|a, b| b.cmp(a));
        debug_assert!(gens.windows(2).all(|w| w[0] != w[1]));
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: Ring) -> Self {
        let n = ring.len();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators in decreasing lex order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        RingContext::ensure_same(&self.ring, &other.ring)
    }

    /// `u ∈ I` iff some minimal generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `J ⊆ I`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I : u`, generated by `f / gcd(f, u)` over the generators `f`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.nvars() != self.ring.len() {
            return Err(Error::Context(
                "colon by a monomial from another ring".into(),
            ));
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_generators(self.gens.iter().map(|f| f.div_by_gcd(u)).collect()),
        })
    }

    /// Keeps the generators whose exponent vector lies componentwise below `v`.
    pub fn crop(&self, v: &ExponentBound) -> Result<MonomialIdeal> {
        if v.0.len() != self.ring.len() {
            return Err(Error::Context(
                "bound length does not match the ring".into(),
            ));
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: self.gens.iter().filter(|g| v.admits(g)).cloned().collect(),
        })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_generators(gens),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g)?);
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_generators(gens),
        })
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.lcm(g));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_generators(gens),
        })
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_generators(self.gens.iter().map(Monomial::radical).collect()),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Alexander dual `m^{σ_1} ∩ ... ∩ m^{σ_s}` of a squarefree ideal.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::domain(
                "Alexander dual needs a nonzero proper squarefree ideal",
            ));
        }
        if !self.is_squarefree() {
            return Err(Error::domain("Alexander dual of a non-squarefree ideal"));
        }
        let n = self.ring.len();
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for g in &self.gens {
            let prime = MonomialIdeal::from_minimal(
                self.ring.clone(),
                g.support()
                    .into_iter()
                    .map(|i| Monomial::var(n, i))
                    .collect(),
            );
            acc = acc.intersection(&prime)?;
        }
        Ok(acc)
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponent_vector(&self) -> Result<ExponentBound> {
        if self.is_zero() {
            return Err(Error::domain("max exponent vector of the zero ideal"));
        }
        let mut v = vec![0; self.ring.len()];
        for g in &self.gens {
            for (b, &e) in v.iter_mut().zip(g.exponents()) {
                *b = (*b).max(e);
            }
        }
        Ok(ExponentBound(v))
    }

    /// Largest exponent over all generators (`M`).
    pub fn max_exponent(&self) -> Exp {
        self.gens
            .iter()
            .map(Monomial::max_exponent)
            .max()
            .unwrap_or(0)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// The common generator degree, if the ideal is nonzero and equigenerated.
    pub fn generating_degree(&self) -> Option<u64> {
        if self.is_zero() || !self.is_equigenerated() {
            None
        } else {
            Some(self.gens[0].degree())
        }
    }

    /// Same generators, padded with zero exponents into a larger ring whose
    /// first variables coincide with this ring's.
    pub fn embed(&self, ring: Ring) -> Result<MonomialIdeal> {
        if ring.len() < self.ring.len()
            || ring.variables()[..self.ring.len()] != *self.ring.variables()
        {
            return Err(Error::Context(format!(
                "cannot embed {} into {}",
                self.ring, ring
            )));
        }
        let n = ring.len();
        Ok(MonomialIdeal::from_minimal(
            ring,
            self.gens.iter().map(|g| g.padded(n)).collect(),
        ))
    }

    pub fn display(&self) -> IdealDisplay<'_> {
        IdealDisplay(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson {
            variables: self.ring.variables().to_vec(),
            generators: self.gens.clone(),
        })
        .expect("ideal serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MonomialIdeal> {
        let j: IdealJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse(0, format!("ideal JSON: {e}")))?;
        let ring = RingContext::new(j.variables)?;
        MonomialIdeal::new(ring, j.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    variables: Vec<Variable>,
    generators: Vec<Monomial>,
}

/// All degree-`d` monomials in the `x`-tagged variables of `ring` with
/// exponents bounded by `v`, in decreasing lex order.
pub fn power_complete(ring: &Ring, d: u64, v: &ExponentBound) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::domain("power_complete needs degree at least 1"));
    }
    if v.0.len() != ring.len() {
        return Err(Error::Context(
            "bound length does not match the ring".into(),
        ));
    }
    let bounds: Vec<u64> = (0..ring.len())
        .map(|i| {
            if ring.role(i) == VarRole::X {
                v.0[i] as u64
            } else {
                0
            }
        })
        .collect();
    Ok(MonomialIdeal {
        ring: ring.clone(),
        gens: bounded_monomials(&bounds, d),
    })
}

/// Degree-`d` exponent vectors bounded componentwise by `bounds`, in
/// decreasing lex order.
pub(crate) fn bounded_monomials(bounds: &[u64], d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0 as Exp; bounds.len()];
    enumerate_bounded(bounds, 0, d, &mut cur, &mut out);
    out
}

/// Emits exponent vectors of total degree `remaining` over positions `i..`,
/// largest exponents first so the output is in decreasing lex order.
fn enumerate_bounded(
    bounds: &[u64],
    i: usize,
    remaining: u64,
    cur: &mut Vec<Exp>,
    out: &mut Vec<Monomial>,
) {
    if i == bounds.len() {
        if remaining == 0 {
            out.push(Monomial::new(cur.clone()));
        }
        return;
    }
    let rest_capacity: u64 = bounds[i + 1..].iter().sum();
    let hi = bounds[i].min(remaining);
    let lo = remaining.saturating_sub(rest_capacity);
    if lo > hi {
        return;
    }
    for e in (lo..=hi).rev() {
        cur[i] = e as Exp;
        enumerate_bounded(bounds, i + 1, remaining - e, cur, out);
    }
    cur[i] = 0;
}

/// Parses `term ("," term)*`, optionally wrapped in parentheses. `0` or `()`
/// denotes the zero ideal.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<MonomialIdeal> {
    parse_ideal_at(text, ring, 0)
}

pub(crate) fn parse_ideal_at(text: &str, ring: &Ring, base: usize) -> Result<MonomialIdeal> {
    let mut c = Cursor::new(text, base);
    let parens = c.eat('(');
    let mut gens = Vec::new();
    c.skip_ws();
    let empty = if parens {
        c.peek() == Some(')')
    } else {
        c.at_end()
    };
    if c.peek() == Some('0') {
        c.pos += 1;
    } else if !empty {
        loop {
            gens.push(c.monomial(ring)?);
            if !c.eat(',') {
                break;
            }
        }
    }
    if parens && !c.eat(')') {
        return Err(c.err("expected `)`"));
    }
    if !c.at_end() {
        return Err(c.err("unexpected input after ideal"));
    }
    MonomialIdeal::new(ring.clone(), gens)
}

pub struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.0.is_zero() {
            f.write_str("0")?;
        }
        for (i, g) in self.0.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.0.ring))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display().fmt(f)
    }
}

/// Convenience constructor used throughout the tests and the CLI.
pub fn ideal(ring: &Ring, text: &str) -> Result<MonomialIdeal> {
    parse_ideal(text, ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Ring {
        RingContext::standard(n)
    }

    #[test]
    fn minimalize_examples() {
        let ring = r(4);
        let i = ideal(&ring, "x1^2*x2, x1*x2*x3*x4, x1*x2").unwrap();
        assert_eq!(i.to_string(), "(x1*x2)");
        let z = ideal(&ring, "").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "(0)");
    }

    #[test]
    fn intersection_example_keeps_both() {
        let ring = RingContext::from_names(&["x1", "x2", "x3", "x4", "z"]).unwrap();
        let i = ideal(&ring, "x1^2*x2*z, x1*x2*x3*x4").unwrap();
        assert_eq!(i.num_gens(), 2);
    }

    #[test]
    fn colon_examples() {
        let ring = r(5);
        let i = ideal(&ring, "x1*x2*x3").unwrap();
        let u = ideal(&ring, "x3*x4*x5").unwrap().gens()[0].clone();
        assert_eq!(i.colon(&u).unwrap().to_string(), "(x1*x2)");
        let u = ideal(&ring, "x2*x3*x4").unwrap().gens()[0].clone();
        assert_eq!(i.colon(&u).unwrap().to_string(), "(x1)");
        assert_eq!(i.colon(&Monomial::one(5)).unwrap(), i);
    }

    #[test]
    fn crop_examples() {
        let ring = RingContext::from_names(&["x", "y", "z"]).unwrap();
        let i = ideal(&ring, "x*y^2, x*y*z, x*z^2").unwrap();
        let c = i.crop(&ExponentBound(vec![1, 2, 1])).unwrap();
        assert_eq!(c.to_string(), "(x*y^2, x*y*z)");
        assert_eq!(i.crop(&i.max_exponent_vector().unwrap()).unwrap(), i);

        let ring = r(3);
        let cube = power_complete(&ring, 3, &ExponentBound::uniform(3, 3)).unwrap();
        assert_eq!(cube.num_gens(), 10);
        let cropped = cube.crop(&ExponentBound(vec![2, 2, 2])).unwrap();
        assert_eq!(cropped.num_gens(), 7);
        assert!(cropped.gens().iter().all(|g| g.max_exponent() < 3));
    }

    #[test]
    fn power_complete_examples() {
        let ring = r(5);
        let p = power_complete(&ring, 3, &ExponentBound::uniform(5, 1)).unwrap();
        assert_eq!(p.num_gens(), 10);
        assert!(p.gens().windows(2).all(|w| w[0] > w[1]));
        let ring = r(3);
        let p = power_complete(&ring, 3, &ExponentBound(vec![2, 1, 1])).unwrap();
        assert_eq!(p.to_string(), "(x1^2*x2, x1^2*x3, x1*x2*x3)");
        let ring = r(1);
        let p = power_complete(&ring, 2, &ExponentBound(vec![2])).unwrap();
        assert_eq!(p.to_string(), "(x1^2)");
        assert!(power_complete(&ring, 0, &ExponentBound(vec![2])).is_err());
    }

    #[test]
    fn sum_product_intersection() {
        let ring = r(4);
        let i = ideal(&ring, "x1^2*x2, x2*x3*x4").unwrap();
        let j = ideal(&ring, "x1*x2").unwrap();
        assert_eq!(
            i.intersection(&j).unwrap().to_string(),
            "(x1^2*x2, x1*x2*x3*x4)"
        );
        assert_eq!(i.sum(&MonomialIdeal::zero(ring.clone())).unwrap(), i);
        let a = ideal(&ring, "x1").unwrap();
        let b = ideal(&ring, "x2").unwrap();
        assert_eq!(a.product(&b).unwrap().to_string(), "(x1*x2)");
        let other = ideal(&r(3), "x1").unwrap();
        assert!(matches!(i.sum(&other), Err(Error::Context(_))));
    }

    #[test]
    fn radicals() {
        let ring = r(3);
        let i = ideal(&ring, "x1^2, x2*x3").unwrap();
        assert_eq!(i.radical().to_string(), "(x1, x2*x3)");
        let s = ideal(&ring, "x1*x2, x2*x3").unwrap();
        assert_eq!(s.radical(), s);
        assert!(s.is_squarefree());
        assert!(!i.is_squarefree());
    }

    #[test]
    fn alexander_dual_examples() {
        let ring = r(3);
        let i = ideal(&ring, "x1*x2, x2*x3").unwrap();
        assert_eq!(i.alexander_dual().unwrap().to_string(), "(x1*x3, x2)");
        let p = ideal(&ring, "x1").unwrap();
        assert_eq!(p.alexander_dual().unwrap(), p);
        assert!(ideal(&ring, "x1^2").unwrap().alexander_dual().is_err());
    }

    #[test]
    fn exponent_vector_and_equigeneration() {
        let ring = r(3);
        let i = ideal(&ring, "x1^3*x2, x2*x3^3").unwrap();
        assert_eq!(i.max_exponent_vector().unwrap().0, vec![3, 1, 3]);
        assert!(MonomialIdeal::zero(ring.clone())
            .max_exponent_vector()
            .is_err());
        let xy = RingContext::from_names(&["x", "y"]).unwrap();
        assert!(!ideal(&xy, "x^3, x*y, y^4").unwrap().is_equigenerated());
        let j = ideal(&ring, "x1*x2").unwrap();
        assert!(j.contains(&ideal(&ring, "x1^2*x2^3").unwrap().gens()[0]));
    }

    #[test]
    fn parse_forms() {
        let ring = r(2);
        assert!(ideal(&ring, "(0)").unwrap().is_zero());
        assert!(ideal(&ring, "()").unwrap().is_zero());
        assert!(ideal(&ring, "(1)").unwrap().is_unit());
        assert_eq!(ideal(&ring, "(x1, x2)").unwrap().num_gens(), 2);
        assert!(ideal(&ring, "(x1, x2").is_err());
        assert!(ideal(&ring, "x1,,x2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let ring = r(3);
        let i = ideal(&ring, "x1^2*x2, x3").unwrap();
        let back = MonomialIdeal::from_json(&i.to_json()).unwrap();
        assert_eq!(back, i);
    }
}
