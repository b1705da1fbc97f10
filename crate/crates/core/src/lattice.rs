//! lcm-lattices of monomial ideals.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;

pub const DEFAULT_LATTICE_CAP: usize = 50_000;

/// All lcms of subsets of `G(I)`, the empty subset giving the bottom `1`.
///
/// Elements are sorted by degree and then in decreasing lex order, so the
/// bottom comes first and the top last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    ring: Ring,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Closes `G(I)` under lcm. Fails with a resource error once more than
    /// `cap` elements appear.
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
        if ideal.is_zero() {
            return Err(Error::domain("lcm-lattice of the zero ideal"));
        }
        let n = ideal.ring().len();
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut elements = vec![Monomial::one(n)];
        seen.insert(Monomial::one(n));
        // Every lcm of a subset arises by adding one generator at a time.
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in ideal.gens() {
                    let l = a.lcm(g);
                    if seen.insert(l.clone()) {
                        if seen.len() > cap {
                            return Err(Error::Resource(format!(
                                "lcm-lattice has more than {cap} elements"
                            )));
                        }
                        next.push(l);
                    }
                }
            }
            elements.extend(next.iter().cloned());
            frontier = next;
        }
        elements.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        Ok(LcmLattice {
            ring: ideal.ring().clone(),
            elements,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice contains 1")
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.elements
            .binary_search_by(|e| e.degree().cmp(&u.degree()).then_with(|| u.cmp(e)))
            .is_ok()
    }

    /// Hasse diagram as index pairs `(lower, upper)`: strict divisibility with
    /// nothing strictly in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let e = &self.elements;
        let mut out = Vec::new();
        for b in 0..e.len() {
            let below: Vec<usize> = (0..b)
                .filter(|&a| e[a].degree() < e[b].degree() && e[a].divides(&e[b]))
                .collect();
            for &a in &below {
                if !below
                    .iter()
                    .any(|&c| c != a && e[a].degree() < e[c].degree() && e[a].divides(&e[c]))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Graphviz rendering, bottom to top.
    pub fn to_dot(&self) -> String {
        let mut s =
            String::from("digraph lcm_lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, u) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", u.display(&self.ring));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal;
    use crate::ring::RingContext;

    #[test]
    fn three_generator_lattice() {
        let i = ideal(
            &RingContext::standard(4),
            "x1*x2*x4, x1^2*x2^2*x3, x3^3*x4^3",
        )
        .unwrap();
        let l = LcmLattice::new(&i, 100).unwrap();
        assert_eq!(l.len(), 7);
        assert!(l.bottom().is_one());
        assert_eq!(l.top().display(l.ring()).to_string(), "x1^2*x2^2*x3^3*x4^3");
        assert!(l.contains(&i.gens()[0]));
        let covers = l.covers();
        assert_eq!(covers.len(), 9);
        let dot = l.to_dot();
        assert_eq!(dot.matches("->").count(), 9);
        assert_eq!(dot.matches("label=").count(), 7);
    }

    #[test]
    fn cap_is_enforced() {
        let i = ideal(&RingContext::standard(6), "x1, x2, x3, x4, x5, x6").unwrap();
        assert_eq!(LcmLattice::new(&i, 64).unwrap().len(), 64);
        assert!(matches!(LcmLattice::new(&i, 63), Err(Error::Resource(_))));
    }

    #[test]
    fn principal_lattice() {
        let i = ideal(&RingContext::standard(2), "x1*x2").unwrap();
        let l = LcmLattice::new(&i, 10).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.covers(), vec![(0, 1)]);
    }
}
