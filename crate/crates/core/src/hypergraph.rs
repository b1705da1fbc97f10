//! Hypergraphs, their edge ideals, and the diameter criterion for linear
//! resolutions of uniform hypergraphs.
//!
//! Vertices are `0..n` internally and `1..=n` in text. Edge sets form a
//! clutter (no edge contains another), which makes `edge_ideal` and
//! `from_ideal` mutually inverse.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use crate::scalar::binomial;

pub const MAX_VERTICES: usize = 64;
pub const MAX_TRIANGULATION_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    /// Edges as vertex bit masks, sorted increasingly.
    edges: Vec<u64>,
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

impl Hypergraph {
    /// Builds a hypergraph on `n` vertices from 0-based vertex lists.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!("at most {MAX_VERTICES} vertices")));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in &edges {
            if e.is_empty() {
                return Err(Error::argument("edges must be nonempty"));
            }
            if let Some(v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::argument(format!("vertex {} out of range", v + 1)));
            }
            masks.push(mask_of(e));
        }
        masks.sort_unstable();
        masks.dedup();
        for &a in &masks {
            if masks.iter().any(|&b| b != a && a & b == a) {
                return Err(Error::argument("an edge contains another edge"));
            }
        }
        Ok(Hypergraph { n, edges: masks })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based vertex lists.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| vertices_of(e)).collect()
    }

    /// `Some(d)` if every edge has `d` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let d = self.edges.first()?.count_ones();
        self.edges
            .iter()
            .all(|e| e.count_ones() == d)
            .then_some(d as usize)
    }

    fn uniform(&self) -> Result<usize> {
        match self.uniformity() {
            Some(d) => Ok(d),
            None if self.edges.is_empty() => Ok(0),
            None => Err(Error::domain("hypergraph is not uniform")),
        }
    }

    /// The squarefree ideal generated by `Π_{i ∈ E} x_i`, in `x1..xn`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let ring = RingContext::standard(self.n);
        let gens = self
            .edges
            .iter()
            .map(|&e| Monomial::new((0..self.n).map(|v| (e >> v & 1) as u32).collect()))
            .collect();
        MonomialIdeal::new(ring, gens).expect("edge monomials fit the ring")
    }

    /// The hypergraph whose edges are the supports of `G(I)`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Hypergraph> {
        if !ideal.is_squarefree() {
            return Err(Error::domain("hypergraphs correspond to squarefree ideals"));
        }
        if ideal.is_unit() {
            return Err(Error::domain("the unit ideal has no hypergraph"));
        }
        if ideal.ring().len() > MAX_VERTICES {
            return Err(Error::Resource(format!("at most {MAX_VERTICES} vertices")));
        }
        let mut edges: Vec<u64> = ideal.gens().iter().map(Monomial::support_mask).collect();
        edges.sort_unstable();
        Ok(Hypergraph {
            n: ideal.ring().len(),
            edges,
        })
    }

    fn edge_index(&self, e: &[usize]) -> Result<usize> {
        let m = mask_of(e);
        self.edges
            .binary_search(&m)
            .map_err(|_| Error::argument("not an edge of the hypergraph"))
    }

    /// Breadth-first distances from edge `src` along proper steps
    /// (consecutive edges meeting in `d-1` vertices).
    fn distances_from(&self, src: usize, d: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.edges.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            let da = dist[a].expect("queued edges have a distance");
            for (b, slot) in dist.iter_mut().enumerate() {
                if slot.is_none() && (self.edges[a] & self.edges[b]).count_ones() as usize + 1 == d
                {
                    *slot = Some(da + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Length of a shortest proper chain between two edges, `None` if there
    /// is none. A shortest proper chain is irredundant, since dropping edges
    /// from it would give a shorter proper chain.
    pub fn distance(&self, e: &[usize], f: &[usize]) -> Result<Option<usize>> {
        let d = self.uniform()?;
        let (a, b) = (self.edge_index(e)?, self.edge_index(f)?);
        Ok(self.distances_from(a, d)[b])
    }

    /// Every pair of meeting edges is at distance `d - |E ∩ E'|`.
    pub fn is_properly_connected(&self) -> Result<bool> {
        let d = self.uniform()?;
        Ok((0..self.edges.len()).all(|a| {
            let dist = self.distances_from(a, d);
            (0..self.edges.len()).all(|b| {
                let common = (self.edges[a] & self.edges[b]).count_ones() as usize;
                common == 0 || dist[b] == Some(d - common)
            })
        }))
    }

    /// Every nonempty vertex set `W` has a vertex whose closed neighborhood
    /// in the induced hypergraph `H_W` spans a complete `d`-uniform
    /// hypergraph there.
    pub fn is_triangulated(&self) -> Result<bool> {
        let d = self.uniform()?;
        if self.n > MAX_TRIANGULATION_VERTICES {
            return Err(Error::Resource(format!(
                "triangulation check limited to {MAX_TRIANGULATION_VERTICES} vertices"
            )));
        }
        for w in 1u64..1 << self.n {
            let inside: Vec<u64> = self.edges.iter().copied().filter(|&e| e & w == e).collect();
            let good = vertices_of(w).into_iter().any(|v| {
                let closed = inside
                    .iter()
                    .filter(|&&e| e >> v & 1 == 1)
                    .fold(1u64 << v, |acc, &e| acc | e);
                let size = closed.count_ones() as i64;
                let spanned = inside.iter().filter(|&&e| e & closed == e).count() as u64;
                spanned == binomial(size, d as i64)
            });
            if !good {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest distance between two edges; `None` when some pair is not
    /// joined by a proper chain.
    pub fn diameter(&self) -> Result<Option<usize>> {
        let d = self.uniform()?;
        let mut best = 0;
        for a in 0..self.edges.len() {
            for dist in self.distances_from(a, d) {
                best = best.max(match dist {
                    Some(x) => x,
                    None => return Ok(None),
                });
            }
        }
        Ok(Some(best))
    }

    /// For a uniform, properly-connected, triangulated hypergraph the edge
    /// ideal has a linear resolution iff the diameter is at most `d`.
    pub fn linear_resolution_criterion(&self) -> Result<Criterion> {
        let Some(d) = self.uniformity() else {
            return Ok(Criterion::Inapplicable("hypergraph is not uniform".into()));
        };
        if !self.is_properly_connected()? {
            return Ok(Criterion::Inapplicable(
                "hypergraph is not properly-connected".into(),
            ));
        }
        if !self.is_triangulated()? {
            return Ok(Criterion::Inapplicable(
                "hypergraph is not triangulated".into(),
            ));
        }
        let diameter = self.diameter()?;
        Ok(Criterion::Applicable {
            diameter,
            linear: diameter.is_some_and(|x| x <= d),
        })
    }

    /// One edge per line as 1-based vertex indices, after a `vertices n` line.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for e in self.edges() {
            let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses [`Hypergraph::to_text`] output. The `vertices` line is
    /// optional; without it the largest index sets the vertex count. Blank
    /// lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("").trim();
            let at = offset;
            offset += line.len();
            if body.is_empty() {
                continue;
            }
            if let Some(rest) = body.strip_prefix("vertices") {
                n =
                    Some(rest.trim().parse::<usize>().map_err(|_| {
                        Error::parse(at, "expected a vertex count after `vertices`")
                    })?);
                continue;
            }
            let edge = body
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::parse(at, format!("bad vertex `{t}`"))),
                })
                .collect::<Result<Vec<_>>>()?;
            edges.push(edge);
        }
        let n = n.unwrap_or_else(|| edges.iter().flatten().map(|v| v + 1).max().unwrap_or(0));
        Hypergraph::new(n, edges)
    }

    /// Graphviz rendering of the proper-adjacency graph on edges.
    pub fn to_dot(&self) -> Result<String> {
        let d = self.uniform()?;
        let mut s = String::from("graph proper_adjacency {\n");
        for (i, e) in self.edges().iter().enumerate() {
            let label: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(s, "  e{i} [label=\"{{{}}}\"];", label.join(","));
        }
        for a in 0..self.edges.len() {
            for b in a + 1..self.edges.len() {
                if (self.edges[a] & self.edges[b]).count_ones() as usize + 1 == d {
                    let _ = writeln!(s, "  e{a} -- e{b};");
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criterion {
    Applicable {
        diameter: Option<usize>,
        /// `diameter <= d`.
        linear: bool,
    },
    Inapplicable(String),
}

/// The cycle graph on `n` vertices.
pub fn cycle(n: usize) -> Hypergraph {
    Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
        .expect("cycle edges are valid")
}
