//! Dense exponent-vector monomials and their divisibility arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingContext;

/// Exponent storage width. Arithmetic on exponents is checked; overflow is
/// reported as an arithmetic error.
pub type Exp = u32;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// A monomial does not carry its ring; the length of the exponent vector must
/// match the ring it is used with. The all-zero vector is the constant `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Exp>", into = "Vec<Exp>")]
pub struct Monomial {
    exps: Vec<Exp>,
    degree: u64,
}

impl From<Vec<Exp>> for Monomial {
    fn from(exps: Vec<Exp>) -> Self {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<Exp> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Self {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_i` in a ring of `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn same_len(&self, other: &Monomial) {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials from rings of different size"
        );
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.same_len(other);
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.same_len(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.same_len(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, the generator contributed by `self` to the
    /// colon ideal `(self) : other`.
    pub fn div_by_gcd(&self, other: &Monomial) -> Monomial {
        self.same_len(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// `self / divisor`; fails unless `divisor | self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self) {
            return Err(Error::Arithmetic(
                "quotient of monomials without divisibility".into(),
            ));
        }
        Ok(self.div_by_gcd(divisor))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_len(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Arithmetic("exponent overflow".into()))?;
        Ok(Monomial::new(exps))
    }

    /// Multiply by `x_i^e`.
    pub fn mul_var(&self, i: usize, e: Exp) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| Error::Arithmetic("exponent overflow".into()))?;
        Ok(Monomial::new(exps))
    }

    /// Divide by `x_i`; fails if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Result<Monomial> {
        if self.exps[i] == 0 {
            return Err(Error::Arithmetic(format!(
                "variable {i} does not divide the monomial"
            )));
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Ok(Monomial::new(exps))
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Product of the support variables.
    pub fn radical(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    pub fn max_exponent(&self) -> Exp {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Lex comparison: `self > other` iff the leftmost nonzero entry of the
    /// exponent difference is positive.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.same_len(other);
        self.exps.cmp(&other.exps)
    }

    /// Exponent vector with the coordinate `at` dropped.
    pub fn remove_coordinate(&self, at: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(at);
        Monomial::new(exps)
    }

    pub fn insert_coordinate(&self, at: usize, e: Exp) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(at, e);
        Monomial::new(exps)
    }

    /// Exponent vector padded with zeros to `nvars` entries.
    pub fn padded(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial::new(exps)
    }

    /// Renders the monomial with the variable names of `ring`.
    pub fn display<'a>(&'a self, ring: &'a RingContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }

    /// Bit mask of the support; requires at most 64 variables.
    pub(crate) fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }
}

/// Orders monomials lexicographically (same convention as [`Monomial::lex_cmp`]).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_len(u: &Monomial, v: &Monomial) -> Result<()> {
    if u.nvars() == v.nvars() {
        Ok(())
    } else {
        Err(Error::Context(format!(
            "monomials with {} and {} variables",
            u.nvars(),
            v.nvars()
        )))
    }
}

/// Checked lex comparison.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    check_len(u, v)?;
    Ok(u.lex_cmp(v))
}

pub fn divides(u: &Monomial, v: &Monomial) -> Result<bool> {
    check_len(u, v)?;
    Ok(u.divides(v))
}

pub fn lcm(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_len(u, v)?;
    Ok(u.lcm(v))
}

pub fn gcd(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_len(u, v)?;
    Ok(u.gcd(v))
}

/// `v / u`, requiring `u | v`.
pub fn quotient(v: &Monomial, u: &Monomial) -> Result<Monomial> {
    check_len(u, v)?;
    v.quotient(u)
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Character-level cursor shared by the monomial, ideal and ring parsers.
pub(crate) struct Cursor<'a> {
    pub text: &'a str,
    pub pos: usize,
    /// Offset of `text` inside the caller's full input, for error positions.
    pub base: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str, base: usize) -> Self {
        Cursor { text, pos: 0, base }
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.base + self.pos, msg)
    }

    /// Identifier, optionally followed by one balanced `[...]` group, as used
    /// by monomial-indexed `y[...]` variables.
    pub fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.err("expected a variable name")),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.peek() == Some('[') {
            let mut depth = 0usize;
            while let Some(c) = self.peek() {
                self.pos += c.len_utf8();
                match c {
                    '[' => depth += 1,
                    ']' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
            }
            if depth != 0 {
                return Err(self.err("unbalanced `[` in variable name"));
            }
        }
        Ok(self.text[start..self.pos].to_string())
    }

    pub fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(self.base + start, "number out of range"))
    }

    /// `term := "1" | factor ("*" factor)*`, `factor := name ("^" number)?`.
    pub fn monomial(&mut self, ring: &RingContext) -> Result<Monomial> {
        self.skip_ws();
        if self.peek() == Some('1') {
            let save = self.pos;
            let one = self.number()?;
            if one == 1 {
                return Ok(Monomial::one(ring.len()));
            }
            self.pos = save;
            return Err(self.err("only the constant 1 may appear as a coefficient"));
        }
        let mut exps = vec![0 as Exp; ring.len()];
        loop {
            self.skip_ws();
            let at = self.pos;
            let name = self.name()?;
            let idx = ring.index_of(&name).ok_or_else(|| {
                Error::parse(self.base + at, format!("unknown variable `{name}`"))
            })?;
            let e = if self.eat('^') {
                let at = self.pos;
                let e = self.number()?;
                Exp::try_from(e).map_err(|_| Error::parse(self.base + at, "exponent too large"))?
            } else {
                1
            };
            exps[idx] = exps[idx]
                .checked_add(e)
                .ok_or_else(|| Error::parse(self.base + at, "exponent too large"))?;
            if !self.eat('*') {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// Parses `x1^2*x2*y3` (or `1`) against `ring`.
pub fn parse_monomial(text: &str, ring: &RingContext) -> Result<Monomial> {
    let mut c = Cursor::new(text, 0);
    let m = c.monomial(ring)?;
    if !c.at_end() {
        return Err(c.err("trailing input after monomial"));
    }
    Ok(m)
}
