//! Polynomial ring contexts: an ordered list of named, role-tagged variables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a variable came from.
///
/// `X` variables belong to the original ring, `Y` variables are appended by
/// linearization (one per source generator), and `Z` is the single variable
/// added by equification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarRole {
    X,
    Y,
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub role: VarRole,
}

/// An immutable, ordered set of variables.
///
/// Variable order is fixed at construction; lex comparison of monomials
/// follows it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<Variable>,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(vars: Vec<Variable>) -> Result<Ring> {
        for (i, v) in vars.iter().enumerate() {
            if v.name.is_empty() {
                return Err(Error::domain("empty variable name"));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::domain(format!(
                    "duplicate variable name `{}`",
                    v.name
                )));
            }
        }
        if vars.iter().filter(|v| v.role == VarRole::Z).count() > 1 {
            return Err(Error::domain("at most one variable may be tagged z"));
        }
        Ok(Arc::new(RingContext { vars }))
    }

    /// Ring of `x`-tagged variables with the given names.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        Self::new(
            names
                .iter()
                .map(|n| Variable {
                    name: n.as_ref().to_string(),
                    role: VarRole::X,
                })
                .collect(),
        )
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Ring {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::from_names(&names).expect("standard names are distinct")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn role(&self, i: usize) -> VarRole {
        self.vars[i].role
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Indices of the variables carrying `role`, in ring order.
    pub fn indices_with_role(&self, role: VarRole) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.vars[i].role == role)
            .collect()
    }

    pub fn z_index(&self) -> Option<usize> {
        self.vars.iter().position(|v| v.role == VarRole::Z)
    }

    /// Ring with extra variables appended at the end.
    pub fn extended(&self, extra: impl IntoIterator<Item = Variable>) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(extra);
        Self::new(vars)
    }

    /// Ring with one variable inserted at position `at`.
    pub fn with_inserted(&self, at: usize, var: Variable) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.insert(at, var);
        Self::new(vars)
    }

    /// Ring with the variable at `at` removed.
    pub fn without(&self, at: usize) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.remove(at);
        Self::new(vars)
    }

    /// Checks that two rings are identical.
    pub fn ensure_same(a: &RingContext, b: &RingContext) -> Result<()> {
        if a == b {
            Ok(())
        } else {
            Err(Error::Context(format!("{a} vs {b}")))
        }
    }

    /// A fresh variable name starting with `stem` that does not clash.
    pub(crate) fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("infinite supply of names")
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ring ")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&v.name)?;
        }
        Ok(())
    }
}
