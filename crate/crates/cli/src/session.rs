//! The text input format: a ring declaration followed by named ideals.
//!
//! ```text
//! ring x1..x5            # or: ring a,b,c   or: ring x1..x3 | y1..y2
//! I = x1*x2*x3, x1*x2*x4
//! J = (x1^2)
//! ```
//!
//! Lines may also be separated by `;`. A line holding only an ideal binds it
//! to `I`. Input starting with `{` is read as ideal JSON, either bare or as
//! the `ideal` field of a linearization record.

use monolin::{parse_ideal, Error, MonomialIdeal, Ring, RingContext, VarRole, Variable};

/// A located input error, reported as `line:column`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "parse error at {}:{}: {}",
            self.line, self.column, self.message
        )
    }
}

#[derive(Debug, Clone)]
pub struct Session {
    pub ideals: Vec<(String, MonomialIdeal)>,
}

impl Session {
    /// The ideal called `name`; without a name, `I` or else the only ideal.
    pub fn get(&self, name: Option<&str>) -> Result<&MonomialIdeal, String> {
        let found = match name {
            Some(n) => self.ideals.iter().find(|(k, _)| k == n),
            None => self
                .ideals
                .iter()
                .find(|(k, _)| k == "I")
                .or(if self.ideals.len() == 1 {
                    self.ideals.first()
                } else {
                    None
                }),
        };
        found.map(|(_, i)| i).ok_or_else(|| match name {
            Some(n) => format!("no ideal named `{n}`"),
            None => "input defines no ideal `I`; pick one with --ideal".to_string(),
        })
    }
}

fn locate(text: &str, offset: usize, message: impl Into<String>) -> ParseError {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Expands `x1..x5` into `x1, ..., x5`.
fn expand_range(item: &str) -> Option<Vec<String>> {
    let (lo, hi) = item.split_once("..")?;
    let split = |s: &str| {
        let stem = s.trim_end_matches(|c: char| c.is_ascii_digit());
        Some((stem.to_string(), s[stem.len()..].parse::<usize>().ok()?))
    };
    let ((s1, a), (s2, b)) = (split(lo.trim())?, split(hi.trim())?);
    (s1 == s2 && !s1.is_empty() && a <= b).then(|| (a..=b).map(|k| format!("{s1}{k}")).collect())
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ring(decl: &str, text: &str, at: usize) -> Result<Ring, ParseError> {
    let mut vars = Vec::new();
    let (xs, ys) = match decl.split_once('|') {
        Some((a, b)) => (a, Some(b)),
        None => (decl, None),
    };
    for (block, role) in [(Some(xs), VarRole::X), (ys, VarRole::Y)] {
        let Some(block) = block else { continue };
        for item in block.split(',').map(str::trim) {
            let names = if item.contains("..") {
                expand_range(item)
                    .ok_or_else(|| locate(text, at, format!("bad variable range `{item}`")))?
            } else if is_name(item) {
                vec![item.to_string()]
            } else {
                return Err(locate(text, at, format!("bad variable name `{item}`")));
            };
            vars.extend(names.into_iter().map(|name| Variable { name, role }));
        }
    }
    RingContext::new(vars).map_err(|e| locate(text, at, e.to_string()))
}

fn from_json(text: &str) -> Result<Session, ParseError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let body = value.get("ideal").unwrap_or(&value);
    let ideal = MonomialIdeal::from_json(body).map_err(|e| locate(text, 0, e.to_string()))?;
    Ok(Session {
        ideals: vec![("I".into(), ideal)],
    })
}

/// Parses a session. `Err` carries a located message for malformed input;
/// well-formed input describing an invalid ideal is reported as a library
/// error.
pub fn parse_session(text: &str) -> Result<Result<Session, Error>, ParseError> {
    if text.trim_start().starts_with('{') {
        return from_json(text).map(Ok);
    }
    let mut ring: Option<Ring> = None;
    let mut ideals: Vec<(String, MonomialIdeal)> = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive(['\n', ';']) {
        let start = offset;
        offset += raw.len();
        let body = raw.split('#').next().unwrap_or("");
        let body = body.trim_end_matches(['\n', ';', '\r']);
        let lead = body.len() - body.trim_start().len();
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let at = start + lead;
        if let Some(decl) = body
            .strip_prefix("ring")
            .filter(|r| r.starts_with(char::is_whitespace))
        {
            if ring.is_some() {
                return Err(locate(text, at, "ring declared twice"));
            }
            ring = Some(parse_ring(decl.trim(), text, at)?);
            continue;
        }
        let Some(r) = &ring else {
            return Err(locate(text, at, "expected `ring` declaration first"));
        };
        let (name, expr, expr_at) = match body.split_once('=') {
            Some((lhs, rhs)) if is_name(lhs.trim()) => {
                let rhs_lead = rhs.len() - rhs.trim_start().len();
                (
                    lhs.trim().to_string(),
                    rhs.trim(),
                    at + lhs.len() + 1 + rhs_lead,
                )
            }
            Some((lhs, _)) => {
                return Err(locate(text, at, format!("bad ideal name `{}`", lhs.trim())))
            }
            None => ("I".to_string(), body, at),
        };
        if ideals.iter().any(|(k, _)| *k == name) {
            return Err(locate(text, at, format!("ideal `{name}` defined twice")));
        }
        match parse_ideal(expr, r) {
            Ok(i) => ideals.push((name, i)),
            Err(Error::Parse { position, message }) => {
                return Err(locate(text, expr_at + position, message))
            }
            Err(e) => return Ok(Err(e)),
        }
    }
    if ring.is_none() {
        return Err(locate(text, text.len(), "missing `ring` declaration"));
    }
    Ok(Ok(Session { ideals }))
}
