//! Text formats for ideals and graphs.
//!
//! Ideal files start with a header declaring the variables, followed by
//! generators separated by commas or newlines:
//!
//! ```text
//! vars: x1..x3
//! x1*x2^2, x2x3
//! x3^4
//! ```
//!
//! The header lists names separated by whitespace or commas, and `p1..pn`
//! expands to `p1 p2 ... pn`. A generator is a product of variables, each
//! optionally raised to `^e`; the `*` between factors may be omitted, in
//! which case names are matched longest first. `1` denotes the unit
//! monomial. `#` starts a comment.
//!
//! Graph files hold the vertex count on the first line and one edge
//! `i j` (1-indexed) per following line.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};

/// A parsed ideal together with non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn split_trailing_number(token: &str) -> Option<(&str, u64)> {
    let digits = token.len() - token.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if digits == 0 {
        return None;
    }
    let (prefix, num) = token.split_at(token.len() - digits);
    num.parse().ok().map(|n| (prefix, n))
}

fn expand_var_token(token: &str, line: usize) -> Result<Vec<String>> {
    let Some((lo, hi)) = token.split_once("..") else {
        return Ok(vec![token.to_string()]);
    };
    let (prefix, start) = split_trailing_number(lo)
        .ok_or_else(|| parse_err(line, format!("range start {lo:?} has no trailing number")))?;
    let end = match split_trailing_number(hi) {
        Some((p, e)) if p == prefix || p.is_empty() => e,
        _ => return Err(parse_err(line, format!("range end {hi:?} does not match prefix {prefix:?}"))),
    };
    if end < start {
        return Err(parse_err(line, format!("empty range {token}")));
    }
    Ok((start..=end).map(|i| format!("{prefix}{i}")).collect())
}

fn parse_header(line: &str, lineno: usize) -> Result<Arc<Ring>> {
    let rest = line
        .trim()
        .strip_prefix("vars:")
        .ok_or_else(|| parse_err(lineno, "expected a header line starting with \"vars:\""))?;
    let mut names = Vec::new();
    for token in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        for name in expand_var_token(token, lineno)? {
            if !name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
            {
                return Err(parse_err(lineno, format!("invalid variable name {name:?}")));
            }
            names.push(name);
        }
    }
    if names.is_empty() {
        return Err(parse_err(lineno, "no variables declared"));
    }
    Ring::new(names).map_err(|e| parse_err(lineno, e.to_string()))
}

fn parse_monomial(text: &str, ring: &Ring, lineno: usize) -> Result<Monomial> {
    let n = ring.nvars();
    let mut exps = vec![0u32; n];
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut factors = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c == '*' || c.is_whitespace() {
            pos += 1;
            continue;
        }
        let rest = &text[pos..];
        let (var, len) = if rest.starts_with('1') && !rest[1..].starts_with(|c: char| c.is_ascii_digit()) {
            (None, 1)
        } else {
            let best = ring
                .names()
                .iter()
                .enumerate()
                .filter(|(_, name)| rest.starts_with(name.as_str()))
                .max_by_key(|(_, name)| name.len());
            match best {
                Some((i, name)) => (Some(i), name.len()),
                None => {
                    let token: String = rest
                        .chars()
                        .take_while(|c| c.is_alphanumeric() || *c == '_')
                        .collect();
                    let token = if token.is_empty() { rest.chars().take(1).collect() } else { token };
                    return Err(parse_err(lineno, format!("undeclared variable or malformed token {token:?}")));
                }
            }
        };
        pos += len;
        let mut exponent = 1u32;
        if text[pos..].starts_with('^') {
            pos += 1;
            let digits: String = text[pos..]
                .chars()
                .take_while(|c| c.is_ascii_digit() || *c == '-' || *c == '+')
                .collect();
            if digits.starts_with('-') {
                return Err(parse_err(lineno, format!("negative exponent in {text:?}")));
            }
            exponent = digits
                .trim_start_matches('+')
                .parse()
                .map_err(|_| parse_err(lineno, format!("malformed exponent in {text:?}")))?;
            pos += digits.len();
        }
        if let Some(i) = var {
            exps[i] = exps[i]
                .checked_add(exponent)
                .ok_or_else(|| parse_err(lineno, "exponent overflow"))?;
        }
        factors += 1;
    }
    if factors == 0 {
        return Err(parse_err(lineno, "empty generator"));
    }
    Ok(Monomial::new(exps))
}

pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l)));
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "missing \"vars:\" header"))?;
    let ring = parse_header(header, header_line)?;
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        for item in line.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            gens.push(parse_monomial(item, &ring, lineno)?);
        }
    }
    let mut warnings = Vec::new();
    if gens.is_empty() {
        warnings.push("no generators given; this is the zero ideal".to_string());
    }
    Ok(ParsedIdeal {
        ideal: MonomialIdeal::minimalize(ring, gens)?,
        warnings,
    })
}

/// Canonical text form: header, then one generator per line.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.ring().names().join(" "));
    for g in ideal.generator_strings() {
        out.push_str(&g);
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, count) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = count
        .parse()
        .map_err(|_| parse_err(first, format!("vertex count {count:?} is not a non-negative integer")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(lineno, format!("expected \"i j\", got {line:?}")));
        }
        let endpoint = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(parse_err(lineno, format!("invalid vertex {s:?} (vertices are 1-indexed)"))),
            }
        };
        edges.push((endpoint(fields[0])?, endpoint(fields[1])?));
    }
    SimpleGraph::new(n, edges).map_err(|e| match e {
        Error::InvalidGraph(m) => parse_err(0, m),
        other => other,
    })
}

pub fn write_graph(graph: &SimpleGraph) -> String {
    let mut out = format!("{}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
