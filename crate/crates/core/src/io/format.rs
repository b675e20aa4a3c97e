//! Line-oriented text formats for semigroup ideals and curves.
//!
//! Semigroup files:
//!
//! ```text
//! # comment
//! label = <2,7>
//! branches = 1
//! mu = 0
//! gamma = 6
//! elements:
//! 0
//! 2
//! ```
//!
//! Curve files:
//!
//! ```text
//! branches = 2
//! uniformizers = t1, t2
//! truncation: 20
//! gen: -t1^4, t2
//! ideal-gen I: t1^3, t2
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::curve::{
    ideal_power, ideal_product, AlgebroidCurve, BranchVector, CurveError,
    FractionalIdealPresentation, Poly, Rational,
};
use crate::lattice::{Box, IdealRep, LatticeError, LatticePoint};
use crate::semigroup::GoodSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error("declared minimum {declared} differs from the minimum {actual} of the elements")]
    MuMismatch {
        declared: LatticePoint,
        actual: LatticePoint,
    },
    #[error("unknown ideal `{0}`")]
    UnknownIdeal(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// `a,b,c` → point.
pub fn parse_point(text: &str) -> Result<LatticePoint, String> {
    let coords = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad coordinate `{}`: {e}", c.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    LatticePoint::new(coords).map_err(|e| e.to_string())
}

fn point_text(p: &LatticePoint) -> String {
    p.coords()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A semigroup (ideal) file: a representation plus an optional label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupFile {
    pub label: Option<String>,
    pub rep: IdealRep,
}

impl SemigroupFile {
    /// Labels numerical good semigroups by their minimal generators.
    pub fn with_auto_label(rep: IdealRep) -> Self {
        let label = GoodSemigroup::new(rep.clone()).ok().and_then(|s| s.label());
        SemigroupFile { label, rep }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut label = None;
        let mut branches: Option<usize> = None;
        let mut mu: Option<LatticePoint> = None;
        let mut gamma: Option<LatticePoint> = None;
        let mut elements: Vec<(usize, LatticePoint)> = Vec::new();
        let mut in_elements = false;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if in_elements {
                elements.push((
                    line_no,
                    parse_point(line).map_err(|m| parse_err(line_no, m))?,
                ));
                continue;
            }
            if line == "elements:" {
                in_elements = true;
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                parse_err(line_no, format!("expected `key = value`, got `{line}`"))
            })?;
            let value = value.trim();
            match key.trim() {
                "label" | "name" => label = Some(value.to_string()),
                "branches" => {
                    branches = Some(
                        value
                            .parse()
                            .map_err(|e| parse_err(line_no, format!("bad branch count: {e}")))?,
                    )
                }
                "mu" => mu = Some(parse_point(value).map_err(|m| parse_err(line_no, m))?),
                "gamma" => gamma = Some(parse_point(value).map_err(|m| parse_err(line_no, m))?),
                other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
            }
        }
        let branches = branches.ok_or(FormatError::MissingHeader("branches"))?;
        let mu = mu.ok_or(FormatError::MissingHeader("mu"))?;
        let gamma = gamma.ok_or(FormatError::MissingHeader("gamma"))?;
        for p in [&mu, &gamma] {
            if p.branches() != branches {
                return Err(LatticeError::LengthMismatch {
                    left: branches,
                    right: p.branches(),
                }
                .into());
            }
        }
        let bx = Box::new(mu.clone(), gamma)?;
        let mut flags = vec![false; bx.len()];
        for (line_no, p) in elements {
            if p.branches() != branches || !bx.contains(p.coords()) {
                return Err(parse_err(
                    line_no,
                    format!("element {p} outside the box {bx}"),
                ));
            }
            flags[bx.index_of(p.coords())] = true;
        }
        let rep = IdealRep::from_table(bx, flags)?;
        if rep.mu() != &mu {
            return Err(FormatError::MuMismatch {
                declared: mu,
                actual: rep.mu().clone(),
            });
        }
        Ok(SemigroupFile { label, rep })
    }

    pub fn print(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.label {
            writeln!(out, "label = {l}").unwrap();
        }
        writeln!(out, "branches = {}", self.rep.branches()).unwrap();
        writeln!(out, "mu = {}", point_text(self.rep.mu())).unwrap();
        writeln!(out, "gamma = {}", point_text(self.rep.gamma())).unwrap();
        writeln!(out, "elements:").unwrap();
        for p in self.rep.box_members() {
            writeln!(out, "{}", point_text(&p)).unwrap();
        }
        out
    }
}

/// A curve with optional truncation and named fractional ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub curve: AlgebroidCurve,
    pub truncation: Option<usize>,
    pub ideals: Vec<(String, FractionalIdealPresentation)>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut branches: Option<usize> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut truncation: Option<usize> = None;
        let mut gens: Vec<(usize, String)> = Vec::new();
        let mut ideal_lines: Vec<(usize, String, String)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gen:") {
                gens.push((line_no, rest.trim().to_string()));
            } else if let Some(rest) = line.strip_prefix("ideal-gen") {
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(line_no, "expected `ideal-gen [NAME]: ...`"))?;
                let name = match name.trim() {
                    "" => "I".to_string(),
                    n if n.chars().all(|c| c.is_alphanumeric() || c == '_')
                        && n != "R"
                        && n != "m" =>
                    {
                        n.to_string()
                    }
                    n => return Err(parse_err(line_no, format!("invalid ideal name `{n}`"))),
                };
                ideal_lines.push((line_no, name, body.trim().to_string()));
            } else if let Some(rest) = line.strip_prefix("truncation:") {
                truncation = Some(parse_usize(rest, line_no)?);
            } else if let Some((key, value)) = line.split_once('=') {
                match key.trim() {
                    "branches" => branches = Some(parse_usize(value, line_no)?),
                    "uniformizers" => {
                        vars = Some(value.split(',').map(|v| v.trim().to_string()).collect())
                    }
                    "truncation" => truncation = Some(parse_usize(value, line_no)?),
                    other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
                }
            } else {
                return Err(parse_err(line_no, format!("unrecognized line `{line}`")));
            }
        }
        let vars = match (vars, branches) {
            (Some(v), Some(b)) if v.len() != b => {
                return Err(parse_err(
                    0,
                    format!("{} uniformizers for {b} branches", v.len()),
                ))
            }
            (Some(v), _) => v,
            (None, Some(1)) => vec!["t".to_string()],
            (None, Some(b)) => (1..=b).map(|i| format!("t{i}")).collect(),
            (None, None) => return Err(FormatError::MissingHeader("branches")),
        };
        if let Some(v) = vars.iter().find(|v| !is_identifier(v)) {
            return Err(parse_err(0, format!("invalid uniformizer `{v}`")));
        }
        let generators = gens
            .iter()
            .map(|(line_no, body)| parse_vector(body, &vars).map_err(|m| parse_err(*line_no, m)))
            .collect::<Result<Vec<_>, _>>()?;
        let curve = AlgebroidCurve::new(vars.clone(), generators, truncation)?;
        let mut grouped: Vec<(String, Vec<BranchVector>)> = Vec::new();
        for (line_no, name, body) in ideal_lines {
            let v = parse_vector(&body, &vars).map_err(|m| parse_err(line_no, m))?;
            match grouped.iter_mut().find(|(n, _)| *n == name) {
                Some((_, g)) => g.push(v),
                None => grouped.push((name, vec![v])),
            }
        }
        let ideals = grouped
            .into_iter()
            .map(|(n, g)| Ok((n, FractionalIdealPresentation::new(g)?)))
            .collect::<Result<Vec<_>, CurveError>>()?;
        Ok(CurveFile {
            curve,
            truncation,
            ideals,
        })
    }

    pub fn print(&self) -> String {
        let vars = self.curve.uniformizers();
        let mut out = String::new();
        writeln!(out, "branches = {}", vars.len()).unwrap();
        writeln!(out, "uniformizers = {}", vars.join(", ")).unwrap();
        if let Some(d) = self.truncation {
            writeln!(out, "truncation: {d}").unwrap();
        }
        for g in self.curve.generators() {
            writeln!(out, "gen: {}", g.display_with(vars)).unwrap();
        }
        for (name, ideal) in &self.ideals {
            for g in ideal.generators() {
                writeln!(out, "ideal-gen {name}: {}", g.display_with(vars)).unwrap();
            }
        }
        out
    }

    /// `R`, `m`, a named ideal, or products/powers of these such as
    /// `I*J` or `m^2`.
    pub fn resolve_ideal(&self, expr: &str) -> Result<FractionalIdealPresentation, FormatError> {
        let mut acc: Option<FractionalIdealPresentation> = None;
        for factor in expr.split('*') {
            let factor = factor.trim();
            let (name, power) = match factor.split_once('^') {
                Some((n, p)) => (
                    n.trim(),
                    p.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&p| p >= 1)
                        .ok_or_else(|| FormatError::UnknownIdeal(factor.to_string()))?,
                ),
                None => (factor, 1),
            };
            let base = match name {
                "R" => self.curve.unit_ideal(),
                "m" => self.curve.maximal_ideal(),
                n => self
                    .ideals
                    .iter()
                    .find(|(k, _)| k == n)
                    .map(|(_, i)| i.clone())
                    .ok_or_else(|| FormatError::UnknownIdeal(n.to_string()))?,
            };
            let term = if power == 1 {
                base
            } else {
                ideal_power(&base, power)
            };
            acc = Some(match acc {
                None => term,
                Some(a) => ideal_product(&a, &term),
            });
        }
        acc.ok_or_else(|| FormatError::UnknownIdeal(expr.to_string()))
    }
}

fn parse_usize(text: &str, line: usize) -> Result<usize, FormatError> {
    text.trim()
        .parse()
        .map_err(|e| parse_err(line, format!("bad number `{}`: {e}", text.trim())))
}

fn is_identifier(v: &str) -> bool {
    let mut chars = v.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Comma-separated components, component `i` in uniformizer `vars[i]`.
pub fn parse_vector(text: &str, vars: &[String]) -> Result<BranchVector, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != vars.len() {
        return Err(format!(
            "expected {} components, found {}",
            vars.len(),
            parts.len()
        ));
    }
    Ok(BranchVector(
        parts
            .iter()
            .zip(vars)
            .map(|(p, v)| parse_poly(p, v))
            .collect::<Result<Vec<_>, _>>()?,
    ))
}

/// Parses sums of terms `c`, `c*t^e`, `c t^e`, `t^e`, `-t` with rational `c`.
pub fn parse_poly(text: &str, var: &str) -> Result<Poly, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".to_string());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for k in 1..=bytes.len() {
        let split =
            k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^');
        if split {
            terms.push(parse_term(&compact[start..k], var)?);
            start = k;
        }
    }
    Ok(Poly::from_terms(terms))
}

fn parse_term(term: &str, var: &str) -> Result<(i64, Rational), String> {
    let (sign, body) = match term.as_bytes()[0] {
        b'+' => (1, &term[1..]),
        b'-' => (-1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(format!("dangling sign in `{term}`"));
    }
    let (coeff_text, power_text) = match body.find(var) {
        Some(pos) => (
            body[..pos].trim_end_matches('*'),
            Some(&body[pos + var.len()..]),
        ),
        None => (body, None),
    };
    let coeff = if coeff_text.is_empty() {
        Rational::from_integer(BigInt::from(1))
    } else {
        parse_rational(coeff_text)?
    };
    let exp = match power_text {
        None => 0,
        Some("") => 1,
        Some(p) => p
            .strip_prefix('^')
            .ok_or_else(|| format!("unexpected `{p}` after `{var}` in `{term}`"))?
            .parse::<i64>()
            .map_err(|e| format!("bad exponent in `{term}`: {e}"))?,
    };
    Ok((exp, coeff * Rational::from_integer(BigInt::from(sign))))
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = |e: String| format!("bad coefficient `{text}`: {e}");
    let r = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n
                .parse()
                .map_err(|e: num_bigint::ParseBigIntError| bad(e.to_string()))?;
            let d: BigInt = d
                .parse()
                .map_err(|e: num_bigint::ParseBigIntError| bad(e.to_string()))?;
            if d.is_zero() {
                return Err(bad("zero denominator".to_string()));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(
            text.parse()
                .map_err(|e: num_bigint::ParseBigIntError| bad(e.to_string()))?,
        ),
    };
    Ok(r)
}
