//! Line-oriented eigenform files.
//!
//! ```text
//! eigencong-eigenform v1
//! label 23.2.a.a
//! weight 2
//! level 23
//! field -1 1 1
//! count 3
//! a 1 1/1 0/1
//! a 2 0/1 1/1
//! a 3 -1/1 -2/1
//! ```
//!
//! `field` lists minimal polynomial coefficients from the constant term up.
//! Each `a n` line carries the power-basis coordinates of `a_n`.

use std::fmt::Write as _;

use eigencong::hecke::Eigenform;
use eigencong::NumberField;
use eigencong_kernels::{Field, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

pub const HEADER: &str = "eigencong-eigenform";
pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },
    #[error("missing field `{field}` (by line {line})")]
    Missing { line: usize, field: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Core(#[from] eigencong::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenformFile {
    pub version: u32,
    pub label: Option<String>,
    pub weight: i64,
    pub level: u64,
    pub minpoly: Vec<BigInt>,
    /// `coefficients[n - 1]` holds the coordinates of `a_n`.
    pub coefficients: Vec<Vec<BigRational>>,
}

pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` and bare integers.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

fn parse_err(line: usize, field: &str, message: impl Into<String>) -> FileError {
    FileError::Parse { line, field: field.into(), message: message.into() }
}

fn one_value<'a>(line: usize, field: &str, rest: &[&'a str]) -> Result<&'a str, FileError> {
    match rest {
        [v] => Ok(v),
        _ => Err(parse_err(line, field, format!("expected one value, found {}", rest.len()))),
    }
}

impl EigenformFile {
    pub fn precision(&self) -> usize {
        self.coefficients.len()
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line, header) = lines.next().ok_or(FileError::Missing { line: 0, field: "header".into() })?;
        let version = match header.split_whitespace().collect::<Vec<_>>()[..] {
            [HEADER, v] => v
                .strip_prefix('v')
                .and_then(|v| v.parse::<u32>().ok())
                .ok_or_else(|| parse_err(line, "header", format!("bad version {v:?}")))?,
            _ => return Err(parse_err(line, "header", format!("expected `{HEADER} v{VERSION}`"))),
        };
        if version != VERSION {
            return Err(parse_err(line, "header", format!("unsupported version {version}")));
        }

        let mut label = None;
        let mut weight = None;
        let mut level = None;
        let mut minpoly: Option<Vec<BigInt>> = None;
        let mut count = None;
        let mut coefficients = Vec::new();
        let mut last = line;

        for (line, text) in lines {
            last = line;
            let words: Vec<&str> = text.split_whitespace().collect();
            let (key, rest) = (words[0], &words[1..]);
            if key != "a" && !coefficients.is_empty() {
                return Err(parse_err(line, key, "header fields must precede coefficient lines"));
            }
            let dup = |seen: bool| if seen { Err(parse_err(line, key, "given twice")) } else { Ok(()) };
            match key {
                "label" => {
                    dup(label.is_some())?;
                    if rest.is_empty() {
                        return Err(parse_err(line, key, "empty label"));
                    }
                    label = Some(rest.join(" "));
                }
                "weight" => {
                    dup(weight.is_some())?;
                    let v = one_value(line, key, rest)?;
                    weight = Some(v.parse::<i64>().map_err(|_| parse_err(line, key, format!("not an integer: {v:?}")))?);
                }
                "level" => {
                    dup(level.is_some())?;
                    let v = one_value(line, key, rest)?;
                    let n = v.parse::<u64>().ok().filter(|&n| n > 0);
                    level = Some(n.ok_or_else(|| parse_err(line, key, format!("not a positive integer: {v:?}")))?);
                }
                "field" => {
                    dup(minpoly.is_some())?;
                    if rest.len() < 2 {
                        return Err(parse_err(line, key, "need at least two coefficients"));
                    }
                    let c = rest
                        .iter()
                        .map(|v| v.parse::<BigInt>().map_err(|_| parse_err(line, key, format!("not an integer: {v:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    minpoly = Some(c);
                }
                "count" => {
                    dup(count.is_some())?;
                    let v = one_value(line, key, rest)?;
                    let n = v.parse::<usize>().ok().filter(|&n| n > 0);
                    count = Some(n.ok_or_else(|| parse_err(line, key, format!("not a positive integer: {v:?}")))?);
                }
                "a" => {
                    let need = |f: &str, v: &Option<_>| -> Result<(), FileError> {
                        if v.is_none() {
                            return Err(FileError::Missing { line, field: f.into() });
                        }
                        Ok(())
                    };
                    need("weight", &weight.map(|_| ()))?;
                    need("level", &level.map(|_| ()))?;
                    need("field", &minpoly.as_ref().map(|_| ()))?;
                    need("count", &count.map(|_| ()))?;
                    let d = minpoly.as_ref().map_or(0, |m| m.len() - 1);
                    let n = coefficients.len() + 1;
                    let field = format!("a_{n}");
                    if n > count.unwrap_or(0) {
                        return Err(parse_err(line, &field, "more coefficient lines than `count`"));
                    }
                    let Some((idx, coords)) = rest.split_first() else {
                        return Err(parse_err(line, &field, "missing index"));
                    };
                    if idx.parse::<usize>().ok() != Some(n) {
                        return Err(parse_err(line, &field, format!("expected index {n}, found {idx:?}")));
                    }
                    if coords.len() != d {
                        return Err(parse_err(line, &field, format!("expected {d} coordinates, found {}", coords.len())));
                    }
                    let c = coords
                        .iter()
                        .map(|v| parse_rational(v).map_err(|m| parse_err(line, &field, m)))
                        .collect::<Result<Vec<_>, _>>()?;
                    coefficients.push(c);
                }
                other => return Err(parse_err(line, other, "unknown field")),
            }
        }

        let missing = |f: &str| FileError::Missing { line: last, field: f.into() };
        let weight = weight.ok_or_else(|| missing("weight"))?;
        let level = level.ok_or_else(|| missing("level"))?;
        let minpoly = minpoly.ok_or_else(|| missing("field"))?;
        let count = count.ok_or_else(|| missing("count"))?;
        if coefficients.len() < count {
            return Err(missing(&format!("a_{}", coefficients.len() + 1)));
        }
        Ok(Self { version, label, weight, level, minpoly, coefficients })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{HEADER} v{}\n", self.version);
        if let Some(l) = &self.label {
            writeln!(s, "label {l}").unwrap();
        }
        writeln!(s, "weight {}", self.weight).unwrap();
        writeln!(s, "level {}", self.level).unwrap();
        let poly: Vec<String> = self.minpoly.iter().map(|c| c.to_string()).collect();
        writeln!(s, "field {}", poly.join(" ")).unwrap();
        writeln!(s, "count {}", self.coefficients.len()).unwrap();
        for (i, c) in self.coefficients.iter().enumerate() {
            let coords: Vec<String> = c.iter().map(format_rational).collect();
            writeln!(s, "a {} {}", i + 1, coords.join(" ")).unwrap();
        }
        s
    }

    pub fn from_eigenform(label: Option<String>, f: &Eigenform) -> Self {
        Self {
            version: VERSION,
            label,
            weight: f.weight(),
            level: f.level(),
            minpoly: f.field().minpoly().coeffs().to_vec(),
            coefficients: f.coeffs().iter().map(|a| a.coords().to_vec()).collect(),
        }
    }

    /// Decodes the coefficients, checking normalization, irreducibility and
    /// integrality.
    pub fn to_eigenform(&self) -> Result<Eigenform, FileError> {
        if self.minpoly.last().is_none_or(|c| !c.is_one()) {
            return Err(FileError::Invariant("minimal polynomial is not monic".into()));
        }
        let field = NumberField::new(ZPoly::new(self.minpoly.clone())).map_err(|e| FileError::Invariant(e.to_string()))?;
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| field.from_coords(c.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.first().is_none_or(|a| *a != field.one()) {
            return Err(FileError::Invariant("eigenform is not normalized: a_1 ≠ 1".into()));
        }
        Eigenform::new(self.weight, self.level, field, coeffs).map_err(|e| match e {
            eigencong::Error::NotAlgebraicInteger(m) => FileError::Invariant(format!("coefficient is not an algebraic integer: {m}")),
            e => FileError::Core(e),
        })
    }
}
