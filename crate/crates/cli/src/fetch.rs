//! Newform documents from a remote endpoint or a fixture directory.
//!
//! A document looks like
//!
//! ```json
//! {
//!   "id": "fx-23-2-a",
//!   "label": "23.2.a.a",
//!   "weight": 2,
//!   "level": 23,
//!   "hecke_field": ["-1", "1", "1"],
//!   "coefficients": [["1", "0"], ["0", "1"]]
//! }
//! ```
//!
//! with `hecke_field` the minimal polynomial from the constant term up and
//! `coefficients[n-1]` the power-basis coordinates of `a_n`.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::file::{parse_rational, EigenformFile, FileError, VERSION};

pub const ENDPOINT_VAR: &str = "EIGENCONG_ENDPOINT";

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("no source: pass --fixtures DIR or --endpoint URL (or set {ENDPOINT_VAR})")]
    NoSource,
    #[error("invalid id {0:?}: use letters, digits, '.', '_' and '-'")]
    BadId(String),
    #[error("{id}: not found at {location}")]
    NotFound { id: String, location: String },
    #[error("{url}: {message}")]
    Http { url: String, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("schema error at key `{key}`: {message}")]
    Schema { key: String, message: String },
    #[error("fetched form is invalid: {0}")]
    Invalid(#[from] FileError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Fixtures(PathBuf),
    Endpoint(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct NewformDocument {
    id: String,
    label: String,
    weight: i64,
    level: u64,
    hecke_field: Vec<String>,
    coefficients: Vec<Vec<String>>,
}

fn check_id(id: &str) -> Result<(), FetchError> {
    let ok = !id.is_empty() && !id.starts_with('.') && id.chars().all(|c| c.is_ascii_alphanumeric() || "._-".contains(c));
    if ok {
        Ok(())
    } else {
        Err(FetchError::BadId(id.into()))
    }
}

fn schema(key: impl Into<String>, message: impl Into<String>) -> FetchError {
    FetchError::Schema { key: key.into(), message: message.into() }
}

/// Parses and validates a newform document.
pub fn parse_document(id: &str, text: &str) -> Result<EigenformFile, FetchError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: NewformDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let key = e.path().to_string();
        let inner = e.into_inner();
        // Missing and unknown keys surface at the enclosing object; the
        // message names them.
        schema(key, inner.to_string())
    })?;
    if doc.id != id {
        return Err(schema("id", format!("expected {id:?}, found {:?}", doc.id)));
    }
    let minpoly = doc
        .hecke_field
        .iter()
        .enumerate()
        .map(|(i, c)| c.parse::<BigInt>().map_err(|_| schema(format!("hecke_field[{i}]"), format!("not an integer: {c:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if minpoly.len() < 2 {
        return Err(schema("hecke_field", "need at least two coefficients"));
    }
    let d = minpoly.len() - 1;
    if doc.coefficients.is_empty() {
        return Err(schema("coefficients", "empty"));
    }
    let mut coefficients = Vec::with_capacity(doc.coefficients.len());
    for (i, a) in doc.coefficients.iter().enumerate() {
        if a.len() != d {
            return Err(schema(format!("coefficients[{i}]"), format!("expected {d} coordinates, found {}", a.len())));
        }
        let c = a
            .iter()
            .enumerate()
            .map(|(j, x)| parse_rational(x).map_err(|m| schema(format!("coefficients[{i}][{j}]"), m)))
            .collect::<Result<Vec<_>, _>>()?;
        coefficients.push(c);
    }
    let file = EigenformFile { version: VERSION, label: Some(doc.label), weight: doc.weight, level: doc.level, minpoly, coefficients };
    file.to_eigenform()?;
    Ok(file)
}

fn read_fixture(dir: &Path, id: &str) -> Result<String, FetchError> {
    let path = dir.join(format!("{id}.json"));
    std::fs::read_to_string(&path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => FetchError::NotFound { id: id.into(), location: path.display().to_string() },
        _ => FetchError::Io { path: path.display().to_string(), message: e.to_string() },
    })
}

fn read_remote(endpoint: &str, id: &str) -> Result<String, FetchError> {
    let url = format!("{}/{id}.json", endpoint.trim_end_matches('/'));
    let http = |message: String| FetchError::Http { url: url.clone(), message };
    match ureq::get(&url).call() {
        Ok(mut resp) => resp.body_mut().read_to_string().map_err(|e| http(e.to_string())),
        Err(ureq::Error::StatusCode(404)) => Err(FetchError::NotFound { id: id.into(), location: url.clone() }),
        Err(ureq::Error::StatusCode(code)) => Err(http(format!("HTTP status {code}"))),
        Err(e) => Err(http(e.to_string())),
    }
}

pub fn fetch(id: &str, source: &Source) -> Result<EigenformFile, FetchError> {
    check_id(id)?;
    let text = match source {
        Source::Fixtures(dir) => read_fixture(dir, id)?,
        Source::Endpoint(url) => read_remote(url, id)?,
    };
    parse_document(id, &text)
}
