//! Canonical file formats: diagrams as JSON, Laurent polynomials as JSON
//! maps, and search results as JSON lines.

use crate::braid::SearchRow;
use crate::diagram::{DiagramError, OneOneDiagram};
use crate::floer::LaurentPolynomial;
use crate::lattice::{LatticeVec, Point, ProjectiveSlope, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed rational: {0}")]
    BadRational(String),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Wire form of a diagram: rationals are "num/den" strings in lowest terms
/// with positive denominator; the closing edge of the beta path is implicit.
#[derive(Serialize, Deserialize)]
pub struct DiagramFile {
    pub beta: Vec<[String; 2]>,
    pub offset: [i64; 2],
    pub w: [String; 2],
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_string(s: &str) -> Result<Rational, IoError> {
    let parse_int = |t: &str| -> Result<BigInt, IoError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| IoError::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den <= BigInt::from(0) {
                return Err(IoError::BadRational(s.to_string()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from(parse_int(s)?)),
    }
}

pub fn diagram_to_json(d: &OneOneDiagram) -> String {
    let file = DiagramFile {
        beta: d
            .beta_path()
            .iter()
            .map(|p| [rational_to_string(&p.x), rational_to_string(&p.y)])
            .collect(),
        offset: [d.offset().x, d.offset().y],
        w: [rational_to_string(&d.w().x), rational_to_string(&d.w().y)],
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

pub fn diagram_from_json(text: &str) -> Result<OneOneDiagram, IoError> {
    let file: DiagramFile = serde_json::from_str(text)?;
    let beta = file
        .beta
        .iter()
        .map(|[x, y]| Ok(Point::new(rational_from_string(x)?, rational_from_string(y)?)))
        .collect::<Result<Vec<_>, IoError>>()?;
    let w = Point::new(
        rational_from_string(&file.w[0])?,
        rational_from_string(&file.w[1])?,
    );
    Ok(OneOneDiagram::validate(
        beta,
        LatticeVec::new(file.offset[0], file.offset[1]),
        w,
    )?)
}

/// Laurent polynomials serialize as {"exponent": coefficient} with string
/// integer keys.
pub fn laurent_to_json(p: &LaurentPolynomial) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), serde_json::Value::from(c)))
        .collect();
    serde_json::Value::Object(map)
}

pub fn slope_to_string(s: &ProjectiveSlope) -> String {
    s.to_string()
}

/// One search row as a JSON line.
pub fn search_row_to_json(row: &SearchRow) -> serde_json::Value {
    serde_json::json!({
        "omega": row.braid.omega(),
        "b": row.braid.b(),
        "m": row.braid.m(),
        "interval": [row.interval.0.to_string(), row.interval.1.to_string()],
        "fillings": row.fillings.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    })
}
