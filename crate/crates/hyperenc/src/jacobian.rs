//! 1-smooth reduced divisors on hyperelliptic curves, built from encoder
//! outputs.
//!
//! A reduced divisor `Σ P_i - r∞` with `r <= g` represents a Jacobian class;
//! it is 1-smooth when every `P_i` is rational. Construction consumes seeds
//! in order, encoding each one and dropping points that collide with the
//! hyperelliptic negation of an already-accepted point.

use serde::Serialize;
use thiserror::Error;

use crate::curves::{CurvePoint, CurveSpec};
use crate::encoders::{encode, EncodeError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DivisorError {
    #[error("no seed yielded an acceptable point")]
    EmptyDivisor,
    #[error("family {0} has no hyperelliptic y^2 = f(x) model")]
    NotHyperelliptic(&'static str),
    #[error("requested r = {requested} exceeds the curve genus {genus}")]
    GenusOutOfRange { requested: u64, genus: u64 },
    #[error(transparent)]
    Encode(EncodeError),
}

/// The hyperelliptic involution `(x, y) ↦ (x, -y)`.
pub fn negate_point(p: &CurvePoint) -> CurvePoint {
    match p.coords() {
        None => CurvePoint::Infinity,
        Some((x, y)) => CurvePoint::affine(x.clone(), y.neg()),
    }
}

/// `Σ P_i - r P_∞` with `r <= g`, no point the negation of another, all
/// points rational.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReducedDivisor {
    #[serde(serialize_with = "serialize_points")]
    pub points: Vec<CurvePoint>,
    pub genus: u64,
}

fn serialize_points<S: serde::Serializer>(
    points: &[CurvePoint],
    ser: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct P {
        x: String,
        y: String,
    }
    let out: Vec<P> = points
        .iter()
        .filter_map(|p| p.coords())
        .map(|(x, y)| P {
            x: x.to_hex(),
            y: y.to_hex(),
        })
        .collect();
    out.serialize(ser)
}

impl ReducedDivisor {
    pub fn r(&self) -> u64 {
        self.points.len() as u64
    }
}

/// Consumes `seeds` in order, encoding each with the family encoder.
/// Non-encodable seeds are skipped; a point whose negation is already
/// accepted is dropped and the next seed consumed (first-come-first-kept,
/// which also admits a `y = 0` point at most once). Stops at `g` accepted
/// points or seed exhaustion; `r < g` is a valid outcome.
pub fn encode_smooth_divisor(
    spec: &CurveSpec,
    seeds: &[crate::ffield::FieldElement],
    g: u64,
) -> Result<ReducedDivisor, DivisorError> {
    let genus = spec
        .hyperelliptic_genus()
        .ok_or(DivisorError::NotHyperelliptic(spec.family().as_str()))?;
    if g == 0 || g > genus {
        return Err(DivisorError::GenusOutOfRange {
            requested: g,
            genus,
        });
    }
    let mut points: Vec<CurvePoint> = Vec::with_capacity(g as usize);
    for seed in seeds {
        if points.len() as u64 == g {
            break;
        }
        let p = match encode(spec, seed) {
            Ok(p) => p,
            Err(EncodeError::NotEncodable { .. }) => continue,
            Err(e) => return Err(DivisorError::Encode(e)),
        };
        let neg = negate_point(&p);
        if points.contains(&neg) {
            continue;
        }
        points.push(p);
    }
    if points.is_empty() {
        return Err(DivisorError::EmptyDivisor);
    }
    Ok(ReducedDivisor { points, genus })
}
