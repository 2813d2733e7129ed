//! Retry-based hash-to-point plumbing.
//!
//! `t = digest(message ‖ counter) mod q` with a single counter byte,
//! starting at 0 and incrementing past non-encodable values. This is the
//! simple construction layered on top of the deterministic encoders; it is
//! deterministic for a fixed (message, curve, digest).

use num_bigint::BigUint;
use sha2::{Digest, Sha256, Sha512};
use thiserror::Error;

use crate::curves::{CurvePoint, CurveSpec};
use crate::encoders::{encode, EncodeError};
use crate::ffield::{ElementBuilder, FieldCtx, FieldElement};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DigestAlg {
    #[default]
    Sha256,
    Sha512,
}

impl DigestAlg {
    pub fn parse(s: &str) -> Option<DigestAlg> {
        match s {
            "sha256" => Some(DigestAlg::Sha256),
            "sha512" => Some(DigestAlg::Sha512),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DigestAlg::Sha256 => "sha256",
            DigestAlg::Sha512 => "sha512",
        }
    }

    fn digest(&self, message: &[u8], counter: u8) -> Vec<u8> {
        match self {
            DigestAlg::Sha256 => {
                let mut h = Sha256::new();
                h.update(message);
                h.update([counter]);
                h.finalize().to_vec()
            }
            DigestAlg::Sha512 => {
                let mut h = Sha512::new();
                h.update(message);
                h.update([counter]);
                h.finalize().to_vec()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HashError {
    #[error("no encodable digest in 256 attempts; the curve parameters are degenerate")]
    HashFailure,
    #[error(transparent)]
    Encode(EncodeError),
}

/// The digest interpreted as a big-endian integer, reduced mod q.
pub fn field_element_from_digest(
    ctx: &Arc<FieldCtx>,
    message: &[u8],
    counter: u8,
    alg: DigestAlg,
) -> FieldElement {
    ctx.element(BigUint::from_bytes_be(&alg.digest(message, counter)))
}

/// First encodable `t = digest(message ‖ counter) mod q`, counters 0..=255.
/// Returns the point and the counter that produced it.
pub fn hash_to_point(
    spec: &CurveSpec,
    message: &[u8],
    alg: DigestAlg,
) -> Result<(CurvePoint, u8), HashError> {
    for counter in 0..=255u8 {
        let t = field_element_from_digest(spec.ctx(), message, counter, alg);
        match encode(spec, &t) {
            Ok(p) => return Ok((p, counter)),
            Err(EncodeError::NotEncodable { .. }) => continue,
            Err(e) => return Err(HashError::Encode(e)),
        }
    }
    Err(HashError::HashFailure)
}

/// `n` seeds via the same derivation, counter bytes 0..n.
pub fn derive_seeds(
    ctx: &Arc<FieldCtx>,
    message: &[u8],
    alg: DigestAlg,
    n: u8,
) -> Vec<FieldElement> {
    (0..n)
        .map(|i| field_element_from_digest(ctx, message, i, alg))
        .collect()
}
