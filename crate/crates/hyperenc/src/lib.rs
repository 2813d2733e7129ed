//! Deterministic point encodings for Hessian elliptic curves and families of
//! hyperelliptic curves over odd prime fields.
//!
//! The encodings map a field element `t` to a rational point using only
//! field operations and bijective power maps (no square roots), so they run
//! in deterministic polynomial time. Five curve families are supported:
//!
//! - Hessian cubics `x^3 + y^3 + 1 = 3dxy` (genus 1),
//! - two genus-2 families `y^2 = (x^3+3ax+2)^2 + 8bx^3` and
//!   `y^2/λ = (x^3+3μx+2a)^2 + 4b`,
//! - quasiquadratic curves `y^2 = x^{2d} + x^d + a` (genus `d-1`),
//! - De Moivre curves `y^2 = p_{a,b}(x)` of odd degree `d` (genus `(d-1)/2`).
//!
//! Alongside the encoders live preimage solvers, Igusa invariants for the
//! genus-2 families, 1-smooth reduced-divisor construction on the Jacobian,
//! and an exhaustive small-field census engine that measures image sizes,
//! excluded sets and preimage multiplicities against the theorems that
//! predict them.
//!
//! Start with the runnable examples (`cargo run --example hessian`) or the
//! `hyperenc` binary for the JSON command-line interface.

// Field elements and curve points key several maps; their Eq/Ord/Hash read
// only residues, never the context's interior-mutable exponent cache.
#![allow(clippy::mutable_key_type)]

pub mod census;
pub mod cli;
pub mod curves;
pub mod encoders;
pub mod ffield;
pub mod hashing;
pub mod jacobian;
mod poly;
