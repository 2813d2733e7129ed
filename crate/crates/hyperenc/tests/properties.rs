//! Property tests for the algebraic invariants: root-map inversion,
//! Legendre multiplicativity, encoder soundness across families, divisor
//! construction, and serialization round trips.

use std::sync::Arc;

use num_bigint::BigUint;
use proptest::prelude::*;

use hyperenc::curves::{
    CurveSpec, DeMoivreCurve, Genus2Type1Curve, Genus2Type2Curve, HessianCurve, QuasiQuadraticCurve,
};
use hyperenc::encoders::{encode, EncodeError};
use hyperenc::ffield::{ElementBuilder, FieldCtx};
use hyperenc::jacobian::{encode_smooth_divisor, negate_point, DivisorError};

/// Moduli spanning word sizes up to 2^64, both residue classes mod 3.
const PRIMES: [u64; 6] = [
    5,
    1019,
    9887,
    65537,
    4294967291,           // 2^32 - 5
    18446744073709551557, // 2^64 - 59
];

fn ctx_for(idx: usize) -> Arc<FieldCtx> {
    FieldCtx::from_u64(PRIMES[idx % PRIMES.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// cube_root(x)^3 = x and nth_root(x, d)^d = x for every valid d <= 31.
    #[test]
    fn root_inversion(idx in 0usize..PRIMES.len(), x: u64, d in 2u64..=31) {
        let ctx = ctx_for(idx);
        let e = ctx.element(BigUint::from(x));
        if ctx.is_2_mod_3() {
            let r = e.cube_root().unwrap();
            prop_assert_eq!(r.pow_u64(3), e.clone());
        }
        if ctx.has_nth_root(d) {
            let r = e.nth_root(d).unwrap();
            prop_assert_eq!(r.pow_u64(d), e);
        } else {
            prop_assert!(e.nth_root(d).is_err());
        }
    }

    /// legendre(xy) = legendre(x) legendre(y) for nonzero x, y.
    #[test]
    fn legendre_multiplicative(idx in 0usize..PRIMES.len(), x in 1u64..u64::MAX, y in 1u64..u64::MAX) {
        let ctx = ctx_for(idx);
        let xe = ctx.element(BigUint::from(x));
        let ye = ctx.element(BigUint::from(y));
        prop_assume!(!xe.is_zero() && !ye.is_zero());
        prop_assert_eq!((&xe * &ye).legendre(), xe.legendre() * ye.legendre());
    }

    /// Canonical hex round-trips.
    #[test]
    fn hex_roundtrip(idx in 0usize..PRIMES.len(), x: u64) {
        let ctx = ctx_for(idx);
        let e = ctx.element(BigUint::from(x));
        prop_assert_eq!(ctx.from_hex(&e.to_hex()).unwrap(), e);
    }

    /// The master soundness property: whatever the family and parameters,
    /// a successful encode lands on the curve, and encoding is a pure
    /// function of (curve, t).
    #[test]
    fn encode_soundness_master(
        qi in 0usize..4,
        family in 0u8..5,
        p1: u64, p2: u64, p3: u64, p4: u64, p5: u64,
        t: u64,
    ) {
        let q = [11u64, 23, 41, 53][qi];
        let ctx = FieldCtx::from_u64(q).unwrap();
        let f = |v: u64| ctx.element(BigUint::from(v));
        let nz = |v: u64| ctx.element(BigUint::from(v % (q - 1) + 1));
        let spec = match family {
            0 => HessianCurve::new(f(p1)).map(CurveSpec::Hessian),
            1 => Genus2Type1Curve::new(nz(p1), f(p2)).map(CurveSpec::Genus2Type1),
            2 => Genus2Type2Curve::new(nz(p1), nz(p2), f(p3), f(p4), nz(p5))
                .map(CurveSpec::Genus2Type2),
            3 => QuasiQuadraticCurve::new(3 + 2 * (p2 % 4), nz(p1)).map(CurveSpec::QuasiQuadratic),
            _ => DeMoivreCurve::new(3 + 2 * (p3 % 4), nz(p1), f(p2)).map(CurveSpec::DeMoivre),
        };
        let Ok(spec) = spec else { return Ok(()) };
        let te = f(t);
        match encode(&spec, &te) {
            Ok(p) => {
                prop_assert!(spec.is_on_curve(&p));
                prop_assert_eq!(encode(&spec, &te).unwrap(), p);
            }
            Err(EncodeError::NotEncodable { .. }) | Err(EncodeError::Capability(_)) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        }
    }

    /// Divisor construction satisfies the reduced-divisor invariants for
    /// random seed lists over the hyperelliptic families.
    #[test]
    fn divisor_invariants(
        qi in 0usize..3,
        family in 0u8..3,
        seeds in proptest::collection::vec(any::<u64>(), 1..8),
        a in 1u64..40,
        b: u64,
    ) {
        let q = [17u64, 41, 53][qi];
        let ctx = FieldCtx::from_u64(q).unwrap();
        let f = |v: u64| ctx.element(BigUint::from(v));
        let nz = |v: u64| ctx.element(BigUint::from(v % (q - 1) + 1));
        let spec = match family {
            0 => QuasiQuadraticCurve::new(3, nz(a)).map(CurveSpec::QuasiQuadratic),
            1 => DeMoivreCurve::new(5, nz(a), f(b)).map(CurveSpec::DeMoivre),
            _ => Genus2Type1Curve::new(nz(a), f(b)).map(CurveSpec::Genus2Type1),
        };
        let Ok(spec) = spec else { return Ok(()) };
        let g = spec.hyperelliptic_genus().unwrap();
        prop_assume!(spec.ctx().has_nth_root(match &spec {
            CurveSpec::QuasiQuadratic(c) => c.d(),
            CurveSpec::DeMoivre(c) => c.d(),
            _ => 3,
        }));
        let seeds: Vec<_> = seeds.into_iter().map(f).collect();
        match encode_smooth_divisor(&spec, &seeds, g) {
            Ok(d) => {
                prop_assert!(d.r() >= 1 && d.r() <= g);
                for (i, p) in d.points.iter().enumerate() {
                    prop_assert!(spec.is_on_curve(p));
                    prop_assert!(!p.is_infinity());
                    for (j, other) in d.points.iter().enumerate() {
                        if i != j {
                            prop_assert_ne!(p, &negate_point(other));
                        }
                    }
                }
                prop_assert_eq!(encode_smooth_divisor(&spec, &seeds, g).unwrap(), d);
            }
            Err(DivisorError::EmptyDivisor) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        }
    }
}
