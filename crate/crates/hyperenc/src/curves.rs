//! Curve families, parameter validation, membership predicates and
//! invariants.
//!
//! Each constructor checks the family's nondegeneracy conditions and caches
//! the derived quantities the encoders consume in their inner loops: the
//! `t`-independent coefficients of the auxiliary degree-8 polynomials and
//! the constants of the birational maps.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ffield::{ElementBuilder, FieldCtx, FieldElement, FieldError, HexError};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("degenerate curve: {0}")]
    Degenerate(String),
    #[error("invariant undefined: denominator vanishes")]
    UndefinedInvariant,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// An affine point or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Affine { x: FieldElement, y: FieldElement },
    Infinity,
}

impl CurvePoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    pub fn coords(&self) -> Option<(&FieldElement, &FieldElement)> {
        match self {
            CurvePoint::Affine { x, y } => Some((x, y)),
            CurvePoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

// ---------------------------------------------------------------------------
// Hessian: x^3 + y^3 + 1 = 3 d x y,  d != 1
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) struct HessianConsts {
    /// `(d^2+d+1) / (3 (d+2)^3)`.
    pub a: FieldElement,
    /// The single non-encodable t: `(2d+1)(d^2+d+7) / (18 (d+2)^3)`.
    pub excluded_t: FieldElement,
    pub three_a_half: FieldElement,
    pub neg_three_a_half: FieldElement,
    pub three_a: FieldElement,
    /// 27 a^2
    pub a2_27: FieldElement,
    /// 54 a - 4
    pub a54_m4: FieldElement,
    pub dp2: FieldElement,
    /// d^2 + d + 1
    pub k: FieldElement,
    /// 3 (d+2)^2
    pub dp2_sq3: FieldElement,
    /// 3 (d+2)^3
    pub dp23_3: FieldElement,
    /// 3 (d+1)(d+2)^2
    pub dp1_dp2sq_3: FieldElement,
    pub inv6: FieldElement,
}

#[derive(Debug, Clone)]
pub struct HessianCurve {
    d: FieldElement,
    /// Encoding constants; absent exactly at d = -2.
    consts: Option<HessianConsts>,
}

impl HessianCurve {
    pub fn new(d: FieldElement) -> Result<HessianCurve, CurveError> {
        let ctx = d.ctx().clone();
        if d == ctx.one() {
            return Err(CurveError::Degenerate("d=1".into()));
        }
        if d == ctx.int(-2) {
            return Ok(HessianCurve { d, consts: None });
        }
        let dp2 = &d + 2;
        let dp2_cubed = dp2.pow_u64(3);
        let k = &d * &d + &d + 1;
        let a = k.div(&(&dp2_cubed * 3)).expect("d != -2");
        if a.is_zero() {
            return Err(CurveError::Degenerate("a=0".into()));
        }
        if (&a * 27).is_one() {
            return Err(CurveError::Degenerate("a=1/27".into()));
        }
        let excluded_t = ((&d * 2 + 1) * (&d * &d + &d + 7))
            .div(&(&dp2_cubed * 18))
            .expect("d != -2");
        let three_a_half = (&a * 3).div(&ctx.int(2)).expect("q odd");
        let dp2_sq3 = (&dp2 * &dp2) * 3;
        let consts = HessianConsts {
            three_a_half: three_a_half.clone(),
            neg_three_a_half: three_a_half.neg(),
            three_a: &a * 3,
            a2_27: (&a * &a) * 27,
            a54_m4: &a * 54 - 4,
            k,
            dp23_3: &dp2_cubed * 3,
            dp1_dp2sq_3: (&d + 1) * &dp2_sq3,
            dp2_sq3,
            dp2,
            inv6: ctx.int(6).inv().expect("q > 3"),
            a,
            excluded_t,
        };
        Ok(HessianCurve {
            d,
            consts: Some(consts),
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.d.ctx()
    }

    pub fn d(&self) -> &FieldElement {
        &self.d
    }

    pub fn is_minus_two(&self) -> bool {
        self.consts.is_none()
    }

    pub(crate) fn consts(&self) -> Option<&HessianConsts> {
        self.consts.as_ref()
    }

    /// The derived parameter `a`; `None` exactly at d = -2.
    pub fn a(&self) -> Option<&FieldElement> {
        self.consts.as_ref().map(|c| &c.a)
    }

    /// The single excluded t for d != -2 (the whole of F_q* encodes at
    /// d = -2 except t = 0).
    pub fn excluded_t(&self) -> Option<&FieldElement> {
        self.consts.as_ref().map(|c| &c.excluded_t)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => x.pow_u64(3) + y.pow_u64(3) + 1 == &self.d * 3 * (x * y),
        }
    }

    /// `j = 27 d^3 (d+2)^3 (d^2-2d+4)^3 / ((d-1)^3 (d^2+d+1)^3)`.
    pub fn j_invariant(&self) -> Result<FieldElement, CurveError> {
        let d = &self.d;
        let num = d.pow_u64(3) * 27 * (d + 2).pow_u64(3) * (d * d - d * 2 + 4).pow_u64(3);
        let den = (d - 1).pow_u64(3) * (d * d + d + 1).pow_u64(3);
        num.div(&den).map_err(|_| CurveError::UndefinedInvariant)
    }
}

// ---------------------------------------------------------------------------
// Genus 2, type 1: y^2 = (x^3 + 3ax + 2)^2 + 8 b x^3
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) struct Type1Consts {
    /// delta(t) = -t^8 + c4 t^4 + c2 t^2 + c0
    pub delta_c4: FieldElement,
    pub delta_c2: FieldElement,
    pub delta_c0: FieldElement,
    /// 3p of the auxiliary Weierstrass curve V^2 = U^3 + pU + q'.
    pub three_p: FieldElement,
    /// W = -3aU + w0
    pub w0: FieldElement,
    /// numerator of Y: y_u U + y_0
    pub y_u: FieldElement,
    pub y_0: FieldElement,
}

#[derive(Debug, Clone)]
pub struct Genus2Type1Curve {
    a: FieldElement,
    b: FieldElement,
    pub(crate) consts: Type1Consts,
}

impl Genus2Type1Curve {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Genus2Type1Curve, CurveError> {
        if a.is_zero() {
            // W = a(-3U + (b+1)^2 + a^3) vanishes identically, so no t is
            // encodable even when J10 != 0.
            return Err(CurveError::Degenerate("a=0".into()));
        }
        if type1_nondegeneracy(&a, &b).is_zero() {
            return Err(CurveError::Degenerate(
                "4a^6b^3 - b^3(b^2+20b-8)a^3 + 4b^3(b+1)^3 = 0".into(),
            ));
        }
        let a3 = a.pow_u64(3);
        let a6 = a3.square();
        let a9 = &a6 * &a3;
        let b1 = &b + 1;
        let tb1 = &b * 2 - 1;
        let delta_c4 = &b1 * &tb1 * &a3 * -12 + &a6 * 6 + b1.pow_u64(4) * 6;
        let delta_c2 = (&b * 2 - &b * &b * 5 - 2) * &a6 * 12 - b1.pow_u64(6) * 8 - &a9 * 8
            + &tb1 * b1.pow_u64(3) * &a3 * 24;
        let delta_c0 = (&a6 - &b1 * &tb1 * &a3 * 2 + b1.pow_u64(4)).square() * 3;
        let three_p = a6.neg() + &b1 * &tb1 * &a3 * 2 - b1.pow_u64(4);
        let w0 = &a * (b1.square() + &a3);
        let y_u = &b1 * 3;
        let y_0 = &tb1 * &a3 - b1.pow_u64(3);
        Ok(Genus2Type1Curve {
            a,
            b,
            consts: Type1Consts {
                delta_c4,
                delta_c2,
                delta_c0,
                three_p,
                w0,
                y_u,
                y_0,
            },
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => {
                let core = x.pow_u64(3) + &self.a * 3 * x + 2;
                y.square() == core.square() + &self.b * 8 * x.pow_u64(3)
            }
        }
    }

    pub fn igusa(&self) -> IgusaInvariants {
        igusa_type1(&self.a, &self.b)
    }
}

/// `4a^6b^3 - b^3(b^2+20b-8)a^3 + 4b^3(b+1)^3`, which is `J10 / (2^28 3^6)`.
pub fn type1_nondegeneracy(a: &FieldElement, b: &FieldElement) -> FieldElement {
    let a3 = a.pow_u64(3);
    let b3 = b.pow_u64(3);
    a3.square() * &b3 * 4 - &b3 * (b * b + b * 20 - 8) * &a3 + &b3 * (b + 1).pow_u64(3) * 4
}

// ---------------------------------------------------------------------------
// Genus 2, type 2: y^2 / lambda = (x^3 + 3 mu x + 2a)^2 + 4b
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) struct Type2Consts {
    pub delta_c4: FieldElement,
    pub delta_c2: FieldElement,
    pub delta_c0: FieldElement,
    /// tail of V, to be divided by 3t.
    pub v_tail: FieldElement,
    /// W = -9U^2 + w1 U + w0
    pub w1: FieldElement,
    pub w0: FieldElement,
    /// numerator of Y: y_u U + y_v V + y_0
    pub y_u: FieldElement,
    pub y_v: FieldElement,
    pub y_0: FieldElement,
    /// numerator of -Z W^2, grouped by monomials in U and V
    pub z_u4: FieldElement,
    pub z_u3: FieldElement,
    pub z_u2v: FieldElement,
    pub z_u2: FieldElement,
    pub z_uv: FieldElement,
    pub z_u: FieldElement,
    pub z_v: FieldElement,
    pub z_0: FieldElement,
}

#[derive(Debug, Clone)]
pub struct Genus2Type2Curve {
    lambda: FieldElement,
    mu: FieldElement,
    a: FieldElement,
    v: FieldElement,
    w: FieldElement,
    u: FieldElement,
    b: FieldElement,
    z: FieldElement,
    pub(crate) consts: Type2Consts,
}

impl Genus2Type2Curve {
    pub fn new(
        lambda: FieldElement,
        mu: FieldElement,
        a: FieldElement,
        v: FieldElement,
        w: FieldElement,
    ) -> Result<Genus2Type2Curve, CurveError> {
        if w.is_zero() {
            return Err(CurveError::Degenerate("w=0".into()));
        }
        if lambda.is_zero() {
            return Err(CurveError::Degenerate("lambda=0".into()));
        }
        if mu.is_zero() {
            // T(Y) = mu is the linear coefficient of the depressed cubic;
            // the Cardano step collapses when it vanishes.
            return Err(CurveError::Degenerate("mu=0".into()));
        }
        let m3 = mu.pow_u64(3);
        // u = -(2aw + w^2 - mu^3)/2w,  b = v^2/lambda - u^2,  z = (w^2 + mu^3)/2w
        let two_w = &w * 2;
        let u = (&a * &two_w + w.square() - &m3).neg().div(&two_w)?;
        let b = v.square().div(&lambda)? - u.square();
        let z = (w.square() + &m3).div(&two_w)?;
        if (&u + &a).square() + &m3 != z.square() {
            return Err(CurveError::Degenerate("(u+a)^2 + mu^3 != z^2".into()));
        }
        if b.is_zero() {
            return Err(CurveError::Degenerate("b=0".into()));
        }
        let m6 = m3.square();
        let a2 = a.square();
        let a4 = a2.square();
        let bracket = &m6 + &m3 * &a2 * 2 - &b * &m3 * 2 + &a4 + &b * &a2 * 2 + &b * &b;
        if bracket.is_zero() {
            return Err(CurveError::Degenerate(
                "mu^6 + 2mu^3a^2 - 2b mu^3 + a^4 + 2ba^2 + b^2 = 0".into(),
            ));
        }

        let m9 = &m6 * &m3;
        let m12 = m6.square();
        let ab = &a2 + &b; // a^2 + b
        let l2 = lambda.square();
        let l3 = &l2 * &lambda;
        let l4 = l2.square();
        let z2 = z.square();
        let ua = &u * &a;
        let upa = &u + &a;
        let b2 = &b * &b;

        let delta_c4 = (&m6 + (b.neg() + &a2 * 2) * &m3 + ab.square()) * &l2 * (512 * 3);
        let delta_c2 = (&m9 * -2 - (&a2 * 6 - &b * 3) * &m6 + &ab * (&b - &a2 * 2) * &m3 * 3
            - ab.pow_u64(3) * 2)
            * &l3
            * (1 << 14);
        let delta_c0 = (&m12
            + (&b * -2 + &a2 * 4) * &m9
            + (&b2 * 3 + &a4 * 6) * &m6
            + ab.square() * (b.neg() + &a2 * 2) * &m3 * 2
            + ab.pow_u64(4))
            * &l4
            * (3 * (1 << 16));
        let v_tail = (m6.neg() + (&b - &a2 * 2) * &m3 - ab.square()) * &l2 * 128;

        let w1 = &lambda * (&z2 * -3 - &b * 2 + &ua * 6 + &a2 * 4 + &m3 * 4) * -48;
        let w0 = (&m6 * -4
            + (&z2 * 6 + &a2 - &ua * 12 + &b * 4) * &m3
            + &ab * (&a2 * 5 + &ua * 6 - &b - &z2 * 3))
            * &l2
            * 256;

        let y_u = &v * &upa * -288;
        let y_v = &z * -72;
        let y_0 = &lambda
            * &v
            * (&b * &u + a.pow_u64(3) - &m3 * &u * 2 + &a * &b + &a * &m3 + &u * &a2)
            * 1536;

        let z_u4 = &z * -324;
        let z_u3 = &lambda * &m3 * &z * 6912
            + &lambda * &z * (&z2 * -3 - &b * 2 + &ua * 6 + &a2 * 4) * 1728;
        let z_u2v = &v * &upa * -2592;
        let z_u2 = &l2 * &z * &ab * (&a2 * 2 + &ua * 6 - &b * 4 - &z2 * 3) * -27648
            + &l2 * &z * &m6 * 193536
            - &l2 * &z * (&a2 * -5 - &ua * 12 + &z2 * 6 + &b * 7) * &m3 * 27648;
        let z_uv = &lambda * &v * (&u * -2 + &a) * &m3 * 27648 + &lambda * &v * &ab * &upa * 27648;
        let z_u = &l3
            * &z
            * (&ua * &a2 * 36 - &a2 * &z2 * 18 + &a4 * 12 + &z2 * &b * 9 + &b2 * 30
                - &a2 * &b * 12
                - &ua * &b * 18)
            * &m3
            * 49152
            + &l3 * &z * (&b * -6 + &ua * 18 + &a2 * 12 - &z2 * 9) * &m6 * 49152
            + &l3 * &z * ab.square() * (&a2 * 4 + &ua * 18 - &b * 14 - &z2 * 9) * 49152
            + &l3 * &m9 * &z * 196608;
        let z_v = &v * &l2 * ab.square() * &upa * -73728
            - &v * &l2 * (&u * 4 - &a * 8) * &m6 * 73728
            - &v * &l2
                * (&b * &u * -4 + &z2 * &a * 9 - a.pow_u64(3) * 7 - &u * &a2 * 13 + &a * &b * 2)
                * &m3
                * 73728;
        let z_0 = &l4 * &m12 * &z * -7340032
            - &l4 * &z * (&ua * 60 - &b * 56 + &a2 * 85 - &z2 * 30) * &m9 * 262144
            - &l4
                * &z
                * &ab
                * (&a4 * 31 + &ua * &a2 * 72 - &a2 * &b * 10 - &a2 * &z2 * 36
                    + &ua * &b * 18
                    + &b2 * 13
                    - &z2 * &b * 9)
                * &m3
                * 262144
            - &l4 * &z * ab.pow_u64(3) * (&a2 + &ua * 6 - &b * 5 - &z2 * 3) * 262144
            - &l4
                * &z
                * (&b2 * 15 + &a4 * 87 - &a2 * &z2 * 63 + &z2 * &b * 45
                    - &ua * &b * 90
                    - &a2 * &b * 33
                    + &ua * &a2 * 126)
                * &m6
                * 262144;

        Ok(Genus2Type2Curve {
            lambda,
            mu,
            a,
            v,
            w,
            u,
            b,
            z,
            consts: Type2Consts {
                delta_c4,
                delta_c2,
                delta_c0,
                v_tail,
                w1,
                w0,
                y_u,
                y_v,
                y_0,
                z_u4,
                z_u3,
                z_u2v,
                z_u2,
                z_uv,
                z_u,
                z_v,
                z_0,
            },
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }
    pub fn mu(&self) -> &FieldElement {
        &self.mu
    }
    pub fn a(&self) -> &FieldElement {
        &self.a
    }
    pub fn v(&self) -> &FieldElement {
        &self.v
    }
    pub fn w(&self) -> &FieldElement {
        &self.w
    }
    /// Derived `mu^3/2w - w/2 - a`.
    pub fn u(&self) -> &FieldElement {
        &self.u
    }
    /// Derived `v^2/lambda - u^2`.
    pub fn b(&self) -> &FieldElement {
        &self.b
    }
    /// Derived `(w^2 + mu^3) / 2w`.
    pub fn z(&self) -> &FieldElement {
        &self.z
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => {
                let core = x.pow_u64(3) + &self.mu * 3 * x + &self.a * 2;
                y.square() == &self.lambda * (core.square() + &self.b * 4)
            }
        }
    }

    pub fn igusa(&self) -> IgusaInvariants {
        igusa_type2(&self.lambda, &self.mu, &self.a, &self.b)
    }
}

// ---------------------------------------------------------------------------
// Quasiquadratic: y^2 = x^{2d} + x^d + a
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct QuasiQuadraticCurve {
    d: u64,
    a: FieldElement,
}

impl QuasiQuadraticCurve {
    pub fn new(d: u64, a: FieldElement) -> Result<QuasiQuadraticCurve, CurveError> {
        if d < 2 {
            return Err(CurveError::Degenerate("d < 2".into()));
        }
        let ctx = a.ctx();
        if (BigUint::from(d) % ctx.modulus()).is_zero() {
            return Err(CurveError::Degenerate("d divisible by char".into()));
        }
        // x^{2d} + x^d + a = (x^d - z0)(x^d - z1) has 2d distinct roots iff
        // z0 z1 = a != 0 and z0 != z1, i.e. 1 - 4a != 0.
        if a.is_zero() || (a.neg() * 4 + 1).is_zero() {
            return Err(CurveError::Degenerate("zero discriminant".into()));
        }
        Ok(QuasiQuadraticCurve { d, a })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn genus(&self) -> u64 {
        self.d - 1
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => {
                let xd = x.pow_u64(self.d);
                y.square() == xd.square() + xd + &self.a
            }
        }
    }
}

// ---------------------------------------------------------------------------
// De Moivre: y^2 = p_{a,b}(x), p of odd degree d solvable by radicals
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct DeMoivreCurve {
    d: u64,
    a: FieldElement,
    b: FieldElement,
    coeffs: Vec<FieldElement>,
    a_pow_d: FieldElement,
}

impl DeMoivreCurve {
    pub fn new(d: u64, a: FieldElement, b: FieldElement) -> Result<DeMoivreCurve, CurveError> {
        if d < 3 || d.is_multiple_of(2) {
            return Err(CurveError::Degenerate("d must be odd and >= 3".into()));
        }
        let ctx = a.ctx().clone();
        if (BigUint::from(d) % ctx.modulus()).is_zero() {
            return Err(CurveError::Degenerate("d divisible by char".into()));
        }
        let coeffs = demoivre_coefficients(d, &a, &b);
        let p = Poly::new(coeffs.clone());
        // Res(p, p') / lc with lc = 1: zero exactly on repeated roots.
        if p.resultant(&p.derivative()).is_zero() {
            return Err(CurveError::Degenerate("zero discriminant".into()));
        }
        let a_pow_d = a.pow_u64(d);
        Ok(DeMoivreCurve {
            d,
            a,
            b,
            coeffs,
            a_pow_d,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn a(&self) -> &FieldElement {
        &self.a
    }
    pub fn b(&self) -> &FieldElement {
        &self.b
    }
    pub(crate) fn a_pow_d(&self) -> &FieldElement {
        &self.a_pow_d
    }

    /// Dense ascending coefficients of `p_{a,b}`.
    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn genus(&self) -> u64 {
        (self.d - 1) / 2
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = x.ctx().zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p.coords() {
            None => true,
            Some((x, y)) => y.square() == self.eval(x),
        }
    }

    /// Igusa invariants of the genus-2 member (d = 5 only).
    pub fn igusa(&self) -> Option<IgusaInvariants> {
        (self.d == 5).then(|| igusa_demoivre(&self.a, &self.b))
    }
}

/// Coefficients of the degree-d De Moivre polynomial: the minimal polynomial
/// of `γ - a/γ` where `γ^d` runs over the roots of `θ^2 + bθ - a^d`. The
/// coefficient of `x^(d-2k)` is `(d·C(d-k,k)/(d-k)) a^k` for `1 <= k <=
/// (d-1)/2` (so `x^5 + 5ax^3 + 5a^2x + b` in degree 5); interior odd
/// coefficients vanish and the constant term is `b`.
pub fn demoivre_coefficients(d: u64, a: &FieldElement, b: &FieldElement) -> Vec<FieldElement> {
    assert!(d >= 3 && d % 2 == 1, "degree must be odd and >= 3");
    let ctx = a.ctx();
    let mut coeffs = vec![ctx.zero(); (d + 1) as usize];
    coeffs[d as usize] = ctx.one();
    coeffs[0] = b.clone();
    for k in 1..=(d - 1) / 2 {
        let m = dickson_multiplier(d, k);
        coeffs[(d - 2 * k) as usize] = ctx.element(m) * a.pow_u64(k);
    }
    coeffs
}

/// `d * C(d-k, k) / (d-k)`, an integer for 1 <= k <= (d-1)/2.
fn dickson_multiplier(d: u64, k: u64) -> BigUint {
    let mut binom = BigUint::from(1u32);
    for i in 0..k {
        binom = binom * BigUint::from(d - k - i) / BigUint::from(i + 1);
    }
    binom * BigUint::from(d) / BigUint::from(d - k)
}

// ---------------------------------------------------------------------------
// Igusa invariants
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgusaInvariants {
    pub j2: FieldElement,
    pub j4: FieldElement,
    pub j6: FieldElement,
    pub j8: FieldElement,
    pub j10: FieldElement,
}

impl IgusaInvariants {
    pub fn as_array(&self) -> [&FieldElement; 5] {
        [&self.j2, &self.j4, &self.j6, &self.j8, &self.j10]
    }
}

pub fn igusa_type1(a: &FieldElement, b: &FieldElement) -> IgusaInvariants {
    let a3 = a.pow_u64(3);
    let a6 = a3.square();
    let a9 = &a6 * &a3;
    let b1 = b + 1;
    let b2 = b * b;
    let b3 = b.pow_u64(3);
    let b4 = b2.square();
    let j2 = (&a3 * -9 + &b2 * 4 + b * 4 - 9) * (64 * 3);
    let j4 = (b * (b * 4 - 15) * &a3 * -9 + b * &b1 * (&b2 * 2 + b * 2 - 27) * 4) * (1024 * 3);
    let j6 = (&a6 * &b2 * 729 - &b2 * (&b2 * 2 + b * 3 + 21) * &a3 * 216
        + &b2 * (&b2 * 4 + b * 4 + 81) * b1.square() * 16)
        * (1 << 14);
    let j8 = (&a9 * &b2 * -6561 + &b2 * (&b2 + b * 13 - 7) * &a6 * 2916
        - &b2 * (&b4 * 4 + &b3 * 63 + &b2 * 450 - b * 149 - 810) * &a3 * 144
        + &b2 * (&b4 + &b3 * 2 + &b2 * 154 + b * 153 - 729) * b1.square() * 64)
        * ((1 << 18) * 3);
    let j10 = type1_nondegeneracy(a, b) * ((1i64 << 28) * 729);
    IgusaInvariants {
        j2,
        j4,
        j6,
        j8,
        j10,
    }
}

pub fn igusa_type2(
    lambda: &FieldElement,
    mu: &FieldElement,
    a: &FieldElement,
    b: &FieldElement,
) -> IgusaInvariants {
    let m3 = mu.pow_u64(3);
    let m6 = m3.square();
    let a2 = a * a;
    let a4 = a2.square();
    let b2 = b * b;
    let j2 = lambda.square() * (&m3 * 9 + &a2 * 9 + b * 10) * (-64 * 3);
    let j4 = b * lambda.pow_u64(4) * (&m3 * 297 + &a2 * 54 + b * 55) * (512 * 3);
    let j6 = &b2 * lambda.pow_u64(6) * (&m3 * -6480 + &a2 * 81 + b * 80) * (1 << 14);
    let j8 = &b2
        * lambda.pow_u64(8)
        * (&m6 * 31347 - &m3 * &a2 * 134136 - b * &m3 * 158310
            + &a4 * 11664
            + b * &a2 * 23940
            + &b2 * 12275)
        * (-(1i64 << 16) * 3);
    let bracket = &m6 + &m3 * &a2 * 2 - b * &m3 * 2 + &a4 + b * &a2 * 2 + &b2;
    let j10 = b.pow_u64(3) * lambda.pow_u64(10) * bracket * (-(1i64 << 24) * 729);
    IgusaInvariants {
        j2,
        j4,
        j6,
        j8,
        j10,
    }
}

pub fn igusa_demoivre(a: &FieldElement, b: &FieldElement) -> IgusaInvariants {
    let a5 = a.pow_u64(5);
    let b2 = b * b;
    let j2 = a * a * 700;
    let j4 = a.pow_u64(4) * 13750;
    let j6 = a * (&a5 * 3 + &b2 * 32) * -2500;
    let j8 = a.pow_u64(3) * (&a5 * 3109 + &b2 * 896) * -15625;
    let j10 = (&a5 * 4 + &b2).square() * 800000;
    IgusaInvariants {
        j2,
        j4,
        j6,
        j8,
        j10,
    }
}

/// The degree-30 homogeneous relation cutting out the locus of type-2
/// invariants (J8 does not appear). Exponents are ordered (J2, J4, J6, J10).
const LOCUS_TERMS: [(i64, [u64; 4]); 23] = [
    (11852352, [5, 0, 0, 2]),
    (196992, [5, 1, 1, 1]),
    (-362998800, [3, 1, 0, 2]),
    (64, [6, 0, 3, 0]),
    (-636672, [4, 0, 2, 1]),
    (-895349625, [2, 0, 1, 2]),
    (-64097340625, [0, 0, 0, 3]),
    (-373248, [4, 3, 0, 1]),
    (-4466016, [3, 2, 1, 1]),
    (2903657625, [1, 2, 0, 2]),
    (-3984, [4, 1, 3, 0]),
    (606810, [2, 1, 2, 1]),
    (3383973750, [0, 1, 1, 2]),
    (1647, [3, 0, 4, 0]),
    (49583475, [1, 0, 3, 1]),
    (11290752, [2, 4, 0, 1]),
    (38072430, [1, 3, 1, 1]),
    (76593, [2, 2, 3, 0]),
    (-115457700, [0, 2, 2, 1]),
    (20196, [1, 1, 4, 0]),
    (-530604, [0, 0, 5, 0]),
    (-85386312, [0, 5, 0, 1]),
    (-468512, [0, 3, 3, 0]),
];

/// Evaluates the locus polynomial; zero exactly on type-2 invariant tuples.
pub fn igusa_locus_residual(j: &IgusaInvariants) -> FieldElement {
    let ctx = j.j2.ctx();
    let mut acc = ctx.zero();
    for (c, [e2, e4, e6, e10]) in LOCUS_TERMS {
        acc = acc + j.j2.pow_u64(e2) * j.j4.pow_u64(e4) * j.j6.pow_u64(e6) * j.j10.pow_u64(e10) * c;
    }
    acc
}

// ---------------------------------------------------------------------------
// The tagged union over families, and its JSON document form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hessian,
    Genus2Type1,
    Genus2Type2,
    QuasiQuadratic,
    DeMoivre,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Hessian => "hessian",
            Family::Genus2Type1 => "genus2type1",
            Family::Genus2Type2 => "genus2type2",
            Family::QuasiQuadratic => "quasiquadratic",
            Family::DeMoivre => "demoivre",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "hessian" => Family::Hessian,
            "genus2type1" => Family::Genus2Type1,
            "genus2type2" => Family::Genus2Type2,
            "quasiquadratic" => Family::QuasiQuadratic,
            "demoivre" => Family::DeMoivre,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // one value per curve, not per point
pub enum CurveSpec {
    Hessian(HessianCurve),
    Genus2Type1(Genus2Type1Curve),
    Genus2Type2(Genus2Type2Curve),
    QuasiQuadratic(QuasiQuadraticCurve),
    DeMoivre(DeMoivreCurve),
}

impl CurveSpec {
    pub fn family(&self) -> Family {
        match self {
            CurveSpec::Hessian(_) => Family::Hessian,
            CurveSpec::Genus2Type1(_) => Family::Genus2Type1,
            CurveSpec::Genus2Type2(_) => Family::Genus2Type2,
            CurveSpec::QuasiQuadratic(_) => Family::QuasiQuadratic,
            CurveSpec::DeMoivre(_) => Family::DeMoivre,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        match self {
            CurveSpec::Hessian(c) => c.ctx(),
            CurveSpec::Genus2Type1(c) => c.ctx(),
            CurveSpec::Genus2Type2(c) => c.ctx(),
            CurveSpec::QuasiQuadratic(c) => c.ctx(),
            CurveSpec::DeMoivre(c) => c.ctx(),
        }
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match self {
            CurveSpec::Hessian(c) => c.contains(p),
            CurveSpec::Genus2Type1(c) => c.contains(p),
            CurveSpec::Genus2Type2(c) => c.contains(p),
            CurveSpec::QuasiQuadratic(c) => c.contains(p),
            CurveSpec::DeMoivre(c) => c.contains(p),
        }
    }

    /// Genus of the hyperelliptic `y^2 = f(x)` model; `None` for Hessian
    /// cubics, which are not in hyperelliptic form.
    pub fn hyperelliptic_genus(&self) -> Option<u64> {
        match self {
            CurveSpec::Hessian(_) => None,
            CurveSpec::Genus2Type1(_) | CurveSpec::Genus2Type2(_) => Some(2),
            CurveSpec::QuasiQuadratic(c) => Some(c.genus()),
            CurveSpec::DeMoivre(c) => Some(c.genus()),
        }
    }

    pub fn to_doc(&self) -> CurveSpecDoc {
        let q = self.ctx().modulus().to_string();
        let family = self.family().as_str().to_string();
        let mut doc = CurveSpecDoc {
            family,
            q,
            ..CurveSpecDoc::default()
        };
        match self {
            CurveSpec::Hessian(c) => {
                doc.d = Some(DParam::Element(c.d().to_hex()));
            }
            CurveSpec::Genus2Type1(c) => {
                doc.a = Some(c.a().to_hex());
                doc.b = Some(c.b().to_hex());
            }
            CurveSpec::Genus2Type2(c) => {
                doc.lambda = Some(c.lambda().to_hex());
                doc.mu = Some(c.mu().to_hex());
                doc.a = Some(c.a().to_hex());
                doc.v = Some(c.v().to_hex());
                doc.w = Some(c.w().to_hex());
            }
            CurveSpec::QuasiQuadratic(c) => {
                doc.d = Some(DParam::Degree(c.d()));
                doc.a = Some(c.a().to_hex());
            }
            CurveSpec::DeMoivre(c) => {
                doc.d = Some(DParam::Degree(c.d()));
                doc.a = Some(c.a().to_hex());
                doc.b = Some(c.b().to_hex());
            }
        }
        doc
    }
}

/// `d` is a hex field element for the Hessian family and a plain integer
/// degree for the quasiquadratic / De Moivre families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DParam {
    Degree(u64),
    Element(String),
}

/// The curve-spec document: `q` in decimal, field elements in canonical hex.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CurveSpecDoc {
    pub family: String,
    pub q: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<DParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DocError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("q is not a decimal integer")]
    BadModulus,
    #[error("missing parameter {0}")]
    MissingParam(&'static str),
    #[error("parameter {name}: {err}")]
    BadParam { name: &'static str, err: HexError },
    #[error("parameter d must be {0}")]
    BadD(&'static str),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

impl CurveSpecDoc {
    pub fn parse_json(s: &str) -> Result<CurveSpecDoc, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("doc serializes")
    }

    /// Validates the document into a usable curve.
    pub fn build(&self) -> Result<CurveSpec, DocError> {
        let family = Family::parse(&self.family)
            .ok_or_else(|| DocError::UnknownFamily(self.family.clone()))?;
        let q: BigUint = self.q.parse().map_err(|_| DocError::BadModulus)?;
        let ctx = FieldCtx::new(q)?;
        let elem = |name: &'static str, v: &Option<String>| -> Result<FieldElement, DocError> {
            let s = v.as_ref().ok_or(DocError::MissingParam(name))?;
            ctx.from_hex(s)
                .map_err(|err| DocError::BadParam { name, err })
        };
        let degree = || -> Result<u64, DocError> {
            match &self.d {
                Some(DParam::Degree(d)) => Ok(*d),
                Some(DParam::Element(_)) => Err(DocError::BadD("an integer degree")),
                None => Err(DocError::MissingParam("d")),
            }
        };
        Ok(match family {
            Family::Hessian => {
                let d = match &self.d {
                    Some(DParam::Element(s)) => ctx
                        .from_hex(s)
                        .map_err(|err| DocError::BadParam { name: "d", err })?,
                    Some(DParam::Degree(_)) => return Err(DocError::BadD("a hex field element")),
                    None => return Err(DocError::MissingParam("d")),
                };
                CurveSpec::Hessian(HessianCurve::new(d)?)
            }
            Family::Genus2Type1 => CurveSpec::Genus2Type1(Genus2Type1Curve::new(
                elem("a", &self.a)?,
                elem("b", &self.b)?,
            )?),
            Family::Genus2Type2 => CurveSpec::Genus2Type2(Genus2Type2Curve::new(
                elem("lambda", &self.lambda)?,
                elem("mu", &self.mu)?,
                elem("a", &self.a)?,
                elem("v", &self.v)?,
                elem("w", &self.w)?,
            )?),
            Family::QuasiQuadratic => {
                CurveSpec::QuasiQuadratic(QuasiQuadraticCurve::new(degree()?, elem("a", &self.a)?)?)
            }
            Family::DeMoivre => CurveSpec::DeMoivre(DeMoivreCurve::new(
                degree()?,
                elem("a", &self.a)?,
                elem("b", &self.b)?,
            )?),
        })
    }
}
