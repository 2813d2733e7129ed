//! Dense univariate polynomials over a prime field: just enough machinery
//! for resultant-based discriminant checks and for finding the rational
//! roots of the small preimage polynomials (degree <= 4).

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};
use std::sync::Arc;

use crate::ffield::{ElementBuilder, FieldCtx, FieldElement};

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Poly {
    pub coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty());
        Poly { coeffs }
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Poly {
        Poly {
            coeffs: vec![ctx.zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> &FieldElement {
        self.coeffs.last().unwrap()
    }

    fn ctx(&self) -> &Arc<FieldCtx> {
        self.coeffs[0].ctx()
    }

    #[cfg(test)]
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = x.ctx().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero(self.ctx());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as i64)
            .collect();
        Poly::new(coeffs)
    }

    fn mul(&self, other: &Poly) -> Poly {
        let ctx = self.ctx();
        if self.is_zero() || other.is_zero() {
            return Poly::zero(ctx);
        }
        let mut out = vec![ctx.zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }

    fn sub(&self, other: &Poly) -> Poly {
        let ctx = self.ctx();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero());
            out.push(&a - &b);
        }
        Poly::new(out)
    }

    /// Remainder of `self` by `divisor` (divisor nonzero).
    fn rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero());
        let mut r = self.clone();
        let dl = divisor.lead().inv().expect("nonzero lead");
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let factor = r.lead() * &dl;
            let mut sub = vec![r.ctx().zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            r = r.sub(&Poly::new(sub));
        }
        r
    }

    fn monic(&self) -> Poly {
        let inv = self.lead().inv().expect("nonzero lead");
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// `base^e mod self` in `F_q[x]/(self)`.
    fn powmod(&self, base: &Poly, e: &BigUint) -> Poly {
        let ctx = self.ctx();
        let mut result = Poly::new(vec![ctx.one()]);
        let mut acc = base.rem(self);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&acc).rem(self);
            }
            if i + 1 < bits {
                acc = acc.mul(&acc).rem(self);
            }
        }
        result
    }

    /// Resultant over `F_q` by the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Poly) -> FieldElement {
        let ctx = self.ctx();
        let mut f = self.clone();
        let mut g = other.clone();
        let mut res = ctx.one();
        loop {
            if g.is_zero() {
                return ctx.zero();
            }
            if g.degree() == 0 {
                return &res * &g.coeffs[0].pow_u64(f.degree() as u64);
            }
            let r = f.rem(&g);
            let drop = if r.is_zero() {
                f.degree() as u64
            } else {
                (f.degree() - r.degree()) as u64
            };
            res = &res * &g.lead().pow_u64(drop);
            if f.degree() % 2 == 1 && g.degree() % 2 == 1 {
                res = res.neg();
            }
            f = g;
            g = r;
        }
    }

    /// All roots in `F_q`, each once, sorted. Splits the product of linear
    /// factors gcd(x^q - x, f) by randomized equal-degree factorization;
    /// the randomness is derived from (q, f) so the result is a pure
    /// function of the input.
    pub fn roots(&self) -> Vec<FieldElement> {
        let ctx = self.ctx();
        let q = ctx.modulus().clone();
        if self.is_zero() {
            panic!("roots of the zero polynomial");
        }
        if self.degree() == 0 {
            return vec![];
        }
        let x = Poly::new(vec![ctx.zero(), ctx.one()]);
        // x^q mod f, then gcd(x^q - x, f) isolates the linear factors.
        let xq = self.powmod(&x, &q);
        let lin = self.gcd(&xq.sub(&x));
        let mut out = Vec::new();
        if lin.is_zero() || lin.degree() == 0 {
            return out;
        }
        let mut rng = {
            let mut h = Sha256::new();
            h.update(q.to_bytes_be());
            for c in &self.coeffs {
                h.update(c.value().to_bytes_be());
                h.update([0xfe]);
            }
            ChaCha20Rng::from_seed(h.finalize().into())
        };
        let exp = (&q - BigUint::one()) >> 1;
        let mut stack = vec![lin];
        while let Some(g) = stack.pop() {
            if g.degree() == 1 {
                let root = g.coeffs[0].neg().div(&g.coeffs[1]).unwrap();
                out.push(root);
                continue;
            }
            if g.coeffs[0].is_zero() {
                out.push(ctx.zero());
                stack.push(Poly::new(g.coeffs[1..].to_vec()));
                continue;
            }
            // random shift split: gcd((x+c)^((q-1)/2) - 1, g)
            loop {
                let c = ctx.element(rng.gen_biguint_below(&q));
                let shifted = Poly::new(vec![c, ctx.one()]);
                let h = g.powmod(&shifted, &exp).sub(&Poly::new(vec![ctx.one()]));
                let d = g.gcd(&h);
                if d.degree() > 0 && d.degree() < g.degree() {
                    let other = g.divide_out(&d);
                    stack.push(d);
                    stack.push(other);
                    break;
                }
            }
        }
        out.sort();
        out
    }

    /// Exact quotient when `divisor` divides `self`.
    fn divide_out(&self, divisor: &Poly) -> Poly {
        let ctx = self.ctx();
        let mut r = self.clone();
        let dl = divisor.lead().inv().unwrap();
        let mut q = vec![ctx.zero(); self.degree() - divisor.degree() + 1];
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let factor = r.lead() * &dl;
            q[shift] = factor.clone();
            let mut sub = vec![ctx.zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            r = r.sub(&Poly::new(sub));
        }
        debug_assert!(r.is_zero());
        Poly::new(q)
    }
}
