//! Arbitrary-precision prime-field arithmetic with deterministic root maps.
//!
//! A [`FieldCtx`] fixes an odd prime modulus `q` and caches the exponents
//! that make power maps invertible: when `q ≡ 2 (mod 3)` the cube map is a
//! bijection of `F_q` inverted by `x ↦ x^(1/3 mod q-1)`, and more generally
//! `x ↦ x^d` is inverted by `x ↦ x^(1/d mod q-1)` whenever `gcd(d, q-1) = 1`.
//! All encodings in this crate reduce to these deterministic root maps.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus is even")]
    EvenModulus,
    #[error("modulus is not prime")]
    NotPrime,
    #[error("modulus must be at least 5")]
    ModulusTooSmall,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no deterministic {d}-th root map: gcd({d}, q-1) != 1")]
    CapabilityMissing { d: u64 },
}

/// An odd prime modulus together with its root-map capabilities.
///
/// Immutable after construction (the exponent cache is interior-only) and
/// safe to share across census workers.
pub struct FieldCtx {
    q: BigUint,
    /// Single-limb copy of q when it fits; lets the census-scale hot loops
    /// run on machine words.
    q_u64: Option<u64>,
    is_2_mod_3: bool,
    cube_exp: Option<BigUint>,
    root_exps: RwLock<HashMap<u64, BigUint>>,
}

impl FieldCtx {
    /// Builds a context for the odd prime `q >= 5`, verifying primality.
    pub fn new(q: BigUint) -> Result<Arc<FieldCtx>, FieldError> {
        if q.is_even() {
            return Err(FieldError::EvenModulus);
        }
        if q < BigUint::from(5u32) {
            return Err(FieldError::ModulusTooSmall);
        }
        if !is_prime(&q) {
            return Err(FieldError::NotPrime);
        }
        let is_2_mod_3 = (&q % 3u32) == BigUint::from(2u32);
        let qm1 = &q - 1u32;
        let cube_exp = if is_2_mod_3 {
            Some(mod_inverse(&BigUint::from(3u32), &qm1).expect("gcd(3, q-1) = 1"))
        } else {
            None
        };
        Ok(Arc::new(FieldCtx {
            q_u64: q.to_u64(),
            q,
            is_2_mod_3,
            cube_exp,
            root_exps: RwLock::new(HashMap::new()),
        }))
    }

    pub fn from_u64(q: u64) -> Result<Arc<FieldCtx>, FieldError> {
        Self::new(BigUint::from(q))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.q
    }

    pub fn is_2_mod_3(&self) -> bool {
        self.is_2_mod_3
    }

    pub fn cube_exp(&self) -> Option<&BigUint> {
        self.cube_exp.as_ref()
    }

    /// The inverse of `d` modulo `q-1`, computed once per context and cached.
    fn root_exp(&self, d: u64) -> Result<BigUint, FieldError> {
        if let Some(e) = self.root_exps.read().unwrap().get(&d) {
            return Ok(e.clone());
        }
        let qm1 = &self.q - 1u32;
        let e = mod_inverse(&BigUint::from(d), &qm1).ok_or(FieldError::CapabilityMissing { d })?;
        self.root_exps.write().unwrap().insert(d, e.clone());
        Ok(e)
    }

    /// Whether `x ↦ x^d` is a bijection of `F_q`.
    pub fn has_nth_root(&self, d: u64) -> bool {
        BigUint::from(d).gcd(&(&self.q - 1u32)).is_one()
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx(q = {})", self.q)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for FieldCtx {}

/// A residue modulo the context's prime, always held in `[0, q)`.
#[derive(Clone)]
pub struct FieldElement {
    value: BigUint,
    ctx: Arc<FieldCtx>,
}

/// Helpers for building elements out of a shared context.
pub trait ElementBuilder {
    fn element(&self, v: BigUint) -> FieldElement;
    fn int(&self, v: i64) -> FieldElement;
    fn zero(&self) -> FieldElement;
    fn one(&self) -> FieldElement;
    #[allow(clippy::wrong_self_convention)] // dual of FieldElement::to_hex
    fn from_hex(&self, s: &str) -> Result<FieldElement, HexError>;
}

impl ElementBuilder for Arc<FieldCtx> {
    fn element(&self, v: BigUint) -> FieldElement {
        FieldElement {
            value: v % &self.q,
            ctx: Arc::clone(self),
        }
    }

    fn int(&self, v: i64) -> FieldElement {
        let m = BigUint::from(v.unsigned_abs()) % &self.q;
        let value = if v < 0 && !m.is_zero() {
            &self.q - m
        } else {
            m
        };
        FieldElement {
            value,
            ctx: Arc::clone(self),
        }
    }

    fn zero(&self) -> FieldElement {
        self.element(BigUint::zero())
    }

    fn one(&self) -> FieldElement {
        self.element(BigUint::one())
    }

    /// Parses the canonical encoding: lowercase hex, big-endian, no leading
    /// zeros ("0" for zero). Uppercase digits and leading zeros are rejected
    /// so that serialization round-trips bit-exactly.
    fn from_hex(&self, s: &str) -> Result<FieldElement, HexError> {
        if s.is_empty() {
            return Err(HexError::Empty);
        }
        if !s
            .bytes()
            .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
        {
            return Err(HexError::BadDigit);
        }
        if s.len() > 1 && s.starts_with('0') {
            return Err(HexError::LeadingZero);
        }
        let v = BigUint::parse_bytes(s.as_bytes(), 16).ok_or(HexError::BadDigit)?;
        if v >= self.q {
            return Err(HexError::OutOfRange);
        }
        Ok(self.element(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HexError {
    #[error("empty hex string")]
    Empty,
    #[error("invalid hex digit (lowercase hex required)")]
    BadDigit,
    #[error("leading zeros are not canonical")]
    LeadingZero,
    #[error("value not reduced modulo q")]
    OutOfRange,
}

fn mulmod_u64(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

impl FieldElement {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Single-limb view on the word-sized fast path.
    fn val_u64(&self) -> Option<u64> {
        self.ctx.q_u64.and(self.value.to_u64())
    }

    fn reduced_u64(&self, v: u64) -> FieldElement {
        FieldElement {
            value: BigUint::from(v),
            ctx: Arc::clone(&self.ctx),
        }
    }

    fn modpow_elem(&self, e: &BigUint) -> FieldElement {
        if let (Some(q), Some(v)) = (self.ctx.q_u64, self.val_u64()) {
            let mut acc: u64 = 1;
            let mut base = v;
            let bits = e.bits();
            for i in 0..bits {
                if e.bit(i) {
                    acc = mulmod_u64(acc, base, q);
                }
                if i + 1 < bits {
                    base = mulmod_u64(base, base, q);
                }
            }
            return self.reduced_u64(acc);
        }
        self.ctx.element(self.value.modpow(e, &self.ctx.q))
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Lowercase big-endian hex without leading zeros; zero is "0".
    pub fn to_hex(&self) -> String {
        format!("{:x}", self.value)
    }

    fn assert_same_ctx(&self, other: &FieldElement) {
        assert_eq!(
            self.ctx.q, other.ctx.q,
            "field elements from different contexts"
        );
    }

    pub fn neg(&self) -> FieldElement {
        if self.value.is_zero() {
            self.clone()
        } else {
            FieldElement {
                value: &self.ctx.q - &self.value,
                ctx: Arc::clone(&self.ctx),
            }
        }
    }

    pub fn square(&self) -> FieldElement {
        self * self
    }

    pub fn pow_u64(&self, e: u64) -> FieldElement {
        if let (Some(q), Some(v)) = (self.ctx.q_u64, self.val_u64()) {
            let mut acc: u64 = 1;
            let mut base = v;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod_u64(acc, base, q);
                }
                base = mulmod_u64(base, base, q);
                e >>= 1;
            }
            return self.reduced_u64(acc);
        }
        self.ctx
            .element(self.value.modpow(&BigUint::from(e), &self.ctx.q))
    }

    /// Multiplicative inverse via extended gcd, so a zero operand is
    /// observed structurally rather than by a bogus result.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if let (Some(q), Some(v)) = (self.ctx.q_u64, self.val_u64()) {
            let (mut r0, mut r1) = (v as i128, q as i128);
            let (mut s0, mut s1) = (1i128, 0i128);
            while r1 != 0 {
                let quot = r0 / r1;
                (r0, r1) = (r1, r0 - quot * r1);
                (s0, s1) = (s1, s0 - quot * s1);
            }
            if r0 != 1 {
                return Err(FieldError::DivisionByZero);
            }
            let mut x = s0 % q as i128;
            if x < 0 {
                x += q as i128;
            }
            return Ok(self.reduced_u64(x as u64));
        }
        let v = mod_inverse(&self.value, &self.ctx.q).ok_or(FieldError::DivisionByZero)?;
        Ok(self.ctx.element(v))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.assert_same_ctx(rhs);
        Ok(self * &rhs.inv()?)
    }

    /// The unique cube root when `q ≡ 2 (mod 3)`: `x^(1/3 mod q-1)`.
    pub fn cube_root(&self) -> Result<FieldElement, FieldError> {
        let e = self
            .ctx
            .cube_exp
            .as_ref()
            .ok_or(FieldError::CapabilityMissing { d: 3 })?;
        Ok(self.modpow_elem(e))
    }

    /// The unique d-th root when `gcd(d, q-1) = 1`: `x^(1/d mod q-1)`.
    pub fn nth_root(&self, d: u64) -> Result<FieldElement, FieldError> {
        let e = self.ctx.root_exp(d)?;
        Ok(self.modpow_elem(&e))
    }

    /// Legendre symbol: 0 for zero, +1 for nonzero squares, -1 otherwise.
    pub fn legendre(&self) -> i32 {
        if self.value.is_zero() {
            return 0;
        }
        let e = (&self.ctx.q - 1u32) >> 1;
        if self.modpow_elem(&e).is_one() {
            1
        } else {
            -1
        }
    }

    /// Tonelli-Shanks square root; `None` for non-residues. Only the
    /// preimage solvers need this (the forward encoders are square-root
    /// free by construction).
    pub fn sqrt(&self) -> Option<FieldElement> {
        let q = &self.ctx.q;
        if self.value.is_zero() {
            return Some(self.clone());
        }
        if self.legendre() != 1 {
            return None;
        }
        if (q % 4u32) == BigUint::from(3u32) {
            let e = (q + 1u32) >> 2;
            return Some(self.ctx.element(self.value.modpow(&e, q)));
        }
        let mut s = q - 1u32;
        let mut m = 0u64;
        while s.is_even() {
            s >>= 1;
            m += 1;
        }
        let mut z = BigUint::from(2u32);
        while self.ctx.element(z.clone()).legendre() != -1 {
            z += 1u32;
        }
        let mut c = z.modpow(&s, q);
        let mut t = self.value.modpow(&s, q);
        let mut r = self.value.modpow(&((&s + 1u32) >> 1), q);
        while !t.is_one() {
            let mut i = 0u64;
            let mut tt = t.clone();
            while !tt.is_one() {
                tt = &tt * &tt % q;
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = &b * &b % q;
            }
            m = i;
            c = &b * &b % q;
            t = t * &c % q;
            r = r * &b % q;
        }
        Some(self.ctx.element(r))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.ctx.q)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.q == other.ctx.q && self.value == other.value
    }
}
impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.assert_same_ctx(other);
        self.value.cmp(&other.value)
    }
}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl:expr) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.assert_same_ctx(rhs);
                #[allow(clippy::redundant_closure_call)]
                ($impl)(self, rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                std::ops::$trait::$method(self, &rhs)
            }
        }
        impl std::ops::$trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &FieldElement, b: &FieldElement| {
    if let (Some(q), Some(x), Some(y)) = (a.ctx.q_u64, a.val_u64(), b.val_u64()) {
        let s = x as u128 + y as u128;
        let q128 = q as u128;
        return a.reduced_u64(if s >= q128 { s - q128 } else { s } as u64);
    }
    a.ctx.element(&a.value + &b.value)
});
binop!(Mul, mul, |a: &FieldElement, b: &FieldElement| {
    if let (Some(q), Some(x), Some(y)) = (a.ctx.q_u64, a.val_u64(), b.val_u64()) {
        return a.reduced_u64(mulmod_u64(x, y, q));
    }
    a.ctx.element(&a.value * &b.value)
});
binop!(Sub, sub, |a: &FieldElement, b: &FieldElement| {
    if let (Some(q), Some(x), Some(y)) = (a.ctx.q_u64, a.val_u64(), b.val_u64()) {
        return a.reduced_u64(if x >= y { x - y } else { q - (y - x) });
    }
    let v = if a.value >= b.value {
        &a.value - &b.value
    } else {
        &a.ctx.q - &b.value + &a.value
    };
    a.ctx.element(v)
});

/// Scalar convenience: `&x * 36`, `&x + 1`, `&x - 4` for small constants.
impl std::ops::Mul<i64> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: i64) -> FieldElement {
        self * self.ctx.int(rhs)
    }
}
impl std::ops::Add<i64> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: i64) -> FieldElement {
        self + self.ctx.int(rhs)
    }
}
impl std::ops::Sub<i64> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: i64) -> FieldElement {
        self - self.ctx.int(rhs)
    }
}
impl std::ops::Mul<i64> for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: i64) -> FieldElement {
        &self * rhs
    }
}
impl std::ops::Add<i64> for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: i64) -> FieldElement {
        &self + rhs
    }
}
impl std::ops::Sub<i64> for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: i64) -> FieldElement {
        &self - rhs
    }
}

/// Inverse of `a` mod `m` via extended gcd; `None` when `gcd(a, m) != 1`.
pub(crate) fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let mut x = e.x % &m;
    if x.is_negative() {
        x += &m;
    }
    x.to_biguint()
}

/// Miller-Rabin: deterministic witness set below 2^64, 64 rounds with
/// witnesses derived from SHA-256(n) above (so the check stays a pure
/// function of n).
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        let p = BigUint::from(p);
        if n % &p == BigUint::zero() {
            return *n == p;
        }
    }
    let n_minus_1 = n - 1u32;
    let mut d = n_minus_1.clone();
    let mut s = 0u64;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let witness = |a: &BigUint| -> bool {
        // true = composite
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 0..s - 1 {
            x = &x * &x % n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };
    if n.bits() <= 64 {
        for a in SMALL {
            if witness(&BigUint::from(a)) {
                return false;
            }
        }
        true
    } else {
        let mut hasher = Sha256::new();
        hasher.update(n.to_bytes_be());
        let mut rng = ChaCha20Rng::from_seed(hasher.finalize().into());
        for _ in 0..64 {
            let a = rng.gen_biguint_range(&BigUint::from(2u32), &n_minus_1);
            if witness(&a) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn f5() -> Arc<FieldCtx> {
        FieldCtx::from_u64(5).unwrap()
    }

    #[test]
    fn make_field_flags() {
        let k = f5();
        assert!(k.is_2_mod_3());
        assert_eq!(k.cube_exp().unwrap(), &BigUint::from(3u32));

        let k7 = FieldCtx::from_u64(7).unwrap();
        assert!(!k7.is_2_mod_3());
        assert!(k7.cube_exp().is_none());

        assert_eq!(FieldCtx::from_u64(9).unwrap_err(), FieldError::NotPrime);
        assert_eq!(FieldCtx::from_u64(8).unwrap_err(), FieldError::EvenModulus);
        assert_eq!(
            FieldCtx::from_u64(3).unwrap_err(),
            FieldError::ModulusTooSmall
        );
    }

    #[test]
    fn arith_examples() {
        let k = f5();
        assert_eq!(k.int(2) * k.int(3), k.int(1));
        assert_eq!(k.int(1).div(&k.int(3)).unwrap(), k.int(2));
        assert_eq!(
            k.int(4).div(&k.int(0)).unwrap_err(),
            FieldError::DivisionByZero
        );
        assert_eq!(k.int(1) - k.int(3), k.int(3));
        assert_eq!(k.int(-1), k.int(4));
    }

    #[test]
    fn cube_root_examples() {
        let k = f5();
        assert_eq!(k.int(1).cube_root().unwrap(), k.int(1));
        assert_eq!(k.int(2).cube_root().unwrap(), k.int(3));
        assert_eq!(k.int(0).cube_root().unwrap(), k.int(0));
        let k7 = FieldCtx::from_u64(7).unwrap();
        assert_eq!(
            k7.int(2).cube_root().unwrap_err(),
            FieldError::CapabilityMissing { d: 3 }
        );
    }

    #[test]
    fn nth_root_examples() {
        let k7 = FieldCtx::from_u64(7).unwrap();
        assert_eq!(k7.int(2).nth_root(5).unwrap(), k7.int(4));
        let k = f5();
        assert_eq!(k.int(1).nth_root(9).unwrap(), k.int(1));
        assert_eq!(
            k.int(3).nth_root(2).unwrap_err(),
            FieldError::CapabilityMissing { d: 2 }
        );
    }

    #[test]
    fn legendre_examples() {
        let k = f5();
        assert_eq!(k.int(4).legendre(), 1);
        assert_eq!(k.int(2).legendre(), -1);
        assert_eq!(k.int(0).legendre(), 0);
    }

    #[test]
    fn nth_root_is_permutation_exhaustive() {
        // q <= 10^4 with the capability flag set: x ↦ x^(1/d) permutes F_q.
        let k = FieldCtx::from_u64(9887).unwrap();
        for d in [3u64, 5, 31] {
            assert!(k.has_nth_root(d));
            let mut seen = vec![false; 9887];
            for x in 0..9887u64 {
                let r = k.element(BigUint::from(x)).nth_root(d).unwrap();
                let idx = r.value().to_u64().unwrap() as usize;
                assert!(!seen[idx]);
                seen[idx] = true;
                assert_eq!(r.pow_u64(d), k.element(BigUint::from(x)));
            }
        }
    }

    #[test]
    fn sqrt_roundtrip() {
        for q in [5u64, 13, 17, 9887, 1019] {
            let k = FieldCtx::from_u64(q).unwrap();
            for x in 0..q.min(200) {
                let e = k.element(BigUint::from(x));
                match e.sqrt() {
                    Some(r) => assert_eq!(&r * &r, e),
                    None => assert_eq!(e.legendre(), -1),
                }
            }
        }
    }

    #[test]
    fn hex_canonical() {
        let k = FieldCtx::from_u64(1019).unwrap();
        let e = k.int(255);
        assert_eq!(e.to_hex(), "ff");
        assert_eq!(k.from_hex("ff").unwrap(), e);
        assert_eq!(k.int(0).to_hex(), "0");
        assert!(k.from_hex("0ff").is_err());
        assert!(k.from_hex("FF").is_err());
        assert!(k.from_hex("").is_err());
        assert!(k.from_hex("3fb").is_err()); // 1019 itself, not reduced
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(&BigUint::from(1019u32)));
        assert!(!is_prime(&BigUint::from(1021u32 * 1019)));
        // 2^256 - 587
        let q = (BigUint::one() << 256) - 587u32;
        assert!(is_prime(&q));
        assert!(!is_prime(&(&q - 2u32)));
    }
}
