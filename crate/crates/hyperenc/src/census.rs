//! Exhaustive small-field enumeration: image sizes, excluded sets and
//! preimage multiplicities, measured against the theorems that predict them.
//!
//! A census enumerates every `t` in `F_q` (so `q` is capped), records the
//! exact image multiset of the encoder, and emits a serializable report.
//! The `t`-range can be partitioned across worker threads; the merge is
//! deterministic, so a partitioned census is bit-identical to a serial one.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::{BigUint, RandBigInt};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use thiserror::Error;

use crate::curves::{
    CurvePoint, CurveSpec, CurveSpecDoc, DeMoivreCurve, Family, Genus2Type1Curve, Genus2Type2Curve,
    HessianCurve, QuasiQuadraticCurve,
};
use crate::encoders::{encode, EncodeError};
use crate::ffield::{ElementBuilder, FieldCtx, FieldError};
use std::sync::Arc;

/// Enumeration cap: the image set is materialized, so censuses are bounded
/// to desk scale.
pub const FIELD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CensusError {
    #[error("field too large for exhaustive census: q = {q} > {cap}")]
    FieldTooLarge { q: BigUint, cap: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("encode error: {0}")]
    Encode(#[from] EncodeError),
    #[error("curve error: {0}")]
    Curve(#[from] crate::curves::CurveError),
    #[error("parameter sampling failed for {family} over q = {q}")]
    SamplingFailed { family: Family, q: u64 },
    #[error("{0}")]
    Assertion(Box<AssertionFailure>),
}

/// A theorem bound violated by an observed census quantity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssertionFailure {
    pub q: u64,
    pub curve: CurveSpecDoc,
    pub quantity: String,
    pub observed: u64,
    pub bound: u64,
}

impl std::fmt::Display for AssertionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "census assertion failed over q = {}: {} = {} violates bound {} for {}",
            self.q,
            self.quantity,
            self.observed,
            self.bound,
            self.curve.to_json()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExcludedEntry {
    /// The non-encodable t, canonical hex.
    pub t: String,
    /// Which guard rejected it.
    pub stage: String,
}

/// The serializable census result. Field elements are hex; map keys are
/// emitted in sorted order, so equal censuses serialize identically.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub curve: CurveSpecDoc,
    /// Number of t enumerated; always q.
    pub domain_size: u64,
    /// Sorted by t.
    pub excluded: Vec<ExcludedEntry>,
    pub image_size: u64,
    /// multiplicity -> number of image points with that fiber size.
    pub multiplicity_histogram: BTreeMap<u64, u64>,
    /// Exact theorem prediction where one exists (Hessian, quasiquadratic).
    pub predicted_image: Option<u64>,
    pub elapsed_ms: u64,
}

impl CensusReport {
    pub fn max_multiplicity(&self) -> u64 {
        self.multiplicity_histogram
            .keys()
            .max()
            .copied()
            .unwrap_or(0)
    }

    pub fn excluded_count(&self) -> u64 {
        self.excluded.len() as u64
    }

    /// The report with timing cleared, for bit-exact comparisons.
    pub fn normalized(&self) -> CensusReport {
        CensusReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// A report plus the exact image (too large to serialize by default).
#[derive(Debug, Clone)]
pub struct Census {
    pub report: CensusReport,
    pub image: BTreeMap<CurvePoint, u64>,
    /// Successful encodes whose output failed the curve equation; always 0.
    pub on_curve_violations: u64,
}

/// Enumerates all `t` in `F_q` through the family encoder, partitioned over
/// `workers` threads.
pub fn image_census(spec: &CurveSpec, workers: usize) -> Result<Census, CensusError> {
    let q_big = spec.ctx().modulus();
    if *q_big > BigUint::from(FIELD_CAP) {
        return Err(CensusError::FieldTooLarge {
            q: q_big.clone(),
            cap: FIELD_CAP,
        });
    }
    check_capability(spec)?;
    let q = q_big.to_u64().expect("under cap");
    let workers = workers.clamp(1, 64).min(q as usize);
    let start = Instant::now();

    struct Partial {
        image: HashMap<CurvePoint, u64>,
        excluded: Vec<(u64, &'static str)>,
        violations: u64,
    }

    let run_range = |lo: u64, hi: u64| -> Result<Partial, CensusError> {
        let ctx = spec.ctx();
        let mut part = Partial {
            image: HashMap::new(),
            excluded: Vec::new(),
            violations: 0,
        };
        for t in lo..hi {
            let te = ctx.element(BigUint::from(t));
            match encode(spec, &te) {
                Ok(p) => {
                    if !spec.is_on_curve(&p) {
                        part.violations += 1;
                    }
                    *part.image.entry(p).or_insert(0) += 1;
                }
                Err(EncodeError::NotEncodable { stage }) => part.excluded.push((t, stage)),
                Err(e) => return Err(e.into()),
            }
        }
        Ok(part)
    };

    let partials: Vec<Partial> = if workers == 1 {
        vec![run_range(0, q)?]
    } else {
        let chunk = q.div_ceil(workers as u64);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|i| {
                    let lo = i * chunk;
                    let hi = ((i + 1) * chunk).min(q);
                    scope.spawn(move || run_range(lo, hi.max(lo)))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect::<Result<Vec<_>, _>>()
        })?
    };

    let mut image: BTreeMap<CurvePoint, u64> = BTreeMap::new();
    let mut excluded_raw: Vec<(u64, &'static str)> = Vec::new();
    let mut violations = 0;
    for part in partials {
        for (p, n) in part.image {
            *image.entry(p).or_insert(0) += n;
        }
        excluded_raw.extend(part.excluded);
        violations += part.violations;
    }
    excluded_raw.sort_by_key(|(t, _)| *t);

    let ctx = spec.ctx();
    let excluded: Vec<ExcludedEntry> = excluded_raw
        .into_iter()
        .map(|(t, stage)| ExcludedEntry {
            t: ctx.element(BigUint::from(t)).to_hex(),
            stage: stage.to_string(),
        })
        .collect();
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for mult in image.values() {
        *histogram.entry(*mult).or_insert(0) += 1;
    }
    // conservation: every t is either excluded or lands somewhere
    debug_assert_eq!(
        excluded.len() as u64 + image.values().sum::<u64>(),
        q,
        "census conservation"
    );
    let report = CensusReport {
        curve: spec.to_doc(),
        domain_size: q,
        excluded,
        image_size: image.len() as u64,
        multiplicity_histogram: histogram,
        predicted_image: prediction(spec),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(Census {
        report,
        image,
        on_curve_violations: violations,
    })
}

fn check_capability(spec: &CurveSpec) -> Result<(), CensusError> {
    let ctx = spec.ctx();
    let needs_cube = !matches!(spec, CurveSpec::QuasiQuadratic(_));
    if needs_cube && !ctx.is_2_mod_3() {
        return Err(FieldError::CapabilityMissing { d: 3 }.into());
    }
    let d = match spec {
        CurveSpec::QuasiQuadratic(c) => Some(c.d()),
        CurveSpec::DeMoivre(c) => Some(c.d()),
        _ => None,
    };
    if let Some(d) = d {
        if !ctx.has_nth_root(d) {
            return Err(FieldError::CapabilityMissing { d }.into());
        }
    }
    Ok(())
}

fn prediction(spec: &CurveSpec) -> Option<u64> {
    let q = spec.ctx().modulus().to_u64()?;
    match spec {
        CurveSpec::Hessian(c) => Some(hessian_prediction(c)),
        CurveSpec::QuasiQuadratic(_) => Some(q - 1),
        _ => None,
    }
}

/// The exact Hessian image size: `q - 1` for `d = -2`, else `(q+1)/2` or
/// `(q-1)/2` following whether `(d-1)/(d+2)` is a quadratic residue.
#[allow(clippy::manual_div_ceil)] // (q+1)/2 is the stated count, not a rounding
pub fn hessian_prediction(c: &HessianCurve) -> u64 {
    let q = c
        .ctx()
        .modulus()
        .to_u64()
        .expect("prediction is for census-scale fields");
    if c.is_minus_two() {
        return q - 1;
    }
    let d = c.d();
    let ratio = (d - 1).div(&(d + 2)).expect("d != -2");
    if ratio.legendre() == 1 {
        (q + 1) / 2
    } else {
        (q - 1) / 2
    }
}

// ---------------------------------------------------------------------------
// Family-level verification sweeps
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Random parameter sets per q for the sampled families.
    pub trials: u32,
    pub seed: u64,
    /// Degree for quasiquadratic / De Moivre (None = all valid d <= 9 for
    /// quasiquadratic, d = 5 for De Moivre).
    pub degree: Option<u64>,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 25,
            seed: 1,
            degree: None,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub q: u64,
    pub curve: CurveSpecDoc,
    pub image_size: u64,
    pub excluded_count: u64,
    pub max_multiplicity: u64,
    pub predicted_image: Option<u64>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub family: String,
    pub seed: u64,
    pub rows: Vec<VerifyRow>,
    pub failures: Vec<AssertionFailure>,
    pub pass: bool,
}

impl VerifySummary {
    pub fn into_result(self) -> Result<VerifySummary, CensusError> {
        match self.failures.first() {
            Some(f) => Err(CensusError::Assertion(Box::new(f.clone()))),
            None => Ok(self),
        }
    }
}

/// Runs `image_census` over every curve in the family's sweep for each `q`,
/// asserting the theorem bounds: exact image predictions for Hessian and
/// quasiquadratic, excluded-set bounds (8 / 74 / 233) and multiplicity
/// bounds (2 / 1 / 8 / 8 / 54) per family, and the image floors
/// `ceil((q-35)/8)` (type 1) and `ceil((q-233)/54)` (type 2).
pub fn verify_family(
    family: Family,
    q_list: &[u64],
    options: &VerifyOptions,
) -> Result<VerifySummary, CensusError> {
    let mut rng = ChaCha20Rng::seed_from_u64(options.seed);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &q in q_list {
        let ctx = FieldCtx::from_u64(q)?;
        let specs = curves_for(family, &ctx, options, &mut rng)?;
        for spec in specs {
            let census = image_census(&spec, options.workers)?;
            let report = &census.report;
            let mut checks: Vec<(String, u64, u64)> = Vec::new(); // (quantity, observed, bound)
            if census.on_curve_violations > 0 {
                checks.push(("on_curve_violations".into(), census.on_curve_violations, 0));
            }
            match family {
                Family::Hessian => {
                    let predicted = report.predicted_image.unwrap();
                    if report.image_size != predicted {
                        checks.push(("image_size (exact)".into(), report.image_size, predicted));
                    }
                    if report.max_multiplicity() > 2 {
                        checks.push(("max_multiplicity".into(), report.max_multiplicity(), 2));
                    }
                }
                Family::QuasiQuadratic => {
                    if report.image_size != q - 1 {
                        checks.push(("image_size (exact)".into(), report.image_size, q - 1));
                    }
                    if report.max_multiplicity() != 1 {
                        checks.push(("max_multiplicity".into(), report.max_multiplicity(), 1));
                    }
                }
                Family::DeMoivre => {
                    if report.excluded_count() > 8 {
                        checks.push(("excluded_count".into(), report.excluded_count(), 8));
                    }
                    if report.max_multiplicity() > 8 {
                        checks.push(("max_multiplicity".into(), report.max_multiplicity(), 8));
                    }
                    let floor = lower_bound(q, 8, 8);
                    if report.image_size < floor {
                        checks.push(("image_size (floor)".into(), report.image_size, floor));
                    }
                }
                Family::Genus2Type1 => {
                    if report.excluded_count() > 74 {
                        checks.push(("excluded_count".into(), report.excluded_count(), 74));
                    }
                    if report.max_multiplicity() > 8 {
                        checks.push(("max_multiplicity".into(), report.max_multiplicity(), 8));
                    }
                    let floor = lower_bound(q, 35, 8);
                    if report.image_size < floor {
                        checks.push(("image_size (floor)".into(), report.image_size, floor));
                    }
                }
                Family::Genus2Type2 => {
                    if report.excluded_count() > 233 {
                        checks.push(("excluded_count".into(), report.excluded_count(), 233));
                    }
                    if report.max_multiplicity() > 54 {
                        checks.push(("max_multiplicity".into(), report.max_multiplicity(), 54));
                    }
                    let floor = lower_bound(q, 233, 54);
                    if report.image_size < floor {
                        checks.push(("image_size (floor)".into(), report.image_size, floor));
                    }
                }
            }
            let pass = checks.is_empty();
            for (quantity, observed, bound) in checks {
                failures.push(AssertionFailure {
                    q,
                    curve: report.curve.clone(),
                    quantity,
                    observed,
                    bound,
                });
            }
            rows.push(VerifyRow {
                q,
                curve: report.curve.clone(),
                image_size: report.image_size,
                excluded_count: report.excluded_count(),
                max_multiplicity: report.max_multiplicity(),
                predicted_image: report.predicted_image,
                pass,
            });
        }
    }
    Ok(VerifySummary {
        family: family.as_str().to_string(),
        seed: options.seed,
        pass: failures.is_empty(),
        rows,
        failures,
    })
}

/// `ceil((q - sub) / div)` clamped at zero.
fn lower_bound(q: u64, sub: i64, div: i64) -> u64 {
    let n = q as i64 - sub;
    if n <= 0 {
        0
    } else {
        ((n + div - 1) / div) as u64
    }
}

/// The curves a family sweep visits over `F_q`: every valid `d` for
/// Hessian, every valid `(d, a)` with `d <= 9` for quasiquadratic, and
/// seeded-random parameter sets (rejection-sampled through validation) for
/// the other families.
fn curves_for(
    family: Family,
    ctx: &Arc<FieldCtx>,
    options: &VerifyOptions,
    rng: &mut ChaCha20Rng,
) -> Result<Vec<CurveSpec>, CensusError> {
    let q = ctx.modulus().to_u64().expect("census scale");
    let qi = q as i64;
    let mut out = Vec::new();
    match family {
        Family::Hessian => {
            for d in 0..qi {
                if d == 1 {
                    continue;
                }
                out.push(CurveSpec::Hessian(HessianCurve::new(ctx.int(d))?));
            }
        }
        Family::QuasiQuadratic => {
            let degrees: Vec<u64> = match options.degree {
                Some(d) => vec![d],
                None => (2..=9).collect(),
            };
            for d in degrees {
                if !ctx.has_nth_root(d) || d % q == 0 {
                    continue;
                }
                for a in 1..qi {
                    match QuasiQuadraticCurve::new(d, ctx.int(a)) {
                        Ok(c) => out.push(CurveSpec::QuasiQuadratic(c)),
                        Err(_) => continue,
                    }
                }
            }
            if out.is_empty() {
                return Err(CensusError::SamplingFailed { family, q });
            }
        }
        Family::DeMoivre => {
            let d = options.degree.unwrap_or(5);
            if !ctx.has_nth_root(d) {
                return Err(FieldError::CapabilityMissing { d }.into());
            }
            out = sample(family, q, options.trials, rng, |rng| {
                let a = ctx.element(rng.gen_biguint_below(&(ctx.modulus() - 1u32)) + 1u32);
                let b = ctx.element(rng.gen_biguint_below(ctx.modulus()));
                // a = 0 produces alpha = 0 for every t, an everywhere-empty
                // encoder, so the sweep keeps a nonzero
                DeMoivreCurve::new(d, a, b).ok().map(CurveSpec::DeMoivre)
            })?;
        }
        Family::Genus2Type1 => {
            out = sample(family, q, options.trials, rng, |rng| {
                let a = ctx.element(rng.gen_biguint_below(&(ctx.modulus() - 1u32)) + 1u32);
                let b = ctx.element(rng.gen_biguint_below(ctx.modulus()));
                Genus2Type1Curve::new(a, b).ok().map(CurveSpec::Genus2Type1)
            })?;
        }
        Family::Genus2Type2 => {
            out = sample(family, q, options.trials, rng, |rng| {
                let nonzero =
                    |rng: &mut ChaCha20Rng| rng.gen_biguint_below(&(ctx.modulus() - 1u32)) + 1u32;
                let lambda = ctx.element(nonzero(rng));
                let mu = ctx.element(nonzero(rng));
                let a = ctx.element(rng.gen_biguint_below(ctx.modulus()));
                let v = ctx.element(rng.gen_biguint_below(ctx.modulus()));
                let w = ctx.element(nonzero(rng));
                Genus2Type2Curve::new(lambda, mu, a, v, w)
                    .ok()
                    .map(CurveSpec::Genus2Type2)
            })?;
        }
    }
    Ok(out)
}

fn sample(
    family: Family,
    q: u64,
    trials: u32,
    rng: &mut ChaCha20Rng,
    mut gen: impl FnMut(&mut ChaCha20Rng) -> Option<CurveSpec>,
) -> Result<Vec<CurveSpec>, CensusError> {
    let mut out = Vec::with_capacity(trials as usize);
    let mut attempts = 0u32;
    while out.len() < trials as usize {
        attempts += 1;
        if attempts > trials.saturating_mul(1000).max(10_000) {
            return Err(CensusError::SamplingFailed { family, q });
        }
        if let Some(spec) = gen(rng) {
            out.push(spec);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hessian_spec(q: u64, d: i64) -> CurveSpec {
        let ctx = FieldCtx::from_u64(q).unwrap();
        CurveSpec::Hessian(HessianCurve::new(ctx.int(d)).unwrap())
    }

    #[test]
    fn hessian_census_q5_d0() {
        let census = image_census(&hessian_spec(5, 0), 1).unwrap();
        let r = &census.report;
        assert_eq!(r.domain_size, 5);
        assert_eq!(r.image_size, 2);
        assert_eq!(r.predicted_image, Some(2));
        assert_eq!(r.excluded.len(), 1);
        assert_eq!(r.excluded[0].t, "3");
        assert_eq!(r.excluded[0].stage, "excluded t");
        assert_eq!(census.on_curve_violations, 0);
        // the image is exactly {(0,4), (1,2)}
        let pts: Vec<String> = census
            .image
            .keys()
            .map(|p| {
                let (x, y) = p.coords().unwrap();
                format!("({},{})", x.to_hex(), y.to_hex())
            })
            .collect();
        assert_eq!(pts, ["(0,4)", "(1,2)"]);
        assert_eq!(r.multiplicity_histogram, BTreeMap::from([(2, 2)]));
    }

    #[test]
    fn hessian_census_minus_two() {
        let census = image_census(&hessian_spec(5, 3), 1).unwrap();
        assert_eq!(census.report.image_size, 4);
        assert_eq!(census.report.predicted_image, Some(4));
    }

    #[test]
    fn hessian_prediction_branches() {
        let ctx = FieldCtx::from_u64(5).unwrap();
        // (d-1)/(d+2) = 2 is a non-residue mod 5: (q-1)/2
        let c = HessianCurve::new(ctx.int(0)).unwrap();
        assert_eq!(hessian_prediction(&c), 2);
        // d = -2: q - 1
        let c = HessianCurve::new(ctx.int(-2)).unwrap();
        assert_eq!(hessian_prediction(&c), 4);
        // (d-1)/(d+2) = -1/2 = 5 is a square mod 11: (q+1)/2, and the
        // census agrees
        let ctx = FieldCtx::from_u64(11).unwrap();
        let c = HessianCurve::new(ctx.int(0)).unwrap();
        assert_eq!((c.d() - 1).div(&(c.d() + 2)).unwrap().legendre(), 1);
        assert_eq!(hessian_prediction(&c), 6);
        let census = image_census(&CurveSpec::Hessian(c), 1).unwrap();
        assert_eq!(census.report.image_size, 6);
    }

    #[test]
    fn quasiquadratic_census_injective() {
        let ctx = FieldCtx::from_u64(5).unwrap();
        let spec = CurveSpec::QuasiQuadratic(QuasiQuadraticCurve::new(3, ctx.int(1)).unwrap());
        let census = image_census(&spec, 1).unwrap();
        assert_eq!(census.report.image_size, 4);
        assert_eq!(
            census.report.multiplicity_histogram,
            BTreeMap::from([(1, 4)])
        );
        let pts: Vec<String> = census
            .image
            .keys()
            .map(|p| {
                let (x, y) = p.coords().unwrap();
                format!("({},{})", x.to_hex(), y.to_hex())
            })
            .collect();
        assert_eq!(pts, ["(0,1)", "(0,4)", "(4,1)", "(4,4)"]);
    }

    #[test]
    fn conservation_holds() {
        for (q, d) in [(11u64, 4i64), (17, 9), (23, 3)] {
            let census = image_census(&hessian_spec(q, d), 1).unwrap();
            let r = &census.report;
            let total: u64 = r.multiplicity_histogram.iter().map(|(m, n)| m * n).sum();
            assert_eq!(r.excluded.len() as u64 + total, q);
            let keys: u64 = r.multiplicity_histogram.values().sum();
            assert_eq!(r.image_size, keys);
        }
    }

    #[test]
    fn parallel_equals_serial() {
        let spec = hessian_spec(1019, 7);
        let serial = image_census(&spec, 1).unwrap();
        let parallel = image_census(&spec, 4).unwrap();
        assert_eq!(serial.report.normalized(), parallel.report.normalized());
        assert_eq!(serial.image, parallel.image);
        assert_eq!(
            serde_json::to_string(&serial.report.normalized()).unwrap(),
            serde_json::to_string(&parallel.report.normalized()).unwrap()
        );
    }

    #[test]
    fn field_too_large() {
        let ctx = FieldCtx::from_u64(1048583).unwrap();
        let spec = CurveSpec::Hessian(HessianCurve::new(ctx.int(0)).unwrap());
        assert!(matches!(
            image_census(&spec, 1),
            Err(CensusError::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn capability_checked() {
        // 7 ≡ 1 mod 3: no cube roots, no Hessian census
        let ctx = FieldCtx::from_u64(7).unwrap();
        let spec = CurveSpec::Hessian(HessianCurve::new(ctx.int(0)).unwrap());
        assert!(matches!(
            image_census(&spec, 1),
            Err(CensusError::Field(FieldError::CapabilityMissing { d: 3 }))
        ));
        // gcd(5, 250) = 5: no deterministic 5th roots over F_251
        let ctx = FieldCtx::from_u64(251).unwrap();
        let spec = CurveSpec::DeMoivre(DeMoivreCurve::new(5, ctx.int(1), ctx.int(1)).unwrap());
        assert!(matches!(
            image_census(&spec, 1),
            Err(CensusError::Field(FieldError::CapabilityMissing { d: 5 }))
        ));
    }

    #[test]
    fn verify_hessian_small() {
        let summary =
            verify_family(Family::Hessian, &[5, 11, 17], &VerifyOptions::default()).unwrap();
        assert!(summary.pass);
        // q=5, d=0 row shows the anchor image size
        let row = summary
            .rows
            .iter()
            .find(|r| r.q == 5 && r.curve.d == Some(crate::curves::DParam::Element("0".into())))
            .unwrap();
        assert_eq!(row.image_size, 2);
    }

    #[test]
    fn verify_seed_reproducible() {
        let opts = VerifyOptions {
            trials: 3,
            seed: 99,
            ..Default::default()
        };
        let a = verify_family(Family::Genus2Type1, &[23], &opts).unwrap();
        let b = verify_family(Family::Genus2Type1, &[23], &opts).unwrap();
        let row_curves: Vec<_> = a.rows.iter().map(|r| r.curve.to_json()).collect();
        let row_curves_b: Vec<_> = b.rows.iter().map(|r| r.curve.to_json()).collect();
        assert_eq!(row_curves, row_curves_b);
        assert!(a.pass);
    }

    #[test]
    fn golden_report_json() {
        let census = image_census(&hessian_spec(5, 0), 1).unwrap();
        let got = serde_json::to_string(&census.report.normalized()).unwrap();
        let want = concat!(
            r#"{"curve":{"family":"hessian","q":"5","d":"0"},"#,
            r#""domain_size":5,"#,
            r#""excluded":[{"t":"3","stage":"excluded t"}],"#,
            r#""image_size":2,"#,
            r#""multiplicity_histogram":{"2":2},"#,
            r#""predicted_image":2,"#,
            r#""elapsed_ms":0}"#
        );
        assert_eq!(got, want);
    }
}
