//! Hashing arbitrary messages to curve points: digest to a field element,
//! encode, retry with a counter byte past the finitely many excluded values.
//!
//! ```text
//! cargo run --example hash_to_point
//! ```

use num_bigint::BigUint;
use num_traits::One;

use hyperenc::curves::{CurveSpec, DeMoivreCurve, HessianCurve};
use hyperenc::ffield::{ElementBuilder, FieldCtx};
use hyperenc::hashing::{hash_to_point, DigestAlg};

fn main() {
    let q: BigUint = (BigUint::one() << 256) - 587u32;
    let ctx = FieldCtx::new(q).unwrap();

    let curves = [
        (
            "Hessian d=2",
            CurveSpec::Hessian(HessianCurve::new(ctx.int(2)).unwrap()),
        ),
        (
            "De Moivre d=5, a=1, b=1",
            CurveSpec::DeMoivre(DeMoivreCurve::new(5, ctx.int(1), ctx.int(1)).unwrap()),
        ),
    ];
    for (name, spec) in &curves {
        println!("{name} over q = 2^256 - 587:");
        for msg in ["alice@example.com", "bob@example.com"] {
            let (p, counter) = hash_to_point(spec, msg.as_bytes(), DigestAlg::Sha256).unwrap();
            let (x, y) = p.coords().unwrap();
            println!("  {msg:?} (counter {counter})");
            println!("    x = {x}");
            println!("    y = {y}");
            assert!(spec.is_on_curve(&p));
        }
    }

    // Over a toy field the retry counter is often nonzero: a digest can hit
    // an excluded t.
    let ctx = FieldCtx::from_u64(17).unwrap();
    let spec = CurveSpec::Hessian(HessianCurve::new(ctx.int(0)).unwrap());
    println!("\nHessian d=0 over F_17, counters for twenty messages:");
    let counters: Vec<u8> = (0..20)
        .map(|i| {
            let msg = format!("m{i}");
            hash_to_point(&spec, msg.as_bytes(), DigestAlg::Sha256)
                .unwrap()
                .1
        })
        .collect();
    println!("  {counters:?}");
}
