//! Encoding field elements onto Hessian curves x^3 + y^3 + 1 = 3dxy.
//!
//! Shows the forward map, its excluded input, preimage computation, and the
//! exact image-size prediction, first over a toy field and then over a
//! 256-bit prime.
//!
//! ```text
//! cargo run --example hessian
//! ```

use num_bigint::BigUint;
use num_traits::One;

use hyperenc::census::{hessian_prediction, image_census};
use hyperenc::curves::{CurveSpec, HessianCurve};
use hyperenc::encoders::{hessian_encode, hessian_preimages};
use hyperenc::ffield::{ElementBuilder, FieldCtx};

fn main() {
    // F_5 is tiny enough to watch every input.
    let ctx = FieldCtx::from_u64(5).unwrap();
    let curve = HessianCurve::new(ctx.int(0)).unwrap();
    println!("E_0 / F_5 : x^3 + y^3 + 1 = 0");
    for t in 0..5 {
        let t = ctx.int(t);
        match hessian_encode(&curve, &t) {
            Ok(p) => {
                let (x, y) = p.coords().unwrap();
                let pre = hessian_preimages(&curve, &p);
                println!(
                    "  t = {t} -> ({x} : {y} : 1), preimages {{{}}}",
                    pre.iter()
                        .map(|e| e.to_hex())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
            Err(e) => println!("  t = {t} -> {e}"),
        }
    }
    let census = image_census(&CurveSpec::Hessian(curve.clone()), 1).unwrap();
    println!(
        "  image size {} (predicted {})",
        census.report.image_size,
        hessian_prediction(&curve)
    );

    // The same map at cryptographic size: one cube root, a few divisions.
    let q: BigUint = (BigUint::one() << 256) - 587u32;
    let ctx = FieldCtx::new(q).unwrap();
    let curve = HessianCurve::new(ctx.int(2)).unwrap();
    let t = ctx.element(BigUint::parse_bytes(b"123456789abcdef", 16).unwrap());
    let p = hessian_encode(&curve, &t).unwrap();
    let (x, y) = p.coords().unwrap();
    println!("\nE_2 / F_q with q = 2^256 - 587:");
    println!("  t = {}", t.to_hex());
    println!("  x = {x}");
    println!("  y = {y}");
    println!("  on curve: {}", curve.contains(&p));
}
