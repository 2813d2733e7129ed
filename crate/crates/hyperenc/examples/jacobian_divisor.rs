//! Hashing into the Jacobian: build a 1-smooth reduced divisor
//! sum(P_i) - r*infinity from message-derived seeds, dropping negation
//! collisions.
//!
//! ```text
//! cargo run --example jacobian_divisor
//! ```

use hyperenc::curves::{CurveSpec, DeMoivreCurve, QuasiQuadraticCurve};
use hyperenc::ffield::{ElementBuilder, FieldCtx};
use hyperenc::hashing::{derive_seeds, DigestAlg};
use hyperenc::jacobian::{encode_smooth_divisor, negate_point};

fn main() {
    let ctx = FieldCtx::from_u64(1019).unwrap();
    let dm = CurveSpec::DeMoivre(DeMoivreCurve::new(5, ctx.int(2), ctx.int(7)).unwrap());
    let g = dm.hyperelliptic_genus().unwrap();
    println!("De Moivre d=5 over F_1019, genus {g}");
    for msg in ["alpha", "beta"] {
        let seeds = derive_seeds(dm.ctx(), msg.as_bytes(), DigestAlg::Sha256, (g + 4) as u8);
        let div = encode_smooth_divisor(&dm, &seeds, g).unwrap();
        println!("  {msg:?} -> divisor with r = {}:", div.r());
        for p in &div.points {
            let (x, y) = p.coords().unwrap();
            println!("    ({x}, {y})  on curve: {}", dm.is_on_curve(p));
        }
    }

    // A constructed negation collision over F_5: encode(1) = (0, 1) and
    // encode(4) = (0, 4) are opposite points, so the second is dropped and
    // the divisor comes out with r = 1 < g.
    let ctx = FieldCtx::from_u64(5).unwrap();
    let qq = CurveSpec::QuasiQuadratic(QuasiQuadraticCurve::new(3, ctx.int(1)).unwrap());
    let seeds = [ctx.int(1), ctx.int(4)];
    let div = encode_smooth_divisor(&qq, &seeds, 2).unwrap();
    println!("\nquasiquadratic d=3 over F_5, seeds [1, 4]:");
    println!("  r = {} (collision after negation dropped)", div.r());
    let p = &div.points[0];
    let n = negate_point(p);
    let (x, y) = p.coords().unwrap();
    let (nx, ny) = n.coords().unwrap();
    println!("  kept ({x}, {y}); its negation ({nx}, {ny}) was the second encode");
}
