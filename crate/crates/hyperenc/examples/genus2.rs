//! Deterministic point encoding on the two genus-2 families, plus their
//! Igusa invariants and the degree-30 locus relation.
//!
//! ```text
//! cargo run --example genus2
//! ```

use hyperenc::curves::{igusa_locus_residual, Genus2Type1Curve, Genus2Type2Curve};
use hyperenc::encoders::{genus2_type1_encode, genus2_type2_encode};
use hyperenc::ffield::{ElementBuilder, FieldCtx};

fn main() {
    // Type 1: y^2 = (x^3 + 3ax + 2)^2 + 8bx^3
    let ctx = FieldCtx::from_u64(1019).unwrap();
    let c1 = Genus2Type1Curve::new(ctx.int(7), ctx.int(11)).unwrap();
    println!("H_1 / F_1019 : y^2 = (x^3 + 21x + 2)^2 + 88x^3");
    for t in [1i64, 2, 500] {
        let t = ctx.int(t);
        match genus2_type1_encode(&c1, &t) {
            Ok(p) => {
                let (x, y) = p.coords().unwrap();
                println!("  t = {t} -> ({x}, {y}), on curve: {}", c1.contains(&p));
            }
            Err(e) => println!("  t = {t} -> {e}"),
        }
    }
    let j = c1.igusa();
    println!(
        "  Igusa: J2={} J4={} J6={} J8={} J10={}",
        j.j2, j.j4, j.j6, j.j8, j.j10
    );

    // Type 2: y^2 / lambda = (x^3 + 3 mu x + 2a)^2 + 4b, with b and the
    // auxiliary u, z derived from (a, v, w).
    let c2 =
        Genus2Type2Curve::new(ctx.int(1), ctx.int(3), ctx.int(5), ctx.int(2), ctx.int(9)).unwrap();
    println!("\nH_2 / F_1019 with (lambda, mu, a, v, w) = (1, 3, 5, 2, 9)");
    println!("  derived u = {}, b = {}, z = {}", c2.u(), c2.b(), c2.z());
    for t in [1i64, 42] {
        let t = ctx.int(t);
        match genus2_type2_encode(&c2, &t) {
            Ok(p) => {
                let (x, y) = p.coords().unwrap();
                println!("  t = {t} -> ({x}, {y}), on curve: {}", c2.contains(&p));
            }
            Err(e) => println!("  t = {t} -> {e}"),
        }
    }
    let j = c2.igusa();
    println!(
        "  Igusa: J2={} J4={} J6={} J8={} J10={}",
        j.j2, j.j4, j.j6, j.j8, j.j10
    );
    // Every type-2 invariant tuple satisfies one homogeneous degree-30
    // relation; the residual is identically zero on the family.
    println!("  locus residual = {}", igusa_locus_residual(&j));
}
