//! Hyperelliptic encodings in every genus: quasiquadratic curves
//! y^2 = x^{2d} + x^d + a (genus d-1) and De Moivre curves y^2 = p_{a,b}(x)
//! of odd degree d (genus (d-1)/2).
//!
//! ```text
//! cargo run --example any_genus
//! ```

use hyperenc::curves::{DeMoivreCurve, QuasiQuadraticCurve};
use hyperenc::encoders::{
    demoivre_encode, demoivre_preimages, quasiquadratic_encode, quasiquadratic_preimage,
};
use hyperenc::ffield::{ElementBuilder, FieldCtx};

fn main() {
    let ctx = FieldCtx::from_u64(1019).unwrap();

    // Quasiquadratic, genus 4: the encoding is injective (image = q - 1).
    let qq = QuasiQuadraticCurve::new(5, ctx.int(3)).unwrap();
    println!(
        "quasiquadratic d=5 (genus {}): y^2 = x^10 + x^5 + 3 over F_1019",
        qq.genus()
    );
    for t in [0i64, 7, 1000] {
        let t = ctx.int(t);
        match quasiquadratic_encode(&qq, &t) {
            Ok(p) => {
                let (x, y) = p.coords().unwrap();
                let back = quasiquadratic_preimage(&qq, &p).unwrap();
                println!("  t = {t} -> ({x}, {y}); unique preimage {back}");
            }
            Err(e) => println!("  t = {t} -> {e}"),
        }
    }

    // De Moivre, genus 2: x^5 + 5ax^3 + 5a^2x + b, solvable by radicals.
    let dm = DeMoivreCurve::new(5, ctx.int(2), ctx.int(77)).unwrap();
    let coeffs: Vec<String> = dm.coefficients().iter().map(|c| c.to_hex()).collect();
    println!(
        "\nDe Moivre d=5 (genus {}): coefficients {:?}",
        dm.genus(),
        coeffs
    );
    for t in [3i64, 512] {
        let t = ctx.int(t);
        match demoivre_encode(&dm, &t) {
            Ok(p) => {
                let (x, y) = p.coords().unwrap();
                let pre = demoivre_preimages(&dm, &p);
                println!(
                    "  t = {t} -> ({x}, {y}); fiber size {} (at most 8)",
                    pre.len()
                );
            }
            Err(e) => println!("  t = {t} -> {e}"),
        }
    }

    // Higher degree still: d = 9 gives genus 4 (gcd(9, 1018) = 1).
    let dm9 = DeMoivreCurve::new(9, ctx.int(1), ctx.int(5)).unwrap();
    let t = ctx.int(12);
    let p = demoivre_encode(&dm9, &t).unwrap();
    let (x, y) = p.coords().unwrap();
    println!(
        "\nDe Moivre d=9 (genus {}): t = {t} -> ({x}, {y}), on curve: {}",
        dm9.genus(),
        dm9.contains(&p)
    );
}
