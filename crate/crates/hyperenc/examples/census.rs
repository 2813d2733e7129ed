//! The census engine: enumerate every t in F_q through an encoder and
//! compare the measured image against what the theory predicts.
//!
//! ```text
//! cargo run --example census
//! ```

use hyperenc::census::{image_census, verify_family, VerifyOptions};
use hyperenc::curves::{CurveSpec, Family, HessianCurve};
use hyperenc::ffield::{ElementBuilder, FieldCtx};

fn main() {
    // A single-curve census, with the full report.
    let ctx = FieldCtx::from_u64(101).unwrap();
    let spec = CurveSpec::Hessian(HessianCurve::new(ctx.int(13)).unwrap());
    let census = image_census(&spec, 2).unwrap();
    let r = &census.report;
    println!("census of Hessian d=13 over F_101:");
    println!("  domain {}, image {}", r.domain_size, r.image_size);
    println!("  predicted image: {:?}", r.predicted_image);
    println!(
        "  excluded: {:?}",
        r.excluded
            .iter()
            .map(|e| format!("t={} ({})", e.t, e.stage))
            .collect::<Vec<_>>()
    );
    println!("  multiplicity histogram: {:?}", r.multiplicity_histogram);

    // Family sweeps assert the theorem bounds across whole parameter
    // ranges; a failure would name the offending curve and quantity.
    println!("\nfamily sweeps:");
    let hessian =
        verify_family(Family::Hessian, &[5, 11, 17, 23], &VerifyOptions::default()).unwrap();
    println!(
        "  hessian, q in {{5,11,17,23}}: {} curves, image = prediction everywhere: {}",
        hessian.rows.len(),
        hessian.pass
    );

    let qq = verify_family(
        Family::QuasiQuadratic,
        &[5, 17, 23],
        &VerifyOptions::default(),
    )
    .unwrap();
    println!(
        "  quasiquadratic, q in {{5,17,23}}: {} curves, injective with image q-1: {}",
        qq.rows.len(),
        qq.pass
    );

    let opts = VerifyOptions {
        trials: 20,
        seed: 42,
        degree: Some(5),
        workers: 2,
    };
    let dm = verify_family(Family::DeMoivre, &[17, 53], &opts).unwrap();
    let worst = dm.rows.iter().map(|r| r.excluded_count).max().unwrap();
    println!(
        "  demoivre d=5, q in {{17,53}}: {} curves, excluded <= 8 (worst observed {}), pass: {}",
        dm.rows.len(),
        worst,
        dm.pass
    );
}
