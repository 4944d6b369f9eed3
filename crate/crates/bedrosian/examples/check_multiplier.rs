//! Test built-in multipliers for constancy on the characteristic classes of
//! a pair: the structural criterion for the identity T(fg) = f(Tg).
//!
//! Run with `cargo run --example check_multiplier`.

use bedrosian::{
    characteristic_decomposition, rasterize, structural_bedrosian_check, FrequencyGrid,
    MultiplierField, MultiplierSpec, RegionDescriptor,
};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(2, 256, 16.0)?;
    let e = 1.03;
    let a = rasterize(&RegionDescriptor::rect(&[-e, -e], &[e, e]), &grid);
    let b = rasterize(&RegionDescriptor::axis_exterior(&[e, e], &[e, e]), &grid);
    let decomp = characteristic_decomposition(&a, &b)?;
    println!(
        "box / per-axis exterior pair: {} merged classes",
        decomp.class_count()
    );

    let specs = [
        ("identity         ", MultiplierSpec::Identity),
        ("partial_hilbert 1", MultiplierSpec::PartialHilbert { axis: 1 }),
        ("partial_hilbert 2", MultiplierSpec::PartialHilbert { axis: 2 }),
        ("riesz 1          ", MultiplierSpec::Riesz { axis: 1 }),
        ("riesz 2          ", MultiplierSpec::Riesz { axis: 2 }),
    ];
    for (name, spec) in specs {
        let m = MultiplierField::make(&spec, &grid)?;
        let verdict = structural_bedrosian_check(&m, &decomp, 1e-9);
        println!(
            "{name}: pass = {:5}, max deviation = {:.3e}",
            verdict.pass,
            verdict.max_dev()
        );
        if verdict.pass {
            for class in &verdict.classes {
                println!(
                    "    class {} constant = {:.3} + {:.3}i",
                    class.class_id, class.mean.re, class.mean.im
                );
            }
        }
    }
    Ok(())
}
