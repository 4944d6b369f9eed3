//! Cross-check a structural verdict with the independent pointwise
//! criterion: m must equal m(xi) almost everywhere on (xi - A) meet B.
//!
//! Run with `cargo run --example pointwise_oracle`.

use bedrosian::{
    characteristic_decomposition, pointwise_criterion_oracle, rasterize,
    structural_bedrosian_check, FrequencyGrid, MultiplierField, MultiplierSpec, RegionDescriptor,
};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(1, 2048, 32.0)?;
    let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[2.0]), &grid);
    let b = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::rect(&[-2.0], &[1.0])),
        &grid,
    );
    let decomp = characteristic_decomposition(&a, &b)?;

    for (name, spec) in [
        ("hilbert ", MultiplierSpec::Hilbert),
        ("identity", MultiplierSpec::Identity),
    ] {
        let m = MultiplierField::make(&spec, &grid)?;
        let structural = structural_bedrosian_check(&m, &decomp, 1e-9);
        let pointwise = pointwise_criterion_oracle(&m, &a, &b, 1e-9)?;
        println!(
            "{name}: structural pass = {}, pointwise pass = {} ({} pairs, worst dev {:.3e})",
            structural.pass, pointwise.pass, pointwise.pairs, pointwise.worst_dev
        );
        assert_eq!(structural.pass, pointwise.pass);
    }

    // shrink the gap until the criterion fails: B reaching into (-1, 1)
    // forces sign changes inside one characteristic set
    let b_bad = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::rect(&[-0.4], &[0.4])),
        &grid,
    );
    let m = MultiplierField::make(&MultiplierSpec::Hilbert, &grid)?;
    let pointwise = pointwise_criterion_oracle(&m, &a, &b_bad, 1e-9)?;
    println!(
        "narrowed gap: pointwise pass = {}, worst offender at bin {:?}",
        pointwise.pass,
        pointwise.worst_bin.map(|idx| idx[0])
    );
    Ok(())
}
