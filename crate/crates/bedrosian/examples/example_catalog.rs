//! Run the built-in example catalog (the same scenarios behind
//! `bedrosian examples all`) and print one verdict line each.
//!
//! Run with `cargo run --example example_catalog`.

use bedrosian::scenarios;

fn main() -> bedrosian::Result<()> {
    let outcomes = scenarios::run_selector("all")?;
    let mut mismatched = 0;
    for o in &outcomes {
        println!(
            "{:6} {:45} exists={:5} classes={} {}",
            o.id,
            o.title,
            o.observed_exists,
            o.observed_classes,
            if o.matched() { "ok" } else { "MISMATCH" }
        );
        for m in &o.mismatches {
            println!("        {m}");
            mismatched += 1;
        }
    }
    if mismatched > 0 {
        std::process::exit(1);
    }
    Ok(())
}
