//! Proton and antiproton curves on the default grid, with a small
//! hand-made overlay to show the comparison report. The overlay values are
//! illustrative, not measured data.
//!
//! cargo run --example fig1_curves

use phase_stopping::cli::{fig1_data, Curve, ReferenceOverlay};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let overlay = ReferenceOverlay::parse(
        "illustrative",
        "# v, stopping\n4.0, 0.085\n6.0, 0.046\n8.0, 0.029\n",
    )?;
    let data = fig1_data(2.07, 2.0, 10.0, 17, Some((&overlay, Curve::Proton)))?;
    println!(
        "{:>6} {:>12} {:>12} {:>10}",
        "v", "proton", "antiproton", "split %"
    );
    for c in &data.curves {
        println!(
            "{:>6.2} {:>12.8} {:>12.8} {:>10.5}",
            c.v,
            c.proton,
            c.antiproton,
            100.0 * c.splitting
        );
    }
    println!();
    for p in &data.overlay.as_ref().expect("overlay given").points {
        println!(
            "reference v = {:.2}: {:.4} vs model {:.6} at v = {:.2} ({:+.2}%)",
            p.v, p.reference, p.model, p.nearest_v, p.percent_diff
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
