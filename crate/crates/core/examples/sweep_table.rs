//! A velocity sweep through the library API, written as CSV and read back.
//!
//! cargo run --release --example sweep_table

use phase_stopping::cli::{run_sweep, Spacing, SweepMethod, SweepSpec, SweepTable};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        r_s: 2.07,
        z1_list: vec![1.0, -1.0],
        v_min: 3.0,
        v_max: 9.0,
        steps: 7,
        spacing: Spacing::Linear,
        methods: vec![SweepMethod::Asymptotic, SweepMethod::SemiAnalytic],
        l_max: None,
        tolerances: None,
        n0_2d: None,
    };
    let table = run_sweep(&spec)?;
    let csv = table.to_csv_string();
    print!("{csv}");
    let back = SweepTable::from_csv(&csv)?;
    println!();
    println!("round trip identical: {}", back == table);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
