//! First-order Born phase shifts: digamma closed form, Legendre-Q closed
//! forms and momentum-space quadrature, plus the logarithmic approximation
//! of the digamma form.
//!
//! cargo run --release --example born_phase_shifts

use phase_stopping::gas::ElectronGas;
use phase_stopping::phase::{born_delta0_hulthen, born_delta_l, born_delta_series, PotentialSpec};
use phase_stopping::special::{bethe_log_approx, re_digamma_1p_iu, EULER_MASCHERONI};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let gas = ElectronGas::from_rs(2.07)?;
    let s = gas.setup(1.0, 6.0)?;
    println!(
        "Born s-wave shift (digamma form) at v = 6: {:.12}",
        born_delta0_hulthen(&s)
    );

    let hulthen = PotentialSpec::hulthen_for(&s);
    let yukawa = PotentialSpec::yukawa_for(&s);
    let h = born_delta_series(&hulthen, s.k, 200)?;
    let y = born_delta_series(&yukawa, s.k, 200)?;
    println!();
    println!(
        "{:>4} {:>16} {:>16} {:>16} {:>16}",
        "l", "hulthen closed", "hulthen quad", "yukawa closed", "yukawa quad"
    );
    for l in [0usize, 1, 2, 5, 10, 50, 200] {
        println!(
            "{:>4} {:>16.12} {:>16.12} {:>16.12} {:>16.12}",
            l,
            h[l],
            born_delta_l(&hulthen, l, s.k, 1e-10)?,
            y[l],
            born_delta_l(&yukawa, l, s.k, 1e-10)?
        );
    }

    println!();
    println!(
        "{:>8} {:>16} {:>16} {:>12}",
        "u", "Re psi(1+iu)-psi(1)", "0.5 ln(1+(Gu)^2)", "difference"
    );
    for u in [1.0, 10.0, 69.5126, 100.0, 1000.0] {
        let exact = re_digamma_1p_iu(u) + EULER_MASCHERONI;
        let approx = bethe_log_approx(u);
        println!(
            "{:>8} {:>16.10} {:>16.10} {:>12.3e}",
            u,
            exact,
            approx,
            approx - exact
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
