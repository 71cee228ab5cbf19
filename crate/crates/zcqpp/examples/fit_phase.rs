//! Fit an admissible quadratic phase to an interleaved sequence, and build
//! the same representative constructively by CRT gluing when the criterion
//! allows it.
//!
//! ```bash
//! cargo run --example fit_phase
//! ```

use zcqpp::phase::{construct_quadratic_via_crt, fit_quadratic_phase, LiftedPhase};
use zcqpp::qpp::Qpp;

fn main() -> zcqpp::Result<()> {
    // N=45: the 3-adic component sits at the collapse boundary, so the
    // quartic/cubic terms fold into a quadratic and a representative exists
    let qpp = Qpp::new(45, 15, 1)?;
    let f = LiftedPhase::from_qpp(&qpp, 1, 0)?;
    match fit_quadratic_phase(&f) {
        Some(t) => println!("N=45 a=15 b=1: fit gives A={} B={} C={} (mod 90)", t.a, t.b, t.c),
        None => println!("N=45 a=15 b=1: no quadratic representative"),
    }
    let glued = construct_quadratic_via_crt(&qpp, 1, 0)?;
    println!("CRT construction gives A={} B={} C={}", glued.a, glued.b, glued.c);
    println!("construction matches the phase table: {}", glued.matches(&f));

    // N=75: the 5-adic valuation of a falls short of 2 and the fit fails
    let qpp = Qpp::new(75, 15, 1)?;
    let f = LiftedPhase::from_qpp(&qpp, 1, 0)?;
    println!("N=75 a=15 b=1: fit is {:?}", fit_quadratic_phase(&f));
    Ok(())
}
