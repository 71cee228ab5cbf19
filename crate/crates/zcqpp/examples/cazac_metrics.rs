//! Numerically verify the CAZAC property of plain and interleaved sequences.
//!
//! ```bash
//! cargo run --example cazac_metrics
//! ```

use zcqpp::qpp::Qpp;
use zcqpp::sequences::{cazac_check, interleave, zc_generate, ZcParams};

fn main() -> zcqpp::Result<()> {
    let plain = zc_generate(ZcParams::new(7, 1, 0)?);
    let r = cazac_check(&plain.to_complex(), 1e-9);
    println!(
        "plain ZC N=7: amplitude dev {:.2e}, off-peak autocorr {:.2e}, pass={}",
        r.max_amplitude_deviation, r.max_offpeak_autocorrelation, r.pass
    );

    let qpp = Qpp::new(75, 15, 1)?;
    let s = interleave(ZcParams::new(75, 2, 1)?, &qpp)?;
    let r = cazac_check(&s.to_complex(), 1e-9);
    println!(
        "interleaved N=75 a=15 b=1: amplitude dev {:.2e}, off-peak autocorr {:.2e}, pass={}",
        r.max_amplitude_deviation, r.max_offpeak_autocorrelation, r.pass
    );
    Ok(())
}
