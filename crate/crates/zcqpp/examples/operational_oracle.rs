//! Brute-force the five-operation orbit of the Zadoff-Chu family at small N
//! and confirm it agrees with the valuation criterion.
//!
//! ```bash
//! cargo run --example operational_oracle
//! ```

use zcqpp::criterion::{decide_equivalence, Verdict};
use zcqpp::qpp::{enumerate_qpps, QppFilter};
use zcqpp::sequences::{interleave, operational_equivalence_search, ZcParams};

fn main() -> zcqpp::Result<()> {
    for n in 3..=14u64 {
        let qpps = enumerate_qpps(n, QppFilter::Nonzero)?;
        if qpps.is_empty() {
            continue;
        }
        println!("N={n}: {} nonzero QPPs", qpps.len());
        for qpp in qpps {
            let target = interleave(ZcParams::new(n, 1, 0)?, &qpp)?;
            let witness = operational_equivalence_search(&target, n)?;
            let verdict = decide_equivalence(&qpp, 1, 0)?.verdict;
            let agree = witness.is_some() == (verdict == Verdict::Equivalent);
            match witness {
                Some(w) => println!(
                    "  a={} b={}: witness sigma={} u'={} r={} d={} lambda={} c0={} (criterion agrees: {agree})",
                    qpp.a(), qpp.b(), w.sigma, w.u_prime, w.r, w.d, w.lambda, w.c0
                ),
                None => println!(
                    "  a={} b={}: no witness in the full orbit (criterion agrees: {agree})",
                    qpp.a(), qpp.b()
                ),
            }
            assert!(agree);
        }
    }
    Ok(())
}
