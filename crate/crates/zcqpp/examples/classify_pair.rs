//! Decide Zadoff-Chu equivalence for single QPPs via the valuation criterion.
//!
//! ```bash
//! cargo run --example classify_pair
//! ```

use zcqpp::criterion::{decide_equivalence, Verdict};
use zcqpp::qpp::Qpp;

fn main() -> zcqpp::Result<()> {
    // the smallest non-prime-power length where every nonzero QPP is
    // inequivalent, against a length one step away where a witness exists
    for (n, a, b) in [(75u64, 15u64, 1u64), (45, 15, 1), (50, 25, 26)] {
        let qpp = Qpp::new(n, a, b)?;
        let report = decide_equivalence(&qpp, 1, 0)?;
        println!("N={n} a={a} b={b}:");
        for row in &report.rows {
            println!(
                "  p={:>2} alpha={} nu_a={} eta={} {}",
                row.p,
                row.alpha,
                row.nu_a,
                row.eta,
                if row.pass { "ok" } else { "obstruction" }
            );
        }
        match report.verdict {
            Verdict::Equivalent => println!("  => equivalent to an ordinary Zadoff-Chu sequence"),
            Verdict::Inequivalent => println!(
                "  => inequivalent (first obstruction at p={})",
                report.first_obstruction.unwrap()
            ),
        }
    }
    Ok(())
}
