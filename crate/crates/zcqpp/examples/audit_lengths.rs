//! Audit a length range against the corrected inequivalence boundary and
//! print the audit table as CSV.
//!
//! ```bash
//! cargo run --example audit_lengths
//! ```

use zcqpp::cli::{audit_csv, audit_range};

fn main() -> zcqpp::Result<()> {
    // covers the classic prime powers (25, 49, 121, 125) as well as the
    // non-prime-power lengths (75, 147, 175) they were conjectured to exclude
    let rows = audit_range(25, 175)?;
    let interesting: Vec<_> = rows
        .into_iter()
        .filter(|r| r.verdict != "vacuous")
        .collect();
    print!("{}", audit_csv(&interesting));
    Ok(())
}
