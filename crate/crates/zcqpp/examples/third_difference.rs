//! The third-difference obstruction: compare the finite-difference table of
//! the lifted phase against the closed form 12a(2aX + 3a + b), then screen
//! a higher-degree interleaver.
//!
//! ```bash
//! cargo run --example third_difference
//! ```

use zcqpp::phase::{
    finite_difference, generic_third_difference_screen, phi_eval,
    third_difference_invariant,
};

fn main() -> zcqpp::Result<()> {
    let (n, a, b, q) = (75u64, 15u64, 1u64, 0u64);
    let table: Vec<u64> = (0..(n + 3) as i64).map(|k| phi_eval(a, b, q, n, k)).collect();
    let d3 = finite_difference(&table, 3, 2 * n)?;
    println!(
        "N={n}: third difference at X=0 is {} (closed form {})",
        d3[0],
        third_difference_invariant(a, b, n, q, 0)
    );
    println!("12·15·46 = 8280 has 5-adic valuation 1 < 2, so mod 25 it cannot vanish");

    for (coeffs, label) in [
        (vec![0u64, 7], "P = 7X (affine)"),
        (vec![0, 1, 15], "P = 15X^2 + X"),
        (vec![0, 1, 0, 25], "P = 25X^3 + X"),
    ] {
        let entries = generic_third_difference_screen(&coeffs, q, n)?;
        let verdicts: Vec<String> = entries
            .iter()
            .map(|e| {
                format!(
                    "{}^{}: {}",
                    e.p,
                    e.alpha,
                    if e.vanishes { "vanishes" } else { "OBSTRUCTED" }
                )
            })
            .collect();
        println!("{label}: {}", verdicts.join(", "));
    }
    Ok(())
}
