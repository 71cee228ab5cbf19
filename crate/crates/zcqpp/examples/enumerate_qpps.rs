//! Enumerate normalized QPPs over Z_N and compare against the closed-form
//! count phi(N)·(N/rad(N) − 1) for odd N.
//!
//! ```bash
//! cargo run --example enumerate_qpps
//! ```

use zcqpp::qpp::{count_nonzero_qpps_closed_form, enumerate_qpps, QppFilter};

fn main() -> zcqpp::Result<()> {
    for n in [25u64, 45, 75, 121, 147, 175] {
        let nonzero = enumerate_qpps(n, QppFilter::Nonzero)?;
        let irreducible = enumerate_qpps(n, QppFilter::Irreducible)?;
        let closed = count_nonzero_qpps_closed_form(n)?;
        println!(
            "N={n}: {} nonzero QPPs (closed form {closed}), {} irreducible",
            nonzero.len(),
            irreducible.len()
        );
    }
    let q75 = enumerate_qpps(75, QppFilter::Nonzero)?;
    println!(
        "first pairs mod 75: {:?}",
        q75.iter().take(5).map(|q| (q.a(), q.b())).collect::<Vec<_>>()
    );
    Ok(())
}
