//! Checks θ, θ′ and the irrational-value law on Aₙ for n = 5..9.

use std::time::Instant;

use ctk::analysis::decimal;
use ctk::families;

fn main() -> ctk::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 5..=top {
        let start = Instant::now();
        let rep = families::alt_verify(n)?;
        println!(
            "A{n}: {} classes, theta = {} (~{}), theta' = {} (~{}), {:.2?}",
            rep.table.num_classes(),
            rep.theta,
            decimal(&rep.theta, 4),
            rep.theta_prime,
            decimal(&rep.theta_prime, 4),
            start.elapsed()
        );
        for v in &rep.verdicts {
            println!("  [{}] {}: {}", if v.passed { "pass" } else { "FAIL" }, v.name, v.detail);
        }
    }
    Ok(())
}
