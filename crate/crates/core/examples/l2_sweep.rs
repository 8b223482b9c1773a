//! Lower bounds on θ and θ′ of L₂(q) for every prime power up to 10⁴.

use std::time::Instant;

use ctk::analysis::decimal;
use ctk::families;
use num_rational::BigRational;

fn main() -> ctk::Result<()> {
    let start = Instant::now();
    let half = BigRational::new(1.into(), 2.into());
    let mut worst: Option<(u64, BigRational)> = None;
    let qs = families::prime_powers(4, 10_000);
    for &q in &qs {
        let b = families::l2_bounds(q)?;
        assert!(b.lb_theta > half && b.lb_theta_prime > half, "q = {q}");
        let m = b.lb_theta.clone().min(b.lb_theta_prime.clone());
        if worst.as_ref().map_or(true, |(_, w)| m < *w) {
            worst = Some((q, m));
        }
    }
    let (q, m) = worst.unwrap();
    println!("{} prime powers, smallest bound {} at q = {q}", qs.len(), decimal(&m, 6));
    for q in [4, 5, 7, 8, 9] {
        let b = families::l2_bounds(q)?;
        println!("q = {q}: {:?}, theta >= {}, theta' >= {}", b.census, b.lb_theta, b.lb_theta_prime);
    }
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
