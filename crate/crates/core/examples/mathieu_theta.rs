//! θ and θ′ for the two smallest Mathieu groups, computed from scratch.

use std::time::Instant;

use ctk::analysis::{decimal, Classified};
use ctk::{dixon, fixtures};

fn main() -> ctk::Result<()> {
    let which = std::env::args().nth(1).unwrap_or_else(|| "M11".into());
    let set = match which.as_str() {
        "M12" => fixtures::mathieu12(),
        _ => fixtures::mathieu11(),
    };
    let start = Instant::now();
    let group = set.enumerate()?;
    let table = dixon::character_table(&group, &which)?;
    let cl = Classified::new(&table);
    println!("{which}: order {}, {} classes", table.group_order, table.num_classes());
    println!("degrees: {:?}", table.degrees());
    println!("theta  = {} ~ {}", cl.theta(), decimal(&cl.theta(), 4));
    println!("theta' = {} ~ {}", cl.theta_prime(), decimal(&cl.theta_prime(), 4));
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
