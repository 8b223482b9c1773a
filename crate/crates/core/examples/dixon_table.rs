//! Character tables straight from permutation generators.

use ctk::{dixon, GeneratorSet};

fn main() -> ctk::Result<()> {
    let text = "name: S4\ndomain: 4\n(0 1)\n(0 1 2 3)\n";
    let set = GeneratorSet::parse(text)?;
    let group = set.enumerate()?;
    println!(
        "S4: order {}, class sizes {:?}, element orders {:?}",
        group.order(),
        group.class_sizes(),
        group.element_orders
    );
    let table = dixon::character_table(&group, "S4")?;
    print!("{}", table.render());

    let group = ctk::fixtures::extraspecial27().enumerate()?;
    let table = dixon::character_table(&group, "E27")?;
    println!("\n3^(1+2): degrees {:?}, exponent {}", table.degrees(), table.exponent());
    for row in table.values.iter().filter(|r| r[0] == ctk::Cyclotomic::from_int(3)) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  {}", line.join("  "));
    }
    Ok(())
}
