//! Vanishing theorems for nilpotent groups, checked on p-groups and on products
//! across distinct primes.

use ctk::analysis::{all_passed, verify_nilpotent_theorems};
use ctk::{dixon, fixtures};

fn main() -> ctk::Result<()> {
    let mut tables = std::collections::BTreeMap::new();
    for set in [fixtures::quaternion8(), fixtures::dihedral(4), fixtures::extraspecial27(), fixtures::cyclic(3)] {
        let name = set.name.clone().unwrap();
        let group = set.enumerate()?;
        assert!(group.is_nilpotent());
        tables.insert(name.clone(), dixon::character_table(&group, &name)?);
    }
    let products = [
        fixtures::ProductRecipe::new(&["Q8", "C3"]),
        fixtures::ProductRecipe::new(&["D4", "E27"]),
    ];
    let mut all = tables.values().cloned().collect::<Vec<_>>();
    for p in &products {
        all.push(p.build(&tables)?);
    }
    for t in &all {
        let verdicts = verify_nilpotent_theorems(t, true)?;
        println!("{} (order {}): {}", t.name, t.group_order, if all_passed(&verdicts) { "all pass" } else { "FAILED" });
        for v in &verdicts {
            println!("  {}: {}", v.name, v.detail);
        }
    }
    Ok(())
}
