//! Writing a table to the text format, reading it back, and validating a damaged copy.

use ctk::{dixon, fixtures, CharacterTable, Error};

fn main() -> ctk::Result<()> {
    let group = fixtures::symmetric(4).enumerate()?;
    let table = dixon::character_table(&group, "S4")?;
    let text = table.render();
    print!("{text}");

    let back = CharacterTable::load(&text)?;
    assert_eq!(back, table);
    println!("round trip: identical");

    let damaged = text.replace("X4: 3 -1 -1 0 1", "X4: 3 -1 -1 0 -1");
    match CharacterTable::load(&damaged) {
        Err(Error::Validation(v)) => println!("damaged copy rejected with {} violations, first: {}", v.len(), v[0]),
        Err(e) => println!("damaged copy rejected: {e}"),
        Ok(_) => println!("damaged copy unexpectedly accepted"),
    }
    match CharacterTable::parse("CHARTABLE v1\nname: x\norder: 2\nclasses: 2\nclasssizes: 1 1\nelementorders: 1 2\nX1: 1 1\nX2: 1 E(\n") {
        Err(e) => println!("syntax error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
