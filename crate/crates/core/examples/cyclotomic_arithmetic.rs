//! Exact arithmetic in cyclotomic fields: canonical forms, Galois action, and the
//! classification used by θ.

use ctk::Cyclotomic;

fn main() -> ctk::Result<()> {
    let z5: Cyclotomic = "E(5)".parse()?;
    let golden = Cyclotomic::from_int(1) + &z5 + z5.pow(4);
    println!("1 + E(5) + E(5)^4 = {golden}");
    println!("  conductor {}, numeric {:.6}", golden.conductor(), golden.to_complex().re);

    let sum: Cyclotomic = (0..5).map(|k| Cyclotomic::root_of_unity(5, k).unwrap()).sum();
    println!("sum of fifth roots of unity = {sum}");

    let i: Cyclotomic = "E(4)".parse()?;
    println!("E(4)^2 = {}, conj(E(4)) = {}", i.pow(2), i.complex_conjugate());
    println!("sigma_2(E(5)) = {}", z5.galois_conjugate(2)?);

    for text in ["0", "-E(3)", "E(5)-1", "E(7)+E(7)^6", "1+E(4)"] {
        let a: Cyclotomic = text.parse()?;
        let c = a.classify();
        println!("{text:>12}: {:?}, galois mean {}", c.kind, c.mean);
    }
    Ok(())
}
