//! Tables of direct products, computed two ways: Kronecker products of the factor
//! tables, and Dixon on the product permutation group.

use ctk::{dixon, fixtures};

fn main() -> ctk::Result<()> {
    for (a, b) in [
        (fixtures::cyclic(2), fixtures::symmetric(3)),
        (fixtures::quaternion8(), fixtures::cyclic(3)),
        (fixtures::dihedral(4), fixtures::cyclic(5)),
    ] {
        let ta = dixon::character_table(&a.enumerate()?, a.name.as_deref().unwrap())?;
        let tb = dixon::character_table(&b.enumerate()?, b.name.as_deref().unwrap())?;
        let kron = ta.direct_product(&tb).validated()?;
        let product = a.direct_product(&b);
        let direct = dixon::character_table(&product.enumerate()?, &kron.name)?;
        println!(
            "{}: order {}, {} classes, Kronecker and Dixon tables equivalent: {}",
            kron.name,
            kron.group_order,
            kron.num_classes(),
            kron.is_equivalent(&direct)
        );
    }
    Ok(())
}
