//! Computed tables against classical hand-written tables, Kronecker products against
//! Dixon on product groups, and exact table invariants on every fixture.

use ctk::analysis::Classified;
use ctk::fixtures::{self, FixtureTable};
use ctk::permgroup::DEFAULT_ENUM_CAP;
use ctk::{dixon, CharacterTable, GeneratorSet};
use std::sync::OnceLock;

fn computed(set: &GeneratorSet) -> CharacterTable {
    let group = set.enumerate().unwrap();
    dixon::character_table(&group, set.name.as_deref().unwrap()).unwrap()
}

fn hand(text: &str) -> CharacterTable {
    CharacterTable::load(text).unwrap()
}

fn small_fixtures() -> &'static [FixtureTable] {
    static CELL: OnceLock<Vec<FixtureTable>> = OnceLock::new();
    CELL.get_or_init(|| {
        fixtures::compute_tables(
            &fixtures::small_catalog(),
            &fixtures::product_recipes(),
            DEFAULT_ENUM_CAP,
        )
        .unwrap()
    })
}

const S3: &str = "CHARTABLE v1\nname: S3\norder: 6\nclasses: 3\nclasssizes: 1 3 2\n\
elementorders: 1 2 3\nX1: 1 1 1\nX2: 1 -1 1\nX3: 2 0 -1\n";

const A4: &str = "CHARTABLE v1\nname: A4\norder: 12\nclasses: 4\nclasssizes: 1 3 4 4\n\
elementorders: 1 2 3 3\nX1: 1 1 1 1\nX2: 1 1 E(3) E(3)^2\nX3: 1 1 E(3)^2 E(3)\nX4: 3 -1 0 0\n";

const A5: &str = "CHARTABLE v1\nname: A5\norder: 60\nclasses: 5\nclasssizes: 1 15 20 12 12\n\
elementorders: 1 2 3 5 5\nX1: 1 1 1 1 1\n\
X2: 3 -1 0 -E(5)^2-E(5)^3 -E(5)-E(5)^4\nX3: 3 -1 0 -E(5)-E(5)^4 -E(5)^2-E(5)^3\n\
X4: 4 0 1 -1 -1\nX5: 5 1 -1 0 0\n";

const Q8: &str = "CHARTABLE v1\nname: Q8\norder: 8\nclasses: 5\nclasssizes: 1 1 2 2 2\n\
elementorders: 1 2 4 4 4\nX1: 1 1 1 1 1\nX2: 1 1 1 -1 -1\nX3: 1 1 -1 1 -1\n\
X4: 1 1 -1 -1 1\nX5: 2 -2 0 0 0\n";

const D4: &str = "CHARTABLE v1\nname: D4\norder: 8\nclasses: 5\nclasssizes: 1 1 2 2 2\n\
elementorders: 1 2 2 2 4\nX1: 1 1 1 1 1\nX2: 1 1 1 -1 -1\nX3: 1 1 -1 1 -1\n\
X4: 1 1 -1 -1 1\nX5: 2 -2 0 0 0\n";

const S4: &str = "CHARTABLE v1\nname: S4\norder: 24\nclasses: 5\nclasssizes: 1 3 6 8 6\n\
elementorders: 1 2 2 3 4\nX1: 1 1 1 1 1\nX2: 1 1 -1 1 -1\nX3: 2 2 0 -1 0\n\
X4: 3 -1 1 0 -1\nX5: 3 -1 -1 0 1\n";

const C2: &str = "CHARTABLE v1\nname: C2\norder: 2\nclasses: 2\nclasssizes: 1 1\n\
elementorders: 1 2\nX1: 1 1\nX2: 1 -1\n";

#[test]
fn classical_tables_are_reproduced() {
    let cases = [
        (fixtures::symmetric(3), S3),
        (fixtures::alternating(5), A5),
        (fixtures::quaternion8(), Q8),
        (fixtures::dihedral(4), D4),
        (fixtures::symmetric(4), S4),
        (fixtures::cyclic(2), C2),
    ];
    for (set, text) in cases {
        let t = computed(&set);
        assert!(t.is_equivalent(&hand(text)), "{:?}\n{}", set.name, t.render());
    }
    let a4 = GeneratorSet::parse("name: A4\ndomain: 4\n(0 1 2)\n(1 2 3)\n").unwrap();
    assert!(computed(&a4).is_equivalent(&hand(A4)));
}

#[test]
fn quaternion_and_dihedral_tables_differ() {
    assert!(!hand(Q8).is_equivalent(&hand(D4)));
    assert!(!computed(&fixtures::quaternion8()).is_equivalent(&hand(D4)));
}

#[test]
fn cyclic_tables_are_character_groups() {
    for n in 2..=12u64 {
        let t = computed(&fixtures::cyclic(n as usize));
        assert_eq!(t.num_classes(), n as usize);
        assert!(t.degrees().iter().all(|&d| d == 1));
        assert!(t.values.iter().flatten().all(|v| v.is_root_of_unity()));
    }
}

#[test]
fn trivial_character_comes_first() {
    let dixon_count = fixtures::small_catalog().len();
    for f in &small_fixtures()[..dixon_count] {
        assert!(f.table.values[0].iter().all(|v| *v == ctk::Cyclotomic::one()), "{}", f.table.name);
        let degrees = f.table.degrees();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]), "{}", f.table.name);
    }
}

#[test]
fn kronecker_products_match_product_groups() {
    for (a, b) in [
        (fixtures::cyclic(2), fixtures::symmetric(3)),
        (fixtures::quaternion8(), fixtures::cyclic(3)),
        (fixtures::dihedral(4), fixtures::cyclic(5)),
        (fixtures::cyclic(3), fixtures::cyclic(3)),
    ] {
        let kron = computed(&a).direct_product(&computed(&b)).validated().unwrap();
        let group = a.direct_product(&b).enumerate().unwrap();
        let direct = dixon::character_table(&group, &kron.name).unwrap();
        assert!(kron.is_equivalent(&direct), "{}", kron.name);
        assert_eq!(kron.exponent(), direct.exponent());
    }
}

#[test]
fn every_fixture_table_is_exactly_valid() {
    for f in small_fixtures() {
        let v = f.table.validate();
        assert!(v.is_empty(), "{}: {:?}", f.table.name, v);
    }
}

#[test]
fn fixture_tables_round_trip_through_text() {
    for f in small_fixtures() {
        let back = CharacterTable::load(&f.table.render()).unwrap();
        assert_eq!(back, f.table);
    }
}

#[test]
fn classification_is_invariant_under_galois_conjugation() {
    for f in small_fixtures() {
        let t = &f.table;
        let e = t.exponent() as i64;
        let base = Classified::new(t);
        for k in (2..e).filter(|k| num_integer::Integer::gcd(k, &e) == 1) {
            let conj = t.galois_conjugate(k).unwrap();
            let other = Classified::new(&conj);
            for (r1, r2) in base.classes.iter().zip(&other.classes) {
                for (a, b) in r1.iter().zip(r2) {
                    assert_eq!(a.kind, b.kind, "{} under k = {k}", t.name);
                    assert_eq!(a.mean, b.mean);
                }
            }
            if k == e - 1 {
                assert!(conj.validate().is_empty());
            }
        }
    }
}

#[test]
fn corrupted_tables_fail_validation() {
    let mut t = hand(S4);
    t.values[4][4] = ctk::Cyclotomic::from_int(-1);
    assert!(!t.validate().is_empty());
    let mut t = hand(S4);
    t.class_sizes.swap(1, 2);
    assert!(!t.validate().is_empty());
    let mut t = hand(A5);
    t.values[1][3] = t.values[1][3].complex_conjugate() + ctk::Cyclotomic::one();
    assert!(!t.validate().is_empty());
}
