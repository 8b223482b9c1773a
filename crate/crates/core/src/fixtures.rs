//! The bundled group catalog: permutation generators for every named fixture and
//! direct-product recipes assembled at the character-table level.

use std::collections::BTreeMap;
use std::path::Path;

use crate::chartab::CharacterTable;
use crate::dixon;
use crate::error::{Error, Result};
use crate::permgroup::{GeneratorSet, Permutation};

fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(degree, cycles).expect("catalog generators are well formed")
}

fn from_map(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..degree).map(f).collect()).expect("catalog maps are bijections")
}

pub fn cyclic(n: usize) -> GeneratorSet {
    GeneratorSet::new(format!("C{n}"), n, vec![from_map(n, |i| (i + 1) % n)])
}

/// Dihedral group `Dₙ` of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> GeneratorSet {
    GeneratorSet::new(
        format!("D{n}"),
        n,
        vec![from_map(n, |i| (i + 1) % n), from_map(n, |i| (n - i) % n)],
    )
}

/// Q₈ in its regular representation; point `4s + u` stands for `(-1)^s · {1, i, j, k}[u]`.
pub fn quaternion8() -> GeneratorSet {
    // unit products: table[a][b] = (sign, unit) of e_a · e_b
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |unit: usize| {
        from_map(8, move |x| {
            let (s, u) = (x / 4, x % 4);
            let (ps, pu) = TABLE[unit][u];
            4 * ((s + ps) % 2) + pu
        })
    };
    GeneratorSet::new("Q8", 8, vec![left(1), left(2)])
}

/// The extraspecial group 3¹⁺² of exponent 3, as the maps `(x, y) ↦ (x + s, y + t·x + u)`
/// on 𝔽₃².
pub fn extraspecial27() -> GeneratorSet {
    let point = |x: usize, y: usize| 3 * (x % 3) + y % 3;
    GeneratorSet::new(
        "E27",
        9,
        vec![
            from_map(9, |i| point(i / 3 + 1, i % 3)),
            from_map(9, |i| point(i / 3, i % 3 + i / 3)),
        ],
    )
}

/// The modular group of order 16, `⟨a, b | a⁸ = b² = 1, bab = a⁵⟩`, acting on ℤ/8.
pub fn modular16() -> GeneratorSet {
    GeneratorSet::new(
        "M16",
        8,
        vec![from_map(8, |i| (i + 1) % 8), from_map(8, |i| 5 * i % 8)],
    )
}

pub fn symmetric(n: usize) -> GeneratorSet {
    GeneratorSet::new(
        format!("S{n}"),
        n,
        vec![perm(n, "(0 1)"), from_map(n, |i| (i + 1) % n)],
    )
}

pub fn alternating(n: usize) -> GeneratorSet {
    let long = if n % 2 == 1 {
        from_map(n, |i| (i + 1) % n)
    } else {
        from_map(n, |i| if i == 0 { 0 } else { i % (n - 1) + 1 })
    };
    GeneratorSet::new(format!("A{n}"), n, vec![perm(n, "(0 1 2)"), long])
}

pub fn mathieu11() -> GeneratorSet {
    GeneratorSet::new(
        "M11",
        11,
        vec![
            perm(11, "(0 1 2 3 4 5 6 7 8 9 10)"),
            perm(11, "(2 6 10 7)(3 9 4 5)"),
        ],
    )
}

pub fn mathieu12() -> GeneratorSet {
    GeneratorSet::new(
        "M12",
        12,
        vec![
            perm(12, "(0 1 2 3 4 5 6 7 8 9 10)"),
            perm(12, "(2 6 10 7)(3 9 4 5)"),
            perm(12, "(0 11)(1 10)(2 5)(3 7)(4 8)(6 9)"),
        ],
    )
}

/// Every generator fixture, small groups first. The Mathieu groups are last.
pub fn catalog() -> Vec<GeneratorSet> {
    let mut out: Vec<GeneratorSet> = (2..=12).map(cyclic).collect();
    out.push(dihedral(4));
    out.push(dihedral(8));
    out.push(quaternion8());
    out.push(extraspecial27());
    out.push(modular16());
    out.extend((3..=6).map(symmetric));
    out.extend((5..=9).map(alternating));
    out.push(mathieu11());
    out.push(mathieu12());
    out
}

/// A direct product built by Kronecker products of the factor tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRecipe {
    pub name: String,
    pub factors: Vec<String>,
}

impl ProductRecipe {
    pub fn new(factors: &[&str]) -> Self {
        ProductRecipe {
            name: factors.join("x"),
            factors: factors.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut factors = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(v) = line.strip_prefix("name:") {
                name = Some(v.trim().to_owned());
            } else if let Some(v) = line.strip_prefix("factors:") {
                factors = Some(v.split_whitespace().map(str::to_owned).collect::<Vec<_>>());
            } else {
                return Err(Error::parse(idx + 1, 1, "expected 'name:' or 'factors:'"));
            }
        }
        let factors: Vec<String> =
            factors.ok_or_else(|| Error::parse(1, 1, "missing 'factors:' line"))?;
        if factors.is_empty() {
            return Err(Error::parse(1, 1, "a product needs at least one factor"));
        }
        Ok(ProductRecipe {
            name: name.unwrap_or_else(|| factors.join("x")),
            factors,
        })
    }

    pub fn render(&self) -> String {
        format!("name: {}\nfactors: {}\n", self.name, self.factors.join(" "))
    }

    /// Kronecker product of the factor tables, looked up by name.
    pub fn build(&self, tables: &BTreeMap<String, CharacterTable>) -> Result<CharacterTable> {
        let mut iter = self.factors.iter().map(|f| {
            tables
                .get(f)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown factor '{f}'")))
        });
        let mut acc = iter.next().expect("nonempty")?.clone();
        for t in iter {
            acc = acc.direct_product(t?);
        }
        acc.name = self.name.clone();
        Ok(acc)
    }
}

/// Products across distinct primes; every factor is nilpotent, so every product is.
pub fn product_recipes() -> Vec<ProductRecipe> {
    [
        &["C2", "C2"][..],
        &["Q8", "C3"],
        &["D4", "C3"],
        &["D4", "E27"],
        &["C2", "C4", "C9"],
        &["C4", "C5"],
        &["Q8", "C5"],
        &["M16", "C3"],
        &["D8", "C9"],
        &["Q8", "E27"],
    ]
    .iter()
    .map(|f| ProductRecipe::new(f))
    .collect()
}

/// Small groups whose tables the fixture suites compute directly (everything except
/// the two Mathieu groups and A₈, A₉).
pub fn small_catalog() -> Vec<GeneratorSet> {
    catalog()
        .into_iter()
        .filter(|g| {
            !matches!(
                g.name.as_deref(),
                Some("M11") | Some("M12") | Some("A8") | Some("A9")
            )
        })
        .collect()
}

/// A computed fixture table together with whether its group is nilpotent.
#[derive(Clone, Debug)]
pub struct FixtureTable {
    pub table: CharacterTable,
    pub nilpotent: bool,
}

/// Tables for the given generator sets and recipes. Recipe factors must be among the
/// generator sets.
pub fn compute_tables(
    sets: &[GeneratorSet],
    recipes: &[ProductRecipe],
    cap: usize,
) -> Result<Vec<FixtureTable>> {
    let mut out = Vec::new();
    let mut by_name = BTreeMap::new();
    let mut nilpotent_by_name = BTreeMap::new();
    for set in sets {
        let name = set.name.clone().unwrap_or_else(|| "G".into());
        let group = set.enumerate_with_cap(cap)?;
        let table = dixon::character_table(&group, &name)?;
        let nilpotent = group.is_nilpotent();
        by_name.insert(name.clone(), table.clone());
        nilpotent_by_name.insert(name, nilpotent);
        out.push(FixtureTable { table, nilpotent });
    }
    for recipe in recipes {
        let table = recipe.build(&by_name)?;
        let nilpotent = recipe
            .factors
            .iter()
            .all(|f| nilpotent_by_name.get(f).copied().unwrap_or(false));
        out.push(FixtureTable { table, nilpotent });
    }
    Ok(out)
}

/// Generator files (`*.gens`) and product recipes (`*.prod`) in a directory, sorted by
/// file name.
pub fn load_dir(dir: &Path) -> Result<(Vec<GeneratorSet>, Vec<ProductRecipe>)> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .collect();
    paths.sort();
    let mut sets = Vec::new();
    let mut recipes = Vec::new();
    for path in paths {
        let ext = path.extension().and_then(|e| e.to_str());
        match ext {
            Some("gens") => {
                let mut set = GeneratorSet::parse(&std::fs::read_to_string(&path)?)?;
                if set.name.is_none() {
                    set.name = path.file_stem().and_then(|s| s.to_str()).map(str::to_owned);
                }
                sets.push(set);
            }
            Some("prod") => recipes.push(ProductRecipe::parse(&std::fs::read_to_string(&path)?)?),
            _ => {}
        }
    }
    Ok((sets, recipes))
}

/// File stem used for a fixture in the bundled directory.
pub fn file_stem(name: &str) -> String {
    name.to_lowercase()
}
