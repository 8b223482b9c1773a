//! The shipped fixture directory mirrors the built-in catalog. Set `CTK_BLESS=1` to
//! rewrite it.

use std::path::PathBuf;

use ctk::fixtures::{self, ProductRecipe};
use ctk::GeneratorSet;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn fixture_directory_matches_catalog() {
    let bless = std::env::var_os("CTK_BLESS").is_some();
    for set in fixtures::catalog() {
        let name = set.name.clone().unwrap();
        let path = dir().join(format!("{}.gens", fixtures::file_stem(&name)));
        if bless {
            std::fs::write(&path, set.render()).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(GeneratorSet::parse(&text).unwrap(), set, "{name}");
    }
    for recipe in fixtures::product_recipes() {
        let path = dir().join(format!("{}.prod", fixtures::file_stem(&recipe.name)));
        if bless {
            std::fs::write(&path, recipe.render()).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(ProductRecipe::parse(&text).unwrap(), recipe);
    }
    let (sets, recipes) = fixtures::load_dir(&dir()).unwrap();
    assert_eq!(sets.len(), fixtures::catalog().len());
    assert_eq!(recipes.len(), fixtures::product_recipes().len());
}
