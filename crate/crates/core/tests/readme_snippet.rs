use necklaces::oracle::Oracle;
use necklaces::{counting, ResidueSubset};

#[test]
fn readme_snippet_holds() {
    let set = ResidueSubset::new(12, [0, 1, 4, 5, 8, 9]);
    assert_eq!(set.exact_period().unwrap(), 4);

    let formula = counting::fixed_density_necklace_count(3, 6).unwrap();
    let census = Oracle::new().census(6, 3).unwrap();
    assert_eq!(formula, census.total_classes().into());
}
