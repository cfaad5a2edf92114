use std::path::Path;

use symident::polyid::{standard_polynomial, MultilinearPoly, NamedIdentity};
use symident::Rational;

fn read(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn named_fixtures_are_current() {
    for id in NamedIdentity::ALL {
        let text = read(id.name());
        let f = id.poly::<Rational>();
        assert_eq!(text, f.to_fixture(), "{id}");
        assert_eq!(MultilinearPoly::<Rational>::from_fixture(&text).unwrap(), f, "{id}");
    }
}

#[test]
fn standard_polynomial_fixture() {
    let s4 = standard_polynomial::<Rational>(4).unwrap();
    assert_eq!(read("s4"), s4.to_fixture());
    assert_eq!(s4.len(), 24);
}
