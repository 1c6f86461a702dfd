//! Shared fixtures for the criterion benches.

use braidorb::charvar::{AffineRep, LinearPart};
use braidorb::classify::table_rows;
use braidorb::tables;
use braidorb::Cyclotomic;

/// Generic row of the first icosahedral case.
pub fn icosahedral_generic() -> AffineRep {
    let case = tables::icosahedral_cases().remove(0);
    let lin = LinearPart::new(case.lambda).unwrap();
    let row = table_rows(&lin).unwrap().into_iter().find(|r| r.generic).unwrap();
    AffineRep::from_full(lin, row.tau).unwrap()
}

/// Seven nontrivial punctures, all of order 6.
pub fn seven_punctures() -> AffineRep {
    let z = |k| Cyclotomic::zeta(6, k);
    let lin = LinearPart::new(vec![z(1), z(1), z(1), z(1), z(1), z(2), z(5)]).unwrap();
    AffineRep::new(lin, (1..=6).map(Cyclotomic::from_int).collect()).unwrap()
}
