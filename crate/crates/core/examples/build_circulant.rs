//! The four kinds of matrix a spec can describe, built from the same first row.
use consta_circulant::{CirculantSpec, Elem, Field};

fn main() {
    let f = Field::prime(7).unwrap();
    let h: Vec<Elem> = (1..=5).map(|c| f.element(c).unwrap()).collect();
    let three = f.element(3).unwrap();
    let two = f.element(2).unwrap();

    let specs = [
        CirculantSpec::commutative(&f, 5, 1, Elem::ONE, h.clone()).unwrap(),
        CirculantSpec::commutative(&f, 5, 4, Elem::ONE, h.clone()).unwrap(),
        CirculantSpec::commutative(&f, 5, 3, Elem::ONE, h.clone()).unwrap(),
        // ord(2) = 3 in GF(7), so g = 4 ≡ 1 keeps the map well defined
        CirculantSpec::commutative(&f, 5, 4, two, h.clone()).unwrap(),
        CirculantSpec::commutative(&f, 5, 3, three, h).unwrap(),
    ];
    for spec in &specs {
        println!("{} ({}, well defined: {})", spec.to_text(), spec.classify(), spec.well_defined());
        println!("{}", spec.build().unwrap());
    }

    let skew: CirculantSpec = "q=F16;m=4;g=1;lambda=1;h=2,4,6,12;theta=1".parse().unwrap();
    println!("{} ({})", skew.to_text(), skew.classify());
    println!("{}", skew.build().unwrap());
}
