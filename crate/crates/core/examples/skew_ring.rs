//! F_q[X;θ] with θ the Frobenius of GF(16): non-commuting products and the quotient by X^4 − 1.
use consta_circulant::{Elem, Field, SkewPoly, SkewQuotientRing};

fn main() {
    let f: Field = "F16".parse().unwrap();
    let b = f.primitive_element();
    let x = SkewPoly::monomial(&f, 1, Elem::ONE, 1).unwrap();
    let c = SkewPoly::new(&f, 1, vec![b]).unwrap();
    println!("X * b = {}", x.mul(&c).unwrap().render());
    println!("b * X = {}", c.mul(&x).unwrap().render());

    let x4 = SkewPoly::monomial(&f, 1, Elem::ONE, 4).unwrap();
    println!("X^4 central: {}", x4.is_central());

    let ring = SkewQuotientRing::new(&f, 1, 4, Elem::ONE).unwrap();
    let h = ring.from_codes(&[2, 4, 6, 12]).unwrap();
    let inv = h.inverse().unwrap();
    println!("h = {h}\nh^-1 = {inv}");
    println!("h * h^-1 = {}", h.mul(&inv).unwrap());

    // θ of order 4 cannot twist X^3 − 1
    println!("m = 3 valid: {}", SkewQuotientRing::new(&f, 1, 3, Elem::ONE).is_ok());
}
