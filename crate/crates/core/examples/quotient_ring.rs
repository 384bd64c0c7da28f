//! F_q[x]/(x^m − λ): products, inverses, unit counts and the factorization behind them.
use consta_circulant::{Elem, Field, QuotientRing};

fn main() {
    let f = Field::prime(5).unwrap();
    let ring = QuotientRing::new(&f, 3, Elem::ONE).unwrap();
    let h = ring.from_codes(&[1, 1, 2]).unwrap();
    let inv = h.inverse().unwrap();
    println!("h = {h}");
    println!("h^-1 = {inv}");
    println!("h * h^-1 = {}", h.mul(&inv).unwrap());
    println!("h(x^2) = {}", h.substitute_power(2).value);

    for lambda in f.nonzero_elements() {
        let ring = QuotientRing::new(&f, 5, lambda).unwrap();
        let fac = ring.modulus().factor().unwrap();
        let units = ring.units_count().unwrap();
        println!(
            "x^5 - {lambda} = {}  units: {} (product of (q^d - 1)^e: {})",
            fac.render(&f),
            units.exact,
            units.factor_product
        );
    }
}
