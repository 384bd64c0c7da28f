//! Arithmetic in GF(16) and GF(9), elements shown as polynomials in the generator.
use consta_circulant::Field;

fn main() {
    let f16: Field = "F16".parse().unwrap();
    let b = f16.primitive_element();
    let x = f16.parse_element("b^3+b").unwrap();
    let y = f16.parse_element("b^2+1").unwrap();
    println!("{f16}");
    println!("x = {}, y = {}", f16.render(x), f16.render(y));
    println!("x + y = {}", f16.render(f16.add(x, y)));
    println!("x * y = {}", f16.render(f16.mul(x, y)));
    println!("x / y = {}", f16.render(f16.div(x, y).unwrap()));
    println!("x^2 = {} (Frobenius)", f16.render(f16.frobenius(x, 1)));
    println!("ord(b) = {}", f16.mult_order(b).unwrap());

    // explicit modulus, coefficients low to high: x^2 + 2x + 2 over GF(3)
    let f9: Field = "3^2:2,2,1".parse().unwrap();
    for a in f9.nonzero_elements().take(4) {
        println!("GF(9): {} has order {}", f9.render(a), f9.mult_order(a).unwrap());
    }
}
