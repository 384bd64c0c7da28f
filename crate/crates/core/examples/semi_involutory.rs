//! Diagonal pairs with A^-1 = D1·A·D2, and the scalar case A^2 = dI.
use consta_circulant::matrix::SemiInvolutory;
use consta_circulant::mds;
use consta_circulant::{CirculantSpec, Elem, Field, Matrix};

fn main() {
    let f = Field::prime(7).unwrap();
    let a = Matrix::from_codes(&f, &[vec![1, 2], vec![3, 1]]).unwrap();
    println!("{a}");
    match a.semi_involutory().unwrap() {
        SemiInvolutory::Found { d1, d2 } => {
            let codes = |d: &[Elem]| d.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            println!("D1 = diag({})\nD2 = diag({})", codes(&d1), codes(&d2));
        }
        SemiInvolutory::NotFound { reason } => println!("not semi-involutory: {reason}"),
    }

    // 3·h for an involutory h: A^2 = 9·I, so c1·c2 = 9^-1 works
    let spec = CirculantSpec::commutative(&f, 2, 1, Elem::ONE, vec![Elem::ZERO, f.element(3).unwrap()]).unwrap();
    let b = spec.build().unwrap();
    println!("{b}");
    println!("A^2 = d·I, d^-1 = {}", b.scalar_semi_involutory().unwrap().unwrap());
    println!("from h * h(x^g): c1·c2 = {}", mds::scalar_semi_involutory_product(&spec).unwrap().unwrap());
    let c = f.inv(f.element(9 % 7).unwrap()).unwrap();
    println!("condition with c1 = {c}, c2 = 1: {}", mds::scalar_semi_involutory_condition(&spec, c, Elem::ONE).unwrap());
}
