//! Full-weight units of F_q[x]/(x^m − 1) whose inverses are full weight too.
use consta_circulant::census::{self, SearchMode};
use consta_circulant::Field;

fn main() {
    let f5 = Field::prime(5).unwrap();
    let hits = census::algorithm1_weight3(&f5, SearchMode::Exhaustive).unwrap();
    println!("{} weight-3 hits over GF(5):", hits.len());
    for hit in &hits {
        println!("  {}  ->  {}", hit.h, hit.h_inv);
    }

    let mode = SearchMode::Random { seed: 42, trials: 1000 };
    match census::algorithm2_weight4(&f5, mode).unwrap().first() {
        Some(hit) => println!("seed 42, weight 4: {} -> {}", hit.h, hit.h_inv),
        None => println!("seed 42, weight 4: no hit"),
    }
    let f3 = Field::prime(3).unwrap();
    println!("weight-4 hits over GF(3): {}", census::algorithm2_weight4(&f3, SearchMode::Exhaustive).unwrap().len());
}
