//! Invertible consta-g-circulant counts: printed values, formula, local ring count and enumeration.
use consta_circulant::census;

fn main() {
    let rows = census::table1(&[], false, 1).unwrap();
    println!("{:>3} {:>2} {:>4} {:>3} {:>12} {:>12} {:>12}  factorization", "row", "m", "F", "λ", "printed", "formula", "local ring");
    for r in &rows {
        println!(
            "{:>3} {:>2} {:>4} {:>3} {:>12} {:>12} {:>12}  {}",
            r.row, r.m, r.field, r.lambda, r.printed_total, r.factor_product_count, r.local_ring_count, r.factorization
        );
    }

    // small rows can be checked by building every matrix
    for r in census::table1(&[1, 2], true, 4).unwrap() {
        println!("row {}: {} invertible (g, h) pairs, {} distinct matrices", r.row, r.exhaustive_pair_count.unwrap(), r.distinct_matrix_count.unwrap());
    }
}
