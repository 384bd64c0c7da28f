//! Build every well-defined matrix of a ring and count the nonsingular ones.
use consta_circulant::census;
use consta_circulant::Field;

fn main() {
    for (q, m) in [(4, 2), (5, 3), (3, 4)] {
        let f = Field::with_order(q).unwrap();
        for lambda in f.nonzero_elements() {
            let e = census::enumerate_invertible_exhaustive(&f, m, lambda, 4).unwrap();
            let formula = census::invertible_count_formula(&f, m, lambda).unwrap();
            println!(
                "q={q} m={m} λ={lambda}: shifts {:?}, {} invertible, formula N·|units| = {}",
                e.shifts_scanned, e.pair_count, formula.local_ring_total
            );
        }
    }
}
