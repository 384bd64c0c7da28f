//! MDS by minor scan and by the polynomial weight test, plus the involutory condition.
use consta_circulant::mds::{self, HypothesisMode};
use consta_circulant::CirculantSpec;

fn main() {
    for text in [
        "q=F16;m=4;g=1;lambda=1;h=2,4,6,12;theta=1",
        "q=F8;m=3;g=1;lambda=1;h=3,2,2;theta=1",
        "q=5;m=3;g=1;lambda=1;h=1,1,2;theta=0",
        "q=5;m=3;g=1;lambda=1;h=1;theta=0",
    ] {
        let spec: CirculantSpec = text.parse().unwrap();
        let a = spec.build().unwrap();
        let scan = a.is_mds().unwrap();
        let oracle = mds::weight_mds_oracle(&spec, 1).unwrap();
        println!("{text}");
        println!("{a}");
        println!("  minor scan MDS: {}  witness: {:?}", scan.is_mds, scan.witness);
        println!("  weight test MDS: {}  witness: {:?}", oracle.verdict, oracle.witness);
        println!("  involutory: {} (ring condition {})", a.is_involutory().unwrap(), mds::involutory_condition(&spec).unwrap());
        match mds::involutory_mds_check(&spec, HypothesisMode::Relaxed, 1) {
            Ok(report) => println!("  involutory MDS: {}", report.verdict),
            Err(e) => println!("  involutory MDS: {e}"),
        }
    }
}
