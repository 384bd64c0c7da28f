//! Squaring every coefficient of h keeps a skew involutory MDS matrix involutory MDS.
use consta_circulant::circulant::hadamard_power;
use consta_circulant::CirculantSpec;

fn main() {
    let spec: CirculantSpec = "q=F16;m=4;g=1;lambda=1;h=2,4,6,12;theta=1".parse().unwrap();
    let f = spec.field().clone();
    for s in 0..=4 {
        let p = if s == 0 { spec.clone() } else { hadamard_power(&spec, s).unwrap() };
        let a = p.build().unwrap();
        let h: Vec<String> = p.h().iter().map(|&c| f.render(c)).collect();
        println!(
            "s={s} h=[{}] involutory={} mds={}",
            h.join(", "),
            a.is_involutory().unwrap(),
            a.is_mds().unwrap().is_mds
        );
    }
}
