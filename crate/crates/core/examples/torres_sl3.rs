//! Torres condition at degree 3: random upper-triangular SL(3; F_p)
//! representations of the reduced link, pulled back and compared with the
//! predicted (ε_1, ε_2).
//!
//!     cargo run --example torres_sl3

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::algebra::Field;
use twisted_alexander::corpus;
use twisted_alexander::representation::triangular::triangular_representation;
use twisted_alexander::torres::verify_torres;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cases: &[(u64, [i64; 3])] = &[(7, [2, 2, 2]), (7, [1, 2, 4]), (7, [3, 5, 1]), (13, [3, 9, 1]), (13, [2, 7, 1])];
    for name in ["hopf", "torus_2_4", "trefoil_meridian", "trefoil_lk2", "torus_3_3"] {
        let d = corpus::entry(name).expect("bundled").diagram()?;
        let mu = d.num_components() - 1;
        let pres = d.delete_component(mu)?.0.wirtinger()?;
        for &(p, diag) in cases {
            let field = Field::prime(p)?;
            let diag: Vec<_> = diag.iter().map(|&x| field.from_i64(x)).collect();
            let rep = triangular_representation(&pres, field, &diag, &mut rng)?;
            let r = verify_torres(&d, mu, &rep, None)?;
            let show = |v: Option<&[twisted_alexander::algebra::Scalar]>| {
                v.map(|e| e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
                    .unwrap_or_else(|| "-".into())
            };
            println!(
                "{name:<17} F_{p:<2} diag ({}) l={}  divisible={} bracket={} ε=({}) predicted=({}) {}",
                show(Some(&diag)),
                r.total_linking,
                r.divisibility,
                r.bracket_verdict,
                show(r.epsilons()),
                show(r.predicted.as_deref()),
                r.prediction_verdict,
            );
        }
    }
    Ok(())
}
