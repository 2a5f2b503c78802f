//! Torres condition for reducible SL(2; F_p) representations: for each
//! multi-component corpus link, delete the last component, draw random
//! upper-triangular representations of the reduced link with diagonal
//! (λ, λ^-1), and compare the extracted ε with λ^l + λ^-l.
//!
//!     cargo run --example torres_reducible [p] [samples]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::algebra::Field;
use twisted_alexander::corpus;
use twisted_alexander::representation::triangular::triangular_representation;
use twisted_alexander::torres::{predicted_epsilon_reducible, verify_torres};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let samples: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let field = Field::prime(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    for entry in corpus::entries() {
        let d = entry.diagram()?;
        if d.num_components() < 2 {
            continue;
        }
        let mu = d.num_components() - 1;
        let (reduced, _) = d.delete_component(mu)?;
        let pres = reduced.wirtinger()?;
        for s in 0..samples {
            let lambda = field.from_i64(2 + (s as i64) % (p as i64 - 2));
            let diag = [lambda.clone(), lambda.inverse()?];
            let rep = triangular_representation(&pres, field, &diag, &mut rng)?;
            let report = verify_torres(&d, mu, &rep, None)?;
            let eps = report.epsilons().map(|e| (-&e[0]).to_string()).unwrap_or_else(|| "-".into());
            println!(
                "{:<22} λ={lambda} l={:<2} divisible={} bracket={} ε={eps} predicted={} block={}",
                entry.name,
                report.total_linking,
                report.divisibility,
                report.bracket_verdict,
                predicted_epsilon_reducible(&lambda, report.total_linking)?,
                report.block_verdict,
            );
        }
    }
    Ok(())
}
