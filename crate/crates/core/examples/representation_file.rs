//! Builds an upper-triangular SL(2; F_p) representation of a link group,
//! writes it in the representation file format, reads it back, validates
//! it, and pulls a representation of a reduced link back along component
//! deletion.
//!
//!     cargo run --example representation_file [link] [p] [λ]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::algebra::Field;
use twisted_alexander::corpus;
use twisted_alexander::representation::triangular::triangular_representation;
use twisted_alexander::representation::Representation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "trefoil".into());
    let p: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(13);
    let lambda: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let field = Field::prime(p)?;

    let d = corpus::entry(&name).ok_or("unknown corpus entry")?.diagram()?;
    let pres = d.wirtinger()?;
    let l = field.from_i64(lambda);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let rep = triangular_representation(&pres, field, &[l.clone(), l.inverse()?], &mut rng)?;
    let text = rep.to_string();
    print!("# {name}, diagonal ({l}, {})\n{text}", l.inverse()?);

    let back = Representation::parse(&text)?;
    back.validate(&pres)?;
    assert_eq!(back, rep);

    // the same matrices on a link containing this one as a sublink
    if let Some(bigger) = corpus::entries()
        .into_iter()
        .filter_map(|e| e.diagram().ok().map(|d| (e.name, d)))
        .find(|(_, big)| big.num_components() == d.num_components() + 1
            && big.delete_component(big.num_components() - 1).is_ok_and(|(r, _)| r.wirtinger().is_ok_and(|w| rep.validate(&w).is_ok())))
    {
        let (big_name, big) = bigger;
        let (reduced, merge) = big.delete_component(big.num_components() - 1)?;
        let pulled = rep.pullback(&reduced.wirtinger()?, &merge, &big.wirtinger()?)?;
        pulled.validate(&big.wirtinger()?)?;
        eprintln!("pulled back to {big_name}: {} generators, validated", pulled.labels().len());
    }
    Ok(())
}
