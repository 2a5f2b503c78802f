//! Wada's invariant of the trefoil for the trivial representations of
//! degree 1 and 2 and for a parabolic SL(2; F_7) representation.
//!
//!     cargo run --example wada_trefoil

use twisted_alexander::algebra::Field;
use twisted_alexander::corpus;
use twisted_alexander::report::{self, Format};
use twisted_alexander::representation::Representation;
use twisted_alexander::wada::{alexander_matrix, wada_invariant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = corpus::entry("trefoil").expect("bundled").diagram()?;
    let pres = d.wirtinger()?;
    print!("{pres}");

    let trivial = Representation::trivial(Field::Rational, 1, &pres);
    println!("Alexander matrix, trivial 1-dimensional:\n{}", alexander_matrix(&pres, &trivial)?.matrix);
    print!("{}", report::wada("trefoil", &wada_invariant(&pres, &trivial, None)?, Format::Text));
    println!();
    let trivial2 = Representation::trivial(Field::Rational, 2, &pres);
    print!("{}", report::wada("trefoil", &wada_invariant(&pres, &trivial2, None)?, Format::Text));
    println!();

    // x1_1 ↦ [[1,1],[0,1]], and the other arcs follow from the relators
    let f7 = Field::prime(7)?;
    let rep = Representation::parse(
        "Fp 7\ndegree 2\ngen x1_1\n1 1\n0 1\ngen x1_2\n1 0\n-1 1\ngen x1_3\n0 1\n-1 2\n",
    )?;
    assert_eq!(rep.field(), f7);
    match rep.validate(&pres) {
        Ok(()) => print!("{}", report::wada("trefoil", &wada_invariant(&pres, &rep, None)?, Format::Text)),
        Err(e) => println!("representation rejected:\n{e}"),
    }
    Ok(())
}
