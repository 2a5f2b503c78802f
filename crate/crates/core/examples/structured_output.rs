//! Machine-readable records: the Torres checks for the trivial SL(2)
//! representation on T(2,4), one JSON object per line.
//!
//!     cargo run --example structured_output

use twisted_alexander::algebra::Field;
use twisted_alexander::corpus;
use twisted_alexander::report::{self, Format};
use twisted_alexander::representation::Representation;
use twisted_alexander::torres::verify_torres;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = corpus::entry("torus_2_4").expect("bundled").diagram()?;
    let (reduced, _) = d.delete_component(1)?;
    let rep = Representation::trivial(Field::prime(5)?, 2, &reduced.wirtinger()?);
    let r = verify_torres(&d, 1, &rep, None)?;
    for line in report::torres("torus_2_4", &r, Format::JsonLines).lines() {
        let value: serde_json::Value = serde_json::from_str(line)?;
        println!("{}: {}", value["check"], value["verdict"]);
    }
    print!("{}", report::torres("torus_2_4", &r, Format::JsonLines));
    Ok(())
}
