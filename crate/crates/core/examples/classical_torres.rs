//! The classical Torres formula on every multi-component corpus link,
//! deleting each component in turn.
//!
//!     cargo run --example classical_torres

use twisted_alexander::corpus;
use twisted_alexander::report::{self, Format};
use twisted_alexander::torres::verify_classical_torres;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in corpus::entries() {
        let d = entry.diagram()?;
        for mu in 0..d.num_components() {
            if d.num_components() < 2 {
                break;
            }
            let r = verify_classical_torres(&d, mu)?;
            print!("{}", report::classical_torres(&entry.name, &r, Format::Text));
        }
    }
    Ok(())
}
