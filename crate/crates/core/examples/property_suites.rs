//! Runs the property suites (the same ones as `twalex selftest`) with a
//! chosen seed.
//!
//!     cargo run --example property_suites [seed]

use twisted_alexander::corpus;
use twisted_alexander::report::{self, Format};
use twisted_alexander::selftest::{run_all, DEFAULT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(DEFAULT_SEED);
    let results = run_all(&corpus::entries(), seed)?;
    print!("{}", report::selftest(&results, Format::Text));
    if results.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
    Ok(())
}
