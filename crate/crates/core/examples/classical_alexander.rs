//! Multivariable Alexander polynomials of every PD file in a directory
//! (default: the bundled corpus).
//!
//!     cargo run --example classical_alexander [dir]

use std::path::PathBuf;

use twisted_alexander::diagram::LinkDiagram;
use twisted_alexander::wada::classical_alexander;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    let mut files: Vec<_> = std::fs::read_dir(&dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pd"))
        .collect();
    files.sort();
    for path in files {
        let d = LinkDiagram::parse_pd(&std::fs::read_to_string(&path)?)?;
        let name = path.file_stem().unwrap().to_string_lossy();
        let delta = classical_alexander(&d.wirtinger()?)?;
        println!("{name:<22} μ={}  Δ = {delta}", d.num_components());
    }
    Ok(())
}
