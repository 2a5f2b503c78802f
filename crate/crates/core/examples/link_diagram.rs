//! Parsing a PD diagram, its Wirtinger presentation, linking numbers, and
//! deleting a component with the induced map on generators.
//!
//!     cargo run --example link_diagram [file.pd] [component]

use twisted_alexander::corpus;
use twisted_alexander::diagram::LinkDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => corpus::entry("whitehead").expect("bundled").pd,
    };
    let d = LinkDiagram::parse_pd(&text)?;
    println!("{} components, crossing signs {:?}", d.num_components(), d.signs());
    let pres = d.wirtinger()?;
    print!("{pres}");

    let mu = match args.next() {
        Some(c) => c.parse::<usize>()? - 1,
        None => d.num_components() - 1,
    };
    if d.num_components() > 1 {
        println!("linking numbers with component {}: {:?}", mu + 1, d.linking_numbers(mu)?);
        let (reduced, merge) = d.delete_component(mu)?;
        let reduced_pres = reduced.wirtinger()?;
        println!("after deleting component {}:", mu + 1);
        print!("{reduced}");
        for (j, image) in merge.images.iter().enumerate() {
            let target = image.map(|k| reduced_pres.generators()[k].label.clone()).unwrap_or("1".into());
            println!("  {} ↦ {target}", pres.generators()[j].label);
        }
    }
    Ok(())
}
