//! Property analysis of small hand-drawn lattices, or of a lattice file.
//!
//! ```text
//! cargo run --example analyze_lattices
//! cargo run --example analyze_lattices -- crates/core/fixtures/semidistributive_not_trim.json
//! ```

use cambrian::fixtures;
use cambrian::formats::LatticeFile;
use cambrian::FiniteLattice;

fn show(name: &str, lattice: &FiniteLattice) {
    println!("{name}: {} elements, length {}", lattice.size(), lattice.length());
    for (key, verdict) in &lattice.analyze().verdicts {
        match &verdict.witness {
            Some(w) if !verdict.holds => println!("  {key:24} false  {w}"),
            _ => println!("  {key:24} {}", verdict.holds),
        }
    }
    match lattice.find_left_modular_chain() {
        Some(chain) => {
            let labels: Vec<&str> = chain.iter().map(|&i| lattice.label(i)).collect();
            println!("  left-modular chain: {}", labels.join(" < "));
        }
        None => println!("  no maximal left-modular chain"),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let file: LatticeFile = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        show(&path, &file.build()?);
        return Ok(());
    }
    show("trim, not semidistributive", &fixtures::trim_not_semidistributive().lattice());
    show("semidistributive, not trim", &fixtures::semidistributive_not_trim().lattice());
    Ok(())
}
