//! The Cambrian interval below `s0 s1 s2 s3 s1 s2 s3 s1 s2 s3` in C̃₃.
//!
//! Prints the lattice analysis and writes Graphviz output when given a path:
//!
//! ```text
//! cargo run --example affine_interval -- interval.dot
//! dot -Tsvg interval.dot > interval.svg
//! ```

use cambrian::dot::interval_dot;
use cambrian::sortable::{cambrian_interval, CoxeterElement};
use cambrian::systems;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = systems::affine_c3();
    let gamma = CoxeterElement::standard(sys.rank());
    let top = sys.parse_element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3")?;
    let interval = cambrian_interval(&sys.identity(), &top, &gamma)?;
    let lattice = interval.lattice();

    println!("{} elements, {} covers", interval.len(), lattice.covers().len());
    println!("sorting chain:");
    for k in interval.sorting_chain_indices()? {
        println!("  {}", lattice.label(k));
    }
    let report = lattice.analyze();
    for (name, verdict) in &report.verdicts {
        println!("{name:24} {}", verdict.holds);
    }
    let names = |ix: Vec<usize>| ix.into_iter().map(|i| lattice.label(i).to_string()).collect::<Vec<_>>();
    println!("join-irreducibles: {:?}", names(lattice.join_irreducibles()));
    println!("meet-irreducibles: {:?}", names(lattice.meet_irreducibles()));

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, interval_dot(&interval))?;
        println!("wrote {path}");
    }
    Ok(())
}
