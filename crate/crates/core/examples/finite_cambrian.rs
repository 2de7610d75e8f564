//! Full Cambrian lattices of the finite rank-3 groups, one per Coxeter element.

use cambrian::sortable::{cambrian_interval, CoxeterElement};
use cambrian::weak::upper_covers;
use cambrian::{systems, CoxeterSystem, Element};

fn longest(sys: &CoxeterSystem) -> Element {
    let mut w = sys.identity();
    while let Some(up) = upper_covers(&w).unwrap().into_iter().next() {
        w = up;
    }
    w
}

fn main() -> Result<(), cambrian::Error> {
    for (name, sys) in [("A3", systems::a3()), ("B3", systems::b3()), ("H3", systems::h3())] {
        let w0 = longest(&sys);
        println!("{name}: longest element has length {}", w0.len());
        for gamma in CoxeterElement::all(sys.rank()) {
            let interval = cambrian_interval(&sys.identity(), &w0, &gamma)?;
            let l = interval.lattice();
            println!(
                "  gamma = {:12} size {:3}  length {:2}  trim {}  semidistributive {}",
                gamma.label(&sys),
                l.size(),
                l.length(),
                l.is_trim(),
                l.is_semidistributive()
            );
        }
    }
    Ok(())
}
