//! Runs every structural check on the C̃₃ interval and prints the reports.

use cambrian::fixtures;
use cambrian::verify::{
    verify_covering_join, verify_left_modular_chain, verify_meet_irreducible_count, verify_meet_irreducibles,
    verify_sortable_closure, verify_theorem_trim, CLOSURE_SEED,
};

fn main() -> Result<(), cambrian::Error> {
    let interval = fixtures::affine_c3_interval().compute()?;
    let (u, w, gamma) = (interval.bottom(), interval.top(), interval.gamma());
    let reports = [
        verify_theorem_trim(u, w, gamma)?,
        verify_left_modular_chain(w, gamma)?,
        verify_meet_irreducible_count(w, gamma)?,
        verify_covering_join(&interval)?,
        verify_meet_irreducibles(w, gamma)?,
        verify_sortable_closure(&interval, CLOSURE_SEED)?,
    ];
    for r in &reports {
        println!("{}", r.to_json());
    }
    let failed: usize = reports.iter().map(|r| r.failures().len()).sum();
    println!("{failed} failed verdicts");
    Ok(())
}
