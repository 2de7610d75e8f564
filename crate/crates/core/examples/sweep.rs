//! Checks every Cambrian interval up to a length bound across a family of systems.
//!
//! ```text
//! cargo run --release --example sweep -- crates/core/configs/rank3.sweep.json
//! ```

use cambrian::sweep::{sweep, Family, SweepConfig, SweepSystem, SystemSource};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = match std::env::args().nth(1) {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        None => SweepConfig {
            systems: vec![
                SweepSystem { source: SystemSource::Family { family: Family::Dihedral, labels: vec![3, 4, 5, 0] }, max_len: None },
                SweepSystem { source: SystemSource::Family { family: Family::Rank3, labels: vec![2, 3, 0] }, max_len: None },
            ],
            gammas: None,
            max_len: 6,
            max_elems: 5000,
            sub_intervals: true,
        },
    };
    let report = sweep(&config)?;
    for r in &report.reports {
        println!(
            "{:18} gamma {:12} sortables {:>5}  intervals {:>6}  holds {}",
            r.instance["system"].as_str().unwrap_or(""),
            r.instance["gamma"].as_str().unwrap_or(""),
            r.instance["sortables"].as_u64().unwrap_or(0),
            r.instance["intervals"].as_u64().unwrap_or(0),
            r.holds("theorem_holds").unwrap_or(false)
        );
    }
    println!("{} intervals checked, {} skipped, {} contradictions", report.intervals_checked(), report.skipped.len(), report.contradictions().len());
    Ok(())
}
