//! Right weak order: covers, meets and joins.

use cambrian::systems;
use cambrian::weak::{join_all, lower_covers, upper_covers, weak_join, weak_le, weak_meet, OrderIdeal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = systems::affine_c3();
    let u = sys.parse_element("s0 s1")?;
    let v = sys.parse_element("s2 s3")?;

    println!("u = {}, v = {}", u.label(), v.label());
    println!("u <= v: {}", weak_le(&u, &v)?);
    println!("u ∧ v = {}", weak_meet(&u, &v)?.label());
    // Joins need not exist in an infinite group, so the search is capped by length.
    match weak_join(&u, &v, 12)? {
        Some(j) => println!("u ∨ v = {}", j.label()),
        None => println!("u ∨ v: no upper bound of length <= 12"),
    }

    let atoms: Vec<_> = (0..sys.rank()).filter(|&s| s != 1).map(|s| sys.generator(s)).collect::<Result<_, _>>()?;
    let labels: Vec<String> = atoms.iter().map(|a| a.label()).collect();
    if let Some(j) = join_all(&atoms, 12)? {
        println!("join of {labels:?} = {}", j.label());
    }

    let w = sys.parse_element("s0 s1 s2 s3")?;
    let up: Vec<String> = upper_covers(&w)?.iter().map(|e| e.label()).collect();
    let down: Vec<String> = lower_covers(&w)?.iter().map(|e| e.label()).collect();
    println!("covers of {}: up {up:?}, down {down:?}", w.label());

    let ideal = OrderIdeal::new(&w, None)?;
    println!("[ε, {}] has {} elements", w.label(), ideal.len());
    Ok(())
}
