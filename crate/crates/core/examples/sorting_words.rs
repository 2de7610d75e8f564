//! Sorting words and sortability in the affine group C̃₃.
//!
//! ```text
//! cargo run --example sorting_words -- s2 s3 s2 s0
//! ```

use cambrian::sortable::{all_reduced_words, sorting_word, CoxeterElement};
use cambrian::systems;

fn main() -> Result<(), cambrian::Error> {
    let sys = systems::affine_c3();
    let gamma = CoxeterElement::standard(sys.rank());
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec!["s2 s3 s2 s0".to_string(), "s0 s2 s3 s1".to_string(), "s0 s1 s2 s3 s1 s2 s3 s1 s2 s3".to_string()]
    } else {
        vec![args.join(" ")]
    };

    println!("gamma = {}", gamma.label(&sys));
    for text in inputs {
        let w = sys.parse_element(&text)?;
        let sw = sorting_word(&w, &gamma)?;
        println!();
        println!("{text}");
        println!("  canonical     {}", w.label());
        println!("  sorting word  {}", sw.render());
        println!("  sortable      {}", sw.is_sortable());
        let words = all_reduced_words(&w)?;
        println!("  reduced words {}", words.len());
        for r in words.iter().take(6) {
            println!("    {}", sys.format_word(r));
        }
        if words.len() > 6 {
            println!("    ...");
        }
    }
    Ok(())
}
