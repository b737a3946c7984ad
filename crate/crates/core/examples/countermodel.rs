//! Searches for countermodels: `x ⇒ x = y ⇒ y` separates N4 from S.
//!
//! cargo run --example countermodel -- ["statement"] [class] [max_size]

use nelson::search::{find_countermodel, Class, EnumOptions};
use nelson::term::parse_statement;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "x => x = y => y".into());
    let classes: Vec<Class> = match args.next() {
        Some(c) => vec![c.parse().expect("class name")],
        None => vec![Class::SPrime, Class::N4Lattice],
    };
    let max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let q = parse_statement(&text).expect("statement");
    for class in classes {
        match find_countermodel(&q, class, max, &EnumOptions::default()).expect("within ceiling") {
            Some(c) => println!(
                "{class}: refuted at {} ({} vs {}) in\n{}",
                c.valuation,
                c.sides.0,
                c.sides.1,
                c.algebra.to_file_string()
            ),
            None => println!("{class}: none up to size {max}\n"),
        }
    }
}
