//! Counts algebras of each class up to isomorphism, size by size.
//!
//! cargo run --release --example enumerate -- [max_size] [jobs]

use std::time::Instant;

use nelson::search::{enumerate, Class, EnumOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let jobs: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let opts = EnumOptions {
        jobs,
        ..Default::default()
    };
    for class in Class::ALL {
        let t = Instant::now();
        let counts: Vec<String> = (1..=max)
            .map(|n| {
                enumerate(class, n, &opts)
                    .expect("within ceiling")
                    .algebras
                    .len()
                    .to_string()
            })
            .collect();
        println!("{:<14} {}   ({:.2?})", class.name(), counts.join(" "), t.elapsed());
    }
}
