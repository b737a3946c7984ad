//! Looks for S′-algebras whose lattice reduct is not distributive.
//!
//! cargo run --release --example distributivity -- [max_size]

use nelson::algebra::check_distributivity;
use nelson::search::{enumerate, Class, EnumOptions};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let opts = EnumOptions {
        ceiling: max.max(6),
        jobs: 4,
        ..Default::default()
    };
    let mut first = None;
    for n in 1..=max {
        let r = enumerate(Class::SPrime, n, &opts).expect("within ceiling");
        let bad: Vec<_> = r
            .algebras
            .iter()
            .filter_map(|a| a.residuated())
            .filter(|a| !check_distributivity(a))
            .collect();
        println!(
            "size {n}: {} s_prime algebra(s), {} non-distributive",
            r.algebras.len(),
            bad.len()
        );
        if first.is_none() {
            first = bad.first().map(|a| (*a).clone());
        }
    }
    match first {
        Some(a) => println!("\nsmallest non-distributive witness:\n{a}"),
        None => println!("\nnone up to size {max}"),
    }
}
