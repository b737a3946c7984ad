//! Class reports for the three-element chains, in both signatures.
//!
//! cargo run --example algebra_check -- [algebra-file]

use nelson::algebra::{check_s_prime, godel3, lukasiewicz3, to_s_algebra, to_s_prime, FiniteAlgebra};
use nelson::algebraizer::check_s_def34;

fn report(name: &str, a: &FiniteAlgebra) {
    println!("== {name}\n{a}");
    println!("{}\n", check_s_prime(a));
    let s = to_s_algebra(a);
    let r = check_s_def34(&s, 2);
    let failed: Vec<&str> = r.failures().map(|l| l.law.as_str()).collect();
    println!(
        "{}: {} ({} conditions)",
        r.class,
        if r.passed() { "PASS" } else { "FAIL" },
        r.laws.len()
    );
    if !failed.is_empty() {
        println!("  failing: {}", failed.join(", "));
    }
    println!(
        "round trip restores the tables: {}\n",
        to_s_prime(&s).same_s_prime_tables(a)
    );
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        report(&path, &FiniteAlgebra::parse(&text).expect("algebra file"));
        return;
    }
    report("three-element MV-chain", &lukasiewicz3());
    report("three-element Goedel chain", &godel3());
}
