//! Checks the bundled S derivations, then replays the historical
//! conjunction rule that makes the original calculus inconsistent.
//!
//! cargo run --example check_proof

use nelson::calculus_s::{check_proof, fixtures, inconsistency_fixture, Mode};
use nelson::formula::Formula;

fn main() {
    for n in fixtures() {
        let r = check_proof(&n.proof, Mode::Standard);
        println!(
            "{:<12} {:<40} {}",
            n.name,
            n.proof.goal.to_string(),
            if r.accepted() { "accepted" } else { "REJECTED" }
        );
    }

    let p = inconsistency_fixture(&Formula::var("q"));
    println!("\n{}", p.to_file_string());
    println!("historical:\n{}\n", check_proof(&p, Mode::Historical));
    println!("standard:\n{}", check_proof(&p, Mode::Standard));
}
