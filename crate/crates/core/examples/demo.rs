//! Runs every scripted demo and prints its transcript.
//!
//! cargo run --release --example demo -- [item]

use nelson::demo::{run, DEFAULT_SEED, ITEMS};

fn main() {
    let only = std::env::args().nth(1);
    let mut failed = 0i32;
    for item in ITEMS.iter().filter(|i| only.as_deref().is_none_or(|o| o == **i)) {
        let t = run(item, DEFAULT_SEED).expect("known item");
        println!("{t}\n");
        failed += !t.passed as i32;
    }
    std::process::exit(failed.min(1));
}
