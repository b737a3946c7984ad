//! Checks the square laws on small CIBRLs and probes which of them
//! survive without 3-potency.
//!
//! cargo run --release --example square_laws -- [max_size]

use nelson::algebra::three_potency;
use nelson::laws::{probe_without_3_potency, square_laws, SQUARE_LAWS};
use nelson::search::{residuated_up_to, Class};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let all = residuated_up_to(Class::Cibrl, max.min(6));
    for (i, law) in SQUARE_LAWS.iter().enumerate() {
        let (mut on_all, mut on_3p) = (0, 0);
        let (mut n_all, mut n_3p) = (0, 0);
        for a in &all {
            let holds = square_laws(a)[i].holds;
            n_all += 1;
            on_all += holds as usize;
            if three_potency(a).holds {
                n_3p += 1;
                on_3p += holds as usize;
            }
        }
        println!("{law:<30} all CIBRLs {on_all}/{n_all}   3-potent {on_3p}/{n_3p}");
    }
    for i in [1, 3] {
        let p = probe_without_3_potency(i, max);
        println!(
            "\nwithout 3-potency, `{}` up to size {}: {} of {} refute it",
            p.law, p.max_size, p.refuted_by, p.examined
        );
        if let Some((n, dump, w)) = p.first {
            println!("first (size {n}) at {w}:\n{dump}");
        }
    }
}
