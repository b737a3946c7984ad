//! Translates a calculus into the equations and quasiequations its
//! algebras must satisfy, and checks a few algebras against them.
//!
//! cargo run --example compile_calculus -- [gamma_bound]

use nelson::algebra::{boolean2, godel3, lukasiewicz3, to_s_algebra};
use nelson::algebraizer::{compile_calculus, describe, satisfies_all, Form};

fn main() {
    let bound: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let conds = compile_calculus(nelson::calculus_s::presentation(), bound, Form::Normalized);
    for c in describe(&conds) {
        println!("{:<22} {}", c.name, c.condition);
    }
    println!("\n{} conditions at |G| <= {bound}\n", conds.len());
    for (name, a) in [("boolean", boolean2()), ("mv3", lukasiewicz3()), ("goedel3", godel3())] {
        println!("{name:<8} satisfies all: {}", satisfies_all(&to_s_algebra(&a), &conds));
    }

    let n4 = compile_calculus(&nelson::n4::calculus().presentation, 0, Form::Defining);
    println!("\nN4 in the defining form:");
    for c in describe(&n4).iter().take(4) {
        println!("{:<22} {}", c.name, c.condition);
    }
}
