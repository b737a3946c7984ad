//! The four-element N4-lattice A4: its checks, quotient and strong
//! implication, and the small N3-lattices read as S-algebras.
//!
//! cargo run --example n4_lattices

use nelson::algebra::write_table_string;
use nelson::algebraizer::is_s_algebra;
use nelson::n4::{a4, check_n3, check_n4_lattice, quotient, strong_implication_table};
use nelson::search::{enumerate, Class, EnumOptions};

fn main() {
    let a = a4();
    println!("{a}");
    println!("{}\n", check_n4_lattice(&a));
    let q = quotient(&a).expect("congruence");
    println!("quotient:\n{}", q.to_algebra(&a));
    println!(
        "strong implication:\n{}",
        write_table_string(&strong_implication_table(&a), &a.names)
    );
    let n13 = check_n3(&a);
    println!(
        "N13: {:?}\n",
        n13.law("N13").and_then(|l| l.witness.as_ref()).map(|w| w.to_string())
    );

    for n in 1..=4 {
        let r = enumerate(Class::N3Lattice, n, &EnumOptions::default()).expect("within ceiling");
        let inside = r
            .algebras
            .iter()
            .filter_map(|x| x.n4())
            .filter(|x| is_s_algebra(&x.to_s_signature(), 2))
            .count();
        println!(
            "size {n}: {} N3-lattice(s), {inside} of them S-algebras",
            r.algebras.len()
        );
    }
}
