//! Discharges an assumption from S′ derivations: from a proof of ψ using
//! φ, builds a proof of φ * φ ⇒ ψ without it.
//!
//! cargo run --example deduction -- [seed]

use nelson::calculus_s_prime::{check_proof_sp, deduction_transform, random_suite};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let suite = random_suite(seed, 5, 12);
    for (i, (p, phi)) in suite.iter().enumerate() {
        let q = deduction_transform(p, phi).expect("phi is an assumption");
        println!(
            "#{i}: {} steps -> {} steps, discharging `{phi}`: {}",
            p.steps.len(),
            q.steps.len(),
            if check_proof_sp(&q).accepted() {
                "accepted"
            } else {
                "REJECTED"
            }
        );
    }
    let (p, phi) = &suite[0];
    println!("\ninput:\n{}", p.to_file_string());
    println!("output:\n{}", deduction_transform(p, phi).unwrap().to_file_string());
}
