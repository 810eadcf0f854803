//! Partial-transpose entanglement test: the Bell state, product states, and
//! the separability threshold of the two-qubit Werner family.
//!
//!     cargo run --example ppt_werner

use qudit_bloch::membership::{spectrum, DEFAULT_TOL};
use qudit_bloch::sampling::{random_mixed_state, rng_from_seed};
use qudit_bloch::separability::{
    bell_phi_plus, partial_transpose, ppt_verdict, product_state, werner, CompositeDims, SeparabilityDecision,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d22 = CompositeDims::new(2, 2)?;
    let bell = bell_phi_plus();
    let v = ppt_verdict(&bell, d22, DEFAULT_TOL)?;
    println!("Bell state: {} (min coefficient {:+.4})", v.decision, v.min_margin);
    println!("  partial-transpose spectrum: {:?}", spectrum(&partial_transpose(&bell, d22)?)?);

    let mut rng = rng_from_seed(9);
    for (na, nb) in [(2, 2), (2, 3), (3, 3)] {
        let dims = CompositeDims::new(na, nb)?;
        let prod = product_state(&random_mixed_state(na, &mut rng), &random_mixed_state(nb, &mut rng));
        println!("random product state on {na}x{nb}: {}", ppt_verdict(&prod, dims, DEFAULT_TOL)?.decision);
    }

    println!("\nWerner states p|Phi+><Phi+| + (1-p) I/4:");
    for p in [0.0, 0.2, 0.3, 0.34, 0.5, 1.0] {
        println!("  p = {p:.2}: {}", ppt_verdict(&werner(p), d22, DEFAULT_TOL)?.decision);
    }
    let entangled = |p: f64| -> Result<bool, qudit_bloch::Error> {
        Ok(ppt_verdict(&werner(p), d22, DEFAULT_TOL)?.decision == SeparabilityDecision::Entangled)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if entangled(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    println!("bisected threshold: p = {:.9} (1/3 = {:.9})", 0.5 * (lo + hi), 1.0 / 3.0);
    Ok(())
}
