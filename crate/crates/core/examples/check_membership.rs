//! Decides whether Bloch vectors describe physical states, using the
//! characteristic-coefficient test and the eigenvalue oracle side by side.
//!
//!     cargo run --example check_membership

use qudit_bloch::generators::build_generator_basis;
use qudit_bloch::membership::{eigenvalue_oracle, is_bloch_vector, DEFAULT_TOL};
use qudit_bloch::statemap::{bloch_to_matrix, BlochVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rt3 = 3f64.sqrt();
    let cases = [
        ("qubit, |v| = 0.5", BlochVector::new(2, vec![0.0, 0.0, 0.5])?),
        ("qubit, |v| = 1 (pure)", BlochVector::new(2, vec![0.6, 0.0, 0.8])?),
        ("qubit, |v| = 1.2", BlochVector::new(2, vec![1.2, 0.0, 0.0])?),
        ("qutrit, lambda8 = -2/sqrt3 (pure |3>)", BlochVector::along(3, 7, -2.0 / rt3)?),
        ("qutrit, lambda8 = +2/sqrt3 (on the ball, not a state)", BlochVector::along(3, 7, 2.0 / rt3)?),
        ("qutrit, lambda1 = 0.7", BlochVector::along(3, 0, 0.7)?),
        ("ququart, lambda15 = 0.4", BlochVector::along(4, 14, 0.4)?),
    ];
    for (label, v) in cases {
        let basis = build_generator_basis(v.n())?;
        let coeff = is_bloch_vector(&v, &basis, DEFAULT_TOL)?;
        let eig = eigenvalue_oracle(&bloch_to_matrix(&v, &basis)?, DEFAULT_TOL)?;
        println!("{label}");
        let fmt = |xs: &[f64]| xs.iter().map(|x| format!("{x:+.6}")).collect::<Vec<_>>().join(" ");
        println!("  coefficients a1..aN: {}", fmt(&coeff.margins));
        println!("  eigenvalues:         {}", fmt(&eig.margins));
        match coeff.failing_index {
            Some(k) => println!("  -> {} (a{k} < 0); oracle says {}", coeff.decision, eig.decision),
            None => println!("  -> {}; oracle says {}", coeff.decision, eig.decision),
        }
    }
    Ok(())
}
