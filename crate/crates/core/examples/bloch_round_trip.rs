//! Maps a Bloch vector to its density matrix and back, and evaluates the
//! scalar functionals that only need the vector.
//!
//!     cargo run --example bloch_round_trip

use qudit_bloch::generators::build_generator_basis;
use qudit_bloch::linalg::trace;
use qudit_bloch::sampling::{random_mixed_state, random_pure_state, rng_from_seed};
use qudit_bloch::statemap::{
    ball_radius, bloch_to_matrix, expectation, matrix_to_bloch, overlap, purity, Observable,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 3;
    let basis = build_generator_basis(n)?;
    let mut rng = rng_from_seed(2024);

    let rho = random_mixed_state(n, &mut rng);
    let v = matrix_to_bloch(&rho, &basis)?;
    println!("random qutrit state, Bloch vector:");
    println!("  {:?}", v.components().iter().map(|x| format!("{x:+.5}")).collect::<Vec<_>>());

    let back = bloch_to_matrix(&v, &basis)?;
    let err = (back.matrix() - rho.matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    println!("  rho -> v -> rho max entry error: {err:.2e}");

    let direct = trace(&(rho.matrix() * rho.matrix())).re;
    println!("  purity from |v|: {:.12}, from tr rho^2: {direct:.12}", purity(&v));

    let psi = matrix_to_bloch(&random_pure_state(n, &mut rng), &basis)?;
    println!("random pure state: |v| = {:.12}, ball radius = {:.12}", psi.norm(), ball_radius(n)?);
    println!("overlap tr(rho sigma) = {:.6}", overlap(&v, &psi)?);

    // A = 0.5·I + λ3 + 0.25·λ8
    let mut dir = vec![0.0; basis.len()];
    dir[2] = 1.0;
    dir[7] = 0.25;
    let obs = Observable::new(n, 0.5, dir)?;
    let via_trace = trace(&(rho.matrix() * obs.to_matrix(&basis)?)).re;
    println!("<A> = a + b.v = {:.12}, tr(rho A) = {via_trace:.12}", expectation(&v, &obs)?);
    Ok(())
}
