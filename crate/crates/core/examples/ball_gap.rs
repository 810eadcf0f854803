//! How much of the enclosing ball is occupied by physical states. For N = 2
//! the two sets coincide; for N >= 3 the state set is a proper subset.
//!
//!     cargo run --release --example ball_gap -- 100000

use qudit_bloch::generators::build_generator_basis;
use qudit_bloch::membership::{is_bloch_vector_batch, Decision, DEFAULT_TOL};
use qudit_bloch::sampling::{sample_states, SampleKind};
use qudit_bloch::statemap::ball_radius;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: usize = std::env::args().nth(1).map_or(Ok(20_000), |s| s.parse())?;
    println!("{:>3} {:>10} {:>10} {:>10} {:>10}", "N", "radius", "INSIDE", "BOUNDARY", "OUTSIDE");
    for n in 2..=5 {
        let basis = build_generator_basis(n)?;
        for seed in [1u64, 2] {
            let vectors = sample_states(&basis, count, SampleKind::BallUniform, seed)?;
            let verdicts = is_bloch_vector_batch(&vectors, &basis, DEFAULT_TOL)?;
            let frac = |d: Decision| verdicts.iter().filter(|v| v.decision == d).count() as f64 / count as f64;
            println!(
                "{n:>3} {:>10.6} {:>10.5} {:>10.5} {:>10.5}   (seed {seed})",
                ball_radius(n)?,
                frac(Decision::Inside),
                frac(Decision::Boundary),
                frac(Decision::Outside)
            );
        }
    }
    Ok(())
}
