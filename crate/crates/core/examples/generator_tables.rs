//! Prints the generalized Gell-Mann basis and its structure constants.
//!
//!     cargo run --example generator_tables -- 3

use qudit_bloch::generators::{build_generator_basis, closure_residuals, compute_structure_constants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let basis = build_generator_basis(n)?;
    println!("{} generators for N = {n}", basis.len());
    for (idx, m) in basis.iter().enumerate() {
        println!("lambda_{}:", idx + 1);
        for r in 0..n {
            let row: Vec<String> = (0..n)
                .map(|c| {
                    let z = m[(r, c)];
                    format!("{:>7.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            println!("  {}", row.join("  "));
        }
    }

    let sc = compute_structure_constants(&basis)?;
    println!("\nnonzero f_ijk (i < j < k, 1-based):");
    for (k, v) in sc.f_canonical() {
        println!("  f[{},{},{}] = {v:+.6}", k[0] + 1, k[1] + 1, k[2] + 1);
    }
    println!("nonzero g_ijk (i <= j <= k, 1-based):");
    for (k, v) in sc.g_canonical() {
        println!("  g[{},{},{}] = {v:+.6}", k[0] + 1, k[1] + 1, k[2] + 1);
    }

    // λiλj = (2/N)δij I + (g_ijk + i f_ijk) λk, checked over every pair.
    let worst = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let (rc, ra) = closure_residuals(&basis, &sc, i, j);
            rc.max(ra)
        })
        .fold(0.0, f64::max);
    println!("\nlargest commutator/anticommutator reconstruction residual: {worst:.2e}");
    Ok(())
}
