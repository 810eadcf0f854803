//! Classifies all 28 two-dimensional sections of the qutrit Bloch space and
//! writes each grid plus its closed-form boundary as CSV.
//!
//!     cargo run --release --example qutrit_sections -- out_dir [resolution]

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use qudit_bloch::generators::build_generator_basis;
use qudit_bloch::membership::DEFAULT_TOL;
use qudit_bloch::sections3::{
    boundary_curves, classify_section, qutrit_ball_radius, sample_section, Cell, SectionSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "qutrit_sections".into()));
    let res: usize = args.next().map_or(Ok(201), |s| s.parse())?;
    fs::create_dir_all(&out)?;
    let basis = build_generator_basis(3)?;

    println!("{:>7}  {:<8}  {:>8}  {:>9}  {:>8}", "section", "type", "IN", "BALL_ONLY", "OUT");
    for i in 1..=8 {
        for j in i + 1..=8 {
            let spec = SectionSpec::new(i, j, res, qutrit_ball_radius())?;
            let grid = sample_section(&spec, &basis, DEFAULT_TOL)?;
            let count = |c: Cell| grid.iter().filter(|g| g.cell == c).count();

            let mut csv = String::from("lambda_i,lambda_j,class\n");
            for g in &grid {
                writeln!(csv, "{},{},{}", g.li, g.lj, g.cell.as_str())?;
            }
            fs::write(out.join(format!("section_{i}_{j}.csv")), csv)?;

            let mut curves = String::from("curve,lambda_i,lambda_j\n");
            for c in boundary_curves(&spec, 360)? {
                for (x, y) in c.points {
                    writeln!(curves, "{},{x},{y}", c.name)?;
                }
            }
            fs::write(out.join(format!("boundary_{i}_{j}.csv")), curves)?;

            println!(
                "{:>7}  {:<8}  {:>8}  {:>9}  {:>8}",
                format!("({i},{j})"),
                classify_section(i, j)?.kind.as_str(),
                count(Cell::In),
                count(Cell::BallOnly),
                count(Cell::Out)
            );
        }
    }
    println!("wrote {}", out.display());
    Ok(())
}
