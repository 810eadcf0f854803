//! Compares the closed-form polynomial expressions for the characteristic
//! coefficients and trace moments with the trace-power/Newton path.
//!
//!     cargo run --example coefficient_formulas -- 5

use qudit_bloch::generators::{build_generator_basis, compute_structure_constants};
use qudit_bloch::membership::{
    char_coefficients_closed_form, char_coefficients_newton, moments_closed_form, moments_trace,
};
use qudit_bloch::sampling::{sample_states, SampleKind};
use qudit_bloch::statemap::bloch_to_matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |s| s.parse())?;
    let basis = build_generator_basis(n)?;
    let sc = compute_structure_constants(&basis)?;
    let samples = sample_states(&basis, 5, SampleKind::Mixed, 7)?;
    for (idx, v) in samples.iter().enumerate() {
        let rho = bloch_to_matrix(v, &basis)?;
        let moments = moments_trace(&rho, n);
        let newton = char_coefficients_newton(&moments)?;
        let closed = char_coefficients_closed_form(v, &sc)?;
        println!("sample {idx}: |v|^2 = {:.6}, g_ijk v_i v_j v_k = {:+.6}", v.norm_squared(), sc.g_cubic(v.components()));
        for k in 1..=closed.degree() {
            println!(
                "  a{k}: closed form {:+.15}  newton {:+.15}  diff {:.1e}",
                closed.get(k),
                newton.get(k),
                (closed.get(k) - newton.get(k)).abs()
            );
        }
        for q in 2..=4.min(n) {
            let c = moments_closed_form(v, &sc, q)?;
            println!("  C{q}: closed form {c:.15}  trace {:.15}", moments.get(q));
        }
    }
    Ok(())
}
