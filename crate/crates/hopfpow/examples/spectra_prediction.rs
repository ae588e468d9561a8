//! Predicted spectra: characteristic polynomials of power maps are
//! determined by a counting formula. Primitive counts come from inverting
//! the Hilbert series; the predicted polynomial product over eigenvalue
//! strata is compared with the exactly computed characteristic polynomial.
//!
//! Run with: `cargo run --example spectra_prediction`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::poly::{factored_string, Poly};
use hopfpow::spectra::{hilbert_series, predicted_char_poly, primitive_dims};
use hopfpow::ssym::build_ssym;

fn main() -> hopfpow::Result<()> {
    let h = build_ssym(4)?;
    let ctx = ConvolutionContext::new(&h);
    let p = primitive_dims(&hilbert_series(&h))?;

    println!("permutation algebra, components up to size 4\n");
    for n in [-2i64, 2, 3] {
        let map = ctx.adams(n);
        for m in 1..=4u32 {
            let degree = MultiDegree::scalar(m);
            let (predicted, roots) = predicted_char_poly(&p, n, &degree);
            let actual = map.block(&degree).char_poly();
            let verdict = if predicted == actual { "matches" } else { "MISMATCH" };
            println!(
                "n = {n:>2}, size {m}: char poly = {}   prediction {verdict}",
                factored_string(&roots, &Poly::one())
            );
            assert_eq!(predicted, actual);
        }
        println!();
    }

    // Negative n: distinct strata can share an eigenvalue, so exponents
    // merge; n = -1 sends every even stratum to eigenvalue 1.
    let degree = MultiDegree::scalar(4);
    let (_, roots) = predicted_char_poly(&p, -1, &degree);
    println!(
        "n = -1, size 4 (merged eigenvalues): {}",
        factored_string(&roots, &Poly::one())
    );
    Ok(())
}
