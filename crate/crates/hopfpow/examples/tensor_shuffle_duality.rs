//! The two built-in word instances over the same graded alphabet: the
//! cocommutative tensor algebra (concatenate, deconcatenate) and the
//! commutative shuffle algebra (shuffle, deconcatenate coefficients dual).
//! They pair dually word-by-word, and on both every power map is
//! diagonalizable -- in contrast to the permutation algebra.
//!
//! Run with: `cargo run --example tensor_shuffle_duality`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::instances::{verify_dual_pairing, InstanceKind, InstanceSpec};
use hopfpow::poly::{factored_string, Poly};
use hopfpow::spectra::{hilbert_series, predicted_char_poly, primitive_dims};

fn main() -> hopfpow::Result<()> {
    let degrees = vec![1, 2];
    let bound = 5;
    let tensor = InstanceSpec::new(InstanceKind::Tensor, degrees.clone(), bound)?.build()?;
    let shuffle = InstanceSpec::new(InstanceKind::Shuffle, degrees, bound)?.build()?;

    println!("word alphabet: one letter of degree 1, one of degree 2, bound {bound}");
    println!(
        "dimensions: {:?}\n",
        hilbert_series(&tensor).scalar_dims()
    );

    // Duality: product structure constants of one match coproduct structure
    // constants of the other, word by word.
    let pairing = verify_dual_pairing(&tensor, &shuffle);
    assert!(pairing.all_passed());
    println!("dual pairing verified:\n{pairing}");

    // Both are (co)commutative, so power maps are diagonalizable: the
    // predicted characteristic polynomial has squarefree minimal polynomial
    // companion -- check directly that the exact minimal polynomial is
    // squarefree for n = 2.
    for (name, h) in [("tensor", &tensor), ("shuffle", &shuffle)] {
        let ctx = ConvolutionContext::new(h);
        let p = primitive_dims(&hilbert_series(h))?;
        let map = ctx.adams(2);
        for (degree, _) in h.basis.dims() {
            let block = map.block(&degree);
            let (predicted, roots) = predicted_char_poly(&p, 2, &degree);
            assert_eq!(predicted, block.char_poly());
            let mp = block.min_poly();
            assert!(mp.is_squarefree(), "{name} degree {degree}");
            if degree.max_parts() == 4 {
                println!(
                    "{name} algebra, degree 4: char poly {} -- minimal polynomial squarefree",
                    factored_string(&roots, &Poly::one())
                );
            }
        }
    }

    // The idempotent system is orthogonal on both (commutative or
    // cocommutative suffices).
    for (name, h) in [("tensor", &tensor), ("shuffle", &shuffle)] {
        let ctx = ConvolutionContext::new(h);
        let ortho = ctx.check_idempotent_system();
        assert!(ortho.all_passed());
        println!("{name} algebra: idempotents orthogonal, projections sum to identity");
    }
    Ok(())
}
