//! Two candidate orders for upper-triangularizing the power maps on the
//! permutation algebra, compared honestly.
//!
//! In the constructed order (generator words compared
//! pseudo-lexicographically) every integer power map is upper triangular
//! with diagonal n^(sequence length) -- verified here up to size 4. In the
//! transferred right-to-left factor order on permutations the same claim
//! fails for the first time at size 4; this example prints the
//! counterexample entry instead of hiding it.
//!
//! Run with: `cargo run --example triangularity`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::matrix::Matrix;
use hopfpow::pbw::{construct_pbw, triangular_check};
use hopfpow::scalar::{int_pow, format_rat};
use hopfpow::ssym::{
    all_perms, build_ssym, connected_generator_input, perm_compare, perm_string,
    OrderVariant, TExpander,
};
use num::traits::Zero;
use std::collections::BTreeMap;

fn main() -> hopfpow::Result<()> {
    let h = build_ssym(4)?;
    let ctx = ConvolutionContext::new(&h);

    // Constructed word order: triangular at every size, for every n.
    let input = connected_generator_input(&h)?;
    let (basis, _) = construct_pbw(&h, &input, 4)?;
    for n in [-2i64, -1, 0, 1, 2, 3] {
        let map = ctx.adams(n);
        for m in 0..=4u32 {
            let report = triangular_check(&basis, &map, &MultiDegree::scalar(m), |v| {
                int_pow(n, v.len())
            });
            assert!(report.triangular && report.diagonal_ok);
        }
    }
    println!("constructed word order: upper triangular with diagonal n^length");
    println!("for n in -2..=3 on every component up to size 4\n");

    // Transferred right order on permutations: fails at size 4.
    for m in 1..=4u32 {
        let mut perms = all_perms(m as usize);
        perms.sort_by(|a, b| perm_compare(OrderVariant::PrecR, a, b));
        let index: BTreeMap<_, _> = all_perms(m as usize)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut expander = TExpander::new();
        let k = perms.len();
        let mut c = Matrix::zeros(k, k);
        for (j, p) in perms.iter().enumerate() {
            for (q, coeff) in expander.expand(p) {
                c.set(index[&q], j, coeff);
            }
        }
        let t = c
            .inverse()
            .expect("invertible")
            .mul(ctx.adams(2).block(&MultiDegree::scalar(m)))
            .mul(&c);
        let mut leaks = Vec::new();
        for j in 0..k {
            for i in j + 1..k {
                if !t.get(i, j).is_zero() {
                    leaks.push(format!(
                        "column T{} row T{} = {}",
                        perm_string(&perms[j]),
                        perm_string(&perms[i]),
                        format_rat(t.get(i, j))
                    ));
                }
            }
        }
        if leaks.is_empty() {
            println!("transferred right order, size {m}: upper triangular");
        } else {
            println!(
                "transferred right order, size {m}: {} entries below the diagonal",
                leaks.len()
            );
            for l in leaks.iter().take(3) {
                println!("  {l}");
            }
        }
    }
    println!("\nthe diagonal entries are n^(number of factors) in both orders;");
    println!("only the constructed word order is triangular at size 4");
    Ok(())
}
