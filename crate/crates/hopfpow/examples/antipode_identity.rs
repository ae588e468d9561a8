//! The antipode as a convolution inverse: computes the antipode of the
//! permutation Hopf algebra from the geometric series, verifies the
//! two-sided inverse law against the identity, and shows that negative
//! power maps are antipode powers.
//!
//! Run with: `cargo run --example antipode_identity`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::scalar::format_rat;
use hopfpow::ssym::{all_perms, build_ssym, perm_string};

fn main() -> hopfpow::Result<()> {
    let h = build_ssym(4)?;
    let ctx = ConvolutionContext::new(&h);
    let s = ctx.antipode();
    let id = ctx.identity();
    let unit = ctx.unit();

    // Two-sided convolution inverse.
    assert_eq!(ctx.convolve(&s, &id), unit);
    assert_eq!(ctx.convolve(&id, &s), unit);
    println!("antipode * id == id * antipode == unit . counit   (verified exactly)\n");

    // Images of the size-3 fundamental basis elements.
    let degree = MultiDegree::scalar(3);
    let block = s.block(&degree);
    let labels: Vec<String> = all_perms(3).iter().map(|p| perm_string(p)).collect();
    for (j, src) in labels.iter().enumerate() {
        let mut terms = Vec::new();
        for (i, dst) in labels.iter().enumerate() {
            let c = block.get(i, j);
            if !num::traits::Zero::is_zero(c) {
                terms.push(format!("{} F{}", format_rat(c), dst));
            }
        }
        println!("S(F{src}) = {}", terms.join(" + ").replace("+ -", "- "));
    }

    // Negative power maps are convolution powers of the antipode.
    let psi_m2 = ctx.adams(-2);
    let s_squared = ctx.convolve(&s, &s);
    assert_eq!(psi_m2, s_squared);
    println!("\npower map at -2 equals antipode * antipode      (verified exactly)");

    // The composition square of the antipode is not the identity here: the
    // algebra is neither commutative nor cocommutative.
    let s_comp_s = s.compose(&s);
    println!(
        "antipode composed with itself {} the identity on size 3",
        if s_comp_s.block(&degree) == id.block(&degree) {
            "equals"
        } else {
            "differs from"
        }
    );
    Ok(())
}
