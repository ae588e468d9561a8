//! Log-of-identity idempotents: the convolution logarithm of the identity
//! generates a family e(1), e(2), ... through which every integer power map
//! factors as psi_n = sum_r n^r e(r). The family is an orthogonal system of
//! projections exactly when the algebra is commutative or cocommutative;
//! the permutation algebra is neither and fails on size 3.
//!
//! Run with: `cargo run --example eulerian_idempotents`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::instances::{InstanceKind, InstanceSpec};
use hopfpow::ssym::build_ssym;
use num::traits::Zero;

fn main() -> hopfpow::Result<()> {
    // Cocommutative word algebra: everything holds.
    let tensor = InstanceSpec::new(InstanceKind::Tensor, vec![1, 2], 4)?.build()?;
    let ctx = ConvolutionContext::new(&tensor);
    let expansion = ctx.check_eulerian_expansion(&[-2, -1, 0, 1, 2, 3]);
    println!("tensor instance: power maps factor through the idempotents");
    println!("{expansion}");
    let ortho = ctx.check_idempotent_system();
    println!("tensor instance: orthogonal idempotent system");
    println!("{ortho}");

    // The permutation algebra: the expansion identity still holds ...
    let ssym = build_ssym(3)?;
    let sctx = ConvolutionContext::new(&ssym);
    let expansion = sctx.check_eulerian_expansion(&[-2, -1, 0, 1, 2, 3]);
    assert!(expansion.all_passed());
    println!("permutation algebra: the expansion identity holds");
    println!("{expansion}");

    // ... but orthogonality fails: e(1) . e(2) is nonzero on size 3.
    let ortho = sctx.check_idempotent_system();
    assert!(!ortho.all_passed());
    println!("permutation algebra: orthogonality fails (neither commutative nor cocommutative)");
    println!("{ortho}");

    let e1 = sctx.eulerian_idempotent(1);
    let e2 = sctx.eulerian_idempotent(2);
    let composed = e1.compose(&e2);
    let block = composed.block(&MultiDegree::scalar(3));
    let nonzero = (0..block.rows())
        .flat_map(|i| (0..block.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !block.get(i, j).is_zero())
        .count();
    println!("e(1) . e(2) has {nonzero} nonzero entries on the size-3 component");
    Ok(())
}
