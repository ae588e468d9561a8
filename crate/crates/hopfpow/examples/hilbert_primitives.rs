//! Hilbert series inversion: from per-degree dimensions alone, recover how
//! many free generators (primitive-like strata) a connected graded algebra
//! must have in each degree, and the eigenvalue multiplicities this forces
//! on every power map.
//!
//! Run with: `cargo run --example hilbert_primitives`

use hopfpow::grading::MultiDegree;
use hopfpow::spectra::{hilbert_series, multiplicity, primitive_dims};
use hopfpow::ssym::{all_perms, build_ssym, classify};

fn main() -> hopfpow::Result<()> {
    let h = build_ssym(5)?;
    let series = hilbert_series(&h);
    let p = primitive_dims(&series)?;

    println!("permutation algebra: dimensions m! and inverted generator counts\n");
    println!("{:>5} {:>6} {:>11}", "size", "dim", "generators");
    for m in 1..=5u32 {
        let degree = MultiDegree::scalar(m);
        println!("{:>5} {:>6} {:>11}", m, series.dim(&degree), p.count(&degree));
    }

    // The counts are combinatorial: single-factor permutations per size.
    println!("\ncross-check against single-factor permutation counts:");
    for m in 1..=5usize {
        let brute = all_perms(m).iter().filter(|q| classify(q).lyndon).count();
        let inverted = p.count(&MultiDegree::scalar(m as u32));
        assert_eq!(brute, inverted);
        println!("size {m}: {brute} single-factor permutations == {inverted} inverted");
    }

    // Eigenvalue multiplicities: dim of the length-s stratum inside size m.
    println!("\nmultiplicities of the length-s stratum (rows: size, cols: s):");
    print!("{:>5}", "");
    for s in 0..=5 {
        print!("{s:>7}");
    }
    println!();
    for m in 1..=5u32 {
        let degree = MultiDegree::scalar(m);
        print!("{m:>5}");
        for s in 0..=5usize {
            print!("{:>7}", multiplicity(&p, s, &degree));
        }
        println!();
    }
    println!("\neach row sums to the component dimension; column s gives the");
    println!("exponent of (x - n^s) in the predicted characteristic polynomial");
    Ok(())
}
