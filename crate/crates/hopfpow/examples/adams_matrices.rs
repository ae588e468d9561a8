//! Power-map (Adams operator) matrices on the permutation Hopf algebra:
//! the second convolution power of the identity on the size-3 component,
//! shown in the fundamental, monomial, and triangularizing bases.
//!
//! Run with: `cargo run --example adams_matrices`

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::matrix::Matrix;
use hopfpow::scalar::format_rat;
use hopfpow::ssym::{
    all_perms, build_ssym, m_to_f, perm_compare, perm_string, OrderVariant, TExpander,
    WeakOrderSide,
};
use std::collections::BTreeMap;

fn print_matrix(title: &str, labels: &[String], m: &Matrix) {
    println!("{title}");
    let w = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(4);
    print!("{:w$} ", "");
    for l in labels {
        print!("{l:>w$} ");
    }
    println!();
    for i in 0..m.rows() {
        print!("{:>w$} ", labels[i]);
        for j in 0..m.cols() {
            print!("{:>w$} ", format_rat(m.get(i, j)));
        }
        println!();
    }
    println!();
}

fn main() -> hopfpow::Result<()> {
    let h = build_ssym(4)?;
    let ctx = ConvolutionContext::new(&h);
    let degree = MultiDegree::scalar(3);
    let psi2 = ctx.adams(2);
    let block = psi2.block(&degree);

    // Fundamental basis, natural (lexicographic) listing.
    let f_labels: Vec<String> = all_perms(3).iter().map(|p| format!("F{}", perm_string(p))).collect();
    print_matrix("second power map on size 3, fundamental basis:", &f_labels, block);

    // Monomial basis via inclusion-exclusion over the left weak order.
    let c = m_to_f(3, WeakOrderSide::Left);
    let m_mat = c.inverse().expect("invertible").mul(block).mul(&c);
    let m_labels: Vec<String> = all_perms(3).iter().map(|p| format!("M{}", perm_string(p))).collect();
    print_matrix("same operator in the monomial basis:", &m_labels, &m_mat);

    // Triangularizing basis, listed in the transferred right-to-left order.
    let mut perms = all_perms(3);
    perms.sort_by(|a, b| perm_compare(OrderVariant::PrecR, a, b));
    let index: BTreeMap<_, _> = all_perms(3).into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut expander = TExpander::new();
    let mut t = Matrix::zeros(6, 6);
    for (j, p) in perms.iter().enumerate() {
        for (q, coeff) in expander.expand(p) {
            t.set(index[&q], j, coeff);
        }
    }
    let t_mat = t.inverse().expect("invertible").mul(block).mul(&t);
    let t_labels: Vec<String> = perms.iter().map(|p| format!("T{}", perm_string(p))).collect();
    print_matrix(
        "same operator in the triangularizing basis (right order): upper triangular",
        &t_labels,
        &t_mat,
    );

    println!(
        "diagonal: {}",
        t_mat
            .diagonal()
            .iter()
            .map(format_rat)
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("each diagonal entry is 2^(number of factors of the column label)");
    Ok(())
}
