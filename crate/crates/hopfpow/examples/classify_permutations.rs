//! Permutation combinatorics underlying the basis constructions: direct-sum
//! connectivity, the factor decomposition into single-factor (Lyndon)
//! permutations, and the three total orders -- the base
//! pseudo-lexicographic order and the two transferred factor orders.
//!
//! Run with: `cargo run --example classify_permutations`

use hopfpow::ssym::{all_perms, classify, perm_compare, perm_string, OrderVariant, Perm};

fn chain(label: &str, mut perms: Vec<Perm>, variant: OrderVariant) {
    perms.sort_by(|a, b| perm_compare(variant, a, b));
    let joined: Vec<String> = perms.iter().map(|p| perm_string(p)).collect();
    println!("{label}: {}", joined.join(" < "));
}

fn main() {
    println!(
        "{:>6} {:>10} {:>8} {:>14} {:>7}",
        "perm", "connected", "lyndon", "factors", "length"
    );
    for m in 1..=3usize {
        for p in all_perms(m) {
            let c = classify(&p);
            let factors: Vec<String> = c.factors.iter().map(|f| perm_string(f)).collect();
            println!(
                "{:>6} {:>10} {:>8} {:>14} {:>7}",
                perm_string(&p),
                if c.connected { "yes" } else { "no" },
                if c.lyndon { "yes" } else { "no" },
                factors.join("x"),
                c.length
            );
        }
    }

    // 213 is the first single-factor permutation that is not connected.
    let c = classify(&[2, 1, 3]);
    assert!(c.lyndon && !c.connected);
    println!("\n213 is a single factor but not connected: the two notions differ\n");

    let mixed: Vec<Perm> = (1..=3usize).flat_map(all_perms).collect();
    chain("base order, sizes 1..3 ", mixed, OrderVariant::Prec);
    chain("left factor order, S_3 ", all_perms(3), OrderVariant::PrecL);
    chain("right factor order, S_3", all_perms(3), OrderVariant::PrecR);

    // Counts per size: single-factor permutations grow like the generator
    // counts recovered from the Hilbert series.
    println!();
    for m in 1..=5usize {
        let perms = all_perms(m);
        let connected = perms.iter().filter(|p| classify(p).connected).count();
        let lyndon = perms.iter().filter(|p| classify(p).lyndon).count();
        println!(
            "size {m}: {:>3} permutations, {connected:>2} connected, {lyndon:>2} single-factor",
            perms.len()
        );
    }
}
