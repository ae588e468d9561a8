//! Acceptance suite: every criterion is exact (tolerance zero) and prints
//! one PASS line when it holds. Criterion 7 states a global triangularity
//! claim for the permutation algebra in the transferred right-to-left
//! order; see its doc comment for the precise statement under test.

use hopfpow::convolution::ConvolutionContext;
use hopfpow::grading::MultiDegree;
use hopfpow::hopf::{Element, HopfData};
use hopfpow::instances::{InstanceKind, InstanceSpec};
use hopfpow::matrix::Matrix;
use hopfpow::pbw::{
    construct_pbw, seq_binomial, seq_compare, seq_rearrange, triangular_check,
    verify_pbw_conditions, ConstructionLog, PbwBasis, SeqOrder,
};
use hopfpow::poly::Poly;
use hopfpow::scalar::{int_pow, rat, Rat};
use hopfpow::spectra::{hilbert_series, multiplicity, predicted_char_poly, primitive_dims};
use hopfpow::ssym::{
    all_perms, build_ssym, classify, connected_generator_input, connected_of_degree,
    lyndon_length, m_to_f, perm_compare, perm_string, OrderVariant, Perm, TExpander,
    WeakOrderSide,
};
use num::traits::Zero;
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

static SSYM5: Lazy<HopfData> = Lazy::new(|| build_ssym(5).unwrap());
static SSYM4: Lazy<HopfData> = Lazy::new(|| build_ssym(4).unwrap());
static TENSOR5: Lazy<HopfData> = Lazy::new(|| {
    InstanceSpec::new(InstanceKind::Tensor, vec![1, 2], 5)
        .unwrap()
        .build()
        .unwrap()
});
static SHUFFLE5: Lazy<HopfData> = Lazy::new(|| {
    InstanceSpec::new(InstanceKind::Shuffle, vec![1, 2], 5)
        .unwrap()
        .build()
        .unwrap()
});
static PBW4: Lazy<(PbwBasis, ConstructionLog)> = Lazy::new(|| {
    let h = &*SSYM4;
    let input = connected_generator_input(h).unwrap();
    construct_pbw(h, &input, 4).unwrap()
});

fn scalar(m: u32) -> MultiDegree {
    MultiDegree::scalar(m)
}

fn perm(s: &str) -> Perm {
    s.bytes().map(|b| b - b'0').collect()
}

/// Dense coordinates of an element inside one graded component.
fn coords(h: &HopfData, degree: &MultiDegree, x: &Element) -> Vec<Rat> {
    let mut v = vec![rat(0); h.basis.of_degree(degree).len()];
    for (id, c) in x.terms() {
        assert_eq!(h.basis.degree(id), degree, "inhomogeneous element");
        v[h.basis.pos_in_degree(id)] = c.clone();
    }
    v
}

/// Expected matrix from a column table `source -> [(target, coeff)]`, rows
/// and columns in the natural lexicographic listing of the degree.
fn table_matrix(labels: &[&str], table: &[(&str, &[(&str, i64)])]) -> Matrix {
    let pos = |l: &str| labels.iter().position(|&x| x == l).unwrap();
    let mut m = Matrix::zeros(labels.len(), labels.len());
    for (src, entries) in table {
        for (dst, c) in *entries {
            m.set(pos(dst), pos(src), rat(*c));
        }
    }
    m
}

/// Permutations of size `m` sorted by the transferred right order, plus the
/// change-of-basis matrix whose column `j` is `T_{sigma_j}` in fundamental
/// coordinates (natural row listing).
fn t_change(m: u32) -> (Vec<Perm>, Matrix) {
    let mut perms = all_perms(m as usize);
    perms.sort_by(|a, b| perm_compare(OrderVariant::PrecR, a, b));
    let index: BTreeMap<Perm, usize> = all_perms(m as usize)
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
    (perms, c)
}

fn conjugate(block: &Matrix, c: &Matrix) -> Matrix {
    c.inverse().expect("invertible transform").mul(block).mul(c)
}

const SIX: [&str; 6] = ["123", "132", "213", "231", "312", "321"];

#[test]
fn criterion_01_fundamental_basis_power_table() {
    let h = &*SSYM5;
    let ctx = ConvolutionContext::new(h);
    let block = ctx.adams(2).block(&scalar(3)).clone();
    let expected = table_matrix(
        &SIX,
        &[
            ("123", &[("123", 4), ("132", 1), ("213", 1), ("231", 1), ("312", 1)]),
            ("132", &[("123", 1), ("132", 4), ("312", 2), ("321", 1)]),
            ("213", &[("123", 1), ("213", 4), ("231", 2), ("321", 1)]),
            ("231", &[("123", 1), ("132", 2), ("231", 2), ("312", 2), ("321", 1)]),
            ("312", &[("123", 1), ("213", 2), ("231", 2), ("312", 2), ("321", 1)]),
            ("321", &[("132", 1), ("213", 1), ("231", 1), ("312", 1), ("321", 4)]),
        ],
    );
    assert_eq!(block, expected);
    // Spot check the first column: the image of F_123.
    let col: Vec<Rat> = (0..6).map(|i| block.get(i, 0).clone()).collect();
    assert_eq!(col, vec![rat(4), rat(1), rat(1), rat(1), rat(1), rat(0)]);
    println!("ACCEPTANCE 01 fundamental-basis power-map table: PASS");
}

#[test]
fn criterion_02_monomial_basis_power_table() {
    let h = &*SSYM5;
    let ctx = ConvolutionContext::new(h);
    let psi2 = ctx.adams(2);
    let block = psi2.block(&scalar(3));
    let c = m_to_f(3, WeakOrderSide::Left);
    let m_mat = conjugate(block, &c);
    let expected = table_matrix(
        &SIX,
        &[
            ("123", &[("123", 2)]),
            ("132", &[("132", 2)]),
            ("213", &[("213", 2)]),
            ("231", &[("123", 1), ("132", 2), ("231", 3), ("312", 1)]),
            ("312", &[("123", 1), ("213", 2), ("231", 1), ("312", 3)]),
            ("321", &[("132", 1), ("213", 1), ("231", 2), ("312", 2), ("321", 8)]),
        ],
    );
    assert_eq!(m_mat, expected);
    // The stated column: the image of M_321.
    let col: Vec<Rat> = (0..6).map(|i| m_mat.get(i, 5).clone()).collect();
    assert_eq!(col, vec![rat(0), rat(1), rat(1), rat(2), rat(2), rat(8)]);
    println!("ACCEPTANCE 02 monomial-basis power-map table: PASS");
}

#[test]
fn criterion_03_characteristic_and_minimal_polynomial() {
    let h = &*SSYM5;
    let ctx = ConvolutionContext::new(h);
    let psi2 = ctx.adams(2);
    let block = psi2.block(&scalar(3));
    let cp = block.char_poly();
    let mp = block.min_poly();
    assert_eq!(cp, Poly::from_roots(&[(rat(2), 4), (rat(4), 1), (rat(8), 1)]));
    assert_eq!(mp, Poly::from_roots(&[(rat(2), 2), (rat(4), 1), (rat(8), 1)]));
    // Not diagonalizable: the minimal polynomial is not squarefree.
    let squarefree = Poly::from_roots(&[(rat(2), 1), (rat(4), 1), (rat(8), 1)]);
    assert_ne!(mp, squarefree);
    println!("ACCEPTANCE 03 characteristic and minimal polynomial on degree 3: PASS");
}

#[test]
fn criterion_04_triangular_basis_expansions() {
    let mut expander = TExpander::new();
    let expect = |pairs: &[(&str, i64)]| -> BTreeMap<Perm, Rat> {
        pairs.iter().map(|(p, c)| (perm(p), rat(*c))).collect()
    };
    let cases: Vec<(&str, Vec<(&str, i64)>)> = vec![
        (
            "123",
            vec![("123", 1), ("132", 1), ("213", 1), ("231", 1), ("312", 1), ("321", 1)],
        ),
        ("213", vec![("132", -1), ("213", 1), ("231", 1), ("312", -1)]),
        ("132", vec![("132", 1), ("312", 1), ("321", 1)]),
        ("231", vec![("231", 1)]),
        ("312", vec![("312", 1)]),
        ("321", vec![("321", 1)]),
    ];
    for (p, pairs) in cases {
        let got = expander.expand(&perm(p));
        assert_eq!(got, expect(&pairs), "expansion of {p}");
    }
    println!("ACCEPTANCE 04 triangularizing-basis expansions on degree 3: PASS");
}

#[test]
fn criterion_05_triangular_basis_power_matrix() {
    let h = &*SSYM5;
    let ctx = ConvolutionContext::new(h);
    let (perms, c) = t_change(3);
    let listing: Vec<String> = perms.iter().map(|p| perm_string(p)).collect();
    assert_eq!(listing, vec!["123", "213", "132", "231", "312", "321"]);
    let t = conjugate(ctx.adams(2).block(&scalar(3)), &c);
    let expected = Matrix::from_rows(
        [
            [8, 0, 2, 1, 1, 0],
            [0, 2, 1, -1, 1, 1],
            [0, 0, 4, 0, 0, 2],
            [0, 0, 0, 2, 0, 0],
            [0, 0, 0, 0, 2, 0],
            [0, 0, 0, 0, 0, 2],
        ]
        .iter()
        .map(|row| row.iter().map(|&v| rat(v)).collect())
        .collect(),
    );
    assert_eq!(t, expected);
    assert_eq!(
        t.diagonal(),
        vec![rat(8), rat(2), rat(4), rat(2), rat(2), rat(2)]
    );
    println!("ACCEPTANCE 05 triangularizing-basis power-map matrix on degree 3: PASS");
}

#[test]
fn criterion_06_permutation_classification_and_chains() {
    // Classification for sizes 1..=3.
    let connected: Vec<String> = (1..=3usize)
        .flat_map(all_perms)
        .filter(|p| classify(p).connected)
        .map(|p| perm_string(&p))
        .collect();
    assert_eq!(connected, vec!["1", "21", "231", "312", "321"]);
    let single_factor_not_connected: Vec<String> = (1..=3usize)
        .flat_map(all_perms)
        .filter(|p| {
            let c = classify(p);
            c.lyndon && !c.connected
        })
        .map(|p| perm_string(&p))
        .collect();
    assert_eq!(single_factor_not_connected, vec!["213"]);
    let composites: Vec<(String, String, usize)> = (1..=3usize)
        .flat_map(all_perms)
        .filter(|p| !classify(p).lyndon)
        .map(|p| {
            let c = classify(&p);
            (
                perm_string(&p),
                c.factors
                    .iter()
                    .map(|f| perm_string(f))
                    .collect::<Vec<_>>()
                    .join("x"),
                c.length,
            )
        })
        .collect();
    assert_eq!(
        composites,
        vec![
            ("12".to_string(), "1x1".to_string(), 2),
            ("123".to_string(), "1x1x1".to_string(), 3),
            ("132".to_string(), "1x21".to_string(), 2),
        ]
    );

    // The three order chains.
    let mut mixed: Vec<Perm> = (1..=3usize).flat_map(all_perms).collect();
    mixed.sort_by(|a, b| perm_compare(OrderVariant::Prec, a, b));
    let mixed: Vec<String> = mixed.iter().map(|p| perm_string(p)).collect();
    assert_eq!(
        mixed,
        vec!["123", "12", "132", "1", "213", "21", "231", "312", "321"]
    );
    let mut left = all_perms(3);
    left.sort_by(|a, b| perm_compare(OrderVariant::PrecL, a, b));
    let left: Vec<String> = left.iter().map(|p| perm_string(p)).collect();
    assert_eq!(left, vec!["123", "132", "213", "231", "312", "321"]);
    let mut right = all_perms(3);
    right.sort_by(|a, b| perm_compare(OrderVariant::PrecR, a, b));
    let right: Vec<String> = right.iter().map(|p| perm_string(p)).collect();
    assert_eq!(right, vec!["123", "213", "132", "231", "312", "321"]);
    println!("ACCEPTANCE 06 permutation classification and order chains: PASS");
}

/// Criterion 7 asserts, for n in {-2,...,3} and sizes m <= 5, that the
/// power-map matrix in the triangularizing basis ordered by the transferred
/// right order is upper triangular with diagonal n^(number of factors), that
/// the antipode diagonal is (-1)^(number of factors), and that the antipode
/// is a two-sided convolution inverse of the identity.
///
/// The diagonal and convolution-inverse parts hold. The global
/// triangularity claim is false as stated: in the transferred right order
/// the first counterexamples appear at size 4 (the image of T_2431 contains
/// T_3124 with coefficient -1) and size 5 (the image of T_23514 contains
/// T_13524). Triangularity does hold in the constructed sequence order used
/// by the pbw module, which sorts generator words pseudo-lexicographically;
/// the `verify` command checks that order. This test states the claim
/// faithfully and is expected to fail.
#[test]
fn criterion_07_right_order_triangularity_at_scale() {
    let h = &*SSYM5;
    let ctx = ConvolutionContext::new(h);

    // Two-sided convolution inverse (holds).
    let s = ctx.antipode();
    let id = ctx.identity();
    let unit = ctx.unit();
    assert_eq!(ctx.convolve(&s, &id), unit, "antipode * id");
    assert_eq!(ctx.convolve(&id, &s), unit, "id * antipode");

    let mut violations: Vec<String> = Vec::new();
    for m in 1..=5u32 {
        let (perms, c) = t_change(m);
        let lengths: Vec<usize> = perms.iter().map(|p| lyndon_length(p)).collect();

        // Antipode diagonal (holds).
        let s_mat = conjugate(s.block(&scalar(m)), &c);
        for (i, l) in lengths.iter().enumerate() {
            assert_eq!(
                s_mat.get(i, i),
                &int_pow(-1, *l),
                "antipode diagonal at T_{} (size {m})",
                perm_string(&perms[i])
            );
        }

        for n in [-2i64, -1, 0, 1, 2, 3] {
            let t = conjugate(ctx.adams(n).block(&scalar(m)), &c);
            for (i, l) in lengths.iter().enumerate() {
                assert_eq!(
                    t.get(i, i),
                    &int_pow(n, *l),
                    "power-map diagonal n={n} at T_{} (size {m})",
                    perm_string(&perms[i])
                );
            }
            for j in 0..perms.len() {
                for i in j + 1..perms.len() {
                    if !t.get(i, j).is_zero() {
                        violations.push(format!(
                            "n={n}, size {m}: image of T_{} contains T_{} with coefficient {}",
                            perm_string(&perms[j]),
                            perm_string(&perms[i]),
                            t.get(i, j)
                        ));
                    }
                }
            }
        }
    }
    assert!(
        violations.is_empty(),
        "upper triangularity fails in the transferred right order \
         ({} lower entries); first cases:\n{}",
        violations.len(),
        violations
            .iter()
            .take(4)
            .cloned()
            .collect::<Vec<_>>()
            .join("\n")
    );
    println!("ACCEPTANCE 07 right-order triangularity at scale: PASS");
}

#[test]
fn criterion_08_predicted_characteristic_polynomials() {
    for h in [&*SSYM5, &*TENSOR5, &*SHUFFLE5] {
        let ctx = ConvolutionContext::new(h);
        let p = primitive_dims(&hilbert_series(h)).unwrap();
        for n in [-2i64, -1, 0, 1, 2, 3] {
            let map = ctx.adams(n);
            for (degree, _) in h.basis.dims() {
                let (predicted, _roots) = predicted_char_poly(&p, n, &degree);
                let actual = map.block(&degree).char_poly();
                assert_eq!(predicted, actual, "{} n={n} degree {}", h.name, degree.key());
            }
        }
    }
    println!("ACCEPTANCE 08 predicted characteristic polynomials (three instances): PASS");
}

#[test]
fn criterion_09_hilbert_inversion_and_multiplicities() {
    let h = &*SSYM5;
    let p = primitive_dims(&hilbert_series(h)).unwrap();
    // scalar_counts lists degrees 1..=bound.
    assert_eq!(&p.scalar_counts()[..4], &[1, 1, 4, 17]);

    // Brute force: single-factor permutations per size.
    for m in 1..=4usize {
        let count = all_perms(m).iter().filter(|q| classify(q).lyndon).count();
        assert_eq!(count, p.count(&scalar(m as u32)), "size {m}");
    }

    // mul(1, 3) equals the exponent of (x - 2) in the degree-3 prediction.
    let mul13 = multiplicity(&p, 1, &scalar(3));
    assert_eq!(mul13, num::BigInt::from(4));
    let (_, roots) = predicted_char_poly(&p, 2, &scalar(3));
    let exp_of_two = roots
        .iter()
        .find(|(r, _)| r == &rat(2))
        .map(|(_, k)| *k)
        .unwrap();
    assert_eq!(exp_of_two, 4);
    println!("ACCEPTANCE 09 hilbert inversion and eigenvalue multiplicities: PASS");
}

#[test]
fn criterion_10_log_idempotent_expansion_and_orthogonality() {
    let ns = [-2i64, -1, 0, 1, 2, 3];

    // Power maps decompose through the log idempotents: the permutation
    // algebra to size 4, both word instances to size 5.
    let ssym_ctx = ConvolutionContext::new(&SSYM4);
    let reports = ssym_ctx.check_eulerian_expansion(&ns);
    assert!(reports.all_passed(), "{reports}");
    for h in [&*TENSOR5, &*SHUFFLE5] {
        let ctx = ConvolutionContext::new(h);
        let reports = ctx.check_eulerian_expansion(&ns);
        assert!(reports.all_passed(), "{}: {reports}", h.name);
        let ortho = ctx.check_idempotent_system();
        assert!(ortho.all_passed(), "{}: {ortho}", h.name);
    }

    // Negative control: on the permutation algebra (neither commutative nor
    // cocommutative) the idempotent system fails, with a composition defect
    // on degree 3.
    let ortho = ssym_ctx.check_idempotent_system();
    assert!(!ortho.all_passed(), "orthogonality unexpectedly holds");
    let e1 = ssym_ctx.eulerian_idempotent(1);
    let e2 = ssym_ctx.eulerian_idempotent(2);
    let composed = e1.compose(&e2);
    let d3 = composed.block(&scalar(3));
    assert!(
        (0..d3.rows()).any(|i| (0..d3.cols()).any(|j| !d3.get(i, j).is_zero())),
        "composition of the first two idempotents vanished on degree 3"
    );
    println!("ACCEPTANCE 10 log-idempotent expansion and orthogonality control: PASS");
}

#[test]
fn criterion_11_basis_construction_from_connected_generators() {
    let h = &*SSYM4;
    let (basis, log) = &*PBW4;

    // Every irreducible generator survived with unbounded height and the
    // stratum counts match the single-factor counts (1, 1, 4, 17).
    let counts: Vec<usize> = (1..=4u32)
        .map(|m| basis.family.of_degree(&scalar(m)).len())
        .collect();
    assert_eq!(counts, vec![1, 1, 4, 17]);
    assert!(basis.family.generators().iter().all(|g| g.height.is_none()));
    assert!(log.kernel_dims.values().all(|&k| k == 0));

    // Expansion matrices exist and are invertible in every degree.
    for m in 0..=4u32 {
        let degree = scalar(m);
        assert!(basis.expansion.contains_key(&degree), "degree {m}");
        assert!(basis.expansion_inv.contains_key(&degree), "degree {m}");
        let prod = basis.expansion[&degree].mul(&basis.expansion_inv[&degree]);
        assert_eq!(prod, Matrix::identity(basis.seq_list(&degree).len()));
    }

    // The emitted z-elements coincide with the triangularizing basis: for
    // each size the two families agree as sets of coordinate vectors.
    let mut expander = TExpander::new();
    for m in 0..=4u32 {
        let degree = scalar(m);
        let mut zs: Vec<Vec<Rat>> = basis
            .seq_list(&degree)
            .iter()
            .map(|v| coords(h, &degree, &basis.z_element(h, v)))
            .collect();
        let mut ts: Vec<Vec<Rat>> = all_perms(m as usize)
            .iter()
            .map(|p| {
                let mut e = Element::zero();
                for (q, c) in expander.expand(p) {
                    let id = h.basis.id_of(&format!("F:{}", perm_string(&q))).unwrap();
                    e.add_term(id, c);
                }
                coords(h, &degree, &e)
            })
            .collect();
        zs.sort();
        ts.sort();
        assert_eq!(zs, ts, "size {m}");
    }

    let reports = verify_pbw_conditions(h, basis);
    assert!(reports.all_passed(), "{reports}");
    println!("ACCEPTANCE 11 basis construction from connected generators: PASS");
}

#[test]
fn criterion_12_basis_property_suite() {
    let h = &*SSYM4;
    let (basis, _log) = &*PBW4;
    let rank = 1usize;

    fn arrangements(entries: &[usize]) -> Vec<Vec<usize>> {
        if entries.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for i in 0..entries.len() {
            if !seen.insert(entries[i]) {
                continue;
            }
            let mut rest = entries.to_vec();
            rest.remove(i);
            for mut tail in arrangements(&rest) {
                tail.insert(0, entries[i]);
                out.push(tail);
            }
        }
        out
    }

    // Straightening with finite descent: every arrangement of a sorted
    // sequence evaluates to the sorted product with unit coefficient plus
    // strictly earlier sequences; the drop is strict and each stratum is
    // finite, so rewriting terminates.
    for m in 1..=4u32 {
        let degree = scalar(m);
        let seqs = basis.seq_list(&degree);
        assert!(seqs.len() <= h.basis.of_degree(&degree).len());
        for (vpos, v) in seqs.iter().enumerate() {
            for raw in arrangements(&v.0) {
                let mut prod = h.unit_element();
                for &i in &raw {
                    prod = h.multiply(&prod, &basis.family.generator(i).element);
                }
                let coords_z = basis.to_pbw_coords(h, &degree, &prod);
                assert_eq!(coords_z[vpos], rat(1), "arrangement {raw:?}");
                for (j, w) in seqs.iter().enumerate() {
                    if j != vpos && !coords_z[j].is_zero() {
                        assert_eq!(
                            seq_compare(&basis.family, rank, SeqOrder::Right, &w.0, &v.0),
                            Ordering::Less,
                            "arrangement {raw:?} leaks {}",
                            w.label(&basis.family)
                        );
                    }
                }
            }
        }
    }

    // Binomial coproduct support: in z (x) z coordinates, a complementary
    // split of V carries exactly the run-wise binomial coefficient, and any
    // other nonzero entry rearranges to a strictly earlier sequence.
    for m in 0..=4u32 {
        let degree = scalar(m);
        for v in basis.seq_list(&degree) {
            let cop = h.comultiply(&basis.z_element(h, v));
            for (d1, n1) in h.basis.dims() {
                let d2 = match degree.checked_sub(&d1) {
                    Some(d) => d,
                    None => continue,
                };
                let n2 = h.basis.of_degree(&d2).len();
                let mut cmat = Matrix::zeros(n1, n2);
                for ((a, b), cc) in cop.terms() {
                    if h.basis.degree(a) == &d1 && h.basis.degree(b) == &d2 {
                        cmat.set(h.basis.pos_in_degree(a), h.basis.pos_in_degree(b), cc.clone());
                    }
                }
                let zmat = basis.expansion_inv[&d1]
                    .mul(&cmat)
                    .mul(&basis.expansion_inv[&d2].transpose());
                let left = basis.seq_list(&d1);
                let right = basis.seq_list(&d2);
                for (i, w) in left.iter().enumerate() {
                    for (j, r) in right.iter().enumerate() {
                        let joined: Vec<usize> =
                            w.0.iter().chain(r.0.iter()).copied().collect();
                        let (pi, _) = seq_rearrange(&basis.family, &joined);
                        if &pi == v {
                            let (binom, complement) = seq_binomial(v, w).unwrap();
                            assert_eq!(&complement, r, "complement mismatch");
                            assert_eq!(
                                zmat.get(i, j),
                                &binom,
                                "split {} | {} of {}",
                                w.label(&basis.family),
                                r.label(&basis.family),
                                v.label(&basis.family)
                            );
                        } else if !zmat.get(i, j).is_zero() {
                            assert_eq!(
                                seq_compare(&basis.family, rank, SeqOrder::Right, &pi.0, &v.0),
                                Ordering::Less,
                                "defect {} | {} of {} does not drop",
                                w.label(&basis.family),
                                r.label(&basis.family),
                                v.label(&basis.family)
                            );
                        }
                    }
                }
            }
        }
    }

    // Diagonal transport: the double power map has diagonal 2^(length) in
    // the constructed sequence order.
    let ctx = ConvolutionContext::new(h);
    let psi2 = ctx.adams(2);
    for m in 0..=4u32 {
        let report = triangular_check(basis, &psi2, &scalar(m), |v| int_pow(2, v.len()));
        assert!(report.triangular, "size {m}: {:?}", report.first_violation);
        assert!(report.diagonal_ok, "size {m}");
    }

    // Reorder robustness: listing same-degree generators in reverse still
    // yields a basis satisfying all conditions.
    let mut reordered = Vec::new();
    for m in 1..=4usize {
        let mut block: Vec<(String, Element)> = Vec::new();
        for p in connected_of_degree(m) {
            let label = format!("F:{}", perm_string(&p));
            let id = h.basis.id_of(&label).unwrap();
            block.push((label, Element::basis(id)));
        }
        block.reverse();
        reordered.extend(block);
    }
    let (basis2, _log2) = construct_pbw(h, &reordered, 4).unwrap();
    for m in 0..=4u32 {
        assert_eq!(
            basis2.seq_list(&scalar(m)).len(),
            basis.seq_list(&scalar(m)).len()
        );
    }
    let reports = verify_pbw_conditions(h, &basis2);
    assert!(reports.all_passed(), "{reports}");

    println!("ACCEPTANCE 12 basis property suite: PASS");
}
