//! Built-in word Hopf algebras: the tensor (free/concatenation) algebra
//! with primitive generators, and its graded dual, the shuffle algebra with
//! deconcatenation coproduct. Both are connected and graded by total
//! generator degree; the tensor instance is cocommutative and the shuffle
//! instance commutative.

use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use crate::hopf::{Element, GradedBasis, HopfData, LabelId};
use crate::report::{CheckReport, ReportSet};
use crate::scalar::{rat, Rat};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Tensor,
    Shuffle,
}

/// Recipe for a built-in instance: which algebra, the generator degrees
/// (one positive number per generator), and the truncation bound.
#[derive(Clone, Debug)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub degrees: Vec<u32>,
    pub bound: u32,
}

impl InstanceSpec {
    pub fn new(kind: InstanceKind, degrees: Vec<u32>, bound: u32) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Invalid("need at least one generator".into()));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::Invalid("generator degrees must be positive".into()));
        }
        Ok(InstanceSpec {
            kind,
            degrees,
            bound,
        })
    }

    pub fn build(&self) -> Result<HopfData> {
        match self.kind {
            InstanceKind::Tensor => build_tensor_hopf(self),
            InstanceKind::Shuffle => build_shuffle_hopf(self),
        }
    }
}

/// Generator labels: single letters, skipping `e` (reserved for the empty
/// word).
fn generator_labels(count: usize) -> Result<Vec<char>> {
    const LETTERS: &str = "xyzabcdfghijklmnopqrstuvw";
    if count > LETTERS.len() {
        return Err(Error::Invalid(format!(
            "at most {} generators are supported",
            LETTERS.len()
        )));
    }
    Ok(LETTERS.chars().take(count).collect())
}

fn word_label(letters: &[char], word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|&i| letters[i]).collect()
    }
}

/// All words of total degree ≤ bound, grouped shortest-first then by letter
/// index; the listed order fixes the within-degree basis order.
fn words_within(degrees: &[u32], bound: u32) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<(Vec<usize>, u32)> = vec![(Vec::new(), 0)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, d) in &frontier {
            for (i, &di) in degrees.iter().enumerate() {
                let nd = d + di;
                if nd <= bound {
                    let mut w2 = w.clone();
                    w2.push(i);
                    next.push((w2, nd));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

struct WordBasis {
    basis: GradedBasis,
    words: Vec<Vec<usize>>,
    id_of_word: HashMap<Vec<usize>, LabelId>,
}

fn word_basis(spec: &InstanceSpec) -> Result<WordBasis> {
    let letters = generator_labels(spec.degrees.len())?;
    let words = words_within(&spec.degrees, spec.bound);
    let mut basis = GradedBasis::new();
    let mut id_of_word = HashMap::new();
    for w in &words {
        let degree: u32 = w.iter().map(|&i| spec.degrees[i]).sum();
        let id = basis.add(word_label(&letters, w), MultiDegree::scalar(degree))?;
        id_of_word.insert(w.clone(), id);
    }
    Ok(WordBasis {
        basis,
        words,
        id_of_word,
    })
}

/// Free algebra on the generators: concatenation product, generators
/// primitive, coproduct extended multiplicatively (sum over subsets of
/// letter positions, each side keeping its relative order).
pub fn build_tensor_hopf(spec: &InstanceSpec) -> Result<HopfData> {
    let wb = word_basis(spec)?;
    let bound = spec.bound;
    let mut product = HashMap::new();
    for (i, u) in wb.words.iter().enumerate() {
        for (j, v) in wb.words.iter().enumerate() {
            let du: u32 = u.iter().map(|&l| spec.degrees[l]).sum();
            let dv: u32 = v.iter().map(|&l| spec.degrees[l]).sum();
            if du + dv > bound {
                continue;
            }
            let mut w = u.clone();
            w.extend_from_slice(v);
            product.insert((i, j), Element::basis(wb.id_of_word[&w]));
        }
    }
    let mut coproduct = Vec::with_capacity(wb.words.len());
    for w in &wb.words {
        let n = w.len();
        let mut terms: BTreeMap<(LabelId, LabelId), Rat> = BTreeMap::new();
        for mask in 0u32..(1 << n) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (pos, &letter) in w.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    left.push(letter);
                } else {
                    right.push(letter);
                }
            }
            *terms
                .entry((wb.id_of_word[&left], wb.id_of_word[&right]))
                .or_insert_with(|| rat(0)) += rat(1);
        }
        coproduct.push(terms.into_iter().map(|((a, b), c)| (a, b, c)).collect());
    }
    HopfData::assemble("tensor", wb.basis, product, coproduct)
}

/// All interleavings of `u` and `v` (with multiplicity).
fn shuffles(u: &[usize], v: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    fn go(u: &[usize], v: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, i64>) {
        if u.is_empty() && v.is_empty() {
            *out.entry(prefix.clone()).or_insert(0) += 1;
            return;
        }
        if let Some((&h, rest)) = u.split_first() {
            prefix.push(h);
            go(rest, v, prefix, out);
            prefix.pop();
        }
        if let Some((&h, rest)) = v.split_first() {
            prefix.push(h);
            go(u, rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeMap::new();
    go(u, v, &mut Vec::new(), &mut out);
    out
}

/// Shuffle algebra on the generators: shuffle product with multiplicities,
/// deconcatenation coproduct. Graded dual of the tensor instance.
pub fn build_shuffle_hopf(spec: &InstanceSpec) -> Result<HopfData> {
    let wb = word_basis(spec)?;
    let bound = spec.bound;
    let mut product = HashMap::new();
    for (i, u) in wb.words.iter().enumerate() {
        for (j, v) in wb.words.iter().enumerate() {
            let du: u32 = u.iter().map(|&l| spec.degrees[l]).sum();
            let dv: u32 = v.iter().map(|&l| spec.degrees[l]).sum();
            if du + dv > bound {
                continue;
            }
            let mut elem = Element::zero();
            for (w, mult) in shuffles(u, v) {
                elem.add_term(wb.id_of_word[&w], rat(mult));
            }
            product.insert((i, j), elem);
        }
    }
    let mut coproduct = Vec::with_capacity(wb.words.len());
    for w in &wb.words {
        let terms: Vec<(LabelId, LabelId, Rat)> = (0..=w.len())
            .map(|cut| {
                (
                    wb.id_of_word[&w[..cut].to_vec()],
                    wb.id_of_word[&w[cut..].to_vec()],
                    rat(1),
                )
            })
            .collect();
        coproduct.push(terms);
    }
    HopfData::assemble("shuffle", wb.basis, product, coproduct)
}

/// Checks that two Hopf data sets with identical basis labels are graded
/// duals under the label-matching pairing: the structure constants of each
/// product must equal those of the other coproduct.
pub fn verify_dual_pairing(a: &HopfData, b: &HopfData) -> ReportSet {
    let mut set = ReportSet::new();

    // Label sets must coincide.
    let mut labels_match = a.basis.len() == b.basis.len();
    if labels_match {
        for id in 0..a.basis.len() {
            if b.basis.id_of(a.basis.label(id)).is_none() {
                labels_match = false;
                break;
            }
        }
    }
    set.push(if labels_match {
        CheckReport::pass("bases carry the same labels")
    } else {
        CheckReport::fail("bases carry the same labels", "label sets differ")
    });
    if !labels_match {
        return set;
    }
    set.push(pairing_direction(a, b, "products of the first match coproducts of the second"));
    set.push(pairing_direction(b, a, "products of the second match coproducts of the first"));
    set
}

/// Checks `⟨u·v, w⟩_first = ⟨u⊗v, Δ_second(w)⟩` on all in-bound triples,
/// translating indices through the shared labels.
fn pairing_direction(first: &HopfData, second: &HopfData, name: &str) -> CheckReport {
    let other_id = |id: LabelId| -> LabelId {
        second
            .basis
            .id_of(first.basis.label(id))
            .expect("matching labels")
    };
    for u in 0..first.basis.len() {
        for v in 0..first.basis.len() {
            let sum = first
                .basis
                .degree(u)
                .add(first.basis.degree(v))
                .expect("rank");
            if sum.max_parts() > first.bound() {
                continue;
            }
            let prod = first.product_of(u, v);
            for &w in first.basis.of_degree(&sum) {
                let lhs = prod.coeff(w);
                let (ou, ov, ow) = (other_id(u), other_id(v), other_id(w));
                let mut rhs = rat(0);
                for (l, r, c) in second.coproduct_of(ow) {
                    if *l == ou && *r == ov {
                        rhs += c.clone();
                    }
                }
                if lhs != rhs {
                    return CheckReport::fail(
                        name,
                        format!(
                            "⟨{}·{}, {}⟩ = {} but the dual coproduct gives {}",
                            first.basis.label(u),
                            first.basis.label(v),
                            first.basis.label(w),
                            lhs,
                            rhs
                        ),
                    );
                }
            }
        }
    }
    CheckReport::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolution::ConvolutionContext;

    fn spec(kind: InstanceKind, degrees: &[u32], bound: u32) -> InstanceSpec {
        InstanceSpec::new(kind, degrees.to_vec(), bound).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(InstanceSpec::new(InstanceKind::Tensor, vec![], 3).is_err());
        assert!(InstanceSpec::new(InstanceKind::Tensor, vec![1, 0], 3).is_err());
        assert!(InstanceSpec::new(InstanceKind::Shuffle, vec![1, 2], 3).is_ok());
    }

    #[test]
    fn tensor_dims_and_primitive_coproduct() {
        let h = build_tensor_hopf(&spec(InstanceKind::Tensor, &[1, 1], 4)).unwrap();
        for m in 0..=4u32 {
            let d = h.basis.of_degree(&MultiDegree::scalar(m)).len();
            assert_eq!(d, 1usize << m, "degree {m}");
        }
        // Δ(xy) = xy⊗1 + x⊗y + y⊗x + 1⊗xy.
        let id = |s: &str| h.basis.id_of(s).unwrap();
        let delta = h.comultiply(&Element::basis(id("xy")));
        assert_eq!(delta.coeff(id("xy"), id("e")), rat(1));
        assert_eq!(delta.coeff(id("x"), id("y")), rat(1));
        assert_eq!(delta.coeff(id("y"), id("x")), rat(1));
        assert_eq!(delta.coeff(id("e"), id("xy")), rat(1));
        assert_eq!(delta.terms().count(), 4);
        // Cocommutativity within the bound.
        for l in 0..h.basis.len() {
            let d = h.comultiply(&Element::basis(l));
            for ((x, y), c) in d.terms() {
                assert_eq!(d.coeff(y, x), c.clone(), "label {}", h.basis.label(l));
            }
        }
        assert!(h.verify_bialgebra().all_passed());
    }

    #[test]
    fn tensor_single_generator_power_map() {
        let h = build_tensor_hopf(&spec(InstanceKind::Tensor, &[1], 3)).unwrap();
        for m in 0..=3u32 {
            assert_eq!(h.basis.of_degree(&MultiDegree::scalar(m)).len(), 1);
        }
        let ctx = ConvolutionContext::new(&h);
        let psi2 = ctx.adams(2);
        let xx = h.basis.id_of("xx").unwrap();
        assert_eq!(
            psi2.apply(&h.basis, &Element::basis(xx)),
            Element::from_term(xx, rat(4))
        );
    }

    #[test]
    fn shuffle_product_and_deconcatenation() {
        let h = build_shuffle_hopf(&spec(InstanceKind::Shuffle, &[1, 1], 4)).unwrap();
        let id = |s: &str| h.basis.id_of(s).unwrap();
        // x ⧢ x = 2·xx.
        let p = h.product_of(id("x"), id("x"));
        assert_eq!(*p, Element::from_term(id("xx"), rat(2)));
        // Δ_dec(xy) = xy⊗1 + x⊗y + 1⊗xy (no y⊗x term).
        let delta = h.comultiply(&Element::basis(id("xy")));
        assert_eq!(delta.coeff(id("xy"), id("e")), rat(1));
        assert_eq!(delta.coeff(id("x"), id("y")), rat(1));
        assert_eq!(delta.coeff(id("y"), id("x")), rat(0));
        assert_eq!(delta.coeff(id("e"), id("xy")), rat(1));
        // Commutativity.
        for a in 0..h.basis.len() {
            for b in 0..h.basis.len() {
                let sum = h.basis.degree(a).add(h.basis.degree(b)).unwrap();
                if sum.max_parts() <= h.bound() {
                    assert_eq!(h.product_of(a, b), h.product_of(b, a));
                }
            }
        }
        assert!(h.verify_bialgebra().all_passed());
    }

    #[test]
    fn shuffle_degree_two_spectrum_with_mixed_degrees() {
        // Generators of degrees {1,2}: the degree-2 stratum is {y, xx} and
        // the power map for n=2 acts diagonally with eigenvalues {2, 4}.
        let h = build_shuffle_hopf(&spec(InstanceKind::Shuffle, &[1, 2], 4)).unwrap();
        let ctx = ConvolutionContext::new(&h);
        let psi2 = ctx.adams(2);
        let y = h.basis.id_of("y").unwrap();
        let xx = h.basis.id_of("xx").unwrap();
        assert_eq!(
            psi2.apply(&h.basis, &Element::basis(y)),
            Element::from_term(y, rat(2))
        );
        assert_eq!(
            psi2.apply(&h.basis, &Element::basis(xx)),
            Element::from_term(xx, rat(4))
        );
        let block = psi2.block(&MultiDegree::scalar(2));
        assert!(block.lower_violations().is_empty());
        let mp = block.min_poly();
        assert!(mp.is_squarefree());
    }

    #[test]
    fn tensor_and_shuffle_are_dual() {
        let t = build_tensor_hopf(&spec(InstanceKind::Tensor, &[1, 2], 4)).unwrap();
        let s = build_shuffle_hopf(&spec(InstanceKind::Shuffle, &[1, 2], 4)).unwrap();
        let report = verify_dual_pairing(&t, &s);
        assert!(report.all_passed(), "{report}");
        // Fault injection: two independent generators of degree 1 are NOT
        // dual to the mixed-degree shuffle algebra.
        let wrong = build_tensor_hopf(&spec(InstanceKind::Tensor, &[1, 1], 4)).unwrap();
        assert!(!verify_dual_pairing(&wrong, &s).all_passed());
    }

    #[test]
    fn fibonacci_dimensions_for_degrees_one_two() {
        let h = build_tensor_hopf(&spec(InstanceKind::Tensor, &[1, 2], 5)).unwrap();
        let dims: Vec<usize> = (0..=5u32)
            .map(|m| h.basis.of_degree(&MultiDegree::scalar(m)).len())
            .collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 5, 8]);
    }
}
