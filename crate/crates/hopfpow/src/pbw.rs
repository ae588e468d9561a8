//! Poincaré–Birkhoff–Witt bases from Lyndon words: sorted-sequence
//! combinatorics over an ordered generator family, the left/right sequence
//! orders, a constructor that extracts irreducible Lyndon words from a
//! generating set by exact elimination, structural verification of the
//! basis conditions, and the triangularity check for power operators.

use crate::error::{Error, Result};
use crate::grading::{degrees_up_to, MultiDegree};
use crate::hopf::{Element, GradedMap, HopfData};
use crate::matrix::{Matrix, RowSpan};
use crate::report::{CheckReport, ReportSet};
use crate::scalar::{rat, Rat};
use crate::words::{bracket_tree_by, is_lyndon_by, pseudo_lex_compare_by};
use num::traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

/// One generator: a homogeneous element of positive degree, its display
/// label, the word over the input alphabet that defined it (empty for
/// hand-built families), and its height cap (`None` = unbounded).
#[derive(Clone, Debug)]
pub struct FamilyGenerator {
    pub label: String,
    pub degree: MultiDegree,
    pub word: Vec<usize>,
    pub element: Element,
    pub height: Option<usize>,
}

/// An ordered family of generators; the strict order on generators is the
/// index order of `items`.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    items: Vec<FamilyGenerator>,
}

impl GeneratorFamily {
    pub fn new(items: Vec<FamilyGenerator>) -> Result<Self> {
        for g in &items {
            if g.degree.is_zero() {
                return Err(Error::Invalid(format!(
                    "generator {} has degree zero",
                    g.label
                )));
            }
            if let Some(h) = g.height {
                if h < 2 {
                    return Err(Error::Invalid(format!(
                        "generator {} has height {h} < 2",
                        g.label
                    )));
                }
            }
        }
        Ok(Self { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn generator(&self, i: usize) -> &FamilyGenerator {
        &self.items[i]
    }

    pub fn generators(&self) -> &[FamilyGenerator] {
        &self.items
    }

    /// Indices of generators of the given degree, ascending in the family
    /// order.
    pub fn of_degree(&self, degree: &MultiDegree) -> Vec<usize> {
        (0..self.items.len())
            .filter(|&i| &self.items[i].degree == degree)
            .collect()
    }
}

/// A nondecreasing sequence of generator indices with run multiplicities
/// below the generators' height caps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SortedSeq(pub Vec<usize>);

impl SortedSeq {
    pub fn empty() -> Self {
        SortedSeq(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, family: &GeneratorFamily, rank: usize) -> MultiDegree {
        let mut acc = MultiDegree::zero(rank);
        for &i in &self.0 {
            acc = acc.add(&family.generator(i).degree).expect("same rank");
        }
        acc
    }

    /// Maximal runs of equal entries as `(generator, multiplicity)`.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &i in &self.0 {
            match out.last_mut() {
                Some((g, m)) if *g == i => *m += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    /// Respects every height cap.
    pub fn within_heights(&self, family: &GeneratorFamily) -> bool {
        self.runs().iter().all(|&(g, m)| match family.generator(g).height {
            Some(h) => m < h,
            None => true,
        })
    }

    pub fn label(&self, family: &GeneratorFamily) -> String {
        if self.0.is_empty() {
            "∅".to_string()
        } else {
            self.0
                .iter()
                .map(|&i| family.generator(i).label.clone())
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// Which end of two equal-degree sequences decides first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqOrder {
    Left,
    Right,
}

/// Sequence order: strictly smaller total degree (graded-lexicographic)
/// first; at equal degree the first differing entry decides, scanning from
/// the left or from the right with the sequences aligned at that end.
pub fn seq_compare(
    family: &GeneratorFamily,
    rank: usize,
    variant: SeqOrder,
    u: &[usize],
    v: &[usize],
) -> Ordering {
    let du = SortedSeq(u.to_vec()).degree(family, rank);
    let dv = SortedSeq(v.to_vec()).degree(family, rank);
    match du.cmp(&dv) {
        Ordering::Equal => {}
        other => return other,
    }
    match variant {
        SeqOrder::Left => {
            for (a, b) in u.iter().zip(v) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
        }
        SeqOrder::Right => {
            for (a, b) in u.iter().rev().zip(v.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
        }
    }
    Ordering::Equal
}

/// All sorted sequences of the family with degree exactly γ, ascending in
/// the right sequence order.
pub fn enumerate_sorted(
    family: &GeneratorFamily,
    gamma: &MultiDegree,
) -> Vec<SortedSeq> {
    let rank = gamma.rank();
    fn go(
        family: &GeneratorFamily,
        start: usize,
        remaining: &MultiDegree,
        prefix: &mut Vec<usize>,
        out: &mut Vec<SortedSeq>,
    ) {
        if remaining.is_zero() {
            out.push(SortedSeq(prefix.clone()));
            return;
        }
        for i in start..family.len() {
            let g = family.generator(i);
            if let Some(rest) = remaining.checked_sub(&g.degree) {
                let run = prefix.iter().rev().take_while(|&&x| x == i).count();
                if let Some(h) = g.height {
                    if run + 1 >= h {
                        continue;
                    }
                }
                prefix.push(i);
                go(family, i, &rest, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(family, 0, gamma, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| seq_compare(family, rank, SeqOrder::Right, &a.0, &b.0));
    out
}

/// Sorts a raw sequence into its nondecreasing rearrangement and reports
/// whether the result respects the height caps.
pub fn seq_rearrange(family: &GeneratorFamily, raw: &[usize]) -> (SortedSeq, bool) {
    let mut entries = raw.to_vec();
    entries.sort_unstable();
    let seq = SortedSeq(entries);
    let ok = seq.within_heights(family);
    (seq, ok)
}

/// For `W` a run-wise subsequence of `V`: the product of per-run binomial
/// coefficients and the complementary sequence `V/W`.
pub fn seq_binomial(v: &SortedSeq, w: &SortedSeq) -> Result<(Rat, SortedSeq)> {
    let runs_v = v.runs();
    let runs_w: BTreeMap<usize, usize> = w.runs().into_iter().collect();
    let mut seen: HashSet<usize> = HashSet::new();
    let mut coeff = Rat::one();
    let mut rest = Vec::new();
    for (g, p) in &runs_v {
        let q = runs_w.get(g).copied().unwrap_or(0);
        seen.insert(*g);
        if q > *p {
            return Err(Error::Invalid("not a subsequence".into()));
        }
        coeff *= Rat::from_integer(num::integer::binomial(
            num::BigInt::from(*p),
            num::BigInt::from(q),
        ));
        rest.extend(std::iter::repeat_n(*g, p - q));
    }
    if runs_w.keys().any(|g| !seen.contains(g)) {
        return Err(Error::Invalid("not a subsequence".into()));
    }
    Ok((coeff, SortedSeq(rest)))
}

/// All splittings of `V` into a subsequence and its complement, with the
/// binomial coefficient of each: `(coeff, W, V/W)`.
pub fn seq_subsequences(v: &SortedSeq) -> Vec<(Rat, SortedSeq, SortedSeq)> {
    let runs = v.runs();
    let mut out = Vec::new();
    fn go(
        runs: &[(usize, usize)],
        i: usize,
        coeff: Rat,
        w: &mut Vec<usize>,
        rest: &mut Vec<usize>,
        out: &mut Vec<(Rat, SortedSeq, SortedSeq)>,
    ) {
        if i == runs.len() {
            out.push((coeff, SortedSeq(w.clone()), SortedSeq(rest.clone())));
            return;
        }
        let (g, p) = runs[i];
        for q in 0..=p {
            let c = &coeff
                * Rat::from_integer(num::integer::binomial(
                    num::BigInt::from(p),
                    num::BigInt::from(q),
                ));
            w.extend(std::iter::repeat_n(g, q));
            rest.extend(std::iter::repeat_n(g, p - q));
            go(runs, i + 1, c, w, rest, out);
            w.truncate(w.len() - q);
            rest.truncate(rest.len() - (p - q));
        }
    }
    go(&runs, 0, Rat::one(), &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// The assembled basis: per degree, the sorted sequences (right-order
/// ascending) and the invertible change of basis expressing each product
/// `z_V` in the underlying graded basis.
#[derive(Clone, Debug)]
pub struct PbwBasis {
    pub family: GeneratorFamily,
    pub bound: u32,
    pub sequences: BTreeMap<MultiDegree, Vec<SortedSeq>>,
    pub expansion: BTreeMap<MultiDegree, Matrix>,
    pub expansion_inv: BTreeMap<MultiDegree, Matrix>,
}

fn coords(h: &HopfData, degree: &MultiDegree, x: &Element) -> Vec<Rat> {
    let ids = h.basis.of_degree(degree);
    let mut out = vec![Rat::zero(); ids.len()];
    for (id, c) in x.terms() {
        out[h.basis.pos_in_degree(id)] = c.clone();
    }
    out
}

impl PbwBasis {
    /// Product of the generator elements along the sequence.
    pub fn z_element(&self, h: &HopfData, seq: &SortedSeq) -> Element {
        z_of_seq(h, &self.family, seq)
    }

    /// Enumerates sequences per degree, expands each `z_V`, and inverts the
    /// change of basis; fails if any degree stratum is not square or not
    /// invertible.
    pub fn assemble(h: &HopfData, family: GeneratorFamily, bound: u32) -> Result<Self> {
        if bound > h.bound() {
            return Err(Error::Invalid(format!(
                "requested bound {bound} exceeds the algebra bound {}",
                h.bound()
            )));
        }
        let rank = h.basis.grading_rank();
        for g in family.generators() {
            match h.element_degree(&g.element)? {
                Some(d) if d == g.degree => {}
                got => {
                    return Err(Error::Invalid(format!(
                        "generator {} is not homogeneous of its declared degree \
                         (found {got:?})",
                        g.label
                    )))
                }
            }
        }
        let mut sequences = BTreeMap::new();
        let mut expansion = BTreeMap::new();
        let mut expansion_inv = BTreeMap::new();
        for degree in degrees_up_to(rank, bound) {
            let dim = h.basis.of_degree(&degree).len();
            let seqs = enumerate_sorted(&family, &degree);
            if seqs.len() != dim {
                return Err(Error::Invalid(format!(
                    "degree {degree}: {} sorted sequences for dimension {dim}",
                    seqs.len()
                )));
            }
            let mut mat = Matrix::zeros(dim, dim);
            for (j, seq) in seqs.iter().enumerate() {
                let z = z_of_seq(h, &family, seq);
                for (row, c) in coords(h, &degree, &z).into_iter().enumerate() {
                    mat.set(row, j, c);
                }
            }
            let inv = mat.inverse().ok_or_else(|| {
                Error::Invalid(format!(
                    "degree {degree}: sequence products do not form a basis"
                ))
            })?;
            sequences.insert(degree.clone(), seqs);
            expansion.insert(degree.clone(), mat);
            expansion_inv.insert(degree, inv);
        }
        Ok(Self {
            family,
            bound,
            sequences,
            expansion,
            expansion_inv,
        })
    }

    /// Coordinates of a homogeneous element in the `z_V` basis of its
    /// degree.
    pub fn to_pbw_coords(&self, h: &HopfData, degree: &MultiDegree, x: &Element) -> Vec<Rat> {
        self.expansion_inv[degree].apply_vec(&coords(h, degree, x))
    }

    pub fn seq_list(&self, degree: &MultiDegree) -> &[SortedSeq] {
        &self.sequences[degree]
    }
}

fn z_of_seq(h: &HopfData, family: &GeneratorFamily, seq: &SortedSeq) -> Element {
    let mut acc = h.unit_element();
    for &i in &seq.0 {
        acc = h.multiply(&acc, &family.generator(i).element);
    }
    acc
}

/// What the constructor saw: reducible words, per-degree kernel
/// dimensions of the evaluation map, and free-form notes.
#[derive(Clone, Debug, Default)]
pub struct ConstructionLog {
    pub reducible: BTreeMap<MultiDegree, Vec<String>>,
    pub kernel_dims: BTreeMap<MultiDegree, usize>,
    pub notes: Vec<String>,
}

fn word_display(input: &[(String, Element)], word: &[usize]) -> String {
    word.iter()
        .map(|&i| input[i].0.clone())
        .collect::<Vec<_>>()
        .join(".")
}

fn bracket_display(input: &[(String, Element)], tree: &crate::words::ShirshovTree<usize>) -> String {
    match tree {
        crate::words::ShirshovTree::Leaf(i) => input[*i].0.clone(),
        crate::words::ShirshovTree::Node(l, r) => format!(
            "[{},{}]",
            bracket_display(input, l),
            bracket_display(input, r)
        ),
    }
}

/// The fallback generator family for an arbitrary algebra: every basis
/// element of positive degree, degrees ascending then listed order. Always
/// spans, so the constructor merely has to discard the reducible words.
pub fn basis_generator_input(h: &HopfData) -> Vec<(String, Element)> {
    let mut out = Vec::new();
    for (degree, _) in h.basis.dims() {
        if degree.is_zero() {
            continue;
        }
        for &id in h.basis.of_degree(&degree) {
            out.push((h.basis.label(id).to_string(), Element::basis(id)));
        }
    }
    out
}

/// Builds a PBW basis from an ordered, degree-compatible list of
/// homogeneous generators of positive degree, by working up the degrees:
/// evaluate all words of each degree, find the words whose image already
/// lies in the span of lexicographically smaller ones (the reducible
/// words), keep the irreducible Lyndon words as basis generators with
/// their bracketed evaluations, and assemble the expansion.
///
/// Fails if the input does not span some graded component within bound, or
/// if any power of a kept generator turns out reducible (which the
/// rational theory rules out).
pub fn construct_pbw(
    h: &HopfData,
    input: &[(String, Element)],
    bound: u32,
) -> Result<(PbwBasis, ConstructionLog)> {
    if bound > h.bound() {
        return Err(Error::Invalid(format!(
            "requested bound {bound} exceeds the algebra bound {}",
            h.bound()
        )));
    }
    let rank = h.basis.grading_rank();
    let mut degrees = Vec::with_capacity(input.len());
    let images: Vec<Element> = input.iter().map(|(_, e)| e.clone()).collect();
    for (label, element) in input {
        match h.element_degree(element)? {
            Some(d) if !d.is_zero() => degrees.push(d),
            got => {
                return Err(Error::Invalid(format!(
                    "generator {label} must be homogeneous of positive degree \
                     (found {got:?})"
                )))
            }
        }
    }
    for w in degrees.windows(2) {
        if w[0] > w[1] {
            return Err(Error::Invalid(
                "generator list must be ordered with nondecreasing degrees".into(),
            ));
        }
    }

    let mut log = ConstructionLog::default();
    let mut reducible_words: HashSet<Vec<usize>> = HashSet::new();
    let mut kept: Vec<(Vec<usize>, MultiDegree)> = Vec::new();

    let letter_cmp = |a: &usize, b: &usize| a.cmp(b);
    for degree in degrees_up_to(rank, bound) {
        if degree.is_zero() {
            continue;
        }
        let dim = h.basis.of_degree(&degree).len();
        let mut words: Vec<Vec<usize>> = Vec::new();
        fn gen_words(
            degrees: &[MultiDegree],
            remaining: &MultiDegree,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if remaining.is_zero() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..degrees.len() {
                if let Some(rest) = remaining.checked_sub(&degrees[i]) {
                    prefix.push(i);
                    gen_words(degrees, &rest, prefix, out);
                    prefix.pop();
                }
            }
        }
        gen_words(&degrees, &degree, &mut Vec::new(), &mut words);
        words.sort_by(|a, b| pseudo_lex_compare_by(a, b, &letter_cmp));

        let mut span = RowSpan::new(dim);
        let mut reducible_here = Vec::new();
        for word in &words {
            let img = h.evaluate_word(&images, word)?;
            if span.insert(coords(h, &degree, &img)) {
                if is_lyndon_by(word, &letter_cmp) {
                    kept.push((word.clone(), degree.clone()));
                }
            } else {
                reducible_here.push(word_display(input, word));
                reducible_words.insert(word.clone());
            }
        }
        if span.rank() < dim {
            return Err(Error::Invalid(format!(
                "generators do not span degree {degree}: rank {} of {dim}",
                span.rank()
            )));
        }
        log.kernel_dims.insert(degree.clone(), words.len() - span.rank());
        if !reducible_here.is_empty() {
            log.reducible.insert(degree.clone(), reducible_here);
        }
    }

    // Heights: a reducible power of a kept generator would mean a finite
    // height, which the rational theory forbids.
    for (word, degree) in &kept {
        let mut power = word.clone();
        let mut k = 2usize;
        loop {
            power.extend_from_slice(word);
            let total = degree.max_parts() as usize * k;
            if total as u32 > bound {
                break;
            }
            if reducible_words.contains(&power) {
                return Err(Error::Invalid(format!(
                    "power {k} of generator word {} is reducible: finite height \
                     detected, which contradicts characteristic-zero theory",
                    word_display(input, word)
                )));
            }
            k += 1;
        }
    }

    // The family order is the lexicographic order (extensions first) on
    // defining words.
    kept.sort_by(|a, b| pseudo_lex_compare_by(&a.0, &b.0, &letter_cmp));
    let mut items = Vec::with_capacity(kept.len());
    for (word, degree) in kept {
        let tree = bracket_tree_by(&word, &letter_cmp, &|w: &[usize]| {
            word_display(input, w)
        })?;
        let element = h.evaluate_tree(&images, &tree)?;
        items.push(FamilyGenerator {
            label: bracket_display(input, &tree),
            degree,
            word,
            element,
            height: None,
        });
    }
    log.notes.push(format!(
        "{} irreducible Lyndon words kept as generators",
        items.len()
    ));
    let family = GeneratorFamily::new(items)?;
    let basis = PbwBasis::assemble(h, family, bound)?;
    Ok((basis, log))
}

/// Structural verification of the basis conditions: the coproduct of every
/// generator is primitive modulo earlier generators on both tensor legs;
/// commuting two generators costs only terms in earlier generators, with
/// unit leading coefficient; height caps (where finite) push the capped
/// power into earlier generators.
pub fn verify_pbw_conditions(h: &HopfData, basis: &PbwBasis) -> ReportSet {
    let mut reports = ReportSet::new();
    let family = &basis.family;
    let rank = h.basis.grading_rank();

    // Per-stratum totality of the generator order is index order: distinct
    // indices always compare; record the stratum sizes.
    let mut strata: BTreeMap<MultiDegree, usize> = BTreeMap::new();
    for g in family.generators() {
        *strata.entry(g.degree.clone()).or_insert(0) += 1;
    }
    reports.push(
        CheckReport::pass("generator order total on each degree stratum").with_detail(
            format!(
                "strata sizes: {}",
                strata
                    .iter()
                    .map(|(d, n)| format!("{d}:{n}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ),
    );

    // Coproduct condition.
    let mut cond2_ok = true;
    let mut cond2_witness = None;
    for (xi, g) in family.generators().iter().enumerate() {
        let mut defect = h.comultiply(&g.element);
        let unit = h.basis.of_degree(&MultiDegree::zero(rank))[0];
        for (id, c) in g.element.terms() {
            defect.add_term(unit, id, -c.clone());
            defect.add_term(id, unit, -c.clone());
        }
        // Group the defect by bidegree and expand both legs.
        let mut groups: BTreeMap<(MultiDegree, MultiDegree), Vec<(usize, usize, Rat)>> =
            BTreeMap::new();
        for ((a, b), c) in defect.terms() {
            let key = (h.basis.degree(a).clone(), h.basis.degree(b).clone());
            groups.entry(key).or_default().push((
                h.basis.pos_in_degree(a),
                h.basis.pos_in_degree(b),
                c.clone(),
            ));
        }
        for ((d1, d2), entries) in groups {
            if d1.is_zero() || d2.is_zero() {
                cond2_ok = false;
                cond2_witness.get_or_insert(format!(
                    "coproduct defect of {} has a degree-zero tensor leg",
                    g.label
                ));
                continue;
            }
            if d1.max_parts() > basis.bound || d2.max_parts() > basis.bound {
                continue;
            }
            let (n1, n2) = (
                h.basis.of_degree(&d1).len(),
                h.basis.of_degree(&d2).len(),
            );
            let mut c = Matrix::zeros(n1, n2);
            for (i, j, v) in entries {
                c.set(i, j, v);
            }
            let left = basis.expansion_inv[&d1].mul(&c);
            let z = left.mul(&basis.expansion_inv[&d2].transpose());
            for (i, v) in basis.sequences[&d1].iter().enumerate() {
                for (j, w) in basis.sequences[&d2].iter().enumerate() {
                    if z.get(i, j).is_zero() {
                        continue;
                    }
                    let max_entry = v.0.iter().chain(&w.0).max().copied();
                    if v.is_empty() || w.is_empty() || max_entry >= Some(xi) {
                        cond2_ok = false;
                        cond2_witness.get_or_insert(format!(
                            "coproduct of {} leaks {} ⊗ {} (coefficient {})",
                            g.label,
                            v.label(family),
                            w.label(family),
                            z.get(i, j)
                        ));
                    }
                }
            }
        }
    }
    reports.push(if cond2_ok {
        CheckReport::pass("generator coproducts primitive modulo earlier generators")
    } else {
        CheckReport::fail(
            "generator coproducts primitive modulo earlier generators",
            cond2_witness.unwrap_or_default(),
        )
    });

    // Height condition.
    let finite: Vec<usize> = (0..family.len())
        .filter(|&i| family.generator(i).height.is_some())
        .collect();
    if finite.is_empty() {
        reports.push(
            CheckReport::pass("heights unbounded within bound")
                .with_detail("no finite height caps"),
        );
    } else {
        let mut ok = true;
        let mut witness = None;
        for &i in &finite {
            let g = family.generator(i);
            let cap = g.height.unwrap();
            let total = g.degree.max_parts() as usize * cap;
            if total as u32 > basis.bound {
                continue;
            }
            let mut power = h.unit_element();
            for _ in 0..cap {
                power = h.multiply(&power, &g.element);
            }
            let degree = SortedSeq(vec![i; cap]).degree(family, rank);
            let coords_z = basis.to_pbw_coords(h, &degree, &power);
            for (j, v) in basis.sequences[&degree].iter().enumerate() {
                if !coords_z[j].is_zero() && v.0.iter().max().copied() >= Some(i) {
                    ok = false;
                    witness.get_or_insert(format!(
                        "{}^{cap} leaks {}",
                        g.label,
                        v.label(family)
                    ));
                }
            }
        }
        reports.push(if ok {
            CheckReport::pass("capped powers fall into earlier generators")
        } else {
            CheckReport::fail(
                "capped powers fall into earlier generators",
                witness.unwrap_or_default(),
            )
        });
    }

    // Straightening condition, with the measured leading coefficient.
    let mut cond4_ok = true;
    let mut cond4_witness = None;
    let mut unit_ok = true;
    let mut unit_witness = None;
    for nu in 0..family.len() {
        for mu in 0..nu {
            let gm = family.generator(mu);
            let gn = family.generator(nu);
            let degree = match gm.degree.add(&gn.degree) {
                Ok(d) if d.max_parts() <= basis.bound => d,
                _ => continue,
            };
            let forward = h.multiply(&gn.element, &gm.element);
            let backward = h.multiply(&gm.element, &gn.element);
            let mut defect = forward.clone();
            defect.add_scaled(&backward, &rat(-1));
            let coords_z = basis.to_pbw_coords(h, &degree, &defect);
            for (j, v) in basis.sequences[&degree].iter().enumerate() {
                if !coords_z[j].is_zero() && v.0.iter().max().copied() >= Some(nu) {
                    cond4_ok = false;
                    cond4_witness.get_or_insert(format!(
                        "[{}, {}] leaks {} (coefficient {})",
                        gn.label,
                        gm.label,
                        v.label(family),
                        coords_z[j]
                    ));
                }
            }
            // Leading coefficient of z_ν z_μ at the straightened sequence.
            let sorted = SortedSeq(vec![mu, nu]);
            let fwd_coords = basis.to_pbw_coords(h, &degree, &forward);
            let pos = basis.sequences[&degree]
                .iter()
                .position(|s| *s == sorted);
            let lead = pos.map(|p| fwd_coords[p].clone());
            if lead != Some(Rat::one()) {
                unit_ok = false;
                unit_witness.get_or_insert(format!(
                    "{}·{} has leading coefficient {:?} at {}",
                    gn.label,
                    gm.label,
                    lead,
                    sorted.label(family)
                ));
            }
        }
    }
    reports.push(if cond4_ok {
        CheckReport::pass("commutators fall into earlier generators")
    } else {
        CheckReport::fail(
            "commutators fall into earlier generators",
            cond4_witness.unwrap_or_default(),
        )
    });
    reports.push(if unit_ok {
        CheckReport::pass("straightening coefficients all equal one")
            .with_detail("checked the unit-coefficient strengthening")
    } else {
        CheckReport::fail(
            "straightening coefficients all equal one",
            unit_witness.unwrap_or_default(),
        )
    });

    reports
}

/// The matrix of a graded map on one degree, rewritten in the `z_V` basis
/// with rows/columns in ascending right sequence order, plus the
/// triangularity and diagonal diagnosis.
#[derive(Clone, Debug)]
pub struct TriangularReport {
    pub degree: MultiDegree,
    pub order: Vec<SortedSeq>,
    pub matrix: Matrix,
    pub triangular: bool,
    pub diagonal: Vec<Rat>,
    pub expected_diagonal: Vec<Rat>,
    pub diagonal_ok: bool,
    pub first_violation: Option<String>,
}

/// Rewrites `f`'s block on `degree` in the `z_V` basis and checks strict
/// upper-triangularity with the expected diagonal.
pub fn triangular_check(
    basis: &PbwBasis,
    f: &GradedMap,
    degree: &MultiDegree,
    expected: impl Fn(&SortedSeq) -> Rat,
) -> TriangularReport {
    let block = f.block(degree);
    let z = basis.expansion_inv[degree]
        .mul(block)
        .mul(&basis.expansion[degree]);
    let order = basis.sequences[degree].clone();
    let mut triangular = true;
    let mut first_violation = None;
    for j in 0..order.len() {
        for i in j + 1..order.len() {
            if !z.get(i, j).is_zero() && triangular {
                triangular = false;
                first_violation = Some(format!(
                    "image of {} contains {} with coefficient {}",
                    order[j].label(&basis.family),
                    order[i].label(&basis.family),
                    z.get(i, j)
                ));
            }
        }
    }
    let diagonal: Vec<Rat> = (0..order.len()).map(|i| z.get(i, i).clone()).collect();
    let expected_diagonal: Vec<Rat> = order.iter().map(&expected).collect();
    let diagonal_ok = diagonal == expected_diagonal;
    TriangularReport {
        degree: degree.clone(),
        order,
        matrix: z,
        triangular,
        diagonal,
        expected_diagonal,
        diagonal_ok,
        first_violation,
    }
}
