//! The Hopf algebra of permutations in its fundamental basis, together with
//! the combinatorics this build needs: connected and Lyndon permutations,
//! the component bijection, Lyndon decompositions, the pseudo-lexicographic
//! order and its two transferred total orders, the monomial basis via
//! Möbius inversion over a weak order, and the triangularizing T basis.
//!
//! Conventions (fixed against the degree-3 power-map tables):
//! the fundamental product is the shifted shuffle, the coproduct is
//! deconcatenate-and-standardize, and the monomial basis inverts over the
//! *left* weak order.

use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use crate::hopf::{Element, GradedBasis, HopfData};
use crate::matrix::Matrix;
use crate::scalar::{rat, Rat};
use crate::words::{lyndon_factorize_by, pseudo_lex_compare_by, shirshov_split_by};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// One-line notation; the empty vector is the degree-0 permutation θ.
pub type Perm = Vec<u8>;

/// Renders one-line notation, `"e"` for θ. Only single-digit entries are
/// supported (degree ≤ 9), which covers the desk scale of this crate.
pub fn perm_string(p: &[u8]) -> String {
    if p.is_empty() {
        "e".to_string()
    } else {
        p.iter().map(|v| v.to_string()).collect()
    }
}

/// Parses `"231"` (or `"e"`/`""` for θ) and validates the entries form a
/// permutation of an initial segment.
pub fn parse_perm(s: &str) -> Result<Perm> {
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut p = Vec::with_capacity(s.len());
    for ch in s.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?;
        if d == 0 {
            return Err(Error::Parse(format!("bad permutation {s:?}")));
        }
        p.push(d as u8);
    }
    let mut seen = vec![false; p.len() + 1];
    for &v in &p {
        if v as usize > p.len() || seen[v as usize] {
            return Err(Error::Parse(format!(
                "{s:?} is not a permutation of 1..={}",
                p.len()
            )));
        }
        seen[v as usize] = true;
    }
    Ok(p)
}

/// Order-preserving relabeling onto `1..=k`.
pub fn standardize(word: &[u8]) -> Perm {
    let mut sorted: Vec<u8> = word.to_vec();
    sorted.sort_unstable();
    word.iter()
        .map(|v| (sorted.iter().position(|x| x == v).unwrap() + 1) as u8)
        .collect()
}

/// `σ×τ`: concatenate with the second block shifted by the first length.
pub fn direct_sum(a: &[u8], b: &[u8]) -> Perm {
    let m = a.len() as u8;
    let mut out = a.to_vec();
    out.extend(b.iter().map(|v| v + m));
    out
}

/// A permutation is connected when it preserves no proper nonempty initial
/// segment `{1,…,i}`; θ is not connected.
pub fn is_connected(p: &[u8]) -> bool {
    if p.is_empty() {
        return false;
    }
    let mut max = 0;
    for (i, &v) in p.iter().enumerate().take(p.len() - 1) {
        max = max.max(v as usize);
        if max == i + 1 {
            return false;
        }
    }
    true
}

/// The maximal splitting of `σ` into connected blocks: the unique word over
/// connected permutations whose ordered direct sum is `σ`.
pub fn components(p: &[u8]) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut max = 0;
    let mut start = 0;
    for (i, &v) in p.iter().enumerate() {
        max = max.max(v as usize);
        if max == i + 1 {
            out.push(standardize(&p[start..=i]));
            start = i + 1;
        }
    }
    out
}

/// Inverse of [`components`]: ordered direct sum.
pub fn from_components(comps: &[Perm]) -> Perm {
    let mut acc = Vec::new();
    for c in comps {
        acc = direct_sum(&acc, c);
    }
    acc
}

/// The pseudo-lexicographic order on one-line words: a proper extension is
/// smaller than its prefix, otherwise the first differing value decides.
pub fn prec(a: &[u8], b: &[u8]) -> Ordering {
    pseudo_lex_compare_by(a, b, &|x: &u8, y: &u8| x.cmp(y))
}

fn prec_perm(a: &Perm, b: &Perm) -> Ordering {
    prec(a, b)
}

/// The Lyndon decomposition: split into connected blocks, factor that word
/// into its nondecreasing Lyndon factors, and reassemble each factor.
pub fn lyndon_decomposition(p: &[u8]) -> Vec<Perm> {
    let comps = components(p);
    lyndon_factorize_by(&comps, &prec_perm)
        .into_iter()
        .map(|f| from_components(&f))
        .collect()
}

/// A nonempty permutation is Lyndon when `σ₂×σ₁ ≺ σ` for every nontrivial
/// splitting `σ = σ₁×σ₂`; equivalently its Lyndon decomposition has one
/// factor.
pub fn is_lyndon_perm(p: &[u8]) -> bool {
    !p.is_empty() && lyndon_decomposition(p).len() == 1
}

/// Classification data: connectivity, Lyndon-ness, the Lyndon factors, and
/// the factor count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermClass {
    pub connected: bool,
    pub lyndon: bool,
    pub factors: Vec<Perm>,
    pub length: usize,
}

pub fn classify(p: &[u8]) -> PermClass {
    let factors = lyndon_decomposition(p);
    PermClass {
        connected: is_connected(p),
        lyndon: !p.is_empty() && factors.len() == 1,
        length: factors.len(),
        factors,
    }
}

/// Number of Lyndon factors `l(σ)`.
pub fn lyndon_length(p: &[u8]) -> usize {
    lyndon_decomposition(p).len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderVariant {
    /// Pseudo-lexicographic order on one-line words.
    Prec,
    /// Degree first, then leftmost differing Lyndon factor.
    PrecL,
    /// Degree first, then rightmost-aligned differing Lyndon factor.
    PrecR,
}

/// The three total orders. The two transferred orders compare degrees
/// first, then walk the Lyndon factor sequences from the left or from the
/// right (aligned at the ends) and let the first differing factor decide
/// under the base order.
pub fn perm_compare(variant: OrderVariant, a: &[u8], b: &[u8]) -> Ordering {
    match variant {
        OrderVariant::Prec => prec(a, b),
        OrderVariant::PrecL | OrderVariant::PrecR => {
            match a.len().cmp(&b.len()) {
                Ordering::Equal => {}
                other => return other,
            }
            let fa = lyndon_decomposition(a);
            let fb = lyndon_decomposition(b);
            match variant {
                OrderVariant::PrecL => {
                    for (x, y) in fa.iter().zip(&fb) {
                        match prec(x, y) {
                            Ordering::Equal => {}
                            other => return other,
                        }
                    }
                    Ordering::Equal
                }
                _ => {
                    for (x, y) in fa.iter().rev().zip(fb.iter().rev()) {
                        match prec(x, y) {
                            Ordering::Equal => {}
                            other => return other,
                        }
                    }
                    Ordering::Equal
                }
            }
        }
    }
}

/// All permutations of `1..=m`, lexicographically.
pub fn all_perms(m: usize) -> Vec<Perm> {
    fn go(remaining: &mut Vec<u8>, prefix: &mut Perm, out: &mut Vec<Perm>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            go(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut remaining: Vec<u8> = (1..=m as u8).collect();
    let mut out = Vec::new();
    go(&mut remaining, &mut Vec::new(), &mut out);
    out
}

/// Connected permutations of degree `m`, ascending in the base order.
pub fn connected_of_degree(m: usize) -> Vec<Perm> {
    let mut out: Vec<Perm> = all_perms(m).into_iter().filter(|p| is_connected(p)).collect();
    out.sort_by(|a, b| prec(a, b));
    out
}

/// All interleavings of `σ` with `τ` shifted past it; the results are
/// pairwise distinct.
pub fn shifted_shuffles(a: &[u8], b: &[u8]) -> Vec<Perm> {
    let shifted: Perm = b.iter().map(|v| v + a.len() as u8).collect();
    fn go(u: &[u8], v: &[u8], prefix: &mut Perm, out: &mut Vec<Perm>) {
        if u.is_empty() && v.is_empty() {
            out.push(prefix.clone());
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
    let mut out = Vec::new();
    go(a, &shifted, &mut Vec::new(), &mut out);
    out
}

/// Fundamental-basis product as a permutation→coefficient map.
pub fn f_product(a: &[u8], b: &[u8]) -> BTreeMap<Perm, Rat> {
    let mut out = BTreeMap::new();
    for w in shifted_shuffles(a, b) {
        *out.entry(w).or_insert_with(|| rat(0)) += rat(1);
    }
    out
}

/// Fundamental-basis coproduct: all deconcatenations, each side
/// standardized.
pub fn f_coproduct(p: &[u8]) -> Vec<(Perm, Perm)> {
    (0..=p.len())
        .map(|i| (standardize(&p[..i]), standardize(&p[i..])))
        .collect()
}

fn mul_maps(x: &BTreeMap<Perm, Rat>, y: &BTreeMap<Perm, Rat>) -> BTreeMap<Perm, Rat> {
    let mut out: BTreeMap<Perm, Rat> = BTreeMap::new();
    for (s, cs) in x {
        for (t, ct) in y {
            let c = cs * ct;
            for w in shifted_shuffles(s, t) {
                let e = out.entry(w).or_insert_with(|| rat(0));
                *e += &c;
            }
        }
    }
    out.retain(|_, v| !num::traits::Zero::is_zero(v));
    out
}

/// Memoizing expander for the triangular basis: `T_θ = 1`; `T_σ = F_σ` for
/// connected `σ`; `T_σ = [T_{σ_L}, T_{σ_R}]` along the standard split of the
/// component word for other Lyndon `σ`; products along the Lyndon
/// decomposition otherwise.
#[derive(Default)]
pub struct TExpander {
    cache: HashMap<Perm, BTreeMap<Perm, Rat>>,
}

impl TExpander {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expand(&mut self, p: &[u8]) -> BTreeMap<Perm, Rat> {
        if let Some(hit) = self.cache.get(p) {
            return hit.clone();
        }
        let result = if p.is_empty() {
            BTreeMap::from([(Vec::new(), rat(1))])
        } else {
            let dec = lyndon_decomposition(p);
            if dec.len() > 1 {
                let mut acc = self.expand(&dec[0]);
                for f in &dec[1..] {
                    let rhs = self.expand(f);
                    acc = mul_maps(&acc, &rhs);
                }
                acc
            } else if is_connected(p) {
                BTreeMap::from([(p.to_vec(), rat(1))])
            } else {
                let comps = components(p);
                let pos = shirshov_split_by(&comps, &prec_perm);
                let left = from_components(&comps[..pos]);
                let right = from_components(&comps[pos..]);
                let tl = self.expand(&left);
                let tr = self.expand(&right);
                let mut acc = mul_maps(&tl, &tr);
                for (w, c) in mul_maps(&tr, &tl) {
                    let e = acc.entry(w).or_insert_with(|| rat(0));
                    *e -= c;
                }
                acc.retain(|_, v| !num::traits::Zero::is_zero(v));
                acc
            }
        };
        self.cache.insert(p.to_vec(), result.clone());
        result
    }
}

/// Builds the permutation Hopf algebra in the fundamental basis up to total
/// degree `bound`, labels `F:<one-line>` with `F:e` for the unit.
pub fn build_ssym(bound: u32) -> Result<HopfData> {
    if bound > 9 {
        return Err(Error::Invalid(
            "permutation labels support degree at most 9".into(),
        ));
    }
    let mut basis = GradedBasis::new();
    let mut perms_by_degree: Vec<Vec<Perm>> = Vec::new();
    for m in 0..=bound as usize {
        let perms = all_perms(m);
        for p in &perms {
            basis.add(format!("F:{}", perm_string(p)), MultiDegree::scalar(m as u32))?;
        }
        perms_by_degree.push(perms);
    }
    let id_of = |basis: &GradedBasis, p: &[u8]| basis.id_of(&format!("F:{}", perm_string(p)));
    let mut product = HashMap::new();
    for (da, pa) in perms_by_degree.iter().enumerate() {
        for (db, pb) in perms_by_degree.iter().enumerate() {
            if da + db > bound as usize {
                continue;
            }
            for a in pa {
                for b in pb {
                    let mut elem = Element::zero();
                    for w in shifted_shuffles(a, b) {
                        elem.add_term(id_of(&basis, &w).unwrap(), rat(1));
                    }
                    product.insert(
                        (id_of(&basis, a).unwrap(), id_of(&basis, b).unwrap()),
                        elem,
                    );
                }
            }
        }
    }
    let mut coproduct = vec![Vec::new(); basis.len()];
    for perms in &perms_by_degree {
        for p in perms {
            let mut terms: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
            for (l, r) in f_coproduct(p) {
                let key = (id_of(&basis, &l).unwrap(), id_of(&basis, &r).unwrap());
                *terms.entry(key).or_insert_with(|| rat(0)) += rat(1);
            }
            coproduct[id_of(&basis, p).unwrap()] =
                terms.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        }
    }
    HopfData::assemble("ssym", basis, product, coproduct)
}

/// The default generator family for the permutation algebra: the fundamental
/// basis elements of the connected permutations, degrees ascending. Errors
/// when the algebra does not carry the expected `F:` labels.
pub fn connected_generator_input(h: &HopfData) -> Result<Vec<(String, Element)>> {
    let mut out = Vec::new();
    for m in 1..=h.bound() as usize {
        for p in connected_of_degree(m) {
            let label = format!("F:{}", perm_string(&p));
            let id = h.basis.id_of(&label).ok_or_else(|| {
                Error::Invalid(format!(
                    "algebra {:?} has no basis element {label:?}; connected-permutation generators need the permutation algebra",
                    h.name
                ))
            })?;
            out.push((label, Element::basis(id)));
        }
    }
    Ok(out)
}

/// Which weak order underlies the monomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakOrderSide {
    /// Covers swap the values `i, i+1` when `i` sits left of `i+1`.
    /// This is the side that reproduces the degree-3 power-map table.
    Left,
    /// Covers swap adjacent positions holding an ascent.
    Right,
}

fn weak_covers(p: &[u8], side: WeakOrderSide) -> Vec<Perm> {
    let mut out = Vec::new();
    match side {
        WeakOrderSide::Right => {
            for i in 0..p.len().saturating_sub(1) {
                if p[i] < p[i + 1] {
                    let mut q = p.to_vec();
                    q.swap(i, i + 1);
                    out.push(q);
                }
            }
        }
        WeakOrderSide::Left => {
            let pos = |v: u8| p.iter().position(|&x| x == v).unwrap();
            for v in 1..p.len() as u8 {
                let (i, j) = (pos(v), pos(v + 1));
                if i < j {
                    let mut q = p.to_vec();
                    q[i] = v + 1;
                    q[j] = v;
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Up-sets `{τ : τ ⪰ σ}` of the chosen weak order on `𝔖_m`.
fn weak_up_sets(m: usize, side: WeakOrderSide) -> BTreeMap<Perm, BTreeSet<Perm>> {
    let mut up = BTreeMap::new();
    for p in all_perms(m) {
        let mut seen: BTreeSet<Perm> = BTreeSet::from([p.clone()]);
        let mut stack = vec![p.clone()];
        while let Some(x) = stack.pop() {
            for y in weak_covers(&x, side) {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        up.insert(p, seen);
    }
    up
}

fn inversions(p: &[u8]) -> usize {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

/// Change of basis from the monomial to the fundamental basis on degree
/// `m`: column `j` holds `M_{σ_j}` in fundamental coordinates, both indices
/// in the lexicographic listing of `𝔖_m`. Computed by Möbius inversion of
/// the chosen weak order: `M_σ = Σ_{τ ⪰ σ} μ(σ,τ)·F_τ`.
pub fn m_to_f(m: usize, side: WeakOrderSide) -> Matrix {
    let perms = all_perms(m);
    let index: HashMap<Perm, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let up = weak_up_sets(m, side);
    let mut mat = Matrix::zeros(perms.len(), perms.len());
    for (j, s) in perms.iter().enumerate() {
        // μ(s,·) over the interval above s, filled in rank order.
        let mut interval: Vec<&Perm> = up[s].iter().collect();
        interval.sort_by_key(|t| inversions(t));
        let mut mu: HashMap<&Perm, Rat> = HashMap::new();
        for t in interval {
            if t == s {
                mu.insert(t, rat(1));
                continue;
            }
            let mut tot = rat(0);
            for (r, val) in &mu {
                if *r != t && up[*r].contains(t) {
                    tot += val;
                }
            }
            mu.insert(t, -tot);
        }
        for (t, val) in mu {
            mat.set(index[t], j, val);
        }
    }
    mat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolution::ConvolutionContext;
    use crate::words::is_lyndon_by;

    fn p(s: &str) -> Perm {
        parse_perm(s).unwrap()
    }

    #[test]
    fn parsing_and_formatting() {
        assert_eq!(p("231"), vec![2, 3, 1]);
        assert_eq!(p("e"), Vec::<u8>::new());
        assert_eq!(perm_string(&[2, 3, 1]), "231");
        assert_eq!(perm_string(&[]), "e");
        assert!(parse_perm("221").is_err());
        assert!(parse_perm("13").is_err());
        assert!(parse_perm("1x").is_err());
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&p("12"), &p("231")), p("12453"));
        assert_eq!(direct_sum(&[], &p("21")), p("21"));
        assert_eq!(direct_sum(&p("21"), &[]), p("21"));
        assert_eq!(direct_sum(&p("1"), &p("1")), p("12"));
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[5, 3]), vec![2, 1]);
        assert_eq!(standardize(&[2, 4, 1]), vec![2, 3, 1]);
        assert_eq!(standardize(&[]), Vec::<u8>::new());
    }

    #[test]
    fn connectivity_and_components() {
        assert!(is_connected(&p("1")));
        assert!(is_connected(&p("21")));
        assert!(!is_connected(&p("12")));
        assert!(!is_connected(&[]));
        assert_eq!(components(&p("12453")), vec![p("1"), p("1"), p("231")]);
        assert_eq!(components(&p("132")), vec![p("1"), p("21")]);
        assert_eq!(from_components(&[p("1"), p("21")]), p("132"));
        // Connected counts 1, 1, 3, 13 for degrees 1..4.
        let counts: Vec<usize> = (1..=4).map(|m| connected_of_degree(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13]);
    }

    #[test]
    fn classification_table_through_degree_three() {
        let connected: Vec<Perm> = vec![p("1"), p("21"), p("231"), p("312"), p("321")];
        let lyndon_not_connected = vec![p("213")];
        let others = vec![p("12"), p("123"), p("132")];
        for s in &connected {
            let c = classify(s);
            assert!(c.connected && c.lyndon && c.length == 1, "{s:?}");
        }
        for s in &lyndon_not_connected {
            let c = classify(s);
            assert!(!c.connected && c.lyndon && c.length == 1, "{s:?}");
        }
        for s in &others {
            let c = classify(s);
            assert!(!c.connected && !c.lyndon && c.length > 1, "{s:?}");
        }
        // Everything of degree ≤ 3 is covered by the three lists.
        let mut total = 0;
        for m in 1..=3 {
            total += all_perms(m).len();
        }
        assert_eq!(
            total,
            connected.len() + lyndon_not_connected.len() + others.len()
        );
    }

    #[test]
    fn lyndon_decompositions() {
        assert_eq!(lyndon_decomposition(&p("132")), vec![p("1"), p("21")]);
        assert_eq!(
            lyndon_decomposition(&p("123")),
            vec![p("1"), p("1"), p("1")]
        );
        assert_eq!(lyndon_decomposition(&p("321")), vec![p("321")]);
        assert_eq!(lyndon_decomposition(&p("213")), vec![p("213")]);
        // Factors reassemble and are nondecreasing in the base order.
        for m in 0..=4 {
            for s in all_perms(m) {
                let dec = lyndon_decomposition(&s);
                assert_eq!(from_components_direct(&dec), s);
                for w in dec.windows(2) {
                    assert_ne!(prec(&w[0], &w[1]), Ordering::Greater, "{s:?}");
                }
                for f in &dec {
                    assert!(is_lyndon_perm(f), "{f:?} in {s:?}");
                }
            }
        }
    }

    fn from_components_direct(parts: &[Perm]) -> Perm {
        let mut acc = Vec::new();
        for part in parts {
            acc = direct_sum(&acc, part);
        }
        acc
    }

    #[test]
    fn lyndon_definition_matches_decomposition_length() {
        // σ is Lyndon iff σ₂×σ₁ ≺ σ for every nontrivial split σ = σ₁×σ₂.
        for m in 1..=4 {
            for s in all_perms(m) {
                let comps = components(&s);
                let mut direct = !comps.is_empty();
                for cut in 1..comps.len() {
                    let rotated = from_components_direct(
                        &comps[cut..]
                            .iter()
                            .chain(&comps[..cut])
                            .cloned()
                            .collect::<Vec<_>>(),
                    );
                    if prec(&rotated, &s) != Ordering::Less {
                        direct = false;
                        break;
                    }
                }
                assert_eq!(direct, is_lyndon_perm(&s), "{s:?}");
            }
        }
    }

    #[test]
    fn component_map_is_an_order_isomorphism() {
        // prec on permutations agrees with the pseudo-lexicographic order
        // on their component words over the connected alphabet.
        let mut all: Vec<Perm> = Vec::new();
        for m in 0..=4 {
            all.extend(all_perms(m));
        }
        for a in &all {
            for b in &all {
                let via_words =
                    pseudo_lex_compare_by(&components(a), &components(b), &prec_perm);
                assert_eq!(prec(a, b), via_words, "{a:?} vs {b:?}");
            }
        }
        // And σ is Lyndon exactly when its component word is Lyndon.
        for s in &all {
            if s.is_empty() {
                continue;
            }
            assert_eq!(
                is_lyndon_perm(s),
                is_lyndon_by(&components(s), &prec_perm),
                "{s:?}"
            );
        }
    }

    #[test]
    fn order_chains_match_the_reference_lists() {
        let chain = vec![
            p("123"),
            p("12"),
            p("132"),
            p("1"),
            p("213"),
            p("21"),
            p("231"),
            p("312"),
            p("321"),
        ];
        for w in chain.windows(2) {
            assert_eq!(prec(&w[0], &w[1]), Ordering::Less, "{w:?}");
        }
        let mut s3 = all_perms(3);
        s3.sort_by(|a, b| perm_compare(OrderVariant::PrecL, a, b));
        let left: Vec<String> = s3.iter().map(|q| perm_string(q)).collect();
        assert_eq!(left, vec!["123", "132", "213", "231", "312", "321"]);
        s3.sort_by(|a, b| perm_compare(OrderVariant::PrecR, a, b));
        let right: Vec<String> = s3.iter().map(|q| perm_string(q)).collect();
        assert_eq!(right, vec!["123", "213", "132", "231", "312", "321"]);
        // Degree dominates in both transferred orders.
        assert_eq!(
            perm_compare(OrderVariant::PrecL, &p("321"), &p("1234")),
            Ordering::Less
        );
        assert_eq!(
            perm_compare(OrderVariant::PrecR, &p("321"), &p("1234")),
            Ordering::Less
        );
        // …but NOT in the base order: some degree-4 word precedes a
        // degree-3 one by its first letter.
        assert_eq!(prec(&p("2413"), &p("312")), Ordering::Less);
    }

    #[test]
    fn fundamental_product_examples() {
        let e: &[u8] = &[];
        assert_eq!(
            f_product(&p("1"), &p("1")),
            BTreeMap::from([(p("12"), rat(1)), (p("21"), rat(1))])
        );
        assert_eq!(
            f_product(e, &p("231")),
            BTreeMap::from([(p("231"), rat(1))])
        );
        assert_eq!(
            f_product(&p("21"), &p("1")),
            BTreeMap::from([
                (p("213"), rat(1)),
                (p("231"), rat(1)),
                (p("321"), rat(1))
            ])
        );
    }

    #[test]
    fn fundamental_coproduct_examples() {
        assert_eq!(f_coproduct(&p("1")), vec![(p("e"), p("1")), (p("1"), p("e"))]);
        assert_eq!(
            f_coproduct(&p("21")),
            vec![(p("e"), p("21")), (p("1"), p("1")), (p("21"), p("e"))]
        );
        // Deconcatenations of 231: std(2)=1, std(31)=21;  std(23)=12, std(1)=1.
        assert_eq!(
            f_coproduct(&p("231")),
            vec![
                (p("e"), p("231")),
                (p("1"), p("21")),
                (p("12"), p("1")),
                (p("231"), p("e"))
            ]
        );
    }

    #[test]
    fn t_basis_degree_three_expansions() {
        let mut t = TExpander::new();
        let get = |t: &mut TExpander, s: &str| -> BTreeMap<Perm, Rat> { t.expand(&p(s)) };
        assert_eq!(get(&mut t, "1"), BTreeMap::from([(p("1"), rat(1))]));
        assert_eq!(
            get(&mut t, "12"),
            BTreeMap::from([(p("12"), rat(1)), (p("21"), rat(1))])
        );
        assert_eq!(get(&mut t, "21"), BTreeMap::from([(p("21"), rat(1))]));
        assert_eq!(
            get(&mut t, "123"),
            all_perms(3).into_iter().map(|q| (q, rat(1))).collect()
        );
        assert_eq!(
            get(&mut t, "213"),
            BTreeMap::from([
                (p("132"), rat(-1)),
                (p("213"), rat(1)),
                (p("231"), rat(1)),
                (p("312"), rat(-1)),
            ])
        );
        assert_eq!(
            get(&mut t, "132"),
            BTreeMap::from([
                (p("132"), rat(1)),
                (p("312"), rat(1)),
                (p("321"), rat(1))
            ])
        );
        assert_eq!(get(&mut t, "231"), BTreeMap::from([(p("231"), rat(1))]));
        assert_eq!(get(&mut t, "312"), BTreeMap::from([(p("312"), rat(1))]));
        assert_eq!(get(&mut t, "321"), BTreeMap::from([(p("321"), rat(1))]));
    }

    #[test]
    fn build_passes_axioms_and_reproduces_the_power_table() {
        let h = build_ssym(3).unwrap();
        let dims: Vec<usize> = (0..=3u32)
            .map(|m| h.basis.of_degree(&MultiDegree::scalar(m)).len())
            .collect();
        assert_eq!(dims, vec![1, 1, 2, 6]);
        let axioms = h.verify_bialgebra();
        assert!(axioms.all_passed(), "{axioms}");

        // Ψ₂ = μ∘Δ on degree 3 in the fundamental basis.
        let ctx = ConvolutionContext::new(&h);
        let psi2 = ctx.adams(2);
        let idf = |s: &str| h.basis.id_of(&format!("F:{s}")).unwrap();
        let table: Vec<(&str, Vec<(&str, i64)>)> = vec![
            ("123", vec![("123", 4), ("132", 1), ("213", 1), ("231", 1), ("312", 1)]),
            ("132", vec![("123", 1), ("132", 4), ("312", 2), ("321", 1)]),
            ("213", vec![("123", 1), ("213", 4), ("231", 2), ("321", 1)]),
            ("231", vec![("123", 1), ("132", 2), ("231", 2), ("312", 2), ("321", 1)]),
            ("312", vec![("123", 1), ("213", 2), ("231", 2), ("312", 2), ("321", 1)]),
            ("321", vec![("132", 1), ("213", 1), ("231", 1), ("312", 1), ("321", 4)]),
        ];
        for (src, want) in table {
            let img = psi2.apply(&h.basis, &Element::basis(idf(src)));
            let mut expect = Element::zero();
            for (dst, c) in want {
                expect.add_term(idf(dst), rat(c));
            }
            assert_eq!(img, expect, "power image of {src}");
        }

        // Neither commutative nor cocommutative, witnesses in degree ≤ 3.
        let a = h.product_of(idf("1"), idf("21"));
        let b = h.product_of(idf("21"), idf("1"));
        assert_ne!(a, b);
        let delta = h.comultiply(&Element::basis(idf("231")));
        assert_ne!(
            delta.coeff(idf("1"), idf("21")),
            delta.coeff(idf("21"), idf("1"))
        );
    }

    #[test]
    fn monomial_basis_reproduces_its_power_table_on_the_left_order() {
        let h = build_ssym(3).unwrap();
        let ctx = ConvolutionContext::new(&h);
        let psi2 = ctx.adams(2);
        let deg3 = MultiDegree::scalar(3);
        let a = psi2.block(&deg3).clone();
        let c = m_to_f(3, WeakOrderSide::Left);
        let x = c.inverse().unwrap().mul(&a).mul(&c);
        // Columns/rows in lexicographic listing of 𝔖₃.
        let perms = all_perms(3);
        let idx = |s: &str| perms.iter().position(|q| *q == p(s)).unwrap();
        let want: Vec<(&str, Vec<(&str, i64)>)> = vec![
            ("123", vec![("123", 2)]),
            ("132", vec![("132", 2)]),
            ("213", vec![("213", 2)]),
            ("231", vec![("123", 1), ("132", 2), ("231", 3), ("312", 1)]),
            ("312", vec![("123", 1), ("213", 2), ("231", 1), ("312", 3)]),
            ("321", vec![("132", 1), ("213", 1), ("231", 2), ("312", 2), ("321", 8)]),
        ];
        for (src, terms) in &want {
            let j = idx(src);
            let mut col: Vec<Rat> = vec![rat(0); perms.len()];
            for (dst, v) in terms {
                col[idx(dst)] = rat(*v);
            }
            for i in 0..perms.len() {
                assert_eq!(*x.get(i, j), col[i], "entry ({i},{j}) of {src}");
            }
        }
        // The right-sided variant does NOT reproduce the table.
        let cr = m_to_f(3, WeakOrderSide::Right);
        let xr = cr.inverse().unwrap().mul(&a).mul(&cr);
        let mut full = Matrix::zeros(perms.len(), perms.len());
        for (src, terms) in &want {
            for (dst, v) in terms {
                full.set(idx(dst), idx(src), rat(*v));
            }
        }
        assert_eq!(x, full);
        assert_ne!(xr, full);
    }

    #[test]
    fn monomial_matrix_is_unitriangular() {
        for m in 1..=3 {
            let c = m_to_f(m, WeakOrderSide::Left);
            let perms = all_perms(m);
            for (j, _s) in perms.iter().enumerate() {
                assert_eq!(*c.get(j, j), rat(1));
            }
            assert!(c.inverse().is_some());
        }
        // Degree 1: the monomial and fundamental bases coincide.
        let c1 = m_to_f(1, WeakOrderSide::Left);
        assert!(c1.is_identity());
    }
}
