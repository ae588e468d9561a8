//! Connected graded bialgebra data given by structure constants on an
//! explicit homogeneous basis, truncated at a degree bound.
//!
//! A [`HopfData`] stores the multiplication table for all pairs whose degree
//! sum stays within the bound and the full coproduct of every basis element.
//! Degree-0 must be one-dimensional, spanned by the unit; the counit is the
//! coefficient functional of the unit and is not stored. Linear
//! degree-preserving operators are [`GradedMap`]s: one matrix per graded
//! component, columns indexed by the listed basis order.

use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use crate::matrix::Matrix;
use crate::report::{CheckReport, ReportSet};
use crate::scalar::{format_rat, rat, Rat};
use crate::words::ShirshovTree;
use num::traits::Zero;
use std::collections::{BTreeMap, HashMap};

pub type LabelId = usize;

/// A graded basis with interned labels. Within one degree the order is the
/// order of insertion; degrees are ordered graded-lexicographically.
#[derive(Clone, Debug, Default)]
pub struct GradedBasis {
    labels: Vec<String>,
    degrees: Vec<MultiDegree>,
    index: HashMap<String, LabelId>,
    by_degree: BTreeMap<MultiDegree, Vec<LabelId>>,
    pos_in_degree: Vec<usize>,
}

impl GradedBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, label: impl Into<String>, degree: MultiDegree) -> Result<LabelId> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::Invalid(format!("duplicate basis label {label:?}")));
        }
        if let Some(first) = self.degrees.first() {
            if first.rank() != degree.rank() {
                return Err(Error::RankMismatch(first.rank(), degree.rank()));
            }
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        let slot = self.by_degree.entry(degree.clone()).or_default();
        self.pos_in_degree.push(slot.len());
        slot.push(id);
        self.degrees.push(degree);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: LabelId) -> &str {
        &self.labels[id]
    }

    pub fn degree(&self, id: LabelId) -> &MultiDegree {
        &self.degrees[id]
    }

    pub fn id_of(&self, label: &str) -> Option<LabelId> {
        self.index.get(label).copied()
    }

    pub fn pos_in_degree(&self, id: LabelId) -> usize {
        self.pos_in_degree[id]
    }

    pub fn of_degree(&self, degree: &MultiDegree) -> &[LabelId] {
        self.by_degree.get(degree).map_or(&[], |v| v.as_slice())
    }

    /// All degrees present, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = &MultiDegree> {
        self.by_degree.keys()
    }

    pub fn grading_rank(&self) -> usize {
        self.degrees.first().map_or(1, |d| d.rank())
    }

    /// Largest total degree present.
    pub fn bound(&self) -> u32 {
        self.by_degree
            .keys()
            .map(|d| d.max_parts())
            .max()
            .unwrap_or(0)
    }

    pub fn dims(&self) -> BTreeMap<MultiDegree, usize> {
        self.by_degree
            .iter()
            .map(|(d, v)| (d.clone(), v.len()))
            .collect()
    }
}

/// A finitely supported rational combination of basis labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<LabelId, Rat>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(id: LabelId, c: Rat) -> Self {
        let mut e = Element::zero();
        e.add_term(id, c);
        e
    }

    pub fn basis(id: LabelId) -> Self {
        Self::from_term(id, rat(1))
    }

    pub fn add_term(&mut self, id: LabelId, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(id).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&id);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (&id, v) in &other.terms {
            self.add_term(id, v * c);
        }
    }

    pub fn scale(&self, c: &Rat) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, id: LabelId) -> Rat {
        self.terms.get(&id).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (LabelId, &Rat)> {
        self.terms.iter().map(|(&id, c)| (id, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A finitely supported element of the two-fold tensor product.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<(LabelId, LabelId), Rat>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: LabelId, right: LabelId, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((left, right)).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(left, right));
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Rat) {
        for (&(a, b), v) in &other.terms {
            self.add_term(a, b, v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((LabelId, LabelId), &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, left: LabelId, right: LabelId) -> Rat {
        self.terms
            .get(&(left, right))
            .cloned()
            .unwrap_or_else(|| rat(0))
    }
}

/// Structure constants of a connected graded bialgebra, truncated so that
/// products are stored exactly for degree sums within the basis bound.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub name: String,
    pub basis: GradedBasis,
    pub unit: LabelId,
    product: HashMap<(LabelId, LabelId), Element>,
    coproduct: Vec<Vec<(LabelId, LabelId, Rat)>>,
}

impl HopfData {
    /// Assembles and structurally validates the data: degree 0 must be
    /// exactly the unit, products must exist for every in-bound pair and
    /// respect the grading, and coproducts must be complete and graded.
    /// Algebraic laws are checked separately by [`verify_bialgebra`].
    ///
    /// [`verify_bialgebra`]: Self::verify_bialgebra
    pub fn assemble(
        name: impl Into<String>,
        basis: GradedBasis,
        mut product: HashMap<(LabelId, LabelId), Element>,
        coproduct: Vec<Vec<(LabelId, LabelId, Rat)>>,
    ) -> Result<Self> {
        let name = name.into();
        if basis.is_empty() {
            return Err(Error::Invalid("empty basis".into()));
        }
        let zero = MultiDegree::zero(basis.grading_rank());
        let degree_zero = basis.of_degree(&zero);
        if degree_zero.len() != 1 {
            return Err(Error::Invalid(format!(
                "degree 0 must be one-dimensional, found dimension {}",
                degree_zero.len()
            )));
        }
        let unit = degree_zero[0];
        if coproduct.len() != basis.len() {
            return Err(Error::Invalid(format!(
                "coproduct defined for {} of {} basis elements",
                coproduct.len(),
                basis.len()
            )));
        }
        let bound = basis.bound();
        for (&(a, b), prod) in &product {
            if a >= basis.len() || b >= basis.len() {
                return Err(Error::Invalid("product references unknown label".into()));
            }
            let target = basis.degree(a).add(basis.degree(b))?;
            for (id, _) in prod.terms() {
                if basis.degree(id) != &target {
                    return Err(Error::Invalid(format!(
                        "product {:?}·{:?} has a term {:?} outside degree {}",
                        basis.label(a),
                        basis.label(b),
                        basis.label(id),
                        target
                    )));
                }
            }
        }
        for (l, terms) in coproduct.iter().enumerate() {
            let target = basis.degree(l);
            for (a, b, _) in terms {
                if *a >= basis.len() || *b >= basis.len() {
                    return Err(Error::Invalid("coproduct references unknown label".into()));
                }
                let got = basis.degree(*a).add(basis.degree(*b))?;
                if &got != target {
                    return Err(Error::Invalid(format!(
                        "coproduct of {:?} has tensor term of degree {} ≠ {}",
                        basis.label(l),
                        got,
                        target
                    )));
                }
            }
        }
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                let sum = basis.degree(a).add(basis.degree(b))?;
                if sum.max_parts() > bound || product.contains_key(&(a, b)) {
                    continue;
                }
                if basis.of_degree(&sum).is_empty() {
                    // No basis elements in the target degree: the product is
                    // forced to vanish.
                    product.insert((a, b), Element::zero());
                } else {
                    return Err(Error::Invalid(format!(
                        "missing product {:?}·{:?} (degree {} within bound {})",
                        basis.label(a),
                        basis.label(b),
                        sum,
                        bound
                    )));
                }
            }
        }
        Ok(HopfData {
            name,
            basis,
            unit,
            product,
            coproduct,
        })
    }

    pub fn bound(&self) -> u32 {
        self.basis.bound()
    }

    pub fn product_of(&self, a: LabelId, b: LabelId) -> &Element {
        self.product.get(&(a, b)).unwrap_or_else(|| {
            panic!(
                "product {:?}·{:?} exceeds the truncation bound",
                self.basis.label(a),
                self.basis.label(b)
            )
        })
    }

    pub fn coproduct_of(&self, l: LabelId) -> &[(LabelId, LabelId, Rat)] {
        &self.coproduct[l]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_scaled(self.product_of(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn comultiply(&self, x: &Element) -> Tensor {
        let mut out = Tensor::zero();
        for (l, c) in x.terms() {
            for (a, b, v) in self.coproduct_of(l) {
                out.add_term(*a, *b, v * c);
            }
        }
        out
    }

    /// The counit: the coefficient of the unit basis element.
    pub fn counit(&self, x: &Element) -> Rat {
        x.coeff(self.unit)
    }

    pub fn unit_element(&self) -> Element {
        Element::basis(self.unit)
    }

    /// Product inside the two-fold tensor algebra (componentwise), dropping
    /// any term whose component degree sums leave the truncation bound.
    pub fn multiply_tensor(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let bound = self.bound();
        let mut out = Tensor::zero();
        for ((a1, a2), c1) in x.terms() {
            for ((b1, b2), c2) in y.terms() {
                let dl = self
                    .basis
                    .degree(a1)
                    .add(self.basis.degree(b1))
                    .expect("uniform rank");
                let dr = self
                    .basis
                    .degree(a2)
                    .add(self.basis.degree(b2))
                    .expect("uniform rank");
                if dl.max_parts() > bound || dr.max_parts() > bound {
                    continue;
                }
                let left = self.product_of(a1, b1);
                let right = self.product_of(a2, b2);
                let c = c1 * c2;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(l, r, &c * &(cl * cr));
                    }
                }
            }
        }
        out
    }

    /// Degree of a homogeneous element, `None` for zero. Errors on mixed
    /// degrees.
    pub fn element_degree(&self, x: &Element) -> Result<Option<MultiDegree>> {
        let mut deg: Option<MultiDegree> = None;
        for (id, _) in x.terms() {
            match &deg {
                None => deg = Some(self.basis.degree(id).clone()),
                Some(d) if d == self.basis.degree(id) => {}
                Some(d) => {
                    return Err(Error::Invalid(format!(
                        "element mixes degrees {} and {}",
                        d,
                        self.basis.degree(id)
                    )))
                }
            }
        }
        Ok(deg)
    }

    /// Image of a word under the canonical homomorphism from the free
    /// algebra: the ordered product of the letter images (empty word ↦ 1).
    pub fn evaluate_word(&self, images: &[Element], word: &[usize]) -> Result<Element> {
        let mut acc = self.unit_element();
        for &l in word {
            let img = images
                .get(l)
                .ok_or_else(|| Error::Invalid(format!("letter {l} has no image")))?;
            acc = self.checked_multiply(&acc, img)?;
        }
        Ok(acc)
    }

    /// Recursive commutator evaluation of a bracketing tree: a leaf is the
    /// letter image, a node is `[x, y] = xy − yx`.
    pub fn evaluate_tree(&self, images: &[Element], tree: &ShirshovTree<usize>) -> Result<Element> {
        match tree {
            ShirshovTree::Leaf(l) => images
                .get(*l)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("letter {l} has no image"))),
            ShirshovTree::Node(a, b) => {
                let x = self.evaluate_tree(images, a)?;
                let y = self.evaluate_tree(images, b)?;
                let mut out = self.checked_multiply(&x, &y)?;
                out.add_scaled(&self.checked_multiply(&y, &x)?, &rat(-1));
                Ok(out)
            }
        }
    }

    /// Multiplication with an explicit bound check instead of a panic.
    fn checked_multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        let (dx, dy) = (self.element_degree(x)?, self.element_degree(y)?);
        if let (Some(dx), Some(dy)) = (dx, dy) {
            let sum = dx.add(&dy)?;
            if sum.max_parts() > self.bound() {
                return Err(Error::BoundExceeded(format!(
                    "product of degrees {dx} and {dy} exceeds bound {}",
                    self.bound()
                )));
            }
        }
        Ok(self.multiply(x, y))
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (id, c) in x.terms() {
            parts.push(format!("{}·{}", format_rat(c), self.basis.label(id)));
        }
        parts.join(" + ")
    }

    /// Checks the bialgebra laws on all data within the truncation bound and
    /// reports each law separately with a witness for the first violation.
    pub fn verify_bialgebra(&self) -> ReportSet {
        let mut set = ReportSet::new();
        let b = &self.basis;
        let bound = self.bound();

        // Connectedness is enforced structurally by `assemble`; restate it.
        set.push(CheckReport::pass("degree 0 is spanned by the unit"));

        // Unit laws.
        let mut unit_ok = None;
        for l in 0..b.len() {
            let x = Element::basis(l);
            if self.multiply(&self.unit_element(), &x) != x
                || self.multiply(&x, &self.unit_element()) != x
            {
                unit_ok = Some(l);
                break;
            }
        }
        set.push(match unit_ok {
            None => CheckReport::pass("unit is a two-sided identity"),
            Some(l) => CheckReport::fail(
                "unit is a two-sided identity",
                format!("fails on {:?}", b.label(l)),
            ),
        });

        // Counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ.
        let mut counit_ok = None;
        for l in 0..b.len() {
            let mut left = Element::zero();
            let mut right = Element::zero();
            for (a, bb, c) in self.coproduct_of(l) {
                if *a == self.unit {
                    left.add_term(*bb, c.clone());
                }
                if *bb == self.unit {
                    right.add_term(*a, c.clone());
                }
            }
            let x = Element::basis(l);
            if left != x || right != x {
                counit_ok = Some(l);
                break;
            }
        }
        set.push(match counit_ok {
            None => CheckReport::pass("counit laws hold"),
            Some(l) => CheckReport::fail(
                "counit laws hold",
                format!("fails on {:?}", b.label(l)),
            ),
        });

        // Δ(1) = 1⊗1.
        let delta_unit = self.coproduct_of(self.unit);
        let unit_coproduct_ok = delta_unit.len() == 1
            && delta_unit[0].0 == self.unit
            && delta_unit[0].1 == self.unit
            && delta_unit[0].2 == rat(1);
        set.push(if unit_coproduct_ok {
            CheckReport::pass("coproduct of the unit is 1⊗1")
        } else {
            CheckReport::fail("coproduct of the unit is 1⊗1", "differs from 1⊗1")
        });

        // Associativity on in-bound triples.
        let mut assoc_witness = None;
        'assoc: for a in 0..b.len() {
            for c in 0..b.len() {
                let dac = b.degree(a).add(b.degree(c)).expect("rank");
                if dac.max_parts() > bound {
                    continue;
                }
                for e in 0..b.len() {
                    let total = dac.add(b.degree(e)).expect("rank");
                    if total.max_parts() > bound {
                        continue;
                    }
                    let (xa, xc, xe) = (Element::basis(a), Element::basis(c), Element::basis(e));
                    let lhs = self.multiply(&self.multiply(&xa, &xc), &xe);
                    let rhs = self.multiply(&xa, &self.multiply(&xc, &xe));
                    if lhs != rhs {
                        assoc_witness = Some((a, c, e));
                        break 'assoc;
                    }
                }
            }
        }
        set.push(match assoc_witness {
            None => CheckReport::pass("multiplication is associative"),
            Some((a, c, e)) => CheckReport::fail(
                "multiplication is associative",
                format!(
                    "fails on ({:?}, {:?}, {:?})",
                    b.label(a),
                    b.label(c),
                    b.label(e)
                ),
            ),
        });

        // Coassociativity.
        let mut coassoc_witness = None;
        for l in 0..b.len() {
            let mut lhs: BTreeMap<(LabelId, LabelId, LabelId), Rat> = BTreeMap::new();
            let mut rhs = lhs.clone();
            for (x, y, c) in self.coproduct_of(l) {
                for (x1, x2, c2) in self.coproduct_of(*x) {
                    let e = lhs.entry((*x1, *x2, *y)).or_insert_with(|| rat(0));
                    *e += c * c2;
                }
                for (y1, y2, c2) in self.coproduct_of(*y) {
                    let e = rhs.entry((*x, *y1, *y2)).or_insert_with(|| rat(0));
                    *e += c * c2;
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                coassoc_witness = Some(l);
                break;
            }
        }
        set.push(match coassoc_witness {
            None => CheckReport::pass("comultiplication is coassociative"),
            Some(l) => CheckReport::fail(
                "comultiplication is coassociative",
                format!("fails on {:?}", b.label(l)),
            ),
        });

        // Compatibility: Δ(xy) = Δ(x)Δ(y) on in-bound pairs.
        let mut compat_witness = None;
        'compat: for a in 0..b.len() {
            for c in 0..b.len() {
                let total = b.degree(a).add(b.degree(c)).expect("rank");
                if total.max_parts() > bound {
                    continue;
                }
                let lhs = self.comultiply(&self.product_of(a, c).clone());
                let rhs = self.multiply_tensor(
                    &self.comultiply(&Element::basis(a)),
                    &self.comultiply(&Element::basis(c)),
                );
                if lhs != rhs {
                    compat_witness = Some((a, c));
                    break 'compat;
                }
            }
        }
        set.push(match compat_witness {
            None => CheckReport::pass("coproduct is an algebra morphism"),
            Some((a, c)) => CheckReport::fail(
                "coproduct is an algebra morphism",
                format!("fails on {:?}·{:?}", b.label(a), b.label(c)),
            ),
        });

        set
    }
}

/// A degree-preserving linear operator: one matrix per graded component,
/// rows and columns indexed by the listed basis order of that component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub blocks: BTreeMap<MultiDegree, Matrix>,
}

impl GradedMap {
    pub fn zero(basis: &GradedBasis) -> Self {
        let blocks = basis
            .dims()
            .into_iter()
            .map(|(d, n)| (d, Matrix::zeros(n, n)))
            .collect();
        GradedMap { blocks }
    }

    pub fn identity(basis: &GradedBasis) -> Self {
        let blocks = basis
            .dims()
            .into_iter()
            .map(|(d, n)| (d, Matrix::identity(n)))
            .collect();
        GradedMap { blocks }
    }

    /// The convolution unit `η∘ε`: identity on degree 0, zero elsewhere.
    pub fn unit_counit(basis: &GradedBasis) -> Self {
        let mut map = Self::zero(basis);
        let zero_deg = MultiDegree::zero(basis.grading_rank());
        map.blocks.insert(zero_deg, Matrix::identity(1));
        map
    }

    /// Builds the operator column by column from images of basis elements;
    /// every image must stay inside the element's graded component.
    pub fn from_images(
        basis: &GradedBasis,
        image: impl Fn(LabelId) -> Element,
    ) -> Result<Self> {
        let mut map = Self::zero(basis);
        for l in 0..basis.len() {
            let deg = basis.degree(l).clone();
            let col = basis.pos_in_degree(l);
            let img = image(l);
            let block = map.blocks.get_mut(&deg).expect("degree present");
            for (id, c) in img.terms() {
                if basis.degree(id) != &deg {
                    return Err(Error::Invalid(format!(
                        "image of {:?} leaves its degree: contains {:?}",
                        basis.label(l),
                        basis.label(id)
                    )));
                }
                block.set(basis.pos_in_degree(id), col, c.clone());
            }
        }
        Ok(map)
    }

    pub fn block(&self, degree: &MultiDegree) -> &Matrix {
        &self.blocks[degree]
    }

    /// Image of one basis element.
    pub fn image_of_label(&self, basis: &GradedBasis, l: LabelId) -> Element {
        let deg = basis.degree(l);
        let block = self.block(deg);
        let col = basis.pos_in_degree(l);
        let ids = basis.of_degree(deg);
        let mut out = Element::zero();
        for (row, &id) in ids.iter().enumerate() {
            out.add_term(id, block.get(row, col).clone());
        }
        out
    }

    pub fn apply(&self, basis: &GradedBasis, x: &Element) -> Element {
        let mut out = Element::zero();
        for (l, c) in x.terms() {
            out.add_scaled(&self.image_of_label(basis, l), c);
        }
        out
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(d, m)| (d.clone(), m.mul(&other.blocks[d])))
            .collect();
        GradedMap { blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(d, m)| (d.clone(), m.add(&other.blocks[d])))
            .collect();
        GradedMap { blocks }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(d, m)| (d.clone(), m.sub(&other.blocks[d])))
            .collect();
        GradedMap { blocks }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(d, m)| (d.clone(), m.scale(c)))
            .collect();
        GradedMap { blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|m| m.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Divided-power bialgebra on one primitive-ish generator: basis
    /// g_0..g_n with g_i·g_j = C(i+j,i) g_{i+j} and Δ(g_k) = Σ g_i ⊗ g_{k−i}.
    fn divided_power(bound: u32) -> HopfData {
        let mut basis = GradedBasis::new();
        for k in 0..=bound {
            basis.add(format!("g{k}"), MultiDegree::scalar(k)).unwrap();
        }
        let mut product = HashMap::new();
        for i in 0..=bound {
            for j in 0..=bound {
                if i + j <= bound {
                    let c = crate::scalar::binomial((i + j) as u64, i as u64);
                    product.insert(
                        (i as usize, j as usize),
                        Element::from_term((i + j) as usize, Rat::from(c)),
                    );
                }
            }
        }
        let coproduct = (0..=bound)
            .map(|k| {
                (0..=k)
                    .map(|i| (i as usize, (k - i) as usize, rat(1)))
                    .collect()
            })
            .collect();
        HopfData::assemble("divided-power", basis, product, coproduct).unwrap()
    }

    #[test]
    fn assemble_validates_structure() {
        let h = divided_power(4);
        assert_eq!(h.bound(), 4);
        assert_eq!(h.unit, 0);
        assert_eq!(h.counit(&Element::basis(0)), rat(1));
        assert_eq!(h.counit(&Element::basis(2)), rat(0));
        // Missing product entry is rejected.
        let mut basis = GradedBasis::new();
        basis.add("e", MultiDegree::scalar(0)).unwrap();
        basis.add("x", MultiDegree::scalar(1)).unwrap();
        let err = HopfData::assemble(
            "broken",
            basis,
            HashMap::new(),
            vec![vec![(0, 0, rat(1))], vec![(0, 1, rat(1)), (1, 0, rat(1))]],
        );
        assert!(err.is_err());
    }

    #[test]
    fn bialgebra_laws_hold_for_divided_powers() {
        let set = divided_power(5).verify_bialgebra();
        assert!(set.all_passed(), "{set}");
    }

    #[test]
    fn broken_coproduct_is_caught() {
        // Tamper with the coproduct of g2 to break coassociativity.
        let mut h = divided_power(3);
        h.coproduct[2] = vec![(0, 2, rat(1)), (2, 0, rat(1)), (1, 1, rat(2))];
        let set = h.verify_bialgebra();
        assert!(!set.all_passed());
    }

    #[test]
    fn graded_map_roundtrip() {
        let h = divided_power(3);
        let id = GradedMap::identity(&h.basis);
        let uc = GradedMap::unit_counit(&h.basis);
        let x = Element::from_term(2, rat(5));
        assert_eq!(id.apply(&h.basis, &x), x);
        assert!(uc.apply(&h.basis, &x).is_zero());
        assert_eq!(uc.apply(&h.basis, &h.unit_element()), h.unit_element());
        let doubled = id.add(&id);
        assert_eq!(doubled.apply(&h.basis, &x), x.scale(&rat(2)));
        assert_eq!(doubled.compose(&doubled).apply(&h.basis, &x), x.scale(&rat(4)));
        assert!(id.sub(&id).is_zero());
        // from_images reproduces the identity.
        let rebuilt = GradedMap::from_images(&h.basis, Element::basis).unwrap();
        assert_eq!(rebuilt, id);
        assert_eq!(rebuilt.image_of_label(&h.basis, 2), Element::basis(2));
    }
}
