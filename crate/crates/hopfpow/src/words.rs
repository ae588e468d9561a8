//! Words over an ordered alphabet: the pseudo-lexicographic order, Lyndon
//! words, the nondecreasing Lyndon factorization, and standard bracketings.
//!
//! The pseudo-lexicographic order on nonempty words puts a word *below* each
//! of its proper prefixes (`uv < u` for nonempty `v`) and otherwise decides
//! by the first differing letter. A nonempty word is Lyndon when it is
//! strictly *greater* than every proper cyclic rotation of itself; every
//! word then factors uniquely as a nondecreasing product of Lyndon words.
//! A Lyndon word of length `≥ 2` splits as `u = u_L u_R` with `u_R` its
//! largest proper suffix (equivalently, its longest proper Lyndon suffix);
//! both parts are Lyndon with `u_R < u_L`, and iterating the split gives the
//! standard bracketing.
//!
//! All functions take a three-way letter comparator so they can be reused
//! over plain integers, graded generator labels, or permutations.

use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use std::cmp::Ordering;

/// A finite ordered alphabet with a degree attached to each letter.
///
/// Letters are referred to by index; index order is the letter order. When
/// `degree_compatible` is set, [`push`](Self::push) insists the degrees be
/// nondecreasing along the letter order, which makes the induced word order
/// interact correctly with the grading.
#[derive(Clone, Debug)]
pub struct Alphabet {
    labels: Vec<String>,
    degrees: Vec<MultiDegree>,
    degree_compatible: bool,
}

impl Alphabet {
    pub fn new(degree_compatible: bool) -> Self {
        Alphabet {
            labels: Vec::new(),
            degrees: Vec::new(),
            degree_compatible,
        }
    }

    pub fn push(&mut self, label: String, degree: MultiDegree) -> Result<usize> {
        if degree.is_zero() {
            return Err(Error::Invalid(format!(
                "letter {label:?} must have nonzero degree"
            )));
        }
        if self.degree_compatible {
            if let Some(last) = self.degrees.last() {
                if degree < *last {
                    return Err(Error::Invalid(format!(
                        "letter {label:?} of degree {degree} listed after a letter of larger degree {last}"
                    )));
                }
            }
        }
        self.labels.push(label);
        self.degrees.push(degree);
        Ok(self.labels.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degree(&self, i: usize) -> &MultiDegree {
        &self.degrees[i]
    }

    /// Total degree of a word over this alphabet.
    pub fn word_degree(&self, word: &[usize]) -> MultiDegree {
        let rank = self.degrees.first().map_or(1, |d| d.rank());
        let mut total = MultiDegree::zero(rank);
        for &i in word {
            total = total.add(&self.degrees[i]).expect("uniform rank");
        }
        total
    }

    /// Render a word as its letter labels joined by `.`.
    pub fn word_label(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Pseudo-lexicographic comparison of two words, letters compared by `cmp`.
/// The first differing letter decides; when one word is a proper prefix of
/// the other, the longer word (the proper extension) is smaller.
pub fn pseudo_lex_compare_by<T, C>(u: &[T], v: &[T], cmp: &C) -> Ordering
where
    C: Fn(&T, &T) -> Ordering,
{
    let n = u.len().min(v.len());
    for i in 0..n {
        match cmp(&u[i], &v[i]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    v.len().cmp(&u.len())
}

/// `true` when `u` is nonempty and strictly greater than every proper cyclic
/// rotation of itself in the pseudo-lexicographic order.
pub fn is_lyndon_by<T: Clone, C>(u: &[T], cmp: &C) -> bool
where
    C: Fn(&T, &T) -> Ordering,
{
    if u.is_empty() {
        return false;
    }
    for k in 1..u.len() {
        let mut rot: Vec<T> = u[k..].to_vec();
        rot.extend_from_slice(&u[..k]);
        if pseudo_lex_compare_by(&rot, u, cmp) != Ordering::Less {
            return false;
        }
    }
    true
}

/// Factors `word` into Lyndon words, nondecreasing in the
/// pseudo-lexicographic order. This is Duval's algorithm run under the
/// reversed letter order, which maps classical Lyndon factorization onto the
/// convention used here (rotation-maximal factors, extensions smaller).
pub fn lyndon_factorize_by<T: Clone, C>(word: &[T], cmp: &C) -> Vec<Vec<T>>
where
    C: Fn(&T, &T) -> Ordering,
{
    let n = word.len();
    let mut factors = Vec::new();
    let mut k = 0;
    while k < n {
        let mut i = k;
        let mut j = k + 1;
        // Under the reversed letter order, continue while word[i] <= word[j],
        // i.e. while word[i] >= word[j] in the original order.
        while j < n && cmp(&word[i], &word[j]) != Ordering::Less {
            i = if cmp(&word[i], &word[j]) == Ordering::Greater {
                k
            } else {
                i + 1
            };
            j += 1;
        }
        while k <= i {
            factors.push(word[k..k + j - i].to_vec());
            k += j - i;
        }
    }
    factors
}

/// The standard split of a Lyndon word of length `≥ 2`: `u_R` is the largest
/// proper suffix in the pseudo-lexicographic order, `u_L` the complementary
/// prefix. Returns the split position, i.e. `u_L = &u[..pos]`,
/// `u_R = &u[pos..]`.
pub fn shirshov_split_by<T, C>(u: &[T], cmp: &C) -> usize
where
    C: Fn(&T, &T) -> Ordering,
{
    assert!(u.len() >= 2, "split needs length at least 2");
    let mut best = 1;
    for start in 2..u.len() {
        if pseudo_lex_compare_by(&u[start..], &u[best..], cmp) == Ordering::Greater {
            best = start;
        }
    }
    best
}

/// A binary bracketing tree with letters at the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShirshovTree<T> {
    Leaf(T),
    Node(Box<ShirshovTree<T>>, Box<ShirshovTree<T>>),
}

impl<T: Clone> ShirshovTree<T> {
    /// Leaves in left-to-right order.
    pub fn frontier(&self) -> Vec<T> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<T>) {
        match self {
            ShirshovTree::Leaf(t) => out.push(t.clone()),
            ShirshovTree::Node(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }
}

/// The standard bracketing of a Lyndon word: a letter stands alone, and a
/// longer word brackets as `[[u_L],[u_R]]` along the standard split. Errors
/// on non-Lyndon input.
pub fn bracket_tree_by<T: Clone, C>(
    u: &[T],
    cmp: &C,
    describe: &dyn Fn(&[T]) -> String,
) -> Result<ShirshovTree<T>>
where
    C: Fn(&T, &T) -> Ordering,
{
    if !is_lyndon_by(u, cmp) {
        return Err(Error::Invalid(format!(
            "standard bracketing requires a Lyndon word, got {}",
            describe(u)
        )));
    }
    Ok(bracket_tree_unchecked(u, cmp))
}

fn bracket_tree_unchecked<T: Clone, C>(u: &[T], cmp: &C) -> ShirshovTree<T>
where
    C: Fn(&T, &T) -> Ordering,
{
    if u.len() == 1 {
        return ShirshovTree::Leaf(u[0].clone());
    }
    let pos = shirshov_split_by(u, cmp);
    ShirshovTree::Node(
        Box::new(bracket_tree_unchecked(&u[..pos], cmp)),
        Box::new(bracket_tree_unchecked(&u[pos..], cmp)),
    )
}

/// All words of length `1..=max_len` over `0..letters` (plus the empty
/// word), grouped by increasing length, index order within a length.
pub fn words_up_to(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..letters {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
