//! Hilbert series, primitive-dimension inversion, multiplicities of
//! eigenvalue strata, and the predicted characteristic polynomial of a
//! power operator, all in exact arithmetic.
//!
//! On a connected graded bialgebra whose associated graded is a free
//! commutative algebra on primitives, the dimension generating function
//! factors as `∏_{γ>0} (1 − t^γ)^{−p_γ}`. Inverting that product degree by
//! degree recovers the primitive counts `p_γ`, and the eigenvalue stratum
//! of `nˢ` inside degree γ has dimension equal to the number of degree-γ
//! monomials in exactly `s` primitive factors.

use crate::error::{Error, Result};
use crate::grading::{degrees_up_to, MultiDegree};
use crate::hopf::HopfData;
use crate::poly::Poly;
use crate::scalar::Rat;
use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Dimension of every graded component with part-sum at most the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub rank: usize,
    pub bound: u32,
    pub dims: BTreeMap<MultiDegree, usize>,
}

impl HilbertSeries {
    pub fn dim(&self, degree: &MultiDegree) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    /// Convenience for rank-1 gradings: dims listed by total degree.
    pub fn scalar_dims(&self) -> Vec<usize> {
        (0..=self.bound)
            .map(|m| self.dim(&MultiDegree::new(vec![m])))
            .collect()
    }
}

/// Primitive-space dimensions `p_γ` per positive degree; zero entries are
/// omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDims {
    pub rank: usize,
    pub bound: u32,
    pub counts: BTreeMap<MultiDegree, usize>,
}

impl PrimitiveDims {
    pub fn count(&self, degree: &MultiDegree) -> usize {
        self.counts.get(degree).copied().unwrap_or(0)
    }

    /// Convenience for rank-1 gradings: counts listed for degrees 1..bound.
    pub fn scalar_counts(&self) -> Vec<usize> {
        (1..=self.bound)
            .map(|m| self.count(&MultiDegree::new(vec![m])))
            .collect()
    }
}

/// Reads off per-degree dimensions, including explicit zeros for empty
/// components inside the bound.
pub fn hilbert_series(h: &HopfData) -> HilbertSeries {
    let rank = h.basis.grading_rank();
    let bound = h.bound();
    let mut dims = BTreeMap::new();
    for degree in degrees_up_to(rank, bound) {
        dims.insert(degree.clone(), h.basis.of_degree(&degree).len());
    }
    HilbertSeries { rank, bound, dims }
}

fn binom_big(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Solves `∏_{γ>0} (1 − t^γ)^{−p_γ} = Σ dim_γ t^γ` for the `p_γ`,
/// processing degrees in ascending graded-lexicographic order. Rejects
/// inputs that force a negative count.
pub fn primitive_dims(series: &HilbertSeries) -> Result<PrimitiveDims> {
    let rank = series.rank;
    let bound = series.bound;
    let zero_deg = MultiDegree::zero(rank);
    if series.dim(&zero_deg) != 1 {
        return Err(Error::Invalid(
            "dimension at degree zero must be 1".into(),
        ));
    }
    let mut partial: BTreeMap<MultiDegree, BigInt> =
        BTreeMap::from([(zero_deg, BigInt::one())]);
    let mut counts = BTreeMap::new();
    for gamma in degrees_up_to(rank, bound) {
        if gamma.is_zero() {
            continue;
        }
        let current = partial.get(&gamma).cloned().unwrap_or_else(BigInt::zero);
        let need = BigInt::from(series.dim(&gamma)) - current;
        if need.is_negative() {
            return Err(Error::Invalid(format!(
                "no nonnegative primitive count at degree {gamma}: \
                 product already exceeds the series by {}",
                -need
            )));
        }
        if need.is_zero() {
            continue;
        }
        // Multiply the partial product by (1 − t^γ)^{−need}.
        let mut next = BTreeMap::new();
        for (delta, coeff) in &partial {
            let mut shifted = delta.clone();
            let mut d = 0usize;
            loop {
                let factor = binom_big(&(&need + BigInt::from(d as i64) - BigInt::one()), d);
                let entry = next.entry(shifted.clone()).or_insert_with(BigInt::zero);
                *entry += coeff * factor;
                d += 1;
                match shifted.add(&gamma) {
                    Ok(s) if s.max_parts() <= bound => shifted = s,
                    _ => break,
                }
            }
        }
        partial = next;
        counts.insert(
            gamma,
            usize::try_from(&need).map_err(|_| Error::Invalid("count overflow".into()))?,
        );
    }
    Ok(PrimitiveDims {
        rank,
        bound,
        counts,
    })
}

/// Number of degree-γ monomials in exactly `n` primitive factors: the sum
/// over families `(d_α)` with `Σ d_α = n` and `Σ d_α·α = γ` of
/// `∏ binom(p_α + d_α − 1, d_α)`.
pub fn multiplicity(p: &PrimitiveDims, n: usize, gamma: &MultiDegree) -> BigInt {
    let support: Vec<(&MultiDegree, usize)> = p
        .counts
        .iter()
        .filter(|(a, _)| gamma.dominates(a))
        .map(|(a, &c)| (a, c))
        .collect();
    fn go(
        support: &[(&MultiDegree, usize)],
        i: usize,
        remaining: MultiDegree,
        n: usize,
    ) -> BigInt {
        if i == support.len() {
            return if remaining.is_zero() && n == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let (alpha, count) = support[i];
        let mut total = BigInt::zero();
        let mut left = Some(remaining);
        let mut d = 0usize;
        while let Some(rem) = left {
            if d > n {
                break;
            }
            let ways = binom_big(&BigInt::from((count + d) as i64 - 1), d);
            if !ways.is_zero() {
                total += ways * go(support, i + 1, rem.clone(), n - d);
            }
            left = rem.checked_sub(alpha);
            d += 1;
        }
        total
    }
    go(&support, 0, gamma.clone(), n)
}

/// The predicted characteristic polynomial of the `n`-th power operator on
/// degree γ: `∏_{s=0}^{N(γ)} (x − nˢ)^{mul(s,γ)}`, with `0⁰ = 1`. Returns
/// the expanded polynomial together with the factor list merged by
/// eigenvalue (ascending), since distinct strata can share an eigenvalue
/// when `n ∈ {−1, 0, 1}`.
pub fn predicted_char_poly(
    p: &PrimitiveDims,
    n: i64,
    gamma: &MultiDegree,
) -> (Poly, Vec<(Rat, usize)>) {
    let top = gamma.max_parts() as usize;
    let mut by_eigenvalue: BTreeMap<BigInt, usize> = BTreeMap::new();
    for s in 0..=top {
        let mult = multiplicity(p, s, gamma);
        if mult.is_zero() {
            continue;
        }
        let ev = if n == 0 && s == 0 {
            BigInt::one()
        } else {
            BigInt::from(n).pow(s as u32)
        };
        *by_eigenvalue.entry(ev).or_insert(0) +=
            usize::try_from(&mult).expect("desk-scale multiplicity");
    }
    let factors: Vec<(Rat, usize)> = by_eigenvalue
        .into_iter()
        .map(|(ev, m)| (Rat::from_integer(ev), m))
        .collect();
    (Poly::from_roots(&factors), factors)
}

/// Cross-checks the counting formula against a constructed basis: for each
/// degree within bound and each possible length, the number of sorted
/// sequences of that length and degree must equal the predicted
/// multiplicity. Requires all heights unbounded.
pub fn count_sequences_check(
    basis: &crate::pbw::PbwBasis,
    p: &PrimitiveDims,
) -> crate::report::ReportSet {
    use crate::report::{CheckReport, ReportSet};
    let mut reports = ReportSet::new();
    if let Some(g) = basis
        .family
        .generators()
        .iter()
        .find(|g| g.height.is_some())
    {
        reports.push(CheckReport::fail(
            "sequence counts match predicted multiplicities",
            format!("generator {} has a finite height cap", g.label),
        ));
        return reports;
    }
    for (degree, seqs) in &basis.sequences {
        let top = degree.max_parts() as usize;
        let mut ok = true;
        let mut witness = None;
        for n in 0..=top + 1 {
            let counted = seqs.iter().filter(|v| v.len() == n).count();
            let predicted = multiplicity(p, n, degree);
            if BigInt::from(counted) != predicted {
                ok = false;
                witness.get_or_insert(format!(
                    "length {n}: {counted} sequences vs predicted {predicted}"
                ));
            }
        }
        let name = format!("sequence counts match multiplicities at degree {degree}");
        reports.push(if ok {
            CheckReport::pass(name)
        } else {
            CheckReport::fail(name, witness.unwrap_or_default())
        });
    }
    reports
}
