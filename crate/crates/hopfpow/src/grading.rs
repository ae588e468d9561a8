//! Multidegrees over the free abelian monoid `ℕᵏ` and their
//! addition-compatible well order.
//!
//! The order used everywhere is graded-lexicographic: compare total part sums
//! first, then the parts lexicographically. `max_parts` returns the largest
//! number of nonzero summands a degree can be split into, which equals the
//! part sum.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// An element of the grading monoid `ℕᵏ`.
///
/// `Ord` is the graded-lexicographic order (total part sum first, then
/// lexicographic on parts); comparing degrees of different rank is a caller
/// bug surfaced by [`graded_compare`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree {
    parts: Vec<u32>,
}

impl MultiDegree {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "rank must be at least 1");
        MultiDegree { parts }
    }

    /// The zero degree of the given rank.
    pub fn zero(rank: usize) -> Self {
        Self::new(vec![0; rank])
    }

    /// Rank-1 convenience constructor.
    pub fn scalar(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// The largest `r` such that the degree splits as a sum of `r` nonzero
    /// degrees; equals the part sum (zero for the zero degree).
    pub fn max_parts(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Componentwise sum; errors on rank mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        Ok(Self::new(
            self.parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Componentwise difference, or `None` when not componentwise `≥`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.rank() != other.rank() {
            return None;
        }
        let parts: Option<Vec<u32>> = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect();
        parts.map(Self::new)
    }

    /// `true` when every part of `other` is `≤` the matching part of `self`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.rank() == other.rank()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// Scalar multiple.
    pub fn times(&self, k: u32) -> Self {
        Self::new(self.parts.iter().map(|p| p * k).collect())
    }

    /// Stable text key, e.g. `"3"` or `"2,1"`; used for JSON map keys.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the [`key`](Self::key) form.
    pub fn parse_key(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse()).collect();
        match parts {
            Ok(parts) if !parts.is_empty() => Ok(Self::new(parts)),
            _ => Err(Error::Parse(format!("bad degree key {s:?}"))),
        }
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            write!(f, "{}", self.parts[0])
        } else {
            write!(f, "({})", self.key())
        }
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.rank(), other.rank(), "rank mismatch in comparison");
        self.max_parts()
            .cmp(&other.max_parts())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic comparison with an explicit rank check.
pub fn graded_compare(a: &MultiDegree, b: &MultiDegree) -> Result<Ordering> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    Ok(a.cmp(b))
}

/// All degrees of the given rank with part sum `≤ bound`, ascending in the
/// graded-lexicographic order.
pub fn degrees_up_to(rank: usize, bound: u32) -> Vec<MultiDegree> {
    fn fill(rank: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        if prefix.len() == rank {
            out.push(MultiDegree::new(prefix.clone()));
            return;
        }
        for p in 0..=remaining {
            prefix.push(p);
            fill(rank, remaining - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=bound {
        let mut batch = Vec::new();
        fill(rank, total, &mut Vec::new(), &mut batch);
        batch.retain(|d| d.max_parts() == total);
        batch.sort();
        out.extend(batch);
    }
    out
}
