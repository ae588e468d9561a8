//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending with no trailing zeros; the zero
//! polynomial has an empty coefficient vector.

use crate::scalar::{format_rat, rat, Rat};
use num::traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![rat(0), rat(1)])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `c·x^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![rat(0); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                quo[k] = factor.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k + i;
                    let v = &rem[idx] - &(b * &factor);
                    rem[idx] = v;
                }
            }
            rem.pop();
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    /// Leading coefficient scaled to 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divmod(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * rat(k as i64));
        }
        Poly::from_coeffs(out)
    }

    /// A nonzero polynomial is squarefree when it shares no factor with its
    /// derivative.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `Π (x − r)^m` over the given root/multiplicity pairs.
    pub fn from_roots(roots: &[(Rat, usize)]) -> Self {
        let mut acc = Poly::one();
        for (r, m) in roots {
            let lin = Poly::from_coeffs(vec![-r.clone(), rat(1)]);
            acc = acc.mul(&lin.pow(*m as u32));
        }
        acc
    }

    /// Divides out `(x − root)` once if the remainder is zero.
    pub fn divide_by_linear(&self, root: &Rat) -> Option<Self> {
        if self.is_zero() || !self.eval(root).is_zero() {
            return None;
        }
        let lin = Poly::from_coeffs(vec![-root.clone(), rat(1)]);
        let (q, r) = self.divmod(&lin);
        debug_assert!(r.is_zero());
        Some(q)
    }

    /// Splits off as many linear factors with roots among `candidates` as
    /// possible; returns the root multiplicities found and the cofactor.
    pub fn factor_roots(&self, candidates: &[Rat]) -> (Vec<(Rat, usize)>, Poly) {
        let mut rest = self.clone();
        let mut found: Vec<(Rat, usize)> = Vec::new();
        for r in candidates {
            let mut mult = 0;
            while let Some(q) = rest.divide_by_linear(r) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                found.push((r.clone(), mult));
            }
        }
        (found, rest)
    }
}

/// Renders `Π (x − r)^m · cofactor` as text, e.g. `(x - 2)^4 (x - 4) (x - 8)`.
pub fn factored_string(roots: &[(Rat, usize)], cofactor: &Poly) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (r, m) in roots {
        let base = if r.is_zero() {
            "x".to_string()
        } else if r > &rat(0) {
            format!("(x - {})", format_rat(r))
        } else {
            format!("(x + {})", format_rat(&-r.clone()))
        };
        if *m == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{m}"));
        }
    }
    if cofactor != &Poly::one() {
        parts.push(format!("({cofactor})"));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &rat(0);
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rat(&abs))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}
