//! Dense exact-rational matrices.
//!
//! Besides the usual arithmetic and Gauss–Jordan routines, this module
//! computes characteristic polynomials by a modular method: scale the matrix
//! to integers, reduce modulo enough machine-word primes, take the
//! characteristic polynomial of each reduction via a Hessenberg form, and
//! reassemble the integer coefficients by the Chinese remainder theorem.
//! Characteristic polynomials commute with ring homomorphisms, so each
//! modular image is exactly the reduction of the true answer and the
//! reconstruction is exact once the prime product exceeds a coefficient
//! bound. Minimal polynomials come from rational Krylov iteration.

use crate::poly::Poly;
use crate::scalar::{binomial, rat, Rat};
use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let want = if i == j { rat(1) } else { rat(0) };
                    *self.get(i, j) == want
                })
            })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out.data[i * other.cols + j] + &(a * b);
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix · column vector.
    pub fn apply_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = rat(0);
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Nonzero entries strictly below the diagonal, as `(row, col, value)`.
    pub fn lower_violations(&self) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..i.min(self.cols) {
                if !self.get(i, j).is_zero() {
                    out.push((i, j, self.get(i, j).clone()));
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = Rat::one() / m.get(r, c);
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![rat(0); self.cols];
            v[free] = rat(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, rat(1));
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Evaluates `p` at this (square) matrix by Horner's scheme.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Characteristic polynomial `det(x·I − A)`, monic of degree `n`.
    pub fn char_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        // Scale to an integer matrix B = L·A.
        let mut l = BigInt::one();
        for v in &self.data {
            l = l.lcm(v.denom());
        }
        let ints: Vec<BigInt> = self
            .data
            .iter()
            .map(|v| v.numer() * (&l / v.denom()))
            .collect();
        let max_abs = ints
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        if max_abs.is_zero() {
            return Poly::monomial(n, rat(1));
        }
        // |coefficient of x^(n-k)| ≤ C(n,k)·(√k·M)^k by Hadamard's bound on
        // the k×k principal minors.
        let mut bound = BigInt::one();
        for k in 1..=n {
            let mut s = 1u64;
            while (s + 1) * (s + 1) <= k as u64 {
                s += 1;
            }
            let term = binomial(n as u64, k as u64)
                * (&max_abs * BigInt::from(s + 1)).pow(k as u32);
            if term > bound {
                bound = term;
            }
        }
        let target: BigInt = bound * 2 + 1;
        // Characteristic polynomial of B modulo each prime, then CRT.
        let mut modulus = BigInt::one();
        let mut residues: Vec<BigInt> = vec![BigInt::zero(); n + 1];
        let mut prime = 1u64 << 31;
        while modulus < target {
            prime = previous_prime(prime);
            let p = prime;
            let reduced: Vec<u64> = ints
                .iter()
                .map(|v| v.mod_floor(&BigInt::from(p)).to_u64().unwrap())
                .collect();
            let cp = char_poly_mod_p(&reduced, n, p);
            // Fold the new residue into each coefficient.
            let m_mod_p = modulus.mod_floor(&BigInt::from(p)).to_u64().unwrap();
            let m_inv = inv_mod(m_mod_p % p, p);
            for (acc, &r) in residues.iter_mut().zip(&cp) {
                let cur_mod_p = acc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
                let t = mul_mod(sub_mod(r, cur_mod_p, p), m_inv, p);
                *acc += &modulus * BigInt::from(t);
            }
            modulus *= BigInt::from(p);
        }
        // Symmetric range, then undo the scaling: the coefficient of x^k in
        // det(xI − A) is the integer coefficient divided by L^(n−k).
        let half = &modulus / 2;
        let coeffs: Vec<Rat> = residues
            .into_iter()
            .enumerate()
            .map(|(k, mut c)| {
                if c > half {
                    c -= &modulus;
                }
                Rat::new(c, l.pow((n - k) as u32))
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Minimal polynomial via Krylov chains from standard basis vectors.
    /// Start vectors already inside the accumulated (invariant) Krylov span
    /// are skipped: the polynomial collected so far annihilates that span.
    pub fn min_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut acc = Poly::one();
        let mut union = RowSpan::new(n);
        for start in 0..n {
            let mut e = vec![rat(0); n];
            e[start] = rat(1);
            if union.contains(&e) {
                continue;
            }
            // Krylov rows with elimination bookkeeping: each stored row keeps
            // the combination of powers A^k·e that produced it.
            let mut stored: Vec<(Vec<Rat>, usize, Vec<Rat>)> = Vec::new();
            let mut cur = e;
            let mut k = 0usize;
            loop {
                union.insert(cur.clone());
                let mut v = cur.clone();
                let mut combo = vec![rat(0); k + 1];
                combo[k] = rat(1);
                for (rvec, rpivot, rcombo) in &stored {
                    if v[*rpivot].is_zero() {
                        continue;
                    }
                    let f = v[*rpivot].clone();
                    for (a, b) in v.iter_mut().zip(rvec) {
                        *a -= &f * b;
                    }
                    for (i, b) in rcombo.iter().enumerate() {
                        combo[i] -= &f * b;
                    }
                }
                match v.iter().position(|x| !x.is_zero()) {
                    None => {
                        // Σ combo[i]·A^i e = 0, and combo[k] = 1 by
                        // construction, so this is the monic annihilator.
                        acc = acc.lcm(&Poly::from_coeffs(combo));
                        break;
                    }
                    Some(pivot) => {
                        let inv = Rat::one() / &v[pivot];
                        for a in v.iter_mut() {
                            *a *= &inv;
                        }
                        for a in combo.iter_mut() {
                            *a *= &inv;
                        }
                        stored.push((v, pivot, combo));
                        cur = self.apply_vec(&cur);
                        k += 1;
                    }
                }
            }
        }
        acc
    }
}

/// Incremental row-echelon accumulator for span membership and rank queries.
pub struct RowSpan {
    dim: usize,
    rows: Vec<(Vec<Rat>, usize)>,
}

impl RowSpan {
    pub fn new(dim: usize) -> Self {
        RowSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (rvec, rpivot) in &self.rows {
            if v[*rpivot].is_zero() {
                continue;
            }
            let f = v[*rpivot].clone();
            for (a, b) in v.iter_mut().zip(rvec) {
                *a -= &f * b;
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v;
        self.reduce(&mut w);
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let inv = Rat::one() / &w[pivot];
                for a in w.iter_mut() {
                    *a *= &inv;
                }
                self.rows.push((w, pivot));
                true
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31, so the product fits in u64.
    (a * b) % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn previous_prime(below: u64) -> u64 {
    let mut c = below - 1;
    if c % 2 == 0 {
        c -= 1;
    }
    while !is_prime_u64(c) {
        c -= 2;
    }
    c
}

/// Characteristic polynomial of an `n×n` matrix over `Z/p`, coefficients
/// ascending, via Hessenberg reduction and the standard recurrence for the
/// leading principal characteristic polynomials.
fn char_poly_mod_p(entries: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut h: Vec<Vec<u64>> = (0..n)
        .map(|i| entries[i * n..(i + 1) * n].iter().map(|&v| v % p).collect())
        .collect();
    // Similarity-reduce to upper Hessenberg form.
    for j in 0..n.saturating_sub(2) {
        let Some(r) = ((j + 1)..n).find(|&r| h[r][j] != 0) else {
            continue;
        };
        if r != j + 1 {
            h.swap(r, j + 1);
            for row in h.iter_mut() {
                row.swap(r, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for i in (j + 2)..n {
            if h[i][j] == 0 {
                continue;
            }
            let f = mul_mod(h[i][j], inv, p);
            for c in 0..n {
                let sub = mul_mod(f, h[j + 1][c], p);
                h[i][c] = sub_mod(h[i][c], sub, p);
            }
            for r2 in 0..n {
                let add = mul_mod(f, h[r2][i], p);
                h[r2][j + 1] = add_mod(h[r2][j + 1], add, p);
            }
        }
    }
    // p_0 = 1;  p_k = (x − h[k,k])·p_{k−1} − Σ_i h[i,k]·(β_{i+1}⋯β_k)·p_{i−1}
    // with β_m the subdiagonal entries (1-based indices).
    let mut polys: Vec<Vec<u64>> = vec![vec![1 % p]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (d, &c) in prev.iter().enumerate() {
            pk[d + 1] = add_mod(pk[d + 1], c, p);
            let sub = mul_mod(h[k - 1][k - 1], c, p);
            pk[d] = sub_mod(pk[d], sub, p);
        }
        let mut beta_prod = 1 % p;
        for i in (1..k).rev() {
            beta_prod = mul_mod(beta_prod, h[i][i - 1], p);
            if beta_prod == 0 {
                break;
            }
            let coeff = mul_mod(h[i - 1][k - 1], beta_prod, p);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                let sub = mul_mod(coeff, c, p);
                pk[d] = sub_mod(pk[d], sub, p);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}
