//! The convolution algebra of graded endomorphisms and the operators built
//! from it: convolution powers of the identity, the antipode, the
//! logarithm-of-identity projections and their span.
//!
//! For graded maps `f`, `g` the convolution is `f∗g = μ∘(f⊗g)∘Δ`. Its unit
//! is `η∘ε`. On a connected graded bialgebra the map `id − η∘ε` kills the
//! unit, so any series in it truncates exactly on each component: a degree
//! `γ` splits into at most `N(γ)` nonzero pieces, hence `(id − η∘ε)^{∗r}`
//! vanishes on that component for `r > N(γ)`. All series below use that
//! truncation, so every computation here is exact.

use crate::hopf::{Element, GradedMap, HopfData};
use crate::report::{CheckReport, ReportSet};
use crate::scalar::{rat, rat_frac, Rat};
use num::traits::Zero;

pub struct ConvolutionContext<'a> {
    pub hopf: &'a HopfData,
}

impl<'a> ConvolutionContext<'a> {
    pub fn new(hopf: &'a HopfData) -> Self {
        ConvolutionContext { hopf }
    }

    /// The convolution unit `η∘ε`.
    pub fn unit(&self) -> GradedMap {
        GradedMap::unit_counit(&self.hopf.basis)
    }

    pub fn identity(&self) -> GradedMap {
        GradedMap::identity(&self.hopf.basis)
    }

    /// `f∗g = μ∘(f⊗g)∘Δ`, computed per graded component.
    pub fn convolve(&self, f: &GradedMap, g: &GradedMap) -> GradedMap {
        let basis = &self.hopf.basis;
        // Image tables once per operand keep the inner loop cheap.
        let f_img: Vec<Element> = (0..basis.len())
            .map(|l| f.image_of_label(basis, l))
            .collect();
        let g_img: Vec<Element> = (0..basis.len())
            .map(|l| g.image_of_label(basis, l))
            .collect();
        GradedMap::from_images(basis, |l| {
            let mut acc = Element::zero();
            for (a, b, c) in self.hopf.coproduct_of(l) {
                let fa = &f_img[*a];
                let gb = &g_img[*b];
                if fa.is_zero() || gb.is_zero() {
                    continue;
                }
                acc.add_scaled(&self.hopf.multiply(fa, gb), c);
            }
            acc
        })
        .expect("convolution preserves degrees")
    }

    /// `f^{∗k}` by binary powering, `k ≥ 0`.
    pub fn convolution_power(&self, f: &GradedMap, k: u64) -> GradedMap {
        let mut acc = self.unit();
        let mut base = f.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.convolve(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.convolve(&base, &base);
            }
        }
        acc
    }

    /// The antipode as the geometric series `Σ_{r≥0} (η∘ε − id)^{∗r}`,
    /// truncated exactly at the bound.
    pub fn antipode(&self) -> GradedMap {
        let t = self.unit().sub(&self.identity());
        let mut acc = self.unit();
        let mut power = self.unit();
        for _ in 1..=self.hopf.bound() {
            power = self.convolve(&power, &t);
            acc = acc.add(&power);
        }
        acc
    }

    /// The `n`-th convolution power of the identity; negative `n` uses
    /// convolution powers of the antipode.
    pub fn adams(&self, n: i64) -> GradedMap {
        if n >= 0 {
            self.convolution_power(&self.identity(), n as u64)
        } else {
            let s = self.antipode();
            self.convolution_power(&s, (-n) as u64)
        }
    }

    /// `log(id) = Σ_{r≥1} ((−1)^{r−1}/r)·(id − η∘ε)^{∗r}`, exact per degree.
    pub fn log_identity(&self) -> GradedMap {
        let t = self.identity().sub(&self.unit());
        let mut acc = GradedMap::zero(&self.hopf.basis);
        let mut power = self.unit();
        for r in 1..=self.hopf.bound() as i64 {
            power = self.convolve(&power, &t);
            let coeff = if r % 2 == 1 {
                rat_frac(1, r)
            } else {
                rat_frac(-1, r)
            };
            acc = acc.add(&power.scale(&coeff));
        }
        acc
    }

    /// The projection family `(1/r!)·log(id)^{∗r}`; index 0 gives `η∘ε`.
    pub fn eulerian_idempotent(&self, r: u32) -> GradedMap {
        let log = self.log_identity();
        let power = self.convolution_power(&log, r as u64);
        let mut factorial = rat(1);
        for i in 2..=r as i64 {
            factorial *= rat(i);
        }
        power.scale(&(Rat::from_integer(1.into()) / factorial))
    }

    /// All projections `0..=bound` computed off one shared logarithm.
    pub fn eulerian_family(&self) -> Vec<GradedMap> {
        let log = self.log_identity();
        let mut out = Vec::new();
        let mut power = self.unit();
        let mut factorial = rat(1);
        for r in 0..=self.hopf.bound() {
            if r > 0 {
                power = self.convolve(&power, &log);
                factorial *= rat(r as i64);
            }
            out.push(power.scale(&(Rat::from_integer(1.into()) / factorial.clone())));
        }
        out
    }

    /// Checks `Ψ_n = Σ_r n^r e^{(r)}` for each given `n`.
    pub fn check_eulerian_expansion(&self, ns: &[i64]) -> ReportSet {
        let family = self.eulerian_family();
        let mut set = ReportSet::new();
        for &n in ns {
            let mut sum = GradedMap::zero(&self.hopf.basis);
            let mut n_pow = rat(1);
            for e in &family {
                sum = sum.add(&e.scale(&n_pow));
                n_pow *= rat(n);
            }
            let adams = self.adams(n);
            set.push(if sum == adams {
                CheckReport::pass(format!("power map n={n} equals its projection expansion"))
            } else {
                CheckReport::fail(
                    format!("power map n={n} equals its projection expansion"),
                    "matrices differ",
                )
            });
        }
        set
    }

    /// Checks the orthogonal-idempotent laws for the projection family:
    /// the family sums to the identity, each member squares to itself under
    /// composition, and distinct members compose to zero. The first failing
    /// composition is reported with a witness entry.
    pub fn check_idempotent_system(&self) -> ReportSet {
        let family = self.eulerian_family();
        let mut set = ReportSet::new();

        let mut sum = GradedMap::zero(&self.hopf.basis);
        for e in &family {
            sum = sum.add(e);
        }
        set.push(if sum == self.identity() {
            CheckReport::pass("projections sum to the identity")
        } else {
            CheckReport::fail("projections sum to the identity", "sum differs")
        });

        let mut witness: Option<String> = None;
        'outer: for (m, em) in family.iter().enumerate() {
            for (n, en) in family.iter().enumerate() {
                let comp = em.compose(en);
                let want = if m == n {
                    em.clone()
                } else {
                    GradedMap::zero(&self.hopf.basis)
                };
                if comp != want {
                    let bad = comp.sub(&want);
                    let (deg, mat) = bad
                        .blocks
                        .iter()
                        .find(|(_, mx)| !mx.is_zero())
                        .expect("some block differs");
                    let (i, j) = (0..mat.rows())
                        .flat_map(|i| (0..mat.cols()).map(move |j| (i, j)))
                        .find(|&(i, j)| !mat.get(i, j).is_zero())
                        .unwrap();
                    witness = Some(format!(
                        "e({m})∘e({n}) ≠ {} in degree {deg}, entry ({i},{j}) off by {}",
                        if m == n { format!("e({m})") } else { "0".into() },
                        mat.get(i, j)
                    ));
                    break 'outer;
                }
            }
        }
        set.push(match witness {
            None => CheckReport::pass("projections compose orthogonally"),
            Some(w) => CheckReport::fail("projections compose orthogonally", w),
        });
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::MultiDegree;
    use crate::hopf::GradedBasis;
    use crate::scalar::binomial;
    use std::collections::HashMap;

    /// Divided-power bialgebra (commutative and cocommutative).
    fn divided_power(bound: u32) -> HopfData {
        let mut basis = GradedBasis::new();
        for k in 0..=bound {
            basis.add(format!("g{k}"), MultiDegree::scalar(k)).unwrap();
        }
        let mut product = HashMap::new();
        for i in 0..=bound as usize {
            for j in 0..=bound as usize {
                if i + j <= bound as usize {
                    let c = binomial((i + j) as u64, i as u64);
                    product.insert((i, j), Element::from_term(i + j, Rat::from(c)));
                }
            }
        }
        let coproduct = (0..=bound as usize)
            .map(|k| (0..=k).map(|i| (i, k - i, rat(1))).collect())
            .collect();
        HopfData::assemble("divided-power", basis, product, coproduct).unwrap()
    }

    #[test]
    fn convolution_unit_is_neutral() {
        let h = divided_power(4);
        let ctx = ConvolutionContext::new(&h);
        let id = ctx.identity();
        assert_eq!(ctx.convolve(&ctx.unit(), &id), id);
        assert_eq!(ctx.convolve(&id, &ctx.unit()), id);
    }

    #[test]
    fn power_maps_multiply_degreewise_here() {
        // On the divided-power bialgebra Δ(g_k) has Σ over splits, and the
        // n-th convolution power of the identity scales g_k by n^k.
        let h = divided_power(4);
        let ctx = ConvolutionContext::new(&h);
        for n in 0..4i64 {
            let psi = ctx.adams(n);
            for k in 0..=4u32 {
                let img = psi.apply(&h.basis, &Element::basis(k as usize));
                let want = Element::from_term(
                    k as usize,
                    Rat::from(num::BigInt::from(n).pow(k)),
                );
                let want = if n == 0 && k > 0 { Element::zero() } else { want };
                assert_eq!(img, want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn antipode_inverts_identity() {
        let h = divided_power(5);
        let ctx = ConvolutionContext::new(&h);
        let s = ctx.antipode();
        let id = ctx.identity();
        assert_eq!(ctx.convolve(&s, &id), ctx.unit());
        assert_eq!(ctx.convolve(&id, &s), ctx.unit());
        // Negative power maps are powers of the antipode: Ψ_{-1} = S.
        assert_eq!(ctx.adams(-1), s);
        assert_eq!(ctx.adams(-2), ctx.convolve(&s, &s));
        // Ψ_a ∗ Ψ_b = Ψ_{a+b} (id commutes with itself under convolution).
        let lhs = ctx.convolve(&ctx.adams(2), &ctx.adams(-1));
        assert_eq!(lhs, ctx.adams(1));
    }

    #[test]
    fn power_maps_compose_multiplicatively() {
        let h = divided_power(4);
        let ctx = ConvolutionContext::new(&h);
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                assert_eq!(
                    ctx.adams(a).compose(&ctx.adams(b)),
                    ctx.adams(a * b),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn eulerian_expansion_and_idempotents() {
        let h = divided_power(4);
        let ctx = ConvolutionContext::new(&h);
        let exp = ctx.check_eulerian_expansion(&[-2, -1, 0, 1, 2, 3]);
        assert!(exp.all_passed(), "{exp}");
        // Divided powers are commutative and cocommutative, so the
        // projections form an orthogonal system.
        let idem = ctx.check_idempotent_system();
        assert!(idem.all_passed(), "{idem}");
        // Single projection accessor agrees with the family.
        let fam = ctx.eulerian_family();
        assert_eq!(ctx.eulerian_idempotent(2), fam[2]);
        assert_eq!(ctx.eulerian_idempotent(0), ctx.unit());
    }
}
