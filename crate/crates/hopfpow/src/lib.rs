//! Exact-arithmetic toolkit for convolution powers (Adams operators) on
//! connected graded Hopf algebras.
//!
//! The library provides:
//!
//! * multidegrees over a free abelian monoid with the graded-lexicographic
//!   well order ([`grading`]);
//! * words over totally ordered graded alphabets, the pseudo-lexicographic
//!   order (proper extensions are *smaller*), Lyndon words, Shirshov
//!   factorization and bracketing trees ([`words`]);
//! * connected graded Hopf algebras given by exact rational structure
//!   constants, with bialgebra-axiom verification and exact characteristic /
//!   minimal polynomials ([`hopf`], [`matrix`], [`poly`]);
//! * the convolution algebra of graded endomorphisms: Adams operators for all
//!   integers, the antipode series, and Eulerian idempotents
//!   ([`convolution`]);
//! * a PBW-basis constructor from irreducible Lyndon words, the sorted
//!   sequence combinatorics and the triangularity checks ([`pbw`]);
//! * the Malvenuto-Reutenauer Hopf algebra of permutations with its
//!   fundamental, monomial and T bases ([`ssym`]);
//! * commutative (shuffle) and cocommutative (tensor) built-in instances
//!   ([`instances`]);
//! * Hilbert series inversion, eigenvalue multiplicities and predicted
//!   characteristic polynomials ([`spectra`]);
//! * JSON persistence with a canonical byte-stable encoding ([`io`]) and a
//!   batch CLI ([`cli`]).

pub mod cli;
pub mod convolution;
pub mod error;
pub mod grading;
pub mod hopf;
pub mod instances;
pub mod io;
pub mod matrix;
pub mod pbw;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod spectra;
pub mod ssym;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Rat;
