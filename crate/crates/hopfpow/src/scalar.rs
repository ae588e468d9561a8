//! Exact rational scalars and their canonical text form.
//!
//! Scalars are arbitrary-precision rationals, always kept in canonical form
//! (reduced fraction, positive denominator). The text encoding used by every
//! JSON artifact is `"p"` for integers and `"p/q"` otherwise.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Zero};

/// Exact rational scalar.
pub type Rat = num::BigRational;

/// The integer `n` as a scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a scalar (reduced automatically).
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `n^k` for integer `n` and nonnegative exponent `k`, with `0^0 = 1`.
pub fn int_pow(n: i64, k: usize) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    Rat::from_integer(BigInt::from(n).pow(k as u32))
}

/// Canonical text form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`. Returns the value and whether the input was
/// already in canonical form (reduced, positive denominator, no `+` sign or
/// leading zeros).
pub fn parse_rat_checked(s: &str) -> Result<(Rat, bool)> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    let value = Rat::new(numer, denom);
    let canonical = format_rat(&value) == s;
    Ok((value, canonical))
}

/// Parses `"p"` or `"p/q"` (canonical or not).
pub fn parse_rat(s: &str) -> Result<Rat> {
    Ok(parse_rat_checked(s)?.0)
}

/// Exact binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
