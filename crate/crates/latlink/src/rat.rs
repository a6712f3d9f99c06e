//! Exact rational scalars.
//!
//! All arithmetic in this crate happens over `Rat`, an arbitrary-precision
//! rational that is always stored reduced with a positive denominator.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parses `"p/q"` or `"n"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = |m: &str| Error::Parse {
        position: 0,
        message: format!("invalid rational `{s}`: {m}"),
    };
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().ok_or_else(|| bad("empty"))?.trim();
    let numer: Int = num_str.parse().map_err(|_| bad("bad numerator"))?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(den_str) => {
            let denom: Int = den_str.trim().parse().map_err(|_| bad("bad denominator"))?;
            if denom.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Formats a rational as `"p/q"`, or just `"n"` when integral.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rounds to the nearest integer, halves away from zero.
pub fn round_half_away(r: &Rat) -> Int {
    r.round().to_integer()
}

pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators of `vals` (at least 1).
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Rat>>(vals: I) -> Int {
    let mut l = Int::one();
    for v in vals {
        l = l.lcm(v.denom());
    }
    l.abs()
}
