//! Exact rational scalars: parsing, formatting, and conservative square roots.
//!
//! Coordinates everywhere in this crate are arbitrary-precision rationals, so
//! geometric predicates are decided exactly. `num_rational::BigRational`
//! already keeps values in canonical form (reduced, positive denominator);
//! the helpers here add the string format used by the document layer and the
//! under-approximating square root used wherever a construction needs a
//! length (grid pitches, offset directions) without leaving the rationals.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar used for all coordinates.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses a rational from a decimal integer string (`"-3"`) or a fraction
/// string (`"1/2"`, `"-7/16"`). No whitespace, no decimal points.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, RationalParseError> {
        if t.is_empty() || t == "-" || t == "+" {
            return Err(RationalParseError::Invalid(s.to_string()));
        }
        let (sign, digits) = match t.as_bytes()[0] {
            b'-' => (Sign::Minus, &t[1..]),
            b'+' => (Sign::Plus, &t[1..]),
            _ => (Sign::Plus, t),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::Invalid(s.to_string()));
        }
        let mag: BigInt = digits
            .parse()
            .map_err(|_| RationalParseError::Invalid(s.to_string()))?;
        Ok(if sign == Sign::Minus { -mag } else { mag })
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats a rational canonically: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root when `x` is a perfect rational square.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Under-approximating square root: returns `r` with `r*r <= x` and relative
/// error below `2^-bits`. Exact when `x` is a perfect square; strictly
/// positive whenever `x > 0`. Panics on negative input.
pub fn sqrt_under(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "sqrt_under of negative rational");
    if x.is_zero() {
        return Rational::zero();
    }
    if let Some(r) = exact_sqrt(x) {
        return r;
    }
    // Scale into [1, 4) by powers of 4 so the integer sqrt keeps `bits` of
    // relative precision, then undo the scaling by the matching power of 2.
    let four = rat_int(4);
    let one = Rational::one();
    let mut m = x.clone();
    let mut e: i64 = 0;
    while m >= four {
        m /= &four;
        e += 1;
    }
    while m < one {
        m *= &four;
        e -= 1;
    }
    // m in [1,4): isqrt(floor(m * 4^bits)) / 2^bits <= sqrt(m).
    let scale_sq = BigInt::one() << (2 * bits as usize);
    let scaled = (&m * Rational::from_integer(scale_sq)).floor();
    let s = scaled.to_integer().sqrt();
    let mut r = Rational::new(s, BigInt::one() << (bits as usize));
    // Undo the 4^e normalisation with 2^e.
    if e > 0 {
        r *= Rational::from_integer(BigInt::one() << (e as usize));
    } else if e < 0 {
        r /= Rational::from_integer(BigInt::one() << ((-e) as usize));
    }
    debug_assert!(&r * &r <= *x);
    r
}
