//! Arbitrary-precision integers and rationals.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` with decimal integer parts. Decimal points,
/// exponents, zero or negative denominators are rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num = parse_integer(num)?;
    let den = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return None;
            }
            parse_integer(d)?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('+'))
        .unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    use alloc::string::ToString;
    value.to_string()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Gcd of the numerators divided by lcm of the denominators, positive.
pub fn content<'a, I: IntoIterator<Item = &'a Rational>>(coeffs: I) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(num.abs(), den)
}

/// Smallest-denominator rational in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let ceil = lo.ceil();
    if &ceil <= hi {
        return ceil;
    }
    let whole = lo.floor();
    let lo_frac = lo - &whole;
    let hi_frac = hi - &whole;
    // both fractional parts lie in (0, 1) with the same integer part
    whole + simplest_between(&hi_frac.recip(), &lo_frac.recip()).recip()
}

/// `2^-bits` as a rational.
pub fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse_rational(" 4/2 "), Some(int(2)));
    }

    #[test]
    fn rejects_decimals_and_bad_denominators() {
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(parse_rational("1e3"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn simplest_rational_in_interval() {
        assert_eq!(simplest_between(&frac(1, 3), &frac(1, 2)), frac(1, 2));
        assert_eq!(simplest_between(&frac(-1, 2), &frac(1, 2)), int(0));
        assert_eq!(simplest_between(&frac(13, 10), &frac(14, 10)), frac(4, 3));
        assert_eq!(
            simplest_between(&frac(-14, 10), &frac(-13, 10)),
            frac(-4, 3)
        );
        assert_eq!(simplest_between(&frac(7, 3), &frac(7, 3)), frac(7, 3));
    }

    #[test]
    fn content_is_positive() {
        let cs = [frac(-4, 3), frac(2, 9)];
        assert_eq!(content(cs.iter()), frac(2, 9));
    }
}
