use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |position: usize, message: &str| Error::Parse {
        position,
        message: format!("{message} in rational literal {s:?}"),
    };
    if t.is_empty() {
        return Err(bad(0, "empty string"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let parse_int = |part: &str, offset: usize| -> Result<BigInt> {
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(offset, "expected an integer"));
        }
        part.parse::<BigInt>()
            .map_err(|_| bad(offset, "expected an integer"))
    };
    let n = parse_int(num, 0)?;
    let d = match den {
        Some(d) => parse_int(d, num.len() + 1)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad(num.len() + 1, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical `"p/q"` (or `"p"`) rendering.
pub fn render(q: &Rational) -> String {
    q.to_string()
}

pub fn render_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(render).collect()
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

/// Euclidean dot product of two equally long rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational(" 1/-2 ").unwrap(), frac(-1, 2));
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("2/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("/3").is_err());
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(render(&frac(6, -4)), "-3/2");
        assert_eq!(render(&int(7)), "7");
    }
}
