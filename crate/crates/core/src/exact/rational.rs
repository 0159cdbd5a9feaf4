//! Exact rational scalars and their text syntax.
//!
//! Accepted input: `p`, `p/q`, or a finite decimal such as `-0.125`
//! (converted exactly to `-1/8`). Output uses the `Display` impl of
//! [`BigRational`], which prints `p/q`, or just `p` for integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a rational in any of the accepted text forms.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = parse_int(p)?;
        let den: BigInt = parse_int(q)?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['+', '-']);
        if frac.is_empty() && whole_digits.is_empty() {
            return Err(format!("malformed decimal `{s}`"));
        }
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
        {
            return Err(format!("malformed decimal `{s}`"));
        }
        let digits = format!("{whole_digits}{frac}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| format!("malformed decimal `{s}`"))?
        };
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    Ok(Rational::from_integer(parse_int(s)?))
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    let t = s.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed integer `{t}`"));
    }
    t.parse().map_err(|_| format!("malformed integer `{t}`"))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scale a vector by a positive factor so that it becomes integral with
/// coprime entries. The zero vector is returned unchanged.
pub fn primitive_integer_direction(values: &[Rational]) -> Vec<Rational> {
    let den = common_denominator(values.iter());
    let ints: Vec<BigInt> = values.iter().map(|v| (v * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return values.to_vec();
    }
    ints.into_iter()
        .map(|v| Rational::from_integer(v / &g))
        .collect()
}

/// Scale so that the first nonzero entry equals one. Entries keep their
/// relative signs only when that entry is positive, which holds for
/// non-negative certificate vectors.
pub fn normalize_first_nonzero(values: &[Rational]) -> Vec<Rational> {
    match values.iter().find(|v| !v.is_zero()) {
        Some(lead) => {
            let lead = lead.abs();
            values.iter().map(|v| v / &lead).collect()
        }
        None => values.to_vec(),
    }
}

pub fn format_vector(values: &[Rational], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("0.125").unwrap(), ratio(1, 8));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1/2/3", "1.2.3", "--1", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(ratio(2, 4).to_string(), "1/2");
        assert_eq!(ratio(4, 2).to_string(), "2");
        assert_eq!(ratio(3, -9).to_string(), "-1/3");
        assert_eq!((ratio(1, 6) + ratio(1, 3)).to_string(), "1/2");
    }

    #[test]
    fn primitive_direction() {
        let v = vec![ratio(1, 2), ratio(-3, 4), int(0)];
        assert_eq!(primitive_integer_direction(&v), vec![int(2), int(-3), int(0)]);
    }

    #[test]
    fn normalize_certificate() {
        let v = vec![int(0), int(3), int(1)];
        assert_eq!(normalize_first_nonzero(&v), vec![int(0), int(1), ratio(1, 3)]);
    }
}
