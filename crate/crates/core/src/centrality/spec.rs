use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

/// A coefficient vector `a`, either explicit or one of the named
/// parametric families. Every parametric family has `a_0 = 0`; explicit
/// vectors may set `a_0` freely and have an implied zero tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientSpec {
    Explicit(Vec<Rational>),
    /// `a_i = 1/i`.
    Harmonic,
    /// `a_i = i^(−γ)`, `γ > 0`.
    PowerLaw(Rational),
    /// `a_i = δ^i`, `0 < δ < 1`.
    ExpDecay(Rational),
    /// `a_i = −i`.
    NegPeripherality,
}

impl CoefficientSpec {
    pub fn explicit(values: Vec<Rational>) -> Self {
        CoefficientSpec::Explicit(values)
    }

    pub fn in_degree() -> Self {
        CoefficientSpec::Explicit(vec![Rational::zero(), Rational::one()])
    }

    pub fn power_law(gamma: Rational) -> Result<Self> {
        if !gamma.is_positive() {
            return Err(Error::Parameter(format!("power-law exponent must be > 0, got {gamma}")));
        }
        Ok(CoefficientSpec::PowerLaw(gamma))
    }

    pub fn exp_decay(delta: Rational) -> Result<Self> {
        if !delta.is_positive() || delta >= Rational::one() {
            return Err(Error::Parameter(format!("decay base must be in (0, 1), got {delta}")));
        }
        Ok(CoefficientSpec::ExpDecay(delta))
    }

    /// Parse a preset name: `indegree`, `harmonic`, `neg-peripherality`,
    /// `power-law:<γ>` or `exp:<δ>`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parameter(msg);
        match name {
            "indegree" => Ok(Self::in_degree()),
            "harmonic" => Ok(CoefficientSpec::Harmonic),
            "neg-peripherality" => Ok(CoefficientSpec::NegPeripherality),
            _ => {
                if let Some(g) = name.strip_prefix("power-law:") {
                    Self::power_law(parse_rational(g).map_err(bad)?)
                } else if let Some(d) = name.strip_prefix("exp:") {
                    Self::exp_decay(parse_rational(d).map_err(bad)?)
                } else {
                    Err(bad(format!("unknown coefficient preset `{name}`")))
                }
            }
        }
    }

    /// The exponent as a natural number, when a power law has one.
    fn integral_gamma(gamma: &Rational) -> Option<u32> {
        if gamma.is_integer() {
            gamma.to_integer().to_u32()
        } else {
            None
        }
    }

    pub fn is_exactly_evaluable(&self) -> bool {
        match self {
            CoefficientSpec::PowerLaw(g) => Self::integral_gamma(g).is_some(),
            _ => true,
        }
    }

    /// `a_i`, exactly.
    pub fn coefficient(&self, i: usize) -> Result<Rational> {
        Ok(match self {
            CoefficientSpec::Explicit(v) => v.get(i).cloned().unwrap_or_else(Rational::zero),
            _ if i == 0 => Rational::zero(),
            CoefficientSpec::Harmonic => Rational::new(BigInt::one(), BigInt::from(i)),
            CoefficientSpec::PowerLaw(g) => {
                let e = Self::integral_gamma(g)
                    .ok_or_else(|| Error::NotEvaluable(self.to_string()))?;
                Rational::new(BigInt::one(), num_traits::pow(BigInt::from(i), e as usize))
            }
            CoefficientSpec::ExpDecay(d) => num_traits::pow(d.clone(), i),
            CoefficientSpec::NegPeripherality => -Rational::from_integer(BigInt::from(i)),
        })
    }

    /// The first `n` coefficients `a_0, …, a_{n−1}`: everything a graph on
    /// `n` nodes can see, since finite distances are below `n`.
    pub fn materialize(&self, n: usize) -> Result<Vec<Rational>> {
        (0..n).map(|i| self.coefficient(i)).collect()
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSpec::Explicit(v) => {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", items.join(","))
            }
            CoefficientSpec::Harmonic => write!(f, "harmonic"),
            CoefficientSpec::PowerLaw(g) => write!(f, "power-law:{g}"),
            CoefficientSpec::ExpDecay(d) => write!(f, "exp:{d}"),
            CoefficientSpec::NegPeripherality => write!(f, "neg-peripherality"),
        }
    }
}

/// Coefficient file: one rational per line, line `i` holding `a_i`. Blank
/// lines, `#` comments and a leading `YES` verdict line (as printed with a
/// representability witness) are skipped.
pub fn parse_coefficient_list(text: &str) -> Result<Vec<Rational>> {
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || (values.is_empty() && line == "YES") {
            continue;
        }
        let v = parse_rational(line).map_err(|message| Error::Parse {
            line: idx + 1,
            message,
        })?;
        values.push(v);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    #[test]
    fn presets() {
        assert_eq!(CoefficientSpec::preset("indegree").unwrap().materialize(3).unwrap(), vec![
            int(0),
            int(1),
            int(0)
        ]);
        assert_eq!(
            CoefficientSpec::preset("harmonic").unwrap().materialize(4).unwrap(),
            vec![int(0), int(1), ratio(1, 2), ratio(1, 3)]
        );
        assert_eq!(
            CoefficientSpec::preset("neg-peripherality").unwrap().materialize(3).unwrap(),
            vec![int(0), int(-1), int(-2)]
        );
        assert_eq!(
            CoefficientSpec::preset("exp:1/2").unwrap().materialize(4).unwrap(),
            vec![int(0), ratio(1, 2), ratio(1, 4), ratio(1, 8)]
        );
        assert_eq!(
            CoefficientSpec::preset("power-law:2").unwrap().materialize(4).unwrap(),
            vec![int(0), int(1), ratio(1, 4), ratio(1, 9)]
        );
        assert!(CoefficientSpec::preset("exp:1").is_err());
        assert!(CoefficientSpec::preset("power-law:0").is_err());
        assert!(CoefficientSpec::preset("katz").is_err());
    }

    #[test]
    fn fractional_power_law_is_not_evaluable() {
        let s = CoefficientSpec::preset("power-law:1/2").unwrap();
        assert!(!s.is_exactly_evaluable());
        assert_eq!(s.coefficient(0).unwrap(), int(0));
        assert!(matches!(s.materialize(3), Err(Error::NotEvaluable(_))));
    }

    #[test]
    fn explicit_has_zero_tail() {
        let s = CoefficientSpec::explicit(vec![int(5), int(1)]);
        assert_eq!(s.materialize(4).unwrap(), vec![int(5), int(1), int(0), int(0)]);
        assert_eq!(s.materialize(1).unwrap(), vec![int(5)]);
    }

    #[test]
    fn coefficient_file() {
        let v = parse_coefficient_list("YES\n0\n# c\n\n1/2\n-3\n").unwrap();
        assert_eq!(v, vec![int(0), ratio(1, 2), int(-3)]);
        assert!(matches!(
            parse_coefficient_list("1\nx\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_coefficient_list("1\nYES\n").is_err());
    }
}
