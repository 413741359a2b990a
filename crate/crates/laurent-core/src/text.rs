//! Textual form `c*A^e` terms joined by ` + `, highest exponent first.

use crate::error::LaurentError;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*A^{e}")?;
        }
        Ok(())
    }
}

fn parse_term(raw: &str) -> Result<(i64, BigInt), LaurentError> {
    let term = raw.trim();
    let bad = || LaurentError::Parse(format!("bad term `{term}`"));
    if term.is_empty() {
        return Err(bad());
    }
    let (coeff, power) = match term.find('A') {
        None => (term, None),
        Some(pos) => {
            let head = term[..pos].trim();
            let head = head.strip_suffix('*').map(str::trim).unwrap_or(head);
            let tail = term[pos + 1..].trim();
            let exp = if tail.is_empty() {
                1
            } else {
                let t = tail.strip_prefix('^').ok_or_else(bad)?.trim();
                t.parse::<i64>().map_err(|_| bad())?
            };
            (head, Some(exp))
        }
    };
    let c = match coeff {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        s => s.parse::<BigInt>().map_err(|_| bad())?,
    };
    Ok((power.unwrap_or(0), c))
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let terms = s.split('+').map(parse_term).collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_value_prints_in_documented_form() {
        let p = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(p.to_string(), "-1*A^2 + -1*A^-2");
    }

    #[test]
    fn parse_accepts_printed_and_shorthand_forms() {
        let p: LaurentPoly = "-1*A^2 + -1*A^-2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(2, -1), (-2, -1)]));
        let q: LaurentPoly = "3 + A + -A^-1".parse().unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(0, 3), (1, 1), (-1, -1)]));
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert!("2*B^3".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }
}
