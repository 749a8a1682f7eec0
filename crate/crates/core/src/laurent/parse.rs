//! Parser for the textual polynomial format `c*t^e ± c*t^e ...`.
//!
//! Accepted per term: an optional sign, an optional integer coefficient,
//! an optional `*`, and an optional `t` with optional `^e` (`e` may be
//! negative or parenthesized). Whitespace is ignored between tokens.

use num_bigint::BigInt;

use super::LaurentPoly;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            (
                start,
                std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"),
            )
        })
    }

    fn unexpected(&mut self, what: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {what}, found {:?}", c as char)),
            None => Error::parse(self.pos, format!("expected {what}, found end of input")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some((at, digits)) = self.digits() else {
            return Err(self.unexpected("an exponent"));
        };
        let mag: i64 = digits
            .parse()
            .map_err(|_| Error::parse(at, "exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(self.unexpected("')'"));
        }
        Ok(if negative { -mag } else { mag })
    }
}

pub(super) fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let mut first = true;
    loop {
        if cur.peek().is_none() {
            if first {
                return Err(Error::parse(cur.pos, "empty polynomial"));
            }
            break;
        }
        let negative = cur.eat(b'-');
        if !negative && !cur.eat(b'+') && !first {
            return Err(cur.unexpected("'+' or '-'"));
        }
        first = false;

        let coeff = cur
            .digits()
            .map(|(_, d)| d.parse::<BigInt>().expect("digits"));
        let mut exp = 0;
        let has_star = coeff.is_some() && cur.eat(b'*');
        if cur.eat(b't') {
            exp = 1;
            if cur.eat(b'^') {
                exp = cur.exponent()?;
            }
        } else if has_star || coeff.is_none() {
            return Err(cur.unexpected("'t'"));
        }
        let mut c = coeff.unwrap_or_else(|| BigInt::from(1));
        if negative {
            c = -c;
        }
        terms.push((exp, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_output() {
        let p = parse_laurent("t^2 - t + 1 - t^-1 + t^-2").unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(-2, &[1, -1, 1, -1, 1]));
    }

    #[test]
    fn tolerant_of_whitespace_and_forms() {
        let p = parse_laurent("  -2 * t ^ ( -3 )+t+3t^2  -4 ").unwrap();
        assert_eq!(
            p,
            LaurentPoly::from_terms([(-3, -2), (1, 1), (2, 3), (0, -4)])
        );
        assert_eq!(parse_laurent("0").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("t - t").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn errors_are_positioned() {
        assert_eq!(
            parse_laurent("t^2 + x").unwrap_err(),
            Error::parse(6, "expected 't', found 'x'")
        );
        assert_eq!(
            parse_laurent("1 + t^x").unwrap_err(),
            Error::parse(6, "expected an exponent, found 'x'")
        );
        assert_eq!(
            parse_laurent("t^(2").unwrap_err(),
            Error::parse(4, "expected ')', found end of input")
        );
        assert!(matches!(
            parse_laurent("t t"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse_laurent(""),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_laurent("3*"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }
}
