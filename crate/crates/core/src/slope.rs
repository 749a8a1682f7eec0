//! Non-negative rational surgery slopes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A surgery coefficient `p/q` with `p >= 0`, `q >= 1` and `gcd(p, q) = 1`.
///
/// Constructors always reduce, so two slopes are equal exactly when they
/// denote the same rational number. `0` is stored as `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: u64,
    q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("slope denominator must be positive"));
        }
        let g = p.gcd(&q);
        Ok(Slope { p: p / g, q: q / g })
    }

    pub fn integer(p: u64) -> Self {
        Slope { p, q: 1 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    /// Compares `p/q` with `num/den` exactly; `den` must be positive.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        (self.p as u128 * den as u128).cmp(&(num as u128 * self.q as u128))
    }

    /// `lo <= self < hi` with integer-pair endpoints.
    pub(crate) fn in_half_open(&self, lo: (u64, u64), hi: (u64, u64)) -> bool {
        self.cmp_ratio(lo.0, lo.1) != Ordering::Less && self.cmp_ratio(hi.0, hi.1) == Ordering::Less
    }

    pub(crate) fn in_closed(&self, lo: (u64, u64), hi: (u64, u64)) -> bool {
        self.cmp_ratio(lo.0, lo.1) != Ordering::Less
            && self.cmp_ratio(hi.0, hi.1) != Ordering::Greater
    }

    pub(crate) fn in_open(&self, lo: (u64, u64), hi: (u64, u64)) -> bool {
        self.cmp_ratio(lo.0, lo.1) == Ordering::Greater
            && self.cmp_ratio(hi.0, hi.1) == Ordering::Less
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_ratio(other.p, other.q)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Accepts `p/q` or a bare integer `p`, with optional surrounding whitespace.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_part = |part: &str, offset: usize| -> Result<u64> {
            let lead = part.len() - part.trim_start().len();
            let t = part.trim();
            if t.is_empty() {
                return Err(Error::parse(offset + lead, "expected an integer"));
            }
            if t.starts_with('-') {
                return Err(Error::parse(
                    offset + lead,
                    "negative slopes are not supported",
                ));
            }
            let t = t.strip_prefix('+').unwrap_or(t);
            if let Some(bad) = t.find(|c: char| !c.is_ascii_digit()) {
                return Err(Error::parse(
                    offset + lead + bad,
                    format!(
                        "unexpected character {:?}",
                        t[bad..].chars().next().unwrap()
                    ),
                ));
            }
            t.parse::<u64>()
                .map_err(|_| Error::parse(offset + lead, "integer out of range"))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let p = parse_part(num, 0)?;
                let q = parse_part(den, num.len() + 1)?;
                if q == 0 {
                    return Err(Error::parse(num.len() + 1, "denominator must be positive"));
                }
                Slope::new(p, q)
            }
            None => Ok(Slope::integer(parse_part(s, 0)?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let s = Slope::new(18, 4).unwrap();
        assert_eq!((s.p(), s.q()), (9, 2));
        assert_eq!(Slope::new(0, 7).unwrap(), Slope::integer(0));
        assert!(Slope::new(3, 0).is_err());
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("9/2".parse::<Slope>().unwrap(), Slope::new(9, 2).unwrap());
        assert_eq!(" 5 ".parse::<Slope>().unwrap(), Slope::integer(5));
        assert_eq!("10/4".parse::<Slope>().unwrap(), Slope::new(5, 2).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            "3/x".parse::<Slope>().unwrap_err(),
            Error::parse(2, "unexpected character 'x'")
        );
        assert!(matches!(
            "-3/2".parse::<Slope>(),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            "3/0".parse::<Slope>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "/2".parse::<Slope>(),
            Err(Error::Parse { pos: 0, .. })
        ));
    }

    #[test]
    fn ordering_is_by_value() {
        let a = Slope::new(16, 5).unwrap();
        let b = Slope::new(10, 3).unwrap();
        assert!(a < b);
        assert!(Slope::new(7, 2).unwrap().in_half_open((3, 1), (4, 1)));
        assert!(!Slope::integer(4).in_half_open((3, 1), (4, 1)));
    }

    #[test]
    fn serde_uses_string_form() {
        let s = Slope::new(13, 4).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"13/4\"");
        assert_eq!(serde_json::from_str::<Slope>(&json).unwrap(), s);
    }
}
