//! Exact integer Laurent polynomials in one variable `t`.
//!
//! Every Alexander polynomial, graded Euler characteristic and cyclotomic
//! factor in this crate is a [`LaurentPoly`]. Coefficients are arbitrary
//! precision, and zero coefficients are never stored, so structural equality
//! is polynomial equality.
//!
//! Dense [`IntPoly`] values (non-negative exponents only) carry the
//! resultant and exact-division machinery.

mod int_poly;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use int_poly::{abs_resultant, resultant, IntPoly};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        LaurentPoly::from_terms([(e, c.into())])
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// Coefficients listed from exponent `low` upwards.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, c)))
    }

    /// Symmetric polynomial `c0 + Σ c_i (t^i + t^-i)` from `[c0, c1, ...]`.
    pub fn symmetric(half: &[i64]) -> Self {
        LaurentPoly::from_terms(half.iter().enumerate().flat_map(|(i, &c)| {
            let i = i as i64;
            if i == 0 {
                vec![(0, c)]
            } else {
                vec![(i, c), (-i, c)]
            }
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> u64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64,
            _ => 0,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// `p(t^-1)`.
    pub fn mirror(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Exact value at a nonzero integer.
    pub fn evaluate_int(&self, x: i64) -> Result<BigRational> {
        if x == 0 {
            return Err(Error::invalid("cannot evaluate a Laurent polynomial at 0"));
        }
        let x = BigRational::from_integer(BigInt::from(x));
        Ok(self.terms.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            acc + BigRational::from_integer(c.clone())
                * num_traits::pow::pow(
                    if e >= 0 { x.clone() } else { x.recip() },
                    e.unsigned_abs() as usize,
                )
        }))
    }

    /// Value at `t = ±1`, where the result is always an integer.
    pub fn evaluate_unit(&self, sign_negative: bool) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (&e, c)| {
            if sign_negative && e.rem_euclid(2) == 1 {
                acc - c
            } else {
                acc + c
            }
        })
    }

    pub fn at_one(&self) -> BigInt {
        self.evaluate_unit(false)
    }

    pub fn at_minus_one(&self) -> BigInt {
        self.evaluate_unit(true)
    }

    /// Normalizes to `t^(-min_exp) * self`, returning that dense polynomial
    /// and the shift `min_exp`. The zero polynomial maps to `(0, 0)`.
    pub fn to_int_poly(&self) -> (IntPoly, i64) {
        let Some(low) = self.min_exp() else {
            return (IntPoly::zero(), 0);
        };
        let high = self.max_exp().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
        for (&e, c) in &self.terms {
            coeffs[(e - low) as usize] = c.clone();
        }
        (IntPoly::new(coeffs), low)
    }

    pub fn from_int_poly(p: &IntPoly, shift: i64) -> Self {
        LaurentPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    pub fn multiply(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                *map.entry(ea + eb).or_default() += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// Exact quotient `self / divisor` in ℤ[t, t⁻¹], if it exists.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (d, d_shift) = divisor.to_int_poly();
        assert!(!d.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (n, n_shift) = self.to_int_poly();
        // Both dense forms have nonzero constant terms, so divisibility in the
        // Laurent ring is divisibility in ℤ[t].
        n.div_exact(&d)
            .map(|q| LaurentPoly::from_int_poly(&q, n_shift - d_shift))
    }
}

/// True iff `b = a * c` for some integer Laurent polynomial `c`.
pub fn divides(a: &IntPoly, b: &LaurentPoly) -> bool {
    assert!(!a.is_zero(), "divisibility test by the zero polynomial");
    b.div_exact(&LaurentPoly::from(a)).is_some()
}

fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `d`-th cyclotomic polynomial, from `Φ_d = Π_{e | d} (t^e - 1)^μ(d/e)`.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for e in divisors(d) {
        match mobius(d / e) {
            1 => num = num.mul(&IntPoly::x_pow_minus_one(e as usize)),
            -1 => den = den.mul(&IntPoly::x_pow_minus_one(e as usize)),
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("cyclotomic product formula must divide exactly")
}

/// `|Π_{k=1}^{n-1} p(ζ^k)|` for `ζ = e^{2πi/n}`, computed exactly as the
/// resultant of the normalized `p` with `1 + t + … + t^(n-1)`. The power of
/// `t` stripped during normalization has modulus one at every root of unity.
pub fn root_of_unity_product(p: &LaurentPoly, n: u64) -> BigUint {
    assert!(n >= 2, "root-of-unity product needs n >= 2");
    assert!(!p.is_zero(), "root-of-unity product of the zero polynomial");
    let (dense, _) = p.to_int_poly();
    let window = IntPoly::new(vec![BigInt::one(); n as usize]);
    abs_resultant(&window, &dense)
        .to_biguint()
        .expect("absolute value is non-negative")
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        LaurentPoly::from_int_poly(p, 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.multiply(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Descending exponents, `c*t^e` terms: `t^2 - t + 1 - t^-1 + t^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_laurent(s)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
