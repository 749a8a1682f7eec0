//! Branched cyclic cover arithmetic.
//!
//! The order of `H_1` of the `n`-fold cyclic branched cover of a knot in a
//! homology sphere is `|Π_{k=1}^{n-1} Δ(ζ_n^k)|`, zero exactly when the
//! cover has positive first Betti number. The nondegeneracy criterion asks
//! that no cyclotomic `Φ_d`, `d ≥ 2`, `d | 2p^e`, divides `Δ`; it is checked
//! both by sweeping divisors and by the product, and the two must agree.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, divides, divisors, root_of_unity_product, LaurentPoly};

/// Largest `n` accepted by the cover computations; the resultant against a
/// degree `n - 1` polynomial is the cost driver.
pub const MAX_COVER_DEGREE: u64 = 1 << 16;

pub fn fox_branched_order(delta: &LaurentPoly, n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "cover degree must be >= 2, got {n}"
        )));
    }
    if n > MAX_COVER_DEGREE {
        return Err(Error::invalid(format!(
            "cover degree {n} exceeds the supported maximum {MAX_COVER_DEGREE}"
        )));
    }
    if delta.is_zero() {
        return Err(Error::invalid(
            "the zero polynomial is not an Alexander polynomial",
        ));
    }
    Ok(root_of_unity_product(delta, n))
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Both routes of the nondegeneracy criterion for `n = 2 p^e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NondegeneracyReport {
    pub n: u64,
    /// Divisors `d ≥ 2` of `n` with `Φ_d | Δ`.
    pub dividing_cyclotomics: Vec<u64>,
    /// `|H_1|` of the `n`-fold branched cover; 0 encodes infinite.
    #[serde(serialize_with = "big_as_string")]
    pub fox_order: BigUint,
    pub nondegenerate: bool,
}

fn big_as_string<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl NondegeneracyReport {
    pub fn sweep_says_nondegenerate(&self) -> bool {
        self.dividing_cyclotomics.is_empty()
    }

    pub fn fox_says_nondegenerate(&self) -> bool {
        !self.fox_order.is_zero()
    }
}

pub fn nondegeneracy_report(delta: &LaurentPoly, p: u64, e: u32) -> Result<NondegeneracyReport> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    if e == 0 {
        return Err(Error::invalid("exponent e must be at least 1"));
    }
    let n = p
        .checked_pow(e)
        .and_then(|pe| pe.checked_mul(2))
        .filter(|&n| n <= MAX_COVER_DEGREE)
        .ok_or_else(|| Error::invalid(format!("2*{p}^{e} is too large")))?;
    let dividing_cyclotomics: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&d| d >= 2 && divides(&cyclotomic(d), delta))
        .collect();
    let fox_order = fox_branched_order(delta, n)?;
    let report = NondegeneracyReport {
        n,
        nondegenerate: dividing_cyclotomics.is_empty(),
        dividing_cyclotomics,
        fox_order,
    };
    assert_eq!(
        report.sweep_says_nondegenerate(),
        report.fox_says_nondegenerate(),
        "cyclotomic sweep and branched-cover order disagree for {delta} at n = {n}"
    );
    Ok(report)
}

/// True iff no nontrivial `2p^e`-th root of unity is a zero of `delta`.
pub fn nondegeneracy_check(delta: &LaurentPoly, p: u64, e: u32) -> Result<bool> {
    nondegeneracy_report(delta, p, e).map(|r| r.nondegenerate)
}

/// An exact angle `num/den · π`, reduced, in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PiFraction {
    pub num: u64,
    pub den: u64,
}

impl PiFraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0);
        let num = num % (2 * den);
        let g = num.gcd(&den);
        PiFraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::PI * self.num as f64 / self.den as f64
    }

    /// True iff `k · self ≡ target (mod 2π)`.
    pub fn times_congruent(&self, k: u64, target: PiFraction) -> bool {
        // k*num/den - tnum/tden = 2m  <=>  (k*num*tden - tnum*den) divisible by 2*den*tden
        let lhs = k as i128 * self.num as i128 * target.den as i128
            - target.num as i128 * self.den as i128;
        lhs.rem_euclid(2 * self.den as i128 * target.den as i128) == 0
    }
}

impl fmt::Display for PiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => f.write_str("0"),
            (1, 1) => f.write_str("pi"),
            (n, 1) => write!(f, "{n}*pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, d) => write!(f, "{n}*pi/{d}"),
        }
    }
}

/// The `h` representations with `ρ(μ_C) = e^{iθ}` and `ρ(μ_C)^h = i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicRepSet {
    pub order: u64,
    pub angles: Vec<PiFraction>,
}

impl CyclicRepSet {
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }
}

pub const QUARTER_TURN: PiFraction = PiFraction { num: 1, den: 2 };

/// `θ_m = (π/2 + 2πm) / h` for `m = 0, …, h - 1`.
pub fn cyclic_reps(h: u64) -> Result<CyclicRepSet> {
    if h == 0 || h % 2 == 0 {
        return Err(Error::invalid(format!(
            "|H_1(L)| must be odd and positive, got {h}"
        )));
    }
    let angles = (0..h).map(|m| PiFraction::new(1 + 4 * m, 2 * h)).collect();
    Ok(CyclicRepSet { order: h, angles })
}
