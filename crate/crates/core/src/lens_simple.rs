//! The primitive simple knots `S(p, 2q, 10q)` in the lens spaces `L(p, 2q)`.
//!
//! For `p` odd, `gcd(p, 5) = 1` and `p/q ∈ [3, 6]`, the simple knot in the
//! class of `10q` times a core is the `(5, 2)` curve on the Heegaard torus.
//! Its complement has the group of the torus knot `T(5, d)` with
//! `d = |2p - 5 b'|`, `b' = min(2q, p - 2q)`, which determines the genus,
//! the Alexander polynomial and the order of the branched double cover.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot_invariants::{torus_alexander, TorusKnotParams};
use crate::laurent::LaurentPoly;
use crate::slope::Slope;

/// `L(a, b)` with `gcd(a, b) = 1`, `1 <= b < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpaceId {
    a: u64,
    b: u64,
}

impl LensSpaceId {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 || b == 0 || b >= a || a.gcd(&b) != 1 {
            return Err(Error::invalid(format!(
                "L({a},{b}) needs a >= 2, 1 <= b < a and gcd(a, b) = 1"
            )));
        }
        Ok(LensSpaceId { a, b })
    }

    /// `|H_1|`.
    pub fn order(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Signed graded Euler characteristic with every stored coefficient `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedEuler {
    terms: BTreeMap<i64, i8>,
}

impl GradedEuler {
    pub fn terms(&self) -> impl Iterator<Item = (i64, i8)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, &c)| (e, c as i64)))
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().map(|&c| c as i64).sum()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }
}

impl TryFrom<&LaurentPoly> for GradedEuler {
    type Error = Error;

    fn try_from(p: &LaurentPoly) -> Result<Self> {
        let terms = p
            .terms()
            .map(|(e, c)| match c.to_i8() {
                Some(v @ (1 | -1)) => Ok((e, v)),
                _ => Err(Error::invalid(format!(
                    "graded Euler coefficients must be ±1, found {c} at t^{e}"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(GradedEuler { terms })
    }
}

impl Serialize for GradedEuler {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_laurent().serialize(s)
    }
}

fn validate_simple_slope(slope: Slope) -> Result<()> {
    let (p, q) = (slope.p(), slope.q());
    if p % 2 == 0 {
        return Err(Error::precondition(format!("{slope}: p must be odd")));
    }
    if p % 5 == 0 {
        return Err(Error::precondition(format!(
            "{slope}: gcd(p, 5) must be 1 for S(p,2q,10q) to be primitive"
        )));
    }
    if !slope.in_closed((3, 1), (6, 1)) {
        return Err(Error::precondition(format!(
            "{slope}: p/q must lie in [3, 6]"
        )));
    }
    debug_assert!(p > 2 * q);
    Ok(())
}

/// `d = |2a - 5 b'|` with `b = b mod a` mirrored to `b' = min(b, a - b)`.
pub fn simple_knot_d(a: u64, b: u64) -> Result<u64> {
    if a < 3 || a % 2 == 0 {
        return Err(Error::invalid(format!(
            "lens order {a} must be odd and >= 3"
        )));
    }
    if a % 5 == 0 {
        return Err(Error::invalid(format!(
            "gcd({a}, 5) != 1: the simple knot S(a,b,5b) is not primitive"
        )));
    }
    let b = b % a;
    if b == 0 || a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("gcd({a}, {b}) must be 1")));
    }
    let mirrored = b.min(a - b);
    Ok((2 * a as i64 - 5 * mirrored as i64).unsigned_abs())
}

/// `g(S(p, 2q, 10q)) = ||4p - 10 min(2q, p - 2q)| - 2|`.
pub fn simple_knot_genus(slope: Slope) -> Result<u64> {
    validate_simple_slope(slope)?;
    let (p, q) = (slope.p() as i64, slope.q() as i64);
    let m = (2 * q).min(p - 2 * q);
    Ok(((4 * p - 10 * m).abs() - 2).unsigned_abs())
}

fn simple_d_for(slope: Slope) -> Result<u64> {
    validate_simple_slope(slope)?;
    simple_knot_d(slope.p(), 2 * slope.q())
}

/// `Δ_S = Δ_{T(5, d)}`; panics if its degree disagrees with the genus formula.
pub fn simple_knot_alexander(slope: Slope) -> Result<LaurentPoly> {
    let d = simple_d_for(slope)?;
    let genus = simple_knot_genus(slope)?;
    let delta = torus_alexander(&TorusKnotParams::new(5, d).expect("d is coprime to 5"));
    assert_eq!(
        delta.max_exp(),
        Some(genus as i64),
        "Alexander degree must equal the simple-knot genus at {slope}"
    );
    Ok(delta)
}

/// `|H_1(Σ(L, S))| = p · |Δ_S(-1)|`.
pub fn branched_cover_order(slope: Slope) -> Result<u64> {
    let delta = simple_knot_alexander(slope)?;
    let det = delta
        .at_minus_one()
        .abs()
        .to_u64()
        .expect("determinant of T(5,d) is 1 or 5");
    Ok(slope.p() * det)
}

/// `Δ_S(t) · (t^{(p-1)/2} + … + t^{-(p-1)/2})`.
pub fn graded_euler(slope: Slope) -> Result<GradedEuler> {
    let delta = simple_knot_alexander(slope)?;
    let half = (slope.p() as i64 - 1) / 2;
    let window = LaurentPoly::from_terms((-half..=half).map(|e| (e, 1)));
    let product = &delta * &window;
    Ok(GradedEuler::try_from(&product)
        .expect("simple-knot graded Euler characteristics have unit coefficients"))
}

/// Each residue class mod `p` carries exactly one nonzero coefficient, and
/// that coefficient is `+1`.
pub fn check_property_star(ge: &GradedEuler, p: u64) -> bool {
    if p == 0 {
        return false;
    }
    let p = p as i64;
    let mut seen: BTreeMap<i64, u32> = BTreeMap::new();
    for (e, c) in ge.terms() {
        if c != 1 {
            return false;
        }
        *seen.entry(e.rem_euclid(p)).or_default() += 1;
    }
    seen.len() as i64 == p && seen.values().all(|&n| n == 1)
}

/// True iff `(t^p - 1)^2` divides `g1 - g2` exactly.
pub fn homologous_difference_divisible(g1: &GradedEuler, g2: &GradedEuler, p: u64) -> bool {
    laurent_difference_divisible(&g1.to_laurent(), &g2.to_laurent(), p)
}

pub(crate) fn laurent_difference_divisible(a: &LaurentPoly, b: &LaurentPoly, p: u64) -> bool {
    if p == 0 {
        // (t^0 - 1)^2 = 0 divides only zero
        return a == b;
    }
    let base = LaurentPoly::from_terms([(p as i64, 1), (0, -1)]);
    let square = &base * &base;
    (a - b).div_exact(&square).is_some()
}

/// The bundle of invariants reported by `su2cert simple-knot`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleKnotInvariants {
    pub p: u64,
    pub q: u64,
    #[serde(skip)]
    pub lens: LensSpaceId,
    pub d: u64,
    pub genus: u64,
    pub alexander: LaurentPoly,
    #[serde(serialize_with = "as_string")]
    pub cover_order: u64,
    pub euler: GradedEuler,
}

fn as_string<S: serde::Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn simple_knot_invariants(slope: Slope) -> Result<SimpleKnotInvariants> {
    validate_simple_slope(slope)?;
    let (p, q) = (slope.p(), slope.q());
    let invariants = SimpleKnotInvariants {
        p,
        q,
        lens: LensSpaceId::new(p, (2 * q) % p)?,
        d: simple_d_for(slope)?,
        genus: simple_knot_genus(slope)?,
        alexander: simple_knot_alexander(slope)?,
        cover_order: branched_cover_order(slope)?,
        euler: graded_euler(slope)?,
    };
    debug_assert_eq!(
        invariants.cover_order,
        p * invariants.alexander.at_minus_one().abs().to_u64().unwrap()
    );
    Ok(invariants)
}

/// All slopes `p/q ∈ [3, 6]` with `p <= max_p`, `p` odd and prime to 5.
pub fn valid_simple_slopes(max_p: u64) -> Vec<Slope> {
    let mut out = Vec::new();
    for p in (3..=max_p).step_by(2) {
        if p % 5 == 0 {
            continue;
        }
        for q in p.div_ceil(6)..=p / 3 {
            if q >= 1 && p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).expect("q >= 1"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u64, q: u64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn lp(x: &str) -> LaurentPoly {
        x.parse().unwrap()
    }

    #[test]
    fn d_examples() {
        assert_eq!(simple_knot_d(3, 2).unwrap(), 1);
        assert_eq!(simple_knot_d(9, 4).unwrap(), 2);
        assert_eq!(simple_knot_d(7, 4).unwrap(), 1);
        assert!(simple_knot_d(15, 4).is_err());
        assert!(simple_knot_d(9, 3).is_err());
        assert!(simple_knot_d(8, 3).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(simple_knot_genus(s(3, 1)).unwrap(), 0);
        assert_eq!(simple_knot_genus(s(9, 2)).unwrap(), 2);
        assert_eq!(simple_knot_genus(s(13, 4)).unwrap(), 0);
        assert_eq!(simple_knot_genus(s(19, 5)).unwrap(), 12);
        assert!(simple_knot_genus(s(5, 1)).is_err());
        assert!(simple_knot_genus(s(4, 1)).is_err());
        assert!(simple_knot_genus(s(7, 1)).is_err());
        assert!(simple_knot_genus(s(11, 4)).is_err());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(simple_knot_alexander(s(3, 1)).unwrap(), LaurentPoly::one());
        assert_eq!(
            simple_knot_alexander(s(9, 2)).unwrap(),
            lp("t^2 - t + 1 - t^-1 + t^-2")
        );
        assert_eq!(simple_knot_alexander(s(7, 2)).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn cover_order_examples() {
        assert_eq!(branched_cover_order(s(3, 1)).unwrap(), 3);
        assert_eq!(branched_cover_order(s(9, 2)).unwrap(), 45);
        assert_eq!(branched_cover_order(s(13, 4)).unwrap(), 13);
    }

    #[test]
    fn graded_euler_examples() {
        let g = graded_euler(s(3, 1)).unwrap();
        assert_eq!(g.to_laurent(), lp("t + 1 + t^-1"));
        let g = graded_euler(s(9, 2)).unwrap();
        let l = g.to_laurent();
        assert_eq!(l.max_exp(), Some(6));
        assert_eq!(l.coeff(6), 1.into());
        // t^2 * t^3 and -t * t^4 cancel
        assert_eq!(l.coeff(5), 0.into());
        assert_eq!(l.coeff(4), 1.into());
        assert!(g.terms().all(|(_, c)| c == 1));
        assert_eq!(g.coefficient_sum(), 9);
    }

    #[test]
    fn property_star_examples() {
        assert!(check_property_star(&graded_euler(s(3, 1)).unwrap(), 3));
        let two_in_class_zero = GradedEuler::try_from(&lp("t^3 + 1")).unwrap();
        assert!(!check_property_star(&two_in_class_zero, 3));
        let negative = GradedEuler::try_from(&lp("t + 1 - t^-1")).unwrap();
        assert!(!check_property_star(&negative, 3));
        let missing_class = GradedEuler::try_from(&lp("t + 1")).unwrap();
        assert!(!check_property_star(&missing_class, 3));
    }

    #[test]
    fn graded_euler_rejects_non_unit_coefficients() {
        assert!(GradedEuler::try_from(&lp("2*t + 1")).is_err());
    }

    #[test]
    fn difference_divisibility_examples() {
        let g = graded_euler(s(9, 2)).unwrap();
        assert!(homologous_difference_divisible(&g, &g, 9));
        let shifted = GradedEuler::try_from(&g.to_laurent().shift(1)).unwrap();
        assert!(check_property_star(&shifted, 9));
        assert!(!homologous_difference_divisible(&shifted, &g, 9));

        // g1 - g2 = (t^p - 1)^2 = t^2p - 2 t^p + 1 cannot be a difference of
        // unit-coefficient polynomials, so test the Laurent-level helper.
        let p = 5;
        let base = lp("t^5 - 1");
        let sq = &base * &base;
        let other = lp("t^3 + t + 7");
        assert!(laurent_difference_divisible(&(&other + &sq), &other, p));
        assert!(!laurent_difference_divisible(&(&other + &base), &other, p));
    }

    #[test]
    fn invariants_bundle_json() {
        let inv = simple_knot_invariants(s(9, 2)).unwrap();
        assert_eq!(inv.lens, LensSpaceId::new(9, 4).unwrap());
        let v = serde_json::to_value(&inv).unwrap();
        assert_eq!(v["p"], 9);
        assert_eq!(v["q"], 2);
        assert_eq!(v["d"], 2);
        assert_eq!(v["genus"], 2);
        assert_eq!(v["alexander"], "t^2 - t + 1 - t^-1 + t^-2");
        assert_eq!(v["cover_order"], "45");
        assert!(v["euler"].as_str().unwrap().starts_with("t^6 + t^4 + "));
    }

    #[test]
    fn lens_space_validation() {
        assert!(LensSpaceId::new(9, 4).is_ok());
        assert!(LensSpaceId::new(9, 3).is_err());
        assert!(LensSpaceId::new(9, 9).is_err());
        assert_eq!(LensSpaceId::new(7, 3).unwrap().order(), 7);
    }

    #[test]
    fn valid_slope_listing() {
        let v = valid_simple_slopes(13);
        assert!(v.contains(&s(3, 1)));
        assert!(v.contains(&s(9, 2)));
        assert!(v.contains(&s(13, 4)));
        assert!(v.contains(&s(11, 2)));
        assert!(!v.iter().any(|x| x.p() % 5 == 0 || x.p() % 2 == 0));
        assert!(v.iter().all(|x| x.in_closed((3, 1), (6, 1))));
    }
}
