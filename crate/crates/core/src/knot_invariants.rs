//! Torus-knot Alexander polynomials, determinants, and the Alexander
//! polynomials allowed for instanton L-space knots of a given genus.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{IntPoly, LaurentPoly};
use crate::slope::Slope;

/// Coprime torus-knot parameters `T(a, b)` with `a >= 2`, `b >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TorusKnotParams {
    a: u64,
    b: u64,
}

impl TorusKnotParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 || b < 1 {
            return Err(Error::invalid(format!(
                "torus knot T({a},{b}) needs a >= 2 and b >= 1"
            )));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::invalid(format!(
                "torus knot T({a},{b}) needs coprime parameters"
            )));
        }
        Ok(TorusKnotParams { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Genus `(a - 1)(b - 1) / 2`, which is also the top Alexander degree.
    pub fn genus(&self) -> u64 {
        (self.a - 1) * (self.b - 1) / 2
    }
}

/// Symmetrized `Δ_{T(a,b)}(t) = t^{-g} (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1))`.
pub fn torus_alexander(tk: &TorusKnotParams) -> LaurentPoly {
    let (a, b) = (tk.a as usize, tk.b as usize);
    let num = IntPoly::x_pow_minus_one(a * b).mul(&IntPoly::x_pow_minus_one(1));
    let den = IntPoly::x_pow_minus_one(a).mul(&IntPoly::x_pow_minus_one(b));
    let quot = num
        .div_exact(&den)
        .expect("torus knot Alexander quotient must be exact");
    LaurentPoly::from_int_poly(&quot, -(tk.genus() as i64))
}

/// `|Δ(-1)|` of a symmetric polynomial normalized by `Δ(1) = 1`.
pub fn determinant(p: &LaurentPoly) -> Result<BigUint> {
    if !p.is_symmetric() {
        return Err(Error::precondition(format!(
            "determinant needs a symmetric polynomial, got {p}"
        )));
    }
    if !p.at_one().is_one() {
        return Err(Error::precondition(format!(
            "determinant needs p(1) = 1, got p(1) = {} for {p}",
            p.at_one()
        )));
    }
    Ok(p.at_minus_one().abs().to_biguint().expect("non-negative"))
}

/// Conjugacy classes of non-abelian binary dihedral representations of a
/// knot group with determinant `det`: `(det - 1) / 2`.
pub fn binary_dihedral_count(det: &BigUint) -> Result<BigUint> {
    if det.is_even() {
        return Err(Error::invalid(format!(
            "knot determinants are odd, got {det}"
        )));
    }
    Ok((det - 1u32) / 2u32)
}

/// A symmetric support `n_k > … > n_1 > 0` (mirrored to negative exponents)
/// with `n_k = g`, `n_{k-1} = g - 1`, and alternating unit coefficients,
/// `+1` at the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LSpaceAlexanderPattern {
    genus: u64,
    /// Positive support exponents, descending; `n_0 = 0` is implicit.
    positive_support: Vec<u64>,
}

impl LSpaceAlexanderPattern {
    pub fn new(genus: u64, mut positive_support: Vec<u64>) -> Result<Self> {
        positive_support.sort_unstable_by(|a, b| b.cmp(a));
        positive_support.dedup();
        if genus == 0 {
            return Err(Error::invalid("L-space Alexander patterns need genus >= 1"));
        }
        if positive_support.first() != Some(&genus) {
            return Err(Error::invalid("top support exponent must equal the genus"));
        }
        if positive_support.contains(&0) {
            return Err(Error::invalid(
                "0 is always in the support; list positive exponents",
            ));
        }
        // n_{k-1} = g - 1, where for g = 1 this is n_0 = 0 itself.
        if genus >= 2 && positive_support.get(1) != Some(&(genus - 1)) {
            return Err(Error::invalid("second support exponent must be genus - 1"));
        }
        Ok(LSpaceAlexanderPattern {
            genus,
            positive_support,
        })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// The number `k` of positive support exponents.
    pub fn k(&self) -> usize {
        self.positive_support.len()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let k = self.k();
        let sign = |j: usize| if (k - j) % 2 == 0 { 1i64 } else { -1 };
        let mut terms = vec![(0i64, BigInt::from(sign(0)))];
        // positive_support[0] is n_k, positive_support[k-1] is n_1
        for (idx, &n) in self.positive_support.iter().enumerate() {
            let j = k - idx;
            let c = BigInt::from(sign(j));
            terms.push((n as i64, c.clone()));
            terms.push((-(n as i64), c));
        }
        LaurentPoly::from_terms(terms)
    }
}

/// All patterns of genus `g`: the free choices are the subsets of
/// `{1, …, g - 2}`, so there are `2^(g-2)` for `g >= 2` and one for `g = 1`.
pub fn enumerate_lspace_patterns(g: u64) -> Result<Vec<LSpaceAlexanderPattern>> {
    if g == 0 {
        return Err(Error::invalid("genus must be at least 1"));
    }
    if g == 1 {
        return Ok(vec![LSpaceAlexanderPattern::new(1, vec![1])?]);
    }
    let free = g.saturating_sub(2);
    if free >= 63 {
        return Err(Error::invalid(format!(
            "genus {g} is too large to enumerate"
        )));
    }
    (0..1u64 << free)
        .map(|mask| {
            let mut support = vec![g, g - 1];
            support.extend((1..=free).filter(|i| mask >> (i - 1) & 1 == 1));
            LSpaceAlexanderPattern::new(g, support)
        })
        .collect()
}

/// The Alexander polynomials realized by [`enumerate_lspace_patterns`],
/// sorted and distinct.
pub fn enumerate_lspace_alexander(g: u64) -> Result<Vec<LaurentPoly>> {
    let mut polys: Vec<LaurentPoly> = enumerate_lspace_patterns(g)?
        .iter()
        .map(LSpaceAlexanderPattern::to_poly)
        .collect();
    polys.sort();
    polys.dedup();
    Ok(polys)
}

/// Framed instanton homology dimension of `p/q`-surgery on a knot with
/// `ν♯ = r`: `p` when `p/q >= r`, otherwise `2rq - p`.
pub fn framed_instanton_dim(slope: Slope, r: u64) -> u64 {
    if slope.cmp_ratio(r, 1) != std::cmp::Ordering::Less {
        slope.p()
    } else {
        2 * r * slope.q() - slope.p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn tk(a: u64, b: u64) -> TorusKnotParams {
        TorusKnotParams::new(a, b).unwrap()
    }

    #[test]
    fn torus_alexander_examples() {
        assert_eq!(torus_alexander(&tk(2, 5)), lp("t^2 - t + 1 - t^-1 + t^-2"));
        assert_eq!(torus_alexander(&tk(5, 2)), torus_alexander(&tk(2, 5)));
        assert_eq!(torus_alexander(&tk(5, 1)), LaurentPoly::one());
        assert_eq!(torus_alexander(&tk(2, 3)), lp("t - 1 + t^-1"));
        assert_eq!(
            torus_alexander(&tk(3, 4)),
            lp("t^3 - t^2 + 1 - t^-2 + t^-3")
        );
        assert!(TorusKnotParams::new(4, 6).is_err());
        assert!(TorusKnotParams::new(1, 3).is_err());
    }

    #[test]
    fn torus_alexander_shape() {
        for a in 2..=12u64 {
            for b in 2..=12u64 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let d = torus_alexander(&tk(a, b));
                assert_eq!(d.span(), (a - 1) * (b - 1), "T({a},{b})");
                assert!(d.is_symmetric());
                assert!(d.at_one().is_one());
                let det = d.at_minus_one().abs();
                if a % 2 == 1 && b % 2 == 1 {
                    assert!(det.is_one(), "T({a},{b})");
                }
                if a == 2 {
                    assert_eq!(det, BigInt::from(b), "T(2,{b})");
                }
            }
        }
        for d in 1..=20u64 {
            if d % 5 == 0 {
                continue;
            }
            let det = determinant(&torus_alexander(&tk(5, d))).unwrap();
            let expect = if d % 2 == 1 { 1u32 } else { 5 };
            assert_eq!(det, BigUint::from(expect), "T(5,{d})");
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&lp("t^2 - t + 1 - t^-1 + t^-2")).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            determinant(&lp("t^3 - t^2 + 1 - t^-2 + t^-3")).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(determinant(&LaurentPoly::one()).unwrap(), BigUint::one());
        assert!(matches!(
            determinant(&lp("t - 1")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            determinant(&lp("t + 1 + t^-1")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn binary_dihedral_examples() {
        let count = |d: u32| binary_dihedral_count(&BigUint::from(d)).unwrap();
        assert_eq!(count(5), BigUint::from(2u32));
        assert_eq!(count(7), BigUint::from(3u32));
        assert_eq!(count(1), BigUint::from(0u32));
        assert!(binary_dihedral_count(&BigUint::from(4u32)).is_err());
    }

    #[test]
    fn lspace_enumeration_examples() {
        assert_eq!(
            enumerate_lspace_alexander(2).unwrap(),
            vec![lp("t^2 - t + 1 - t^-1 + t^-2")]
        );
        let mut g3 = vec![
            lp("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"),
            lp("t^3 - t^2 + 1 - t^-2 + t^-3"),
        ];
        g3.sort();
        assert_eq!(enumerate_lspace_alexander(3).unwrap(), g3);
        assert_eq!(enumerate_lspace_alexander(5).unwrap().len(), 8);
        assert_eq!(
            enumerate_lspace_alexander(1).unwrap(),
            vec![lp("t - 1 + t^-1")]
        );
        assert!(enumerate_lspace_alexander(0).is_err());
    }

    /// Brute force over all symmetric sign patterns on `[-g, g]`.
    fn brute_force_lspace(g: u64) -> Vec<LaurentPoly> {
        let g = g as i64;
        let mut out = Vec::new();
        // each exponent 0..=g is in or out of the support
        for mask in 0u64..1 << (g + 1) {
            let support: Vec<i64> = (0..=g).rev().filter(|&e| mask >> e & 1 == 1).collect();
            if support.first() != Some(&g) || support.last() != Some(&0) {
                continue;
            }
            if g >= 2 && support.get(1) != Some(&(g - 1)) {
                continue;
            }
            let k = support.len() - 1;
            let terms = support.iter().enumerate().flat_map(|(idx, &n)| {
                let j = k - idx;
                let c: i64 = if (k - j) % 2 == 0 { 1 } else { -1 };
                if n == 0 {
                    vec![(0, c)]
                } else {
                    vec![(n, c), (-n, c)]
                }
            });
            out.push(LaurentPoly::from_terms(terms));
        }
        out.sort();
        out
    }

    #[test]
    fn lspace_enumeration_matches_brute_force() {
        for g in 1..=10 {
            let polys = enumerate_lspace_alexander(g).unwrap();
            assert_eq!(polys, brute_force_lspace(g), "genus {g}");
            let expected = if g == 1 { 1 } else { 1usize << (g - 2) };
            assert_eq!(polys.len(), expected);
            for p in &polys {
                assert!(p.at_one().is_one());
                assert!(p.is_symmetric());
                assert_eq!(p.max_exp(), Some(g as i64));
                assert!(determinant(p).unwrap().is_odd());
            }
        }
    }

    #[test]
    fn pattern_validation() {
        assert!(LSpaceAlexanderPattern::new(3, vec![3, 1]).is_err());
        assert!(LSpaceAlexanderPattern::new(3, vec![2, 1]).is_err());
        let p = LSpaceAlexanderPattern::new(4, vec![1, 4, 3]).unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.to_poly(), lp("t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4"));
    }

    #[test]
    fn framed_instanton_examples() {
        assert_eq!(framed_instanton_dim(Slope::integer(0), 3), 6);
        assert_eq!(framed_instanton_dim(Slope::integer(3), 3), 3);
        assert_eq!(framed_instanton_dim(Slope::integer(1), 3), 5);
        assert_eq!(framed_instanton_dim(Slope::new(5, 2).unwrap(), 3), 7);
        // both branches give r*q at p/q = r
        for r in 1..6u64 {
            for q in 1..5u64 {
                let s = Slope::new(r * q, q).unwrap();
                assert_eq!(framed_instanton_dim(s, r), s.p());
                assert_eq!(2 * r * s.q() - s.p(), s.p());
            }
        }
    }
}
