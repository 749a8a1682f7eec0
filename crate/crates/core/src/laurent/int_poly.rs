//! Dense integer polynomials in `t` with non-negative exponents.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * t^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly::new(coeffs)
    }

    /// `t^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        IntPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coefficient by `k`. Panics if inexact.
    fn div_scalar_exact(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division in subresultant chain");
                    q
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Divides by the largest power of `t` dividing `self`; returns the
    /// quotient and that power.
    pub fn strip_t_power(&self) -> (IntPoly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            IntPoly {
                coeffs: self.coeffs[k..].to_vec(),
            },
            k,
        )
    }

    /// Quotient and remainder over ℚ restricted to ℤ: returns `Some((q, r))`
    /// with `self = q * divisor + r`, `deg r < deg divisor`, when every
    /// quotient coefficient is an integer, and `None` otherwise.
    pub fn div_rem_integral(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Some((IntPoly::zero(), IntPoly::zero()));
        };
        if nd < dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self` in ℤ[t].
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        match self.div_rem_integral(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by the zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lc = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut pending = da - db + 1;
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let top = r.coeffs[dr].clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.into_iter().map(|c| c * &lc).collect();
            for (j, bj) in b.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &top * bj;
            }
            r = IntPoly::new(coeffs);
            pending -= 1;
        }
        r.scale(&num_traits::pow(lc, pending))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::LaurentPoly::from(self))
    }
}

/// Resultant of two integer polynomials by the subresultant pseudo-remainder
/// sequence. Zero when either input is zero or they share a root.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if da == 0 {
        return num_traits::pow(a.coeff(0), db);
    }
    if db == 0 {
        return num_traits::pow(b.coeff(0), da);
    }

    let ca = a.content();
    let cb = b.content();
    let mut a = a.div_scalar_exact(&ca);
    let mut b = b.div_scalar_exact(&cb);
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let deg_a = a.degree().unwrap();
        let deg_b = b.degree().unwrap();
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        if r.is_zero() {
            return BigInt::zero();
        }
        b = r.div_scalar_exact(&divisor);
        g = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            let (q, rem) = num.div_rem(&den);
            assert!(rem.is_zero(), "inexact h update in subresultant chain");
            q
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let deg_a = a.degree().unwrap();
    let num = num_traits::pow(b.coeff(0), deg_a);
    let den = num_traits::pow(h, deg_a - 1);
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "inexact final step in subresultant chain");
    sign * scale * q
}

/// Absolute value of the resultant; convenient where only orders matter.
pub fn abs_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    resultant(a, b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Sylvester-matrix determinant via exact rational Gaussian elimination.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        use num_rational::BigRational;
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        let size = m + n;
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for i in 0..n {
            let mut row = vec![BigRational::zero(); size];
            for k in 0..=m {
                row[i + k] = BigRational::from(a.coeff(m - k));
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![BigRational::zero(); size];
            for k in 0..=n {
                row[i + k] = BigRational::from(b.coeff(n - k));
            }
            rows.push(row);
        }
        let mut det = BigRational::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
                return BigInt::zero();
            };
            if piv != col {
                rows.swap(piv, col);
                det = -det;
            }
            let pv = rows[col][col].clone();
            det *= &pv;
            for r in col + 1..size {
                let f = &rows[r][col] / &pv;
                if f.is_zero() {
                    continue;
                }
                for c in col..size {
                    let sub = &f * &rows[col][c];
                    rows[r][c] -= sub;
                }
            }
        }
        assert!(det.is_integer());
        det.to_integer()
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn exact_division() {
        // (t^2 - 1) / (t - 1) = t + 1
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
        // 2t + 1 is not divisible by 2t in ℤ[t]: quotient would be 1 + 1/(2t)
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
        // quotient coefficient 1/2 would be needed
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2, 2])), None);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, -1, 4, 1, -5]);
        let b = p(&[2, 0, 3]);
        let r = a.pseudo_rem(&b);
        // lc(b)^3 a - r must be divisible by b
        let lhs = a.scale(&BigInt::from(27)).sub(&r);
        assert!(lhs.div_exact(&b).is_some());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn resultant_known_values() {
        // Res(t - a, t - b) = a - b ... with the sign convention Res(f, g) = lc(f)^deg g prod g(roots f)
        // roots of t - 2: g(2) where g = t - 5 => -3
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-5, 1])), BigInt::from(-3));
        // shared root
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])), BigInt::zero());
        // Res(t^2 + 1, t^2 - t + 1): prod over ±i of (−(±i)) = (−i)(i) = 1
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[1, -1, 1])), BigInt::one());
        // constants
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])), BigInt::from(9));
        assert_eq!(resultant(&IntPoly::zero(), &p(&[1, 1])), BigInt::zero());
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[1, -1, 1], &[1, 1, 1, 1, 1, 1]),
            (&[2, 3, -1, 4], &[-3, 0, 5]),
            (&[1, -1, 0, 1, -1], &[7, 2, -2, 1, 0, 3]),
            (&[0, 1, 2], &[5, 0, 0, 0, 2]),
            (&[6, -4, 2], &[3, -2, 1]),
            (&[1, 2, 3, 4, 5, 6, 7], &[7, 6, 5, 4, 3, 2, 1]),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            assert_eq!(resultant(&a, &b), sylvester_resultant(&a, &b), "{a} / {b}");
            assert_eq!(resultant(&b, &a), sylvester_resultant(&b, &a), "{b} / {a}");
        }
    }
}
