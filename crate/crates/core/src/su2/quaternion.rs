//! Quaternions `w + x i + y j + z k` in `f64`; SU(2) is the unit sphere.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// `cos θ + sin θ · u` for a unit imaginary axis `u = (ux, uy, uz)`.
    pub fn from_axis_angle(axis: [f64; 3], theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Quaternion::new(c, s * axis[0], s * axis[1], s * axis[2])
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn dot(self, o: Self) -> f64 {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, k: f64) -> Self {
        Quaternion::new(k * self.w, k * self.x, k * self.y, k * self.z)
    }

    /// Panics on the zero quaternion.
    pub fn normalized(self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero quaternion");
        self.scale(1.0 / n)
    }

    pub fn imag(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Projection onto the tangent space of the unit sphere at `at`.
    pub fn tangent_at(self, at: Self) -> Self {
        self - at.scale(self.dot(at))
    }

    pub fn commutator_norm(self, o: Self) -> f64 {
        (self * o - o * self).norm()
    }

    pub fn powi(self, n: u32) -> Self {
        (0..n).fold(Quaternion::ONE, |acc, _| acc * self)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Self) -> Self {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quaternion as Q;

    fn close(a: Q, b: Q) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn hamilton_relations() {
        assert!(close(Q::I * Q::I, -Q::ONE));
        assert!(close(Q::J * Q::J, -Q::ONE));
        assert!(close(Q::K * Q::K, -Q::ONE));
        assert!(close(Q::I * Q::J * Q::K, -Q::ONE));
        assert!(close(Q::I * Q::J, Q::K));
        assert!(close(Q::J * Q::I, -Q::K));
        assert!((Q::I.commutator_norm(Q::J) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn norm_is_multiplicative_and_conj_inverts() {
        let a = Q::new(0.3, -1.2, 0.7, 2.0);
        let b = Q::new(-0.5, 0.1, 0.9, -0.4);
        assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-13);
        assert!(close((a * b).conj(), b.conj() * a.conj()));
        let u = a.normalized();
        assert!(close(u * u.conj(), Q::ONE));
        assert!(u.tangent_at(u).norm() < 1e-15);
        assert!(a.tangent_at(u).dot(u).abs() < 1e-14);
    }

    #[test]
    fn roots_of_unity() {
        let z = Q::from_axis_angle([1.0, 0.0, 0.0], 2.0 * std::f64::consts::PI / 5.0);
        assert!(close(z.powi(5), Q::ONE));
        assert!(close(Q::J.powi(5), Q::J));
    }
}
