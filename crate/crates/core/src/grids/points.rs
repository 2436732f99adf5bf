//! Element types for the torus, S³, SO(3) and S².

use crate::error::{CoreError, Result};

/// Point on the torus with coordinate z = e^{2πiθ}; θ is kept in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    theta: f64,
}

impl TorusPoint {
    pub fn new(theta: f64) -> Self {
        Self {
            theta: theta.rem_euclid(1.0),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Group operation (addition of angles mod 1).
    pub fn compose(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint::new(self.theta + other.theta)
    }

    pub fn inverse(&self) -> TorusPoint {
        TorusPoint::new(-self.theta)
    }
}

/// Unit quaternion x = x₀ + i x₁ + j x₂ + k x₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl UnitQuaternion {
    /// Construct from components; fails when the norm is off unity by more
    /// than 1e-9. Smaller drift is renormalized away.
    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let n = (x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3).sqrt();
        if (n - 1.0).abs() > 1e-9 {
            return Err(CoreError::domain(format!(
                "quaternion norm {n} too far from 1"
            )));
        }
        Ok(Self {
            x0: x0 / n,
            x1: x1 / n,
            x2: x2 / n,
            x3: x3 / n,
        })
    }

    pub fn identity() -> Self {
        Self { x0: 1.0, x1: 0.0, x2: 0.0, x3: 0.0 }
    }

    /// Scalar part Sc x = x₀, the argument of every central function.
    pub fn scalar_part(&self) -> f64 {
        self.x0
    }

    /// Conjugate, which inverts unit quaternions.
    pub fn conjugate(&self) -> Self {
        Self { x0: self.x0, x1: -self.x1, x2: -self.x2, x3: -self.x3 }
    }

    pub fn norm(&self) -> f64 {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Element of the maximal torus S³ ∩ ℂ at angle u: cos u + i sin u.
    pub fn from_torus_angle(u: f64) -> Self {
        Self { x0: u.cos(), x1: u.sin(), x2: 0.0, x3: 0.0 }
    }
}

/// Hamilton product of two unit quaternions, renormalized to absorb
/// floating-point drift.
pub fn quaternion_mul(a: &UnitQuaternion, b: &UnitQuaternion) -> UnitQuaternion {
    let x0 = a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3;
    let x1 = a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2;
    let x2 = a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1;
    let x3 = a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0;
    let n = (x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3).sqrt();
    UnitQuaternion { x0: x0 / n, x1: x1 / n, x2: x2 / n, x3: x3 / n }
}

/// Point on S², |ξ| = 1; the base point is the north pole ξ₀ = (0,0,1)ᵀ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    xi: [f64; 3],
}

impl SpherePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if (n - 1.0).abs() > 1e-9 {
            return Err(CoreError::domain(format!("sphere point norm {n} too far from 1")));
        }
        Ok(Self { xi: [x / n, y / n, z / n] })
    }

    pub fn north_pole() -> Self {
        Self { xi: [0.0, 0.0, 1.0] }
    }

    /// From latitude-sine t = ξ₀ᵀξ and longitude θ.
    pub fn from_lat_lon(t: f64, theta: f64) -> Self {
        let t = t.clamp(-1.0, 1.0);
        let s = (1.0 - t * t).sqrt();
        Self { xi: [s * theta.cos(), s * theta.sin(), t] }
    }

    pub fn coords(&self) -> [f64; 3] {
        self.xi
    }

    /// Latitude-sine t = ξ₀ᵀξ.
    pub fn latitude_sine(&self) -> f64 {
        self.xi[2]
    }

    /// Longitude θ ∈ [-π, π].
    pub fn longitude(&self) -> f64 {
        self.xi[1].atan2(self.xi[0])
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.xi[0] * other.xi[0] + self.xi[1] * other.xi[1] + self.xi[2] * other.xi[2]
    }
}

/// Rotation in SO(3), stored as its matrix. Euler angles follow the
/// factorization A = R_γ S_β R_α with R rotating in the xy-plane and S in
/// the yz-plane; β is extracted in [0, π] so that the chart covers the
/// whole group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    m: [[f64; 3]; 3],
}

impl Rotation3 {
    pub fn identity() -> Self {
        Self { m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] }
    }

    /// z-axis factor R_δ of the Euler decomposition.
    pub fn r_z(delta: f64) -> Self {
        let (s, c) = delta.sin_cos();
        Self { m: [[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]] }
    }

    /// x-axis factor S_β of the Euler decomposition.
    pub fn s_x(beta: f64) -> Self {
        let (s, c) = beta.sin_cos();
        Self { m: [[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]] }
    }

    /// Compose A = R_γ S_β R_α.
    pub fn from_euler(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::r_z(gamma).compose(&Self::s_x(beta)).compose(&Self::r_z(alpha))
    }

    /// Build from a matrix, verifying orthogonality and det = +1.
    pub fn from_matrix(m: [[f64; 3]; 3]) -> Result<Self> {
        let r = Self { m };
        let rt = r.transpose();
        let prod = r.compose(&rt);
        let mut dev: f64 = 0.0;
        for (i, row) in prod.m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((v - want).abs());
            }
        }
        if dev > 1e-12 {
            return Err(CoreError::domain(format!(
                "matrix is not orthogonal (deviation {dev:.3e})"
            )));
        }
        if (r.det() - 1.0).abs() > 1e-9 {
            return Err(CoreError::domain("matrix determinant is not +1"));
        }
        Ok(r)
    }

    pub fn matrix(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn compose(&self, other: &Rotation3) -> Rotation3 {
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Rotation3 { m }
    }

    pub fn transpose(&self) -> Rotation3 {
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = self.m[j][i];
            }
        }
        Rotation3 { m }
    }

    /// Inverse rotation (= transpose).
    pub fn inverse(&self) -> Rotation3 {
        self.transpose()
    }

    fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Extract Euler angles (α, β, γ) with β ∈ [0, π] reproducing the
    /// matrix through `from_euler`. At the chart boundaries (sin β = 0) the
    /// angles are not unique; a representative with α = 0 is returned.
    pub fn euler_angles(&self) -> (f64, f64, f64) {
        let m = &self.m;
        let cb = m[2][2].clamp(-1.0, 1.0);
        let beta = cb.acos();
        let sb = beta.sin();
        if sb > 1e-12 {
            let gamma = m[0][2].atan2(m[1][2]);
            let alpha = m[2][0].atan2(-m[2][1]);
            (alpha, beta, gamma)
        } else if cb > 0.0 {
            // β = 0: A = R_{γ+α}
            (0.0, 0.0, m[0][1].atan2(m[0][0]))
        } else {
            // β = π: A = R_γ S_π R_α depends on γ - α only
            (0.0, std::f64::consts::PI, (-m[0][1]).atan2(m[0][0]))
        }
    }

    /// Apply the rotation to a point of S².
    pub fn apply(&self, xi: &SpherePoint) -> SpherePoint {
        let v = xi.coords();
        let mut out = [0.0; 3];
        for (i, row) in self.m.iter().enumerate() {
            out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
        }
        let n = (out[0] * out[0] + out[1] * out[1] + out[2] * out[2]).sqrt();
        SpherePoint { xi: [out[0] / n, out[1] / n, out[2] / n] }
    }
}

/// Rotate a sphere point: A·ξ.
pub fn rotate_sphere(a: &Rotation3, xi: &SpherePoint) -> SpherePoint {
    a.apply(xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn torus_reduction() {
        assert!((TorusPoint::new(1.25).theta() - 0.25).abs() < 1e-15);
        assert!((TorusPoint::new(-0.25).theta() - 0.75).abs() < 1e-15);
        let p = TorusPoint::new(0.3).compose(&TorusPoint::new(0.9));
        assert!((p.theta() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn quaternion_relations() {
        let one = UnitQuaternion::identity();
        let i = UnitQuaternion::new(0.0, 1.0, 0.0, 0.0).unwrap();
        let j = UnitQuaternion::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let k = UnitQuaternion::new(0.0, 0.0, 0.0, 1.0).unwrap();
        // 1·i = i, ij = k
        assert_eq!(quaternion_mul(&one, &i), i);
        let ij = quaternion_mul(&i, &j);
        assert!((ij.x3 - 1.0).abs() < 1e-15 && ij.x0.abs() < 1e-15);
        // i² = j² = k² = -1
        for q in [i, j, k] {
            let sq = quaternion_mul(&q, &q);
            assert!((sq.x0 + 1.0).abs() < 1e-15);
        }
        // x · x⁻¹ = 1 with x⁻¹ the conjugate
        let x = UnitQuaternion::new(0.5, 0.5, 0.5, 0.5).unwrap();
        let prod = quaternion_mul(&x, &x.conjugate());
        assert!((prod.x0 - 1.0).abs() < 1e-14);
        assert!(prod.x1.abs() < 1e-14 && prod.x2.abs() < 1e-14 && prod.x3.abs() < 1e-14);
    }

    #[test]
    fn quaternion_norm_guard() {
        assert!(UnitQuaternion::new(1.0, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn rotation_acts_on_sphere() {
        let xi = SpherePoint::from_lat_lon(0.3, 1.1);
        assert_eq!(Rotation3::identity().apply(&xi).coords(), xi.coords());

        // R_γ S_β maps the north pole to latitude-sine cos β.
        let a = Rotation3::r_z(0.7).compose(&Rotation3::s_x(0.4));
        let moved = a.apply(&SpherePoint::north_pole());
        assert!((moved.latitude_sine() - 0.4f64.cos()).abs() < 1e-14);

        // transpose inverts
        let back = a.transpose().apply(&moved);
        for (got, want) in back.coords().iter().zip([0.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn euler_roundtrip_on_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let alpha = rng.gen_range(-PI..PI);
            let beta = rng.gen_range(0.0..PI);
            let gamma = rng.gen_range(-PI..PI);
            let a = Rotation3::from_euler(alpha, beta, gamma);
            let (a2, b2, g2) = a.euler_angles();
            let rebuilt = Rotation3::from_euler(a2, b2, g2);
            for i in 0..3 {
                for j in 0..3 {
                    assert!(
                        (a.matrix()[i][j] - rebuilt.matrix()[i][j]).abs() < 1e-10,
                        "mismatch at ({i},{j}) for ({alpha},{beta},{gamma})"
                    );
                }
            }
        }
        // chart boundaries
        for (a, b, g) in [(0.4, 0.0, 1.0), (0.2, PI, -0.6)] {
            let m = Rotation3::from_euler(a, b, g);
            let (a2, b2, g2) = m.euler_angles();
            let rebuilt = Rotation3::from_euler(a2, b2, g2);
            for i in 0..3 {
                for j in 0..3 {
                    assert!((m.matrix()[i][j] - rebuilt.matrix()[i][j]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn from_matrix_validates() {
        let bad = [[1.0, 0.1, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(Rotation3::from_matrix(bad).is_err());
        let good = Rotation3::from_euler(0.3, 0.9, -1.2);
        assert!(Rotation3::from_matrix(good.matrix()).is_ok());
    }
}
