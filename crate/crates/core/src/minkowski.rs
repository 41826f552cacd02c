//! Minkowski space: the bilinear form of signature (-,-,-,+), causal typing,
//! and adapted frames for timelike and lightlike momenta.
//!
//! Components are ordered (x, y, z, t) throughout, so the Gram matrix of the
//! form is G = diag(-1, -1, -1, 1).

use nalgebra::{Matrix4, Vector3, Vector4};

use crate::error::Error;
use crate::tol::ToleranceConfig;

/// Gram matrix G = diag(-1, -1, -1, 1) in the (x, y, z, t) basis.
pub fn metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(-1.0, -1.0, -1.0, 1.0))
}

/// Vector in Minkowski space, components ordered (x, y, z, t).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector(pub Vector4<f64>);

impl FourVector {
    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        Self(Vector4::new(x, y, z, t))
    }

    pub fn from_parts(spatial: Vector3<f64>, t: f64) -> Self {
        Self::new(spatial.x, spatial.y, spatial.z, t)
    }

    pub fn zero() -> Self {
        Self(Vector4::zeros())
    }

    /// Standard basis vector e_i for i in 0..4 (x, y, z, t).
    pub fn basis(i: usize) -> Self {
        let mut v = Vector4::zeros();
        v[i] = 1.0;
        Self(v)
    }

    pub fn spatial(&self) -> Vector3<f64> {
        self.0.xyz()
    }

    /// Time component; the energy when the vector is a momentum.
    pub fn t(&self) -> f64 {
        self.0.w
    }

    /// Euclidean norm, used only for scale factors in tolerance checks.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.0.x, self.0.y, self.0.z, self.0.w]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl std::ops::Add for FourVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl std::ops::Sub for FourVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl std::ops::Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl std::ops::Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self(self.0 * rhs)
    }
}

impl std::ops::Div<f64> for FourVector {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        Self(self.0 / rhs)
    }
}

/// The bilinear form: gamma(u, v) = -<u_s, v_s> + u_t v_t.
pub fn gamma(u: &FourVector, v: &FourVector) -> f64 {
    -u.0.x * v.0.x - u.0.y * v.0.y - u.0.z * v.0.z + u.0.w * v.0.w
}

/// Causal character of a vector. `mu` is the modulus sqrt(|gamma(P, P)|).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CausalType {
    Timelike { mu: f64 },
    Lightlike,
    Spacelike { mu: f64 },
    Zero,
}

/// Classify P by the sign of gamma(P, P), with thresholds scaled by
/// max(1, ||P||) for the zero test and its square for the lightlike test.
pub fn causal_type(p: &FourVector, tol: &ToleranceConfig) -> CausalType {
    let scale = 1f64.max(p.euclidean_norm());
    if p.euclidean_norm() <= tol.classify * scale {
        return CausalType::Zero;
    }
    let q = gamma(p, p);
    if q.abs() <= tol.classify * scale * scale {
        CausalType::Lightlike
    } else if q > 0.0 {
        CausalType::Timelike { mu: q.sqrt() }
    } else {
        CausalType::Spacelike { mu: (-q).sqrt() }
    }
}

/// Frame adapted to a timelike P: p_hat = P / mu with gamma(p_hat, p_hat) = 1,
/// and w1, w2, w3 spanning the gamma-complement with Gram matrix -I.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimelikeFrame {
    pub w1: FourVector,
    pub w2: FourVector,
    pub w3: FourVector,
    pub p_hat: FourVector,
}

impl TimelikeFrame {
    pub fn spacelike(&self) -> [FourVector; 3] {
        [self.w1, self.w2, self.w3]
    }

    /// Vector with the given coordinates in the spacelike basis (w1, w2, w3).
    pub fn embed_spatial(&self, c: &Vector3<f64>) -> FourVector {
        self.w1 * c.x + self.w2 * c.y + self.w3 * c.z
    }

    /// Coordinates of v along (w1, w2, w3), read off through the form.
    pub fn spatial_coords(&self, v: &FourVector) -> Vector3<f64> {
        Vector3::new(
            -gamma(v, &self.w1),
            -gamma(v, &self.w2),
            -gamma(v, &self.w3),
        )
    }

    /// Largest deviation of the frame Gram matrix from diag(-1, -1, -1, 1).
    pub fn gram_residual(&self) -> f64 {
        let vs = [self.w1, self.w2, self.w3, self.p_hat];
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let want = if i != j {
                    0.0
                } else if i < 3 {
                    -1.0
                } else {
                    1.0
                };
                worst = worst.max((gamma(&vs[i], &vs[j]) - want).abs());
            }
        }
        worst
    }
}

/// Gram-Schmidt rejection against accepted unit-spacelike vectors
/// (self-pairing -1), in the indefinite form.
fn reject_spacelike(mut v: FourVector, accepted: &[FourVector]) -> FourVector {
    for w in accepted {
        v = v + *w * gamma(&v, w);
    }
    v
}

/// Index of the candidate with the largest |self-pairing|; first wins ties.
fn pivot_index(cands: &[FourVector]) -> usize {
    let mut idx = 0;
    let mut best = f64::NEG_INFINITY;
    for (i, c) in cands.iter().enumerate() {
        let s = gamma(c, c).abs();
        if s > best {
            best = s;
            idx = i;
        }
    }
    idx
}

/// Build a TimelikeFrame for a timelike P by pivoted Gram-Schmidt on the
/// standard basis. Deterministic: candidates are scanned in a fixed order and
/// the pivot is the largest remaining |self-pairing|.
pub fn timelike_frame(p: &FourVector, tol: &ToleranceConfig) -> Result<TimelikeFrame, Error> {
    let CausalType::Timelike { mu } = causal_type(p, tol) else {
        return Err(Error::NotTimelike { gamma: gamma(p, p) });
    };
    let p_hat = *p / mu;
    let mut cands: Vec<FourVector> = (0..4)
        .map(|i| {
            let e = FourVector::basis(i);
            // gamma(p_hat, p_hat) = 1, so this removes the p_hat component
            e - p_hat * gamma(&e, &p_hat)
        })
        .collect();
    let mut ws: Vec<FourVector> = Vec::with_capacity(3);
    for _ in 0..3 {
        for c in cands.iter_mut() {
            *c = reject_spacelike(*c, &ws);
        }
        let idx = pivot_index(&cands);
        let w = cands.remove(idx);
        let n2 = -gamma(&w, &w);
        ws.push(w / n2.sqrt());
    }
    Ok(TimelikeFrame {
        w1: ws[0],
        w2: ws[1],
        w3: ws[2],
        p_hat,
    })
}

/// Frame adapted to a lightlike P: f1 = P_dual with gamma(P, P_dual) = 1,
/// f4 = P, and spacelike f2, f3 spanning the complement of span{P, P_dual}.
/// The Gram matrix is the bordered form `gram_prime`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LightlikeFrame {
    pub f1: FourVector,
    pub f2: FourVector,
    pub f3: FourVector,
    pub f4: FourVector,
}

impl LightlikeFrame {
    /// Gram matrix of (f1, f2, f3, f4):
    /// [[0,0,0,1], [0,-1,0,0], [0,0,-1,0], [1,0,0,0]].
    pub fn gram_prime() -> Matrix4<f64> {
        Matrix4::new(
            0.0, 0.0, 0.0, 1.0, //
            0.0, -1.0, 0.0, 0.0, //
            0.0, 0.0, -1.0, 0.0, //
            1.0, 0.0, 0.0, 0.0,
        )
    }

    /// Coordinates of v in the frame, read off through the dual basis
    /// (f4, -f2, -f3, f1).
    pub fn coords(&self, v: &FourVector) -> Vector4<f64> {
        Vector4::new(
            gamma(&self.f4, v),
            -gamma(&self.f2, v),
            -gamma(&self.f3, v),
            gamma(&self.f1, v),
        )
    }

    /// Vector with the given frame coordinates.
    pub fn embed(&self, c: &Vector4<f64>) -> FourVector {
        self.f1 * c.x + self.f2 * c.y + self.f3 * c.z + self.f4 * c.w
    }

    /// Basis-change matrix with the frame vectors as columns.
    pub fn basis_matrix(&self) -> Matrix4<f64> {
        Matrix4::from_columns(&[self.f1.0, self.f2.0, self.f3.0, self.f4.0])
    }

    /// Inverse of `basis_matrix`, assembled from the dual basis rather than
    /// inverted numerically.
    pub fn dual_matrix(&self) -> Matrix4<f64> {
        let g = metric();
        Matrix4::from_rows(&[
            (g * self.f4.0).transpose(),
            (-(g * self.f2.0)).transpose(),
            (-(g * self.f3.0)).transpose(),
            (g * self.f1.0).transpose(),
        ])
    }

    /// Largest deviation of the frame Gram matrix from `gram_prime`.
    pub fn gram_residual(&self) -> f64 {
        let vs = [self.f1, self.f2, self.f3, self.f4];
        let want = Self::gram_prime();
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((gamma(&vs[i], &vs[j]) - want[(i, j)]).abs());
            }
        }
        worst
    }
}

/// Build a LightlikeFrame for a lightlike P = (p, E), E != 0. The partner is
/// f1 = (-p, E) / (2 E^2), and f2, f3 come from pivoted Gram-Schmidt on the
/// standard basis after removing the span{P, f1} components.
pub fn lightlike_frame(p: &FourVector, tol: &ToleranceConfig) -> Result<LightlikeFrame, Error> {
    if causal_type(p, tol) != CausalType::Lightlike {
        return Err(Error::NotLightlike { gamma: gamma(p, p) });
    }
    let e = p.t();
    let f1 = FourVector::from_parts(-p.spatial(), e) / (2.0 * e * e);
    let f4 = *p;
    let mut cands: Vec<FourVector> = (0..4)
        .map(|i| {
            let v = FourVector::basis(i);
            // gamma(f1, f4) = 1 pairs the degenerate directions
            v - f1 * gamma(&v, &f4) - f4 * gamma(&v, &f1)
        })
        .collect();
    let mut ws: Vec<FourVector> = Vec::with_capacity(2);
    for _ in 0..2 {
        for c in cands.iter_mut() {
            *c = reject_spacelike(*c, &ws);
        }
        let idx = pivot_index(&cands);
        let w = cands.remove(idx);
        let n2 = -gamma(&w, &w);
        ws.push(w / n2.sqrt());
    }
    Ok(LightlikeFrame {
        f1,
        f2: ws[0],
        f3: ws[1],
        f4,
    })
}
