//! The Lorentz group O(3,1), the Poincare group, their Lie algebras, and the
//! coadjoint action on the dual of the Poincare algebra.
//!
//! Points of the dual are stored as pairs (M, P); the action of (S, C) sends
//! (M, P) to (S M S^-1 + L_{C, SP}, SP).

use nalgebra::{Matrix3, Matrix4, Matrix5, Vector3};

use crate::error::Error;
use crate::minkowski::{gamma, metric, FourVector};
use crate::tol::ToleranceConfig;

/// Cross-product matrix: hat(l) v = l x v.
pub fn hat(l: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(
        0.0, -l.z, l.y, //
        l.z, 0.0, -l.x, //
        -l.y, l.x, 0.0,
    )
}

/// Element of the Lorentz algebra o(3,1), stored as the rotation part l and
/// boost part g of the block matrix [[hat(l), g], [g^T, 0]]. Storing (l, g)
/// keeps M^T G + G M = 0 exact by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzAlgebraElement {
    pub l: Vector3<f64>,
    pub g: Vector3<f64>,
}

impl LorentzAlgebraElement {
    pub fn new(l: Vector3<f64>, g: Vector3<f64>) -> Self {
        Self { l, g }
    }

    pub fn zero() -> Self {
        Self::new(Vector3::zeros(), Vector3::zeros())
    }

    /// The 4x4 realization [[hat(l), g], [g^T, 0]].
    pub fn matrix(&self) -> Matrix4<f64> {
        let h = hat(&self.l);
        let g = self.g;
        Matrix4::new(
            h[(0, 0)],
            h[(0, 1)],
            h[(0, 2)],
            g.x, //
            h[(1, 0)],
            h[(1, 1)],
            h[(1, 2)],
            g.y, //
            h[(2, 0)],
            h[(2, 1)],
            h[(2, 2)],
            g.z, //
            g.x,
            g.y,
            g.z,
            0.0,
        )
    }

    /// Validate M^T G + G M = 0 within structural tolerance and extract
    /// (l, g). The reported entry of the worst violation is 1-based.
    pub fn from_matrix(m: &Matrix4<f64>, tol: &ToleranceConfig) -> Result<Self, Error> {
        let r = m.transpose() * metric() + metric() * m;
        let scale = 1f64.max(m.norm());
        let mut worst = (0usize, 0usize, 0.0f64);
        for i in 0..4 {
            for j in 0..4 {
                if r[(i, j)].abs() > worst.2 {
                    worst = (i, j, r[(i, j)].abs());
                }
            }
        }
        if worst.2 > tol.structural * scale {
            return Err(Error::NotSkewAdjoint {
                row: worst.0 + 1,
                col: worst.1 + 1,
                residual: worst.2,
            });
        }
        Ok(Self::project_matrix(m))
    }

    /// Nearest algebra element: skew part of the spatial block, averaged
    /// boost column/row. No validation.
    pub(crate) fn project_matrix(a: &Matrix4<f64>) -> Self {
        let l = Vector3::new(
            0.5 * (a[(2, 1)] - a[(1, 2)]),
            0.5 * (a[(0, 2)] - a[(2, 0)]),
            0.5 * (a[(1, 0)] - a[(0, 1)]),
        );
        let g = Vector3::new(
            0.5 * (a[(0, 3)] + a[(3, 0)]),
            0.5 * (a[(1, 3)] + a[(3, 1)]),
            0.5 * (a[(2, 3)] + a[(3, 2)]),
        );
        Self { l, g }
    }

    /// Frobenius norm of the matrix realization: sqrt(2|l|^2 + 2|g|^2).
    pub fn norm(&self) -> f64 {
        (2.0 * self.l.norm_squared() + 2.0 * self.g.norm_squared()).sqrt()
    }
}

impl std::ops::Add for LorentzAlgebraElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.l + rhs.l, self.g + rhs.g)
    }
}

impl std::ops::Sub for LorentzAlgebraElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.l - rhs.l, self.g - rhs.g)
    }
}

impl std::ops::Neg for LorentzAlgebraElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.l, -self.g)
    }
}

impl std::ops::Mul<f64> for LorentzAlgebraElement {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.l * rhs, self.g * rhs)
    }
}

/// Element of the full Lorentz group O(3,1). Construction validates
/// S^T G S = G; the determinant sign and the orthochronous flag (sign of the
/// t-t entry) are cached because they label the four connected components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix {
    mat: Matrix4<f64>,
    det_sign: f64,
    orthochronous: bool,
}

impl LorentzMatrix {
    /// Validate and wrap. Rejects matrices violating S^T G S = G beyond
    /// structural tolerance (scaled by max(1, ||S||^2)); there is no
    /// re-orthogonalization. The reported entry is 1-based.
    pub fn new(mat: Matrix4<f64>, tol: &ToleranceConfig) -> Result<Self, Error> {
        let r = mat.transpose() * metric() * mat - metric();
        let scale = 1f64.max(mat.norm_squared());
        let mut worst = (0usize, 0usize, 0.0f64);
        for i in 0..4 {
            for j in 0..4 {
                if r[(i, j)].abs() > worst.2 {
                    worst = (i, j, r[(i, j)].abs());
                }
            }
        }
        if worst.2 > tol.structural * scale {
            return Err(Error::NotLorentz {
                row: worst.0 + 1,
                col: worst.1 + 1,
                residual: worst.2,
            });
        }
        Ok(Self::trusted(mat))
    }

    /// Wrap a matrix already known to satisfy the constraint (products,
    /// inverses, exact involutions).
    pub(crate) fn trusted(mat: Matrix4<f64>) -> Self {
        Self {
            mat,
            det_sign: mat.determinant().signum(),
            orthochronous: mat[(3, 3)] > 0.0,
        }
    }

    pub fn identity() -> Self {
        Self::trusted(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.mat
    }

    /// Cached sign of det S, -1 or 1.
    pub fn det_sign(&self) -> f64 {
        self.det_sign
    }

    /// Cached flag: true when S preserves the direction of time.
    pub fn is_orthochronous(&self) -> bool {
        self.orthochronous
    }

    /// Exact inverse G S^T G, valid because S^T G S = G.
    pub fn inverse(&self) -> Self {
        Self {
            mat: metric() * self.mat.transpose() * metric(),
            det_sign: self.det_sign,
            orthochronous: self.orthochronous,
        }
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector(self.mat * v.0)
    }

    /// Largest entry of |S^T G S - G|.
    pub fn constraint_residual(&self) -> f64 {
        let r = self.mat.transpose() * metric() * self.mat - metric();
        r.iter().fold(0.0f64, |acc, c| acc.max(c.abs()))
    }
}

impl std::ops::Mul for LorentzMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // det and time orientation are multiplicative on O(3,1)
        Self {
            mat: self.mat * rhs.mat,
            det_sign: self.det_sign * rhs.det_sign,
            orthochronous: self.orthochronous == rhs.orthochronous,
        }
    }
}

/// Which of the three nontrivial coset representatives of the component
/// group of O(3,1) to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionKind {
    /// Space inversion (r, t) -> (-r, t).
    Space,
    /// Time reversal (r, t) -> (r, -t).
    Time,
    /// Their product, -identity.
    SpaceTime,
}

/// The group element (I_s, 0), (I_t, 0), or (I_s I_t, 0).
pub fn involution(kind: InvolutionKind) -> PoincareElement {
    let d = match kind {
        InvolutionKind::Space => [-1.0, -1.0, -1.0, 1.0],
        InvolutionKind::Time => [1.0, 1.0, 1.0, -1.0],
        InvolutionKind::SpaceTime => [-1.0, -1.0, -1.0, -1.0],
    };
    let mat = Matrix4::from_diagonal(&nalgebra::Vector4::new(d[0], d[1], d[2], d[3]));
    PoincareElement::from_lorentz(LorentzMatrix::trusted(mat))
}

/// Element (S, C) of the full Poincare group, realized as the 5x5 matrix
/// [[S, C], [0, 1]].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PoincareElement {
    pub s: LorentzMatrix,
    pub c: FourVector,
}

impl PoincareElement {
    pub fn new(s: LorentzMatrix, c: FourVector) -> Self {
        Self { s, c }
    }

    pub fn identity() -> Self {
        Self::new(LorentzMatrix::identity(), FourVector::zero())
    }

    pub fn from_lorentz(s: LorentzMatrix) -> Self {
        Self::new(s, FourVector::zero())
    }

    pub fn from_translation(c: FourVector) -> Self {
        Self::new(LorentzMatrix::identity(), c)
    }

    /// (S1, C1)(S2, C2) = (S1 S2, S1 C2 + C1).
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.s * other.s, self.s.apply(&other.c) + self.c)
    }

    /// (S, C)^-1 = (S^-1, -S^-1 C).
    pub fn inverse(&self) -> Self {
        let si = self.s.inverse();
        let c = -si.apply(&self.c);
        Self::new(si, c)
    }

    /// The 5x5 realization [[S, C], [0, 1]].
    pub fn realization(&self) -> Matrix5<f64> {
        let mut m = Matrix5::identity();
        m.fixed_view_mut::<4, 4>(0, 0).copy_from(self.s.matrix());
        m.fixed_view_mut::<4, 1>(0, 4).copy_from(&self.c.0);
        m
    }
}

impl std::ops::Mul for PoincareElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

/// Free-function form of [`PoincareElement::compose`].
pub fn group_multiply(g: &PoincareElement, h: &PoincareElement) -> PoincareElement {
    g.compose(h)
}

/// Free-function form of [`PoincareElement::inverse`].
pub fn group_inverse(g: &PoincareElement) -> PoincareElement {
    g.inverse()
}

/// Point (M, P) of the dual of the Poincare algebra. The same type serves as
/// an algebra element (Sigma, Gamma) under the pairing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoadjointPoint {
    pub m: LorentzAlgebraElement,
    pub p: FourVector,
}

impl CoadjointPoint {
    pub fn new(m: LorentzAlgebraElement, p: FourVector) -> Self {
        Self { m, p }
    }

    pub fn zero() -> Self {
        Self::new(LorentzAlgebraElement::zero(), FourVector::zero())
    }

    /// sqrt(||M||_F^2 + |P|^2), the size used for relative tolerances.
    pub fn norm(&self) -> f64 {
        (self.m.norm().powi(2) + self.p.euclidean_norm().powi(2)).sqrt()
    }

    /// max(1, ||(M, P)||).
    pub fn scale(&self) -> f64 {
        1f64.max(self.norm())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        ((self.m - other.m).norm().powi(2) + (self.p - other.p).euclidean_norm().powi(2)).sqrt()
    }
}

impl std::ops::Add for CoadjointPoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.m + rhs.m, self.p + rhs.p)
    }
}

impl std::ops::Sub for CoadjointPoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.m - rhs.m, self.p - rhs.p)
    }
}

/// The pairing <(M, P) | (Sigma, Gamma)> = -1/2 tr(M Sigma) - gamma(P, Gamma),
/// evaluated through the matrix realizations.
pub fn pair(nu: &CoadjointPoint, xi: &CoadjointPoint) -> f64 {
    let t = (nu.m.matrix() * xi.m.matrix()).trace();
    -0.5 * t - gamma(&nu.p, &xi.p)
}

/// The rank-two algebra element L_{C,V}: Gamma -> gamma(V, Gamma) C
/// - gamma(C, Gamma) V, in (l, g) form: l = c x v, g = v_t c - c_t v.
pub fn l_operator(c: &FourVector, v: &FourVector) -> LorentzAlgebraElement {
    let (cs, ct) = (c.spatial(), c.t());
    let (vs, vt) = (v.spatial(), v.t());
    LorentzAlgebraElement::new(cs.cross(&vs), cs * vt - vs * ct)
}

/// Coadjoint action of (S, C) on (M, P): (S M S^-1 + L_{C, SP}, SP).
pub fn coadjoint_act(g: &PoincareElement, nu: &CoadjointPoint) -> CoadjointPoint {
    let sp = g.s.apply(&nu.p);
    let conj = g.s.matrix() * nu.m.matrix() * g.s.inverse().matrix();
    let m = LorentzAlgebraElement::project_matrix(&conj) + l_operator(&g.c, &sp);
    CoadjointPoint::new(m, sp)
}

/// Polarization vector W = (p x g + E l, <p, l>) for (M, P) = ((l, g), (p, E)).
pub fn polarization(nu: &CoadjointPoint) -> FourVector {
    let (l, g) = (nu.m.l, nu.m.g);
    let (p, e) = (nu.p.spatial(), nu.p.t());
    FourVector::from_parts(p.cross(&g) + l * e, p.dot(&l))
}

/// The two Casimir invariants (gamma(P, P), gamma(W, W)).
pub fn casimirs(nu: &CoadjointPoint) -> (f64, f64) {
    let w = polarization(nu);
    (gamma(&nu.p, &nu.p), gamma(&w, &w))
}
