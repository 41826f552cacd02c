//! Orbit classification for the full Poincare group: sorts a point (M, P)
//! into the three-case catalog, extracts the invariants mu and beta, and
//! produces a canonical representative together with a verified group element
//! reaching it.

use nalgebra::{Matrix2, Matrix3, Matrix4, Vector2, Vector3, Vector4};

use crate::algebra::{
    coadjoint_act, polarization, CoadjointPoint, LorentzAlgebraElement, LorentzMatrix,
    PoincareElement,
};
use crate::error::Error;
use crate::minkowski::{
    causal_type, gamma, lightlike_frame, metric, timelike_frame, CausalType, FourVector,
    LightlikeFrame, TimelikeFrame,
};
use crate::tol::ToleranceConfig;

/// Catalog position of an orbit. `mu` is the mass modulus, `beta` the spin
/// (or helicity) modulus; both are strictly positive when present.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OrbitClass {
    MassiveSpinning { mu: f64, beta: f64 },
    MassiveSpinless { mu: f64 },
    MasslessHelicity { beta: f64 },
    OutOfCatalog { reason: OutOfCatalogReason },
}

impl OrbitClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::MassiveSpinning { .. } => "massive-spinning",
            Self::MassiveSpinless { .. } => "massive-spinless",
            Self::MasslessHelicity { .. } => "massless-helicity",
            Self::OutOfCatalog { .. } => "out-of-catalog",
        }
    }

    pub fn mu(&self) -> Option<f64> {
        match self {
            Self::MassiveSpinning { mu, .. } | Self::MassiveSpinless { mu } => Some(*mu),
            _ => None,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match self {
            Self::MassiveSpinning { beta, .. } | Self::MasslessHelicity { beta } => Some(*beta),
            _ => None,
        }
    }
}

/// Why a point falls outside the three-case catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutOfCatalogReason {
    ZeroMomentum,
    SpacelikeMomentum,
    MasslessSpinless,
    ContinuousSpin,
}

impl OutOfCatalogReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::ZeroMomentum => "zero-momentum",
            Self::SpacelikeMomentum => "spacelike-momentum",
            Self::MasslessSpinless => "massless-spinless",
            Self::ContinuousSpin => "continuous-spin",
        }
    }
}

impl std::fmt::Display for OutOfCatalogReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(v: f64) -> Self {
        if v >= 0.0 {
            Self::Plus
        } else {
            Self::Minus
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Plus => "+",
            Self::Minus => "-",
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Connected-component label of a catalog orbit. The energy sign is always
/// defined; the spin sign (massive spinning) equals it by convention, and the
/// helicity sign exists only for massless orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentLabel {
    pub energy_sign: Sign,
    pub spin_sign: Option<Sign>,
    pub helicity_sign: Option<Sign>,
}

/// Classification together with a flag for decisions that fell within a
/// factor of ten of a tolerance threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification {
    pub class: OrbitClass,
    pub marginal: bool,
}

/// M expressed in a lightlike frame after the reducing translation, in the
/// bordered block pattern
/// [[a, x^T, 0], [y, Y', x], [0, y^T, -a]] (with a and y annihilated).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedLightlikeForm {
    pub a: f64,
    pub y: Vector2<f64>,
    pub x: Vector2<f64>,
    pub yprime: Matrix2<f64>,
    pub frame: LightlikeFrame,
}

impl ReducedLightlikeForm {
    /// Frame-coordinate matrix reassembled from the stored blocks.
    pub fn frame_matrix(&self) -> Matrix4<f64> {
        Matrix4::new(
            self.a,
            self.x.x,
            self.x.y,
            0.0, //
            self.y.x,
            self.yprime[(0, 0)],
            self.yprime[(0, 1)],
            self.x.x, //
            self.y.y,
            self.yprime[(1, 0)],
            self.yprime[(1, 1)],
            self.x.y, //
            0.0,
            self.y.x,
            self.y.y,
            -self.a,
        )
    }

    /// Coefficient c of the skew part of Y' = [[0, -c], [c, 0]].
    pub fn rotation_coefficient(&self) -> f64 {
        0.5 * (self.yprime[(1, 0)] - self.yprime[(0, 1)])
    }

    /// beta, from the characteristic polynomial lambda^2 + beta^2 of Y'.
    pub fn beta(&self) -> f64 {
        self.rotation_coefficient().abs()
    }
}

/// Result of the normal-form pipeline: the catalog representative and a group
/// element `witness` with act(witness, input) = representative up to
/// `residual` (relative to the input scale).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalFormResult {
    pub class: OrbitClass,
    pub labels: ComponentLabel,
    pub representative: CoadjointPoint,
    pub witness: PoincareElement,
    pub residual: f64,
}

/// Canonical representative of a catalog class: the rest-frame spinning or
/// spinless point for massive classes, the standard helicity point for the
/// massless class. Energy, spin, and helicity signs are all positive.
pub fn representative(cls: &OrbitClass) -> Result<CoadjointPoint, Error> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match *cls {
        OrbitClass::MassiveSpinning { mu, beta } => Ok(CoadjointPoint::new(
            LorentzAlgebraElement::new(Vector3::new(0.0, 0.0, beta), Vector3::zeros()),
            FourVector::new(0.0, 0.0, 0.0, mu),
        )),
        OrbitClass::MassiveSpinless { mu } => Ok(CoadjointPoint::new(
            LorentzAlgebraElement::zero(),
            FourVector::new(0.0, 0.0, 0.0, mu),
        )),
        OrbitClass::MasslessHelicity { beta } => Ok(CoadjointPoint::new(
            LorentzAlgebraElement::new(Vector3::new(beta, 0.0, 0.0), Vector3::zeros()),
            FourVector::new(s, 0.0, 0.0, s),
        )),
        OrbitClass::OutOfCatalog { reason } => Err(Error::OutOfCatalog { reason }),
    }
}

/// Translation making the image of M gamma-orthogonal to a timelike P:
/// C = -(M P) / gamma(P, P). Returns the translation element and the acted
/// point, whose M part satisfies M' P = 0.
pub fn rest_translation(
    nu: &CoadjointPoint,
    tol: &ToleranceConfig,
) -> Result<(PoincareElement, CoadjointPoint), Error> {
    let q = gamma(&nu.p, &nu.p);
    if !matches!(causal_type(&nu.p, tol), CausalType::Timelike { .. }) {
        return Err(Error::NotTimelike { gamma: q });
    }
    let mp = FourVector(nu.m.matrix() * nu.p.0);
    let t = PoincareElement::from_translation(mp / -q);
    Ok((t, coadjoint_act(&t, nu)))
}

/// M in lightlike-frame coordinates, via the dual basis.
fn frame_matrix_of(m: &LorentzAlgebraElement, frame: &LightlikeFrame) -> Matrix4<f64> {
    let mm = m.matrix();
    let cols =
        [frame.f1, frame.f2, frame.f3, frame.f4].map(|f| frame.coords(&FourVector(mm * f.0)));
    Matrix4::from_columns(&cols)
}

/// Block data (a, y, x, Y') of a frame-coordinate matrix, averaging the
/// entries the bordered pattern duplicates.
fn lightlike_blocks(mf: &Matrix4<f64>) -> (f64, Vector2<f64>, Vector2<f64>, Matrix2<f64>) {
    let a = 0.5 * (mf[(0, 0)] - mf[(3, 3)]);
    let y = Vector2::new(
        0.5 * (mf[(1, 0)] + mf[(3, 1)]),
        0.5 * (mf[(2, 0)] + mf[(3, 2)]),
    );
    let x = Vector2::new(
        0.5 * (mf[(1, 3)] + mf[(0, 1)]),
        0.5 * (mf[(2, 3)] + mf[(0, 2)]),
    );
    let yp = Matrix2::new(mf[(1, 1)], mf[(1, 2)], mf[(2, 1)], mf[(2, 2)]);
    (a, y, x, yp)
}

/// Reduce a point with lightlike P: build the adapted frame, read off the
/// bordered block form of M, and translate by (-a, -y, 0) in frame
/// coordinates to annihilate the a and y blocks. x and Y' are untouched.
/// Returns the translation used and the reduced form.
pub fn reduce_lightlike(
    nu: &CoadjointPoint,
    tol: &ToleranceConfig,
) -> Result<(PoincareElement, ReducedLightlikeForm), Error> {
    let frame = lightlike_frame(&nu.p, tol)?;
    let mf = frame_matrix_of(&nu.m, &frame);
    let (a, y, _, _) = lightlike_blocks(&mf);
    let c1 = frame.embed(&Vector4::new(-a, -y.x, -y.y, 0.0));
    let t = PoincareElement::from_translation(c1);
    let reduced = coadjoint_act(&t, nu);
    let mf2 = frame_matrix_of(&reduced.m, &frame);
    let (a2, y2, x2, yp2) = lightlike_blocks(&mf2);
    Ok((
        t,
        ReducedLightlikeForm {
            a: a2,
            y: y2,
            x: x2,
            yprime: yp2,
            frame,
        },
    ))
}

/// True when a decision quantity sits within a factor of ten of a threshold.
fn near_threshold(q: f64, thr: f64) -> bool {
    q > 0.1 * thr && q < 10.0 * thr
}

struct MassiveAnalysis {
    translation: PoincareElement,
    frame: TimelikeFrame,
    /// Skew part of the restriction of the rest-frame M to span{P}^gamma.
    y_skew: Matrix3<f64>,
    omega: Vector3<f64>,
    beta: f64,
    threshold: f64,
}

/// Restriction of M to the spacelike complement, as a 3x3 matrix in the
/// frame's (w1, w2, w3) coordinates.
fn spatial_restriction(m: &LorentzAlgebraElement, frame: &TimelikeFrame) -> Matrix3<f64> {
    let mm = m.matrix();
    let cols = frame
        .spacelike()
        .map(|w| frame.spatial_coords(&FourVector(mm * w.0)));
    Matrix3::from_columns(&cols)
}

fn analyze_massive(nu: &CoadjointPoint, tol: &ToleranceConfig) -> Result<MassiveAnalysis, Error> {
    let (translation, rest) = rest_translation(nu, tol)?;
    let frame = timelike_frame(&rest.p, tol)?;
    let y = spatial_restriction(&rest.m, &frame);
    let y_skew = 0.5 * (y - y.transpose());
    let omega = Vector3::new(y_skew[(2, 1)], y_skew[(0, 2)], y_skew[(1, 0)]);
    let beta = (-0.5 * (y_skew * y_skew).trace()).max(0.0).sqrt();
    let threshold = tol.classify * (1.0 + nu.m.norm());
    Ok(MassiveAnalysis {
        translation,
        frame,
        y_skew,
        omega,
        beta,
        threshold,
    })
}

struct LightlikeAnalysis {
    /// Combined group element applied so far (translation, and the null
    /// rotation when an x-elimination attempt succeeded).
    witness: PoincareElement,
    form: ReducedLightlikeForm,
    class: OrbitClass,
    marginal: bool,
}

/// Null-rotation attempt at clearing a nonzero x block when Y' is invertible,
/// with parameter v = -Y'^{-1} x. The stabilizer generator is nilpotent of
/// order three, so its exponential is I + Z + Z^2/2 exactly. Success is
/// judged only by re-reducing the acted point; on failure the caller falls
/// back to the continuous-spin verdict.
fn attempt_x_elimination(
    nu: &CoadjointPoint,
    t: &PoincareElement,
    form: &ReducedLightlikeForm,
    threshold: f64,
    tol: &ToleranceConfig,
) -> Option<(PoincareElement, ReducedLightlikeForm)> {
    let c = form.rotation_coefficient();
    if c.abs() <= threshold {
        return None;
    }
    let v = -(Matrix2::new(0.0, 1.0 / c, -1.0 / c, 0.0) * form.x);
    let zf = Matrix4::new(
        0.0, 0.0, 0.0, 0.0, //
        v.x, 0.0, 0.0, 0.0, //
        v.y, 0.0, 0.0, 0.0, //
        0.0, v.x, v.y, 0.0,
    );
    let z = form.frame.basis_matrix() * zf * form.frame.dual_matrix();
    let n = Matrix4::identity() + z + 0.5 * (z * z);
    let s = LorentzMatrix::new(n, tol).ok()?;
    let n_then_t = PoincareElement::from_lorentz(s).compose(t);
    let acted = coadjoint_act(&n_then_t, nu);
    // the null rotation fixes P, so re-reduction rebuilds the same frame
    let (t2, form2) = reduce_lightlike(&acted, tol).ok()?;
    if form2.x.norm() <= threshold {
        Some((t2.compose(&n_then_t), form2))
    } else {
        None
    }
}

fn analyze_lightlike(
    nu: &CoadjointPoint,
    tol: &ToleranceConfig,
) -> Result<LightlikeAnalysis, Error> {
    let (t, form) = reduce_lightlike(nu, tol)?;
    let threshold = tol.classify * (1.0 + nu.m.norm());
    let beta = form.beta();
    let xnorm = form.x.norm();
    let marginal = near_threshold(beta, threshold) || near_threshold(xnorm, threshold);
    let (witness, form, class) = if beta > threshold {
        if xnorm <= threshold {
            (t, form, OrbitClass::MasslessHelicity { beta })
        } else if let Some((w, f2)) = attempt_x_elimination(nu, &t, &form, threshold, tol) {
            let b2 = f2.beta();
            (w, f2, OrbitClass::MasslessHelicity { beta: b2 })
        } else {
            (
                t,
                form,
                OrbitClass::OutOfCatalog {
                    reason: OutOfCatalogReason::ContinuousSpin,
                },
            )
        }
    } else if xnorm <= threshold {
        (
            t,
            form,
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::MasslessSpinless,
            },
        )
    } else {
        (
            t,
            form,
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ContinuousSpin,
            },
        )
    };
    Ok(LightlikeAnalysis {
        witness,
        form,
        class,
        marginal,
    })
}

/// Classify a point into the catalog. Total: every input gets a class, with
/// out-of-catalog reasons for zero, spacelike, massless-spinless, and
/// continuous-spin momenta.
pub fn classify(nu: &CoadjointPoint, tol: &ToleranceConfig) -> OrbitClass {
    classify_full(nu, tol).class
}

/// `classify` plus a marginality flag for near-threshold decisions.
pub fn classify_full(nu: &CoadjointPoint, tol: &ToleranceConfig) -> Classification {
    let scale = 1f64.max(nu.p.euclidean_norm());
    let causal_margin = near_threshold(nu.p.euclidean_norm(), tol.classify * scale)
        || near_threshold(gamma(&nu.p, &nu.p).abs(), tol.classify * scale * scale);
    match causal_type(&nu.p, tol) {
        CausalType::Zero => Classification {
            class: OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ZeroMomentum,
            },
            marginal: causal_margin,
        },
        CausalType::Spacelike { .. } => Classification {
            class: OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::SpacelikeMomentum,
            },
            marginal: causal_margin,
        },
        CausalType::Timelike { mu } => {
            let an = analyze_massive(nu, tol).expect("causal type already checked timelike");
            let class = if an.beta > an.threshold {
                OrbitClass::MassiveSpinning { mu, beta: an.beta }
            } else {
                OrbitClass::MassiveSpinless { mu }
            };
            Classification {
                class,
                marginal: causal_margin || near_threshold(an.beta, an.threshold),
            }
        }
        CausalType::Lightlike => {
            let an = analyze_lightlike(nu, tol).expect("causal type already checked lightlike");
            Classification {
                class: an.class,
                marginal: causal_margin || an.marginal,
            }
        }
    }
}

/// Unit 3-vector orthogonal to p0: the standard basis vector with the largest
/// rejection, normalized. Deterministic; first index wins ties.
fn orthogonal_unit(p0: &Vector3<f64>) -> Vector3<f64> {
    let mut best = Vector3::zeros();
    let mut best_norm = -1.0;
    for i in 0..3 {
        let mut e = Vector3::zeros();
        e[i] = 1.0;
        let r = e - p0 * p0.dot(&e);
        if r.norm() > best_norm {
            best_norm = r.norm();
            best = r;
        }
    }
    best / best_norm
}

/// Inverse basis-change Lorentz matrix for columns whose Gram matrix is G:
/// B^-1 = G B^T G.
fn inverse_basis(
    b1: &FourVector,
    b2: &FourVector,
    b3: &FourVector,
    b4: &FourVector,
    tol: &ToleranceConfig,
) -> Result<LorentzMatrix, Error> {
    let b = Matrix4::from_columns(&[b1.0, b2.0, b3.0, b4.0]);
    LorentzMatrix::new(metric() * b.transpose() * metric(), tol)
}

/// Bring a catalog point to its canonical representative. The witness is
/// assembled in application order (basis change after translation) and the
/// returned residual is measured by re-acting on the input, never assumed.
pub fn normal_form(nu: &CoadjointPoint, tol: &ToleranceConfig) -> Result<NormalFormResult, Error> {
    let class = classify(nu, tol);
    let labels = component_labels(nu, &class)?;
    let (witness, rep) = match class {
        OrbitClass::OutOfCatalog { reason } => return Err(Error::OutOfCatalog { reason }),
        OrbitClass::MassiveSpinning { .. } => {
            let an = analyze_massive(nu, tol)?;
            let p0 = an.omega / an.omega.norm();
            let p1 = orthogonal_unit(&p0);
            let p2 = (an.y_skew * p1) / an.beta;
            let s = inverse_basis(
                &an.frame.embed_spatial(&p1),
                &an.frame.embed_spatial(&p2),
                &an.frame.embed_spatial(&p0),
                &an.frame.p_hat,
                tol,
            )?;
            (
                PoincareElement::from_lorentz(s).compose(&an.translation),
                representative(&class)?,
            )
        }
        OrbitClass::MassiveSpinless { .. } => {
            let an = analyze_massive(nu, tol)?;
            let s = inverse_basis(
                &an.frame.w1,
                &an.frame.w2,
                &an.frame.w3,
                &an.frame.p_hat,
                tol,
            )?;
            (
                PoincareElement::from_lorentz(s).compose(&an.translation),
                representative(&class)?,
            )
        }
        OrbitClass::MasslessHelicity { .. } => {
            let an = analyze_lightlike(nu, tol)?;
            let fr = &an.form.frame;
            let root = std::f64::consts::FRAC_1_SQRT_2;
            // basis {(f4 - f1)/sqrt2, f2, beta^-1 Y' f2, (f1 + f4)/sqrt2};
            // the first sign is fixed so P lands on (e1 + e4)/sqrt2
            let b1 = (fr.f4 - fr.f1) * root;
            let b2 = fr.f2;
            let b3 = fr.f3 * an.form.rotation_coefficient().signum();
            let b4 = (fr.f1 + fr.f4) * root;
            let s = inverse_basis(&b1, &b2, &b3, &b4, tol)?;
            (
                PoincareElement::from_lorentz(s).compose(&an.witness),
                representative(&an.class)?,
            )
        }
    };
    let acted = coadjoint_act(&witness, nu);
    let residual = acted.distance(&rep) / nu.scale();
    Ok(NormalFormResult {
        class,
        labels,
        representative: rep,
        witness,
        residual,
    })
}

/// Connected-component labels of the full-group orbit through nu. The energy
/// sign is the sign of E; the spin sign of a massive spinning orbit follows
/// it; the helicity sign is the sign of the time component of W.
pub fn component_labels(nu: &CoadjointPoint, cls: &OrbitClass) -> Result<ComponentLabel, Error> {
    let energy_sign = Sign::of(nu.p.t());
    match cls {
        OrbitClass::OutOfCatalog { reason } => Err(Error::OutOfCatalog { reason: *reason }),
        OrbitClass::MassiveSpinning { .. } => Ok(ComponentLabel {
            energy_sign,
            spin_sign: Some(energy_sign),
            helicity_sign: None,
        }),
        OrbitClass::MassiveSpinless { .. } => Ok(ComponentLabel {
            energy_sign,
            spin_sign: None,
            helicity_sign: None,
        }),
        OrbitClass::MasslessHelicity { .. } => Ok(ComponentLabel {
            energy_sign,
            spin_sign: None,
            helicity_sign: Some(Sign::of(polarization(nu).t())),
        }),
    }
}

/// Decomposition label string for a catalog class, with mu and beta
/// interpolated; None for out-of-catalog points.
pub fn cvk_label(cls: &OrbitClass) -> Option<String> {
    match *cls {
        OrbitClass::MassiveSpinning { mu, beta } => {
            Some(format!("∇₃⁺(0),{mu} + Δ₀⁻(i·{beta}, IP) + Δ₀⁻(0)"))
        }
        OrbitClass::MassiveSpinless { mu } => {
            Some(format!("∇₃⁺(0),{mu} + Δ₀⁻(0) + Δ₀⁻(0) + Δ₀⁻(0)"))
        }
        OrbitClass::MasslessHelicity { beta } => Some(format!("∇₄(0,0) + Δ₀⁻(i·{beta}, IP)")),
        OrbitClass::OutOfCatalog { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{casimirs, involution, InvolutionKind};
    use approx::assert_relative_eq;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn point(l: [f64; 3], g: [f64; 3], p: [f64; 4]) -> CoadjointPoint {
        CoadjointPoint::new(
            LorentzAlgebraElement::new(Vector3::from(l), Vector3::from(g)),
            FourVector::from(p),
        )
    }

    fn spinning_rep(mu: f64, beta: f64) -> CoadjointPoint {
        representative(&OrbitClass::MassiveSpinning { mu, beta }).unwrap()
    }

    fn helicity_rep(beta: f64) -> CoadjointPoint {
        representative(&OrbitClass::MasslessHelicity { beta }).unwrap()
    }

    fn boost_x(phi: f64) -> LorentzMatrix {
        let (c, s) = (phi.cosh(), phi.sinh());
        let m = Matrix4::new(
            c, 0.0, 0.0, s, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            s, 0.0, 0.0, c,
        );
        LorentzMatrix::new(m, &tol()).unwrap()
    }

    #[test]
    fn rest_translation_clears_momentum_image() {
        let nu = point([0.0; 3], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]);
        let (t, rest) = rest_translation(&nu, &tol()).unwrap();
        assert_relative_eq!(t.c.0, Vector4::new(-1.0, 0.0, 0.0, 0.0), epsilon = 1e-14);
        assert!(rest.m.norm() < 1e-14);
        assert_relative_eq!(rest.p.0, Vector4::new(0.0, 0.0, 0.0, 1.0), epsilon = 1e-14);
    }

    #[test]
    fn rest_translation_requires_timelike() {
        let nu = point([1.0, 0.0, 0.0], [0.0; 3], [1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            rest_translation(&nu, &tol()),
            Err(Error::NotTimelike { .. })
        ));
    }

    #[test]
    fn rest_translation_fixes_representatives() {
        let nu = spinning_rep(2.0, 3.0);
        let (t, rest) = rest_translation(&nu, &tol()).unwrap();
        assert!(t.c.euclidean_norm() < 1e-14);
        assert!(rest.distance(&nu) < 1e-14);
    }

    #[test]
    fn reduce_helicity_rep_is_already_reduced() {
        let (_, form) = reduce_lightlike(&helicity_rep(1.0), &tol()).unwrap();
        assert!(form.a.abs() < 1e-12);
        assert!(form.y.norm() < 1e-12);
        assert!(form.x.norm() < 1e-12);
        assert_relative_eq!(form.rotation_coefficient(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn reduce_annihilates_a_and_y_blocks() {
        let nu = point([0.5, -1.0, 2.0], [0.3, 0.7, -0.2], [0.0, 0.0, 1.0, 1.0]);
        let (t, form) = reduce_lightlike(&nu, &tol()).unwrap();
        assert!(form.a.abs() < 1e-12);
        assert!(form.y.norm() < 1e-12);
        // the reduced form describes the acted point exactly
        let reduced = coadjoint_act(&t, &nu);
        let back = form.frame.basis_matrix() * form.frame_matrix() * form.frame.dual_matrix();
        assert!((back - reduced.m.matrix()).norm() < 1e-12);
    }

    #[test]
    fn reduction_translation_preserves_x_and_yprime() {
        let nu = point([0.5, -1.0, 2.0], [0.3, 0.7, -0.2], [0.0, 0.0, 1.0, 1.0]);
        let frame = lightlike_frame(&nu.p, &tol()).unwrap();
        let before = frame_matrix_of(&nu.m, &frame);
        let (_, ybefore, xbefore, ypbefore) = lightlike_blocks(&before);
        let (_, form) = reduce_lightlike(&nu, &tol()).unwrap();
        assert!(ybefore.norm() > 0.1, "test point should start unreduced");
        assert!((form.x - xbefore).norm() < 1e-12);
        assert!((form.yprime - ypbefore).norm() < 1e-12);
    }

    #[test]
    fn classify_examples() {
        let t = tol();
        let spinning = classify(&point([0.0, 0.0, 1.0], [0.0; 3], [0.0, 0.0, 0.0, 2.0]), &t);
        match spinning {
            OrbitClass::MassiveSpinning { mu, beta } => {
                assert_relative_eq!(mu, 2.0, epsilon = 1e-12);
                assert_relative_eq!(beta, 1.0, epsilon = 1e-12);
            }
            other => panic!("expected massive spinning, got {other:?}"),
        }
        let spinless = classify(&point([0.0; 3], [0.0; 3], [0.0, 0.0, 0.0, 3.0]), &t);
        match spinless {
            OrbitClass::MassiveSpinless { mu } => assert_relative_eq!(mu, 3.0, epsilon = 1e-12),
            other => panic!("expected massive spinless, got {other:?}"),
        }
        let helicity = classify(&helicity_rep(1.0), &t);
        match helicity {
            OrbitClass::MasslessHelicity { beta } => {
                assert_relative_eq!(beta, 1.0, epsilon = 1e-12)
            }
            other => panic!("expected massless helicity, got {other:?}"),
        }
        assert_eq!(
            classify(&point([0.0; 3], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0, 0.0]), &t),
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::SpacelikeMomentum
            }
        );
        assert_eq!(
            classify(&point([1.0, 0.0, 0.0], [0.0; 3], [0.0; 4]), &t),
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ZeroMomentum
            }
        );
        assert_eq!(
            classify(&point([0.0; 3], [0.0; 3], [0.0, 0.0, 1.0, 1.0]), &t),
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::MasslessSpinless
            }
        );
    }

    #[test]
    fn classify_continuous_spin_without_rotation_block() {
        // M P lands in the transverse plane and Y' vanishes: x alone survives
        let nu = point([0.0; 3], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 1.0]);
        let (c1, c2) = casimirs(&nu);
        assert_relative_eq!(c1, 0.0, epsilon = 1e-14);
        assert_relative_eq!(c2, -1.0, epsilon = 1e-14);
        assert_eq!(
            classify(&nu, &tol()),
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ContinuousSpin
            }
        );
    }

    #[test]
    fn classify_continuous_spin_with_rotation_block() {
        // both a rotation block and a transverse block: the null-rotation
        // attempt runs and the fallback must still fire, since the second
        // Casimir -|x|^2 is an invariant obstruction
        let nu = point([0.0, 1.0, 1.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 1.0]);
        let (_, form) = reduce_lightlike(&nu, &tol()).unwrap();
        assert!(form.beta() > 0.5);
        assert!(form.x.norm() > 0.5);
        assert_eq!(
            classify(&nu, &tol()),
            OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ContinuousSpin
            }
        );
    }

    #[test]
    fn classify_negative_energy_components() {
        let t = tol();
        let down = classify(&point([0.0, 0.0, 1.0], [0.0; 3], [0.0, 0.0, 0.0, -2.0]), &t);
        match down {
            OrbitClass::MassiveSpinning { mu, beta } => {
                assert_relative_eq!(mu, 2.0, epsilon = 1e-12);
                assert_relative_eq!(beta, 1.0, epsilon = 1e-12);
            }
            other => panic!("expected massive spinning, got {other:?}"),
        }
        // W = P exactly here, so beta is the transverse rotation rate |l| = 1
        let back = classify(
            &point([1.0, 0.0, 0.0], [0.0; 3], [-0.5, 0.0, 0.0, -0.5]),
            &t,
        );
        match back {
            OrbitClass::MasslessHelicity { beta } => {
                assert_relative_eq!(beta, 1.0, epsilon = 1e-12)
            }
            other => panic!("expected massless helicity, got {other:?}"),
        }
    }

    #[test]
    fn marginal_flag_near_spin_threshold() {
        let t = tol();
        let near = point([0.0, 0.0, 3e-8], [0.0; 3], [0.0, 0.0, 0.0, 1.0]);
        let full = classify_full(&near, &t);
        assert!(full.marginal);
        assert!(matches!(full.class, OrbitClass::MassiveSpinning { .. }));
        let clean = classify_full(&spinning_rep(2.0, 3.0), &t);
        assert!(!clean.marginal);
        let spinless = classify_full(&point([0.0; 3], [0.0; 3], [0.0, 0.0, 0.0, 3.0]), &t);
        assert!(!spinless.marginal);
    }

    #[test]
    fn normal_form_fixes_representatives() {
        let t = tol();
        for rep in [
            spinning_rep(2.0, 3.0),
            representative(&OrbitClass::MassiveSpinless { mu: 3.0 }).unwrap(),
            helicity_rep(1.0),
        ] {
            let nf = normal_form(&rep, &t).unwrap();
            assert!(nf.residual < 1e-12);
            assert!(nf.representative.distance(&rep) < 1e-12);
            let real = nf.witness.realization();
            assert!((real - nalgebra::Matrix5::identity()).norm() < 1e-12);
        }
    }

    #[test]
    fn normal_form_recovers_boosted_spinning_point() {
        let t = tol();
        let rep = spinning_rep(2.0, 3.0);
        let g = PoincareElement::new(boost_x(0.8), FourVector::new(1.0, -2.0, 0.5, 4.0));
        let moved = coadjoint_act(&g, &rep);
        let nf = normal_form(&moved, &t).unwrap();
        match nf.class {
            OrbitClass::MassiveSpinning { mu, beta } => {
                assert_relative_eq!(mu, 2.0, epsilon = 1e-9);
                assert_relative_eq!(beta, 3.0, epsilon = 1e-9);
            }
            other => panic!("expected massive spinning, got {other:?}"),
        }
        assert!(nf.residual < 1e-10);
        assert!(nf.representative.distance(&rep) < 1e-12);
    }

    #[test]
    fn normal_form_recovers_boosted_helicity_point() {
        let t = tol();
        let rep = helicity_rep(2.0);
        let g = PoincareElement::new(boost_x(-0.6), FourVector::new(0.0, 3.0, -1.0, 2.0));
        let moved = coadjoint_act(&g, &rep);
        let nf = normal_form(&moved, &t).unwrap();
        match nf.class {
            OrbitClass::MasslessHelicity { beta } => {
                assert_relative_eq!(beta, 2.0, epsilon = 1e-9)
            }
            other => panic!("expected massless helicity, got {other:?}"),
        }
        assert!(nf.residual < 1e-10);
    }

    #[test]
    fn normal_form_rejects_out_of_catalog() {
        let nu = point([0.0; 3], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            normal_form(&nu, &tol()),
            Err(Error::OutOfCatalog {
                reason: OutOfCatalogReason::SpacelikeMomentum
            })
        ));
    }

    #[test]
    fn normal_form_lands_on_positive_component() {
        // time-reflected spinning point: the witness must cross components
        let t = tol();
        let rep = spinning_rep(2.0, 3.0);
        let flipped = coadjoint_act(&involution(InvolutionKind::Time), &rep);
        let nf = normal_form(&flipped, &t).unwrap();
        assert!(nf.residual < 1e-12);
        assert_eq!(nf.labels.energy_sign, Sign::Minus);
        assert!(!nf.witness.s.is_orthochronous());
        // space-reflected helicity point: helicity sign flips, energy does not
        let hrep = helicity_rep(1.0);
        let reflected = coadjoint_act(&involution(InvolutionKind::Space), &hrep);
        let nf = normal_form(&reflected, &t).unwrap();
        assert!(nf.residual < 1e-12);
        assert_eq!(nf.labels.energy_sign, Sign::Plus);
        assert_eq!(nf.labels.helicity_sign, Some(Sign::Minus));
        assert_eq!(nf.witness.s.det_sign(), -1.0);
    }

    #[test]
    fn component_labels_follow_conventions() {
        let t = tol();
        let rep = spinning_rep(2.0, 3.0);
        let cls = classify(&rep, &t);
        let labels = component_labels(&rep, &cls).unwrap();
        assert_eq!(labels.energy_sign, Sign::Plus);
        assert_eq!(labels.spin_sign, Some(Sign::Plus));
        assert_eq!(labels.helicity_sign, None);

        let flipped = coadjoint_act(&involution(InvolutionKind::Time), &rep);
        let labels = component_labels(&flipped, &classify(&flipped, &t)).unwrap();
        assert_eq!(labels.energy_sign, Sign::Minus);
        assert_eq!(labels.spin_sign, Some(Sign::Minus));

        let hrep = helicity_rep(1.0);
        let labels = component_labels(&hrep, &classify(&hrep, &t)).unwrap();
        assert_eq!(labels.helicity_sign, Some(Sign::Plus));
        let reflected = coadjoint_act(&involution(InvolutionKind::Space), &hrep);
        let labels = component_labels(&reflected, &classify(&reflected, &t)).unwrap();
        assert_eq!(labels.energy_sign, Sign::Plus);
        assert_eq!(labels.helicity_sign, Some(Sign::Minus));
    }

    #[test]
    fn representative_invariants_match_catalog() {
        let rep = spinning_rep(2.0, 3.0);
        let (c1, c2) = casimirs(&rep);
        assert_relative_eq!(c1, 4.0, epsilon = 1e-12);
        assert_relative_eq!(c2, -36.0, epsilon = 1e-12);
        assert_relative_eq!(
            polarization(&rep).0,
            Vector4::new(0.0, 0.0, 6.0, 0.0),
            epsilon = 1e-12
        );

        let rep = representative(&OrbitClass::MassiveSpinless { mu: 3.0 }).unwrap();
        let (c1, c2) = casimirs(&rep);
        assert_relative_eq!(c1, 9.0, epsilon = 1e-12);
        assert_relative_eq!(c2, 0.0, epsilon = 1e-12);

        let rep = helicity_rep(1.0);
        let (c1, c2) = casimirs(&rep);
        assert_relative_eq!(c1, 0.0, epsilon = 1e-12);
        assert_relative_eq!(c2, 0.0, epsilon = 1e-12);
        assert_relative_eq!(polarization(&rep).0, rep.p.0, epsilon = 1e-12);
    }

    #[test]
    fn cvk_label_strings() {
        assert_eq!(
            cvk_label(&OrbitClass::MassiveSpinning { mu: 2.0, beta: 3.0 }).unwrap(),
            "∇₃⁺(0),2 + Δ₀⁻(i·3, IP) + Δ₀⁻(0)"
        );
        assert_eq!(
            cvk_label(&OrbitClass::MassiveSpinless { mu: 3.0 }).unwrap(),
            "∇₃⁺(0),3 + Δ₀⁻(0) + Δ₀⁻(0) + Δ₀⁻(0)"
        );
        assert_eq!(
            cvk_label(&OrbitClass::MasslessHelicity { beta: 1.0 }).unwrap(),
            "∇₄(0,0) + Δ₀⁻(i·1, IP)"
        );
        assert_eq!(
            cvk_label(&OrbitClass::MassiveSpinning {
                mu: 2.5,
                beta: 0.125
            })
            .unwrap(),
            "∇₃⁺(0),2.5 + Δ₀⁻(i·0.125, IP) + Δ₀⁻(0)"
        );
        assert_eq!(
            cvk_label(&OrbitClass::OutOfCatalog {
                reason: OutOfCatalogReason::ZeroMomentum
            }),
            None
        );
    }
}
