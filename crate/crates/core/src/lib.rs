//! Coadjoint orbit machinery for the full Poincare group on Minkowski R^4.
//!
//! Conventions, fixed across the crate:
//! * four-vector components are ordered (x, y, z, t), with the metric
//!   G = diag(-1, -1, -1, 1);
//! * Lorentz algebra elements are stored as the pair (l, g) of rotation and
//!   boost parameters, realized as the matrix [[hat(l), g], [g^T, 0]];
//! * group elements (S, C) act on points first by S, then translate by C,
//!   and act on the coadjoint side from the left;
//! * the full group is covered: space and time reflections are ordinary
//!   elements, tracked through determinant and orthochronous labels.
//!
//! The main entry points are [`classify`] and [`normal_form`], which sort a
//! point (M, P) into the three-case orbit catalog (massive spinning, massive
//! spinless, massless helicity), extract the invariants mu and beta, and
//! produce a canonical representative together with a verified group element
//! reaching it. [`sample_orbit`] generates deterministic test points on a
//! chosen orbit component.
//!
//! ```
//! use poincare_orbits::{
//!     classify, normal_form, CoadjointPoint, FourVector, LorentzAlgebraElement,
//!     OrbitClass, ToleranceConfig,
//! };
//!
//! let tol = ToleranceConfig::default();
//! let m = LorentzAlgebraElement::new([0.0, 0.0, 3.0].into(), [0.0; 3].into());
//! let nu = CoadjointPoint::new(m, FourVector::new(0.0, 0.0, 0.0, 2.0));
//!
//! assert_eq!(classify(&nu, &tol), OrbitClass::MassiveSpinning { mu: 2.0, beta: 3.0 });
//!
//! let nf = normal_form(&nu, &tol).unwrap();
//! assert!(nf.residual < 1e-7);
//! ```

mod algebra;
mod classifier;
mod error;
mod minkowski;
mod sample;
mod tol;

/// The linear algebra backend, re-exported so downstream crates can name the
/// vector and matrix types appearing in this crate's interfaces.
pub use nalgebra;

pub use algebra::{
    casimirs, coadjoint_act, group_inverse, group_multiply, hat, involution, l_operator, pair,
    polarization, CoadjointPoint, InvolutionKind, LorentzAlgebraElement, LorentzMatrix,
    PoincareElement,
};
pub use classifier::{
    classify, classify_full, component_labels, cvk_label, normal_form, reduce_lightlike,
    representative, rest_translation, Classification, ComponentLabel, NormalFormResult, OrbitClass,
    OutOfCatalogReason, ReducedLightlikeForm, Sign,
};
pub use error::Error;
pub use minkowski::{
    causal_type, gamma, lightlike_frame, metric, timelike_frame, CausalType, FourVector,
    LightlikeFrame, TimelikeFrame,
};
pub use sample::{lorentz_exp, random_group_element, sample_orbit, verify_witness, SamplerConfig};
pub use tol::ToleranceConfig;
