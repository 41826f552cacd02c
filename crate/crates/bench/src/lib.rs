//! Deterministic fixtures for the benchmark suite. Each point is a catalog
//! representative moved by a fixed pseudo-random group element, so the
//! benched code paths see generic inputs rather than the normal forms
//! themselves.

use poincare_orbits::{
    coadjoint_act, random_group_element, representative, CoadjointPoint, LorentzAlgebraElement,
    OrbitClass, PoincareElement, SamplerConfig,
};

fn mover(seed: u64) -> PoincareElement {
    let cfg = SamplerConfig {
        seed,
        max_rapidity: 2.0,
        max_translation: 10.0,
        include_involutions: false,
    };
    random_group_element(&cfg)
}

fn moved(class: OrbitClass, seed: u64) -> CoadjointPoint {
    let rep = representative(&class).expect("catalog class");
    coadjoint_act(&mover(seed), &rep)
}

/// Generic massive point with spin, the common classification path.
pub fn massive_spinning_point() -> CoadjointPoint {
    moved(OrbitClass::MassiveSpinning { mu: 2.0, beta: 3.0 }, 7)
}

/// Generic massive point without spin.
pub fn massive_spinless_point() -> CoadjointPoint {
    moved(OrbitClass::MassiveSpinless { mu: 1.5 }, 8)
}

/// Generic lightlike point, the most expensive classification path.
pub fn massless_helicity_point() -> CoadjointPoint {
    moved(OrbitClass::MasslessHelicity { beta: 2.0 }, 9)
}

/// Lightlike point outside the catalog: classification runs the full
/// reduction and the elimination attempt before reporting continuous spin.
pub fn continuous_spin_point() -> CoadjointPoint {
    let base = CoadjointPoint::new(
        LorentzAlgebraElement::new([0.0, 1.0, 1.0].into(), [1.0, 0.0, 0.0].into()),
        [0.0, 0.0, 1.0, 1.0].into(),
    );
    coadjoint_act(&mover(10), &base)
}

/// Group element used for action benchmarks.
pub fn generic_element() -> PoincareElement {
    mover(11)
}
