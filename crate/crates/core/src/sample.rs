//! Deterministic sampling of group elements and orbit points, plus the
//! algebra exponential used to generate identity-component Lorentz matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nalgebra::{Matrix4, Vector3};

use crate::algebra::{
    coadjoint_act, involution, CoadjointPoint, InvolutionKind, LorentzAlgebraElement,
    LorentzMatrix, PoincareElement,
};
use crate::classifier::{representative, ComponentLabel, NormalFormResult, OrbitClass, Sign};
use crate::error::Error;
use crate::minkowski::FourVector;

/// Configuration for the deterministic samplers. `seed` fixes the stream
/// completely; `max_rapidity` bounds the Euclidean norms of the algebra
/// parameters l and g, `max_translation` bounds each translation component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub max_rapidity: f64,
    pub max_translation: f64,
    pub include_involutions: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_rapidity: 2.0,
            max_translation: 10.0,
            include_involutions: false,
        }
    }
}

/// Exponential of a Lorentz algebra element, by scaling and squaring with a
/// fixed-order Taylor kernel. The result is exactly in the identity
/// component, so its determinant and orthochronous labels are set without
/// numerical detection.
pub fn lorentz_exp(a: &LorentzAlgebraElement) -> LorentzMatrix {
    let m = a.matrix();
    let norm = m.norm();
    let k = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m / 2f64.powi(k as i32);
    let mut sum = Matrix4::identity();
    let mut term = Matrix4::identity();
    for j in 1..=20 {
        term = (term * scaled) / j as f64;
        sum += term;
    }
    for _ in 0..k {
        sum = sum * sum;
    }
    LorentzMatrix::trusted(sum)
}

fn sym_draw(rng: &mut ChaCha8Rng, bound: f64) -> f64 {
    // always draw, even for bound 0, so streams stay aligned across configs
    (2.0 * rng.gen::<f64>() - 1.0) * bound
}

fn clamped_vector(rng: &mut ChaCha8Rng, bound: f64) -> Vector3<f64> {
    let v = Vector3::new(
        sym_draw(rng, bound),
        sym_draw(rng, bound),
        sym_draw(rng, bound),
    );
    let n = v.norm();
    if n > bound && n > 0.0 {
        v * (bound / n)
    } else {
        v
    }
}

fn draw_element(
    rng: &mut ChaCha8Rng,
    cfg: &SamplerConfig,
    allow_involutions: bool,
) -> PoincareElement {
    let l = clamped_vector(rng, cfg.max_rapidity);
    let g = clamped_vector(rng, cfg.max_rapidity);
    let s = lorentz_exp(&LorentzAlgebraElement::new(l, g));
    let c = FourVector::new(
        sym_draw(rng, cfg.max_translation),
        sym_draw(rng, cfg.max_translation),
        sym_draw(rng, cfg.max_translation),
        sym_draw(rng, cfg.max_translation),
    );
    let base = PoincareElement::new(s, c);
    if allow_involutions && cfg.include_involutions {
        match rng.gen_range(0..4) {
            1 => involution(InvolutionKind::Space).compose(&base),
            2 => involution(InvolutionKind::Time).compose(&base),
            3 => involution(InvolutionKind::SpaceTime).compose(&base),
            _ => base,
        }
    } else {
        base
    }
}

/// One deterministic group element for the given configuration. With
/// involutions enabled, one of {1, I_s, I_t, I_s I_t} is applied on the left
/// with equal probability, so all four connected components are reachable.
pub fn random_group_element(cfg: &SamplerConfig) -> PoincareElement {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(0);
    draw_element(&mut rng, cfg, true)
}

/// `count` points on the orbit component selected by `labels`, produced by
/// acting on the (involution-adjusted) representative with elements of the
/// identity component. Point i uses its own substream, so extending `count`
/// keeps earlier points unchanged.
///
/// The energy and helicity signs of `labels` pick the component; the spin
/// sign is determined by the energy sign and is not read.
pub fn sample_orbit(
    cls: &OrbitClass,
    labels: &ComponentLabel,
    cfg: &SamplerConfig,
    count: usize,
) -> Result<Vec<CoadjointPoint>, Error> {
    let mut rep = representative(cls)?;
    if labels.helicity_sign == Some(Sign::Minus) {
        rep = coadjoint_act(&involution(InvolutionKind::Space), &rep);
    }
    if labels.energy_sign == Sign::Minus {
        rep = coadjoint_act(&involution(InvolutionKind::Time), &rep);
    }
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(1 + i as u64);
        let g = draw_element(&mut rng, cfg, false);
        out.push(coadjoint_act(&g, &rep));
    }
    Ok(out)
}

/// Independent recheck of a normal-form result: act with the witness on the
/// input again and measure the distance to the claimed representative,
/// relative to the input scale.
pub fn verify_witness(nu: &CoadjointPoint, result: &NormalFormResult) -> f64 {
    coadjoint_act(&result.witness, nu).distance(&result.representative) / nu.scale()
}
