use criterion::{black_box, criterion_group, criterion_main, Criterion};
use poincare_orbits::{
    casimirs, classify, coadjoint_act, lorentz_exp, normal_form, polarization, sample_orbit,
    ComponentLabel, LorentzAlgebraElement, OrbitClass, SamplerConfig, Sign, ToleranceConfig,
};
use poincare_orbits_bench::{
    continuous_spin_point, generic_element, massive_spinning_point, massless_helicity_point,
};

fn bench_action(c: &mut Criterion) {
    let g = generic_element();
    let nu = massive_spinning_point();
    c.bench_function("coadjoint_act", |b| {
        b.iter(|| coadjoint_act(black_box(&g), black_box(&nu)))
    });
}

fn bench_invariants(c: &mut Criterion) {
    let nu = massive_spinning_point();
    c.bench_function("casimirs", |b| b.iter(|| casimirs(black_box(&nu))));
    c.bench_function("polarization", |b| b.iter(|| polarization(black_box(&nu))));
}

fn bench_classify(c: &mut Criterion) {
    let tol = ToleranceConfig::default();
    let cases = [
        ("classify/massive-spinning", massive_spinning_point()),
        ("classify/massless-helicity", massless_helicity_point()),
        ("classify/continuous-spin", continuous_spin_point()),
    ];
    for (name, nu) in cases {
        c.bench_function(name, |b| b.iter(|| classify(black_box(&nu), &tol)));
    }
}

fn bench_normal_form(c: &mut Criterion) {
    let tol = ToleranceConfig::default();
    let cases = [
        ("normal_form/massive-spinning", massive_spinning_point()),
        ("normal_form/massless-helicity", massless_helicity_point()),
    ];
    for (name, nu) in cases {
        c.bench_function(name, |b| {
            b.iter(|| normal_form(black_box(&nu), &tol).expect("catalog point"))
        });
    }
}

fn bench_exp(c: &mut Criterion) {
    let a = LorentzAlgebraElement::new([0.3, -0.4, 0.2].into(), [1.1, -0.5, 0.7].into());
    c.bench_function("lorentz_exp", |b| b.iter(|| lorentz_exp(black_box(&a))));
}

fn bench_sample(c: &mut Criterion) {
    let cls = OrbitClass::MassiveSpinning { mu: 2.0, beta: 3.0 };
    let labels = ComponentLabel {
        energy_sign: Sign::Plus,
        spin_sign: Some(Sign::Plus),
        helicity_sign: None,
    };
    let cfg = SamplerConfig::default();
    c.bench_function("sample_orbit/100", |b| {
        b.iter(|| sample_orbit(black_box(&cls), &labels, &cfg, 100).expect("catalog class"))
    });
}

criterion_group!(
    benches,
    bench_action,
    bench_invariants,
    bench_classify,
    bench_normal_form,
    bench_exp,
    bench_sample
);
criterion_main!(benches);
