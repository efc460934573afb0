use serde::Serialize;

use crate::base::{characteristic_map, factor_epi_mono, omega, pullback, top, FinMap, FinObj, TRUE};
use crate::error::{Error, Result};
use crate::internal::{are_isomorphic, is_levelwise_pullback, Cat, InternalFunctor, WorkBudget};
use crate::limits2d::{free_arrow, hom_category, terminal_cat, to_terminal};
use crate::transfer::{disc, disc_map, indisc, indisc_map, pi0_coequalizer, pi0_map};

/// `indisc(⊤): 1 -> indisc(Ω)`.
#[derive(Clone, Debug)]
pub struct FullSubobjectClassifier {
    pub omega: Cat,
    pub top: InternalFunctor,
}

pub fn full_subobject_classifier() -> FullSubobjectClassifier {
    let top = indisc_map(&top());
    FullSubobjectClassifier { omega: top.cod().clone(), top }
}

/// `χ_f: B -> indisc(Ω)`: objects by `χ_{f0}`, an arrow by the truth values of its endpoints.
pub fn classify_full_mono(f: &InternalFunctor) -> Result<InternalFunctor> {
    if !f.is_full_mono() {
        return Err(Error::NotFullMono);
    }
    let b = f.cod();
    let chi0 = characteristic_map(f.f0())?;
    let n = omega().size();
    let omega_cat = indisc(&omega()).into_cat();
    let chi1 = FinMap::from_fn(b.c1().clone(), omega_cat.c1().clone(), |u| {
        chi0.apply(b.target(u)) * n + chi0.apply(b.source(u))
    })?;
    InternalFunctor::new(b.clone(), omega_cat, chi0, chi1)
}

/// Injective on objects, and both `f0 ∘ d_k = d_k ∘ f1` squares are pullbacks.
pub fn is_strict_bi_sieve(f: &InternalFunctor) -> bool {
    if !f.f0().is_mono() {
        return false;
    }
    let (a, b) = (f.dom(), f.cod());
    [(a.d0(), b.d0()), (a.d1(), b.d1())].into_iter().all(|(da, db)| {
        pullback(f.f0(), db)
            .and_then(|pb| pb.mediate(&[da.clone(), f.f1().clone()]))
            .is_ok_and(|m| m.is_iso())
    })
}

/// The classifying map of a strict bi-sieve with the checks made while building it.
#[derive(Clone, Debug)]
pub struct BiSieveCertificate {
    pub chi: InternalFunctor,
    /// Whether `Π0(f)` was injective; if not, its image was classified instead.
    pub pi0_mono: bool,
    /// Whether the classifying square is a levelwise pullback.
    pub pullback_verified: bool,
}

/// `χ: B -> disc(Ω)` through the components of `B`.
pub fn classify_strict_bi_sieve(f: &InternalFunctor) -> Result<BiSieveCertificate> {
    if !is_strict_bi_sieve(f) {
        return Err(Error::NotBiSieve);
    }
    let b = f.cod();
    let components = pi0_map(f);
    let pi0_mono = components.is_mono();
    let (_, image) = factor_epi_mono(&components);
    let chi_components = characteristic_map(&image)?;
    let chi0 = chi_components.after(&pi0_coequalizer(b).q)?;
    let chi1 = chi0.after(b.d0())?;
    let disc_omega = disc(&omega()).into_cat();
    let chi = InternalFunctor::new(b.clone(), disc_omega, chi0, chi1)?;
    let truth = disc_map(&top());
    let pullback_verified = is_levelwise_pullback(f, &to_terminal(f.dom()), &chi, &truth)?;
    Ok(BiSieveCertificate { chi, pi0_mono, pullback_verified })
}

/// Whether the classifying maps of both endpoints of `2_E` are bijective on objects.
pub fn is_boolean() -> bool {
    let two = free_arrow().into_cat();
    let point = terminal_cat().into_cat();
    (0..2).all(|end| {
        let f = InternalFunctor::from_tables(&point, &two, vec![end], vec![two.identity(end)]).expect("endpoint");
        classify_full_mono(&f).is_ok_and(|chi| chi.is_iso_on_objects() && chi.f0().apply(end) == TRUE)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TwoValuedReport {
    pub functors: usize,
    pub hom_objects: usize,
    pub hom_arrows: usize,
    pub all_invertible: bool,
    pub is_free_isomorphism: bool,
}

/// Whether `1 -> indisc(Ω)` has exactly two functors, with the enumerated hom-category.
pub fn is_two_valued() -> (bool, TwoValuedReport) {
    let point = terminal_cat().into_cat();
    let omega_cat = full_subobject_classifier().omega;
    let hom = hom_category(&point, &omega_cat, &mut WorkBudget::new(1_000_000)).expect("tiny enumeration");
    let all_invertible = hom.arrows.iter().all(|a| a.inverse().is_some());
    let hom_cat = hom.as_internal().into_cat();
    let free_iso = indisc(&FinObj::new(2)).into_cat();
    let report = TwoValuedReport {
        functors: hom.objects.len(),
        hom_objects: hom_cat.objects(),
        hom_arrows: hom_cat.arrows(),
        all_invertible,
        is_free_isomorphism: are_isomorphic(&hom_cat, &free_iso),
    };
    (report.functors == 2, report)
}
