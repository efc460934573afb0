use serde::Serialize;

use crate::base::{choose_section, FinMap};
use crate::error::{Error, Result};
use crate::internal::{compose_functors, vcomp, whisker_left, whisker_right, InternalFunctor, InternalNatTrans};

/// A section `s` of a fully faithful, epi-on-objects `e`, with `η: 1 ⇒ s ∘ e`
/// making `e ⊣ s` an adjoint equivalence with identity counit.
#[derive(Clone, Debug)]
pub struct SectionCertificate {
    pub section: InternalFunctor,
    pub unit: InternalNatTrans,
}

pub fn section_of_ff_epi(e: &InternalFunctor) -> Result<SectionCertificate> {
    if !e.is_fully_faithful() {
        return Err(Error::NotFfEpi("not fully faithful".into()));
    }
    if !e.is_epi_on_objects() {
        return Err(Error::NotFfEpi("not surjective on objects".into()));
    }
    let (a, b) = (e.dom(), e.cod());
    let s0 = choose_section(e.f0())?;
    // Fully faithful: one arrow of A over each arrow of B between chosen endpoints.
    let lift = |src: usize, tgt: usize, image: usize, element: usize| -> Result<usize> {
        let found: Vec<usize> = a.hom(src, tgt).into_iter().filter(|&u| e.f1().apply(u) == image).collect();
        match found.as_slice() {
            [u] => Ok(*u),
            _ => Err(Error::FiberNotSingleton { element, count: found.len() }),
        }
    };
    let s1 = b
        .c1()
        .elements()
        .map(|v| lift(s0.apply(b.source(v)), s0.apply(b.target(v)), v, v))
        .collect::<Result<Vec<_>>>()?;
    let section = InternalFunctor::new_validated(
        b.clone(),
        a.clone(),
        s0.clone(),
        FinMap::new(b.c1().clone(), a.c1().clone(), s1)?,
    )?;
    let eta = a
        .c0()
        .elements()
        .map(|x| {
            let y = e.f0().apply(x);
            lift(x, s0.apply(y), b.identity(y), x)
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = InternalNatTrans::new_validated(
        InternalFunctor::identity(a),
        compose_functors(&section, e)?,
        FinMap::new(a.c0().clone(), a.c1().clone(), eta)?,
    )?;
    let cert = SectionCertificate { section, unit };
    cert.verify(e)?;
    Ok(cert)
}

impl SectionCertificate {
    /// `e ∘ s = 1`, `η` invertible, and both triangle identities with counit the identity.
    pub fn verify(&self, e: &InternalFunctor) -> Result<()> {
        let b = e.cod();
        let es = compose_functors(e, &self.section)?;
        if es != InternalFunctor::identity(b) {
            return Err(Error::NonCommuting("e ∘ s is not the identity".into()));
        }
        if self.unit.inverse().is_none() {
            return Err(Error::NonCommuting("unit is not invertible".into()));
        }
        let counit = InternalNatTrans::identity(&es);
        let left = vcomp(&whisker_right(&counit, e)?, &whisker_left(e, &self.unit)?)?;
        if !left.is_identity() {
            return Err(Error::NonCommuting("triangle identity at e fails".into()));
        }
        let right = vcomp(&whisker_left(&self.section, &counit)?, &whisker_right(&self.unit, &self.section)?)?;
        if !right.is_identity() {
            return Err(Error::NonCommuting("triangle identity at s fails".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChoiceFragment {
    pub certificates: usize,
    /// Functors that are not acute and fully faithful, with the reason.
    pub skipped: Vec<(usize, String)>,
    pub counterexamples: Vec<(usize, String)>,
}

/// A section certificate for every acute, fully faithful functor in `functors`.
pub fn categorified_choice_audit(functors: &[InternalFunctor]) -> ChoiceFragment {
    let mut out = ChoiceFragment::default();
    for (k, e) in functors.iter().enumerate() {
        if !e.is_fully_faithful() {
            out.skipped.push((k, "not fully faithful".into()));
        } else if !e.is_epi_on_objects() {
            out.skipped.push((k, "not acute".into()));
        } else {
            match section_of_ff_epi(e) {
                Ok(_) => out.certificates += 1,
                Err(err) => out.counterexamples.push((k, err.to_string())),
            }
        }
    }
    out
}
