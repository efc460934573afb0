use std::collections::HashMap;

use crate::base::{pairing, pullback_map, FinMap};
use crate::error::{Error, Result};
use crate::internal::{
    compose_functors, ff_pullback, whisker_left, whisker_right, Cat, InternalCategory, InternalFunctor,
    InternalNatTrans,
};

use super::ofs::BaseOfs;

/// `f = right ∘ left` with `left` in the lifted left class and `right` fully faithful
/// with objects part in the right class.
#[derive(Clone, Debug)]
pub struct LiftedFactorisation {
    pub middle: Cat,
    pub left: InternalFunctor,
    pub right: InternalFunctor,
}

/// The category on `dom(g0)` whose arrows are pulled back from `B`, with its fully
/// faithful functor to `B`.
///
/// Arrows are the tuples of [`ff_pullback`]: a `(target, source)` pair of objects
/// and an arrow of `B` between their images. An injective `g0` gives a full subcategory.
pub fn full_preimage(b: &Cat, g0: &FinMap) -> Result<InternalFunctor> {
    if g0.cod() != b.c0() {
        return Err(Error::DomainMismatch("objects map must land in B0".into()));
    }
    let c0 = g0.dom().clone();
    let n = c0.size();
    let c1 = ff_pullback(b, g0)?;
    let (ends, arrow) = (c1.projection(0), c1.projection(1));
    let d0 = FinMap::from_fn(c1.apex().clone(), c0.clone(), |k| ends.apply(k) / n)?;
    let d1 = FinMap::from_fn(c1.apex().clone(), c0.clone(), |k| ends.apply(k) % n)?;
    let id = FinMap::identity(&c0);
    let i = c1.mediate(&[pairing(&id, &id)?, b.i().after(g0)?])?;
    let c2 = crate::base::pullback(&d1, &d0)?;
    let over = pullback_map(&c2, b.c2(), arrow, arrow)?;
    let m = c1.mediate(&[
        pairing(&d0.after(c2.projection(0))?, &d1.after(c2.projection(1))?)?,
        b.m().after(&over)?,
    ])?;
    let middle = InternalCategory::new(c0, c1.apex().clone(), d0, d1, i, m)?;
    middle.validate().into_result()?;
    InternalFunctor::new(middle.into_cat(), b.clone(), g0.clone(), arrow.clone())
}

/// Factor `f: A -> B` through the full preimage of the right part of `f0`.
pub fn factor_internal(f: &InternalFunctor, ofs: &dyn BaseOfs) -> Result<LiftedFactorisation> {
    let (a, b) = (f.dom(), f.cod());
    let (l0, r0) = ofs.factor(f.f0());
    let right = full_preimage(b, &r0)?;
    let middle = right.dom().clone();
    let c1 = ff_pullback(b, &r0)?;
    let l1 = c1.mediate(&[pairing(&l0.after(a.d0())?, &l0.after(a.d1())?)?, f.f1().clone()])?;
    let left = InternalFunctor::new(a.clone(), middle.clone(), l0, l1)?;
    left.validate().into_result()?;
    right.validate().into_result()?;
    Ok(LiftedFactorisation { middle, left, right })
}

/// Arrows of `X` keyed by `(source, target, image under f1)`; singleton keys when `f` is fully faithful.
fn fibres(f: &InternalFunctor) -> HashMap<(usize, usize, usize), Vec<usize>> {
    let x = f.dom();
    let mut out: HashMap<_, Vec<usize>> = HashMap::new();
    for a in x.c1().elements() {
        out.entry((x.source(a), x.target(a), f.f1().apply(a))).or_default().push(a);
    }
    out
}

fn unique_in_fibre(
    fibres: &HashMap<(usize, usize, usize), Vec<usize>>,
    key: (usize, usize, usize),
    element: usize,
) -> Result<usize> {
    match fibres.get(&key).map(Vec::as_slice) {
        Some([a]) => Ok(*a),
        other => Err(Error::FiberNotSingleton { element, count: other.map_or(0, <[usize]>::len) }),
    }
}

fn check_lifted_classes(s: &InternalFunctor, f: &InternalFunctor, ofs: &dyn BaseOfs) -> Result<()> {
    if !ofs.in_left(s.f0()) {
        return Err(Error::NotInClass(format!("objects part of s is not in the left class of {}", ofs.name())));
    }
    if !ofs.in_right(f.f0()) || !f.is_fully_faithful() {
        return Err(Error::NotInClass(format!(
            "f must be fully faithful with objects part in the right class of {}",
            ofs.name()
        )));
    }
    Ok(())
}

/// The unique `u: B -> X` with `u ∘ s = p` and `f ∘ u = q`, for `s: A -> B` and `f: X -> Y`.
pub fn lift_square(
    s: &InternalFunctor,
    f: &InternalFunctor,
    p: &InternalFunctor,
    q: &InternalFunctor,
    ofs: &dyn BaseOfs,
) -> Result<InternalFunctor> {
    check_lifted_classes(s, f, ofs)?;
    if compose_functors(f, p)? != compose_functors(q, s)? {
        return Err(Error::NonCommuting("f ∘ p ≠ q ∘ s".into()));
    }
    let b = s.cod();
    let u0 = ofs.lift(s.f0(), f.f0(), p.f0(), q.f0())?;
    let fib = fibres(f);
    let u1 = b
        .c1()
        .elements()
        .map(|e| {
            let key = (u0.apply(b.source(e)), u0.apply(b.target(e)), q.f1().apply(e));
            unique_in_fibre(&fib, key, e)
        })
        .collect::<Result<Vec<_>>>()?;
    InternalFunctor::new_validated(b.clone(), f.dom().clone(), u0, FinMap::new(b.c1().clone(), f.dom().c1().clone(), u1)?)
}

/// The unique `γ: u⁰ ⇒ u¹` with `f γ = β̄` and `γ s = ᾱ`, where `u^k` lifts the square
/// `(p^k, q^k)` and `ᾱ: p⁰ ⇒ p¹`, `β̄: q⁰ ⇒ q¹` satisfy `f ᾱ = β̄ s`.
pub fn lift_two_cell(
    s: &InternalFunctor,
    f: &InternalFunctor,
    alpha_bar: &InternalNatTrans,
    beta_bar: &InternalNatTrans,
    ofs: &dyn BaseOfs,
) -> Result<InternalNatTrans> {
    check_lifted_classes(s, f, ofs)?;
    if whisker_left(f, alpha_bar)? != whisker_right(beta_bar, s)? {
        return Err(Error::NonCommuting("f ᾱ ≠ β̄ s".into()));
    }
    let u_src = lift_square(s, f, alpha_bar.src(), beta_bar.src(), ofs)?;
    let u_tgt = lift_square(s, f, alpha_bar.tgt(), beta_bar.tgt(), ofs)?;
    let b = s.cod();
    let fib = fibres(f);
    let gamma = b
        .c0()
        .elements()
        .map(|y| unique_in_fibre(&fib, (u_src.f0().apply(y), u_tgt.f0().apply(y), beta_bar.component(y)), y))
        .collect::<Result<Vec<_>>>()?;
    let gamma = FinMap::new(b.c0().clone(), f.dom().c1().clone(), gamma)?;
    InternalNatTrans::new_validated(u_src, u_tgt, gamma)
}

/// Epi on objects; by the lifted factorisation these are exactly the functors
/// left orthogonal to every full monomorphism.
pub fn is_acute(f: &InternalFunctor) -> bool {
    f.is_epi_on_objects()
}
