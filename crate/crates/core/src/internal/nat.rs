use std::fmt;

use crate::base::FinMap;
use crate::error::{Error, Result};

use super::functor::{compose_functors, same_cat, InternalFunctor};
use super::validate::{ValidationReport, Violation};

/// A 2-cell `α: f ⇒ g` with components `α_x: f(x) -> g(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct InternalNatTrans {
    src: InternalFunctor,
    tgt: InternalFunctor,
    alpha: FinMap,
}

impl InternalNatTrans {
    pub fn new(src: InternalFunctor, tgt: InternalFunctor, alpha: FinMap) -> Result<Self> {
        if !src.is_parallel_to(&tgt) {
            return Err(Error::ShapeMismatch("a 2-cell needs a parallel pair of functors".into()));
        }
        if alpha.dom() != src.dom().c0() || alpha.cod() != src.cod().c1() {
            return Err(Error::ShapeMismatch("component assigner must be A0 -> B1".into()));
        }
        Ok(InternalNatTrans { src, tgt, alpha })
    }

    pub fn new_validated(src: InternalFunctor, tgt: InternalFunctor, alpha: FinMap) -> Result<Self> {
        let t = InternalNatTrans::new(src, tgt, alpha)?;
        t.validate().into_result()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(src: InternalFunctor, tgt: InternalFunctor, alpha: Vec<usize>) -> Self {
        let alpha = FinMap::new_unchecked(src.dom().c0().clone(), src.cod().c1().clone(), alpha);
        InternalNatTrans { src, tgt, alpha }
    }

    /// `1_f`, with assigner `i ∘ f0`.
    pub fn identity(f: &InternalFunctor) -> Self {
        let alpha = f.cod().i().after(f.f0()).expect("f0 lands in the objects of the codomain");
        InternalNatTrans { src: f.clone(), tgt: f.clone(), alpha }
    }

    pub fn src(&self) -> &InternalFunctor {
        &self.src
    }

    pub fn tgt(&self) -> &InternalFunctor {
        &self.tgt
    }

    pub fn alpha(&self) -> &FinMap {
        &self.alpha
    }

    pub fn component(&self, x: usize) -> usize {
        self.alpha.apply(x)
    }

    pub fn validate(&self) -> ValidationReport {
        let (a, b) = (self.src.dom(), self.src.cod());
        let (f, g) = (&self.src, &self.tgt);
        let mut report = ValidationReport::default();
        for x in a.c0().elements() {
            let ax = self.alpha.apply(x);
            if b.source(ax) != f.f0().apply(x) {
                report.push(Violation::new("component-source", x, format!("d1(α_{x}) ≠ f0({x})")));
            }
            if b.target(ax) != g.f0().apply(x) {
                report.push(Violation::new("component-target", x, format!("d0(α_{x}) ≠ g0({x})")));
            }
        }
        for u in a.c1().elements() {
            let (x, y) = (a.source(u), a.target(u));
            let lhs = b.compose(g.f1().apply(u), self.alpha.apply(x));
            let rhs = b.compose(self.alpha.apply(y), f.f1().apply(u));
            if lhs.is_none() || lhs != rhs {
                report.push(Violation::new("naturality", u, format!("g({u})∘α_{x} = {lhs:?} but α_{y}∘f({u}) = {rhs:?}")));
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && *self == InternalNatTrans::identity(&self.src)
    }

    /// The inverse 2-cell, when every component is invertible.
    pub fn inverse(&self) -> Option<InternalNatTrans> {
        let b = self.src.cod();
        let mut table = Vec::with_capacity(self.alpha.dom().size());
        for x in self.alpha.dom().elements() {
            let ax = self.alpha.apply(x);
            let (s, t) = (b.source(ax), b.target(ax));
            let inv = b.hom(t, s).into_iter().find(|&v| {
                b.compose(v, ax) == Some(b.identity(s)) && b.compose(ax, v) == Some(b.identity(t))
            })?;
            table.push(inv);
        }
        Some(InternalNatTrans::new_unchecked(self.tgt.clone(), self.src.clone(), table))
    }
}

/// `β · α`, componentwise `β_x ∘ α_x`.
pub fn vcomp(beta: &InternalNatTrans, alpha: &InternalNatTrans) -> Result<InternalNatTrans> {
    if alpha.tgt != beta.src {
        return Err(Error::DomainMismatch("vertical composite needs tgt(α) = src(β)".into()));
    }
    let b = alpha.src.cod();
    let pairs = b.c2().mediate(&[beta.alpha.clone(), alpha.alpha.clone()])?;
    let composite = b.m().after(&pairs)?;
    InternalNatTrans::new(alpha.src.clone(), beta.tgt.clone(), composite)
}

/// `h α: h f ⇒ h g`, assigner `h1 ∘ α`.
pub fn whisker_left(h: &InternalFunctor, alpha: &InternalNatTrans) -> Result<InternalNatTrans> {
    let src = compose_functors(h, &alpha.src)?;
    let tgt = compose_functors(h, &alpha.tgt)?;
    InternalNatTrans::new(src, tgt, h.f1().after(&alpha.alpha)?)
}

/// `α k: f k ⇒ g k`, assigner `α ∘ k0`.
pub fn whisker_right(alpha: &InternalNatTrans, k: &InternalFunctor) -> Result<InternalNatTrans> {
    let src = compose_functors(&alpha.src, k)?;
    let tgt = compose_functors(&alpha.tgt, k)?;
    InternalNatTrans::new(src, tgt, alpha.alpha.after(k.f0())?)
}

/// Horizontal composite of `α: f ⇒ g: A -> B` and `β: f' ⇒ g': B -> C`, as `β g · f' α`.
pub fn hcomp(beta: &InternalNatTrans, alpha: &InternalNatTrans) -> Result<InternalNatTrans> {
    if !same_cat(alpha.src.cod(), beta.src.dom()) {
        return Err(Error::DomainMismatch("horizontal composite of non-adjacent 2-cells".into()));
    }
    vcomp(&whisker_right(beta, &alpha.tgt)?, &whisker_left(&beta.src, alpha)?)
}

/// The other middle-four order, `g' α · β f`.
pub fn hcomp_alt(beta: &InternalNatTrans, alpha: &InternalNatTrans) -> Result<InternalNatTrans> {
    if !same_cat(alpha.src.cod(), beta.src.dom()) {
        return Err(Error::DomainMismatch("horizontal composite of non-adjacent 2-cells".into()));
    }
    vcomp(&whisker_left(&beta.tgt, alpha)?, &whisker_right(beta, &alpha.src)?)
}

impl fmt::Debug for InternalNatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InternalNatTrans")
            .field("src", &self.src)
            .field("tgt", &self.tgt)
            .field("alpha", &self.alpha.table())
            .finish()
    }
}
