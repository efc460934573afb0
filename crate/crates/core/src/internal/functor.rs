use std::fmt;
use std::sync::Arc;

use crate::base::{product, product_map, pullback, pullback_map, ChosenLimit, FinMap};
use crate::error::{Error, Result};

use super::category::{Cat, InternalCategory};
use super::validate::{ValidationReport, Violation};

#[derive(Clone, PartialEq, Eq)]
pub struct InternalFunctor {
    dom: Cat,
    cod: Cat,
    f0: FinMap,
    f1: FinMap,
}

pub(crate) fn same_cat(a: &Cat, b: &Cat) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl InternalFunctor {
    pub fn new(dom: Cat, cod: Cat, f0: FinMap, f1: FinMap) -> Result<Self> {
        if f0.dom() != dom.c0() || f0.cod() != cod.c0() {
            return Err(Error::ShapeMismatch("object part has the wrong endpoints".into()));
        }
        if f1.dom() != dom.c1() || f1.cod() != cod.c1() {
            return Err(Error::ShapeMismatch("arrow part has the wrong endpoints".into()));
        }
        Ok(InternalFunctor { dom, cod, f0, f1 })
    }

    pub fn from_tables(dom: &Cat, cod: &Cat, f0: Vec<usize>, f1: Vec<usize>) -> Result<Self> {
        let f0 = FinMap::new(dom.c0().clone(), cod.c0().clone(), f0)?;
        let f1 = FinMap::new(dom.c1().clone(), cod.c1().clone(), f1)?;
        InternalFunctor::new(dom.clone(), cod.clone(), f0, f1)
    }

    pub fn new_validated(dom: Cat, cod: Cat, f0: FinMap, f1: FinMap) -> Result<Self> {
        let f = InternalFunctor::new(dom, cod, f0, f1)?;
        f.validate().into_result()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(dom: Cat, cod: Cat, f0: Vec<usize>, f1: Vec<usize>) -> Self {
        let f0 = FinMap::new_unchecked(dom.c0().clone(), cod.c0().clone(), f0);
        let f1 = FinMap::new_unchecked(dom.c1().clone(), cod.c1().clone(), f1);
        InternalFunctor { dom, cod, f0, f1 }
    }

    pub fn identity(c: &Cat) -> Self {
        InternalFunctor {
            dom: c.clone(),
            cod: c.clone(),
            f0: FinMap::identity(c.c0()),
            f1: FinMap::identity(c.c1()),
        }
    }

    pub fn dom(&self) -> &Cat {
        &self.dom
    }

    pub fn cod(&self) -> &Cat {
        &self.cod
    }

    pub fn f0(&self) -> &FinMap {
        &self.f0
    }

    pub fn f1(&self) -> &FinMap {
        &self.f1
    }

    pub fn is_parallel_to(&self, other: &InternalFunctor) -> bool {
        same_cat(&self.dom, &other.dom) && same_cat(&self.cod, &other.cod)
    }

    /// The induced map on composable pairs.
    pub fn f2(&self) -> Result<FinMap> {
        pullback_map(self.dom.c2(), self.cod.c2(), &self.f1, &self.f1)
    }

    pub fn validate(&self) -> ValidationReport {
        let (a, b) = (&*self.dom, &*self.cod);
        let mut report = ValidationReport::default();
        for u in a.c1().elements() {
            let fu = self.f1.apply(u);
            if b.target(fu) != self.f0.apply(a.target(u)) {
                report.push(Violation::new("preserves-target", u, format!("d0(f1({u})) ≠ f0(d0({u}))")));
            }
            if b.source(fu) != self.f0.apply(a.source(u)) {
                report.push(Violation::new("preserves-source", u, format!("d1(f1({u})) ≠ f0(d1({u}))")));
            }
        }
        for x in a.c0().elements() {
            if self.f1.apply(a.identity(x)) != b.identity(self.f0.apply(x)) {
                report.push(Violation::new("preserves-identity", x, format!("f1(i({x})) ≠ i(f0({x}))")));
            }
        }
        for (k, t) in a.c2().tuples().enumerate() {
            let lhs = self.f1.apply(a.m().apply(k));
            let rhs = b.compose(self.f1.apply(t[0]), self.f1.apply(t[1]));
            if rhs != Some(lhs) {
                report.push(Violation::new(
                    "preserves-composite",
                    k,
                    format!("f1({}∘{}) = {lhs} but f1-images compose to {rhs:?}", t[0], t[1]),
                ));
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn is_faithful(&self) -> bool {
        let a = &*self.dom;
        let hom = a.hom_table();
        hom.iter().all(|arrows| {
            let mut images: Vec<_> = arrows.iter().map(|&u| self.f1.apply(u)).collect();
            images.sort_unstable();
            images.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// The comparison `A1 -> P` into `P = pullback(f0 × f0, (d0, d1))`; tuples are
    /// `(index of (target, source) in A0 × A0, arrow of B)`.
    pub fn ff_comparison(&self) -> Result<(ChosenLimit, FinMap)> {
        let (a, b) = (&*self.dom, &*self.cod);
        let p = ff_pullback(b, &self.f0)?;
        let ends = product(a.c0(), a.c0()).mediate(&[a.d0().clone(), a.d1().clone()])?;
        let comparison = p.mediate(&[ends, self.f1.clone()])?;
        Ok((p, comparison))
    }

    pub fn is_fully_faithful(&self) -> bool {
        match self.ff_comparison() {
            Ok((_, c)) => c.is_iso(),
            Err(_) => false,
        }
    }

    pub fn is_mono_functor(&self) -> bool {
        self.f0.is_mono() && self.is_faithful()
    }

    pub fn is_full_mono(&self) -> bool {
        self.f0.is_mono() && self.is_fully_faithful()
    }

    pub fn is_epi_on_objects(&self) -> bool {
        self.f0.is_epi()
    }

    pub fn is_iso_on_objects(&self) -> bool {
        self.f0.is_iso()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.f0.is_iso() && self.f1.is_iso()
    }

    /// Whether `f1(a)` an identity forces `a` to be one.
    pub fn reflects_identities(&self) -> bool {
        self.dom.c1().elements().all(|u| !self.cod.is_identity_arrow(self.f1.apply(u)) || self.dom.is_identity_arrow(u))
    }

    pub fn inverse(&self) -> Result<InternalFunctor> {
        InternalFunctor::new(self.cod.clone(), self.dom.clone(), self.f0.inverse()?, self.f1.inverse()?)
    }
}

/// `pullback(g0 × g0, (d0, d1))` for `g0: X -> B0`; the fully-faithfulness pullback.
pub fn ff_pullback(b: &InternalCategory, g0: &FinMap) -> Result<ChosenLimit> {
    let ends = product(b.c0(), b.c0()).mediate(&[b.d0().clone(), b.d1().clone()])?;
    pullback(&product_map(g0, g0), &ends)
}

/// `g ∘ f`.
pub fn compose_functors(g: &InternalFunctor, f: &InternalFunctor) -> Result<InternalFunctor> {
    if !same_cat(&f.cod, &g.dom) {
        return Err(Error::DomainMismatch("codomain of the first functor is not the domain of the second".into()));
    }
    Ok(InternalFunctor {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        f0: g.f0.after(&f.f0)?,
        f1: g.f1.after(&f.f1)?,
    })
}

impl fmt::Debug for InternalFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InternalFunctor")
            .field("f0", &self.f0.table())
            .field("f1", &self.f1.table())
            .finish()
    }
}

/// Whether the commuting square `h ∘ f = k ∘ g` (with `f: A -> B`, `g: A -> C`,
/// `h: B -> D`, `k: C -> D`) is a pullback at both levels.
pub fn is_levelwise_pullback(
    f: &InternalFunctor,
    g: &InternalFunctor,
    h: &InternalFunctor,
    k: &InternalFunctor,
) -> Result<bool> {
    let hf = compose_functors(h, f)?;
    let kg = compose_functors(k, g)?;
    if hf != kg {
        return Ok(false);
    }
    let level = |fm: &FinMap, gm: &FinMap, hm: &FinMap, km: &FinMap| -> Result<bool> {
        let pb = pullback(hm, km)?;
        Ok(pb.mediate(&[fm.clone(), gm.clone()])?.is_iso())
    };
    Ok(level(f.f0(), g.f0(), h.f0(), k.f0())? && level(f.f1(), g.f1(), h.f1(), k.f1())?)
}
