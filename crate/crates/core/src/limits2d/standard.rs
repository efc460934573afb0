use crate::base::{coproduct_map, pullback, pullback_map, ChosenLimit, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{compose_functors, Cat, InternalCategory, InternalFunctor};
use crate::transfer::disc;

pub fn terminal_cat() -> InternalCategory {
    disc(&FinObj::new(1))
}

/// The unique functor to the terminal category.
pub fn to_terminal(a: &Cat) -> InternalFunctor {
    let one = terminal_cat().into_cat();
    InternalFunctor::new(a.clone(), one, FinMap::to_terminal(a.c0()), FinMap::to_terminal(a.c1()))
        .expect("shapes agree")
}

/// The walking arrow: objects `0, 1`; arrows `id0 = 0`, `a = 1: 0 -> 1`, `id1 = 2`.
pub fn free_arrow() -> InternalCategory {
    InternalCategory::from_tables(2, 3, vec![0, 1, 1], vec![0, 0, 1], vec![0, 2], vec![0, 1, 1, 2])
        .expect("walking arrow tables are well shaped")
}

/// Index of the non-identity arrow of [`free_arrow`].
pub const FREE_ARROW: usize = 1;

/// A pullback of internal categories computed levelwise.
#[derive(Clone, Debug)]
pub struct LimitCat {
    pub cat: Cat,
    pub proj0: InternalFunctor,
    pub proj1: InternalFunctor,
    level0: ChosenLimit,
    level1: ChosenLimit,
}

impl LimitCat {
    pub fn level0(&self) -> &ChosenLimit {
        &self.level0
    }

    pub fn level1(&self) -> &ChosenLimit {
        &self.level1
    }

    /// The unique functor into the limit with the given composites.
    pub fn mediate(&self, h: &InternalFunctor, k: &InternalFunctor) -> Result<InternalFunctor> {
        if !h.is_parallel_to(k) && **h.dom() != **k.dom() {
            return Err(Error::DomainMismatch("legs of a cone need a common domain".into()));
        }
        let f0 = self.level0.mediate(&[h.f0().clone(), k.f0().clone()])?;
        let f1 = self.level1.mediate(&[h.f1().clone(), k.f1().clone()])?;
        InternalFunctor::new(h.dom().clone(), self.cat.clone(), f0, f1)
    }
}

/// Pullback of a cospan `f: A -> C <- B: g`, levelwise.
pub fn pullback_cat(f: &InternalFunctor, g: &InternalFunctor) -> Result<LimitCat> {
    if **f.cod() != **g.cod() {
        return Err(Error::DomainMismatch("pullback of functors with different codomains".into()));
    }
    let (a, b) = (f.dom(), g.dom());
    let l0 = pullback(f.f0(), g.f0())?;
    let l1 = pullback(f.f1(), g.f1())?;
    let d0 = pullback_map(&l1, &l0, a.d0(), b.d0())?;
    let d1 = pullback_map(&l1, &l0, a.d1(), b.d1())?;
    let i = pullback_map(&l0, &l1, a.i(), b.i())?;
    let c2 = pullback(&d1, &d0)?;
    let pa2 = pullback_map(&c2, a.c2(), l1.projection(0), l1.projection(0))?;
    let pb2 = pullback_map(&c2, b.c2(), l1.projection(1), l1.projection(1))?;
    let m = l1.mediate(&[a.m().after(&pa2)?, b.m().after(&pb2)?])?;
    let cat = InternalCategory::new(l0.apex().clone(), l1.apex().clone(), d0, d1, i, m)?.into_cat();
    let proj0 = InternalFunctor::new(cat.clone(), a.clone(), l0.projection(0).clone(), l1.projection(0).clone())?;
    let proj1 = InternalFunctor::new(cat.clone(), b.clone(), l0.projection(1).clone(), l1.projection(1).clone())?;
    Ok(LimitCat { cat, proj0, proj1, level0: l0, level1: l1 })
}

/// `A × B`; objects and arrows are pairs in lexicographic order.
pub fn product_cat(a: &Cat, b: &Cat) -> LimitCat {
    pullback_cat(&to_terminal(a), &to_terminal(b)).expect("both legs end at the terminal category")
}

/// `f × g: A × B -> A' × B'`.
pub fn product_functor(f: &InternalFunctor, g: &InternalFunctor) -> Result<InternalFunctor> {
    let (src, tgt) = (product_cat(f.dom(), g.dom()), product_cat(f.cod(), g.cod()));
    let h = compose_functors(f, &src.proj0)?;
    let k = compose_functors(g, &src.proj1)?;
    tgt.mediate(&h, &k)
}

/// `A + B` with injections; `A`'s objects and arrows come first.
#[derive(Clone, Debug)]
pub struct CoproductCat {
    pub cat: Cat,
    pub inj0: InternalFunctor,
    pub inj1: InternalFunctor,
}

impl CoproductCat {
    /// The copairing `[h, k]: A + B -> C`.
    pub fn copair(&self, h: &InternalFunctor, k: &InternalFunctor) -> Result<InternalFunctor> {
        if **h.cod() != **k.cod() || **h.dom() != **self.inj0.dom() || **k.dom() != **self.inj1.dom() {
            return Err(Error::DomainMismatch("copairing legs do not fit the coproduct".into()));
        }
        let f0 = h.f0().table().iter().chain(k.f0().table()).copied().collect();
        let f1 = h.f1().table().iter().chain(k.f1().table()).copied().collect();
        InternalFunctor::from_tables(&self.cat, h.cod(), f0, f1)
    }
}

pub fn coproduct_cat(a: &Cat, b: &Cat) -> CoproductCat {
    let (na0, na1) = (a.objects(), a.arrows());
    let d0 = coproduct_map(a.d0(), b.d0());
    let d1 = coproduct_map(a.d1(), b.d1());
    let i = coproduct_map(a.i(), b.i());
    let cat = InternalCategory::from_composition(
        na0 + b.objects(),
        na1 + b.arrows(),
        d0.table().to_vec(),
        d1.table().to_vec(),
        i.table().to_vec(),
        |u, v| {
            if u < na1 {
                a.compose(u, v).expect("composable in the first summand")
            } else {
                na1 + b.compose(u - na1, v - na1).expect("composable in the second summand")
            }
        },
    )
    .expect("coproduct tables are well shaped")
    .into_cat();
    let inj0 = InternalFunctor::from_tables(a, &cat, (0..na0).collect(), (0..na1).collect()).expect("shapes agree");
    let inj1 = InternalFunctor::from_tables(
        b,
        &cat,
        (0..b.objects()).map(|x| na0 + x).collect(),
        (0..b.arrows()).map(|u| na1 + u).collect(),
    )
    .expect("shapes agree");
    CoproductCat { cat, inj0, inj1 }
}
