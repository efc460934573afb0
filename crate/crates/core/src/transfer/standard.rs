use crate::base::{coequalizer, product, Coequalizer, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{Cat, InternalCategory, InternalFunctor};

/// Only identity arrows: `C0 = C1 = X`.
pub fn disc(x: &FinObj) -> InternalCategory {
    let id = FinMap::identity(x);
    InternalCategory::new(x.clone(), x.clone(), id.clone(), id.clone(), id.clone(), id)
        .expect("identity tables are well shaped")
}

/// One arrow per ordered pair: arrow `(a, b)` goes from `b` to `a`.
pub fn indisc(x: &FinObj) -> InternalCategory {
    let n = x.size();
    let xx = product(x, x);
    InternalCategory::from_composition(
        n,
        n * n,
        xx.projection(0).table().to_vec(),
        xx.projection(1).table().to_vec(),
        (0..n).map(|a| a * n + a).collect(),
        |u, v| (u / n) * n + v % n,
    )
    .expect("product tables are well shaped")
}

pub fn objects_part(c: &InternalCategory) -> FinObj {
    c.c0().clone()
}

pub fn arrows_part(c: &InternalCategory) -> FinObj {
    c.c1().clone()
}

/// Components as the coequalizer of target and source.
pub fn pi0_coequalizer(c: &InternalCategory) -> Coequalizer {
    coequalizer(c.d0(), c.d1()).expect("d0 and d1 are parallel")
}

pub fn pi0(c: &InternalCategory) -> FinObj {
    pi0_coequalizer(c).object
}

/// `Π0(f)`, the induced map on components.
pub fn pi0_map(f: &InternalFunctor) -> FinMap {
    let qa = pi0_coequalizer(f.dom());
    let qb = pi0_coequalizer(f.cod());
    let leg = qb.q.after(f.f0()).expect("f0 lands in the objects of the codomain");
    qa.factor(&leg).expect("functors preserve connectedness")
}

/// `disc(f)`.
pub fn disc_map(f: &FinMap) -> InternalFunctor {
    let (a, b) = (disc(f.dom()).into_cat(), disc(f.cod()).into_cat());
    InternalFunctor::new(a, b, f.clone(), f.clone()).expect("shapes agree")
}

/// `indisc(f)`, acting on pairs componentwise.
pub fn indisc_map(f: &FinMap) -> InternalFunctor {
    let (a, b) = (indisc(f.dom()).into_cat(), indisc(f.cod()).into_cat());
    let f1 = crate::base::product_map(f, f);
    InternalFunctor::new(a, b, f.clone(), f1).expect("shapes agree")
}

pub(crate) fn require_domain(expected: &Cat, actual: &Cat, what: &str) -> Result<()> {
    if **expected != **actual {
        return Err(Error::NotInHomSet(format!("{what} has the wrong domain")));
    }
    Ok(())
}
