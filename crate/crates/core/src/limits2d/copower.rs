use crate::error::{Error, Result};
use crate::internal::{whisker_left, Cat, InternalFunctor, InternalNatTrans};

use super::standard::{free_arrow, product_cat, FREE_ARROW};

/// `2 ⊗ A`, realised as `2_E × A`, with the two coprojections and the cell between them.
///
/// Objects are `(j, a)` at index `j·|A0| + a`; arrows are `(e, u)` at `e·|A1| + u`
/// with `e` an arrow of the walking arrow.
#[derive(Clone, Debug)]
pub struct CopowerByTwo {
    pub carrier: Cat,
    pub coproj0: InternalFunctor,
    pub coproj1: InternalFunctor,
    pub universal_cell: InternalNatTrans,
    base: Cat,
}

impl CopowerByTwo {
    pub fn base(&self) -> &Cat {
        &self.base
    }

    /// `H ↦ H · universal_cell`, a cell `H c0 ⇒ H c1`.
    pub fn functor_to_cell(&self, h: &InternalFunctor) -> Result<InternalNatTrans> {
        if **h.dom() != *self.carrier {
            return Err(Error::NotInHomSet("functor does not start at the copower".into()));
        }
        whisker_left(h, &self.universal_cell)
    }

    /// The functor sending `(0, a) ↦ f a`, `(1, a) ↦ g a`, and the arrow `(a, u: x -> y)`
    /// to the diagonal `g(u) ∘ α_x` of the naturality square.
    pub fn cell_to_functor(&self, alpha: &InternalNatTrans) -> Result<InternalFunctor> {
        let a = &self.base;
        if **alpha.src().dom() != **a {
            return Err(Error::NotInHomSet("2-cell does not start at the base category".into()));
        }
        let (f, g) = (alpha.src(), alpha.tgt());
        let b = f.cod();
        let (na0, na1) = (a.objects(), a.arrows());
        let f0 = (0..2 * na0)
            .map(|k| if k < na0 { f.f0().apply(k) } else { g.f0().apply(k - na0) })
            .collect();
        let f1 = (0..3 * na1)
            .map(|k| {
                let (e, u) = (k / na1, k % na1);
                match e {
                    0 => f.f1().apply(u),
                    FREE_ARROW => b
                        .compose(g.f1().apply(u), alpha.component(a.source(u)))
                        .expect("components are composable with the image arrow"),
                    _ => g.f1().apply(u),
                }
            })
            .collect();
        InternalFunctor::from_tables(&self.carrier, b, f0, f1)
    }
}

pub fn copower_by_two(a: &Cat) -> Result<CopowerByTwo> {
    let two = free_arrow().into_cat();
    let prod = product_cat(&two, a);
    let carrier = prod.cat.clone();
    let (na0, na1) = (a.objects(), a.arrows());
    let coproj = |j: usize, e: usize| {
        InternalFunctor::from_tables(
            a,
            &carrier,
            (0..na0).map(|x| j * na0 + x).collect(),
            (0..na1).map(|u| e * na1 + u).collect(),
        )
    };
    let coproj0 = coproj(0, two.identity(0))?;
    let coproj1 = coproj(1, two.identity(1))?;
    let cell = (0..na0).map(|x| FREE_ARROW * na1 + a.identity(x)).collect();
    let universal_cell = InternalNatTrans::new(
        coproj0.clone(),
        coproj1.clone(),
        crate::base::FinMap::new(a.c0().clone(), carrier.c1().clone(), cell)?,
    )?;
    Ok(CopowerByTwo { carrier, coproj0, coproj1, universal_cell, base: a.clone() })
}
