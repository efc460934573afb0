use crate::base::{pullback, ChosenLimit, FinMap};
use crate::error::{Error, Result};
use crate::internal::{Cat, InternalCategory, InternalFunctor, InternalNatTrans};

/// The arrow category `A^2`: objects are arrows of `A`, arrows are commuting squares.
///
/// A square is a pair `(p, q)` of composable pairs with `m(p) = m(q)`, where
/// `p = (k, f)` and `q = (g, h)` read `k ∘ f = g ∘ h`; it goes from `f` to `g`,
/// with `h` on the source side and `k` on the target side.
#[derive(Clone, Debug)]
pub struct PowerByTwo {
    pub carrier: Cat,
    pub source_proj: InternalFunctor,
    pub target_proj: InternalFunctor,
    pub universal_cell: InternalNatTrans,
    base: Cat,
    squares: ChosenLimit,
}

impl PowerByTwo {
    pub fn base(&self) -> &Cat {
        &self.base
    }

    /// The chosen pullback of `(m, m)` carrying the squares.
    pub fn squares(&self) -> &ChosenLimit {
        &self.squares
    }

    /// `(h, k, f, g)` for a square: source side, target side, source object, target object.
    pub fn square_sides(&self, s: usize) -> (usize, usize, usize, usize) {
        let a = &self.base;
        let t = self.squares.tuple(s);
        let (p, q) = (a.c2().tuple(t[0]), a.c2().tuple(t[1]));
        (q[1], p[0], p[1], q[0])
    }

    /// `F ↦ α` with assigner `F0`, from `source_proj ∘ F` to `target_proj ∘ F`.
    pub fn functor_to_cell(&self, f: &InternalFunctor) -> Result<InternalNatTrans> {
        if **f.cod() != *self.carrier {
            return Err(Error::NotInHomSet("functor does not land in the arrow category".into()));
        }
        crate::internal::whisker_right(&self.universal_cell, f)
    }

    /// The functor whose object part is the assigner and whose arrow part sends
    /// `e: x -> y` to the naturality square `g(e) ∘ α_x = α_y ∘ f(e)`.
    pub fn cell_to_functor(&self, alpha: &InternalNatTrans) -> Result<InternalFunctor> {
        let a = &self.base;
        if **alpha.src().cod() != **a {
            return Err(Error::NotInHomSet("2-cell does not land in the base category".into()));
        }
        let x = alpha.src().dom();
        let (f1, g1) = (alpha.src().f1(), alpha.tgt().f1());
        let p = a.c2().mediate(&[g1.clone(), alpha.alpha().after(x.d1())?])?;
        let q = a.c2().mediate(&[alpha.alpha().after(x.d0())?, f1.clone()])?;
        let arrows = self.squares.mediate(&[p, q])?;
        InternalFunctor::new(x.clone(), self.carrier.clone(), alpha.alpha().clone(), arrows)
    }
}

pub fn power_by_two(a: &Cat) -> Result<PowerByTwo> {
    let sq = pullback(a.m(), a.m())?;
    let (sp, sq_q) = (sq.projection(0), sq.projection(1));
    let (pi0, pi1) = (a.pi0(), a.pi1());

    let d1 = pi1.after(sp)?;
    let d0 = pi0.after(sq_q)?;
    let (i0, i1) = a.unitors()?;
    let i = sq.mediate(&[i0, i1])?;

    // `m` is built against the pairs of squares derived from `d0, d1`.
    let pairs = pullback(&d1, &d0)?;
    let (u, v) = (pairs.projection(0), pairs.projection(1));
    let side_k = |s: &FinMap| -> Result<FinMap> { pi0.after(sp)?.after(s) };
    let side_h = |s: &FinMap| -> Result<FinMap> { pi1.after(sq_q)?.after(s) };
    let k = a.m().after(&a.c2().mediate(&[side_k(u)?, side_k(v)?])?)?;
    let h = a.m().after(&a.c2().mediate(&[side_h(u)?, side_h(v)?])?)?;
    let p = a.c2().mediate(&[k, pi1.after(sp)?.after(v)?])?;
    let q = a.c2().mediate(&[pi0.after(sq_q)?.after(u)?, h])?;
    let m = sq.mediate(&[p, q])?;

    let carrier = InternalCategory::new(a.c1().clone(), sq.apex().clone(), d0, d1, i, m)?.into_cat();
    let source_proj = InternalFunctor::new(carrier.clone(), a.clone(), a.d1().clone(), pi1.after(sq_q)?)?;
    let target_proj = InternalFunctor::new(carrier.clone(), a.clone(), a.d0().clone(), pi0.after(sp)?)?;
    let universal_cell = InternalNatTrans::new(source_proj.clone(), target_proj.clone(), FinMap::identity(a.c1()))?;
    Ok(PowerByTwo { carrier, source_proj, target_proj, universal_cell, base: a.clone(), squares: sq })
}
