use crate::base::{all_maps, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{Cat, InternalFunctor, InternalNatTrans};

use super::standard::disc;

/// 2-cells between functors `disc X -> A` are exactly maps `X -> A1`.
#[derive(Clone, Debug)]
pub struct DiscreteCells {
    x: FinObj,
    a: Cat,
    disc_x: Cat,
}

impl DiscreteCells {
    pub fn domain(&self) -> &Cat {
        &self.disc_x
    }

    fn endpoint(&self, objects: FinMap) -> Result<InternalFunctor> {
        let arrows = self.a.i().after(&objects)?;
        InternalFunctor::new(self.disc_x.clone(), self.a.clone(), objects, arrows)
    }

    /// The cell with components `φ(x)`, from `d1 ∘ φ` to `d0 ∘ φ`.
    pub fn to_cell(&self, phi: &FinMap) -> Result<InternalNatTrans> {
        if *phi.dom() != self.x || phi.cod() != self.a.c1() {
            return Err(Error::NotInHomSet("expected a map X -> A1".into()));
        }
        let src = self.endpoint(self.a.d1().after(phi)?)?;
        let tgt = self.endpoint(self.a.d0().after(phi)?)?;
        InternalNatTrans::new(src, tgt, phi.clone())
    }

    pub fn from_cell(&self, alpha: &InternalNatTrans) -> Result<FinMap> {
        if **alpha.src().dom() != *self.disc_x || **alpha.src().cod() != *self.a {
            return Err(Error::NotInHomSet("expected a 2-cell between functors disc X -> A".into()));
        }
        Ok(alpha.alpha().clone())
    }

    pub fn all_maps(&self) -> impl Iterator<Item = FinMap> {
        all_maps(&self.x, self.a.c1())
    }
}

pub fn discrete_nat_trans_bijection(x: &FinObj, a: &Cat) -> DiscreteCells {
    DiscreteCells { x: x.clone(), a: a.clone(), disc_x: disc(x).into_cat() }
}
