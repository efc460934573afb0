use crate::error::{Error, Result};

use super::limits::{product, ChosenLimit};
use super::map::{FinMap, FinObj};

/// Largest exponential object this base will build.
pub const MAX_EXPONENTIAL_SIZE: usize = 1 << 24;

/// `B^A`: element `k` is the table whose base-|B| digits are `k`, with `a = 0` most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponential {
    pub object: FinObj,
    pub base: FinObj,
    pub target: FinObj,
    /// `eval: B^A × A -> B`, domain the chosen product.
    pub eval: FinMap,
}

impl Exponential {
    pub fn table_of(&self, k: usize) -> Vec<usize> {
        let (n, b) = (self.base.size(), self.target.size());
        let mut t = vec![0; n];
        let mut rest = k;
        for a in (0..n).rev() {
            t[a] = rest % b;
            rest /= b;
        }
        t
    }

    pub fn index_of(&self, table: &[usize]) -> Result<usize> {
        if table.len() != self.base.size() {
            return Err(Error::ShapeMismatch("table length differs from the exponent".into()));
        }
        let b = self.target.size();
        let mut k = 0;
        for (a, &v) in table.iter().enumerate() {
            if v >= b {
                return Err(Error::OutOfRange { index: a, value: v, cod: b });
            }
            k = k * b + v;
        }
        Ok(k)
    }

    pub fn product(&self) -> ChosenLimit {
        product(&self.object, &self.base)
    }

    /// Transpose of `h: Z × A -> B` (domain the chosen product) to `Z -> B^A`.
    pub fn curry(&self, z: &FinObj, h: &FinMap) -> Result<FinMap> {
        let za = product(z, &self.base);
        if h.dom() != za.apex() || *h.cod() != self.target {
            return Err(Error::DomainMismatch("curry expects a map Z × A -> B".into()));
        }
        let n = self.base.size();
        let table = z
            .elements()
            .map(|x| self.index_of(&h.table()[x * n..(x + 1) * n]))
            .collect::<Result<Vec<_>>>()?;
        FinMap::new(z.clone(), self.object.clone(), table)
    }

    /// Inverse of [`Exponential::curry`].
    pub fn uncurry(&self, g: &FinMap) -> Result<FinMap> {
        if *g.cod() != self.object {
            return Err(Error::DomainMismatch("uncurry expects a map into the exponential".into()));
        }
        let za = product(g.dom(), &self.base);
        let table = g.table().iter().flat_map(|&k| self.table_of(k)).collect();
        FinMap::new(za.apex().clone(), self.target.clone(), table)
    }
}

pub fn exponential(a: &FinObj, b: &FinObj) -> Result<Exponential> {
    let size = (b.size() as u128).checked_pow(a.size() as u32).unwrap_or(u128::MAX);
    if size > MAX_EXPONENTIAL_SIZE as u128 {
        return Err(Error::SizeBound { estimate: size, limit: MAX_EXPONENTIAL_SIZE as u128 });
    }
    let object = FinObj::new(size as usize);
    let mut exp = Exponential {
        object: object.clone(),
        base: a.clone(),
        target: b.clone(),
        eval: FinMap::from_empty(b),
    };
    let dom = product(&object, a);
    let mut table = Vec::with_capacity(dom.size());
    for k in object.elements() {
        table.extend(exp.table_of(k));
    }
    exp.eval = FinMap::new_unchecked(dom.apex().clone(), b.clone(), table);
    Ok(exp)
}
