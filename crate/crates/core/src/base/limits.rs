use crate::error::{Error, Result};

use super::map::{FinMap, FinObj};

/// A limit cone whose apex enumerates its solution tuples in lexicographic order.
///
/// Element `k` of the apex is the `k`-th tuple; projection `j` reads component `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChosenLimit {
    apex: FinObj,
    projections: Vec<FinMap>,
    arity: usize,
    tuples: Vec<usize>,
}

impl ChosenLimit {
    fn from_tuples(factors: &[FinObj], arity: usize, tuples: Vec<usize>) -> Self {
        debug_assert_eq!(factors.len(), arity);
        let n = if arity == 0 { 1 } else { tuples.len() / arity };
        let apex = FinObj::new(n);
        let projections = (0..arity)
            .map(|j| {
                let table = (0..n).map(|k| tuples[k * arity + j]).collect();
                FinMap::new_unchecked(apex.clone(), factors[j].clone(), table)
            })
            .collect();
        ChosenLimit { apex, projections, arity, tuples }
    }

    pub fn apex(&self) -> &FinObj {
        &self.apex
    }

    pub fn size(&self) -> usize {
        self.apex.size()
    }

    pub fn projections(&self) -> &[FinMap] {
        &self.projections
    }

    pub fn projection(&self, j: usize) -> &FinMap {
        &self.projections[j]
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuple(&self, k: usize) -> &[usize] {
        &self.tuples[k * self.arity..(k + 1) * self.arity]
    }

    pub fn tuples(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.size()).map(move |k| self.tuple(k))
    }

    /// Apex index of a tuple, if it is a solution.
    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.arity {
            return None;
        }
        if self.arity == 0 {
            return Some(0);
        }
        let (mut lo, mut hi) = (0, self.size());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.tuple(mid).cmp(tuple) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// The unique map into the apex whose composites with the projections are `legs`.
    pub fn mediate(&self, legs: &[FinMap]) -> Result<FinMap> {
        if legs.len() != self.arity {
            return Err(Error::ShapeMismatch(format!(
                "{} legs for a cone of arity {}",
                legs.len(),
                self.arity
            )));
        }
        let dom = match legs.first() {
            Some(l) => l.dom().clone(),
            None => {
                return Err(Error::ShapeMismatch("a nullary cone needs an explicit domain".into()))
            }
        };
        for (j, leg) in legs.iter().enumerate() {
            if *leg.dom() != dom || *leg.cod() != *self.projections[j].cod() {
                return Err(Error::DomainMismatch(format!("leg {j} has the wrong endpoints")));
            }
        }
        let mut buf = vec![0; self.arity];
        let mut table = Vec::with_capacity(dom.size());
        for x in dom.elements() {
            for (j, leg) in legs.iter().enumerate() {
                buf[j] = leg.apply(x);
            }
            match self.index_of(&buf) {
                Some(k) => table.push(k),
                None => {
                    return Err(Error::NonCommuting(format!(
                        "cone leg values {buf:?} at element {x} are not a solution"
                    )))
                }
            }
        }
        Ok(FinMap::new_unchecked(dom, self.apex.clone(), table))
    }
}

pub fn terminal() -> FinObj {
    FinObj::new(1)
}

pub fn product(a: &FinObj, b: &FinObj) -> ChosenLimit {
    let mut tuples = Vec::with_capacity(2 * a.size() * b.size());
    for x in a.elements() {
        for y in b.elements() {
            tuples.push(x);
            tuples.push(y);
        }
    }
    ChosenLimit::from_tuples(&[a.clone(), b.clone()], 2, tuples)
}

/// Pairs `(x, y)` with `f(x) = g(y)`, lexicographic.
pub fn pullback(f: &FinMap, g: &FinMap) -> Result<ChosenLimit> {
    if f.cod() != g.cod() {
        return Err(Error::DomainMismatch(format!(
            "pullback of maps into sets of sizes {} and {}",
            f.cod().size(),
            g.cod().size()
        )));
    }
    let mut fibres = vec![Vec::new(); g.cod().size()];
    for y in g.dom().elements() {
        fibres[g.apply(y)].push(y);
    }
    let mut tuples = Vec::new();
    for x in f.dom().elements() {
        for &y in &fibres[f.apply(x)] {
            tuples.push(x);
            tuples.push(y);
        }
    }
    Ok(ChosenLimit::from_tuples(&[f.dom().clone(), g.dom().clone()], 2, tuples))
}

/// Elements `x` with `f(x) = g(x)`; the single projection is the inclusion.
pub fn equalizer(f: &FinMap, g: &FinMap) -> Result<ChosenLimit> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::DomainMismatch("equalizer of a non-parallel pair".into()));
    }
    let tuples = f.dom().elements().filter(|&x| f.apply(x) == g.apply(x)).collect();
    Ok(ChosenLimit::from_tuples(&[f.dom().clone()], 1, tuples))
}

/// The pairing `(f, g): X -> A × B` into the chosen product.
pub fn pairing(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    product(f.cod(), g.cod()).mediate(&[f.clone(), g.clone()])
}

/// `f × g` between chosen products.
pub fn product_map(f: &FinMap, g: &FinMap) -> FinMap {
    let dom = product(f.dom(), g.dom());
    let cod = product(f.cod(), g.cod());
    let table = dom.tuples().map(|t| f.apply(t[0]) * g.cod().size() + g.apply(t[1])).collect();
    FinMap::new_unchecked(dom.apex().clone(), cod.apex().clone(), table)
}

/// Mediating map between two pullbacks induced by maps of cospans.
pub fn pullback_map(
    source: &ChosenLimit,
    target: &ChosenLimit,
    left: &FinMap,
    right: &FinMap,
) -> Result<FinMap> {
    let l = left.after(source.projection(0))?;
    let r = right.after(source.projection(1))?;
    target.mediate(&[l, r])
}
