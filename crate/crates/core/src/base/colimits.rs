use crate::error::{Error, Result};

use super::map::{FinMap, FinObj};

/// Disjoint union with `a`'s elements first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct {
    pub object: FinObj,
    pub inj0: FinMap,
    pub inj1: FinMap,
}

impl Coproduct {
    /// The copairing `[f, g]: A + B -> C`.
    pub fn copair(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.dom() != self.inj0.dom() || g.dom() != self.inj1.dom() || f.cod() != g.cod() {
            return Err(Error::DomainMismatch("copairing legs do not fit the coproduct".into()));
        }
        let table = f.table().iter().chain(g.table()).copied().collect();
        FinMap::new(self.object.clone(), f.cod().clone(), table)
    }
}

pub fn coproduct(a: &FinObj, b: &FinObj) -> Coproduct {
    let object = FinObj::new(a.size() + b.size());
    let inj0 = FinMap::new_unchecked(a.clone(), object.clone(), a.elements().collect());
    let inj1 = FinMap::new_unchecked(b.clone(), object.clone(), b.elements().map(|y| a.size() + y).collect());
    Coproduct { object, inj0, inj1 }
}

/// `f + g` between chosen coproducts.
pub fn coproduct_map(f: &FinMap, g: &FinMap) -> FinMap {
    let dom = FinObj::new(f.dom().size() + g.dom().size());
    let cod = FinObj::new(f.cod().size() + g.cod().size());
    let shift = f.cod().size();
    let table = f.table().iter().copied().chain(g.table().iter().map(|&y| y + shift)).collect();
    FinMap::new_unchecked(dom, cod, table)
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Class number of every element; classes are numbered by least member.
    pub fn classes(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut number = vec![usize::MAX; n];
        let mut out = Vec::with_capacity(n);
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if number[r] == usize::MAX {
                number[r] = count;
                count += 1;
            }
            out.push(number[r]);
        }
        (count, out)
    }
}

/// Quotient of `cod` by the equivalence generated by `f(x) ~ g(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coequalizer {
    pub object: FinObj,
    pub q: FinMap,
}

impl Coequalizer {
    /// The unique `u` with `u ∘ q = h`, given `h ∘ f = h ∘ g`.
    pub fn factor(&self, h: &FinMap) -> Result<FinMap> {
        if h.dom() != self.q.dom() {
            return Err(Error::DomainMismatch("map does not start at the coequalized object".into()));
        }
        let mut table = vec![usize::MAX; self.object.size()];
        for (x, &c) in self.q.table().iter().enumerate() {
            if table[c] == usize::MAX {
                table[c] = h.apply(x);
            } else if table[c] != h.apply(x) {
                return Err(Error::NonCommuting(format!("map is not constant on the class of {x}")));
            }
        }
        FinMap::new(self.object.clone(), h.cod().clone(), table)
    }
}

pub fn coequalizer(f: &FinMap, g: &FinMap) -> Result<Coequalizer> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::DomainMismatch("coequalizer of a non-parallel pair".into()));
    }
    let mut uf = UnionFind::new(f.cod().size());
    for x in f.dom().elements() {
        uf.union(f.apply(x), g.apply(x));
    }
    let (count, classes) = uf.classes();
    let object = FinObj::new(count);
    let q = FinMap::new_unchecked(f.cod().clone(), object.clone(), classes);
    Ok(Coequalizer { object, q })
}
