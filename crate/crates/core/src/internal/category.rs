use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::base::{pullback, ChosenLimit, FinMap, FinObj};
use crate::error::{Error, Result};

use super::validate::{ValidationReport, Violation};

/// A category object in finite sets.
///
/// `d1` is the source and `d0` the target. `C2` is the chosen pullback of
/// `(d1, d0)`, so a composable pair `(u, v)` has `d1(u) = d0(v)` and `m(u, v) = u ∘ v`.
/// `C2` and `C3` are derived from `d0, d1` and cached.
#[derive(Clone)]
pub struct InternalCategory {
    c0: FinObj,
    c1: FinObj,
    d0: FinMap,
    d1: FinMap,
    i: FinMap,
    m: FinMap,
    derived: Arc<OnceLock<Derived>>,
}

struct Derived {
    c2: ChosenLimit,
    c3: ChosenLimit,
}

pub type Cat = Arc<InternalCategory>;

impl InternalCategory {
    /// Checks shapes only; see [`InternalCategory::validate`] for the axioms.
    pub fn new(c0: FinObj, c1: FinObj, d0: FinMap, d1: FinMap, i: FinMap, m: FinMap) -> Result<Self> {
        let shape = |name: &str, f: &FinMap, dom: &FinObj, cod: &FinObj| {
            if f.dom() != dom || f.cod() != cod {
                Err(Error::ShapeMismatch(format!(
                    "{name} is {} -> {}, expected {} -> {}",
                    f.dom().size(),
                    f.cod().size(),
                    dom.size(),
                    cod.size()
                )))
            } else {
                Ok(())
            }
        };
        shape("d0", &d0, &c1, &c0)?;
        shape("d1", &d1, &c1, &c0)?;
        shape("i", &i, &c0, &c1)?;
        let c2 = pullback(&d1, &d0)?;
        shape("m", &m, c2.apex(), &c1)?;
        Ok(InternalCategory { c0, c1, d0, d1, i, m, derived: Arc::new(OnceLock::new()) })
    }

    /// Builds from tables; `m` is indexed by the chosen enumeration of composable pairs.
    pub fn from_tables(
        objects: usize,
        arrows: usize,
        d0: Vec<usize>,
        d1: Vec<usize>,
        i: Vec<usize>,
        m: Vec<usize>,
    ) -> Result<Self> {
        let (c0, c1) = (FinObj::new(objects), FinObj::new(arrows));
        let d0 = FinMap::new(c1.clone(), c0.clone(), d0)?;
        let d1 = FinMap::new(c1.clone(), c0.clone(), d1)?;
        let i = FinMap::new(c0.clone(), c1.clone(), i)?;
        let c2 = pullback(&d1, &d0)?;
        let m = FinMap::new(c2.apex().clone(), c1.clone(), m)?;
        InternalCategory::new(c0, c1, d0, d1, i, m)
    }

    /// Builds from a composition function `(u, v) -> u ∘ v` over composable pairs.
    pub fn from_composition(
        objects: usize,
        arrows: usize,
        d0: Vec<usize>,
        d1: Vec<usize>,
        i: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let (c0, c1) = (FinObj::new(objects), FinObj::new(arrows));
        let d0m = FinMap::new(c1.clone(), c0.clone(), d0.clone())?;
        let d1m = FinMap::new(c1.clone(), c0.clone(), d1.clone())?;
        let c2 = pullback(&d1m, &d0m)?;
        let m = c2.tuples().map(|t| compose(t[0], t[1])).collect();
        InternalCategory::from_tables(objects, arrows, d0, d1, i, m)
    }

    /// Checks shapes and every axiom.
    pub fn new_validated(c0: FinObj, c1: FinObj, d0: FinMap, d1: FinMap, i: FinMap, m: FinMap) -> Result<Self> {
        let c = InternalCategory::new(c0, c1, d0, d1, i, m)?;
        c.validate().into_result()?;
        Ok(c)
    }

    pub fn into_cat(self) -> Cat {
        Arc::new(self)
    }

    pub fn c0(&self) -> &FinObj {
        &self.c0
    }

    pub fn c1(&self) -> &FinObj {
        &self.c1
    }

    pub fn d0(&self) -> &FinMap {
        &self.d0
    }

    pub fn d1(&self) -> &FinMap {
        &self.d1
    }

    pub fn i(&self) -> &FinMap {
        &self.i
    }

    pub fn m(&self) -> &FinMap {
        &self.m
    }

    pub fn objects(&self) -> usize {
        self.c0.size()
    }

    pub fn arrows(&self) -> usize {
        self.c1.size()
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let c2 = pullback(&self.d1, &self.d0).expect("d0 and d1 share a codomain");
            let c3 = pullback(c2.projection(1), c2.projection(0)).expect("projections share a codomain");
            Derived { c2, c3 }
        })
    }

    /// Composable pairs `(u, v)`, lexicographic.
    pub fn c2(&self) -> &ChosenLimit {
        &self.derived().c2
    }

    /// Composable triples as pairs `((u, v), (v, w))` of `C2` elements.
    pub fn c3(&self) -> &ChosenLimit {
        &self.derived().c3
    }

    /// `π0(u, v) = u`.
    pub fn pi0(&self) -> &FinMap {
        self.c2().projection(0)
    }

    /// `π1(u, v) = v`.
    pub fn pi1(&self) -> &FinMap {
        self.c2().projection(1)
    }

    pub fn source(&self, a: usize) -> usize {
        self.d1.apply(a)
    }

    pub fn target(&self, a: usize) -> usize {
        self.d0.apply(a)
    }

    pub fn identity(&self, x: usize) -> usize {
        self.i.apply(x)
    }

    pub fn is_identity_arrow(&self, a: usize) -> bool {
        self.i.apply(self.d0.apply(a)) == a && self.d0.apply(a) == self.d1.apply(a)
    }

    pub fn pair_index(&self, u: usize, v: usize) -> Option<usize> {
        self.c2().index_of(&[u, v])
    }

    /// `u ∘ v` when defined.
    pub fn compose(&self, u: usize, v: usize) -> Option<usize> {
        self.pair_index(u, v).map(|k| self.m.apply(k))
    }

    /// Arrows `x -> y`, increasing.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.c1.elements().filter(|&a| self.d1.apply(a) == x && self.d0.apply(a) == y).collect()
    }

    /// `hom_table()[x * |C0| + y]` lists the arrows `x -> y`.
    pub fn hom_table(&self) -> Vec<Vec<usize>> {
        let n = self.objects();
        let mut t = vec![Vec::new(); n * n];
        for a in self.c1.elements() {
            t[self.d1.apply(a) * n + self.d0.apply(a)].push(a);
        }
        t
    }

    /// `m0 = (u∘v, w)` and `m1 = (u, v∘w)` on `C3`.
    pub fn associators(&self) -> Result<(FinMap, FinMap)> {
        let c3 = self.c3();
        let (p, q) = (c3.projection(0), c3.projection(1));
        let left = self.m.after(p)?;
        let right = self.pi1().after(q)?;
        let m0 = self.c2().mediate(&[left, right])?;
        let left = self.pi0().after(p)?;
        let right = self.m.after(q)?;
        let m1 = self.c2().mediate(&[left, right])?;
        Ok((m0, m1))
    }

    /// `i0 = (i∘d0, 1)` and `i1 = (1, i∘d1)`.
    pub fn unitors(&self) -> Result<(FinMap, FinMap)> {
        let id = FinMap::identity(&self.c1);
        let i0 = self.c2().mediate(&[self.i.after(&self.d0)?, id.clone()])?;
        let i1 = self.c2().mediate(&[id, self.i.after(&self.d1)?])?;
        Ok((i0, i1))
    }

    /// Lists every violated axiom with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for x in self.c0.elements() {
            let ix = self.i.apply(x);
            if self.d0.apply(ix) != x {
                report.push(Violation::new("target-of-identity", x, format!("d0(i({x})) = {}", self.d0.apply(ix))));
            }
            if self.d1.apply(ix) != x {
                report.push(Violation::new("source-of-identity", x, format!("d1(i({x})) = {}", self.d1.apply(ix))));
            }
        }
        let c2 = self.c2();
        for (k, t) in c2.tuples().enumerate() {
            let (u, v) = (t[0], t[1]);
            let w = self.m.apply(k);
            if self.d0.apply(w) != self.d0.apply(u) {
                report.push(Violation::new("target-of-composite", k, format!("d0({u}∘{v}) ≠ d0({u})")));
            }
            if self.d1.apply(w) != self.d1.apply(v) {
                report.push(Violation::new("source-of-composite", k, format!("d1({u}∘{v}) ≠ d1({v})")));
            }
        }
        for a in self.c1.elements() {
            let left = self.pair_index(self.i.apply(self.d0.apply(a)), a);
            match left {
                Some(k) if self.m.apply(k) == a => {}
                _ => report.push(Violation::new("left-unit", a, format!("1∘{a} ≠ {a}"))),
            }
            let right = self.pair_index(a, self.i.apply(self.d1.apply(a)));
            match right {
                Some(k) if self.m.apply(k) == a => {}
                _ => report.push(Violation::new("right-unit", a, format!("{a}∘1 ≠ {a}"))),
            }
        }
        let c3 = self.c3();
        for (k, t) in c3.tuples().enumerate() {
            let (p, q) = (c2.tuple(t[0]), c2.tuple(t[1]));
            let (u, v, w) = (p[0], p[1], q[1]);
            let uv = self.m.apply(t[0]);
            let vw = self.m.apply(t[1]);
            let lhs = self.compose(uv, w);
            let rhs = self.compose(u, vw);
            if lhs.is_none() || lhs != rhs {
                report.push(Violation::new(
                    "associativity",
                    k,
                    format!("({u}∘{v})∘{w} = {lhs:?} but {u}∘({v}∘{w}) = {rhs:?}"),
                ));
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The opposite category: `d0` and `d1` swap, `(u, v) ↦ v ∘ u`.
    pub fn opposite(&self) -> Result<InternalCategory> {
        InternalCategory::from_composition(
            self.objects(),
            self.arrows(),
            self.d1.table().to_vec(),
            self.d0.table().to_vec(),
            self.i.table().to_vec(),
            |u, v| self.compose(v, u).expect("opposite pair is composable"),
        )
    }
}

impl PartialEq for InternalCategory {
    fn eq(&self, other: &Self) -> bool {
        self.c0 == other.c0
            && self.c1 == other.c1
            && self.d0 == other.d0
            && self.d1 == other.d1
            && self.i == other.i
            && self.m == other.m
    }
}

impl Eq for InternalCategory {}

impl fmt::Debug for InternalCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InternalCategory")
            .field("C0", &self.c0.size())
            .field("C1", &self.c1.size())
            .field("d0", &self.d0.table())
            .field("d1", &self.d1.table())
            .field("i", &self.i.table())
            .field("m", &self.m.table())
            .finish()
    }
}
