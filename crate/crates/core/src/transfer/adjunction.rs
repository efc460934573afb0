use std::fmt::Debug;

use crate::base::{product, product_map, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{compose_functors, Cat, InternalFunctor};

use super::standard::{disc, disc_map, indisc, indisc_map, pi0, pi0_coequalizer, pi0_map, require_domain};

/// Just enough of a category to state adjunctions over.
pub trait Category1 {
    type Obj: Clone + Debug;
    type Hom: Clone + PartialEq + Debug;

    fn hom_dom(&self, f: &Self::Hom) -> Self::Obj;
    fn hom_cod(&self, f: &Self::Hom) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Hom;
    fn compose(&self, g: &Self::Hom, f: &Self::Hom) -> Result<Self::Hom>;
    fn same_obj(&self, a: &Self::Obj, b: &Self::Obj) -> bool;
}

/// Finite sets and functions.
#[derive(Clone, Copy, Debug, Default)]
pub struct FinSets;

impl Category1 for FinSets {
    type Obj = FinObj;
    type Hom = FinMap;

    fn hom_dom(&self, f: &FinMap) -> FinObj {
        f.dom().clone()
    }

    fn hom_cod(&self, f: &FinMap) -> FinObj {
        f.cod().clone()
    }

    fn identity(&self, x: &FinObj) -> FinMap {
        FinMap::identity(x)
    }

    fn compose(&self, g: &FinMap, f: &FinMap) -> Result<FinMap> {
        g.after(f)
    }

    fn same_obj(&self, a: &FinObj, b: &FinObj) -> bool {
        a == b
    }
}

/// Internal categories and internal functors.
#[derive(Clone, Copy, Debug, Default)]
pub struct InternalCats;

impl Category1 for InternalCats {
    type Obj = Cat;
    type Hom = InternalFunctor;

    fn hom_dom(&self, f: &InternalFunctor) -> Cat {
        f.dom().clone()
    }

    fn hom_cod(&self, f: &InternalFunctor) -> Cat {
        f.cod().clone()
    }

    fn identity(&self, x: &Cat) -> InternalFunctor {
        InternalFunctor::identity(x)
    }

    fn compose(&self, g: &InternalFunctor, f: &InternalFunctor) -> Result<InternalFunctor> {
        compose_functors(g, f)
    }

    fn same_obj(&self, a: &Cat, b: &Cat) -> bool {
        **a == **b
    }
}

/// An executable adjunction `L ⊣ R` with `L: C -> D`.
///
/// `transpose_forward` sends `g: L c -> d` to `c -> R d`; `transpose_backward` inverts it.
pub trait AdjunctionWitness {
    type C: Category1;
    type D: Category1;

    fn left_name(&self) -> &'static str;
    fn right_name(&self) -> &'static str;
    fn source(&self) -> Self::C;
    fn target(&self) -> Self::D;

    fn left_obj(&self, c: &<Self::C as Category1>::Obj) -> <Self::D as Category1>::Obj;
    fn left_map(&self, f: &<Self::C as Category1>::Hom) -> <Self::D as Category1>::Hom;
    fn right_obj(&self, d: &<Self::D as Category1>::Obj) -> <Self::C as Category1>::Obj;
    fn right_map(&self, g: &<Self::D as Category1>::Hom) -> <Self::C as Category1>::Hom;

    fn transpose_forward(
        &self,
        c: &<Self::C as Category1>::Obj,
        d: &<Self::D as Category1>::Obj,
        g: &<Self::D as Category1>::Hom,
    ) -> Result<<Self::C as Category1>::Hom>;

    fn transpose_backward(
        &self,
        c: &<Self::C as Category1>::Obj,
        d: &<Self::D as Category1>::Obj,
        f: &<Self::C as Category1>::Hom,
    ) -> Result<<Self::D as Category1>::Hom>;

    /// `η_c: c -> R L c`.
    fn unit(&self, c: &<Self::C as Category1>::Obj) -> Result<<Self::C as Category1>::Hom> {
        let lc = self.left_obj(c);
        self.transpose_forward(c, &lc, &self.target().identity(&lc))
    }

    /// `ε_d: L R d -> d`.
    fn counit(&self, d: &<Self::D as Category1>::Obj) -> Result<<Self::D as Category1>::Hom> {
        let rd = self.right_obj(d);
        self.transpose_backward(&rd, d, &self.source().identity(&rd))
    }
}

fn check_hom<K: Category1>(cat: &K, f: &K::Hom, dom: &K::Obj, cod: &K::Obj, what: &str) -> Result<()> {
    if !cat.same_obj(&cat.hom_dom(f), dom) || !cat.same_obj(&cat.hom_cod(f), cod) {
        return Err(Error::NotInHomSet(format!("{what} has the wrong endpoints")));
    }
    Ok(())
}

/// `backward(forward(g)) = g` and `forward(backward(forward(g))) = forward(g)`.
pub fn check_round_trip<A: AdjunctionWitness>(
    adj: &A,
    c: &<A::C as Category1>::Obj,
    d: &<A::D as Category1>::Obj,
    g: &<A::D as Category1>::Hom,
) -> Result<bool> {
    let f = adj.transpose_forward(c, d, g)?;
    let back = adj.transpose_backward(c, d, &f)?;
    let again = adj.transpose_forward(c, d, &back)?;
    Ok(back == *g && again == f)
}

/// Naturality in both variables: `forward(k ∘ g ∘ L h) = R k ∘ forward(g) ∘ h`
/// for `h: c' -> c`, `g: L c -> d`, `k: d -> d'`.
pub fn check_naturality<A: AdjunctionWitness>(
    adj: &A,
    h: &<A::C as Category1>::Hom,
    g: &<A::D as Category1>::Hom,
    k: &<A::D as Category1>::Hom,
) -> Result<bool> {
    let (cc, dd) = (adj.source(), adj.target());
    let (c_prime, c) = (cc.hom_dom(h), cc.hom_cod(h));
    let (d, d_prime) = (dd.hom_dom(k), dd.hom_cod(k));
    let lhs_map = dd.compose(k, &dd.compose(g, &adj.left_map(h))?)?;
    let lhs = adj.transpose_forward(&c_prime, &d_prime, &lhs_map)?;
    let fg = adj.transpose_forward(&c, &d, g)?;
    let rhs = cc.compose(&adj.right_map(k), &cc.compose(&fg, h)?)?;
    Ok(lhs == rhs)
}

/// `ε_{Lc} ∘ L(η_c) = 1` and `R(ε_d) ∘ η_{Rd} = 1`.
pub fn check_triangles<A: AdjunctionWitness>(
    adj: &A,
    c: &<A::C as Category1>::Obj,
    d: &<A::D as Category1>::Obj,
) -> Result<bool> {
    let (cc, dd) = (adj.source(), adj.target());
    let lc = adj.left_obj(c);
    let first = dd.compose(&adj.counit(&lc)?, &adj.left_map(&adj.unit(c)?))?;
    let rd = adj.right_obj(d);
    let second = cc.compose(&adj.right_map(&adj.counit(d)?), &adj.unit(&rd)?)?;
    Ok(first == dd.identity(&lc) && second == cc.identity(&rd))
}

/// `disc ⊣ (−)0`: functors `disc X -> A` are maps `X -> A0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DiscObjects;

impl AdjunctionWitness for DiscObjects {
    type C = FinSets;
    type D = InternalCats;

    fn left_name(&self) -> &'static str {
        "disc"
    }

    fn right_name(&self) -> &'static str {
        "objects"
    }

    fn source(&self) -> FinSets {
        FinSets
    }

    fn target(&self) -> InternalCats {
        InternalCats
    }

    fn left_obj(&self, x: &FinObj) -> Cat {
        disc(x).into_cat()
    }

    fn left_map(&self, f: &FinMap) -> InternalFunctor {
        disc_map(f)
    }

    fn right_obj(&self, a: &Cat) -> FinObj {
        a.c0().clone()
    }

    fn right_map(&self, g: &InternalFunctor) -> FinMap {
        g.f0().clone()
    }

    fn transpose_forward(&self, x: &FinObj, a: &Cat, g: &InternalFunctor) -> Result<FinMap> {
        check_hom(&InternalCats, g, &self.left_obj(x), a, "functor out of disc")?;
        Ok(g.f0().clone())
    }

    fn transpose_backward(&self, x: &FinObj, a: &Cat, f: &FinMap) -> Result<InternalFunctor> {
        check_hom(&FinSets, f, x, a.c0(), "map into objects")?;
        InternalFunctor::new(self.left_obj(x), a.clone(), f.clone(), a.i().after(f)?)
    }
}

/// `(−)0 ⊣ indisc`: maps `A0 -> Y` are functors `A -> indisc Y`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ObjectsIndisc;

impl AdjunctionWitness for ObjectsIndisc {
    type C = InternalCats;
    type D = FinSets;

    fn left_name(&self) -> &'static str {
        "objects"
    }

    fn right_name(&self) -> &'static str {
        "indisc"
    }

    fn source(&self) -> InternalCats {
        InternalCats
    }

    fn target(&self) -> FinSets {
        FinSets
    }

    fn left_obj(&self, a: &Cat) -> FinObj {
        a.c0().clone()
    }

    fn left_map(&self, f: &InternalFunctor) -> FinMap {
        f.f0().clone()
    }

    fn right_obj(&self, y: &FinObj) -> Cat {
        indisc(y).into_cat()
    }

    fn right_map(&self, g: &FinMap) -> InternalFunctor {
        indisc_map(g)
    }

    fn transpose_forward(&self, a: &Cat, y: &FinObj, g: &FinMap) -> Result<InternalFunctor> {
        check_hom(&FinSets, g, a.c0(), y, "map out of objects")?;
        let ends = product(a.c0(), a.c0()).mediate(&[a.d0().clone(), a.d1().clone()])?;
        let f1 = product_map(g, g).after(&ends)?;
        InternalFunctor::new(a.clone(), self.right_obj(y), g.clone(), f1)
    }

    fn transpose_backward(&self, a: &Cat, y: &FinObj, f: &InternalFunctor) -> Result<FinMap> {
        check_hom(&InternalCats, f, a, &self.right_obj(y), "functor into indisc")?;
        Ok(f.f0().clone())
    }
}

/// `Π0 ⊣ disc`: maps `Π0 A -> B` are functors `A -> disc B`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pi0Disc;

impl AdjunctionWitness for Pi0Disc {
    type C = InternalCats;
    type D = FinSets;

    fn left_name(&self) -> &'static str {
        "pi0"
    }

    fn right_name(&self) -> &'static str {
        "disc"
    }

    fn source(&self) -> InternalCats {
        InternalCats
    }

    fn target(&self) -> FinSets {
        FinSets
    }

    fn left_obj(&self, a: &Cat) -> FinObj {
        pi0(a)
    }

    fn left_map(&self, f: &InternalFunctor) -> FinMap {
        pi0_map(f)
    }

    fn right_obj(&self, b: &FinObj) -> Cat {
        disc(b).into_cat()
    }

    fn right_map(&self, g: &FinMap) -> InternalFunctor {
        disc_map(g)
    }

    fn transpose_forward(&self, a: &Cat, b: &FinObj, g: &FinMap) -> Result<InternalFunctor> {
        check_hom(&FinSets, g, &pi0(a), b, "map out of components")?;
        let q = pi0_coequalizer(a).q;
        let f0 = g.after(&q)?;
        let f1 = f0.after(a.d0())?;
        InternalFunctor::new(a.clone(), self.right_obj(b), f0, f1)
    }

    fn transpose_backward(&self, a: &Cat, b: &FinObj, f: &InternalFunctor) -> Result<FinMap> {
        require_domain(a, f.dom(), "functor into disc")?;
        check_hom(&InternalCats, f, a, &self.right_obj(b), "functor into disc")?;
        pi0_coequalizer(a).factor(f.f0())
    }
}
